"""
Module
------

    quadrature_interface.py

Description
-----------

    This module contains the numerical integration rules for the
    weighted measures dv_lam on the unit ball of dimension 1 and 2.

    The radial variable is s = |z|^2 so that the weight (1 - s)^alpha
    is exactly a Jacobi weight; Gauss-Jacobi nodes never include s = 0
    or s = 1. The angular variables use the equispaced (trapezoid)
    rule, which is exact for trigonometric polynomials. For n = 2 the
    polar form z1 = sqrt(s t) exp(i theta1), z2 = sqrt(s (1 - t))
    exp(i theta2) is used with the density 2 s ds dt.

Classes
-------

    ProductRule(n, lam, points, weights, radial_nodes, angles,
                exactness_degree)

        This is the base-class object for a product quadrature rule on
        the unit ball.

Functions
---------

    assemble(rule, weight, values, rows, cols, chunk=16384)

        This function assembles the matrix of inner products
        <f e_cols, e_rows> for a symbol sampled at the rule nodes.

    build_rule(n, weight, target_degree)

        This function builds (or returns a cached) product rule.

    disk_rule(n, radius, degree)

        This function returns the unweighted rule scaled to the
        Euclidean ball of the specified radius.

    gauss_jacobi_unit(npts, alpha, beta=0.0)

        This function returns Gauss-Jacobi nodes on [0, 1] with
        normalized weights for s^beta (1 - s)^alpha.

    integrate(f, rule)

        This function integrates a symbol or closure against a rule.

    radial_weighted_integral(g, alpha, beta=0.0, rtol=1.0e-10)

        This function integrates g(s) s^beta (1 - s)^alpha / B(beta +
        1, alpha + 1) over [0, 1].

Requirements
------------

- numpy; https://numpy.org/

- scipy; https://scipy.org/

Author(s)
---------

    Henry R. Winterbottom; 02 March 2024

History
-------

    2024-03-02: Henry Winterbottom -- Initial implementation.

"""

# ----

# pylint: disable=invalid-name
# pylint: disable=too-many-arguments
# pylint: disable=too-many-locals

# ----

import functools
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any, Generic, Tuple

import numpy
from scipy.special import betaln, roots_jacobi, roots_legendre, xlog1py, xlogy

from bergman.geometry_interface import Weight, basis_eval
from utils.exceptions_interface import QuadratureInterfaceError
from utils.logger_interface import Logger

# ----

# Define all available module properties.
__all__ = [
    "ProductRule",
    "assemble",
    "build_rule",
    "disk_rule",
    "gauss_jacobi_unit",
    "integrate",
    "radial_weighted_integral",
]

# ----

logger = Logger(caller_name=__name__)

# Gauss-Jacobi doubling range for the radial integrals.
GJ_START = 32
GJ_CAP = 2048

# Graded composite Gauss-Legendre fallback attributes.
GL_PANEL_NODES = 24
GL_MAX_LEVELS = 5

# ----


@dataclass(frozen=True, eq=False)
class ProductRule:
    """
    Description
    -----------

    This is the base-class object for a product quadrature rule on the
    unit ball; the weights are positive and sum to one.

    Parameters
    ----------

    n: ``int``

        A Python integer specifying the complex dimension.

    lam: ``float``

        A Python float specifying the weight parameter of the measure
        the rule integrates against.

    points: ``numpy.ndarray``

        A numpy complex array of shape (nodes, n).

    weights: ``numpy.ndarray``

        A numpy float array of shape (nodes,).

    radial_nodes: ``numpy.ndarray``

        A numpy float array containing the s = |z|^2 nodes.

    angles: ``numpy.ndarray``

        A numpy float array containing the angular nodes per circle.

    exactness_degree: ``int``

        A Python integer specifying the total degree in (z, conj z)
        below which the rule is exact.

    """

    n: int
    lam: float
    points: numpy.ndarray = field(repr=False)
    weights: numpy.ndarray = field(repr=False)
    radial_nodes: numpy.ndarray = field(repr=False)
    angles: numpy.ndarray = field(repr=False)
    exactness_degree: int = 0

    @property
    def size(self: Generic) -> int:
        """The number of rule nodes."""
        return int(self.weights.size)


# ----


def gauss_jacobi_unit(
    npts: int, alpha: float, beta: float = 0.0
) -> Tuple[numpy.ndarray, numpy.ndarray]:
    """
    Description
    -----------

    This function returns Gauss-Jacobi nodes on [0, 1] for the weight
    s^beta (1 - s)^alpha; the weights are normalized to sum to one.

    Parameters
    ----------

    npts: ``int``

        A Python integer specifying the number of nodes.

    alpha: ``float``

        A Python float specifying the exponent of (1 - s); > -1.

    Keywords
    --------

    beta: ``float``, optional

        A Python float specifying the exponent of s; > -1.

    Returns
    -------

    nodes: ``numpy.ndarray``

        A numpy float array of nodes in (0, 1).

    weights: ``numpy.ndarray``

        A numpy float array of normalized weights.

    """

    # Map the [-1, 1] rule to [0, 1].
    x, w = roots_jacobi(int(npts), float(alpha), float(beta))
    nodes = 0.5 * (1.0 + x)
    weights = w / numpy.sum(w)

    return (nodes, weights)


# ----


@functools.lru_cache(maxsize=64)
def __cached_rule__(n: int, lam: float, degree: int) -> ProductRule:
    """
    Description
    -----------

    This function builds the product rule for the measure dv_lam on
    the unit ball of dimension `n`, exact to total degree `degree`.

    """

    # Define the radial and angular components.
    alpha = lam - n - 1.0
    if n == 1:
        nr = max(48, degree // 2 + 16)
        nang = max(64, 2 * degree + 8)
        (s, ws) = gauss_jacobi_unit(npts=nr, alpha=alpha)
        theta = 2.0 * numpy.pi * numpy.arange(nang) / nang
        points = numpy.sqrt(s)[:, None] * numpy.exp(1j * theta)[None, :]
        points = points.reshape(-1, 1)
        weights = (ws[:, None] * numpy.full(nang, 1.0 / nang)[None, :]).reshape(-1)
        exactness = min(2 * (2 * nr - 1), nang - 1)
    else:
        nr = max(16, degree // 4 + 8)
        nt = max(8, degree // 4 + 4)
        nang = degree + 4
        (s, ws) = gauss_jacobi_unit(npts=nr, alpha=alpha, beta=1.0)
        (xt, wt) = roots_legendre(nt)
        t = 0.5 * (1.0 + xt)
        wt = 0.5 * wt
        theta = 2.0 * numpy.pi * numpy.arange(nang) / nang
        (S, T, TH1, TH2) = numpy.meshgrid(s, t, theta, theta, indexing="ij")
        (WS, WT) = numpy.meshgrid(ws, wt, indexing="ij")
        points = numpy.stack(
            [
                numpy.sqrt(S * T) * numpy.exp(1j * TH1),
                numpy.sqrt(S * (1.0 - T)) * numpy.exp(1j * TH2),
            ],
            axis=-1,
        ).reshape(-1, 2)
        weights = numpy.broadcast_to(
            (WS * WT)[:, :, None, None] / nang**2, S.shape
        ).reshape(-1)
        exactness = min(2 * (2 * nr - 1), 2 * (2 * nt - 1), nang - 1)
    points.setflags(write=False)
    weights = numpy.array(weights)
    weights.setflags(write=False)
    rule = ProductRule(
        n=n,
        lam=lam,
        points=points,
        weights=weights,
        radial_nodes=s,
        angles=theta,
        exactness_degree=int(exactness),
    )

    return rule


# ----


def build_rule(n: int, weight: Weight, target_degree: int) -> ProductRule:
    """
    Description
    -----------

    This function builds the product rule for dv_lam on the unit ball
    of dimension `n`, exact on all z^a conj(z)^b with |a| + |b| not
    exceeding `target_degree`; rules are cached per (n, lam, degree).

    Parameters
    ----------

    n: ``int``

        A Python integer specifying the complex dimension (1 or 2).

    weight: ``Weight``

        A Python Weight object.

    target_degree: ``int``

        A Python integer specifying the exactness degree.

    Returns
    -------

    rule: ``ProductRule``

        A Python ProductRule object.

    Raises
    ------

    QuadratureInterfaceError:

        - raised for unsupported dimensions or negative degrees.

    """

    # Check the arguments.
    if n not in (1, 2) or weight.n != n:
        msg = f"Product rules are available for n in (1, 2) only; received n = {n}. Aborting!!!"
        raise QuadratureInterfaceError(msg=msg)
    if int(target_degree) < 0:
        msg = f"The target degree must be nonnegative; received {target_degree}. Aborting!!!"
        raise QuadratureInterfaceError(msg=msg)

    # Build the rule.
    rule = __cached_rule__(n=int(n), lam=float(weight.lam), degree=int(target_degree))
    msg = f"Product rule n = {n}, lambda = {weight.lam:g}, degree = {target_degree}: {rule.size} nodes."
    logger.debug(msg=msg)

    return rule


# ----


def disk_rule(n: int, radius: float, degree: int) -> ProductRule:
    """
    Description
    -----------

    This function returns the unweighted (lam = p) rule scaled to the
    Euclidean ball |y| < radius; the weights sum to radius^(2n), the
    normalized volume of that ball.

    Parameters
    ----------

    n: ``int``

        A Python integer specifying the complex dimension.

    radius: ``float``

        A Python float specifying the Euclidean radius in (0, 1).

    degree: ``int``

        A Python integer specifying the exactness degree.

    Returns
    -------

    rule: ``ProductRule``

        A Python ProductRule object.

    Raises
    ------

    QuadratureInterfaceError:

        - raised if the radius is not within (0, 1).

    """

    # Check the radius.
    if not 0.0 < radius < 1.0:
        msg = f"The disk rule radius must lie in (0, 1); received {radius}. Aborting!!!"
        raise QuadratureInterfaceError(msg=msg)

    # Scale the unweighted rule.
    base = build_rule(n=n, weight=Weight(n=n, lam=n + 1.0), target_degree=degree)
    rule = ProductRule(
        n=n,
        lam=float(n + 1),
        points=radius * base.points,
        weights=radius ** (2 * n) * base.weights,
        radial_nodes=radius**2 * base.radial_nodes,
        angles=base.angles,
        exactness_degree=base.exactness_degree,
    )

    return rule


# ----


def __values__(f: Any, points: numpy.ndarray) -> numpy.ndarray:
    """
    Description
    -----------

    This function evaluates a Symbol (anything with an `evaluate`
    attribute) or a plain closure at the specified points.

    """

    # Evaluate the values.
    func = getattr(f, "evaluate", f)
    values = numpy.broadcast_to(
        numpy.asarray(func(points), dtype=complex), points.shape[:-1]
    )

    return values


# ----


def integrate(f: Any, rule: ProductRule) -> complex:
    """
    Description
    -----------

    This function integrates a symbol or closure against the measure
    of the specified rule.

    Parameters
    ----------

    f: ``Any``

        A Symbol object or a Python function mapping a (nodes, n)
        complex array to values.

    rule: ``ProductRule``

        A Python ProductRule object.

    Returns
    -------

    value: ``complex``

        A Python complex containing the quadrature sum.

    Raises
    ------

    QuadratureInterfaceError:

        - raised if the integrand is not finite at a node; the first
          such node is named.

    """

    # Evaluate and check the integrand.
    values = __values__(f=f, points=rule.points)
    bad = numpy.flatnonzero(~numpy.isfinite(values))
    if bad.size > 0:
        msg = (
            f"The integrand is not finite at node {bad[0]} "
            f"(z = {rule.points[bad[0]].tolist()}). Aborting!!!"
        )
        raise QuadratureInterfaceError(msg=msg)

    # Compute the quadrature sum.
    value = complex(numpy.sum(rule.weights * values))

    return value


# ----


def assemble(
    rule: ProductRule,
    weight: Weight,
    values: numpy.ndarray,
    rows: numpy.ndarray,
    cols: numpy.ndarray,
    chunk: int = 16384,
) -> numpy.ndarray:
    """
    Description
    -----------

    This function assembles the matrix

        A[g, b] = sum_x w(x) f(x) e_b(x) conj(e_g(x))

    of inner products <f e_b, e_g> for a symbol sampled at the rule
    nodes; the nodes are processed in chunks with the weighted basis
    sqrt(w) e so that each chunk is a single matrix product.

    Parameters
    ----------

    rule: ``ProductRule``

        A Python ProductRule object.

    weight: ``Weight``

        A Python Weight object defining the basis normalization.

    values: ``numpy.ndarray``

        A numpy complex array of symbol values at the rule nodes.

    rows: ``numpy.ndarray``

        An integer array of output multi-indices of shape (Dr, n).

    cols: ``numpy.ndarray``

        An integer array of input multi-indices of shape (Dc, n).

    Keywords
    --------

    chunk: ``int``, optional

        A Python integer specifying the number of nodes per chunk.

    Returns
    -------

    matrix: ``numpy.ndarray``

        A numpy complex array of shape (Dr, Dc).

    Raises
    ------

    QuadratureInterfaceError:

        - raised if the symbol values are not finite.

    """

    # Check the symbol values.
    values = numpy.asarray(values, dtype=complex)
    if not numpy.all(numpy.isfinite(values)):
        first = int(numpy.flatnonzero(~numpy.isfinite(values))[0])
        msg = f"The symbol is not finite at node {first} (z = {rule.points[first].tolist()}). Aborting!!!"
        raise QuadratureInterfaceError(msg=msg)

    # Accumulate the chunk contributions.
    matrix = numpy.zeros((len(rows), len(cols)), dtype=complex)
    for start in range(0, rule.size, chunk):
        stop = min(start + chunk, rule.size)
        pts = rule.points[start:stop]
        sqw = numpy.sqrt(rule.weights[start:stop])[:, None]
        erows = sqw * basis_eval(weight=weight, indices=rows, z=pts)
        ecols = sqw * basis_eval(weight=weight, indices=cols, z=pts)
        matrix += erows.conj().T @ (values[start:stop, None] * ecols)

    return matrix


# ----


def __log_beta_weight__(
    s: numpy.ndarray, alpha: float, beta: float
) -> numpy.ndarray:
    """
    Description
    -----------

    This function returns the normalized Beta density
    s^beta (1 - s)^alpha / B(beta + 1, alpha + 1).

    """

    # Evaluate in log space.
    return numpy.exp(
        xlogy(beta, s) + xlog1py(alpha, -s) - betaln(beta + 1.0, alpha + 1.0)
    )


# ----


def __graded_panels__(levels: int) -> numpy.ndarray:
    """
    Description
    -----------

    This function returns panel breakpoints on [0, 1] graded
    geometrically toward both endpoints; each graded panel is further
    split into `levels` equal panels.

    """

    # Define the graded breakpoints.
    count = 8 * levels
    left = 0.5 * 2.0 ** (-numpy.arange(count, -1, -1, dtype=float))
    left[0] = 0.0
    graded = numpy.concatenate([left, 1.0 - left[::-1][1:]])

    # Subdivide the graded panels.
    frac = numpy.arange(levels, dtype=float) / levels
    breaks = numpy.append(
        (graded[:-1, None] + frac[None, :] * numpy.diff(graded)[:, None]).reshape(-1),
        1.0,
    )

    return breaks


# ----


def __graded_integral__(
    g: Callable, alpha: float, beta: float, levels: int
) -> complex:
    """
    Description
    -----------

    This function evaluates the radial integral with a composite
    Gauss-Legendre rule on geometrically graded panels.

    """

    # Build the composite nodes and sum.
    (x, w) = roots_legendre(GL_PANEL_NODES)
    breaks = __graded_panels__(levels=levels)
    (a, b) = (breaks[:-1, None], breaks[1:, None])
    s = (0.5 * (b - a) * (x[None, :] + 1.0) + a).reshape(-1)
    ws = (0.5 * (b - a) * w[None, :]).reshape(-1)
    values = numpy.asarray(g(s), dtype=complex) * __log_beta_weight__(
        s=s, alpha=alpha, beta=beta
    )

    return complex(numpy.sum(ws * values))


# ----


def radial_weighted_integral(
    g: Callable, alpha: float, beta: float = 0.0, rtol: float = 1.0e-10
) -> complex:
    """
    Description
    -----------

    This function computes

        int_0^1 g(s) s^beta (1 - s)^alpha ds / B(beta + 1, alpha + 1);

    for beta = 0 this is (alpha + 1) int_0^1 g(s) (1 - s)^alpha ds.
    The Gauss-Jacobi node count is doubled from 32 until the relative
    change is below `rtol`; a non-converged doubling falls back to a
    graded composite Gauss-Legendre rule.

    Parameters
    ----------

    g: ``Callable``

        A Python function mapping a numpy float array of s values to
        (complex) values.

    alpha: ``float``

        A Python float specifying the exponent of (1 - s); > -1.

    Keywords
    --------

    beta: ``float``, optional

        A Python float specifying the exponent of s; > -1.

    rtol: ``float``, optional

        A Python float specifying the relative convergence tolerance.

    Returns
    -------

    value: ``complex``

        A Python complex containing the integral.

    Raises
    ------

    QuadratureInterfaceError:

        - raised if the exponents are not greater than -1.

        - raised if neither the Gauss-Jacobi doubling nor the graded
          fallback converges; oscillatory integrands should be routed
          through `bergman.oscillatory_interface`.

    """

    # Check the exponents.
    if not (alpha > -1.0 and beta > -1.0):
        msg = f"The Beta exponents must exceed -1; received alpha = {alpha}, beta = {beta}. Aborting!!!"
        raise QuadratureInterfaceError(msg=msg)

    # Double the Gauss-Jacobi node count until converged.
    def __gj__(npts: int) -> complex:
        (s, ws) = gauss_jacobi_unit(npts=npts, alpha=alpha, beta=beta)
        return complex(numpy.sum(ws * numpy.asarray(g(s), dtype=complex)))

    (npts, old) = (GJ_START, __gj__(npts=GJ_START))
    while npts < GJ_CAP:
        npts = 2 * npts
        new = __gj__(npts=npts)
        if numpy.isfinite(new) and (
            abs(new - old) <= rtol * abs(new) or abs(new - old) <= 1.0e-15
        ):
            return new
        old = new

    # Fall back to the graded composite rule.
    msg = (
        f"Gauss-Jacobi doubling did not converge at {GJ_CAP} nodes "
        f"(alpha = {alpha:g}, beta = {beta:g}); using the graded composite rule."
    )
    logger.warn(msg=msg)
    old = __graded_integral__(g=g, alpha=alpha, beta=beta, levels=1)
    for levels in range(2, GL_MAX_LEVELS + 1):
        new = __graded_integral__(g=g, alpha=alpha, beta=beta, levels=levels)
        if numpy.isfinite(new) and (
            abs(new - old) <= rtol * abs(new) or abs(new - old) <= 1.0e-15
        ):
            return new
        old = new
    msg = (
        f"The radial integral did not converge (last change {abs(new - old):.3e}); "
        "oscillatory integrands must use the oscillatory evaluator. Aborting!!!"
    )
    raise QuadratureInterfaceError(msg=msg)
