"""
Module
------

    oscillation_interface.py

Description
-----------

    This module contains the Berezin transform (kernel, convolution
    and radial computation paths), the mean oscillation and the
    BMO/BO semi-norms sampled on evaluation grids, the averages over
    Bergman balls and the VMO profile, and the inequality audits
    relating them.

Classes
-------

    AverageReport

        This is the data-class containing a Bergman ball average.

    EvaluationGrid(spec, n)

        This is the base-class object for a grid of points that is
        equispaced in the Bergman distance.

    GridReport

        This is the data-class containing a sampled supremum over a
        grid.

    InequalityReport

        This is the data-class containing a pointwise inequality audit.

    LipschitzReport

        This is the data-class containing the BMO Lipschitz and
        triangular-inequality audit.

    ProfileReport

        This is the data-class containing a VMO profile.

Functions
---------

    average_and_Aq(f, x, rho, q=2, degree=64)

        This function returns the Bergman ball average of a symbol
        and its q-th mean deviation.

    berezin(f, weight, z, path="auto", degree=None)

        This function returns the Berezin transform of a symbol.

    berezin_symbol(f, weight, horizon=8.0, nodes=97)

        This function returns the Berezin transform of a radial
        symbol as a new radial symbol.

    bmo_bo_lipschitz_audit(g, weight, grid, npairs=50, seed=7)

        This function audits the Lipschitz bound of the Berezin
        transform and the triangular-inequality bound.

    bmo_seminorm(f, weight, grid, form="variance")

        This function returns the sampled BMO semi-norm.

    bo_seminorm(f, weight, grid)

        This function returns the sampled BO semi-norm.

    continuity_modulus(f, delta, grid)

        This function returns the sampled modulus of continuity with
        respect to the Bergman distance.

    double_average_bound(f, x, rho, degree=64)

        This function returns |E|^-2 int_E int_E |f(y) - f(z)|^2.

    mean_oscillation(f, weight, z, form="variance", path="auto")

        This function returns the mean oscillation of a symbol.

    mo_average_bound_audit(f, weight, rho, grid)

        This function audits the bound of the mean oscillation by the
        Bergman ball average.

    osc(f, weight, z)

        This function returns the sampled oscillation of a symbol
        over the unit weighted metric ball.

    parse_grid(spec, n)

        This function parses a grid specification.

    vmo_profile(f, rho_list, grid, degree=64)

        This function returns the VMO profile of a symbol.

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
# pylint: disable=too-many-instance-attributes

# ----

import functools
from dataclasses import dataclass, field
from typing import Any, Dict, Generic, List, Sequence

import numpy
from scipy.interpolate import PchipInterpolator
from scipy.special import betaln, hyp2f1, roots_legendre, xlog1py, xlogy

from bergman import symbols_interface
from bergman.geometry_interface import (
    Weight,
    as_point,
    bergman_ball_volume,
    berezin_kernel_density,
    beta_lambda,
    mobius_apply,
    mobius_jacobian,
    sphere_directions,
)
from bergman.oscillatory_interface import oscillatory_integral
from bergman.quadrature_interface import build_rule, disk_rule
from bergman.symbols_interface import (
    BOUNDED,
    BUC,
    RADIAL,
    UC,
    VMO,
    Symbol,
    amplitude_values,
)
from utils.exceptions_interface import OscillationInterfaceError
from utils.logger_interface import Logger

# ----

# Define all available module properties.
__all__ = [
    "AverageReport",
    "EvaluationGrid",
    "GridReport",
    "InequalityReport",
    "LipschitzReport",
    "ProfileReport",
    "average_and_Aq",
    "berezin",
    "berezin_symbol",
    "bmo_bo_lipschitz_audit",
    "bmo_seminorm",
    "bo_seminorm",
    "continuity_modulus",
    "double_average_bound",
    "mean_oscillation",
    "mo_average_bound_audit",
    "osc",
    "parse_grid",
    "vmo_profile",
]

# ----

logger = Logger(caller_name=__name__)

# Metric ball sampling attributes.
OSC_DIRECTIONS = 64
OSC_RADII = 8

# Panel attributes for the peaked radial Berezin integrals.
PEAK_PANEL_NODES = 24
PEAK_LEVELS = 48

# Inequality audit slack.
AUDIT_SLACK = 1.0e-8

# ----


@dataclass(frozen=True, eq=False)
class EvaluationGrid:
    """
    Description
    -----------

    This is the base-class object for the grid `beta:<horizon>:<delta>:<angles>`:
    the origin and, for k = 1, ..., round(horizon / delta), the radii
    tanh(k delta) in `angles` directions.

    Parameters
    ----------

    spec: ``str``

        A Python string specifying the grid.

    n: ``int``

        A Python integer specifying the complex dimension.

    horizon: ``float``

        A Python float specifying the largest distance beta(0, z).

    delta: ``float``

        A Python float specifying the distance step.

    angles: ``int``

        A Python integer specifying the directions per radius.

    """

    spec: str
    n: int
    horizon: float
    delta: float
    angles: int

    @functools.cached_property
    def radii(self: Generic) -> numpy.ndarray:
        """The grid radii, starting at 0."""
        count = int(round(self.horizon / self.delta))
        return numpy.tanh(self.delta * numpy.arange(count + 1))

    @functools.cached_property
    def points(self: Generic) -> numpy.ndarray:
        """The grid points of shape (P, n)."""
        zeta = sphere_directions(n=self.n, count=self.angles)
        pts = [numpy.zeros((1, self.n), dtype=complex)]
        pts += [r * zeta for r in self.radii[1:]]
        return numpy.concatenate(pts, axis=0)

    @functools.cached_property
    def radial_points(self: Generic) -> numpy.ndarray:
        """One grid point per radius, of shape (R, n)."""
        pts = numpy.zeros((self.radii.size, self.n), dtype=complex)
        pts[:, 0] = self.radii
        return pts

    def points_for(self: Generic, f: Symbol) -> numpy.ndarray:
        """The grid points, reduced to one per radius for radial symbols."""
        return self.radial_points if f.radial else self.points

    def metadata(self: Generic) -> Dict:
        """
        Description
        -----------

        This method returns the grid metadata attached to every
        sampled supremum.

        Returns
        -------

        metadata: ``Dict``

            A Python dictionary containing the grid attributes.

        """

        # Define the metadata.
        metadata = {
            "spec": self.spec,
            "n": self.n,
            "horizon": self.horizon,
            "delta": self.delta,
            "angles": self.angles,
            "npoints": int(self.points.shape[0]),
            "max_radius": float(self.radii[-1]),
        }

        return metadata


# ----


def parse_grid(spec: str, n: int) -> EvaluationGrid:
    """
    Description
    -----------

    This function parses a grid specification of the form
    `beta:<horizon>:<delta>:<angles>`, e.g., `beta:6:0.25:32`.

    Parameters
    ----------

    spec: ``str``

        A Python string specifying the grid.

    n: ``int``

        A Python integer specifying the complex dimension.

    Returns
    -------

    grid: ``EvaluationGrid``

        A Python EvaluationGrid object.

    Raises
    ------

    OscillationInterfaceError:

        - raised if the grid string is malformed.

    """

    # Parse the grid string.
    items = str(spec).strip().split(":")
    try:
        if len(items) != 4 or items[0] != "beta":
            raise ValueError("expected beta:<horizon>:<delta>:<angles>")
        (horizon, delta, angles) = (float(items[1]), float(items[2]), int(items[3]))
        if not (horizon > 0.0 and delta > 0.0 and angles >= 1 and delta <= horizon):
            raise ValueError("horizon, delta and angles must be positive")
    except ValueError as errmsg:
        msg = f"Parsing grid specification {spec} failed with error {errmsg}. Aborting!!!"
        raise OscillationInterfaceError(msg=msg) from errmsg

    return EvaluationGrid(
        spec=str(spec).strip(), n=n, horizon=horizon, delta=delta, angles=angles
    )


# ----


@dataclass
class GridReport:
    """
    Description
    -----------

    This is the data-class containing a sampled supremum, the point
    attaining it, the sampled values and the grid metadata.

    """

    value: float
    argmax: List[complex]
    values: numpy.ndarray = field(repr=False)
    grid: Dict = field(default_factory=dict)


# ----


def __check_oscillatory__(f: Symbol, path: str) -> None:
    """
    Description
    -----------

    This function rejects node-based paths for oscillatory symbols.

    """

    # Check the path; proceed accordingly.
    if path != "radial" and f.oscillatory:
        msg = (
            f"The oscillatory symbol {f.id} requires the radial Berezin path; "
            f"received path {path}. Aborting!!!"
        )
        raise OscillationInterfaceError(msg=msg)


# ----


def __default_degree__(weight: Weight, path: str) -> int:
    """
    Description
    -----------

    This function returns the default rule degree of a node-based
    Berezin path.

    """

    # Define the degree.
    if weight.n == 2:
        return 24 if path == "convolution" else 32
    if path == "convolution":
        return 96

    return int(min(256, max(64, 4 * weight.lam)))


# ----


def __log_sphere_kernel__(weight: Weight, r2: float, s: numpy.ndarray) -> numpy.ndarray:
    """
    Description
    -----------

    This function returns the logarithm of the sphere average of
    |k_z(w)|^2 over |w|^2 = s for |z|^2 = r2,

        lam log(1 - r2) + (n - 2 lam) log(1 - s r2)
                        + log 2F1(n - lam, n - lam; n; s r2).

    """

    # Evaluate the logarithm; the series has nonnegative terms.
    (n, lam) = (weight.n, weight.lam)
    y = s * r2

    return (
        lam * numpy.log1p(-r2)
        + (n - 2.0 * lam) * numpy.log1p(-y)
        + numpy.log(hyp2f1(n - lam, n - lam, n, y))
    )


# ----


def __log_radial_density__(weight: Weight, s: numpy.ndarray) -> numpy.ndarray:
    """
    Description
    -----------

    This function returns the logarithm of the density
    s^(n-1) (1-s)^alpha / B(n, alpha+1) of s = |w|^2 under dv_lam.

    """

    # Evaluate the logarithm.
    (n, alpha) = (weight.n, weight.alpha)

    return (
        xlogy(n - 1.0, s)
        + xlog1py(alpha, -numpy.minimum(s, 1.0))
        - betaln(n, alpha + 1.0)
    )


# ----


@functools.lru_cache(maxsize=256)
def __peak_nodes__(s0: float, width: float) -> tuple:
    """
    Description
    -----------

    This function returns composite Gauss-Legendre nodes on [0, 1]
    graded geometrically toward s0 and toward both endpoints.

    """

    # Define the breakpoints.
    steps = 2.0 ** (-numpy.arange(PEAK_LEVELS, dtype=float))
    breaks = numpy.concatenate(
        [
            [0.0, 1.0, s0],
            s0 + width * 2.0 ** numpy.arange(-8, 40, 0.5),
            s0 - width * 2.0 ** numpy.arange(-8, 40, 0.5),
            steps,
            1.0 - steps,
        ]
    )
    breaks = numpy.unique(breaks[(breaks >= 0.0) & (breaks <= 1.0)])

    # Build the composite nodes.
    (x, w) = roots_legendre(PEAK_PANEL_NODES)
    (a, b) = (breaks[:-1, None], breaks[1:, None])
    nodes = (0.5 * (b - a) * (x[None, :] + 1.0) + a).reshape(-1)
    weights = (0.5 * (b - a) * w[None, :]).reshape(-1)

    # Nodes that round onto an endpoint are dropped.
    inside = (nodes > 0.0) & (nodes < 1.0)

    return (nodes[inside], weights[inside])


# ----


def __berezin_radial__(f: Symbol, weight: Weight, z: numpy.ndarray) -> complex:
    """
    Description
    -----------

    This function evaluates the Berezin transform of a radial symbol
    as the one-dimensional integral of its profile against the sphere
    average of the Berezin kernel; oscillatory components use the
    half-period evaluator.

    """

    # Define the radial kernel.
    r2 = float(numpy.sum(numpy.abs(z) ** 2))
    width = max((1.0 - r2) / numpy.sqrt(weight.lam), 1.0e-300)

    def log_kernel(s: numpy.ndarray) -> numpy.ndarray:
        sphere = __log_sphere_kernel__(weight=weight, r2=r2, s=s)
        return sphere + __log_radial_density__(weight=weight, s=s)

    # Sum the component contributions.
    value = 0.0j
    for k, amp in f.components:
        if k == 0:
            (nodes, wts) = __peak_nodes__(s0=r2, width=width)
            with numpy.errstate(divide="ignore", invalid="ignore", over="ignore"):
                vals = amplitude_values(amp, nodes) * numpy.exp(log_kernel(nodes))
            value += complex(numpy.sum(wts * vals))
            continue
        result = oscillatory_integral(
            amplitude=lambda s, amp=amp: amplitude_values(amp, s)
            * numpy.exp(log_kernel(s)),
            k=k,
            alpha=weight.alpha,
            adaptive=r2 > 0.0,
        )
        value += result.value

    return value


# ----


def berezin(
    f: Symbol, weight: Weight, z: Any, path: str = "auto", degree: int = None
) -> complex:
    """
    Description
    -----------

    This function returns the Berezin transform

        B f(z) = int f |k_z|^2 dv_lam = int (f o phi_z) dv_lam

    by one of the paths `kernel` (unweighted rule against the Berezin
    kernel density), `convolution` (weighted rule of f o phi_z) or
    `radial` (profile against the sphere-averaged kernel; RADIAL
    symbols only). The `auto` path selects `radial` for radial
    symbols and `convolution` otherwise.

    Parameters
    ----------

    f: ``Symbol``

        A Python Symbol object.

    weight: ``Weight``

        A Python Weight object.

    z: ``Any``

        The evaluation point.

    Keywords
    --------

    path: ``str``, optional

        A Python string specifying the computation path.

    degree: ``int``, optional

        A Python integer specifying the rule degree of the
        node-based paths.

    Returns
    -------

    value: ``complex``

        A Python complex containing B f(z).

    Raises
    ------

    OscillationInterfaceError:

        - raised for an unknown path, a radial path for a non-radial
          symbol, or a node-based path for an oscillatory symbol.

    """

    # Define the computation path.
    z = as_point(z=z, n=weight.n).reshape(weight.n)
    if path == "auto":
        path = "radial" if f.radial else "convolution"
    if path not in ("kernel", "convolution", "radial"):
        msg = f"Unknown Berezin path {path}. Aborting!!!"
        raise OscillationInterfaceError(msg=msg)
    __check_oscillatory__(f=f, path=path)

    # Compute the transform; proceed accordingly.
    if path == "radial":
        if not f.radial:
            msg = f"The radial Berezin path requires a RADIAL symbol; received {f.id}. Aborting!!!"
            raise OscillationInterfaceError(msg=msg)
        return __berezin_radial__(f=f, weight=weight, z=z)
    if degree is None:
        degree = __default_degree__(weight=weight, path=path)
    if path == "kernel":
        rule = build_rule(
            n=weight.n, weight=Weight(n=weight.n, lam=weight.p), target_degree=degree
        )
        density = berezin_kernel_density(weight=weight, z=z, w=rule.points)
        values = numpy.asarray(f.evaluate(rule.points), dtype=complex)
        return complex(numpy.sum(rule.weights * density * values))
    rule = build_rule(n=weight.n, weight=weight, target_degree=degree)
    values = numpy.asarray(f.evaluate(mobius_apply(a=z, z=rule.points)), dtype=complex)

    return complex(numpy.sum(rule.weights * values))


# ----


def mean_oscillation(
    f: Symbol, weight: Weight, z: Any, form: str = "variance", path: str = "auto"
) -> float:
    """
    Description
    -----------

    This function returns the mean oscillation

        MO(f)(z) = B(|f|^2)(z) - |B f(z)|^2                  (variance)
                 = int |f o phi_z - B f(z)|^2 dv_lam           (centered)

    Parameters
    ----------

    f: ``Symbol``

        A Python Symbol object.

    weight: ``Weight``

        A Python Weight object.

    z: ``Any``

        The evaluation point.

    Keywords
    --------

    form: ``str``, optional

        A Python string specifying the form; `variance` or
        `centered`.

    path: ``str``, optional

        A Python string specifying the Berezin path.

    Returns
    -------

    mo: ``float``

        A Python float containing MO(f)(z); nonnegative up to
        quadrature error.

    Raises
    ------

    OscillationInterfaceError:

        - raised for an unknown form.

    """

    # Compute the mean oscillation; proceed accordingly.
    bf = berezin(f=f, weight=weight, z=z, path=path)
    if form == "variance":
        mod2 = symbols_interface.product(symbols_interface.conj(f), f)
        return float(berezin(f=mod2, weight=weight, z=z, path=path).real - abs(bf) ** 2)
    if form != "centered":
        msg = f"Unknown mean oscillation form {form}. Aborting!!!"
        raise OscillationInterfaceError(msg=msg)

    return __centered_square__(f=f, weight=weight, z=z, center=bf, path=path)


# ----


def __centered_square__(
    f: Symbol, weight: Weight, z: Any, center: complex, path: str = "auto"
) -> float:
    """
    Description
    -----------

    This function returns int |f o phi_z - center|^2 dv_lam.

    """

    # Integrate the centered square.
    g = symbols_interface.symbol_sum(f, symbols_interface.constant(-center, n=f.n))
    mod2 = symbols_interface.product(symbols_interface.conj(g), g)

    return float(berezin(f=mod2, weight=weight, z=z, path=path).real)


# ----


def __grid_sup__(
    values: numpy.ndarray, points: numpy.ndarray, grid: EvaluationGrid
) -> GridReport:
    """
    Description
    -----------

    This function returns the supremum of sampled values; ties are
    resolved in grid index order.

    """

    # Define the report.
    idx = int(numpy.argmax(values))

    return GridReport(
        value=float(values[idx]),
        argmax=[complex(item) for item in points[idx]],
        values=values,
        grid=grid.metadata(),
    )


# ----


def bmo_seminorm(
    f: Symbol, weight: Weight, grid: EvaluationGrid, form: str = "variance"
) -> GridReport:
    """
    Description
    -----------

    This function returns the BMO semi-norm sup_z sqrt(MO(f)(z))
    sampled on the grid.

    Parameters
    ----------

    f: ``Symbol``

        A Python Symbol object.

    weight: ``Weight``

        A Python Weight object.

    grid: ``EvaluationGrid``

        A Python EvaluationGrid object.

    Keywords
    --------

    form: ``str``, optional

        A Python string specifying the mean oscillation form.

    Returns
    -------

    report: ``GridReport``

        A Python GridReport object.

    """

    # Sample the mean oscillation.
    points = grid.points_for(f=f)
    values = numpy.array(
        [
            numpy.sqrt(max(mean_oscillation(f=f, weight=weight, z=z, form=form), 0.0))
            for z in points
        ]
    )

    return __grid_sup__(values=values, points=points, grid=grid)


# ----


def __ball_samples__(z: numpy.ndarray, n: int, radius: float) -> numpy.ndarray:
    """
    Description
    -----------

    This function returns phi_z(tanh(b) zeta) for OSC_RADII distances
    b up to `radius` and OSC_DIRECTIONS directions zeta.

    """

    # Build the geodesic polar samples.
    b = radius * numpy.arange(1, OSC_RADII + 1) / OSC_RADII
    zeta = sphere_directions(n=n, count=OSC_DIRECTIONS)
    y = (numpy.tanh(b)[:, None, None] * zeta[None, :, :]).reshape(-1, n)

    return mobius_apply(a=z, z=y)


# ----


def osc(f: Symbol, weight: Weight, z: Any) -> float:
    """
    Description
    -----------

    This function returns the oscillation

        Osc_z(f) = sup { |f(z) - f(w)| : beta_lam(z, w) < 1 }

    sampled at 64 directions and 8 distances up to the (open) unit
    weighted metric ball.

    Parameters
    ----------

    f: ``Symbol``

        A Python Symbol object.

    weight: ``Weight``

        A Python Weight object.

    z: ``Any``

        The evaluation point.

    Returns
    -------

    value: ``float``

        A Python float containing the sampled oscillation.

    """

    # Sample the metric ball.
    z = as_point(z=z, n=weight.n).reshape(weight.n)
    radius = (1.0 - 1.0e-9) * numpy.sqrt(weight.p / weight.lam)
    w = __ball_samples__(z=z, n=weight.n, radius=radius)
    fz = complex(numpy.asarray(f.evaluate(z[None, :]))[0])

    return float(numpy.max(numpy.abs(numpy.asarray(f.evaluate(w)) - fz)))


# ----


def bo_seminorm(f: Symbol, weight: Weight, grid: EvaluationGrid) -> GridReport:
    """
    Description
    -----------

    This function returns the BO semi-norm sup_z Osc_z(f), sampled by
    the metric ball samples at every grid point and by all grid
    pairs with beta_lam(z, w) < 1.

    Parameters
    ----------

    f: ``Symbol``

        A Python Symbol object.

    weight: ``Weight``

        A Python Weight object.

    grid: ``EvaluationGrid``

        A Python EvaluationGrid object.

    Returns
    -------

    report: ``GridReport``

        A Python GridReport object.

    """

    # Sample the metric balls.
    points = grid.points
    values = numpy.array([osc(f=f, weight=weight, z=z) for z in points])

    # Include the grid pairs inside the unit weighted metric ball.
    fvals = numpy.asarray(f.evaluate(points), dtype=complex)
    dist = beta_lambda(weight=weight, z=points[:, None, :], w=points[None, :, :])
    diffs = numpy.where(dist < 1.0, numpy.abs(fvals[:, None] - fvals[None, :]), 0.0)
    values = numpy.maximum(values, numpy.max(diffs, axis=1))

    return __grid_sup__(values=values, points=points, grid=grid)


# ----


def continuity_modulus(f: Symbol, delta: float, grid: EvaluationGrid) -> GridReport:
    """
    Description
    -----------

    This function returns the modulus of continuity
    sup { |f(z) - f(w)| : beta(z, w) < delta } sampled around the
    grid points.

    Parameters
    ----------

    f: ``Symbol``

        A Python Symbol object.

    delta: ``float``

        A Python float specifying the distance; > 0.

    grid: ``EvaluationGrid``

        A Python EvaluationGrid object.

    Returns
    -------

    report: ``GridReport``

        A Python GridReport object.

    Raises
    ------

    OscillationInterfaceError:

        - raised if `delta` is not positive.

    """

    # Check the distance.
    if not delta > 0.0:
        msg = f"The continuity distance must be positive; received {delta}. Aborting!!!"
        raise OscillationInterfaceError(msg=msg)

    # Sample the metric balls.
    points = grid.points
    values = []
    for z in points:
        w = __ball_samples__(z=z, n=grid.n, radius=(1.0 - 1.0e-9) * delta)
        fz = complex(numpy.asarray(f.evaluate(z[None, :]))[0])
        values.append(float(numpy.max(numpy.abs(numpy.asarray(f.evaluate(w)) - fz))))

    return __grid_sup__(values=numpy.array(values), points=points, grid=grid)


# ----


@dataclass
class AverageReport:
    """
    Description
    -----------

    This is the data-class containing the Bergman ball average
    f_hat(x, rho), the q-th mean deviation A_q(f, rho, x) and the
    ball volume from quadrature and in closed form.

    """

    mean: complex
    aq: float
    q: int
    volume_quadrature: float
    volume_closed: float


# ----


def __ball_rule__(x: numpy.ndarray, rho: float, n: int, degree: int) -> tuple:
    """
    Description
    -----------

    This function returns the nodes and volume weights of E(x, rho),
    the image of |y| < tanh(rho) under phi_x.

    """

    # Pull back the disk rule.
    rule = disk_rule(n=n, radius=float(numpy.tanh(rho)), degree=degree)
    nodes = mobius_apply(a=x, z=rule.points)
    weights = rule.weights * mobius_jacobian(a=x, w=rule.points)

    return (nodes, weights)


# ----


def average_and_Aq(
    f: Symbol, x: Any, rho: float, q: int = 2, degree: int = 64
) -> AverageReport:
    """
    Description
    -----------

    This function returns the Bergman ball average and mean deviation

        f_hat(x, rho) = |E|^-1 int_E f dv,
        A_q(f, rho, x) = |E|^-1 int_E |f - f_hat|^q dv,

    with E = E(x, rho) integrated by pulling back a disk rule through
    phi_x.

    Parameters
    ----------

    f: ``Symbol``

        A Python Symbol object.

    x: ``Any``

        The ball center.

    rho: ``float``

        A Python float specifying the ball radius; > 0.

    Keywords
    --------

    q: ``int``, optional

        A Python integer specifying the exponent; 2 or 4.

    degree: ``int``, optional

        A Python integer specifying the disk rule degree.

    Returns
    -------

    report: ``AverageReport``

        A Python AverageReport object.

    Raises
    ------

    OscillationInterfaceError:

        - raised if `q` is not 2 or 4 or `rho` is not positive.

    """

    # Check the arguments.
    if q not in (2, 4) or not rho > 0.0:
        msg = f"Averages require q in (2, 4) and rho > 0; received q = {q}, rho = {rho}. Aborting!!!"
        raise OscillationInterfaceError(msg=msg)
    x = as_point(z=x, n=f.n).reshape(f.n)

    # Integrate over the Bergman ball.
    (nodes, weights) = __ball_rule__(x=x, rho=rho, n=f.n, degree=degree)
    volume = float(numpy.sum(weights))
    values = numpy.asarray(f.evaluate(nodes), dtype=complex)
    mean = complex(numpy.sum(weights * values) / volume)
    aq = float(numpy.sum(weights * numpy.abs(values - mean) ** q) / volume)
    report = AverageReport(
        mean=mean,
        aq=aq,
        q=q,
        volume_quadrature=volume,
        volume_closed=float(bergman_ball_volume(n=f.n, z=x, rho=rho)),
    )

    return report


# ----


def double_average_bound(f: Symbol, x: Any, rho: float, degree: int = 64) -> float:
    """
    Description
    -----------

    This function returns |E|^-2 int_E int_E |f(y) - f(z)|^2 dv dv
    over E = E(x, rho); the double sum over the ball rule is reduced
    to 2 (|E|^-1 sum w |f|^2 - |f_hat|^2).

    Parameters
    ----------

    f: ``Symbol``

        A Python Symbol object.

    x: ``Any``

        The ball center.

    rho: ``float``

        A Python float specifying the ball radius; > 0.

    Keywords
    --------

    degree: ``int``, optional

        A Python integer specifying the disk rule degree.

    Returns
    -------

    bound: ``float``

        A Python float containing the double average.

    """

    # Reduce the double sum.
    x = as_point(z=x, n=f.n).reshape(f.n)
    (nodes, weights) = __ball_rule__(x=x, rho=rho, n=f.n, degree=degree)
    volume = numpy.sum(weights)
    values = numpy.asarray(f.evaluate(nodes), dtype=complex)
    mean = numpy.sum(weights * values) / volume

    second = numpy.sum(weights * numpy.abs(values) ** 2) / volume

    return float(2.0 * (second - abs(mean) ** 2))


# ----


@dataclass
class ProfileReport:
    """
    Description
    -----------

    This is the data-class containing the VMO profile
    sup_x A_2(f, rho, x) per radius rho.

    """

    rhos: List[float]
    sups: List[float]
    argmax: List[List[complex]]
    grid: Dict = field(default_factory=dict)

    @property
    def decreasing(self: Generic) -> bool:
        """Whether the profile decreases as rho decreases."""
        order = numpy.argsort(self.rhos)
        return bool(numpy.all(numpy.diff(numpy.asarray(self.sups)[order]) >= 0.0))


# ----


def vmo_profile(
    f: Symbol, rho_list: Sequence[float], grid: EvaluationGrid, degree: int = 64
) -> ProfileReport:
    """
    Description
    -----------

    This function returns the VMO profile sup_x A_2(f, rho, x) over
    the grid points for each radius; a profile decreasing to 0 with
    rho certifies vanishing mean oscillation at grid resolution.

    Parameters
    ----------

    f: ``Symbol``

        A Python Symbol object.

    rho_list: ``Sequence[float]``

        A Python sequence of Bergman ball radii.

    grid: ``EvaluationGrid``

        A Python EvaluationGrid object.

    Keywords
    --------

    degree: ``int``, optional

        A Python integer specifying the disk rule degree.

    Returns
    -------

    report: ``ProfileReport``

        A Python ProfileReport object.

    """

    # Sample the mean deviations.
    points = grid.points_for(f=f)
    (sups, argmax) = ([], [])
    for rho in rho_list:
        values = numpy.array(
            [average_and_Aq(f=f, x=x, rho=rho, q=2, degree=degree).aq for x in points]
        )
        idx = int(numpy.argmax(values))
        sups.append(float(values[idx]))
        argmax.append([complex(item) for item in points[idx]])
        msg = f"VMO profile {f.id}: rho = {rho:g}, sup A_2 = {values[idx]:.6e}."
        logger.debug(msg=msg)
    report = ProfileReport(
        rhos=[float(rho) for rho in rho_list],
        sups=sups,
        argmax=argmax,
        grid=grid.metadata(),
    )

    return report


# ----


@dataclass
class InequalityReport:
    """
    Description
    -----------

    This is the data-class containing a pointwise inequality audit
    lhs <= rhs (+ slack); `constant` is the sampled max lhs/rhs.

    """

    holds: bool
    max_violation: float
    constant: float
    lhs: List[float]
    rhs: List[float]
    grid: Dict = field(default_factory=dict)


# ----


def __ratio__(lhs: numpy.ndarray, rhs: numpy.ndarray) -> float:
    """The sampled constant max lhs/rhs over rhs > 0."""
    mask = rhs > AUDIT_SLACK
    return float(numpy.max(lhs[mask] / rhs[mask], initial=0.0))


# ----


def mo_average_bound_audit(
    f: Symbol, weight: Weight, rho: float, grid: EvaluationGrid
) -> InequalityReport:
    """
    Description
    -----------

    This function audits

        MO(f)(x) <= int |f o phi_x - f_hat(x, rho)|^2 dv_lam

    at the grid points.

    Parameters
    ----------

    f: ``Symbol``

        A Python Symbol object.

    weight: ``Weight``

        A Python Weight object.

    rho: ``float``

        A Python float specifying the Bergman ball radius.

    grid: ``EvaluationGrid``

        A Python EvaluationGrid object.

    Returns
    -------

    report: ``InequalityReport``

        A Python InequalityReport object.

    """

    # Evaluate both sides.
    points = grid.points_for(f=f)
    (lhs, rhs) = ([], [])
    for x in points:
        lhs.append(mean_oscillation(f=f, weight=weight, z=x))
        center = average_and_Aq(f=f, x=x, rho=rho).mean
        rhs.append(__centered_square__(f=f, weight=weight, z=x, center=center))
    (lhs, rhs) = (numpy.array(lhs), numpy.array(rhs))
    violation = float(numpy.max(lhs - rhs))
    report = InequalityReport(
        holds=bool(violation <= AUDIT_SLACK),
        max_violation=violation,
        constant=__ratio__(lhs=lhs, rhs=rhs),
        lhs=lhs.tolist(),
        rhs=rhs.tolist(),
        grid=grid.metadata(),
    )

    return report


# ----


@dataclass
class LipschitzReport:
    """
    Description
    -----------

    This is the data-class containing the audits of

        |B g(w) - B g(z)| <= C ||g||_BMO beta_lam(z, w),   C = 2,

    over sampled pairs and of sup_z B(|g - B g(z)|)(z) <= C ||g||_BMO
    over the grid; both constants are sampled.

    """

    bmo: float
    lipschitz_constant: float
    lipschitz_holds: bool
    triangular_constant: float
    npairs: int
    grid: Dict = field(default_factory=dict)


# ----


def bmo_bo_lipschitz_audit(
    g: Symbol, weight: Weight, grid: EvaluationGrid, npairs: int = 50, seed: int = 7
) -> LipschitzReport:
    """
    Description
    -----------

    This function audits the Lipschitz bound of the Berezin transform
    with respect to beta_lam and the triangular-inequality bound of
    the mean absolute deviation by the BMO semi-norm.

    Parameters
    ----------

    g: ``Symbol``

        A Python Symbol object.

    weight: ``Weight``

        A Python Weight object.

    grid: ``EvaluationGrid``

        A Python EvaluationGrid object.

    Keywords
    --------

    npairs: ``int``, optional

        A Python integer specifying the number of sampled pairs.

    seed: ``int``, optional

        A Python integer specifying the random seed.

    Returns
    -------

    report: ``LipschitzReport``

        A Python LipschitzReport object.

    """

    # Compute the semi-norm and the Berezin transform on the grid.
    bmo = bmo_seminorm(f=g, weight=weight, grid=grid).value
    points = grid.points
    rng = numpy.random.default_rng(seed)
    pairs = rng.choice(points.shape[0], size=(npairs, 2), replace=True)
    pairs = pairs[pairs[:, 0] != pairs[:, 1]]
    needed = numpy.unique(pairs)
    bvals = {int(idx): berezin(f=g, weight=weight, z=points[idx]) for idx in needed}

    # Audit the Lipschitz bound.
    lhs = numpy.array([abs(bvals[int(i)] - bvals[int(j)]) for i, j in pairs])
    dist = beta_lambda(weight=weight, z=points[pairs[:, 0]], w=points[pairs[:, 1]])
    lipschitz = __ratio__(lhs=lhs, rhs=bmo * dist) if bmo > AUDIT_SLACK else 0.0
    holds = bool(numpy.all(lhs <= 2.0 * bmo * dist + AUDIT_SLACK))

    # Audit the triangular-inequality bound.
    deviations = []
    for z in grid.points_for(f=g):
        center = berezin(f=g, weight=weight, z=z)
        dev = symbols_interface.modulus(
            symbols_interface.symbol_sum(g, symbols_interface.constant(-center, n=g.n))
        )
        deviations.append(berezin(f=dev, weight=weight, z=z).real)
    triangular = float(max(deviations) / bmo) if bmo > AUDIT_SLACK else 0.0
    report = LipschitzReport(
        bmo=float(bmo),
        lipschitz_constant=lipschitz,
        lipschitz_holds=holds,
        triangular_constant=triangular,
        npairs=int(pairs.shape[0]),
        grid=grid.metadata(),
    )

    return report


# ----


def berezin_symbol(
    f: Symbol, weight: Weight, horizon: float = 8.0, nodes: int = 97
) -> Symbol:
    """
    Description
    -----------

    This function returns the Berezin transform of a radial symbol as
    a new radial symbol; the profile is tabulated at equispaced
    distances beta(0, z) up to `horizon` and interpolated by monotone
    cubic (PCHIP) interpolation in beta, constant beyond the horizon.

    Parameters
    ----------

    f: ``Symbol``

        A Python Symbol object carrying the RADIAL tag.

    weight: ``Weight``

        A Python Weight object.

    Keywords
    --------

    horizon: ``float``, optional

        A Python float specifying the tabulation horizon.

    nodes: ``int``, optional

        A Python integer specifying the number of tabulation nodes.

    Returns
    -------

    symbol: ``Symbol``

        A Python Symbol object.

    Raises
    ------

    OscillationInterfaceError:

        - raised if the symbol is not radial.

    """

    # Check the symbol.
    if not f.radial:
        msg = f"Berezin symbols are tabulated for RADIAL symbols only; received {f.id}. Aborting!!!"
        raise OscillationInterfaceError(msg=msg)

    # Tabulate the profile.
    betas = numpy.linspace(0.0, horizon, nodes)
    axis = numpy.zeros((betas.size, f.n))
    axis[:, 0] = numpy.tanh(betas)
    table = numpy.array([__berezin_radial__(f=f, weight=weight, z=z) for z in axis])
    real = PchipInterpolator(betas, table.real)
    imag = PchipInterpolator(betas, table.imag)

    def amplitude(s: numpy.ndarray) -> numpy.ndarray:
        r = numpy.sqrt(numpy.clip(s, 0.0, 1.0 - 1.0e-16))
        b = numpy.minimum(numpy.arctanh(r), horizon)
        return real(b) + 1j * imag(b)

    tags = {RADIAL}
    if f.has(BOUNDED):
        tags |= {BOUNDED, UC, BUC, VMO}
    symbol = symbols_interface.Symbol(
        id=f"B[{weight.lam:g}]({f.id})",
        evaluate=lambda z: amplitude(numpy.sum(numpy.abs(z) ** 2, axis=-1)),
        tags=frozenset(tags),
        sup_bound=f.sup_bound if f.has(BOUNDED) else None,
        components=((0, amplitude),),
        origin_value=complex(table[0]),
        n=f.n,
    )

    return symbol

