"""
Module
------

    geometry_interface.py

Description
-----------

    This module contains the geometry and Hilbert-space primitives of
    the weighted Bergman spaces on the complex unit ball of dimension
    `n`: the Jordan determinant h(z,w) = 1 - <z,w>, the reproducing
    kernels, the Moebius involutions, the Bergman metric and metric
    balls, and the monomial basis norms.

    Points are numpy complex arrays whose last axis has length `n`;
    all functions broadcast over the leading axes.

Classes
-------

    BallGeometry(n)

        This is the base-class object describing the unit ball of
        complex dimension `n` and genus `p = n + 1`.

    Weight(n, lam)

        This is the base-class object describing the weight parameter
        `lam` of the measure dv_lam and its derived quantities.

Functions
---------

    as_point(z, n, allow_boundary=False)

        This function validates and returns a complex point array.

    basis_eval(weight, indices, z)

        This function evaluates the orthonormal monomial basis.

    bergman_ball_volume(n, z, rho)

        This function returns the normalized volume of the Bergman
        ball E(z, rho).

    bergman_distance(z, w)

        This function returns the Bergman distance arctanh|phi_z(w)|.

    berezin_kernel_density(weight, z, w)

        This function returns |k_z(w)|^2 c_lam h(w,w)^(lam-p).

    beta_lambda(weight, z, w)

        This function returns the weighted Bergman distance.

    c_ratio(n, lam1, lam2)

        This function returns the normalizing constant ratio
        c_lam1 / c_lam2.

    jordan_h(z, w)

        This function returns the Jordan determinant h(z,w).

    kernel(weight, z, w)

        This function returns the reproducing kernel K_lam(z,w).

    log_c_lambda(n, lam)

        This function returns the logarithm of the normalizing
        constant c_lam.

    mobius(a)

        This function returns the Moebius involution phi_a.

    mobius_apply(a, z)

        This function evaluates the Moebius involution phi_a(z).

    mobius_jacobian(a, w)

        This function returns the real Jacobian of phi_a at w.

    monomial_log_norm2(weight, indices)

        This function returns the logarithm of the squared monomial
        norms.

    monomial_norm(weight, index)

        This function returns the norm of a single monomial.

    normalized_kernel(weight, w)

        This function returns the normalized reproducing kernel k_w.

    sphere_directions(n, count)

        This function returns deterministic unit vectors on the sphere.

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

# ----

from collections.abc import Callable
from dataclasses import dataclass
from typing import Generic, Sequence, Union

import numpy
from scipy.special import gammaln

from utils.exceptions_interface import GeometryInterfaceError

# ----

# Define all available module properties.
__all__ = [
    "BallGeometry",
    "Weight",
    "as_point",
    "basis_eval",
    "bergman_ball_volume",
    "bergman_distance",
    "berezin_kernel_density",
    "beta_lambda",
    "c_ratio",
    "jordan_h",
    "kernel",
    "log_c_lambda",
    "mobius",
    "mobius_apply",
    "mobius_jacobian",
    "monomial_log_norm2",
    "monomial_norm",
    "normalized_kernel",
    "sphere_directions",
]

# ----

ArrayLike = Union[complex, Sequence, numpy.ndarray]

# Tolerance on the closed unit ball test for boundary points.
BOUNDARY_TOL = 1.0e-14

# ----


@dataclass(frozen=True)
class BallGeometry:
    """
    Description
    -----------

    This is the base-class object describing the unit ball of complex
    dimension `n` and genus `p = n + 1`.

    Parameters
    ----------

    n: ``int``

        A Python integer specifying the complex dimension.

    Raises
    ------

    GeometryInterfaceError:

        - raised if `n` is not a positive integer.

    """

    n: int

    def __post_init__(self: Generic) -> None:
        if int(self.n) != self.n or self.n < 1:
            msg = f"The ball dimension must be a positive integer; received {self.n}. Aborting!!!"
            raise GeometryInterfaceError(msg=msg)

    @property
    def p(self: Generic) -> int:
        """The genus of the ball."""
        return self.n + 1


# ----


@dataclass(frozen=True)
class Weight:
    """
    Description
    -----------

    This is the base-class object describing the weight parameter of
    the measure dv_lam = c_lam h(z,z)^(lam-p) dv on the unit ball of
    dimension `n`.

    Parameters
    ----------

    n: ``int``

        A Python integer specifying the complex dimension.

    lam: ``float``

        A Python float specifying the weight parameter; must exceed
        `n`.

    Raises
    ------

    GeometryInterfaceError:

        - raised if `lam` does not exceed `n`.

    """

    n: int
    lam: float

    def __post_init__(self: Generic) -> None:
        BallGeometry(n=self.n)
        if not numpy.isfinite(self.lam) or self.lam <= self.n:
            msg = (
                f"The weight parameter lambda = {self.lam} must exceed the "
                f"dimension n = {self.n}. Aborting!!!"
            )
            raise GeometryInterfaceError(msg=msg)

    @property
    def p(self: Generic) -> int:
        """The genus of the ball."""
        return self.n + 1

    @property
    def alpha(self: Generic) -> float:
        """The Jacobi exponent lam - n - 1 (> -1)."""
        return float(self.lam) - self.n - 1.0

    @property
    def log_c_lambda(self: Generic) -> float:
        """The logarithm of the normalizing constant."""
        return log_c_lambda(n=self.n, lam=self.lam)

    @property
    def c_lambda(self: Generic) -> float:
        """The normalizing constant of dv_lam."""
        return float(numpy.exp(self.log_c_lambda))


# ----


def as_point(z: ArrayLike, n: int, allow_boundary: bool = False) -> numpy.ndarray:
    """
    Description
    -----------

    This function validates and returns a complex point array whose
    last axis has length `n`; a scalar or 1-dimensional input is
    accepted for `n = 1`.

    Parameters
    ----------

    z: ``ArrayLike``

        A Python scalar, sequence or numpy array of complex
        coordinates.

    n: ``int``

        A Python integer specifying the complex dimension.

    Keywords
    --------

    allow_boundary: ``bool``, optional

        A Python boolean valued variable specifying whether points
        with |z| = 1 are accepted.

    Returns
    -------

    z: ``numpy.ndarray``

        A numpy complex array of shape (..., n).

    Raises
    ------

    GeometryInterfaceError:

        - raised if the last axis does not have length `n`.

        - raised if any point lies outside the (open) unit ball.

    """

    # Define the complex point array.
    z = numpy.asarray(z, dtype=complex)
    if n == 1 and (z.ndim == 0 or z.shape[-1] != 1):
        z = z[..., numpy.newaxis]
    if z.shape[-1] != n:
        msg = f"Points must have {n} complex coordinates; received shape {z.shape}. Aborting!!!"
        raise GeometryInterfaceError(msg=msg)

    # Check that the points lie within the unit ball.
    norm2 = numpy.sum(numpy.abs(z) ** 2, axis=-1)
    if not numpy.all(numpy.isfinite(norm2)):
        msg = "Points must have finite coordinates. Aborting!!!"
        raise GeometryInterfaceError(msg=msg)
    limit = 1.0 + BOUNDARY_TOL if allow_boundary else 1.0
    bad = norm2 > limit if allow_boundary else norm2 >= limit
    if numpy.any(bad):
        msg = (
            f"Points must satisfy |z| {'<=' if allow_boundary else '<'} 1; "
            f"received |z| = {numpy.sqrt(numpy.max(norm2)):.16g}. Aborting!!!"
        )
        raise GeometryInterfaceError(msg=msg)

    return z


# ----


def jordan_h(z: numpy.ndarray, w: numpy.ndarray) -> numpy.ndarray:
    """
    Description
    -----------

    This function returns the Jordan determinant h(z,w) = 1 - <z,w>;
    the inner product is conjugate-linear in `w`.

    Parameters
    ----------

    z: ``numpy.ndarray``

        A numpy complex array of shape (..., n).

    w: ``numpy.ndarray``

        A numpy complex array of shape (..., n).

    Returns
    -------

    h: ``numpy.ndarray``

        A numpy complex array of the broadcast leading shape.

    """

    # Compute the Jordan determinant.
    h = 1.0 - numpy.sum(numpy.asarray(z) * numpy.conj(w), axis=-1)

    return h


# ----


def log_c_lambda(n: int, lam: float) -> float:
    """
    Description
    -----------

    This function returns the logarithm of the normalizing constant
    c_lam = Gamma(lam) / (n! Gamma(lam - n)).

    Parameters
    ----------

    n: ``int``

        A Python integer specifying the complex dimension.

    lam: ``float``

        A Python float specifying the weight parameter.

    Returns
    -------

    logc: ``float``

        A Python float containing log(c_lam).

    """

    # Compute the normalizing constant in log space.
    logc = float(gammaln(lam) - gammaln(n + 1.0) - gammaln(lam - n))

    return logc


# ----


def c_ratio(n: int, lam1: float, lam2: float) -> float:
    """
    Description
    -----------

    This function returns the normalizing constant ratio
    c_lam1 / c_lam2 computed via log-Gamma.

    Parameters
    ----------

    n: ``int``

        A Python integer specifying the complex dimension.

    lam1: ``float``

        A Python float specifying the numerator weight parameter.

    lam2: ``float``

        A Python float specifying the denominator weight parameter.

    Returns
    -------

    ratio: ``float``

        A Python float containing c_lam1 / c_lam2.

    """

    # Compute the ratio.
    ratio = float(numpy.exp(log_c_lambda(n=n, lam=lam1) - log_c_lambda(n=n, lam=lam2)))

    return ratio


# ----


def kernel(weight: Weight, z: ArrayLike, w: ArrayLike) -> numpy.ndarray:
    """
    Description
    -----------

    This function returns the reproducing kernel
    K_lam(z,w) = h(z,w)^(-lam) using the principal branch.

    Parameters
    ----------

    weight: ``Weight``

        A Python Weight object.

    z: ``ArrayLike``

        The first point(s).

    w: ``ArrayLike``

        The second point(s).

    Returns
    -------

    value: ``numpy.ndarray``

        A numpy complex array containing the kernel values.

    """

    # Evaluate the kernel in log space.
    z = as_point(z=z, n=weight.n)
    w = as_point(z=w, n=weight.n)
    value = numpy.exp(-weight.lam * numpy.log(jordan_h(z=z, w=w)))

    return value


# ----


def normalized_kernel(weight: Weight, w: ArrayLike) -> Callable:
    """
    Description
    -----------

    This function returns the normalized reproducing kernel
    k_w(z) = h(z,w)^(-lam) h(w,w)^(lam/2).

    Parameters
    ----------

    weight: ``Weight``

        A Python Weight object.

    w: ``ArrayLike``

        The kernel base point.

    Returns
    -------

    k_w: ``Callable``

        A Python function mapping points to the kernel values.

    """

    # Define the kernel function.
    w = as_point(z=w, n=weight.n)
    log_hww = numpy.log(jordan_h(z=w, w=w).real)

    def k_w(z: ArrayLike) -> numpy.ndarray:
        z = as_point(z=z, n=weight.n)
        return numpy.exp(
            -weight.lam * numpy.log(jordan_h(z=z, w=w)) + 0.5 * weight.lam * log_hww
        )

    return k_w


# ----


def berezin_kernel_density(
    weight: Weight, z: ArrayLike, w: ArrayLike
) -> numpy.ndarray:
    """
    Description
    -----------

    This function returns the density |k_z(w)|^2 c_lam h(w,w)^(lam-p)
    with respect to the normalized Lebesgue measure; the Berezin
    transform of f at z is the integral of f against this density.

    Parameters
    ----------

    weight: ``Weight``

        A Python Weight object.

    z: ``ArrayLike``

        The Berezin base point(s).

    w: ``ArrayLike``

        The integration point(s).

    Returns
    -------

    density: ``numpy.ndarray``

        A numpy float array containing the density values.

    """

    # Evaluate the density in log space.
    z = as_point(z=z, n=weight.n)
    w = as_point(z=w, n=weight.n)
    log_density = (
        weight.lam * numpy.log(jordan_h(z=z, w=z).real)
        - 2.0 * weight.lam * numpy.log(numpy.abs(jordan_h(z=z, w=w)))
        + weight.log_c_lambda
        + (weight.lam - weight.p) * numpy.log(jordan_h(z=w, w=w).real)
    )
    density = numpy.exp(log_density)

    return density


# ----


def mobius_apply(a: ArrayLike, z: ArrayLike) -> numpy.ndarray:
    """
    Description
    -----------

    This function evaluates the Moebius involution

        phi_a(z) = (a - P_a z - s_a Q_a z) / (1 - <z,a>),

    where P_a is the orthogonal projection onto span{a}, Q_a = I - P_a
    and s_a = sqrt(1 - |a|^2); phi_0(z) = -z.

    Parameters
    ----------

    a: ``ArrayLike``

        The involution center(s), shape (..., n).

    z: ``ArrayLike``

        The point(s) to be mapped, shape (..., n).

    Returns
    -------

    phi: ``numpy.ndarray``

        A numpy complex array containing phi_a(z).

    """

    # Compute the projections; the projection onto span{0} is zero.
    a = numpy.asarray(a, dtype=complex)
    z = numpy.asarray(z, dtype=complex)
    a2 = numpy.sum(numpy.abs(a) ** 2, axis=-1, keepdims=True)
    za = numpy.sum(z * numpy.conj(a), axis=-1, keepdims=True)
    safe = numpy.where(a2 > 0.0, a2, 1.0)
    proj = numpy.where(a2 > 0.0, za / safe, 0.0) * a
    s_a = numpy.sqrt(1.0 - a2)
    phi = (a - proj - s_a * (z - proj)) / (1.0 - za)

    return phi


# ----


def mobius(a: ArrayLike) -> Callable:
    """
    Description
    -----------

    This function returns the Moebius involution phi_a which
    interchanges 0 and `a`.

    Parameters
    ----------

    a: ``ArrayLike``

        The involution center; |a| < 1.

    Returns
    -------

    phi_a: ``Callable``

        A Python function mapping points z to phi_a(z).

    """

    # Define the involution.
    a = as_point(z=a, n=numpy.atleast_1d(numpy.asarray(a)).shape[-1])

    def phi_a(z: ArrayLike) -> numpy.ndarray:
        return mobius_apply(a=a, z=as_point(z=z, n=a.shape[-1], allow_boundary=True))

    return phi_a


# ----


def mobius_jacobian(a: ArrayLike, w: ArrayLike) -> numpy.ndarray:
    """
    Description
    -----------

    This function returns the real Jacobian of phi_a at w,
    (h(a,a) / |h(a,w)|^2)^p.

    Parameters
    ----------

    a: ``ArrayLike``

        The involution center(s), shape (..., n).

    w: ``ArrayLike``

        The point(s), shape (..., n).

    Returns
    -------

    jac: ``numpy.ndarray``

        A numpy float array containing the Jacobian values.

    """

    # Compute the Jacobian.
    a = numpy.asarray(a, dtype=complex)
    w = numpy.asarray(w, dtype=complex)
    p = numpy.shape(a)[-1] + 1
    jac = (jordan_h(z=a, w=a).real / numpy.abs(jordan_h(z=a, w=w)) ** 2) ** p

    return jac


# ----


def bergman_distance(z: ArrayLike, w: ArrayLike) -> numpy.ndarray:
    """
    Description
    -----------

    This function returns the Bergman distance
    beta(z,w) = arctanh|phi_z(w)|; the identity
    1 - |phi_z(w)|^2 = h(z,z) h(w,w) / |h(z,w)|^2 is used so that
    nearby points and points close to the boundary retain precision.

    Parameters
    ----------

    z: ``ArrayLike``

        The first point(s), shape (..., n).

    w: ``ArrayLike``

        The second point(s), shape (..., n).

    Returns
    -------

    beta: ``numpy.ndarray``

        A numpy float array containing the distances.

    """

    # Compute the distance; arctanh(x) = log((1 + x) / sqrt(1 - x^2)).
    z = numpy.asarray(z, dtype=complex)
    w = numpy.asarray(w, dtype=complex)
    s = (
        jordan_h(z=z, w=z).real
        * jordan_h(z=w, w=w).real
        / numpy.abs(jordan_h(z=z, w=w)) ** 2
    )
    s = numpy.minimum(s, 1.0)
    x = numpy.abs(mobius_apply(a=z, z=w))
    x = numpy.sqrt(numpy.sum(x**2, axis=-1))
    x = numpy.where(s > 0.5, numpy.sqrt(numpy.maximum(0.0, 1.0 - s)), x)
    beta = numpy.log1p(x) - 0.5 * numpy.log(s)

    return beta


# ----


def beta_lambda(weight: Weight, z: ArrayLike, w: ArrayLike) -> numpy.ndarray:
    """
    Description
    -----------

    This function returns the weighted Bergman distance
    beta_lam = sqrt(lam / p) beta.

    Parameters
    ----------

    weight: ``Weight``

        A Python Weight object.

    z: ``ArrayLike``

        The first point(s).

    w: ``ArrayLike``

        The second point(s).

    Returns
    -------

    beta: ``numpy.ndarray``

        A numpy float array containing the weighted distances.

    """

    # Scale the Bergman distance.
    z = as_point(z=z, n=weight.n)
    w = as_point(z=w, n=weight.n)
    beta = numpy.sqrt(weight.lam / weight.p) * bergman_distance(z=z, w=w)

    return beta


# ----


def bergman_ball_volume(n: int, z: ArrayLike, rho: float) -> numpy.ndarray:
    """
    Description
    -----------

    This function returns the normalized volume of the Bergman ball
    E(z, rho) = {w : beta(z,w) < rho},

        tanh(rho)^(2n) (1 - |z|^2)^(n+1) / (1 - tanh(rho)^2 |z|^2)^(n+1).

    Parameters
    ----------

    n: ``int``

        A Python integer specifying the complex dimension.

    z: ``ArrayLike``

        The ball center(s).

    rho: ``float``

        A Python float specifying the ball radius; must be positive.

    Returns
    -------

    volume: ``numpy.ndarray``

        A numpy float array containing the volumes.

    Raises
    ------

    GeometryInterfaceError:

        - raised if `rho` is not positive.

    """

    # Check the radius.
    if not rho > 0.0:
        msg = f"The Bergman ball radius must be positive; received {rho}. Aborting!!!"
        raise GeometryInterfaceError(msg=msg)

    # Compute the closed-form volume.
    z = as_point(z=z, n=n)
    r2 = numpy.sum(numpy.abs(z) ** 2, axis=-1)
    t2 = numpy.tanh(rho) ** 2
    volume = t2**n * ((1.0 - r2) / (1.0 - t2 * r2)) ** (n + 1)

    return volume


# ----


def monomial_log_norm2(weight: Weight, indices: ArrayLike) -> numpy.ndarray:
    """
    Description
    -----------

    This function returns the logarithm of the squared monomial norms

        log ||z^a||^2 = sum_i log Gamma(a_i + 1) + log Gamma(lam)
                        - log Gamma(lam + |a|).

    Parameters
    ----------

    weight: ``Weight``

        A Python Weight object.

    indices: ``ArrayLike``

        An integer array of multi-indices of shape (..., n).

    Returns
    -------

    lognorm2: ``numpy.ndarray``

        A numpy float array containing the logarithms.

    Raises
    ------

    GeometryInterfaceError:

        - raised if the multi-indices are negative or do not have `n`
          entries.

    """

    # Check the multi-indices.
    indices = numpy.asarray(indices)
    if weight.n == 1 and (indices.ndim == 0 or indices.shape[-1] != 1):
        indices = indices[..., numpy.newaxis]
    if indices.shape[-1] != weight.n or numpy.any(indices < 0):
        msg = f"Invalid multi-index array of shape {indices.shape} for n = {weight.n}. Aborting!!!"
        raise GeometryInterfaceError(msg=msg)

    # Compute the squared norms in log space.
    order = numpy.sum(indices, axis=-1)
    lognorm2 = (
        numpy.sum(gammaln(indices + 1.0), axis=-1)
        + gammaln(weight.lam)
        - gammaln(weight.lam + order)
    )

    return lognorm2


# ----


def monomial_norm(weight: Weight, index: ArrayLike) -> float:
    """
    Description
    -----------

    This function returns the norm of a single monomial z^a in the
    weighted Bergman space.

    Parameters
    ----------

    weight: ``Weight``

        A Python Weight object.

    index: ``ArrayLike``

        The multi-index (an integer for n = 1).

    Returns
    -------

    norm: ``float``

        A Python float containing ||z^a||.

    """

    # Compute the norm.
    norm = float(numpy.exp(0.5 * monomial_log_norm2(weight=weight, indices=index)))

    return norm


# ----


def basis_eval(weight: Weight, indices: ArrayLike, z: ArrayLike) -> numpy.ndarray:
    """
    Description
    -----------

    This function evaluates the orthonormal monomial basis
    e_a(z) = z^a / ||z^a|| in log space.

    Parameters
    ----------

    weight: ``Weight``

        A Python Weight object.

    indices: ``ArrayLike``

        An integer array of multi-indices of shape (D, n).

    z: ``ArrayLike``

        The evaluation point(s) of shape (..., n).

    Returns
    -------

    values: ``numpy.ndarray``

        A numpy complex array of shape (..., D).

    """

    # Define the multi-indices and the points.
    indices = numpy.asarray(indices, dtype=float).reshape(-1, weight.n)
    z = as_point(z=z, n=weight.n, allow_boundary=True)
    lognorm2 = monomial_log_norm2(weight=weight, indices=indices)

    # Evaluate log|z^a| and arg(z^a); zero exponents contribute
    # nothing, including at z_i = 0.
    with numpy.errstate(divide="ignore", invalid="ignore"):
        log_abs = numpy.log(numpy.abs(z))[..., numpy.newaxis, :]
    terms = numpy.where(indices > 0, indices * log_abs, 0.0)
    phase = numpy.sum(indices * numpy.angle(z)[..., numpy.newaxis, :], axis=-1)
    values = numpy.exp(numpy.sum(terms, axis=-1) - 0.5 * lognorm2 + 1j * phase)

    return values


# ----


def sphere_directions(n: int, count: int) -> numpy.ndarray:
    """
    Description
    -----------

    This function returns deterministic unit vectors on the sphere of
    complex dimension `n`; for n = 1 these are the equispaced points
    exp(i 2 pi k / count) and for n = 2 the points are spread with
    equal-area latitudes and golden-ratio phases.

    Parameters
    ----------

    n: ``int``

        A Python integer specifying the complex dimension (1 or 2).

    count: ``int``

        A Python integer specifying the number of directions.

    Returns
    -------

    zeta: ``numpy.ndarray``

        A numpy complex array of shape (count, n).

    Raises
    ------

    GeometryInterfaceError:

        - raised if `n` is not 1 or 2 or `count` is not positive.

    """

    # Check the arguments.
    if n not in (1, 2) or count < 1:
        msg = f"Sphere directions require n in (1, 2) and count >= 1; received n = {n}, count = {count}. Aborting!!!"
        raise GeometryInterfaceError(msg=msg)

    # Build the directions.
    k = numpy.arange(count)
    if n == 1:
        return numpy.exp(2j * numpy.pi * k / count)[:, numpy.newaxis]
    golden = 0.5 * (1.0 + numpy.sqrt(5.0))
    cos2 = (k + 0.5) / count
    theta1 = 2.0 * numpy.pi * k / golden
    theta2 = 2.0 * numpy.pi * k / golden**2
    zeta = numpy.stack(
        [
            numpy.sqrt(cos2) * numpy.exp(1j * theta1),
            numpy.sqrt(1.0 - cos2) * numpy.exp(1j * theta2),
        ],
        axis=-1,
    )

    return zeta
