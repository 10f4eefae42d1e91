"""
Module
------

    oscillatory_interface.py

Description
-----------

    This module contains the evaluator for the radial integrals

        I = int_0^1 exp(i k / s) a(s) ds,   k a nonzero integer,

    that generic polynomial rules cannot resolve near s = 0. With
    u = 1/s the integral becomes int_1^oo exp(i k u) a(1/u) u^(-2) du,
    whose integrand is absolutely integrable; the half-line is split
    at half-periods of exp(i k u) and the resulting (nearly
    alternating) partial sums are accelerated by repeated pairwise
    averaging.

Classes
-------

    OscillatoryPlan(alpha, k, segments, depth, offset)

        This is the base-class object describing a segmentation of
        [1, oo) and the averaging depth.

    OscillatoryResult

        This is the data-class containing the evaluator result.

Functions
---------

    fourier_oracle(amplitude, k=1)

        This function evaluates the u-form integral with the QUADPACK
        Fourier-weight routine; it is independent of the
        segmentation and serves as an oracle.

    oscillatory_gamma0(alpha, tol=1.0e-8)

        This function evaluates (alpha + 1) int_0^1 exp(i/s) (1-s)^alpha ds.

    oscillatory_integral(amplitude, k, alpha=0.0, tol=1.0e-8,
                         depth=12, panels=1, adaptive=False,
                         segments=None)

        This function evaluates int_0^1 exp(i k/s) a(s) ds.

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

from dataclasses import dataclass
from typing import Callable, Generic

import numpy
from scipy import integrate
from scipy.special import roots_legendre, xlog1py

from utils.exceptions_interface import OscillatoryInterfaceError
from utils.logger_interface import Logger

# ----

# Define all available module properties.
__all__ = [
    "OscillatoryPlan",
    "OscillatoryResult",
    "fourier_oracle",
    "oscillatory_gamma0",
    "oscillatory_integral",
]

# ----

logger = Logger(caller_name=__name__)

# Segmentation attributes; the segment count grows with the spread
# (alpha + 1) of the u-amplitude.
SEGMENT_BASE = 256
SEGMENT_CAP = 4096
GL_SEGMENT_NODES = 48

# Number of geometric panels toward u = 1 in the first segment.
FIRST_SEGMENT_LEVELS = 40

# ----


@dataclass(frozen=True)
class OscillatoryPlan:
    """
    Description
    -----------

    This is the base-class object describing a segmentation of
    [1, oo); the endpoints are 1 followed by (j + offset) pi / |k|,
    j = j0, ..., j0 + segments - 1, and `depth` pairwise averaging
    passes are applied to the final partial sums.

    Parameters
    ----------

    alpha: ``float``

        A Python float specifying the Jacobi exponent of the
        amplitude; > -1.

    k: ``int``

        A Python integer specifying the (nonzero) frequency.

    segments: ``int``

        A Python integer specifying the number of half-period
        segments.

    depth: ``int``

        A Python integer specifying the averaging depth; >= 1.

    offset: ``float``

        A Python float specifying the endpoint phase offset in [0, 1).

    Raises
    ------

    OscillatoryInterfaceError:

        - raised if the plan attributes are invalid.

    """

    alpha: float
    k: int
    segments: int
    depth: int
    offset: float = 0.0

    def __post_init__(self: Generic) -> None:
        if not self.alpha > -1.0:
            msg = f"The amplitude exponent must exceed -1; received {self.alpha}. Aborting!!!"
            raise OscillatoryInterfaceError(msg=msg)
        if int(self.k) != self.k or self.k == 0:
            msg = f"The frequency must be a nonzero integer; received {self.k}. Aborting!!!"
            raise OscillatoryInterfaceError(msg=msg)
        if self.depth < 1 or self.segments < self.depth + 2:
            msg = (
                f"The plan requires depth >= 1 and more than depth + 1 segments; "
                f"received depth = {self.depth}, segments = {self.segments}. Aborting!!!"
            )
            raise OscillatoryInterfaceError(msg=msg)

    @property
    def half_period(self: Generic) -> float:
        """The half-period pi / |k| of exp(i k u)."""
        return numpy.pi / abs(self.k)

    def endpoints(self: Generic) -> numpy.ndarray:
        """
        Description
        -----------

        This method returns the segment endpoints in u.

        Returns
        -------

        endpoints: ``numpy.ndarray``

            A numpy float array of length `segments + 1` starting at 1.

        """

        # Define the half-period endpoints beyond u = 1.
        j0 = int(numpy.floor(1.0 / self.half_period - self.offset)) + 1
        ends = (j0 + numpy.arange(self.segments) + self.offset) * self.half_period
        ends = ends[ends > 1.0 + 1.0e-12 * self.half_period]

        return numpy.concatenate([[1.0], ends[: self.segments]])


# ----


@dataclass
class OscillatoryResult:
    """
    Description
    -----------

    This is the data-class containing the evaluator result: `value`
    from the plan at offset 0, `alternate` from the plan at offset
    1/2, the averaging error estimate and the recorded tail bound.
    `agree` is False when the two segmentations differ by more than
    the tolerance.

    """

    value: complex
    alternate: complex
    error: float
    tail_bound: float
    agree: bool
    plan: OscillatoryPlan

    @property
    def difference(self: Generic) -> float:
        """The disagreement between the two segmentations."""
        return float(abs(self.value - self.alternate))


# ----


def __u_integrand__(amplitude: Callable, k: int) -> Callable:
    """
    Description
    -----------

    This function returns u -> exp(i k u) a(1/u) u^(-2).

    """

    # Define the integrand.
    def func(u: numpy.ndarray) -> numpy.ndarray:
        u = numpy.asarray(u, dtype=float)
        amp = numpy.asarray(amplitude(1.0 / u.reshape(-1)), dtype=complex)
        return (numpy.exp(1j * k * u.reshape(-1)) * amp / u.reshape(-1) ** 2).reshape(
            u.shape
        )

    return func


# ----


def __panel_sums__(
    func: Callable, left: numpy.ndarray, right: numpy.ndarray, panels: int
) -> numpy.ndarray:
    """
    Description
    -----------

    This function integrates `func` over each [left, right] interval
    with `panels` equal Gauss-Legendre panels.

    """

    # Build the panel nodes.
    (x, w) = roots_legendre(GL_SEGMENT_NODES)
    frac = numpy.arange(panels + 1, dtype=float) / panels
    breaks = left[:, None] + frac[None, :] * (right - left)[:, None]
    (a, b) = (breaks[:, :-1, None], breaks[:, 1:, None])
    u = 0.5 * (b - a) * (x[None, None, :] + 1.0) + a
    wts = 0.5 * (b - a) * w[None, None, :]

    return numpy.sum(wts * func(u), axis=(1, 2))


# ----


def __first_segment__(func: Callable, end: float) -> complex:
    """
    Description
    -----------

    This function integrates `func` over [1, end] with panels graded
    geometrically toward u = 1, where the amplitude may carry an
    algebraic endpoint singularity.

    """

    # Define the graded breakpoints.
    frac = 2.0 ** (-numpy.arange(FIRST_SEGMENT_LEVELS, -1, -1, dtype=float))
    breaks = numpy.concatenate([[1.0], 1.0 + (end - 1.0) * frac])

    return complex(numpy.sum(__panel_sums__(func, breaks[:-1], breaks[1:], panels=1)))


# ----


def __adaptive_sums__(
    func: Callable, left: numpy.ndarray, right: numpy.ndarray
) -> numpy.ndarray:
    """
    Description
    -----------

    This function integrates `func` over each [left, right] interval
    with the adaptive QUADPACK routine (real and imaginary parts).

    """

    # Integrate each segment.
    sums = numpy.zeros(left.size, dtype=complex)
    for idx, (a, b) in enumerate(zip(left, right)):
        (re, _) = integrate.quad(
            lambda u: func(u).real, a, b, epsabs=1.0e-15, epsrel=1.0e-12, limit=200
        )
        (im, _) = integrate.quad(
            lambda u: func(u).imag, a, b, epsabs=1.0e-15, epsrel=1.0e-12, limit=200
        )
        sums[idx] = complex(re, im)

    return sums


# ----


def __run_plan__(
    amplitude: Callable, plan: OscillatoryPlan, panels: int, adaptive: bool
) -> tuple:
    """
    Description
    -----------

    This function evaluates a plan and returns the averaged value,
    the averaging error estimate and the tail bound.

    """

    # Integrate the segments.
    func = __u_integrand__(amplitude=amplitude, k=plan.k)
    ends = plan.endpoints()
    if adaptive:
        segs = __adaptive_sums__(func, ends[:-1], ends[1:])
    else:
        segs = numpy.empty(ends.size - 1, dtype=complex)
        segs[0] = __first_segment__(func, end=ends[1])
        segs[1:] = __panel_sums__(func, ends[1:-1], ends[2:], panels=panels)

    # Average the final partial sums.
    partial = numpy.cumsum(segs)[-(plan.depth + 1) :]
    for _ in range(plan.depth - 1):
        partial = 0.5 * (partial[:-1] + partial[1:])
    error = float(0.5 * abs(partial[1] - partial[0]))
    value = complex(0.5 * (partial[0] + partial[1]))

    # Record the tail bound 2 |a(1/U)| / (|k| U^2) beyond the last
    # endpoint U.
    umax = ends[-1]
    tail = float(
        2.0 * abs(complex(numpy.asarray(amplitude(numpy.array([1.0 / umax])))[0]))
        / (abs(plan.k) * umax**2)
    )

    return (value, error, tail)


# ----


def oscillatory_integral(
    amplitude: Callable,
    k: int,
    alpha: float = 0.0,
    tol: float = 1.0e-8,
    depth: int = 12,
    panels: int = 1,
    adaptive: bool = False,
    segments: int = None,
) -> OscillatoryResult:
    """
    Description
    -----------

    This function evaluates int_0^1 exp(i k/s) a(s) ds by two
    independent half-period segmentations (phase offsets 0 and 1/2);
    a disagreement beyond `tol` is logged and flagged, and both
    values are reported.

    Parameters
    ----------

    amplitude: ``Callable``

        A Python function mapping a numpy float array of s values in
        (0, 1] to amplitude values.

    k: ``int``

        A Python integer specifying the nonzero frequency.

    Keywords
    --------

    alpha: ``float``, optional

        A Python float specifying the Jacobi exponent of the
        amplitude; it sets the segment count.

    tol: ``float``, optional

        A Python float specifying the agreement tolerance.

    depth: ``int``, optional

        A Python integer specifying the averaging depth.

    panels: ``int``, optional

        A Python integer specifying the Gauss-Legendre panels per
        segment.

    adaptive: ``bool``, optional

        A Python boolean valued variable specifying whether each
        segment is integrated adaptively; use for sharply peaked
        amplitudes.

    segments: ``int``, optional

        A Python integer overriding the segment count.

    Returns
    -------

    result: ``OscillatoryResult``

        A Python OscillatoryResult object.

    Raises
    ------

    OscillatoryInterfaceError:

        - raised if the evaluated value is not finite.

    """

    # Define the plans.
    if segments is None:
        segments = int(
            numpy.ceil(abs(k) * (SEGMENT_BASE + 8.0 * (alpha + 1.0) / numpy.pi))
        )
        segments = min(segments, SEGMENT_CAP * abs(int(k)))
    plans = [
        OscillatoryPlan(
            alpha=alpha, k=int(k), segments=segments, depth=depth, offset=offset
        )
        for offset in (0.0, 0.5)
    ]

    # Evaluate both segmentations.
    (value, error, tail) = __run_plan__(amplitude, plans[0], panels, adaptive)
    (alternate, _, _) = __run_plan__(amplitude, plans[1], panels, adaptive)
    if not (numpy.isfinite(value) and numpy.isfinite(alternate)):
        msg = f"The oscillatory integral (k = {k}) is not finite. Aborting!!!"
        raise OscillatoryInterfaceError(msg=msg)
    agree = bool(abs(value - alternate) <= tol)
    if not agree:
        msg = (
            f"Oscillatory segmentations disagree (k = {k}, alpha = {alpha:g}): "
            f"{value:.12g} vs {alternate:.12g}."
        )
        logger.warn(msg=msg)
    result = OscillatoryResult(
        value=value,
        alternate=alternate,
        error=error,
        tail_bound=tail,
        agree=agree,
        plan=plans[0],
    )

    return result


# ----


def oscillatory_gamma0(alpha: float, tol: float = 1.0e-8) -> OscillatoryResult:
    """
    Description
    -----------

    This function evaluates the lowest Toeplitz eigenvalue of the
    radial symbol exp(i/|z|^2) on the disk,

        gamma_0 = (alpha + 1) int_0^1 exp(i/s) (1 - s)^alpha ds,

    which satisfies |gamma_0| <= 1.

    Parameters
    ----------

    alpha: ``float``

        A Python float specifying the Jacobi exponent lam - 2; > -1.

    Keywords
    --------

    tol: ``float``, optional

        A Python float specifying the agreement tolerance.

    Returns
    -------

    result: ``OscillatoryResult``

        A Python OscillatoryResult object.

    """

    # Evaluate the integral.
    def amplitude(s: numpy.ndarray) -> numpy.ndarray:
        return (alpha + 1.0) * numpy.exp(xlog1py(alpha, -numpy.minimum(s, 1.0)))

    return oscillatory_integral(amplitude=amplitude, k=1, alpha=alpha, tol=tol)


# ----


def fourier_oracle(amplitude: Callable, k: int = 1) -> complex:
    """
    Description
    -----------

    This function evaluates int_1^oo exp(i k u) a(1/u) u^(-2) du with
    the QUADPACK Fourier-weight routine (QAWF); the amplitude must be
    smooth on [1, oo).

    Parameters
    ----------

    amplitude: ``Callable``

        A Python function mapping a numpy float array of s values to
        real amplitude values.

    Keywords
    --------

    k: ``int``, optional

        A Python integer specifying the nonzero frequency.

    Returns
    -------

    value: ``complex``

        A Python complex containing the oracle value.

    """

    # Integrate the cosine and sine parts.
    def func(u: float) -> float:
        return float(numpy.real(amplitude(numpy.array([1.0 / u]))[0])) / u**2

    (re, _) = integrate.quad(func, 1.0, numpy.inf, weight="cos", wvar=abs(k))
    (im, _) = integrate.quad(func, 1.0, numpy.inf, weight="sin", wvar=abs(k))

    return complex(re, numpy.sign(k) * im)
