"""
Module
------

    estimates_interface.py

Description
-----------

    This module contains the numerical audits of the kernel integral
    estimate

        int h(w,w)^(a-p) |h(z,w)|^(-(a+t)) dv(w) <= C h(z,z)^(-t)

    and of the growth bound sqrt(lam) beta(0,z) <= C h(z,z)^(-rho lam)
    on the unit ball; both report sampled constants.

Classes
-------

    ForelliRudinReport

        This is the data-class containing the kernel integral audit
        attributes.

    GrowthReport

        This is the data-class containing the growth bound audit
        attributes.

Functions
---------

    forelli_rudin_audit(n, a, t, radii, degree=96, tol=1.0e-6)

        This function audits the kernel integral estimate on a radial
        grid.

    forelli_rudin_lhs(n, a, t, radii)

        This function evaluates the left-hand side integral by its
        hypergeometric series.

    growth_audit(lambdas, rho, n=1, nradii=2000, rmax=0.999)

        This function audits the growth bound on a radial grid.

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

# ----

from dataclasses import dataclass, field
from typing import List, Sequence

import numpy
from scipy.special import hyp2f1

from bergman.geometry_interface import Weight, jordan_h, log_c_lambda
from bergman.quadrature_interface import build_rule
from utils.exceptions_interface import GeometryInterfaceError
from utils.logger_interface import Logger

# ----

# Define all available module properties.
__all__ = [
    "ForelliRudinReport",
    "GrowthReport",
    "forelli_rudin_audit",
    "forelli_rudin_lhs",
    "growth_audit",
]

# ----

logger = Logger(caller_name=__name__)

# ----


@dataclass
class ForelliRudinReport:
    """
    Description
    -----------

    This is the data-class containing the kernel integral audit
    attributes; `ratios` are LHS(z) h(z,z)^t from the series and
    `quadrature_ratios` the product-rule cross-check.

    """

    n: int
    a: float
    t: float
    radii: List[float]
    ratios: List[float]
    quadrature_ratios: List[float]
    relative_differences: List[float]
    underresolved: List[bool]
    sup_ratio: float = field(default=float("nan"))

    @property
    def finite(self) -> bool:
        """Whether the sampled supremum is finite."""
        return bool(numpy.isfinite(self.sup_ratio))


# ----


@dataclass
class GrowthReport:
    """
    Description
    -----------

    This is the data-class containing the growth bound audit
    attributes; `sup_ratios[k]` is the sampled supremum for
    `lambdas[k]`.

    """

    rho: float
    lambdas: List[float]
    sup_ratios: List[float]
    argmax_radii: List[float]

    @property
    def constant(self) -> float:
        """The sampled constant over all lambdas."""
        return float(numpy.max(self.sup_ratios))


# ----


def __check__(n: int, a: float, t: float) -> None:
    """
    Description
    -----------

    This function checks the audit parameters.

    """

    # Check the parameters; proceed accordingly.
    if not t > 0.0:
        msg = f"The kernel integral estimate requires t > 0; received t = {t}. Aborting!!!"
        raise GeometryInterfaceError(msg=msg)
    if not a > n:
        msg = f"The kernel integral estimate requires a > p - 1 = {n}; received a = {a}. Aborting!!!"
        raise GeometryInterfaceError(msg=msg)


# ----


def forelli_rudin_lhs(n: int, a: float, t: float, radii: Sequence) -> numpy.ndarray:
    """
    Description
    -----------

    This function evaluates the left-hand side integral by expanding
    |h(z,w)|^(-2s), s = (a + t)/2, in powers of <z,w>; with
    int |<z,w>|^(2k) dv_a = |z|^(2k) k! Gamma(a) / Gamma(a + k) the
    series sums to 2F1(s, s; a; |z|^2) / c_a.

    Parameters
    ----------

    n: ``int``

        A Python integer specifying the complex dimension.

    a: ``float``

        A Python float specifying the weight exponent; a > n.

    t: ``float``

        A Python float specifying the excess exponent; t > 0.

    radii: ``Sequence``

        A Python sequence of radii |z| in [0, 1).

    Returns
    -------

    lhs: ``numpy.ndarray``

        A numpy float array of left-hand side values.

    """

    # Evaluate the hypergeometric series.
    __check__(n=n, a=a, t=t)
    r2 = numpy.asarray(radii, dtype=float) ** 2
    s = 0.5 * (a + t)
    lhs = hyp2f1(s, s, a, r2) * numpy.exp(-log_c_lambda(n=n, lam=a))

    return lhs


# ----


def forelli_rudin_audit(
    n: int,
    a: float,
    t: float,
    radii: Sequence,
    degree: int = 96,
    tol: float = 1.0e-6,
) -> ForelliRudinReport:
    """
    Description
    -----------

    This function audits the kernel integral estimate on a radial
    grid; the ratio LHS(z) h(z,z)^t is computed from the series and
    cross-checked against the product rule of the specified degree.
    A relative difference above `tol` flags the radius as
    under-resolved by the rule.

    Parameters
    ----------

    n: ``int``

        A Python integer specifying the complex dimension.

    a: ``float``

        A Python float specifying the weight exponent; a > n.

    t: ``float``

        A Python float specifying the excess exponent; t > 0.

    radii: ``Sequence``

        A Python sequence of radii |z| in [0, 1).

    Keywords
    --------

    degree: ``int``, optional

        A Python integer specifying the product rule degree.

    tol: ``float``, optional

        A Python float specifying the cross-check tolerance.

    Returns
    -------

    report: ``ForelliRudinReport``

        A Python ForelliRudinReport object.

    """

    # Compute the series ratios.
    radii = [float(r) for r in radii]
    lhs = forelli_rudin_lhs(n=n, a=a, t=t, radii=radii)
    ratios = lhs * (1.0 - numpy.asarray(radii) ** 2) ** t

    # Cross-check against the product rule; the integrand is taken
    # against dv_a and divided by c_a.
    weight = Weight(n=n, lam=a)
    rule = build_rule(n=n, weight=weight, target_degree=degree)
    qratios = []
    for r in radii:
        z = numpy.zeros(n, dtype=complex)
        z[0] = r
        vals = numpy.abs(jordan_h(z=z, w=rule.points)) ** (-(a + t))
        qlhs = float(numpy.sum(rule.weights * vals)) * numpy.exp(-weight.log_c_lambda)
        qratios.append(qlhs * (1.0 - r**2) ** t)
    qratios = numpy.asarray(qratios)
    reldiff = numpy.abs(qratios - ratios) / numpy.abs(ratios)
    underresolved = [bool(item > tol) for item in reldiff]
    for r, flag, diff in zip(radii, underresolved, reldiff):
        if flag:
            msg = (
                f"Kernel integral quadrature under-resolved at |z| = {r:g} "
                f"(a = {a:g}, t = {t:g}, relative difference {diff:.3e})."
            )
            logger.warn(msg=msg)
    report = ForelliRudinReport(
        n=n,
        a=float(a),
        t=float(t),
        radii=radii,
        ratios=ratios.tolist(),
        quadrature_ratios=qratios.tolist(),
        relative_differences=reldiff.tolist(),
        underresolved=underresolved,
        sup_ratio=float(numpy.max(ratios)),
    )

    return report


# ----


def growth_audit(
    lambdas: Sequence,
    rho: float,
    n: int = 1,
    nradii: int = 2000,
    rmax: float = 0.999,
) -> GrowthReport:
    """
    Description
    -----------

    This function audits the growth bound
    sqrt(lam) beta(0,z) <= C h(z,z)^(-rho lam) by sampling the ratio
    sqrt(lam) arctanh(r) (1 - r^2)^(rho lam) on [0, rmax].

    Parameters
    ----------

    lambdas: ``Sequence``

        A Python sequence of weight parameters.

    rho: ``float``

        A Python float specifying the exponent factor; > 0.

    Keywords
    --------

    n: ``int``, optional

        A Python integer specifying the complex dimension.

    nradii: ``int``, optional

        A Python integer specifying the number of sampled radii.

    rmax: ``float``, optional

        A Python float specifying the largest sampled radius.

    Returns
    -------

    report: ``GrowthReport``

        A Python GrowthReport object.

    Raises
    ------

    GeometryInterfaceError:

        - raised if `rho` is not positive.

    """

    # Check the exponent factor.
    if not rho > 0.0:
        msg = f"The growth bound requires rho > 0; received {rho}. Aborting!!!"
        raise GeometryInterfaceError(msg=msg)

    # Sample the ratios.
    r = numpy.linspace(0.0, rmax, nradii)
    (sups, argmax) = ([], [])
    for lam in lambdas:
        Weight(n=n, lam=lam)
        ratio = numpy.sqrt(lam) * numpy.arctanh(r) * (1.0 - r**2) ** (rho * lam)
        idx = int(numpy.argmax(ratio))
        sups.append(float(ratio[idx]))
        argmax.append(float(r[idx]))
    report = GrowthReport(
        rho=float(rho),
        lambdas=[float(lam) for lam in lambdas],
        sup_ratios=sups,
        argmax_radii=argmax,
    )

    return report
