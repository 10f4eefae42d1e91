"""
Module
------

    audit_interface.py

Description
-----------

    This module contains the inequality audits: for every weight of
    the schedule each audited inequality is evaluated on sampled
    points or pairs, and one row reports its sampled constant. An
    audit passes when the inequality holds on every sample and its
    sampled constant varies by at most a factor of 2 across the
    schedule.

Functions
---------

    audit_rows(f, weight, cfg)

        This function evaluates all audits for a single weight.

    check_constants(rows, series, uniform=True)

        This function asserts an audit series.

    run_inequality_audit(cfg)

        This function runs the inequality audits over the schedule.

Requirements
------------

- numpy; https://numpy.org/

Author(s)
---------

    Henry R. Winterbottom; 02 March 2024

History
-------

    2024-03-02: Henry Winterbottom -- Initial implementation.

"""

# ----

# pylint: disable=invalid-name
# pylint: disable=too-many-locals

# ----

from typing import Dict, List, Sequence

import numpy

from bergman import symbols_interface
from bergman.estimates_interface import forelli_rudin_audit, growth_audit
from bergman.geometry_interface import Weight, beta_lambda, c_ratio
from bergman.linalg_interface import operator_norm
from bergman.operators_interface import build_basis, hankel_norm, toeplitz_matrix
from bergman.oscillation_interface import (
    EvaluationGrid,
    berezin,
    bmo_bo_lipschitz_audit,
    bo_seminorm,
    mo_average_bound_audit,
)
from bergman.symbols_interface import BOUNDED, Symbol
from experiments.config_interface import SweepConfig
from experiments.results_interface import (
    SweepResult,
    SweepRow,
    TrendCheck,
    collect_rows,
)
from utils.logger_interface import Logger

# ----

# Define all available module properties.
__all__ = ["AUDITS", "audit_rows", "check_constants", "run_inequality_audit"]

# ----

logger = Logger(caller_name=__name__)

AUDITS = (
    "forelli_rudin",
    "growth",
    "hankel_bo",
    "lipschitz",
    "triangular",
    "toeplitz_schur",
    "hankel_schur",
    "mo_average",
    "global_bo",
)

# The kernel integral audit constant grows with the weight; only its
# finiteness is asserted.
NONUNIFORM = ("forelli_rudin",)

FORELLI_RUDIN_T = 1.0
FORELLI_RUDIN_RMAX = 0.9
MO_AVERAGE_RHO = 1.0
GLOBAL_BO_PAIRS = 200
LIPSCHITZ_PAIRS = 50
CONSTANT_GROWTH = 2.0
SLACK = 1.0e-8

# ----


def __row__(
    name: str,
    f: Symbol,
    weight: Weight,
    constant: float,
    holds: bool,
    cfg: SweepConfig,
    **details,
) -> SweepRow:
    """The SweepRow of an audit."""
    details["holds"] = bool(holds)
    return SweepRow(
        experiment=f"audit:{name}",
        f=f.id,
        g="",
        lam=weight.lam,
        N=cfg.N if name in ("toeplitz_schur", "hankel_schur", "hankel_bo") else None,
        M=cfg.M if name in ("hankel_schur", "hankel_bo") else None,
        value=float(constant),
        grid=cfg.grid_spec,
        details=details,
    )


# ----


def __ratio__(lhs: float, rhs: float) -> float:
    """The sampled constant lhs/rhs, 0 for a vanishing bound side."""
    if not (numpy.isfinite(lhs) and numpy.isfinite(rhs)):
        return float("nan")
    return float(lhs / rhs) if rhs > SLACK else 0.0


# ----


def __berezin_half_sup__(f: Symbol, weight: Weight, grid: EvaluationGrid) -> float:
    """The sampled sup of B_(lam/2)(|f|) over the grid."""
    half = Weight(n=weight.n, lam=0.5 * weight.lam)
    mod = symbols_interface.modulus(f)
    return max(berezin(f=mod, weight=half, z=z).real for z in grid.points_for(f=mod))


# ----


def __schur_rows__(
    f: Symbol, weight: Weight, grid: EvaluationGrid, cfg: SweepConfig
) -> List[SweepRow]:
    """
    Description
    -----------

    This function audits the Schur test bounds

        ||T_f||, ||H_f|| <= (c_lam / c_(lam/2)) sqrt(||f||_inf ||B_(lam/2)(|f|)||_inf)

    for bounded symbols and lam / 2 > n.

    """

    # Check the applicability.
    if not f.has(BOUNDED) or 0.5 * weight.lam <= weight.n:
        return []

    # Evaluate both sides.
    half_sup = __berezin_half_sup__(f=f, weight=weight, grid=grid)
    scale = numpy.sqrt(f.sup_bound * half_sup)
    cratio = c_ratio(n=weight.n, lam1=weight.lam, lam2=0.5 * weight.lam)
    basis = build_basis(n=weight.n, max_degree=cfg.N)
    rows = []
    toeplitz = toeplitz_matrix(f=f, weight=weight, basis=basis)
    for name, lhs in (
        ("toeplitz_schur", operator_norm(toeplitz.entries)),
        ("hankel_schur", hankel_norm(f=f, weight=weight, N=cfg.N, M=cfg.M)),
    ):
        rows.append(
            __row__(
                name=name,
                f=f,
                weight=weight,
                constant=__ratio__(lhs=lhs, rhs=scale),
                holds=lhs <= cratio * scale + SLACK,
                cfg=cfg,
                lhs=lhs,
                scale=float(scale),
                c_ratio=cratio,
            )
        )

    return rows


# ----


def __hankel_bo_row__(
    f: Symbol, weight: Weight, cfg: SweepConfig, bo: float
) -> List[SweepRow]:
    """
    Description
    -----------

    This function audits ||H_f|| <= C ||f||_BO for lam > 4p with

        C = (1 + sup sqrt(lam) beta(0,z) h(z,z)^(lam/4) / sqrt(p)) c_lam / c_(lam/4).

    """

    # Check the applicability.
    if weight.lam <= 4 * weight.p:
        msg = f"Skipping the Hankel-BO audit at lambda = {weight.lam:g} <= 4p."
        logger.warn(msg=msg)
        return []

    # Evaluate both sides.
    lhs = hankel_norm(f=f, weight=weight, N=cfg.N, M=cfg.M)
    growth = growth_audit(lambdas=[weight.lam], rho=0.25, n=weight.n).constant
    constant = (1.0 + growth / numpy.sqrt(weight.p)) * c_ratio(
        n=weight.n, lam1=weight.lam, lam2=0.25 * weight.lam
    )
    row = __row__(
        name="hankel_bo",
        f=f,
        weight=weight,
        constant=__ratio__(lhs=lhs, rhs=bo),
        holds=lhs <= constant * bo + SLACK,
        cfg=cfg,
        lhs=lhs,
        bo=bo,
        bound_constant=float(constant),
    )

    return [row]


# ----


def __global_bo_row__(
    f: Symbol, weight: Weight, grid: EvaluationGrid, cfg: SweepConfig, bo: float
) -> SweepRow:
    """
    Description
    -----------

    This function audits |f(z) - f(w)| <= ||f||_BO (1 + beta_lam(z,w))
    over seeded random grid pairs.

    """

    # Sample the pairs.
    points = grid.points
    rng = numpy.random.default_rng(cfg.seed)
    pairs = rng.choice(points.shape[0], size=(GLOBAL_BO_PAIRS, 2), replace=True)
    (z, w) = (points[pairs[:, 0]], points[pairs[:, 1]])
    lhs = numpy.abs(numpy.asarray(f.evaluate(z)) - numpy.asarray(f.evaluate(w)))
    rhs = bo * (1.0 + beta_lambda(weight=weight, z=z, w=w))
    constant = float(numpy.max(lhs / rhs)) if bo > SLACK else 0.0

    return __row__(
        name="global_bo",
        f=f,
        weight=weight,
        constant=constant,
        holds=bool(numpy.all(lhs <= rhs + SLACK)),
        cfg=cfg,
        lhs_max=float(lhs.max()),
        bo=bo,
        npairs=GLOBAL_BO_PAIRS,
    )


# ----


def audit_rows(f: Symbol, weight: Weight, cfg: SweepConfig) -> List[SweepRow]:
    """
    Description
    -----------

    This function evaluates every applicable audit for a single
    weight.

    Parameters
    ----------

    f: ``Symbol``

        A Python Symbol object.

    weight: ``Weight``

        A Python Weight object.

    cfg: ``SweepConfig``

        A Python SweepConfig object.

    Returns
    -------

    rows: ``List[SweepRow]``

        A Python list of SweepRow objects, one per applicable audit.

    """

    # Kernel integral and growth bounds.
    grid = cfg.grid
    radii = grid.radii[grid.radii <= FORELLI_RUDIN_RMAX]
    report = forelli_rudin_audit(
        n=weight.n, a=weight.lam, t=FORELLI_RUDIN_T, radii=radii
    )
    rows = [
        __row__(
            name="forelli_rudin",
            f=f,
            weight=weight,
            constant=report.sup_ratio,
            holds=report.finite,
            cfg=cfg,
            t=FORELLI_RUDIN_T,
            underresolved=sum(report.underresolved),
        )
    ]
    growth = growth_audit(lambdas=[weight.lam], rho=cfg.rho, n=weight.n)
    rows.append(
        __row__(
            name="growth",
            f=f,
            weight=weight,
            constant=growth.constant,
            holds=numpy.isfinite(growth.constant),
            cfg=cfg,
            rho=cfg.rho,
            argmax_radius=growth.argmax_radii[0],
        )
    )

    # Oscillation bounds.
    bo = bo_seminorm(f=f, weight=weight, grid=grid).value
    rows += __hankel_bo_row__(f=f, weight=weight, cfg=cfg, bo=bo)
    lipschitz = bmo_bo_lipschitz_audit(
        g=f, weight=weight, grid=grid, npairs=LIPSCHITZ_PAIRS, seed=cfg.seed
    )
    rows += [
        __row__(
            name="lipschitz",
            f=f,
            weight=weight,
            constant=lipschitz.lipschitz_constant,
            holds=lipschitz.lipschitz_holds,
            cfg=cfg,
            bmo=lipschitz.bmo,
            npairs=lipschitz.npairs,
        ),
        __row__(
            name="triangular",
            f=f,
            weight=weight,
            constant=lipschitz.triangular_constant,
            holds=numpy.isfinite(lipschitz.triangular_constant),
            cfg=cfg,
            bmo=lipschitz.bmo,
        ),
    ]

    # Schur test, mean oscillation and global oscillation bounds.
    rows += __schur_rows__(f=f, weight=weight, grid=grid, cfg=cfg)
    mo = mo_average_bound_audit(f=f, weight=weight, rho=MO_AVERAGE_RHO, grid=grid)
    rows.append(
        __row__(
            name="mo_average",
            f=f,
            weight=weight,
            constant=mo.constant,
            holds=mo.holds,
            cfg=cfg,
            max_violation=mo.max_violation,
            rho=MO_AVERAGE_RHO,
        )
    )
    rows.append(__global_bo_row__(f=f, weight=weight, grid=grid, cfg=cfg, bo=bo))

    return rows


# ----


def check_constants(
    rows: Sequence[SweepRow], series: str, uniform: bool = True
) -> TrendCheck:
    """
    Description
    -----------

    This function asserts that an audit holds on every row and, when
    `uniform`, that its sampled constant does not grow along the
    schedule: no constant exceeds twice the largest of the first row
    and SLACK. Constants may decay. Non-finite constants fail.

    Parameters
    ----------

    rows: ``Sequence[SweepRow]``

        A Python sequence of SweepRow objects of the audit.

    series: ``str``

        A Python string specifying the audit series name.

    Keywords
    --------

    uniform: ``bool``, optional

        A Python boolean valued variable specifying whether the
        constant growth is asserted.

    Returns
    -------

    check: ``TrendCheck``

        A Python TrendCheck object.

    """

    # Assert the audit.
    ordered = sorted(rows, key=lambda row: row.lam)
    holds = all(row.details.get("holds", False) for row in ordered)
    constants = numpy.array([row.value for row in ordered], dtype=float)
    finite = bool(numpy.all(numpy.isfinite(constants)))
    growth = 1.0
    if uniform and finite and constants.size > 0:
        growth = float(constants.max() / max(constants[0], SLACK))
    passed = bool(holds and finite and growth <= CONSTANT_GROWTH)
    label = "holds" if not uniform else f"holds, constant growth <= {CONSTANT_GROWTH:g}"
    detail = f"holds = {holds}, finite = {finite}, growth = {growth:.3f}"
    if not passed:
        msg = f"Audit assertion failed for {series}: {detail}."
        logger.warn(msg=msg)

    return TrendCheck(series=series, expectation=label, passed=passed, detail=detail)


# ----


def run_inequality_audit(cfg: SweepConfig) -> SweepResult:
    """
    Description
    -----------

    This function runs the inequality audits for the symbol `cfg.f`
    over the weight schedule.

    Parameters
    ----------

    cfg: ``SweepConfig``

        A Python SweepConfig object.

    Returns
    -------

    result: ``SweepResult``

        A Python SweepResult object.

    """

    # Compute the rows.
    f = cfg.symbol(cfg.f)
    rows = collect_rows(
        lambdas=cfg.lambdas,
        func=lambda lam: audit_rows(f=f, weight=Weight(n=cfg.n, lam=lam), cfg=cfg),
        workers=cfg.workers,
    )
    result = SweepResult(
        config=cfg.provenance(), rows=rows, trends=[], grid=cfg.grid.metadata()
    )

    # Assert the audits.
    series: Dict[str, List[SweepRow]] = {}
    for row in rows:
        series.setdefault(row.experiment, []).append(row)
    result.trends = [
        check_constants(
            rows=items,
            series=name,
            uniform=name.split(":", 1)[1] not in NONUNIFORM,
        )
        for (name, items) in series.items()
    ]

    return result
