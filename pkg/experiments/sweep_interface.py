"""
Module
------

    sweep_interface.py

Description
-----------

    This module contains the weight sweeps: for every weight of the
    schedule a row of operator norms, Berezin deviations or BMO
    semi-norms is computed (in parallel, merged in weight order) and
    the expected trends, derived from the symbol class tags, are
    asserted on the reliable rows.

Functions
---------

    check_persistence(rows, series, floor=None, ratio=None, min_lam=None)

        This function asserts that a row series does not decay.

    check_trend(rows, series, expectation, ratio=None)

        This function asserts a trend along a row series.

    run(cfg)

        This function runs the configured experiment.

    run_berezin_convergence(cfg)

        This function sweeps sup-grid |B f - f|.

    run_block_decomposition(cfg)

        This function runs the block decomposition check.

    run_bmo_sweep(cfg)

        This function sweeps the BMO semi-norm.

    run_counterexample(cfg)

        This function sweeps the counterexample quantities.

    run_hankel_sweep(cfg)

        This function sweeps the truncated Hankel norm.

    run_products_sweep(cfg)

        This function sweeps the product deviation norm.

    run_semicommutator_sweep(cfg)

        This function sweeps the semi-commutator norm.

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

# ----

from typing import Callable, Dict, List, Optional, Sequence

import numpy

from bergman import symbols_interface
from bergman.geometry_interface import Weight
from bergman.linalg_interface import operator_norm
from bergman.operators_interface import (
    block_decomposition_check,
    build_basis,
    hankel_norm,
    product_deviation,
    radial_eigenvalues,
    semicommutator,
    toeplitz_matrix,
)
from bergman.oscillation_interface import berezin, bmo_seminorm, mean_oscillation
from bergman.oscillatory_interface import oscillatory_gamma0
from bergman.symbols_interface import (
    BUC,
    COUNTEREXAMPLE,
    HOLOMORPHIC,
    UC,
    VMO,
    Symbol,
)
from experiments import audit_interface
from experiments.config_interface import SweepConfig
from experiments.results_interface import (
    SweepResult,
    SweepRow,
    TrendCheck,
    collect_rows,
)
from utils.exceptions_interface import SweepInterfaceError
from utils.logger_interface import Logger

# ----

# Define all available module properties.
__all__ = [
    "check_persistence",
    "check_trend",
    "run",
    "run_berezin_convergence",
    "run_block_decomposition",
    "run_bmo_sweep",
    "run_counterexample",
    "run_hankel_sweep",
    "run_products_sweep",
    "run_semicommutator_sweep",
]

# ----

logger = Logger(caller_name=__name__)

# Truncation increment of the diag_N_delta diagnostic.
DIAG_N_STEP = 4

# Series whose first reliable value is below this are asserted to
# stay below it.
NEGLIGIBLE = 1.0e-8

# Block decomposition thresholds.
FACTORIZATION_TOL = 1.0e-10
CROSS_BLOCK_TOL = 1.0e-8

# Counterexample Berezin deviation at the origin, asserted from this
# weight on.
COUNTEREXAMPLE_LAMBDA = 128.0
COUNTEREXAMPLE_FLOOR = 0.8

# ----


def check_trend(
    rows: Sequence[SweepRow],
    series: str,
    expectation: str,
    ratio: Optional[float] = None,
) -> TrendCheck:
    """
    Description
    -----------

    This function asserts a trend along the reliable rows of a
    series ordered by weight; `nonincreasing` allows the row
    diagnostics as slack, `decreasing` and `increasing` are strict.
    When `ratio` is given the last value must be below `ratio` times
    the first. A series whose first value is negligible must remain
    negligible.

    Parameters
    ----------

    rows: ``Sequence[SweepRow]``

        A Python sequence of SweepRow objects of the series.

    series: ``str``

        A Python string specifying the series name.

    expectation: ``str``

        A Python string specifying the trend; `nonincreasing`,
        `decreasing` or `increasing`.

    Keywords
    --------

    ratio: ``float``, optional

        A Python float specifying the last-to-first ratio bound.

    Returns
    -------

    check: ``TrendCheck``

        A Python TrendCheck object.

    Raises
    ------

    SweepInterfaceError:

        - raised for an unknown expectation.

    """

    # Collect the reliable rows.
    if expectation not in ("nonincreasing", "decreasing", "increasing"):
        msg = f"Unknown trend expectation {expectation}. Aborting!!!"
        raise SweepInterfaceError(msg=msg)
    reliable = sorted(
        (row for row in rows if row.reliable), key=lambda row: row.lam
    )
    values = numpy.array([row.value for row in reliable])
    label = expectation if ratio is None else f"{expectation}, last < {ratio:g} x first"
    finite = all(numpy.isfinite(row.value) for row in rows)
    if not finite or (values.size < 2 and len(rows) >= 2):
        detail = (
            "non-finite row values"
            if not finite
            else f"{values.size} of {len(rows)} rows reliable"
        )
        msg = f"Trend assertion failed for {series} ({label}): {detail}."
        logger.warn(msg=msg)
        return TrendCheck(
            series=series, expectation=label, passed=False, detail=detail
        )
    if values.size < 2:
        return TrendCheck(
            series=series, expectation=label, passed=True, detail="single row"
        )

    # Assert the trend; proceed accordingly.
    if expectation != "increasing" and values[0] <= NEGLIGIBLE:
        passed = bool(numpy.all(values <= NEGLIGIBLE))
        detail = f"negligible series; max = {values.max():.3e}"
    else:
        steps = numpy.diff(values)
        if expectation == "nonincreasing":
            slack = numpy.array(
                [
                    max(a.diagnostic, b.diagnostic)
                    for (a, b) in zip(reliable, reliable[1:])
                ]
            )
            passed = bool(numpy.all(steps <= slack + 1.0e-12))
        elif expectation == "decreasing":
            passed = bool(numpy.all(steps < 0.0))
        else:
            passed = bool(numpy.all(steps > 0.0))
        detail = f"first = {values[0]:.6e}, last = {values[-1]:.6e}"
        if ratio is not None and passed:
            passed = bool(values[-1] < ratio * values[0])
    if not passed:
        msg = f"Trend assertion failed for {series} ({label}): {detail}."
        logger.warn(msg=msg)

    return TrendCheck(series=series, expectation=label, passed=passed, detail=detail)



# ----


def check_persistence(
    rows: Sequence[SweepRow],
    series: str,
    floor: Optional[float] = None,
    ratio: Optional[float] = None,
    min_lam: Optional[float] = None,
) -> TrendCheck:
    """
    Description
    -----------

    This function asserts that a row series does not decay to zero:
    every reliable row with weight at least `min_lam` must be at
    least `floor`, and the last reliable value must be at least
    `ratio` times the first.

    Parameters
    ----------

    rows: ``Sequence[SweepRow]``

        A Python sequence of SweepRow objects of the series.

    series: ``str``

        A Python string specifying the series name.

    Keywords
    --------

    floor: ``float``, optional

        A Python float specifying the absolute lower bound.

    ratio: ``float``, optional

        A Python float specifying the last-to-first lower bound.

    min_lam: ``float``, optional

        A Python float specifying the smallest weight at which `floor`
        applies.

    Returns
    -------

    check: ``TrendCheck``

        A Python TrendCheck object.

    """

    # Collect the reliable rows.
    reliable = sorted(
        (row for row in rows if row.reliable), key=lambda row: row.lam
    )
    labels = []
    if floor is not None:
        labels.append(f">= {floor:g}")
    if ratio is not None:
        labels.append(f"last >= {ratio:g} x first")
    label = "persists" + (f", {', '.join(labels)}" if labels else "")
    finite = all(numpy.isfinite(row.value) for row in rows)
    if not finite or not reliable:
        detail = "non-finite row values" if not finite else "no reliable rows"
        msg = f"Trend assertion failed for {series} ({label}): {detail}."
        logger.warn(msg=msg)
        return TrendCheck(
            series=series, expectation=label, passed=False, detail=detail
        )

    # Assert the lower bounds.
    values = numpy.array([row.value for row in reliable])
    passed = True
    if floor is not None:
        bounded = [
            row.value for row in reliable if min_lam is None or row.lam >= min_lam
        ]
        passed = all(value >= floor for value in bounded)
    if ratio is not None:
        passed = passed and bool(values[-1] >= ratio * values[0])
    detail = f"first = {values[0]:.6e}, last = {values[-1]:.6e}"
    if not passed:
        msg = f"Trend assertion failed for {series} ({label}): {detail}."
        logger.warn(msg=msg)

    return TrendCheck(series=series, expectation=label, passed=passed, detail=detail)


# ----


def __decays__(*symbols: Symbol) -> bool:
    """Whether the symbols carry a class tag implying decay."""
    return all(
        (f.has(UC) or f.has(BUC) or f.has(VMO)) and not f.has(COUNTEREXAMPLE)
        for f in symbols
    )


# ----


def __result__(
    cfg: SweepConfig,
    rows: List[SweepRow],
    trends: List[TrendCheck],
    grid: bool = False,
) -> SweepResult:
    """The SweepResult of a sweep."""
    return SweepResult(
        config=cfg.provenance(),
        rows=rows,
        trends=trends,
        grid=cfg.grid.metadata() if grid else {},
    )


# ----


def __semicommutator_norm__(
    f: Symbol, g: Symbol, weight: Weight, N: int, M: int
) -> float:
    """The norm of the truncated semi-commutator."""
    return operator_norm(semicommutator(f=f, g=g, weight=weight, N=N, M=M).entries)


# ----


def run_semicommutator_sweep(cfg: SweepConfig) -> SweepResult:
    """
    Description
    -----------

    This function sweeps ||T_f T_g - T_fg|| on the truncation; the
    diagnostic diag_N_delta is the change when N and M grow by 4.

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
    (f, g) = (cfg.symbol(cfg.f), cfg.symbol(cfg.g))

    def rows_for(lam: float) -> List[SweepRow]:
        weight = Weight(n=cfg.n, lam=lam)
        value = __semicommutator_norm__(f=f, g=g, weight=weight, N=cfg.N, M=cfg.M)
        wider = __semicommutator_norm__(
            f=f, g=g, weight=weight, N=cfg.N + DIAG_N_STEP, M=cfg.M + DIAG_N_STEP
        )
        return [
            SweepRow(
                experiment="semicommutator",
                f=f.id,
                g=g.id,
                lam=lam,
                N=cfg.N,
                M=cfg.M,
                value=value,
                diag_N_delta=abs(wider - value),
            )
        ]

    rows = collect_rows(lambdas=cfg.lambdas, func=rows_for, workers=cfg.workers)

    # Assert the trends; holomorphic second symbols are absorbed.
    trends = []
    if g.has(HOLOMORPHIC) or __decays__(f, g):
        trends.append(
            check_trend(
                rows=rows,
                series="semicommutator",
                expectation="nonincreasing",
                ratio=None if g.has(HOLOMORPHIC) else cfg.ratio,
            )
        )

    return __result__(cfg=cfg, rows=rows, trends=trends)


# ----


def run_counterexample(cfg: SweepConfig) -> SweepResult:
    """
    Description
    -----------

    This function sweeps, for a radial (oscillatory) symbol f, the
    series

        counterexample:gamma0       |gamma_0(lam)|,
        counterexample:toeplitz_one ||T_f 1||,
        counterexample:lower_bound  ||(T_conj(f) T_f - T_conj(f)f) e_0||,

    the last equal to |1 - |gamma_0|^2| for |f| = 1; on the disk the
    first is cross-checked against the direct oscillatory evaluation
    of gamma_0 (diag_path_delta).

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
    fbar = symbols_interface.conj(f)
    basis = build_basis(n=cfg.n, max_degree=cfg.N)

    def rows_for(lam: float) -> List[SweepRow]:
        weight = Weight(n=cfg.n, lam=lam)
        gamma0 = complex(radial_eigenvalues(f=f, weight=weight, max_m=0)[0])
        oracle = None
        if cfg.n == 1 and f.oscillatory:
            oracle = abs(gamma0 - oscillatory_gamma0(alpha=weight.alpha).value)
        column = toeplitz_matrix(f=f, weight=weight, basis=basis).entries[:, 0]
        toeplitz_one = float(numpy.linalg.norm(column))
        deviation = semicommutator(f=fbar, g=f, weight=weight, N=cfg.N, M=cfg.M)
        lower = float(numpy.linalg.norm(deviation.entries[:, 0]))
        details = {"gamma0": gamma0}
        return [
            SweepRow(
                experiment="counterexample:gamma0",
                f=f.id,
                g=fbar.id,
                lam=lam,
                N=None,
                M=None,
                value=abs(gamma0),
                diag_path_delta=oracle,
                details=details,
            ),
            SweepRow(
                experiment="counterexample:toeplitz_one",
                f=f.id,
                g=fbar.id,
                lam=lam,
                N=cfg.N,
                M=None,
                value=toeplitz_one,
            ),
            SweepRow(
                experiment="counterexample:lower_bound",
                f=f.id,
                g=fbar.id,
                lam=lam,
                N=cfg.N,
                M=cfg.M,
                value=lower,
                details=details,
            ),
        ]

    rows = collect_rows(lambdas=cfg.lambdas, func=rows_for, workers=cfg.workers)
    result = __result__(cfg=cfg, rows=rows, trends=[])

    # Assert the trends.
    result.trends = [
        check_trend(
            rows=result.series("counterexample:gamma0"),
            series="counterexample:gamma0",
            expectation="decreasing",
        ),
        check_trend(
            rows=result.series("counterexample:lower_bound"),
            series="counterexample:lower_bound",
            expectation="increasing",
        ),
    ]

    return result


# ----


def __alternate_path__(f: Symbol) -> Optional[str]:
    """The second Berezin path of a symbol, if one applies."""
    if f.oscillatory or f.has(COUNTEREXAMPLE):
        return None
    return "convolution" if f.radial else "kernel"


# ----


def run_berezin_convergence(cfg: SweepConfig) -> SweepResult:
    """
    Description
    -----------

    This function sweeps sup-grid |B f - f| (series `berezin`) and
    |B f(0) - f(0)| (series `berezin:origin`); diag_path_delta is the
    disagreement of the two Berezin paths at the argmax point. For a
    counterexample symbol the origin deviation must stay above 0.8 at
    large weights.

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
    grid = cfg.grid
    points = grid.points_for(f=f)
    fvals = numpy.asarray(f.evaluate(points), dtype=complex)
    alternate = __alternate_path__(f=f)

    def rows_for(lam: float) -> List[SweepRow]:
        weight = Weight(n=cfg.n, lam=lam)
        bvals = numpy.array([berezin(f=f, weight=weight, z=z) for z in points])
        deviations = numpy.abs(bvals - fvals)
        idx = int(numpy.argmax(deviations))
        diag = None
        if alternate is not None:
            other = berezin(f=f, weight=weight, z=points[idx], path=alternate)
            diag = abs(other - bvals[idx])
        details = {"argmax": points[idx], "berezin": bvals[idx]}
        return [
            SweepRow(
                experiment="berezin",
                f=f.id,
                g="",
                lam=lam,
                N=None,
                M=None,
                value=float(deviations[idx]),
                diag_path_delta=diag,
                grid=grid.spec,
                details=details,
            ),
            SweepRow(
                experiment="berezin:origin",
                f=f.id,
                g="",
                lam=lam,
                N=None,
                M=None,
                value=float(deviations[0]),
                grid=grid.spec,
                details={"berezin": bvals[0]},
            ),
        ]

    rows = collect_rows(lambdas=cfg.lambdas, func=rows_for, workers=cfg.workers)
    result = __result__(cfg=cfg, rows=rows, trends=[], grid=True)
    if f.has(UC) or f.has(BUC):
        result.trends.append(
            check_trend(
                rows=result.series("berezin"),
                series="berezin",
                expectation="nonincreasing",
            )
        )
    if f.has(COUNTEREXAMPLE):
        result.trends.append(
            check_persistence(
                rows=result.series("berezin:origin"),
                series="berezin:origin",
                floor=COUNTEREXAMPLE_FLOOR,
                min_lam=COUNTEREXAMPLE_LAMBDA,
            )
        )

    return result


# ----


def run_bmo_sweep(cfg: SweepConfig) -> SweepResult:
    """
    Description
    -----------

    This function sweeps the sampled BMO semi-norm; diag_path_delta
    is the disagreement of the variance and centered mean oscillation
    forms at the argmax point. A counterexample symbol must not decay.

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
    grid = cfg.grid

    def rows_for(lam: float) -> List[SweepRow]:
        weight = Weight(n=cfg.n, lam=lam)
        report = bmo_seminorm(f=f, weight=weight, grid=grid)
        centered = mean_oscillation(
            f=f, weight=weight, z=report.argmax, form="centered"
        )
        diag = abs(numpy.sqrt(max(centered, 0.0)) - report.value)
        return [
            SweepRow(
                experiment="bmo",
                f=f.id,
                g="",
                lam=lam,
                N=None,
                M=None,
                value=report.value,
                diag_path_delta=float(diag),
                grid=grid.spec,
                details={"argmax": report.argmax},
            )
        ]

    rows = collect_rows(lambdas=cfg.lambdas, func=rows_for, workers=cfg.workers)
    trends = []
    if __decays__(f):
        trends.append(
            check_trend(
                rows=rows, series="bmo", expectation="nonincreasing", ratio=cfg.ratio
            )
        )
    if f.has(COUNTEREXAMPLE):
        trends.append(check_persistence(rows=rows, series="bmo", ratio=cfg.ratio))

    return __result__(cfg=cfg, rows=rows, trends=trends, grid=True)


# ----


def run_products_sweep(cfg: SweepConfig) -> SweepResult:
    """
    Description
    -----------

    This function sweeps ||T_f1 ... T_fm - T_(f1 ... fm)|| on the
    truncation.

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
    symbols = [cfg.symbol(item) for item in cfg.symbols]
    label = ",".join(f.id for f in symbols)

    def norm(weight: Weight, N: int, M: int) -> float:
        return operator_norm(
            product_deviation(symbols=symbols, weight=weight, N=N, M=M).entries
        )

    def rows_for(lam: float) -> List[SweepRow]:
        weight = Weight(n=cfg.n, lam=lam)
        value = norm(weight=weight, N=cfg.N, M=cfg.M)
        wider = norm(weight=weight, N=cfg.N + DIAG_N_STEP, M=cfg.M + DIAG_N_STEP)
        return [
            SweepRow(
                experiment="products",
                f=label,
                g="",
                lam=lam,
                N=cfg.N,
                M=cfg.M,
                value=value,
                diag_N_delta=abs(wider - value),
            )
        ]

    rows = collect_rows(lambdas=cfg.lambdas, func=rows_for, workers=cfg.workers)
    trends = []
    if all(f.has(BUC) for f in symbols) and __decays__(*symbols):
        trends.append(
            check_trend(
                rows=rows,
                series="products",
                expectation="nonincreasing",
                ratio=cfg.ratio,
            )
        )

    return __result__(cfg=cfg, rows=rows, trends=trends)


# ----


def run_hankel_sweep(cfg: SweepConfig) -> SweepResult:
    """
    Description
    -----------

    This function sweeps the truncated Hankel norm ||H_f||.

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

    def rows_for(lam: float) -> List[SweepRow]:
        weight = Weight(n=cfg.n, lam=lam)
        value = hankel_norm(f=f, weight=weight, N=cfg.N, M=cfg.M)
        wider = hankel_norm(
            f=f, weight=weight, N=cfg.N + DIAG_N_STEP, M=cfg.M + DIAG_N_STEP
        )
        return [
            SweepRow(
                experiment="hankel",
                f=f.id,
                g="",
                lam=lam,
                N=cfg.N,
                M=cfg.M,
                value=value,
                diag_N_delta=abs(wider - value),
            )
        ]

    rows = collect_rows(lambdas=cfg.lambdas, func=rows_for, workers=cfg.workers)
    trends = []
    if __decays__(f):
        trends.append(
            check_trend(
                rows=rows,
                series="hankel",
                expectation="nonincreasing",
                ratio=cfg.ratio,
            )
        )

    return __result__(cfg=cfg, rows=rows, trends=trends)


# ----


def run_block_decomposition(cfg: SweepConfig) -> SweepResult:
    """
    Description
    -----------

    This function runs the block decomposition check of the
    unweighted Bergman space of the 2-ball for f(z) = c(z''), with c
    the disk symbol `cfg.f`; the weight schedule does not apply and
    the rows are reported at lam = 3.

    Parameters
    ----------

    cfg: ``SweepConfig``

        A Python SweepConfig object.

    Returns
    -------

    result: ``SweepResult``

        A Python SweepResult object.

    """

    # Run the check.
    c = symbols_interface.symbol_from_id(symbol_id=cfg.f, n=1)
    report = block_decomposition_check(c=c, N=cfg.N, seed=cfg.seed)
    rows = [
        SweepRow(
            experiment=f"blocks:{name}",
            f=c.id,
            g="",
            lam=report.lam,
            N=cfg.N,
            M=None,
            value=value,
            details={"block_errors": report.block_errors},
        )
        for (name, value) in (
            ("factorization", report.factorization_error),
            ("cross_block", report.cross_block_max),
            ("block_error", report.block_error_max),
        )
    ]

    # Assert the thresholds.
    trends = [
        TrendCheck(
            series="blocks:factorization",
            expectation=f"< {FACTORIZATION_TOL:g}",
            passed=report.factorization_error < FACTORIZATION_TOL,
            detail=f"{report.factorization_error:.3e}",
        )
    ]
    if c.radial:
        trends.append(
            TrendCheck(
                series="blocks:cross_block",
                expectation=f"< {CROSS_BLOCK_TOL:g}",
                passed=report.cross_block_max < CROSS_BLOCK_TOL,
                detail=f"{report.cross_block_max:.3e}",
            )
        )
    for check in trends:
        if not check.passed:
            msg = f"Threshold assertion failed for {check.series}: {check.detail}."
            logger.warn(msg=msg)

    return __result__(cfg=cfg, rows=rows, trends=trends)


# ----

RUNNERS: Dict[str, Callable] = {
    "semicommutator": run_semicommutator_sweep,
    "counterexample": run_counterexample,
    "berezin": run_berezin_convergence,
    "bmo": run_bmo_sweep,
    "products": run_products_sweep,
    "hankel": run_hankel_sweep,
    "audit": audit_interface.run_inequality_audit,
    "blocks": run_block_decomposition,
}

# ----


def run(cfg: SweepConfig) -> SweepResult:
    """
    Description
    -----------

    This function runs the configured experiment, flags the
    unreliable rows and logs the result table.

    Parameters
    ----------

    cfg: ``SweepConfig``

        A Python SweepConfig object.

    Returns
    -------

    result: ``SweepResult``

        A Python SweepResult object.

    Raises
    ------

    SweepInterfaceError:

        - raised for an unknown experiment.

    """

    # Run the experiment.
    if cfg.experiment not in RUNNERS:
        msg = f"Unknown experiment {cfg.experiment}. Aborting!!!"
        raise SweepInterfaceError(msg=msg)
    result = RUNNERS[cfg.experiment](cfg)
    for row in result.rows:
        if not row.reliable:
            msg = (
                f"UNRELIABLE row {row.experiment} at lambda = {row.lam:g}: value "
                f"{row.value:.6e}, diagnostic {row.diagnostic:.2e}."
            )
            logger.warn(msg=msg)
    logger.info(msg="\n" + result.summary())

    return result
