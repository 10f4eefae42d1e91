"""
Module
------

    results_interface.py

Description
-----------

    This module contains the sweep result container: the value rows,
    their reliability diagnostics, the trend assessments and the
    CSV-formatted output, JSON-formatted mirror and summary table.

Classes
-------

    SweepResult

        This is the data-class containing the rows and trend checks
        of a sweep.

    SweepRow

        This is the data-class containing a single value row.

    TrendCheck

        This is the data-class containing a single trend assertion.

Functions
---------

    collect_rows(lambdas, func, workers=1)

        This function evaluates the rows of a weight schedule in a
        thread pool.

    format_float(value)

        This function formats a CSV cell.

Requirements
------------

- tabulate; https://github.com/gregbanks/python-tabulate

Author(s)
---------

    Henry R. Winterbottom; 02 March 2024

History
-------

    2024-03-02: Henry Winterbottom -- Initial implementation.

"""

# ----

# pylint: disable=too-many-instance-attributes

# ----

import csv
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Generic, List, Optional, Sequence

from confs.json_interface import write_json
from tools.fileio_interface import parent_dirpath
from utils.exceptions_interface import JSONInterfaceError, ResultsInterfaceError
from utils.logger_interface import Logger
from utils.table_interface import compose, init_table

# ----

# Define all available module properties.
__all__ = [
    "CSV_HEADER",
    "SweepResult",
    "SweepRow",
    "TrendCheck",
    "collect_rows",
    "format_float",
]

# ----

logger = Logger(caller_name=__name__)

SCHEMA_VERSION = 1

CSV_HEADER = [
    "experiment",
    "f",
    "g",
    "lambda",
    "N",
    "M",
    "value",
    "diag_N_delta",
    "diag_path_delta",
    "grid",
]

# A row is UNRELIABLE when a diagnostic exceeds this fraction of its
# value.
RELIABILITY_FRACTION = 0.1
RELIABILITY_FLOOR = 1.0e-12

# ----


def format_float(value: Optional[float]) -> str:
    """
    Description
    -----------

    This function formats a CSV cell; floats use the shortest
    round-trip representation and NoneType is written as an empty
    cell.

    Parameters
    ----------

    value: ``Optional[float]``

        A Python float or NoneType.

    Returns
    -------

    cell: ``str``

        A Python string containing the formatted cell.

    """

    # Format the cell; proceed accordingly.
    if value is None:
        return ""

    return repr(float(value))


# ----


@dataclass
class SweepRow:
    """
    Description
    -----------

    This is the data-class containing a single value row; `details`
    carries argmax points and audit attributes for the JSON-formatted
    mirror only.

    """

    experiment: str
    f: str
    g: str
    lam: float
    N: Optional[int]
    M: Optional[int]
    value: float
    diag_N_delta: Optional[float] = None
    diag_path_delta: Optional[float] = None
    grid: str = ""
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def diagnostic(self: Generic) -> float:
        """The largest available diagnostic."""
        diags = [d for d in (self.diag_N_delta, self.diag_path_delta) if d is not None]
        return max(diags) if diags else 0.0

    @property
    def reliable(self: Generic) -> bool:
        """Whether the diagnostics are within 10% of the value."""
        if not math.isfinite(self.value):
            return False
        bound = RELIABILITY_FRACTION * abs(self.value) + RELIABILITY_FLOOR
        return self.diagnostic <= bound

    def to_dict(self: Generic) -> Dict[str, Any]:
        """The row with its reliability flag and details."""
        return {
            "experiment": self.experiment,
            "f": self.f,
            "g": self.g,
            "lambda": self.lam,
            "N": self.N,
            "M": self.M,
            "value": self.value,
            "diag_N_delta": self.diag_N_delta,
            "diag_path_delta": self.diag_path_delta,
            "grid": self.grid,
            "flag": "OK" if self.reliable else "UNRELIABLE",
            "details": self.details,
        }

    def cells(self: Generic) -> List[str]:
        """The CSV cells of the row."""
        return [
            self.experiment,
            self.f,
            self.g,
            format_float(self.lam),
            "" if self.N is None else str(self.N),
            "" if self.M is None else str(self.M),
            format_float(self.value),
            format_float(self.diag_N_delta),
            format_float(self.diag_path_delta),
            self.grid,
        ]


# ----


@dataclass
class TrendCheck:
    """
    Description
    -----------

    This is the data-class containing a single trend assertion for a
    row series.

    """

    series: str
    expectation: str
    passed: bool
    detail: str = ""


# ----


@dataclass
class SweepResult:
    """
    Description
    -----------

    This is the data-class containing the rows (ordered by weight) and the
    trend checks of a sweep.

    """

    config: Dict[str, Any]
    rows: List[SweepRow] = field(default_factory=list)
    trends: List[TrendCheck] = field(default_factory=list)
    grid: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self: Generic) -> bool:
        """Whether every trend check passed."""
        return all(check.passed for check in self.trends)

    def series(self: Generic, name: str) -> List[SweepRow]:
        """The rows of the series `name`, ordered by weight."""
        rows = (row for row in self.rows if row.experiment == name)
        return sorted(rows, key=lambda row: row.lam)

    def series_names(self: Generic) -> List[str]:
        """The series names in order of first appearance."""
        return list(dict.fromkeys(row.experiment for row in self.rows))

    def write_csv(self: Generic, path: str) -> None:
        """
        Description
        -----------

        This method writes the rows to a CSV-formatted file; identical
        rows produce byte-identical files.

        Parameters
        ----------

        path: ``str``

            A Python string specifying the path to the CSV-formatted
            file.

        Raises
        ------

        ResultsInterfaceError:

            - raised if the file cannot be written.

        """

        # Write the rows.
        msg = f"Writing sweep results to CSV-formatted file {path}."
        logger.info(msg=msg)
        try:
            parent_dirpath(path=path)
            with open(path, "w", encoding="utf-8", newline="") as stream:
                writer = csv.writer(stream, lineterminator="\n")
                writer.writerow(CSV_HEADER)
                for row in self.rows:
                    writer.writerow(row.cells())
        except OSError as errmsg:
            msg = f"Writing CSV-formatted file {path} failed with error {errmsg}. Aborting!!!"
            raise ResultsInterfaceError(msg=msg) from errmsg

    def to_dict(self: Generic) -> Dict[str, Any]:
        """
        Description
        -----------

        This method returns the JSON-formatted mirror of the result.

        Returns
        -------

        mirror: ``Dict``

            A Python dictionary containing the schema version, the
            configuration, the grid metadata, the rows with their
            reliability flags and details, and the trend checks.

        """

        # Build the mirror.
        mirror = {
            "schema_version": SCHEMA_VERSION,
            "config": self.config,
            "grid": self.grid,
            "rows": [row.to_dict() for row in self.rows],
            "trends": [
                {
                    "series": check.series,
                    "expectation": check.expectation,
                    "passed": check.passed,
                    "detail": check.detail,
                }
                for check in self.trends
            ],
            "passed": self.passed,
        }

        return mirror

    def write_json(self: Generic, path: str) -> None:
        """
        Description
        -----------

        This method writes the JSON-formatted mirror.

        Parameters
        ----------

        path: ``str``

            A Python string specifying the path to the JSON-formatted
            file.

        Raises
        ------

        ResultsInterfaceError:

            - raised if the file cannot be written.

        """

        # Write the mirror.
        try:
            write_json(json_file=path, in_dict=self.to_dict())
        except JSONInterfaceError as errmsg:
            msg = f"Writing the JSON-formatted mirror {path} failed. Aborting!!!"
            raise ResultsInterfaceError(msg=msg) from errmsg

    def summary(self: Generic) -> str:
        """
        Description
        -----------

        This method returns the result table.

        Returns
        -------

        table: ``str``

            A Python string containing the table of rows.

        """

        # Compose the table.
        table_obj = init_table()
        table_obj.header = [
            "series",
            "f",
            "g",
            "lambda",
            "N",
            "M",
            "value",
            "diag",
            "flag",
        ]
        table_obj.table = [
            [
                row.experiment,
                row.f,
                row.g,
                f"{row.lam:g}",
                "" if row.N is None else row.N,
                "" if row.M is None else row.M,
                f"{row.value:.6e}",
                f"{row.diagnostic:.2e}",
                "OK" if row.reliable else "UNRELIABLE",
            ]
            for row in self.rows
        ]
        table_obj.disable_numparse = True

        return compose(table_obj=table_obj)


# ----


def collect_rows(
    lambdas: Sequence[float], func: Callable, workers: int = 1
) -> List[SweepRow]:
    """
    Description
    -----------

    This function evaluates `func` for every weight in a thread pool
    and returns the rows merged in weight order.

    Parameters
    ----------

    lambdas: ``Sequence[float]``

        A Python sequence of weight parameters.

    func: ``Callable``

        A Python function mapping a weight to a list of SweepRow
        objects.

    Keywords
    --------

    workers: ``int``, optional

        A Python integer specifying the number of worker threads.

    Returns
    -------

    rows: ``List[SweepRow]``

        A Python list of SweepRow objects.

    """

    # Compute the rows; `map` preserves the schedule order.
    with ThreadPoolExecutor(max_workers=workers) as executor:
        batches = list(executor.map(func, lambdas))
    rows = [row for batch in batches for row in batch]
    for row in rows:
        msg = (
            f"{row.experiment}: lambda = {row.lam:g}, value = {row.value:.6e}, "
            f"diag = {row.diagnostic:.2e}."
        )
        logger.info(msg=msg)

    return rows
