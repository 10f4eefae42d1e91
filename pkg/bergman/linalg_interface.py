"""
Module
------

    linalg_interface.py

Description
-----------

    This module contains the one-sided (Hestenes) Jacobi singular
    value iteration for dense complex matrices and the operator norm
    built on it.

Functions
---------

    operator_norm(matrix, tol=1.0e-12, max_sweeps=60)

        This function returns the largest singular value of a matrix.

    singular_values(matrix, tol=1.0e-12, max_sweeps=60)

        This function returns the singular values of a matrix in
        descending order.

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

import functools
from typing import List, Tuple

import numpy

from utils.exceptions_interface import LinalgInterfaceError
from utils.logger_interface import Logger

# ----

# Define all available module properties.
__all__ = ["operator_norm", "singular_values"]

# ----

logger = Logger(caller_name=__name__)

# ----


@functools.lru_cache(maxsize=32)
def __round_robin__(ncols: int) -> List[Tuple[numpy.ndarray, numpy.ndarray]]:
    """
    Description
    -----------

    This function returns the round-robin pair schedule for `ncols`
    columns; the pairs within a round are disjoint so that each round
    is applied as a single vectorized rotation.

    """

    # Rotate the players around the fixed first one.
    m = ncols + (ncols % 2)
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        pairs = [
            (min(players[i], players[m - 1 - i]), max(players[i], players[m - 1 - i]))
            for i in range(m // 2)
        ]
        pairs = [pair for pair in pairs if pair[1] < ncols]
        if pairs:
            rounds.append(
                (
                    numpy.array([pair[0] for pair in pairs]),
                    numpy.array([pair[1] for pair in pairs]),
                )
            )
        players = [players[0], players[-1]] + players[1:-1]

    return rounds


# ----


def singular_values(
    matrix: numpy.ndarray, tol: float = 1.0e-12, max_sweeps: int = 60
) -> numpy.ndarray:
    """
    Description
    -----------

    This function returns the singular values of a dense complex
    matrix by one-sided Jacobi rotations of its columns; a sweep
    visits every column pair once and the iteration stops when

        max |a_p^H a_q| / (|a_p| |a_q|) < tol

    over the sweep.

    Parameters
    ----------

    matrix: ``numpy.ndarray``

        A numpy array of shape (rows, cols).

    Keywords
    --------

    tol: ``float``, optional

        A Python float specifying the off-orthogonality tolerance.

    max_sweeps: ``int``, optional

        A Python integer specifying the sweep cap.

    Returns
    -------

    sigma: ``numpy.ndarray``

        A numpy float array of singular values in descending order.

    Raises
    ------

    LinalgInterfaceError:

        - raised if the matrix has non-finite entries.

        - raised if the iteration does not converge within
          `max_sweeps` sweeps.

    """

    # Check the matrix; iterate over the smaller dimension.
    a = numpy.array(matrix, dtype=complex)
    if a.ndim != 2:
        msg = f"A 2-dimensional matrix is required; received shape {a.shape}. Aborting!!!"
        raise LinalgInterfaceError(msg=msg)
    if not numpy.all(numpy.isfinite(a)):
        msg = "The matrix has non-finite entries. Aborting!!!"
        raise LinalgInterfaceError(msg=msg)
    if a.size == 0:
        return numpy.zeros(0)
    if a.shape[0] < a.shape[1]:
        a = a.conj().T
    if a.shape[1] == 1:
        return numpy.array([numpy.linalg.norm(a[:, 0])])
    rounds = __round_robin__(ncols=a.shape[1])

    # Sweep until the columns are mutually orthogonal.
    for sweep in range(1, max_sweeps + 1):
        off = 0.0
        for p, q in rounds:
            (ap, aq) = (a[:, p], a[:, q])
            alpha = numpy.sum(numpy.abs(ap) ** 2, axis=0)
            beta = numpy.sum(numpy.abs(aq) ** 2, axis=0)
            gamma = numpy.sum(ap.conj() * aq, axis=0)
            agamma = numpy.abs(gamma)
            scale = numpy.sqrt(alpha * beta)
            ratio = numpy.divide(
                agamma, scale, out=numpy.zeros_like(agamma), where=scale > 0.0
            )
            off = max(off, float(numpy.max(ratio)))
            rotate = ratio >= tol
            if not numpy.any(rotate):
                continue

            # Compute the rotations; pairs below tolerance are left
            # unchanged.
            safe = numpy.where(rotate, agamma, 1.0)
            zeta = (beta - alpha) / (2.0 * safe)
            t = numpy.where(zeta >= 0.0, 1.0, -1.0) / (
                numpy.abs(zeta) + numpy.sqrt(1.0 + zeta**2)
            )
            c = numpy.where(rotate, 1.0 / numpy.sqrt(1.0 + t**2), 1.0)
            s = numpy.where(rotate, c * t, 0.0)
            phase = numpy.exp(1j * numpy.angle(gamma))
            a[:, p] = c * ap - s * numpy.conj(phase) * aq
            a[:, q] = s * phase * ap + c * aq
        if off < tol:
            msg = f"Jacobi iteration converged after {sweep} sweeps (off = {off:.3e})."
            logger.debug(msg=msg)
            return numpy.sort(numpy.linalg.norm(a, axis=0))[::-1]

    msg = (
        f"The Jacobi singular value iteration did not converge within {max_sweeps} "
        f"sweeps (off = {off:.3e}). Aborting!!!"
    )
    raise LinalgInterfaceError(msg=msg)


# ----


def operator_norm(
    matrix: numpy.ndarray, tol: float = 1.0e-12, max_sweeps: int = 60
) -> float:
    """
    Description
    -----------

    This function returns the operator (spectral) norm of a dense
    matrix, i.e., its largest singular value.

    Parameters
    ----------

    matrix: ``numpy.ndarray``

        A numpy array of shape (rows, cols).

    Keywords
    --------

    tol: ``float``, optional

        A Python float specifying the off-orthogonality tolerance.

    max_sweeps: ``int``, optional

        A Python integer specifying the sweep cap.

    Returns
    -------

    norm: ``float``

        A Python float specifying the operator norm.

    """

    # Compute the largest singular value.
    sigma = singular_values(matrix=matrix, tol=tol, max_sweeps=max_sweeps)

    return float(sigma[0]) if sigma.size > 0 else 0.0
