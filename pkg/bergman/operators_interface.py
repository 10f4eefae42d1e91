"""
Module
------

    operators_interface.py

Description
-----------

    This module contains the truncated Toeplitz, Hankel and
    semi-commutator matrices over the graded monomial basis of the
    weighted Bergman spaces, the radial diagonal fast path, and the
    block decomposition check on the 2-ball.

    All matrices follow the convention M[g, b] = <f e_b, e_g>, i.e.,
    columns are inputs and rows outputs. Composite objects use the
    diagonal fast path only when every symbol involved is RADIAL;
    otherwise all factors are assembled with one product rule so that
    holomorphic factors are absorbed exactly.

Classes
-------

    Basis(n, max_degree, indices)

        This is the base-class object for the graded monomial basis.

    BlockReport

        This is the data-class containing the block decomposition
        check attributes.

    OperatorMatrix(weight, basis, entries, kind, inner_truncation=None,
                   symbols=())

        This is the base-class object for a truncated operator matrix.

Functions
---------

    block_decomposition_check(c, N, npoints=20, seed=7)

        This function checks the block decomposition of Toeplitz
        operators with symbols c(z'') on the 2-ball.

    build_basis(n, max_degree)

        This function returns the graded monomial basis.

    export_csv(matrix, path)

        This function writes a matrix to a CSV file.

    hankel_gram(f, weight, N, M)

        This function returns the Gram matrix of the truncated Hankel
        operator.

    hankel_norm(f, weight, N, M)

        This function returns the norm of the truncated Hankel
        operator.

    product_deviation(symbols, weight, N, M)

        This function returns T_f1 ... T_fm - T_(f1 ... fm).

    radial_eigenvalues(f, weight, max_m)

        This function returns the Toeplitz eigenvalues of a radial
        symbol.

    semicommutator(f, g, weight, N, M)

        This function returns T_f T_g - T_fg.

    toeplitz_matrix(f, weight, basis, rule=None)

        This function returns the Toeplitz matrix of a symbol.

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

import csv
import functools
import numbers
from dataclasses import dataclass, field
from typing import Dict, Generic, List, Optional, Sequence, Tuple

import numpy
from scipy.special import betaln, xlog1py, xlogy

from bergman import symbols_interface
from bergman.geometry_interface import Weight, basis_eval
from bergman.oscillatory_interface import oscillatory_integral
from bergman.quadrature_interface import (
    ProductRule,
    assemble,
    build_rule,
    radial_weighted_integral,
)
from bergman.symbols_interface import BOUNDED, COUNTEREXAMPLE, Symbol
from tools.fileio_interface import parent_dirpath
from utils.exceptions_interface import OperatorsInterfaceError
from utils.logger_interface import Logger

# ----

# Define all available module properties.
__all__ = [
    "Basis",
    "BlockReport",
    "OperatorMatrix",
    "block_decomposition_check",
    "build_basis",
    "export_csv",
    "hankel_gram",
    "hankel_norm",
    "product_deviation",
    "radial_eigenvalues",
    "semicommutator",
    "toeplitz_matrix",
]

# ----

logger = Logger(caller_name=__name__)

# Exactness guard for symbols that are not polynomials.
SMOOTH_GUARD = 8

# Tolerance below which Hankel Gram eigenvalues flag a loss of
# positivity.
PSD_TOL = 1.0e-10

# Block decomposition attributes (unweighted space on the 2-ball).
BLOCK_LAMBDA = 3.0

# ----


@dataclass(frozen=True, eq=False)
class Basis:
    """
    Description
    -----------

    This is the base-class object for the monomial basis of degree at
    most `max_degree`; the multi-indices are ordered by degree and,
    within a degree, by descending first exponent.

    Parameters
    ----------

    n: ``int``

        A Python integer specifying the complex dimension.

    max_degree: ``int``

        A Python integer specifying the truncation degree.

    indices: ``numpy.ndarray``

        An integer array of multi-indices of shape (D, n).

    """

    n: int
    max_degree: int
    indices: numpy.ndarray = field(repr=False)

    @property
    def dimension(self: Generic) -> int:
        """The basis dimension C(N + n, n)."""
        return int(self.indices.shape[0])

    @property
    def degrees(self: Generic) -> numpy.ndarray:
        """The total degree of each multi-index."""
        return numpy.sum(self.indices, axis=1)

    @functools.cached_property
    def __lookup__(self: Generic) -> Dict[Tuple[int, ...], int]:
        return {tuple(int(a) for a in row): idx for idx, row in enumerate(self.indices)}

    def index_of(self: Generic, multi_index: Sequence[int]) -> int:
        """
        Description
        -----------

        This method returns the position of a multi-index.

        Parameters
        ----------

        multi_index: ``Sequence[int]``

            A Python sequence of exponents.

        Returns
        -------

        idx: ``int``

            A Python integer specifying the basis position.

        Raises
        ------

        OperatorsInterfaceError:

            - raised if the multi-index is not in the basis.

        """

        # Find the multi-index.
        key = tuple(int(a) for a in numpy.atleast_1d(multi_index))
        if key not in self.__lookup__:
            msg = f"The multi-index {key} is not in the degree {self.max_degree} basis. Aborting!!!"
            raise OperatorsInterfaceError(msg=msg)

        return self.__lookup__[key]

    def multi_index(self: Generic, idx: int) -> Tuple[int, ...]:
        """The multi-index at position `idx`."""
        return tuple(int(a) for a in self.indices[idx])


# ----


@functools.lru_cache(maxsize=64)
def build_basis(n: int, max_degree: int) -> Basis:
    """
    Description
    -----------

    This function returns the graded monomial basis of dimension
    C(N + n, n).

    Parameters
    ----------

    n: ``int``

        A Python integer specifying the complex dimension (1 or 2).

    max_degree: ``int``

        A Python integer specifying the truncation degree N >= 0.

    Returns
    -------

    basis: ``Basis``

        A Python Basis object.

    Raises
    ------

    OperatorsInterfaceError:

        - raised for unsupported dimensions or negative degrees.

    """

    # Check the arguments.
    if n not in (1, 2) or max_degree < 0:
        msg = f"Invalid basis attributes n = {n}, N = {max_degree}. Aborting!!!"
        raise OperatorsInterfaceError(msg=msg)

    # Order the multi-indices.
    if n == 1:
        indices = numpy.arange(max_degree + 1).reshape(-1, 1)
    else:
        indices = numpy.array(
            [(a, d - a) for d in range(max_degree + 1) for a in range(d, -1, -1)]
        )
    indices.setflags(write=False)

    return Basis(n=n, max_degree=int(max_degree), indices=indices)


# ----


@dataclass(frozen=True, eq=False)
class OperatorMatrix:
    """
    Description
    -----------

    This is the base-class object for a truncated operator matrix.

    Parameters
    ----------

    weight: ``Weight``

        A Python Weight object.

    basis: ``Basis``

        A Python Basis object.

    entries: ``numpy.ndarray``

        A numpy complex array of shape (D, D).

    kind: ``str``

        A Python string specifying the kind; `toeplitz`,
        `semicommutator`, `hankel_gram` or `product_deviation`.

    Keywords
    --------

    inner_truncation: ``int``, optional

        A Python integer specifying the inner truncation degree M.

    symbols: ``Tuple[str]``, optional

        A Python tuple of the symbol ids involved.

    """

    weight: Weight
    basis: Basis
    entries: numpy.ndarray = field(repr=False)
    kind: str = "toeplitz"
    inner_truncation: Optional[int] = None
    symbols: Tuple[str, ...] = ()

    def __post_init__(self: Generic) -> None:
        self.entries.setflags(write=False)

    @property
    def dimension(self: Generic) -> int:
        """The matrix dimension."""
        return int(self.entries.shape[0])

    def diagonal(self: Generic) -> numpy.ndarray:
        """The matrix diagonal."""
        return numpy.diag(self.entries).copy()


# ----


def __check_symbol__(f: Symbol, weight: Weight) -> None:
    """
    Description
    -----------

    This function rejects symbols that the product rules cannot
    resolve and symbols living on another ball.

    """

    # Check the symbol; proceed accordingly.
    if f.n != weight.n:
        msg = f"The symbol {f.id} lives on n = {f.n} but the weight on n = {weight.n}. Aborting!!!"
        raise OperatorsInterfaceError(msg=msg)
    if not f.radial and (f.has(COUNTEREXAMPLE) or f.oscillatory):
        msg = (
            f"The oscillatory symbol {f.id} is not RADIAL; no product rule resolves "
            "it. Aborting!!!"
        )
        raise OperatorsInterfaceError(msg=msg)


# ----


def __check_truncation__(N: int, M: int) -> None:
    """
    Description
    -----------

    This function checks the truncation degrees.

    """

    # Check the truncations.
    if N < 0 or M < N:
        msg = f"The inner truncation M = {M} must not be below N = {N} >= 0. Aborting!!!"
        raise OperatorsInterfaceError(msg=msg)


# ----


def radial_eigenvalues(f: Symbol, weight: Weight, max_m: int) -> numpy.ndarray:
    """
    Description
    -----------

    This function returns the Toeplitz eigenvalues

        gamma_m = int_0^1 F(s) s^(m+n-1) (1-s)^alpha ds / B(m+n, alpha+1)

    of a radial symbol with profile F(s) = f(z), s = |z|^2, for
    m = 0, ..., max_m; T_f e_a = gamma_|a| e_a. Zero-frequency
    components use the Gauss-Jacobi radial integral and oscillatory
    components the half-period evaluator.

    Parameters
    ----------

    f: ``Symbol``

        A Python Symbol object carrying the RADIAL tag.

    weight: ``Weight``

        A Python Weight object.

    max_m: ``int``

        A Python integer specifying the largest degree.

    Returns
    -------

    gamma: ``numpy.ndarray``

        A numpy complex array of length max_m + 1.

    Raises
    ------

    OperatorsInterfaceError:

        - raised if the symbol is not radial.

    """

    # Check the symbol.
    if not f.radial:
        msg = f"The symbol {f.id} is not radial. Aborting!!!"
        raise OperatorsInterfaceError(msg=msg)
    (n, alpha) = (weight.n, weight.alpha)
    gamma = numpy.zeros(max_m + 1, dtype=complex)

    # Sum the component contributions.
    for k, amp in f.components:
        if k == 0 and isinstance(amp, numbers.Number):
            gamma += complex(amp)
            continue
        for m in range(max_m + 1):
            beta = m + n - 1.0
            if k == 0:
                gamma[m] += radial_weighted_integral(
                    g=lambda s, amp=amp: symbols_interface.amplitude_values(amp, s),
                    alpha=alpha,
                    beta=beta,
                )
                continue

            def amplitude(s: numpy.ndarray, amp=amp, beta=beta) -> numpy.ndarray:
                log_w = xlogy(beta, s)
                log_w = log_w + xlog1py(alpha, -numpy.minimum(s, 1.0))
                return symbols_interface.amplitude_values(amp, s) * numpy.exp(
                    log_w - betaln(beta + 1.0, alpha + 1.0)
                )

            report = oscillatory_integral(amplitude=amplitude, k=k, alpha=alpha)
            gamma[m] += report.value

    return gamma


# ----


def __composite_degree__(symbols: Sequence[Symbol], N: int, M: int) -> int:
    """
    Description
    -----------

    This function returns the rule degree shared by the factors of a
    composite object.

    """

    # Define the degree.
    degrees = [f.poly_degree for f in symbols]
    guard = SMOOTH_GUARD
    if all(item is not None for item in degrees):
        guard = max(guard, 2 * sum(degrees))

    return int(N + M + guard)


# ----


def __block__(
    f: Symbol,
    weight: Weight,
    rows: Basis,
    cols: Basis,
    rule: Optional[ProductRule],
) -> numpy.ndarray:
    """
    Description
    -----------

    This function returns the rectangular block <f e_b, e_g> for rows
    g and columns b; radial symbols (with `rule` None) use the
    diagonal fast path.

    """

    # Use the fast path; proceed accordingly.
    if rule is None:
        gamma = radial_eigenvalues(
            f=f, weight=weight, max_m=max(rows.max_degree, cols.max_degree)
        )
        size = min(rows.dimension, cols.dimension)
        block = numpy.zeros((rows.dimension, cols.dimension), dtype=complex)
        idx = numpy.arange(size)
        block[idx, idx] = gamma[rows.degrees[:size]]
        return block

    # Assemble with the product rule; both bases are graded so that
    # the first `size` multi-indices coincide.
    values = numpy.asarray(f.evaluate(rule.points), dtype=complex)

    return assemble(
        rule=rule, weight=weight, values=values, rows=rows.indices, cols=cols.indices
    )


# ----


def __shared_rule__(
    symbols: Sequence[Symbol], weight: Weight, N: int, M: int
) -> Optional[ProductRule]:
    """
    Description
    -----------

    This function returns None when every symbol is radial and
    otherwise the product rule shared by all factors.

    """

    # Check the symbols; proceed accordingly.
    for f in symbols:
        __check_symbol__(f=f, weight=weight)
    if all(f.radial for f in symbols):
        return None

    return build_rule(
        n=weight.n,
        weight=weight,
        target_degree=__composite_degree__(symbols=symbols, N=N, M=M),
    )


# ----


def toeplitz_matrix(
    f: Symbol, weight: Weight, basis: Basis, rule: ProductRule = None
) -> OperatorMatrix:
    """
    Description
    -----------

    This function returns the Toeplitz matrix T[g, b] = <f e_b, e_g>;
    radial symbols use the diagonal fast path (off-diagonal entries
    exactly zero) unless a rule is specified.

    Parameters
    ----------

    f: ``Symbol``

        A Python Symbol object.

    weight: ``Weight``

        A Python Weight object.

    basis: ``Basis``

        A Python Basis object.

    Keywords
    --------

    rule: ``ProductRule``, optional

        A Python ProductRule object; if not specified, non-radial
        symbols use a rule exact to degree 2N plus a guard.

    Returns
    -------

    matrix: ``OperatorMatrix``

        A Python OperatorMatrix object.

    Raises
    ------

    OperatorsInterfaceError:

        - raised for oscillatory symbols without the RADIAL tag.

    """

    # Define the assembly path.
    __check_symbol__(f=f, weight=weight)
    if rule is None and not f.radial:
        rule = __shared_rule__(
            symbols=[f], weight=weight, N=basis.max_degree, M=basis.max_degree
        )
    entries = __block__(f=f, weight=weight, rows=basis, cols=basis, rule=rule)
    matrix = OperatorMatrix(
        weight=weight, basis=basis, entries=entries, kind="toeplitz", symbols=(f.id,)
    )

    return matrix


# ----


def semicommutator(
    f: Symbol, g: Symbol, weight: Weight, N: int, M: int
) -> OperatorMatrix:
    """
    Description
    -----------

    This function returns the truncated semi-commutator

        S[g, b] = sum_{deg mu <= M} <g e_b, e_mu> <f e_mu, e_g> - <fg e_b, e_g>

    for |b|, |g| <= N.

    Parameters
    ----------

    f: ``Symbol``

        A Python Symbol object.

    g: ``Symbol``

        A Python Symbol object.

    weight: ``Weight``

        A Python Weight object.

    N: ``int``

        A Python integer specifying the truncation degree.

    M: ``int``

        A Python integer specifying the inner truncation degree; M >= N.

    Returns
    -------

    matrix: ``OperatorMatrix``

        A Python OperatorMatrix object.

    """

    # Assemble the factors with a shared path.
    __check_truncation__(N=N, M=M)
    fg = symbols_interface.product(f, g)
    rule = __shared_rule__(symbols=[f, g, fg], weight=weight, N=N, M=M)
    (outer, inner) = (build_basis(weight.n, N), build_basis(weight.n, M))
    a_f = __block__(f=f, weight=weight, rows=outer, cols=inner, rule=rule)
    a_g = __block__(f=g, weight=weight, rows=inner, cols=outer, rule=rule)
    t_fg = __block__(f=fg, weight=weight, rows=outer, cols=outer, rule=rule)
    matrix = OperatorMatrix(
        weight=weight,
        basis=outer,
        entries=a_f @ a_g - t_fg,
        kind="semicommutator",
        inner_truncation=M,
        symbols=(f.id, g.id),
    )

    return matrix


# ----


def product_deviation(
    symbols: Sequence[Symbol], weight: Weight, N: int, M: int
) -> OperatorMatrix:
    """
    Description
    -----------

    This function returns the truncated deviation
    T_f1 T_f2 ... T_fm - T_(f1 f2 ... fm); inner products run over
    the degree M basis.

    Parameters
    ----------

    symbols: ``Sequence[Symbol]``

        A Python sequence of 1 <= m <= 4 Symbol objects.

    weight: ``Weight``

        A Python Weight object.

    N: ``int``

        A Python integer specifying the truncation degree.

    M: ``int``

        A Python integer specifying the inner truncation degree; M >= N.

    Returns
    -------

    matrix: ``OperatorMatrix``

        A Python OperatorMatrix object.

    Raises
    ------

    OperatorsInterfaceError:

        - raised if the symbol list is empty or longer than 4.

    """

    # Check the arguments.
    __check_truncation__(N=N, M=M)
    symbols = list(symbols)
    if not 1 <= len(symbols) <= 4:
        msg = f"Between 1 and 4 symbols are supported; received {len(symbols)}. Aborting!!!"
        raise OperatorsInterfaceError(msg=msg)

    # Assemble the chain and the product symbol with a shared path.
    prod = functools.reduce(symbols_interface.product, symbols)
    rule = __shared_rule__(symbols=symbols + [prod], weight=weight, N=N, M=M)
    (outer, inner) = (build_basis(weight.n, N), build_basis(weight.n, M))
    chain = numpy.eye(outer.dimension, dtype=complex)
    for idx, f in enumerate(reversed(symbols)):
        rows = outer if idx == len(symbols) - 1 else inner
        cols = outer if idx == 0 else inner
        chain = __block__(f=f, weight=weight, rows=rows, cols=cols, rule=rule) @ chain
    t_prod = __block__(f=prod, weight=weight, rows=outer, cols=outer, rule=rule)
    matrix = OperatorMatrix(
        weight=weight,
        basis=outer,
        entries=chain - t_prod,
        kind="product_deviation",
        inner_truncation=M,
        symbols=tuple(f.id for f in symbols),
    )

    return matrix


# ----


def hankel_gram(f: Symbol, weight: Weight, N: int, M: int) -> OperatorMatrix:
    """
    Description
    -----------

    This function returns the Gram matrix of the truncated Hankel
    operator H_f = (I - P) M_f on the degree N basis,

        G[g, b] = <f e_b, f e_g> - sum_{deg mu <= M} <f e_b, e_mu> conj(<f e_g, e_mu>);

    G is Hermitian and positive semidefinite up to quadrature error.

    Parameters
    ----------

    f: ``Symbol``

        A Python Symbol object.

    weight: ``Weight``

        A Python Weight object.

    N: ``int``

        A Python integer specifying the truncation degree.

    M: ``int``

        A Python integer specifying the inner truncation degree; M >= N.

    Returns
    -------

    matrix: ``OperatorMatrix``

        A Python OperatorMatrix object.

    """

    # Assemble the factors with a shared path.
    __check_truncation__(N=N, M=M)
    mod2 = symbols_interface.product(symbols_interface.conj(f), f)
    rule = __shared_rule__(symbols=[f, mod2], weight=weight, N=N, M=M)
    (outer, inner) = (build_basis(weight.n, N), build_basis(weight.n, M))
    a_f = __block__(f=f, weight=weight, rows=inner, cols=outer, rule=rule)
    t_mod2 = __block__(f=mod2, weight=weight, rows=outer, cols=outer, rule=rule)
    gram = t_mod2 - a_f.conj().T @ a_f
    gram = 0.5 * (gram + gram.conj().T)
    matrix = OperatorMatrix(
        weight=weight,
        basis=outer,
        entries=gram,
        kind="hankel_gram",
        inner_truncation=M,
        symbols=(f.id,),
    )

    return matrix


# ----


def hankel_norm(f: Symbol, weight: Weight, N: int, M: int) -> float:
    """
    Description
    -----------

    This function returns the norm of the Hankel operator restricted
    to the degree N polynomials, i.e., the square root of the largest
    eigenvalue of the Hankel Gram matrix; it is a lower bound for
    ||H_f|| and nondecreasing in N.

    Parameters
    ----------

    f: ``Symbol``

        A Python Symbol object.

    weight: ``Weight``

        A Python Weight object.

    N: ``int``

        A Python integer specifying the truncation degree.

    M: ``int``

        A Python integer specifying the inner truncation degree; M >= N.

    Returns
    -------

    norm: ``float``

        A Python float specifying the truncated Hankel norm.

    """

    # Compute the Gram spectrum.
    gram = hankel_gram(f=f, weight=weight, N=N, M=M)
    eigs = numpy.linalg.eigvalsh(gram.entries)
    if eigs[0] < -PSD_TOL:
        msg = (
            f"The Hankel Gram matrix of {f.id} (lambda = {weight.lam:g}) has the "
            f"negative eigenvalue {eigs[0]:.3e}."
        )
        logger.warn(msg=msg)

    return float(numpy.sqrt(max(eigs[-1], 0.0)))


# ----


@dataclass
class BlockReport:
    """
    Description
    -----------

    This is the data-class containing the block decomposition check
    attributes: the basis factorization error at random points, the
    largest entry coupling different z' degrees, and per block j the
    largest deviation from the disk Toeplitz matrix at weight j + 3.

    """

    symbol: str
    N: int
    factorization_error: float
    cross_block_max: float
    block_errors: List[float]
    lam: float = BLOCK_LAMBDA

    @property
    def block_error_max(self: Generic) -> float:
        """The largest per-block deviation."""
        return float(max(self.block_errors)) if self.block_errors else 0.0


# ----


def __ball_points__(count: int, seed: int, n: int = 2) -> numpy.ndarray:
    """
    Description
    -----------

    This function returns seeded random points of the ball with
    |z| <= 0.95.

    """

    # Sample the directions and radii.
    rng = numpy.random.default_rng(seed)
    z = rng.standard_normal((count, n)) + 1j * rng.standard_normal((count, n))
    z /= numpy.linalg.norm(z, axis=1)[:, None]

    return 0.95 * rng.random(count)[:, None] ** (1.0 / (2 * n)) * z


# ----


def block_decomposition_check(
    c: Symbol, N: int, npoints: int = 20, seed: int = 7
) -> BlockReport:
    """
    Description
    -----------

    This function checks the orthogonal decomposition of the
    unweighted Bergman space (lam = 3) of the 2-ball along the
    degree j in z': the basis factorizes as

        e_(j,b)(z', z'') = e_j(z'; lam = 3) e_b(z''; lam = j + 3),

    and the Toeplitz operator of f_c(z) = c(z'') has no entries
    coupling different j, block j being the disk Toeplitz matrix of
    c at lam = j + 3.

    Parameters
    ----------

    c: ``Symbol``

        A Python Symbol object on the disk carrying the BOUNDED tag.

    N: ``int``

        A Python integer specifying the truncation degree.

    Keywords
    --------

    npoints: ``int``, optional

        A Python integer specifying the number of random points for
        the factorization check.

    seed: ``int``, optional

        A Python integer specifying the random seed.

    Returns
    -------

    report: ``BlockReport``

        A Python BlockReport object.

    Raises
    ------

    OperatorsInterfaceError:

        - raised if `c` is not a bounded disk symbol.

    """

    # Check the symbol.
    if c.n != 1 or not c.has(BOUNDED):
        msg = f"The block check requires a bounded disk symbol; received {c.id}. Aborting!!!"
        raise OperatorsInterfaceError(msg=msg)
    weight = Weight(n=2, lam=BLOCK_LAMBDA)
    basis = build_basis(n=2, max_degree=N)

    # Check the basis factorization.
    z = __ball_points__(count=npoints, seed=seed)
    ball = basis_eval(weight=weight, indices=basis.indices, z=z)
    factored = numpy.empty_like(ball)
    for idx, (j, b) in enumerate(basis.indices):
        first = basis_eval(
            weight=Weight(n=1, lam=BLOCK_LAMBDA), indices=[[j]], z=z[:, :1]
        )
        second = basis_eval(
            weight=Weight(n=1, lam=BLOCK_LAMBDA + j), indices=[[b]], z=z[:, 1:]
        )
        factored[:, idx] = first[:, 0] * second[:, 0]
    factorization_error = float(numpy.max(numpy.abs(ball - factored)))

    # Compare the 2-ball Toeplitz matrix of the lifted symbol with the
    # disk blocks.
    lifted = symbols_interface.lift_last(c)
    degree = 2 * N + max(SMOOTH_GUARD, 2 * (c.poly_degree or 0))
    rule = build_rule(n=2, weight=weight, target_degree=degree)
    entries = toeplitz_matrix(f=lifted, weight=weight, basis=basis, rule=rule).entries
    first_degree = basis.indices[:, 0]
    cross = first_degree[:, None] != first_degree[None, :]
    cross_block_max = float(numpy.max(numpy.abs(entries[cross]), initial=0.0))
    block_errors = []
    for j in range(N + 1):
        idx = numpy.flatnonzero(first_degree == j)
        idx = idx[numpy.argsort(basis.indices[idx, 1])]
        disk = toeplitz_matrix(
            f=c,
            weight=Weight(n=1, lam=BLOCK_LAMBDA + j),
            basis=build_basis(n=1, max_degree=N - j),
        ).entries
        block = entries[numpy.ix_(idx, idx)]
        block_errors.append(float(numpy.max(numpy.abs(block - disk))))
    report = BlockReport(
        symbol=c.id,
        N=int(N),
        factorization_error=factorization_error,
        cross_block_max=cross_block_max,
        block_errors=block_errors,
    )
    msg = (
        f"Block check {c.id} (N = {N}): factorization {factorization_error:.3e}, "
        f"cross-block {cross_block_max:.3e}, blocks {report.block_error_max:.3e}."
    )
    logger.info(msg=msg)

    return report


# ----


def export_csv(matrix: OperatorMatrix, path: str) -> None:
    """
    Description
    -----------

    This function writes the matrix entries row-major to a CSV file;
    each cell holds the string `re,im` with round-trip float
    representations.

    Parameters
    ----------

    matrix: ``OperatorMatrix``

        A Python OperatorMatrix object.

    path: ``str``

        A Python string specifying the output file path.

    Raises
    ------

    OperatorsInterfaceError:

        - raised if the file cannot be written.

    """

    # Write the cells.
    parent_dirpath(path=path)
    try:
        with open(path, "w", encoding="utf-8", newline="") as stream:
            writer = csv.writer(stream)
            for row in matrix.entries:
                writer.writerow([f"{float(v.real)!r},{float(v.imag)!r}" for v in row])
    except OSError as errmsg:
        msg = f"Writing the matrix to {path} failed with error {errmsg}. Aborting!!!"
        raise OperatorsInterfaceError(msg=msg) from errmsg
