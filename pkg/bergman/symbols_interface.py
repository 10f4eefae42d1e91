"""
Module
------

    symbols_interface.py

Description
-----------

    This module contains the symbol catalog, the symbol combinators
    and the harmonic measure of circular arcs.

    A radial symbol carries its profile F(s), s = |z|^2, as a finite
    sum of oscillatory components

        F(s) = sum_k a_k(s) exp(i k / s);

    combinators act on the components exactly so that, e.g., the
    product of the counterexample symbol and its conjugate is the
    constant 1. Amplitudes are either Python numbers (constant
    amplitudes) or functions of a numpy float array.

Classes
-------

    Symbol(id, evaluate, tags, sup_bound=None, components=None,
           origin_value=None, poly_degree=None, n=1)

        This is the base-class object for a symbol on the unit ball.

Functions
---------

    amplitude_values(amp, s)

        This function evaluates a constant or callable component
        amplitude.

    catalog(n=1)

        This function returns the symbol catalog.

    conj(f)

        This function returns the complex conjugate symbol.

    constant(value, n=1)

        This function returns a constant symbol.

    harmonic_measure(z, theta1, theta2, method="poisson")

        This function returns the harmonic measure of a circular arc.

    lift_last(c)

        This function returns f_c(z', z'') = c(z'') on the 2-ball.

    modulus(f)

        This function returns the modulus |f|.

    precompose(f, a)

        This function returns f o phi_a.

    product(f, g)

        This function returns the product symbol.

    scale(f, c)

        This function returns the scalar multiple c f.

    symbol_from_id(symbol_id, n=1)

        This function returns the catalog symbol with the specified
        id.

    symbol_sum(f, g)

        This function returns the sum symbol.

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
# pylint: disable=too-many-instance-attributes

# ----

import numbers
from dataclasses import dataclass, field
from typing import Any, Callable, FrozenSet, Generic, List, Optional, Tuple

import numpy
from scipy.special import roots_legendre

from bergman.geometry_interface import mobius_apply
from utils.exceptions_interface import SymbolsInterfaceError
from utils.logger_interface import Logger

# ----

# Define all available module properties.
__all__ = [
    "BOUNDED",
    "BUC",
    "CATALOG_IDS",
    "CLASS_TAGS",
    "COUNTEREXAMPLE",
    "C_CLOSURE",
    "HOLOMORPHIC",
    "RADIAL",
    "Symbol",
    "UC",
    "VMO",
    "amplitude_values",
    "catalog",
    "conj",
    "constant",
    "harmonic_measure",
    "lift_last",
    "modulus",
    "precompose",
    "product",
    "scale",
    "symbol_from_id",
    "symbol_sum",
]

# ----

logger = Logger(caller_name=__name__)

# Symbol class tags.
RADIAL = "RADIAL"
BOUNDED = "BOUNDED"
HOLOMORPHIC = "HOLOMORPHIC"
UC = "UC"
BUC = "BUC"
VMO = "VMO"
C_CLOSURE = "C_CLOSURE"
COUNTEREXAMPLE = "COUNTEREXAMPLE"

# Tags closed under sums and products (both operands must carry them).
CLASS_TAGS = frozenset([RADIAL, BOUNDED, HOLOMORPHIC, UC, BUC, VMO, C_CLOSURE])

CATALOG_IDS = (
    "const1",
    "re_z1",
    "z1",
    "abs2",
    "beta0",
    "sin_beta0",
    "osc_counterexample",
    "vmo_loglog",
    "harmonic_arc:<theta1>:<theta2>",
)

# Poisson integral attributes for the harmonic measure.
POISSON_NODES = 64
POISSON_MAX_PANELS = 1024
POISSON_TOL = 1.0e-10

# ----

Components = Optional[Tuple[Tuple[int, Any], ...]]

# ----


def amplitude_values(amp: Any, s: numpy.ndarray) -> numpy.ndarray:
    """
    Description
    -----------

    This function evaluates a constant or callable amplitude.

    """

    # Evaluate the amplitude.
    if isinstance(amp, numbers.Number):
        return numpy.full(numpy.shape(s), complex(amp))

    return numpy.asarray(amp(s), dtype=complex)


# ----


def __radial_evaluate__(components: Tuple, origin: Optional[complex]) -> Callable:
    """
    Description
    -----------

    This function builds the point evaluation of a radial symbol from
    its components; the value at z = 0 is `origin` when specified.

    """

    # Define the point evaluation.
    def evaluate(z: numpy.ndarray) -> numpy.ndarray:
        s = numpy.sum(numpy.abs(z) ** 2, axis=-1)
        with numpy.errstate(divide="ignore", invalid="ignore", over="ignore"):
            values = __profile__(components=components, s=s)
        if origin is not None:
            values = numpy.where(s == 0.0, complex(origin), values)
        return values

    return evaluate


# ----


def __profile__(components: Tuple, s: numpy.ndarray) -> numpy.ndarray:
    """
    Description
    -----------

    This function evaluates sum_k a_k(s) exp(i k / s).

    """

    # Sum the components.
    s = numpy.asarray(s, dtype=float)
    values = numpy.zeros(s.shape, dtype=complex)
    for k, amp in components:
        term = amplitude_values(amp=amp, s=s)
        if k != 0:
            term = term * numpy.exp(1j * k / s)
        values = values + term

    return values


# ----


@dataclass(frozen=True, eq=False)
class Symbol:
    """
    Description
    -----------

    This is the base-class object for a symbol on the unit ball of
    dimension `n`.

    Parameters
    ----------

    id: ``str``

        A Python string specifying the symbol identifier.

    evaluate: ``Callable``

        A Python function mapping a complex (..., n) point array to a
        complex (...) array.

    tags: ``FrozenSet[str]``

        A Python frozenset of class tags.

    Keywords
    --------

    sup_bound: ``float``, optional

        A Python float specifying a bound for |f|; required for
        BOUNDED symbols.

    components: ``Tuple``, optional

        The radial profile components (k, a_k); required for RADIAL
        symbols.

    origin_value: ``complex``, optional

        The symbol value at z = 0 when it is not the limit of the
        profile.

    poly_degree: ``int``, optional

        The total degree in (z, conj z) of a polynomial symbol.

    n: ``int``, optional

        A Python integer specifying the complex dimension.

    Raises
    ------

    SymbolsInterfaceError:

        - raised if a BOUNDED symbol has no sup bound or a RADIAL
          symbol has no components.

    """

    id: str
    evaluate: Callable = field(repr=False)
    tags: FrozenSet[str] = frozenset()
    sup_bound: Optional[float] = None
    components: Components = field(default=None, repr=False)
    origin_value: Optional[complex] = None
    poly_degree: Optional[int] = None
    n: int = 1

    def __post_init__(self: Generic) -> None:
        if BOUNDED in self.tags and self.sup_bound is None:
            msg = f"The BOUNDED symbol {self.id} requires a sup bound. Aborting!!!"
            raise SymbolsInterfaceError(msg=msg)
        if RADIAL in self.tags and self.components is None:
            msg = f"The RADIAL symbol {self.id} requires profile components. Aborting!!!"
            raise SymbolsInterfaceError(msg=msg)

    def has(self: Generic, tag: str) -> bool:
        """Whether the symbol carries `tag`."""
        return tag in self.tags

    @property
    def radial(self: Generic) -> bool:
        """Whether the symbol is radial."""
        return RADIAL in self.tags

    @property
    def oscillatory(self: Generic) -> bool:
        """Whether a radial profile has a nonzero-frequency component."""
        return bool(self.components) and any(k != 0 for k, _ in self.components)

    def profile(self: Generic, s: numpy.ndarray) -> numpy.ndarray:
        """
        Description
        -----------

        This method evaluates the radial profile F(s), s = |z|^2.

        Parameters
        ----------

        s: ``numpy.ndarray``

            A numpy float array of squared radii in (0, 1).

        Returns
        -------

        values: ``numpy.ndarray``

            A numpy complex array of profile values.

        Raises
        ------

        SymbolsInterfaceError:

            - raised if the symbol is not radial.

        """

        # Check the symbol; proceed accordingly.
        if not self.radial:
            msg = f"The symbol {self.id} is not radial. Aborting!!!"
            raise SymbolsInterfaceError(msg=msg)

        return __profile__(components=self.components, s=s)


# ----


def constant(value: complex, n: int = 1, symbol_id: str = None) -> Symbol:
    """
    Description
    -----------

    This function returns a constant symbol; constants carry every
    class tag.

    Parameters
    ----------

    value: ``complex``

        A Python complex specifying the constant.

    Keywords
    --------

    n: ``int``, optional

        A Python integer specifying the complex dimension.

    symbol_id: ``str``, optional

        A Python string specifying the symbol identifier.

    Returns
    -------

    symbol: ``Symbol``

        A Python Symbol object.

    """

    # Define the symbol.
    value = complex(value)
    if value.imag == 0.0:
        value = value.real
    components = ((0, value),)
    symbol = Symbol(
        id=symbol_id if symbol_id is not None else f"const:{value}",
        evaluate=__radial_evaluate__(components=components, origin=None),
        tags=CLASS_TAGS,
        sup_bound=abs(value),
        components=components,
        origin_value=value,
        poly_degree=0,
        n=n,
    )

    return symbol


# ----


def __is_constant__(components: Components) -> bool:
    """Whether the components reduce to one constant amplitude."""
    return (
        components is not None
        and len(components) == 1
        and components[0][0] == 0
        and isinstance(components[0][1], numbers.Number)
    )


# ----


def __merge__(terms: List[Tuple[int, Any]]) -> Tuple:
    """
    Description
    -----------

    This function merges components of equal frequency; constant
    amplitudes are combined exactly and vanishing ones dropped.

    """

    # Group the amplitudes by frequency.
    grouped = {}
    for k, amp in terms:
        grouped.setdefault(int(k), []).append(amp)
    merged = []
    for k in sorted(grouped):
        amps = grouped[k]
        if all(isinstance(item, numbers.Number) for item in amps):
            total = sum(amps)
            if total != 0:
                merged.append((k, total))
            continue
        merged.append(
            (k, lambda s, amps=tuple(amps): sum(amplitude_values(a, s) for a in amps))
        )
    if not merged:
        merged = [(0, 0.0)]

    return tuple(merged)


# ----


def __combine_tags__(f: Symbol, g: Symbol, is_product: bool) -> FrozenSet[str]:
    """
    Description
    -----------

    This function combines the tags of two symbols; class tags
    require both operands, COUNTEREXAMPLE either.

    """

    # Define the combined tags.
    tags = set(f.tags & g.tags & CLASS_TAGS)
    if is_product and UC in tags and not (f.has(BOUNDED) and g.has(BOUNDED)):
        tags.discard(UC)
    if f.has(COUNTEREXAMPLE) or g.has(COUNTEREXAMPLE):
        tags.add(COUNTEREXAMPLE)

    return frozenset(tags)


# ----


def __check_dims__(f: Symbol, g: Symbol) -> None:
    """
    Description
    -----------

    This function checks that two symbols live on the same ball.

    """

    # Check the dimensions.
    if f.n != g.n:
        msg = f"Symbols {f.id} and {g.id} live on balls of different dimension. Aborting!!!"
        raise SymbolsInterfaceError(msg=msg)


# ----


def __finish__(
    symbol_id: str,
    evaluate: Callable,
    tags: FrozenSet[str],
    sup_bound: Optional[float],
    components: Components,
    origin: Optional[complex],
    degree: Optional[int],
    n: int,
) -> Symbol:
    """
    Description
    -----------

    This function builds a combined symbol; results whose components
    reduce to a constant become constant symbols and radial results
    are evaluated from their components.

    """

    # Define the symbol; proceed accordingly.
    if RADIAL in tags and __is_constant__(components=components):
        return constant(value=components[0][1], n=n, symbol_id=symbol_id)
    if RADIAL in tags:
        evaluate = __radial_evaluate__(components=components, origin=origin)
    if BOUNDED not in tags:
        sup_bound = None
    symbol = Symbol(
        id=symbol_id,
        evaluate=evaluate,
        tags=tags,
        sup_bound=sup_bound,
        components=components if RADIAL in tags else None,
        origin_value=origin,
        poly_degree=degree,
        n=n,
    )

    return symbol


# ----


def symbol_sum(f: Symbol, g: Symbol) -> Symbol:
    """
    Description
    -----------

    This function returns the sum symbol f + g.

    Parameters
    ----------

    f: ``Symbol``

        A Python Symbol object.

    g: ``Symbol``

        A Python Symbol object.

    Returns
    -------

    symbol: ``Symbol``

        A Python Symbol object.

    """

    # Combine the symbol attributes.
    __check_dims__(f=f, g=g)
    tags = __combine_tags__(f=f, g=g, is_product=False)
    components = None
    if RADIAL in tags:
        components = __merge__(list(f.components) + list(g.components))
    symbol = __finish__(
        symbol_id=f"({f.id}+{g.id})",
        evaluate=lambda z: f.evaluate(z) + g.evaluate(z),
        tags=tags,
        sup_bound=(
            f.sup_bound + g.sup_bound
            if f.sup_bound is not None and g.sup_bound is not None
            else None
        ),
        components=components,
        origin=(
            f.origin_value + g.origin_value
            if f.origin_value is not None and g.origin_value is not None
            else None
        ),
        degree=(
            max(f.poly_degree, g.poly_degree)
            if f.poly_degree is not None and g.poly_degree is not None
            else None
        ),
        n=f.n,
    )

    return symbol


# ----


def product(f: Symbol, g: Symbol) -> Symbol:
    """
    Description
    -----------

    This function returns the product symbol f g; radial components
    are convolved in frequency.

    Parameters
    ----------

    f: ``Symbol``

        A Python Symbol object.

    g: ``Symbol``

        A Python Symbol object.

    Returns
    -------

    symbol: ``Symbol``

        A Python Symbol object.

    """

    # Combine the symbol attributes.
    __check_dims__(f=f, g=g)
    tags = __combine_tags__(f=f, g=g, is_product=True)
    components = None
    if RADIAL in tags:
        terms = []
        for k1, a1 in f.components:
            for k2, a2 in g.components:
                if isinstance(a1, numbers.Number) and isinstance(a2, numbers.Number):
                    terms.append((k1 + k2, a1 * a2))
                else:
                    terms.append(
                        (
                            k1 + k2,
                            lambda s, a1=a1, a2=a2: amplitude_values(a1, s)
                            * amplitude_values(a2, s),
                        )
                    )
        components = __merge__(terms)
    symbol = __finish__(
        symbol_id=f"{f.id}*{g.id}",
        evaluate=lambda z: f.evaluate(z) * g.evaluate(z),
        tags=tags,
        sup_bound=(
            f.sup_bound * g.sup_bound
            if f.sup_bound is not None and g.sup_bound is not None
            else None
        ),
        components=components,
        origin=(
            f.origin_value * g.origin_value
            if f.origin_value is not None and g.origin_value is not None
            else None
        ),
        degree=(
            f.poly_degree + g.poly_degree
            if f.poly_degree is not None and g.poly_degree is not None
            else None
        ),
        n=f.n,
    )

    return symbol


# ----


def conj(f: Symbol) -> Symbol:
    """
    Description
    -----------

    This function returns the complex conjugate symbol; the
    HOLOMORPHIC tag survives for constants only.

    Parameters
    ----------

    f: ``Symbol``

        A Python Symbol object.

    Returns
    -------

    symbol: ``Symbol``

        A Python Symbol object.

    """

    # Conjugate the components.
    components = None
    if f.radial:
        components = tuple(
            (
                -k,
                (
                    numpy.conj(amp)
                    if isinstance(amp, numbers.Number)
                    else lambda s, amp=amp: numpy.conj(amplitude_values(amp, s))
                ),
            )
            for k, amp in f.components
        )
        components = __merge__(list(components))
    tags = set(f.tags)
    if not __is_constant__(components=components):
        tags.discard(HOLOMORPHIC)
    symbol = __finish__(
        symbol_id=f"conj({f.id})",
        evaluate=lambda z: numpy.conj(f.evaluate(z)),
        tags=frozenset(tags),
        sup_bound=f.sup_bound,
        components=components,
        origin=None if f.origin_value is None else numpy.conj(f.origin_value),
        degree=f.poly_degree,
        n=f.n,
    )

    return symbol


# ----


def scale(f: Symbol, c: complex) -> Symbol:
    """
    Description
    -----------

    This function returns the scalar multiple c f.

    Parameters
    ----------

    f: ``Symbol``

        A Python Symbol object.

    c: ``complex``

        A Python complex specifying the scalar.

    Returns
    -------

    symbol: ``Symbol``

        A Python Symbol object.

    """

    # Scale the symbol.
    return product(constant(value=c, n=f.n, symbol_id=f"{complex(c):g}"), f)


# ----


def modulus(f: Symbol) -> Symbol:
    """
    Description
    -----------

    This function returns |f|; a radial |f| is carried as a single
    zero-frequency component.

    Parameters
    ----------

    f: ``Symbol``

        A Python Symbol object.

    Returns
    -------

    symbol: ``Symbol``

        A Python Symbol object.

    """

    # Define the components; proceed accordingly.
    components = None
    if f.radial:
        if len(f.components) == 1:
            amp = f.components[0][1]
            components = (
                (
                    0,
                    (
                        abs(amp)
                        if isinstance(amp, numbers.Number)
                        else lambda s, amp=amp: numpy.abs(amplitude_values(amp, s))
                    ),
                ),
            )
        else:
            components = ((0, lambda s: numpy.abs(f.profile(s))),)
    tags = set(f.tags) - {HOLOMORPHIC}
    if __is_constant__(components=components):
        tags = set(CLASS_TAGS)
    symbol = __finish__(
        symbol_id=f"abs({f.id})",
        evaluate=lambda z: numpy.abs(f.evaluate(z)).astype(complex),
        tags=frozenset(tags),
        sup_bound=f.sup_bound,
        components=components,
        origin=None if f.origin_value is None else abs(f.origin_value),
        degree=None,
        n=f.n,
    )

    return symbol


# ----


def precompose(f: Symbol, a: Any) -> Symbol:
    """
    Description
    -----------

    This function returns f o phi_a; the RADIAL tag is dropped unless
    a = 0.

    Parameters
    ----------

    f: ``Symbol``

        A Python Symbol object.

    a: ``Any``

        The Moebius involution base point.

    Returns
    -------

    symbol: ``Symbol``

        A Python Symbol object.

    """

    # Define the composed symbol.
    a = numpy.atleast_1d(numpy.asarray(a, dtype=complex))
    tags = set(f.tags) - {RADIAL}
    symbol = Symbol(
        id=f"{f.id}@phi({','.join(f'{item:g}' for item in a)})",
        evaluate=lambda z: f.evaluate(mobius_apply(a=a, z=z)),
        tags=frozenset(tags),
        sup_bound=f.sup_bound if BOUNDED in tags else None,
        n=f.n,
    )

    return symbol


# ----


def lift_last(c: Symbol) -> Symbol:
    """
    Description
    -----------

    This function returns the symbol f_c(z', z'') = c(z'') on the
    unit ball of dimension 2 for a symbol `c` on the disk.

    Parameters
    ----------

    c: ``Symbol``

        A Python Symbol object on the disk.

    Returns
    -------

    symbol: ``Symbol``

        A Python Symbol object.

    Raises
    ------

    SymbolsInterfaceError:

        - raised if `c` does not live on the disk.

    """

    # Check the symbol.
    if c.n != 1:
        msg = f"Only disk symbols can be lifted; {c.id} has n = {c.n}. Aborting!!!"
        raise SymbolsInterfaceError(msg=msg)

    # Define the lifted symbol.
    tags = set(c.tags) & {BOUNDED, HOLOMORPHIC, C_CLOSURE, COUNTEREXAMPLE}
    symbol = Symbol(
        id=f"lift({c.id})",
        evaluate=lambda z: c.evaluate(z[..., 1:2]),
        tags=frozenset(tags),
        sup_bound=c.sup_bound if BOUNDED in tags else None,
        poly_degree=c.poly_degree,
        n=2,
    )

    return symbol


# ----


def __poisson_closed__(z: numpy.ndarray, theta1: float, theta2: float) -> numpy.ndarray:
    """
    Description
    -----------

    This function evaluates the harmonic measure of the arc
    [theta1, theta2] by the subtended angle; arcs longer than pi are
    split.

    """

    # Sum over the sub-arcs of length at most pi.
    nsub = max(1, int(numpy.ceil((theta2 - theta1) / numpy.pi - 1.0e-12)))
    edges = numpy.linspace(theta1, theta2, nsub + 1)
    omega = numpy.zeros(z.shape, dtype=float)
    for ta, tb in zip(edges[:-1], edges[1:]):
        angle = numpy.mod(
            numpy.angle((numpy.exp(1j * tb) - z) / (numpy.exp(1j * ta) - z)),
            2.0 * numpy.pi,
        )
        omega += angle / numpy.pi - (tb - ta) / (2.0 * numpy.pi)

    return omega


# ----


def __poisson_gauss__(
    z: numpy.ndarray, theta1: float, theta2: float, panels: int
) -> numpy.ndarray:
    """
    Description
    -----------

    This function evaluates the Poisson integral of the arc with
    `panels` Gauss-Legendre panels of 64 points.

    """

    # Build the composite nodes and sum.
    (x, w) = roots_legendre(POISSON_NODES)
    breaks = numpy.linspace(theta1, theta2, panels + 1)
    (a, b) = (breaks[:-1, None], breaks[1:, None])
    theta = (0.5 * (b - a) * (x[None, :] + 1.0) + a).reshape(-1)
    wts = (0.5 * (b - a) * w[None, :]).reshape(-1)
    kern = (1.0 - numpy.abs(z[..., None]) ** 2) / numpy.abs(
        numpy.exp(1j * theta) - z[..., None]
    ) ** 2

    return numpy.sum(wts * kern, axis=-1) / (2.0 * numpy.pi)


# ----


def harmonic_measure(
    z: Any, theta1: float, theta2: float, method: str = "poisson"
) -> numpy.ndarray:
    """
    Description
    -----------

    This function returns the harmonic measure

        omega(z) = int_theta1^theta2 (1 - |z|^2) / |exp(i t) - z|^2 dt / 2 pi

    of the arc {exp(i t): theta1 < t < theta2} at points of the unit
    disk.

    Parameters
    ----------

    z: ``Any``

        A Python complex or numpy complex array of points with |z| < 1.

    theta1: ``float``

        A Python float specifying the arc start angle.

    theta2: ``float``

        A Python float specifying the arc end angle; theta1 < theta2
        <= theta1 + 2 pi.

    Keywords
    --------

    method: ``str``, optional

        A Python string specifying the evaluation method; `poisson`
        (Gauss rule with panel doubling to 1e-10) or `closed`
        (subtended angle).

    Returns
    -------

    omega: ``numpy.ndarray``

        A numpy float array of values in [0, 1].

    Raises
    ------

    SymbolsInterfaceError:

        - raised for an invalid arc, point or method.

    """

    # Check the arguments.
    z = numpy.asarray(z, dtype=complex)
    if not theta1 < theta2 <= theta1 + 2.0 * numpy.pi + 1.0e-14:
        msg = f"Invalid arc endpoints ({theta1}, {theta2}). Aborting!!!"
        raise SymbolsInterfaceError(msg=msg)
    if numpy.any(numpy.abs(z) >= 1.0):
        msg = "The harmonic measure requires |z| < 1. Aborting!!!"
        raise SymbolsInterfaceError(msg=msg)
    if method == "closed":
        return __poisson_closed__(z=z, theta1=theta1, theta2=theta2)
    if method != "poisson":
        msg = f"Unknown harmonic measure method {method}. Aborting!!!"
        raise SymbolsInterfaceError(msg=msg)

    # Double the panel count until converged.
    (panels, old) = (1, __poisson_gauss__(z, theta1, theta2, panels=1))
    while panels < POISSON_MAX_PANELS:
        panels = 2 * panels
        new = __poisson_gauss__(z, theta1, theta2, panels=panels)
        if numpy.max(numpy.abs(new - old), initial=0.0) <= POISSON_TOL:
            return new
        old = new
    msg = (
        f"The Poisson integral did not converge with {POISSON_MAX_PANELS} panels; "
        "using the subtended-angle form."
    )
    logger.warn(msg=msg)

    return __poisson_closed__(z=z, theta1=theta1, theta2=theta2)


# ----


def __s__(z: numpy.ndarray) -> numpy.ndarray:
    """Squared Euclidean norms of a point array."""
    return numpy.sum(numpy.abs(z) ** 2, axis=-1)


# ----


def __harmonic_arc__(symbol_id: str, n: int) -> Symbol:
    """
    Description
    -----------

    This function parses `harmonic_arc:<theta1>:<theta2>` and returns
    the symbol 2 omega(z, arc) - 1 on the disk.

    """

    # Parse the arc endpoints.
    if n != 1:
        msg = f"The symbol {symbol_id} is defined on the disk only. Aborting!!!"
        raise SymbolsInterfaceError(msg=msg)
    try:
        (theta1, theta2) = (float(item) for item in symbol_id.split(":")[1:])
    except ValueError as errmsg:
        msg = f"Parsing symbol id {symbol_id} failed with error {errmsg}. Aborting!!!"
        raise SymbolsInterfaceError(msg=msg) from errmsg
    harmonic_measure(z=0.0, theta1=theta1, theta2=theta2, method="closed")

    # Define the symbol.
    symbol = Symbol(
        id=symbol_id,
        evaluate=lambda z: (
            2.0
            * harmonic_measure(
                z=z[..., 0], theta1=theta1, theta2=theta2, method="closed"
            )
            - 1.0
        ).astype(complex),
        tags=frozenset([BOUNDED, BUC, UC, VMO]),
        sup_bound=1.0,
        n=n,
    )

    return symbol


# ----


def __radial__(
    symbol_id: str,
    components: Tuple,
    tags: FrozenSet[str],
    n: int,
    sup_bound: float = None,
    origin: complex = None,
    degree: int = None,
) -> Symbol:
    """
    Description
    -----------

    This function builds a radial catalog symbol.

    """

    # Define the symbol.
    return Symbol(
        id=symbol_id,
        evaluate=__radial_evaluate__(components=components, origin=origin),
        tags=frozenset(tags) | {RADIAL},
        sup_bound=sup_bound,
        components=components,
        origin_value=origin,
        poly_degree=degree,
        n=n,
    )


# ----


def symbol_from_id(symbol_id: str, n: int = 1) -> Symbol:
    """
    Description
    -----------

    This function returns the catalog symbol with the specified id.

    Parameters
    ----------

    symbol_id: ``str``

        A Python string specifying a catalog id (see `CATALOG_IDS`).

    Keywords
    --------

    n: ``int``, optional

        A Python integer specifying the complex dimension.

    Returns
    -------

    symbol: ``Symbol``

        A Python Symbol object.

    Raises
    ------

    SymbolsInterfaceError:

        - raised for an unknown catalog id.

    """

    # Define the catalog symbol; proceed accordingly.
    symbol_id = symbol_id.strip()
    bounded_uc = {BOUNDED, UC, BUC, VMO, C_CLOSURE}
    if symbol_id == "const1":
        return constant(value=1.0, n=n, symbol_id="const1")
    if symbol_id == "re_z1":
        return Symbol(
            id=symbol_id,
            evaluate=lambda z: numpy.real(z[..., 0]).astype(complex),
            tags=frozenset(bounded_uc),
            sup_bound=1.0,
            poly_degree=1,
            n=n,
        )
    if symbol_id == "z1":
        return Symbol(
            id=symbol_id,
            evaluate=lambda z: numpy.asarray(z[..., 0], dtype=complex),
            tags=frozenset(bounded_uc | {HOLOMORPHIC}),
            sup_bound=1.0,
            poly_degree=1,
            n=n,
        )
    if symbol_id == "abs2":
        return __radial__(
            symbol_id=symbol_id,
            components=((0, lambda s: s),),
            tags=bounded_uc,
            n=n,
            sup_bound=1.0,
            origin=0.0,
            degree=2,
        )
    if symbol_id == "beta0":
        return __radial__(
            symbol_id=symbol_id,
            components=((0, lambda s: numpy.arctanh(numpy.sqrt(s))),),
            tags={UC},
            n=n,
            origin=0.0,
        )
    if symbol_id == "sin_beta0":
        return __radial__(
            symbol_id=symbol_id,
            components=((0, lambda s: numpy.sin(numpy.arctanh(numpy.sqrt(s)))),),
            tags={BOUNDED, UC, BUC, VMO},
            n=n,
            sup_bound=1.0,
            origin=0.0,
        )
    if symbol_id == "osc_counterexample":
        return __radial__(
            symbol_id=symbol_id,
            components=((1, 1.0),),
            tags={BOUNDED, COUNTEREXAMPLE},
            n=n,
            sup_bound=1.0,
            origin=1.0,
        )
    if symbol_id == "vmo_loglog":
        return __radial__(
            symbol_id=symbol_id,
            components=(
                (0, lambda s: numpy.sin(numpy.log(numpy.log1p(1.0 / numpy.sqrt(s))))),
            ),
            tags={BOUNDED, VMO},
            n=n,
            sup_bound=1.0,
            origin=0.0,
        )
    if symbol_id.startswith("harmonic_arc:"):
        return __harmonic_arc__(symbol_id=symbol_id, n=n)
    msg = (
        f"Unknown symbol id {symbol_id}; valid ids are {', '.join(CATALOG_IDS)}. "
        "Aborting!!!"
    )
    raise SymbolsInterfaceError(msg=msg)


# ----


def catalog(n: int = 1) -> List[Symbol]:
    """
    Description
    -----------

    This function returns the symbol catalog; the harmonic measure
    symbol (upper half-circle) is included on the disk only.

    Keywords
    --------

    n: ``int``, optional

        A Python integer specifying the complex dimension.

    Returns
    -------

    symbols: ``List[Symbol]``

        A Python list of Symbol objects.

    """

    # Build the catalog.
    ids = [item for item in CATALOG_IDS if not item.startswith("harmonic_arc")]
    if n == 1:
        ids.append(f"harmonic_arc:0:{numpy.pi!r}")

    return [symbol_from_id(symbol_id=item, n=n) for item in ids]
