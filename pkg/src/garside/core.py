"""
Elements of a Garside group in left normal form.

An element is stored as Δ^r s_1 ... s_k where every s_i is a simple element
other than 1 and Δ, and each consecutive pair (s_i, s_{i+1}) is left-weighted,
meaning ∂(s_i) ∧_L s_{i+1} = 1.  The structure-specific lattice machinery
(meets, complements, the automorphism τ) lives behind the `GarsideStructure`
interface; everything in this module is generic over it.

Conventions used throughout:

* ∂(a) = a⁻¹Δ is the left complement, so a·∂(a) = Δ.
* τ(a) = Δ⁻¹aΔ, hence aΔ^m = Δ^m τ^m(a).
* Simples are opaque hashable payloads, compared by equality within their
  structure.
"""

from __future__ import annotations

import abc
import dataclasses
import functools
from typing import Hashable, Iterable, Iterator, Sequence

Simple = Hashable


class GarsideError(Exception):
    """Base class for errors raised by this package."""


class StructureMismatchError(GarsideError):
    """Two elements (or an element and a simple) come from different structures."""


class GarsideStructure(abc.ABC):
    """
    Description of a Garside monoid through its finite lattice of simples.

    Subclasses supply the lattice primitives on simples. The normal form step
    `simple_product_split` and τ-powers are derived here and memoised per
    instance, since normal form computations call them constantly.
    """

    #: canonical group spec string, e.g. ``braid:3``; also the identity of the structure
    spec: str

    def __init__(self) -> None:
        self._split_cache: dict[tuple[Simple, Simple], tuple[Simple, Simple]] = {}

    # -- primitives ---------------------------------------------------------

    @property
    @abc.abstractmethod
    def identity(self) -> Simple: ...

    @property
    @abc.abstractmethod
    def delta(self) -> Simple: ...

    @property
    @abc.abstractmethod
    def atoms(self) -> tuple[Simple, ...]: ...

    @property
    @abc.abstractmethod
    def norm_delta(self) -> int: ...

    @property
    @abc.abstractmethod
    def tau_order(self) -> int:
        """Order of τ as a permutation of the simples."""

    @abc.abstractmethod
    def atom_norm(self, a: Simple) -> int: ...

    @abc.abstractmethod
    def meet_L(self, a: Simple, b: Simple) -> Simple: ...

    @abc.abstractmethod
    def join_L(self, a: Simple, b: Simple) -> Simple: ...

    @abc.abstractmethod
    def left_complement(self, a: Simple) -> Simple:
        """∂(a) = a⁻¹Δ."""

    @abc.abstractmethod
    def tau(self, a: Simple) -> Simple:
        """τ(a) = Δ⁻¹aΔ."""

    @abc.abstractmethod
    def simple_mul(self, a: Simple, b: Simple) -> Simple:
        """Product ab, defined only when b ≤_L ∂(a)."""

    @abc.abstractmethod
    def simple_ldiv(self, a: Simple, b: Simple) -> Simple:
        """The simple c with ac = b, defined only when a ≤_L b."""

    @abc.abstractmethod
    def enumerate_simples(self) -> Iterator[Simple]: ...

    @abc.abstractmethod
    def is_simple(self, a: object) -> bool:
        """Whether `a` is a valid payload for this structure."""

    @abc.abstractmethod
    def simple_word(self, a: Simple) -> str:
        """A positive word in the atom alphabet representing `a`."""

    # -- derived operations -------------------------------------------------

    def simple_product_split(self, a: Simple, b: Simple) -> tuple[Simple, Simple]:
        """Return (a·t, t⁻¹b) with t = ∂(a) ∧_L b, the local normal form step."""
        key = (a, b)
        try:
            return self._split_cache[key]
        except KeyError:
            pass
        t = self.meet_L(self.left_complement(a), b)
        if t == self.identity:
            out = (a, b)
        else:
            out = (self.simple_mul(a, t), self.simple_ldiv(t, b))
        self._split_cache[key] = out
        return out

    def is_left_weighted(self, a: Simple, b: Simple) -> bool:
        return self.meet_L(self.left_complement(a), b) == self.identity

    def tau_power(self, a: Simple, m: int) -> Simple:
        m %= self.tau_order
        for _ in range(m):
            a = self.tau(a)
        return a

    def leq_L(self, a: Simple, b: Simple) -> bool:
        return self.meet_L(a, b) == a

    # -- identity / hashing -------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GarsideStructure) and other.spec == self.spec

    def __hash__(self) -> int:
        return hash(self.spec)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.spec!r})"

    # -- convenience constructors ---------------------------------------------

    def one(self) -> Element:
        return Element(self, 0, ())

    def delta_power(self, r: int) -> Element:
        return Element(self, r, ())

    def element(self, a: Simple) -> Element:
        """The group element given by a single simple."""
        return normalize(self, 0, [a])

    def __getstate__(self):
        state = self.__dict__.copy()
        state["_split_cache"] = {}
        return state


@dataclasses.dataclass(frozen=True)
class Element:
    """
    A group element in left normal form Δ^r s_1 ... s_k.

    Instances are only ever built in normal form; use `normalize` to get one
    from arbitrary data.
    """

    structure: GarsideStructure
    r: int
    factors: tuple[Simple, ...]

    @property
    def inf(self) -> int:
        return self.r

    @property
    def sup(self) -> int:
        return self.r + len(self.factors)

    @property
    def len(self) -> int:
        return len(self.factors)

    def is_identity(self) -> bool:
        return self.r == 0 and not self.factors

    def __mul__(self, other: Element) -> Element:
        return multiply(self, other)

    def __pow__(self, n: int) -> Element:
        return power(self, n)

    def inverse(self) -> Element:
        return inverse(self)

    def __str__(self) -> str:
        from .words import format_element

        return format_element(self)

    def sort_key(self) -> tuple:
        """Canonical total order: r, then factor payloads lexicographically."""
        return (self.r, self.factors)


def _check_same(g: Element, h: Element) -> None:
    if g.structure != h.structure:
        raise StructureMismatchError(
            f"elements of {g.structure.spec} and {h.structure.spec} cannot be combined"
        )


# -- normal form machinery ---------------------------------------------------


def _append(structure: GarsideStructure, factors: list[Simple], s: Simple) -> None:
    """Right-multiply a left-weighted list by a simple, keeping it left-weighted.

    Leading Δ's and trailing 1's are left for `_finish` to strip.
    """
    if s == structure.identity:
        return
    factors.append(s)
    split = structure.simple_product_split
    i = len(factors) - 2
    while i >= 0:
        a, b = split(factors[i], factors[i + 1])
        if a == factors[i]:
            break
        factors[i] = a
        factors[i + 1] = b
        i -= 1
    if factors[-1] == structure.identity:
        factors.pop()


def _prepend(structure: GarsideStructure, factors: list[Simple], s: Simple) -> None:
    """Left-multiply a left-weighted list by a simple, keeping it left-weighted."""
    if s == structure.identity:
        return
    factors.insert(0, s)
    split = structure.simple_product_split
    for i in range(len(factors) - 1):
        a, b = split(factors[i], factors[i + 1])
        if a == factors[i]:
            break
        factors[i] = a
        factors[i + 1] = b
    while factors and factors[-1] == structure.identity:
        factors.pop()


def _finish(structure: GarsideStructure, r: int, factors: list[Simple]) -> Element:
    delta = structure.delta
    lead = 0
    while lead < len(factors) and factors[lead] == delta:
        lead += 1
    end = len(factors)
    while end > lead and factors[end - 1] == structure.identity:
        end -= 1
    return Element(structure, r + lead, tuple(factors[lead:end]))


def normalize(structure: GarsideStructure, r: int, raw_factors: Iterable[Simple]) -> Element:
    """Normal form of Δ^r · (product of `raw_factors`)."""
    factors: list[Simple] = []
    for s in raw_factors:
        if not structure.is_simple(s):
            raise StructureMismatchError(f"{s!r} is not a simple element of {structure.spec}")
        _append(structure, factors, s)
    return _finish(structure, r, factors)


def multiply(g: Element, h: Element) -> Element:
    _check_same(g, h)
    st = g.structure
    # Δ^a F Δ^b H = Δ^(a+b) τ^b(F) H
    left = [st.tau_power(s, h.r) for s in g.factors] if h.r % st.tau_order else list(g.factors)
    if len(left) <= len(h.factors):
        factors = list(h.factors)
        for s in reversed(left):
            _prepend(st, factors, s)
    else:
        factors = left
        for s in h.factors:
            _append(st, factors, s)
    return _finish(st, g.r + h.r, factors)


def inverse(g: Element) -> Element:
    """Inverse via twisted complements.

    (Δ^r s_1 ... s_k)⁻¹ = Δ^(-r-k) τ^(-(r+k))(∂s_k) ... τ^(-(r+1))(∂s_1).
    """
    st = g.structure
    k = len(g.factors)
    raw = [
        st.tau_power(st.left_complement(g.factors[i - 1]), -(i + g.r))
        for i in range(k, 0, -1)
    ]
    return normalize(st, -(g.r + k), raw)


def power(g: Element, n: int) -> Element:
    if n < 0:
        return power(inverse(g), -n)
    result = g.structure.one()
    base = g
    while n:
        if n & 1:
            result = multiply(result, base)
        n >>= 1
        if n:
            base = multiply(base, base)
    return result


def inf(g: Element) -> int:
    return g.inf


def sup(g: Element) -> int:
    return g.sup


def length(g: Element) -> int:
    return g.len


def word_length(g: Element) -> int:
    """Shortest word length of `g` over the simples and their inverses."""
    if g.inf >= 0:
        return g.sup
    if g.sup <= 0:
        return -g.inf
    return g.len


def tau_conjugate(g: Element, m: int) -> Element:
    """Δ^(-m) g Δ^m."""
    st = g.structure
    return Element(st, g.r, tuple(st.tau_power(s, m) for s in g.factors))


def lmax(structure: GarsideStructure, positive_word: Sequence[Simple]) -> Simple:
    """Δ ∧_L a for the positive element a spelled by `positive_word`."""
    a = normalize(structure, 0, positive_word)
    if a.r > 0:
        return structure.delta
    if a.factors:
        return a.factors[0]
    return structure.identity


def conjugate(h: Element, c: Element) -> Element:
    """c⁻¹ h c."""
    _check_same(h, c)
    return multiply(multiply(inverse(c), h), c)


@functools.lru_cache(maxsize=65536)
def cached_power(g: Element, n: int) -> Element:
    """Memoised `power`, for the repeated power queries of the summit algorithms."""
    if n in (0, 1) or n < 0:
        return power(g, n)
    half = cached_power(g, n // 2)
    sq = multiply(half, half)
    return multiply(sq, g) if n & 1 else sq
