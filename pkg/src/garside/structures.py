"""
Concrete Garside structures: braid groups, the groups <x, y | x^N = y^N>,
and direct products.

Structures are built through `make_braid`, `make_cyclic_amalgam`,
`make_product` or `parse_group_spec`; all four are memoised so that equal
specs share one instance (and its lattice caches).

Group spec grammar::

    braid:<n> | cyclic:<N> | product(<spec>,<spec>)
"""

from __future__ import annotations

import functools
import itertools
import math
import re
from typing import Iterator

from .core import GarsideError, GarsideStructure, Simple

MAX_STRANDS = 8


class GroupSpecError(GarsideError, ValueError):
    """Malformed group spec or out-of-range parameter."""


class BraidStructure(GarsideStructure):
    """
    Positive braid monoid on n strands with the classical Garside structure.

    Simples are permutation braids, stored in one-line notation as a tuple
    ``p`` with ``p[j]`` the final position of the strand starting at j
    (0-based).  Products compose as ``perm(ab) = perm(b) ∘ perm(a)``.
    """

    def __init__(self, n: int) -> None:
        super().__init__()
        self.n = n
        self.spec = f"braid:{n}"
        self._identity = tuple(range(n))
        self._delta = tuple(range(n - 1, -1, -1))
        self._atoms = tuple(self._transposition(i) for i in range(n - 1))
        self._meet_cache: dict[tuple[Simple, Simple], Simple] = {}

    def _transposition(self, i: int) -> tuple[int, ...]:
        p = list(range(self.n))
        p[i], p[i + 1] = p[i + 1], p[i]
        return tuple(p)

    @property
    def identity(self):
        return self._identity

    @property
    def delta(self):
        return self._delta

    @property
    def atoms(self):
        return self._atoms

    @property
    def norm_delta(self) -> int:
        return self.n * (self.n - 1) // 2

    @property
    def tau_order(self) -> int:
        return 2 if self.n >= 3 else 1

    def atom_norm(self, a) -> int:
        n = len(a)
        return sum(1 for i in range(n) for j in range(i + 1, n) if a[i] > a[j])

    # σ_i ≤_L x iff the strands starting at i and i+1 cross in x
    @staticmethod
    def left_descents(a) -> set[int]:
        return {i for i in range(len(a) - 1) if a[i] > a[i + 1]}

    # σ_i ≤_R x iff the strands ending at i and i+1 cross in x
    @staticmethod
    def right_descents(a) -> set[int]:
        inv = _perm_inverse(a)
        return {i for i in range(len(a) - 1) if inv[i] > inv[i + 1]}

    def meet_L(self, a, b):
        key = (a, b)
        hit = self._meet_cache.get(key)
        if hit is not None:
            return hit
        # peel common atoms off the left; every common atom divides the meet
        t = list(self._identity)
        x, y = list(a), list(b)
        n = self.n
        while True:
            for i in range(n - 1):
                if x[i] > x[i + 1] and y[i] > y[i + 1]:
                    break
            else:
                break
            x[i], x[i + 1] = x[i + 1], x[i]
            y[i], y[i + 1] = y[i + 1], y[i]
            # t <- t σ_i swaps the values i, i+1
            t = [i + 1 if v == i else i if v == i + 1 else v for v in t]
        out = tuple(t)
        self._meet_cache[key] = out
        return out

    def _meet_R(self, a, b):
        # right meet through the anti-automorphism x -> rev(x), perm(rev x) = perm(x)^-1
        return _perm_inverse(self.meet_L(_perm_inverse(a), _perm_inverse(b)))

    def join_L(self, a, b):
        # a ≤_L x  iff  ∂(x) ≤_R ∂(a), so ∂(a ∨_L b) = ∂(a) ∧_R ∂(b)
        m = self._meet_R(self.left_complement(a), self.left_complement(b))
        return self._from_complement(m)

    def _from_complement(self, m):
        # x = Δ m⁻¹, perm(x) = perm(m)⁻¹ ∘ perm(Δ)
        minv = _perm_inverse(m)
        n = self.n
        return tuple(minv[n - 1 - j] for j in range(n))

    def left_complement(self, a):
        inv = _perm_inverse(a)
        n = self.n
        return tuple(n - 1 - inv[j] for j in range(n))

    def tau(self, a):
        n = self.n
        return tuple(n - 1 - a[n - 1 - j] for j in range(n))

    def simple_mul(self, a, b):
        return tuple(b[v] for v in a)

    def simple_ldiv(self, a, b):
        inv = _perm_inverse(a)
        return tuple(b[inv[j]] for j in range(self.n))

    def enumerate_simples(self) -> Iterator[Simple]:
        return itertools.permutations(range(self.n))

    def is_simple(self, a) -> bool:
        return isinstance(a, tuple) and len(a) == self.n and sorted(a) == list(range(self.n))

    def atom_indices(self, a) -> list[int]:
        """0-based generator indices of a positive word for `a`."""
        word = []
        x = list(a)
        while True:
            for i in range(self.n - 1):
                if x[i] > x[i + 1]:
                    break
            else:
                return word
            word.append(i)
            x[i], x[i + 1] = x[i + 1], x[i]

    def simple_word(self, a) -> str:
        if a == self._delta and self.n > 2:
            return "D"
        return " ".join(f"s{i + 1}" for i in self.atom_indices(a))


class CyclicAmalgamStructure(GarsideStructure):
    """
    The monoid <x, y | x^N = y^N> with Garside element Δ = x^N = y^N.

    Simples are 1, x^i, y^i (1 ≤ i < N) and Δ, stored as ``(tag, i)`` with tag
    one of ``"1"``, ``"x"``, ``"y"``, ``"D"``.  Δ is central, so τ is trivial.
    """

    def __init__(self, N: int) -> None:
        super().__init__()
        self.N = N
        self.spec = f"cyclic:{N}"
        self._identity = ("1", 0)
        self._delta = ("D", N)
        self._atoms = (("x", 1), ("y", 1))

    @property
    def identity(self):
        return self._identity

    @property
    def delta(self):
        return self._delta

    @property
    def atoms(self):
        return self._atoms

    @property
    def norm_delta(self) -> int:
        return self.N

    @property
    def tau_order(self) -> int:
        return 1

    def atom_norm(self, a) -> int:
        return a[1]

    def meet_L(self, a, b):
        if a == b or b == self._delta:
            return a
        if a == self._delta:
            return b
        if a[0] == b[0]:
            return a if a[1] < b[1] else b
        return self._identity

    def join_L(self, a, b):
        if a == b or b == self._identity:
            return a
        if a == self._identity:
            return b
        if a[0] == b[0]:
            return a if a[1] > b[1] else b
        return self._delta

    def left_complement(self, a):
        if a == self._identity:
            return self._delta
        if a == self._delta:
            return self._identity
        return (a[0], self.N - a[1])

    def tau(self, a):
        return a

    def _make(self, tag: str, i: int):
        if i == 0:
            return self._identity
        if i == self.N:
            return self._delta
        return (tag, i)

    def simple_mul(self, a, b):
        if a == self._identity:
            return b
        if b == self._identity:
            return a
        if a[0] != b[0] or a[1] + b[1] > self.N:
            raise GarsideError(f"{a} * {b} is not simple")
        return self._make(a[0], a[1] + b[1])

    def simple_ldiv(self, a, b):
        if a == self._identity:
            return b
        if b == self._delta:
            return self._make(a[0], self.N - a[1])
        if a[0] != b[0] or a[1] > b[1]:
            raise GarsideError(f"{a} does not left-divide {b}")
        return self._make(a[0], b[1] - a[1])

    def enumerate_simples(self) -> Iterator[Simple]:
        yield self._identity
        for tag in ("x", "y"):
            for i in range(1, self.N):
                yield (tag, i)
        yield self._delta

    def is_simple(self, a) -> bool:
        if a == self._identity or a == self._delta:
            return True
        return (
            isinstance(a, tuple) and len(a) == 2 and a[0] in ("x", "y")
            and isinstance(a[1], int) and 0 < a[1] < self.N
        )

    def simple_word(self, a) -> str:
        if a == self._identity:
            return ""
        if a == self._delta:
            return "D"
        return a[0] if a[1] == 1 else f"{a[0]}^{a[1]}"


class ProductStructure(GarsideStructure):
    """Direct product of two Garside structures, Δ = (Δ_left, Δ_right)."""

    def __init__(self, left: GarsideStructure, right: GarsideStructure) -> None:
        super().__init__()
        self.left = left
        self.right = right
        self.spec = f"product({left.spec},{right.spec})"
        self._identity = (left.identity, right.identity)
        self._delta = (left.delta, right.delta)
        self._atoms = tuple((a, right.identity) for a in left.atoms) + tuple(
            (left.identity, b) for b in right.atoms
        )

    @property
    def identity(self):
        return self._identity

    @property
    def delta(self):
        return self._delta

    @property
    def atoms(self):
        return self._atoms

    @property
    def norm_delta(self) -> int:
        return self.left.norm_delta + self.right.norm_delta

    @property
    def tau_order(self) -> int:
        return math.lcm(self.left.tau_order, self.right.tau_order)

    def atom_norm(self, a) -> int:
        return self.left.atom_norm(a[0]) + self.right.atom_norm(a[1])

    def meet_L(self, a, b):
        return (self.left.meet_L(a[0], b[0]), self.right.meet_L(a[1], b[1]))

    def join_L(self, a, b):
        return (self.left.join_L(a[0], b[0]), self.right.join_L(a[1], b[1]))

    def left_complement(self, a):
        return (self.left.left_complement(a[0]), self.right.left_complement(a[1]))

    def tau(self, a):
        return (self.left.tau(a[0]), self.right.tau(a[1]))

    def simple_mul(self, a, b):
        return (self.left.simple_mul(a[0], b[0]), self.right.simple_mul(a[1], b[1]))

    def simple_ldiv(self, a, b):
        return (self.left.simple_ldiv(a[0], b[0]), self.right.simple_ldiv(a[1], b[1]))

    def enumerate_simples(self) -> Iterator[Simple]:
        return itertools.product(list(self.left.enumerate_simples()), list(self.right.enumerate_simples()))

    def is_simple(self, a) -> bool:
        return (
            isinstance(a, tuple) and len(a) == 2
            and self.left.is_simple(a[0]) and self.right.is_simple(a[1])
        )

    def simple_word(self, a) -> str:
        return f"({self.left.simple_word(a[0])}, {self.right.simple_word(a[1])})"


def _perm_inverse(p) -> tuple[int, ...]:
    inv = [0] * len(p)
    for j, v in enumerate(p):
        inv[v] = j
    return tuple(inv)


@functools.lru_cache(maxsize=None)
def make_braid(n: int, max_strands: int = MAX_STRANDS) -> BraidStructure:
    if not 2 <= n <= max_strands:
        raise GroupSpecError(f"braid strand count must be in [2, {max_strands}], got {n}")
    return BraidStructure(n)


@functools.lru_cache(maxsize=None)
def make_cyclic_amalgam(N: int) -> CyclicAmalgamStructure:
    if N < 2:
        raise GroupSpecError(f"cyclic amalgam needs N >= 2, got {N}")
    return CyclicAmalgamStructure(N)


@functools.lru_cache(maxsize=None)
def make_product(a: GarsideStructure, b: GarsideStructure) -> ProductStructure:
    return ProductStructure(a, b)


_ATOM_SPEC = re.compile(r"(braid|cyclic):(\d+)")


def parse_group_spec(text: str) -> GarsideStructure:
    """Build (or fetch) the structure named by a group spec string."""
    structure, pos = _parse_spec(text, 0)
    if pos != len(text):
        raise GroupSpecError(f"unexpected {text[pos:]!r} at position {pos} in group spec {text!r}")
    return structure


def _parse_spec(text: str, pos: int) -> tuple[GarsideStructure, int]:
    if text.startswith("product(", pos):
        left, pos = _parse_spec(text, pos + len("product("))
        if not text.startswith(",", pos):
            raise GroupSpecError(f"expected ',' at position {pos} in group spec {text!r}")
        right, pos = _parse_spec(text, pos + 1)
        if not text.startswith(")", pos):
            raise GroupSpecError(f"expected ')' at position {pos} in group spec {text!r}")
        return make_product(left, right), pos + 1
    m = _ATOM_SPEC.match(text, pos)
    if m is None:
        raise GroupSpecError(f"cannot parse group spec {text!r} at position {pos}")
    kind, value = m.group(1), int(m.group(2))
    structure = make_braid(value) if kind == "braid" else make_cyclic_amalgam(value)
    return structure, m.end()
