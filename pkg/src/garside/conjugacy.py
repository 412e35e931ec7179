"""
Conjugacy invariants inf_s, sup_s and super summit sets.

Summit values are reached by iterated cycling (raises inf) followed by
iterated decycling (lowers sup).  Each phase stops when the trajectory comes
back to an element it has already visited without improving, which is
unconditionally correct because cycling and decycling are deterministic maps
on a finite set of elements with fixed (inf, sup).

The super summit set is then the closure of one summit element under
conjugation by simples, filtered to the summit (inf, sup).
"""

from __future__ import annotations

import dataclasses
import functools
import json
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable

from .core import (
    Element,
    GarsideError,
    _append,
    _finish,
    _prepend,
    cached_power,
    conjugate,
    inverse,
    multiply,
)

DEFAULT_MEMBER_CAP = 100_000


class SummitOverflowError(GarsideError):
    """A summit set closure exceeded its member cap."""


def cycling(h: Element) -> Element:
    """Conjugate of h by τ^(-inf h)(s_1)."""
    return _cycle(h)[0]


def decycling(h: Element) -> Element:
    """Conjugate of h by s_k⁻¹, i.e. s_k h s_k⁻¹."""
    return _decycle(h)[0]


def _cycle(h: Element):
    st = h.structure
    if not h.factors:
        return h, st.identity
    c = st.tau_power(h.factors[0], -h.r)
    factors = list(h.factors[1:])
    _append(st, factors, c)
    return _finish(st, h.r, factors), c


def _decycle(h: Element):
    st = h.structure
    if not h.factors:
        return h, st.identity
    last = h.factors[-1]
    factors = list(h.factors[:-1])
    # s_k Δ^r F = Δ^r τ^r(s_k) F
    _prepend(st, factors, st.tau_power(last, h.r))
    return _finish(st, h.r, factors), last


def _improve(h: Element, step, better: Callable[[Element, Element], bool], track: bool, witness, invert: bool):
    seen = {h}
    while h.factors:
        nxt, s = step(h)
        if track:
            s_elem = h.structure.element(s)
            witness = multiply(witness, inverse(s_elem) if invert else s_elem)
        if better(nxt, h):
            seen = {nxt}
        elif nxt in seen:
            h = nxt
            break
        else:
            seen.add(nxt)
        h = nxt
    return h, witness


def _summit(g: Element, track: bool) -> tuple[Element, Element | None]:
    witness = g.structure.one() if track else None
    h, witness = _improve(g, _cycle, lambda a, b: a.inf > b.inf, track, witness, invert=False)
    h, witness = _improve(h, _decycle, lambda a, b: a.sup < b.sup, track, witness, invert=True)
    return h, witness


@functools.lru_cache(maxsize=65536)
def _summit_cached(g: Element) -> Element:
    return _summit(g, track=False)[0]


def summit_representative(g: Element) -> tuple[Element, Element]:
    """Return (h, c) with h = c⁻¹gc, inf h = inf_s g and sup h = sup_s g."""
    h, c = _summit(g, track=True)
    return h, c


def inf_s(g: Element) -> int:
    return _summit_cached(g).inf


def sup_s(g: Element) -> int:
    return _summit_cached(g).sup


def len_s(g: Element) -> int:
    h = _summit_cached(g)
    return h.sup - h.inf


def power_inf_s(g: Element, n: int) -> int:
    """inf_s(g^n), memoised on (g, n)."""
    return inf_s(cached_power(g, n))


def power_sup_s(g: Element, n: int) -> int:
    return sup_s(cached_power(g, n))


@dataclasses.dataclass(frozen=True)
class SummitSet:
    """A super summit set ([g]^S) or stable super summit set ([g]^St)."""

    base: Element
    kind: str  # "super" | "stable"
    members: frozenset[Element]
    inf_s: int
    sup_s: int
    conjugators: dict[Element, Element] | None = dataclasses.field(default=None, compare=False)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, h: object) -> bool:
        return h in self.members

    def __iter__(self):
        return iter(self.sorted_members())

    def sorted_members(self) -> list[Element]:
        return sorted(self.members, key=Element.sort_key)

    def to_dict(self, base_word: str | None = None) -> dict:
        from .words import format_element

        doc = {
            "spec": self.base.structure.spec,
            "base_word": base_word if base_word is not None else format_element(self.base),
            "kind": self.kind,
            "inf_s": self.inf_s,
            "sup_s": self.sup_s,
            "members": [format_element(h) for h in self.sorted_members()],
        }
        if self.conjugators is not None:
            doc["conjugators"] = {
                format_element(h): format_element(self.conjugators[h]) for h in self.sorted_members()
            }
        return doc

    def to_json(self, base_word: str | None = None) -> str:
        return json.dumps(self.to_dict(base_word))


def simple_conjugators(structure) -> list[tuple[Element, Element]]:
    """(s, s⁻¹) for every simple s ≠ 1, in enumeration order."""
    out = []
    for a in structure.enumerate_simples():
        if a == structure.identity:
            continue
        s = structure.element(a)
        out.append((s, inverse(s)))
    return out


def closure(
    seeds: Iterable[Element],
    keep: Callable[[Element], bool],
    member_cap: int = DEFAULT_MEMBER_CAP,
    witnesses: dict[Element, Element] | None = None,
    parallel: bool = False,
) -> set[Element]:
    """
    Close `seeds` under conjugation by simples, keeping elements passing `keep`.

    When `witnesses` is given it must map each seed to a conjugator from the
    base element; it is extended for every new member.
    """
    seeds = list(seeds)
    if not seeds:
        return set()
    conj = simple_conjugators(seeds[0].structure)
    members = set(seeds)
    frontier = sorted(members, key=Element.sort_key)

    def expand(h: Element) -> list[tuple[Element, Element]]:
        out = []
        for s, s_inv in conj:
            h2 = multiply(multiply(s_inv, h), s)
            if h2 not in members and keep(h2):
                out.append((h2, s))
        return out

    pool = ThreadPoolExecutor() if parallel else None
    try:
        while frontier:
            results = list(pool.map(expand, frontier)) if pool else [expand(h) for h in frontier]
            nxt = []
            for h, found in zip(frontier, results):
                for h2, s in found:
                    if h2 in members:
                        continue
                    members.add(h2)
                    nxt.append(h2)
                    if witnesses is not None:
                        witnesses[h2] = multiply(witnesses[h], s)
                    if len(members) > member_cap:
                        raise SummitOverflowError(
                            f"summit closure exceeded member cap {member_cap}"
                        )
            frontier = nxt
    finally:
        if pool:
            pool.shutdown()
    return members


def super_summit_set(
    g: Element,
    member_cap: int = DEFAULT_MEMBER_CAP,
    witness: bool = False,
    parallel: bool = False,
) -> SummitSet:
    h0, c0 = summit_representative(g)
    lo, hi = h0.inf, h0.sup
    witnesses = {h0: c0} if witness else None
    members = closure(
        [h0],
        lambda h: h.inf == lo and h.sup == hi,
        member_cap=member_cap,
        witnesses=witnesses,
        parallel=parallel,
    )
    return SummitSet(g, "super", frozenset(members), lo, hi, witnesses)


__all__ = [
    "DEFAULT_MEMBER_CAP",
    "SummitOverflowError",
    "SummitSet",
    "closure",
    "conjugate",
    "cycling",
    "decycling",
    "inf_s",
    "len_s",
    "power_inf_s",
    "power_sup_s",
    "sup_s",
    "summit_representative",
    "super_summit_set",
]
