"""
Stable super summit sets and periodically geodesic powers.

Membership in the stable super summit set only needs powers up to N = ‖Δ‖:
h ∈ [g]^St iff h^n ∈ [g^n]^S for 1 ≤ n ≤ N.  `stable_sss` seeds the closure
with a member found by filtering [g]^S through that test, then closes it
under simple conjugation inside [g]^St.
"""

from __future__ import annotations

import dataclasses
import enum
import json
import math
from fractions import Fraction

from .conjugacy import (
    DEFAULT_MEMBER_CAP,
    SummitSet,
    closure,
    inf_s,
    power_inf_s,
    power_sup_s,
    sup_s,
    super_summit_set,
)
from .core import Element, cached_power, word_length
from .translation import format_rational, t_inf, t_sup


def is_in_stable_sss(h: Element, g: Element) -> bool:
    """
    Whether h lies in the stable super summit set of g.

    h is assumed conjugate to g; that is not checked.
    """
    if h.inf != inf_s(g) or h.sup != sup_s(g):
        return False
    N = g.structure.norm_delta
    for n in range(2, N + 1):
        hn = cached_power(h, n)
        if hn.inf != power_inf_s(g, n) or hn.sup != power_sup_s(g, n):
            return False
    return True


def stable_sss_by_filter(g: Element, member_cap: int = DEFAULT_MEMBER_CAP, parallel: bool = False) -> SummitSet:
    """[g]^St as the members of [g]^S passing the N-power test."""
    sss = super_summit_set(g, member_cap=member_cap, parallel=parallel)
    members = frozenset(h for h in sss.members if is_in_stable_sss(h, g))
    return SummitSet(g, "stable", members, sss.inf_s, sss.sup_s)


def stable_sss(
    g: Element,
    member_cap: int = DEFAULT_MEMBER_CAP,
    witness: bool = False,
    parallel: bool = False,
) -> SummitSet:
    sss = super_summit_set(g, member_cap=member_cap, witness=witness, parallel=parallel)
    h0 = next(h for h in sss.sorted_members() if is_in_stable_sss(h, g))
    witnesses = {h0: sss.conjugators[h0]} if witness else None
    members = closure(
        [h0],
        lambda h: is_in_stable_sss(h, g),
        member_cap=member_cap,
        witnesses=witnesses,
        parallel=parallel,
    )
    return SummitSet(g, "stable", frozenset(members), sss.inf_s, sss.sup_s, witnesses)


class Certificate(str, enum.Enum):
    CASE_I = "case_i"
    CASE_II = "case_ii"
    CASE_III = "case_iii"


@dataclasses.dataclass(frozen=True)
class GeodesicPowerReport:
    n: int
    t_inf: Fraction
    t_sup: Fraction
    q1: int
    q2: int
    certificate: Certificate

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "t_inf": format_rational(self.t_inf),
            "t_sup": format_rational(self.t_sup),
            "q1": self.q1,
            "q2": self.q2,
            "certificate": self.certificate.value,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _certificate(inf_s_value: int, sup_s_value: int) -> Certificate:
    if inf_s_value >= 0:
        return Certificate.CASE_I
    if sup_s_value <= 0:
        return Certificate.CASE_II
    return Certificate.CASE_III


def geodesic_power(g: Element) -> GeodesicPowerReport:
    """
    A power n ≤ N² such that every super summit element of g^n is
    periodically geodesic: n = lcm of the denominators of t_inf and t_sup.
    """
    ti, ts = t_inf(g), t_sup(g)
    q1, q2 = ti.denominator, ts.denominator
    n = math.lcm(q1, q2)
    gn = cached_power(g, n)
    return GeodesicPowerReport(n, ti, ts, q1, q2, _certificate(inf_s(gn), sup_s(gn)))


class GeodesicStatus(str, enum.Enum):
    CERTIFIED = "certified"
    REFUTED = "refuted"
    UNKNOWN = "unknown"


def find_geodesic_failure(h: Element, n_max: int) -> int | None:
    """Smallest 1 ≤ n ≤ n_max with |h^n| ≠ n|h|, or None."""
    base = word_length(h)
    for n in range(1, n_max + 1):
        if word_length(cached_power(h, n)) != n * base:
            return n
    return None


def check_periodically_geodesic_up_to(h: Element, n_max: int) -> bool:
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    return find_geodesic_failure(h, n_max) is None


def certify_periodically_geodesic(h: Element, n_max: int | None = None) -> GeodesicStatus:
    """
    Certify h as periodically geodesic with respect to the simples.

    Returns CERTIFIED when h is in its own super summit set and one of the
    sufficient straightness conditions holds, REFUTED when some n ≤ n_max
    (default 3N) breaks |h^n| = n|h|, and UNKNOWN otherwise.
    """
    lo, hi = inf_s(h), sup_s(h)
    if h.inf == lo and h.sup == hi:
        ti_int = t_inf(h).denominator == 1
        ts_int = t_sup(h).denominator == 1
        if (lo >= 0 and ts_int) or (hi <= 0 and ti_int) or (ti_int and ts_int):
            return GeodesicStatus.CERTIFIED
    if n_max is None:
        n_max = 3 * h.structure.norm_delta
    if find_geodesic_failure(h, n_max) is not None:
        return GeodesicStatus.REFUTED
    return GeodesicStatus.UNKNOWN
