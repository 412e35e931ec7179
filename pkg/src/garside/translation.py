"""
Exact translation numbers t_inf, t_sup, t_len and straightness predicates.

All values are `fractions.Fraction`.  t_inf is the maximum of inf_s(g^k)/k
over 1 ≤ k ≤ N with N = ‖Δ‖; this maximum is attained because t_inf is a
rational with denominator at most N and inf_s(g^q) = ⌊q t_inf(g)⌋.
"""

from __future__ import annotations

from fractions import Fraction

from .conjugacy import power_inf_s, power_sup_s
from .core import Element, GarsideError, cached_power, inverse

Rational = Fraction


class ConsistencyError(GarsideError):
    """Two routes to the same quantity disagreed; signals a bug, not bad input."""


def format_rational(x: Fraction) -> str:
    """``p/q`` in lowest terms with the denominator always printed."""
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    p, _, q = text.partition("/")
    return Fraction(int(p), int(q or 1))


def t_inf(g: Element) -> Fraction:
    N = g.structure.norm_delta
    return max(Fraction(power_inf_s(g, k), k) for k in range(1, N + 1))


def detect_denominator(g: Element) -> tuple[int, int]:
    """
    First q ≤ N with inf_s(g^(qN)) = N inf_s(g^q), with p = inf_s(g^q).

    t_inf(g) = p/q for exactly those q, so the first hit gives the value.
    """
    N = g.structure.norm_delta
    for q in range(1, N + 1):
        p = power_inf_s(g, q)
        if power_inf_s(g, q * N) == N * p:
            return q, p
    raise ConsistencyError(f"no q <= {N} passed the inf_s(g^qN) = N inf_s(g^q) test")


def t_inf_by_detection(g: Element) -> Fraction:
    q, p = detect_denominator(g)
    return Fraction(p, q)


def t_sup(g: Element) -> Fraction:
    return -t_inf(inverse(g))


def t_len(g: Element) -> Fraction:
    return t_sup(g) - t_inf(g)


def is_inf_straight(g: Element) -> bool:
    N = g.structure.norm_delta
    return cached_power(g, N).inf == N * g.inf


def is_sup_straight(g: Element) -> bool:
    N = g.structure.norm_delta
    return cached_power(g, N).sup == N * g.sup


def is_conjugate_to_inf_straight(g: Element) -> bool:
    return t_inf(g).denominator == 1


def is_conjugate_to_sup_straight(g: Element) -> bool:
    return t_sup(g).denominator == 1


def conjugate_to_inf_straight_by_power(g: Element) -> bool:
    """Cross-check route: inf_s(g^N) = N inf_s(g)."""
    N = g.structure.norm_delta
    return power_inf_s(g, N) == N * power_inf_s(g, 1)


def conjugate_to_sup_straight_by_power(g: Element) -> bool:
    N = g.structure.norm_delta
    return power_sup_s(g, N) == N * power_sup_s(g, 1)
