"""
Acceptance criteria 1-6, each run at its stated tolerance (exact) and time
budget.  One PASS/FAIL line per criterion is printed in the terminal
summary, and also to stdout when the file is run directly.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from fractions import Fraction

import pytest
from oracles import brute_meet_join, braid_leq_L, cayley_ball

from garside import (
    conjugate,
    inf_s,
    len_s,
    lmax,
    make_braid,
    make_cyclic_amalgam,
    normalize,
    parse_group_spec,
    parse_word,
    power,
    sup_s,
    super_summit_set,
    t_inf,
    t_inf_by_detection,
    t_len,
    t_sup,
    word_length,
)
from garside.stable import (
    GeodesicStatus,
    certify_periodically_geodesic,
    check_periodically_geodesic_up_to,
    geodesic_power,
    is_in_stable_sss,
    stable_sss,
    stable_sss_by_filter,
)
from conftest import random_element, random_word_element
from test_core import _all_normal_forms

RESULTS: list[str] = []


def run_criterion(number: int, title: str, budget: float, body) -> None:
    start = time.perf_counter()
    try:
        detail = body()
        error = None
    except AssertionError as exc:
        detail, error = None, exc
    elapsed = time.perf_counter() - start
    ok = error is None and elapsed < budget
    reason = detail if ok else (f"assertion failed: {error}" if error else f"over budget {budget:g}s")
    line = f"criterion {number} {'PASS' if ok else 'FAIL'}: {title} ({elapsed:.2f}s, budget {budget:g}s) {reason}"
    RESULTS.append(line)
    print(line)
    if error is not None:
        raise error
    assert elapsed < budget, line


def criterion_1() -> str:
    for N in (2, 3, 4, 5):
        g = parse_word(make_cyclic_amalgam(N), f"x^{N - 1}")
        for k in range(1, 3 * N + 1):
            assert power(g, k).inf == (k * (N - 1)) // N, (N, k)
        ti = t_inf(g)
        assert ti == Fraction(N - 1, N)
        assert inf_s(g) == 0
        assert ti == inf_s(g) + 1 - Fraction(1, N)
    return "N = 2..5"


def criterion_2() -> str:
    st = parse_group_spec("product(cyclic:2,cyclic:2)")
    assert st.norm_delta == 4
    g = parse_word(st, "(x^-1, y)")
    for n in range(1, 9):
        gn = power(g, n)
        assert inf_s(gn) == math.floor(Fraction(-n, 2)), n
        assert sup_s(gn) == math.ceil(Fraction(n, 2)), n
    assert (t_inf(g), t_sup(g), t_len(g)) == (Fraction(-1, 2), Fraction(1, 2), 1)
    assert len_s(power(g, 2)) == len_s(g) == 2
    return "t_inf=-1/2 t_sup=1/2 t_len=1"


def criterion_3() -> str:
    st = parse_group_spec("product(cyclic:2,cyclic:2)")
    g = parse_word(st, "(x^-1, y)")
    rep = geodesic_power(g)
    assert rep.n == 2 and rep.n <= st.norm_delta ** 2
    members = super_summit_set(power(g, 2)).members
    for h in members:
        assert certify_periodically_geodesic(h) is GeodesicStatus.CERTIFIED, h
        assert check_periodically_geodesic_up_to(h, 12), h
    c3 = make_cyclic_amalgam(3)
    x2 = parse_word(c3, "x^2")
    rep3 = geodesic_power(x2)
    assert rep3.n == 3 and rep3.n <= 9
    assert power(x2, 3) == c3.delta_power(2)
    return f"{len(members)} member(s) of [g^2]^S certified"


def criterion_4() -> str:
    rng = random.Random(42)
    count = 0
    for st in (make_braid(3), make_braid(4)):
        for _ in range(150):
            g = random_element(st, rng, max_len=3, max_inf=1)
            assert g.len <= 3 and abs(g.inf) <= 1
            ti = t_inf(g)
            assert ti == t_inf_by_detection(g), g
            assert inf_s(g) == math.floor(ti), g
            count += 1
    assert count >= 200
    return f"{count} elements"


def criterion_5() -> str:
    rng = random.Random(43)
    count = 0
    specs = ["braid:3", "cyclic:2", "cyclic:3", "cyclic:4"]
    for spec in specs:
        st = parse_group_spec(spec)
        N = st.norm_delta
        for _ in range(30):
            g = random_element(st, rng, max_len=3, max_inf=1)
            sss = super_summit_set(g).members
            for h in sss:
                if not is_in_stable_sss(h, g):
                    continue
                for n in range(1, 3 * N + 1):
                    hn = power(h, n)
                    assert hn.inf == inf_s(power(g, n)) and hn.sup == sup_s(power(g, n)), (g, h, n)
            stab = stable_sss(g).members
            assert stab and stab <= sss
            assert stab == stable_sss_by_filter(g).members
            count += 1
    assert count >= 100
    return f"{count} elements"


def _suite_word_length() -> int:
    b3 = make_braid(3)
    ball = cayley_ball(b3, 5)
    n = 0
    for g in _all_normal_forms(b3, range(-2, 3), 3):
        assert word_length(g) == ball[g], g
        n += 1
    return n


def _suite_meet_join() -> int:
    n = 0
    for k in (2, 3, 4):
        st = make_braid(k)
        meets, joins = brute_meet_join(st.enumerate_simples(), braid_leq_L)
        for (a, b), m in meets.items():
            assert st.meet_L(a, b) == m and st.join_L(a, b) == joins[a, b]
            n += 1
    return n


SUITE_SPECS = ["braid:3", "braid:4", "cyclic:3", "product(cyclic:2,cyclic:2)"]


def _suite_inequalities(rng) -> int:
    n = 0
    for i in range(1000):
        st = parse_group_spec(SUITE_SPECS[i % len(SUITE_SPECS)])
        g = random_element(st, rng)
        i1, s1 = inf_s(g), sup_s(g)
        for k in range(1, 5):
            gk = power(g, k)
            assert k * i1 <= inf_s(gk) <= k * i1 + k - 1
            assert k * s1 - (k - 1) <= sup_s(gk) <= k * s1
        n += 1
    return n


def _suite_lmax(rng) -> int:
    n = hits = 0
    for i in range(1000):
        st = parse_group_spec(SUITE_SPECS[i % len(SUITE_SPECS)])
        g = random_word_element(st, rng)
        simples = list(st.enumerate_simples())
        word = [rng.choice(simples) for _ in range(rng.randint(1, 4))]
        if (g * normalize(st, 0, word)).inf > g.inf:
            hits += 1
            assert (g * st.element(lmax(st, word))).inf > g.inf
        n += 1
    assert hits > 100
    return n


def _suite_homogeneity(rng) -> int:
    n = 0
    for i in range(1000):
        st = parse_group_spec(SUITE_SPECS[i % len(SUITE_SPECS)])
        g = random_element(st, rng)
        k = rng.randint(2, 4)
        gk = power(g, k)
        assert t_inf(gk) == k * t_inf(g) and t_sup(gk) == k * t_sup(g)
        n += 1
    return n


def _suite_conjugacy(rng) -> int:
    n = 0
    for i in range(1000):
        st = parse_group_spec(SUITE_SPECS[i % len(SUITE_SPECS)])
        g = random_element(st, rng)
        h = conjugate(g, random_word_element(st, rng))
        assert t_inf(h) == t_inf(g) and t_sup(h) == t_sup(g)
        n += 1
    return n


def criterion_6() -> str:
    rng = random.Random(44)
    counts = {
        "word_length/BFS": _suite_word_length(),
        "meet/join pairs": _suite_meet_join(),
        "power inequalities": _suite_inequalities(rng),
        "Lmax": _suite_lmax(rng),
        "homogeneity": _suite_homogeneity(rng),
        "conjugacy invariance": _suite_conjugacy(rng),
    }
    assert all(counts[k] >= 1000 for k in ("power inequalities", "Lmax", "homogeneity", "conjugacy invariance"))
    return ", ".join(f"{k} {v}" for k, v in counts.items())


CRITERIA = [
    (1, "cyclic x^(N-1) powers, t_inf and bound attained", 1.0, criterion_1),
    (2, "(x^-1, y) summit values and translation numbers", 5.0, criterion_2),
    (3, "geodesic power and certification", 5.0, criterion_3),
    (4, "t_inf max formula vs detection on B_3, B_4", 60.0, criterion_4),
    (5, "stable membership horizon and stable SSS", 120.0, criterion_5),
    (6, "oracle and property suites", 120.0, criterion_6),
]


@pytest.mark.parametrize("number, title, budget, body", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, budget, body):
    run_criterion(number, title, budget, body)


if __name__ == "__main__":
    for args in CRITERIA:
        try:
            run_criterion(*args)
        except AssertionError:
            pass
