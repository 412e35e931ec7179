import pytest
from conftest import random_element, random_word_element
from oracles import brute_super_summit, cayley_ball
from test_core import _all_normal_forms

from garside import (
    Element,
    SummitOverflowError,
    conjugate,
    cycling,
    decycling,
    inf_s,
    len_s,
    make_cyclic_amalgam,
    parse_group_spec,
    parse_word,
    power,
    sup_s,
    summit_representative,
    super_summit_set,
)
from garside.conjugacy import SummitSet


def test_conjugate_examples(B3, rng):
    g = random_element(B3, rng)
    assert conjugate(g, B3.one()) == g
    s1, s2 = parse_word(B3, "s1"), parse_word(B3, "s2")
    assert conjugate(s1, s2) == s2.inverse() * s1 * s2
    D = B3.delta_power(1)
    assert conjugate(D, s1) == D * (D.inverse() * s1.inverse() * D * s1)
    assert conjugate(D, s1) == D * s2.inverse() * s1 != D
    assert conjugate(D, parse_word(B3, "s1 s2 s1")) == D
    assert conjugate(D, s1 * s1) == D * s2.inverse() * s2.inverse() * s1 * s1


def test_cycling_examples(B3, C3):
    D2 = B3.delta_power(2)
    assert cycling(D2) == D2 and decycling(D2) == D2
    h = parse_word(B3, "s1^-1 s2")
    c = parse_word(B3, "s2 s1")  # τ^(-inf h)(σ1σ2) = τ(σ1σ2)
    assert cycling(h) == conjugate(h, c)
    assert decycling(h) == conjugate(h, parse_word(B3, "s2^-1"))
    for hh in (cycling(h), decycling(h)):
        assert hh.inf >= h.inf and hh.sup <= h.sup
    x2 = parse_word(C3, "x^2")
    assert cycling(x2) == x2 and decycling(x2) == x2


@pytest.mark.parametrize("spec", ["braid:3", "braid:4", "cyclic:3", "product(cyclic:2,cyclic:2)"])
def test_cycling_decycling_monotone(spec, rng):
    st = parse_group_spec(spec)
    for _ in range(300):
        h = random_word_element(st, rng, 10)
        for step in (cycling, decycling):
            hh = step(h)
            assert hh.inf >= h.inf and hh.sup <= h.sup


def test_summit_representative_examples(B3, C3):
    D3 = B3.delta_power(3)
    assert summit_representative(D3) == (D3, B3.one())
    g = conjugate(B3.delta_power(1), parse_word(B3, "s2 s1^-1 s2"))
    h, _ = summit_representative(g)
    assert h == B3.delta_power(1)
    x2 = parse_word(C3, "x^2")
    assert summit_representative(x2) == (x2, C3.one())
    assert (inf_s(x2), sup_s(x2)) == (0, 1)


@pytest.mark.parametrize("spec", ["braid:3", "braid:4", "cyclic:4", "product(braid:3,cyclic:2)"])
def test_summit_representative_witness(spec, rng):
    st = parse_group_spec(spec)
    for _ in range(100):
        g = random_word_element(st, rng, 12)
        h, c = summit_representative(g)
        assert conjugate(g, c) == h
        assert (h.inf, h.sup) == (inf_s(g), sup_s(g))


def test_summit_values_examples(P22):
    g = parse_word(P22, "(x^-1, y)")
    for n in range(1, 9):
        gn = power(g, n)
        assert inf_s(gn) == -((n + 1) // 2)  # ⌊-n/2⌋
        assert sup_s(gn) == (n + 1) // 2  # ⌈n/2⌉
    one = P22.one()
    assert (inf_s(one), sup_s(one), len_s(one)) == (0, 0, 0)
    x3 = parse_word(make_cyclic_amalgam(4), "x^3")
    assert (inf_s(x3), sup_s(x3)) == (0, 1)


@pytest.mark.parametrize("spec", ["braid:3", "braid:4", "cyclic:3", "product(cyclic:2,cyclic:2)"])
def test_power_inequalities(spec, rng):
    st = parse_group_spec(spec)
    for _ in range(150):
        g = random_element(st, rng)
        i1, s1 = inf_s(g), sup_s(g)
        for n in range(1, 7):
            gn = power(g, n)
            assert n * i1 <= inf_s(gn) <= n * i1 + n - 1
            assert n * s1 - (n - 1) <= sup_s(gn) <= n * s1


@pytest.mark.parametrize("spec", ["braid:3", "braid:4", "cyclic:4", "product(cyclic:2,cyclic:3)"])
def test_summit_values_conjugacy_invariant(spec, rng):
    st = parse_group_spec(spec)
    for _ in range(200):
        g = random_element(st, rng)
        c = random_word_element(st, rng)
        h = conjugate(g, c)
        assert (inf_s(h), sup_s(h)) == (inf_s(g), sup_s(g))
        assert sup_s(g) == -inf_s(g.inverse())


def test_super_summit_set_examples(B3, C3):
    D = B3.delta_power(1)
    assert super_summit_set(D).members == {D}
    s1, s2 = parse_word(B3, "s1"), parse_word(B3, "s2")
    assert super_summit_set(s1).members == {s1, s2}
    x = parse_word(C3, "x")
    assert super_summit_set(x).members == {x}


def _x_count_mod_N(g):
    # homomorphism <x,y | x^N = y^N> -> Z/N, x -> 1, y -> 0; Δ = x^N -> 0
    st = g.structure
    return sum(s[1] for s in g.factors if s[0] == "x") % st.N


def test_x_and_y_are_not_conjugate(C3, rng):
    x, y = parse_word(C3, "x"), parse_word(C3, "y")
    assert _x_count_mod_N(x) != _x_count_mod_N(y)
    for _ in range(200):
        c = random_word_element(C3, rng)
        assert _x_count_mod_N(conjugate(x, c)) == _x_count_mod_N(x)
    assert y not in super_summit_set(x)


@pytest.mark.parametrize("spec", ["braid:3", "braid:4", "cyclic:3", "product(cyclic:2,cyclic:2)"])
def test_super_summit_set_properties(spec, rng):
    st = parse_group_spec(spec)
    for _ in range(40):
        g = random_element(st, rng)
        sss = super_summit_set(g, witness=True)
        assert len(sss) >= 1
        for h in sss.members:
            assert (h.inf, h.sup) == (sss.inf_s, sss.sup_s)
            assert conjugate(g, sss.conjugators[h]) == h
        assert super_summit_set(g, parallel=True).members == sss.members
        # any member generates the same set
        h = sss.sorted_members()[-1]
        assert super_summit_set(h).members == sss.members


def test_super_summit_set_matches_ball_search(B3):
    ball = list(cayley_ball(B3, 4))
    checked = 0
    for g in _all_normal_forms(B3, range(-1, 2), 2):
        lo, hi, brute = brute_super_summit(g, ball)
        sss = super_summit_set(g)
        assert (sss.inf_s, sss.sup_s) == (lo, hi)
        assert sss.members == brute
        checked += 1
    assert checked == 3 * (1 + 4 + 8)


def test_member_cap_overflow(B4):
    g = parse_word(B4, "s1 s2^-1 s3 s2")
    full = super_summit_set(g)
    assert len(full) > 2
    with pytest.raises(SummitOverflowError):
        super_summit_set(g, member_cap=2)


def test_summit_set_json(B3):
    sss = super_summit_set(parse_word(B3, "s1"))
    doc = sss.to_dict(base_word="s1")
    assert doc == {
        "spec": "braid:3",
        "base_word": "s1",
        "kind": "super",
        "inf_s": 0,
        "sup_s": 1,
        "members": ["D^0 . s2", "D^0 . s1"],
    }
    assert sss.to_json() == sss.to_json()
    assert isinstance(sss, SummitSet) and Element(B3, 0, ()) not in sss
