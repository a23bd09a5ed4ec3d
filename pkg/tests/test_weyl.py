import math

import pytest
from hypothesis import given, settings, strategies as st

import flagcalc
from flagcalc.cartan import ParabolicSubset
from flagcalc.errors import InvariantViolation, ValidationError
from flagcalc.weyl import (
    WeylElement, bruhat_leq, dim_flag_variety, dual_index, enumerate_min_reps,
    enumerate_weyl_group, factorize, format_word, from_subsystem, in_parabolic_subgroup,
    is_min_rep, longest_element, min_rep, parabolic_subgroup, parse_word, to_subsystem,
)
from oracles import brute_min_coset_reps, perm_of, subword_leq

GROUP_ORDERS = {"A1": 2, "A2": 6, "A3": 24, "B2": 8, "C3": 48, "G2": 12, "B3": 48, "D4": 192}


def P_(*idx):
    return ParabolicSubset.from_iterable(idx)


def words(rank, max_len=8):
    return st.lists(st.integers(0, rank - 1), max_size=max_len)


@pytest.mark.parametrize("label,order", sorted(GROUP_ORDERS.items()))
def test_group_orders(label, order):
    system = flagcalc.root_system(label)
    group = enumerate_weyl_group(system)
    assert len(group) == order == len(set(group))
    assert longest_element(system).length == len(system.positive_roots)


def test_parse_and_format(A2):
    w = parse_word(A2, "1 2 1")
    assert w == parse_word(A2, "2 1 2")
    assert w.length == 3
    assert format_word(w.word) == "1 2 1"
    assert parse_word(A2, "e").is_identity and parse_word(A2, "").is_identity
    assert parse_word(A2, "1 1").is_identity
    with pytest.raises(ValidationError, match="index 9 out of range 1..2"):
        parse_word(A2, "1 9")
    with pytest.raises(ValidationError):
        parse_word(A2, "1 x")


def test_permutation_model(A3):
    # s_i acts as the transposition (i, i+1); length counts inversions
    for w in enumerate_weyl_group(A3):
        p = perm_of(w)
        inv = sum(p[i] > p[j] for i in range(4) for j in range(i + 1, 4))
        assert inv == w.length


@settings(max_examples=60, deadline=None)
@given(words(2), words(2), words(2))
def test_group_axioms_G2(a, b, c):
    G2 = flagcalc.root_system("G2")
    x, y, z = (WeylElement.from_word(G2, t) for t in (a, b, c))
    assert (x * y) * z == x * (y * z)
    assert (x * x.inverse()).is_identity
    assert WeylElement.from_word(G2, x.word) == x
    assert len(x.word) == x.length <= len(a)
    assert (x * y).length <= x.length + y.length


@settings(max_examples=40, deadline=None)
@given(words(3, 6), words(3, 6))
def test_bruhat_matches_subword_property(a, b):
    B3 = flagcalc.root_system("B3")
    u, w = WeylElement.from_word(B3, a), WeylElement.from_word(B3, b)
    assert bruhat_leq(u, w) == subword_leq(u, w)


def test_bruhat_exhaustive_A3(A3):
    group = enumerate_weyl_group(A3)
    for u in group[::3]:
        for w in group:
            assert bruhat_leq(u, w) == subword_leq(u, w)


def test_descents(B2):
    w = parse_word(B2, "1 2")
    assert w.left_descents() == {0} and w.right_descents() == {1}
    for v in enumerate_weyl_group(B2):
        for i in range(2):
            s = WeylElement.simple_reflection(B2, i)
            assert v.is_left_descent(i) == ((s * v).length < v.length)
            assert v.is_right_descent(i) == ((v * s).length < v.length)


@pytest.mark.parametrize("label", ["A3", "B3", "C3", "G2"])
def test_min_reps_match_brute_force(label):
    system = flagcalc.root_system(label)
    group = enumerate_weyl_group(system)
    for mask in range(1 << system.rank):
        P = P_(*[i for i in range(system.rank) if mask >> i & 1])
        assert set(enumerate_min_reps(system, P)) == set(brute_min_coset_reps(system, P, group))
        assert len(enumerate_min_reps(system, P)) * len(parabolic_subgroup(system, P)) == len(group)


def test_min_rep_decomposition():
    system = flagcalc.root_system("B3")
    P = P_(0, 2)
    for w in enumerate_weyl_group(system):
        rep, tail = min_rep(w, P)
        assert rep * tail == w
        assert is_min_rep(rep, P) and in_parabolic_subgroup(tail, P)
        assert rep.length + tail.length == w.length


def test_factorize_example(A2):
    f = factorize(parse_word(A2, "1 2 1"), P_(), P_(1))
    assert format_word(f.u.word) == "2 1"
    assert format_word(f.v.word) == "2"
    f = factorize(parse_word(A2, "1 2"), P_(), P_(0, 1))
    assert f.u.is_identity and format_word(f.v.word) == "1 2"


def test_factorize_rejects_bad_input(A2):
    with pytest.raises(ValidationError):
        factorize(parse_word(A2, "2 1"), P_(0), P_(0, 1))  # not in W^P
    with pytest.raises(ValidationError):
        factorize(parse_word(A2, "1"), P_(1), P_(0))  # P not in Q


def test_factorize_lengths_add(A3):
    P, Q = P_(0), P_(0, 1)
    for w in enumerate_min_reps(A3, P):
        f = factorize(w, P, Q)
        assert f.u.length + f.v.length == w.length
        assert is_min_rep(f.u, Q) and is_min_rep(f.v, P) and in_parabolic_subgroup(f.v, Q)


def test_dual_index(A2, A3):
    assert dual_index(parse_word(A2, "1"), P_(1)) == parse_word(A2, "1")
    P = P_(0, 2)
    dim = dim_flag_variety(A3, P)
    assert dim == 4
    for w in enumerate_min_reps(A3, P):
        d = dual_index(w, P)
        assert is_min_rep(d, P)
        assert d.length == dim - w.length
        assert dual_index(d, P) == w


def test_longest_parabolic(B2):
    assert longest_element(B2, P_(0)) == parse_word(B2, "1")
    w0 = longest_element(B2)
    assert all(bruhat_leq(v, w0) for v in enumerate_weyl_group(B2))


def test_subsystem_round_trip():
    B3 = flagcalc.root_system("B3")
    idx = (1, 2)
    sub = B3.subsystem(idx)
    for v in parabolic_subgroup(B3, P_(*idx)):
        x = to_subsystem(v, sub, idx)
        assert x.length == v.length
        assert from_subsystem(x, B3, idx) == v
    with pytest.raises(ValidationError):
        to_subsystem(parse_word(B3, "1"), sub, idx)


def test_coweight_action_is_linear(G2):
    xs = G2.fundamental_coweights
    for w in enumerate_weyl_group(G2):
        for i in range(2):
            y = w.apply_coweight(xs[i])
            assert w.inverse().apply_coweight(y) == xs[i]


@pytest.mark.parametrize("label", ["A3", "B3", "C3", "G2"])
def test_intersection_fixed_points(label):
    # T-fixed points of u^{-1} X_w inside Q/P are exactly those of X_v:
    # for y in W^P cap W_Q, u y <= w iff y <= v
    from flagcalc.sweep import parabolic_chains

    system = flagcalc.root_system(label)
    for P, Q in parabolic_chains(system, strict=False):
        middle = [y for y in enumerate_min_reps(system, P) if in_parabolic_subgroup(y, Q)]
        for w in enumerate_min_reps(system, P):
            f = factorize(w, P, Q)
            for y in middle:
                assert bruhat_leq(f.u * y, w) == bruhat_leq(y, f.v)
