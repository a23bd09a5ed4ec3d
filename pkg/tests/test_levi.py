from fractions import Fraction

import pytest

import flagcalc
from flagcalc.cartan import ParabolicSubset, Weight
from flagcalc.errors import ValidationError
from flagcalc.levi import (
    LeviQuery, bk_residues, chi, chi_projection_identity, converse_counterexamples,
    format_residues, is_levi_movable, levi_from_parts, verify_levi_descent,
)
from flagcalc.schubert import tuples_with_codim
from flagcalc.sweep import parabolic_chains
from flagcalc.weyl import enumerate_min_reps, factorize, parse_word

EMPTY = ParabolicSubset.from_iterable(())


def P_(*idx):
    return ParabolicSubset.from_iterable(idx)


def words(system, *texts):
    return [parse_word(system, t) for t in texts]


def test_chi_values(A2):
    assert chi(parse_word(A2, "1 2"), EMPTY).root_coords == (1, 0)
    assert chi(parse_word(A2, "e"), EMPTY) == A2.rho * 2
    assert chi(parse_word(A2, "1 2 1"), EMPTY) == Weight(A2, (0, 0))
    with pytest.raises(ValidationError):
        chi(parse_word(A2, "2 1"), P_(0))


def test_residues_non_movable(A2):
    q = LeviQuery(words(A2, "1 2", "1 2", "2 1"), EMPTY)
    assert bk_residues(q) == {0: 0, 1: -1}
    report = is_levi_movable(q)
    assert report.c == 1 and not report.movable
    assert format_residues(report.residues) == {"x1": "0", "x2": "-1"}


def test_point_class_is_movable(A2):
    report = is_levi_movable(LeviQuery(words(A2, "e", "1 2 1"), EMPTY))
    assert report.movable and report.c == 1


def test_grassmannian_movable(A3):
    report = is_levi_movable(LeviQuery(words(A3, *["1 3 2"] * 4), P_(0, 2)))
    assert report.movable and report.c == 2


def test_A1_sign_anchor(A1):
    # for A1 the only face functional is (a, b, c) -> a - b - c up to sign,
    # zero on (b + c, b, c) and negative on (0, 1, 1)
    from flagcalc.cone import evaluate_functional, face_functionals
    ws = words(A1, "e", "1", "1")
    assert is_levi_movable(LeviQuery(ws, EMPTY)).movable
    fn = face_functionals(ws, EMPTY)[0]
    lam = lambda *cs: [Weight(A1, (c,)) for c in cs]
    assert evaluate_functional(fn, lam(5, 2, 3)) == 0
    assert evaluate_functional(fn, lam(0, 1, 1)) < 0


def test_levi_descent_example(A2):
    ws = words(A2, "e", "1 2 1", "1 2 1")
    r = verify_levi_descent(ws, EMPTY, P_(1))
    assert r.movable_w and r.movable_u and r.movable_v and r.descent_holds
    rec = r.record()
    assert rec["movable_u"] is True and rec["residues"] == {"x1": "0", "x2": "0"}


def test_levi_descent_rejects_non_movable(A2):
    with pytest.raises(ValidationError, match="not Levi-movable"):
        verify_levi_descent(words(A2, "1 2", "1 2", "2 1"), EMPTY, P_(1))


@pytest.mark.parametrize("label", ["A2", "B2", "A3"])
def test_levi_from_parts_consistent(label):
    system = flagcalc.root_system(label)
    for P, Q in parabolic_chains(system):
        for tup in tuples_with_codim(system, P, 3):
            verdict, report = levi_from_parts(tup, P, Q)
            assert verdict == report.movable_w


def test_converse_fails_without_residues(A2):
    # movable parts do not make the whole tuple movable
    found = list(converse_counterexamples(A2, 3, EMPTY, P_(1)))
    assert found
    tuples = {tuple(str(w) for w in r.tuple) for r in found}
    assert ("1 2", "1 2", "2 1") in tuples
    for r in found:
        assert r.movable_u and r.movable_v and not r.movable_w
        assert any(r.w_report.residues.values())


@pytest.mark.parametrize("label", ["A3", "B3", "G2"])
def test_W_Q_fixes_coweights_outside_Q(label):
    system = flagcalc.root_system(label)
    xs = system.fundamental_coweights
    for P, Q in parabolic_chains(system):
        for w in enumerate_min_reps(system, P):
            v = factorize(w, P, Q).v
            for i in Q.complement(system.rank):
                assert v.apply_coweight(xs[i]) == xs[i]


def test_chi_projection_example(A3):
    assert all(
        chi_projection_identity(w, P_(0), P_(0, 1)) for w in enumerate_min_reps(A3, P_(0))
    )


def test_converse_fails_on_two_step_flag(A3):
    # G/P = Fl(1,3;4)
    P, Q = P_(1), P_(1, 2)
    found = list(converse_counterexamples(A3, 3, P, Q))
    assert len(found) == 15
    r = next(x for x in found if [str(w) for w in x.tuple] == ["1 2 3", "2 1 3", "2 3 2 1"])
    assert (r.c_w, r.c_u, r.c_v) == (1, 1, 1)
    assert format_residues(r.w_report.residues) == {"x1": "0", "x3": "-1"}
