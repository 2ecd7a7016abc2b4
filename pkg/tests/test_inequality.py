import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circlet.core import FractionalPoint, edge_length, length_profile, random_tour
from circlet.errors import BudgetExceededError, DomainError, UnsupportedInstanceError
from circlet.inequality import (
    canonical_labeling,
    check_circlet,
    circlet_coeffs,
    circlet_strength,
    crown_strength,
    evaluate,
    labeled_value,
    lemma1_lower_bound,
    separate,
    tt_coeffs,
    tt_triangle_check,
)
from circlet.subtour import half_one_point, lambda_point

CIRCLET_NS = [4, 8, 12, 16, 20, 24]


@pytest.mark.parametrize("n,c", [(12, (1, 4, 3, 2, 5, 0)), (4, (1, 0)), (8, (1, 2, 3, 0))])
def test_coeff_examples(n, c):
    assert circlet_coeffs(n).c == c
    assert circlet_coeffs(n).rhs == n - 2


@pytest.mark.parametrize("n", CIRCLET_NS)
def test_coeff_shape(n):
    c = circlet_coeffs(n).c
    assert c[0] == 1 and c[-1] == 0
    assert all(ci >= 2 for ci in c[1:-1])


@pytest.mark.parametrize("n", [3, 6, 10, 14])
def test_coeffs_need_multiple_of_four(n):
    with pytest.raises(UnsupportedInstanceError):
        circlet_coeffs(n)


@pytest.mark.parametrize("n,f,rhs", [(8, (3, 4, 5, 2), 22), (12, (5, 8, 7, 6, 9, 4), 58)])
def test_tt_examples(n, f, rhs):
    tt = tt_coeffs(n)
    assert tt.f == f and tt.rhs == rhs


@pytest.mark.parametrize("n", CIRCLET_NS)
def test_tt_shift_and_range(n):
    d = n // 2
    tt, c = tt_coeffs(n), circlet_coeffs(n)
    assert all(fi - ci == d - 2 for fi, ci in zip(tt.f, c.c))
    assert all(d - 2 <= fi <= 2 * d - 3 for fi in tt.f)


@pytest.mark.parametrize("n", [8, 12, 16])
def test_tt_shift_on_tours(n):
    rng = random.Random(n)
    for _ in range(50):
        prof = length_profile(n, random_tour(n, rng))
        assert evaluate(tt_coeffs(n), prof) - evaluate(circlet_coeffs(n), prof) == n * (n // 2 - 2)


@pytest.mark.parametrize("n", [4, 8, 12])
def test_tt_triangle(n):
    assert tt_triangle_check(n)


@pytest.mark.parametrize("n", [8, 12, 16])
def test_tt_tight_witness_at_d_plus_one(n):
    d = n // 2
    f = lambda i, j: tt_coeffs(n).cost(edge_length(n, i, j))
    assert f(1, d) == f(1, d + 1) + f(d + 1, d) == d - 2 + d - 1


def test_evaluate_examples():
    assert evaluate(circlet_coeffs(12), (12, 0, 0, 0, 0, 0)) == 12
    assert evaluate(circlet_coeffs(8), (6, 0, 0, 2)) == 6
    assert evaluate(circlet_coeffs(8), (4, 0, 0, 4)) == 4
    with pytest.raises(DomainError):
        evaluate(circlet_coeffs(8), (1, 2, 3))


@pytest.mark.parametrize(
    "profile,satisfied,slack", [((6, 0, 0, 2), True, 0), ((4, 0, 0, 4), False, -2), ((8, 0, 0, 0), True, 2)]
)
def test_check_examples(profile, satisfied, slack):
    assert tuple(check_circlet(8, profile)) == (satisfied, slack)


@pytest.mark.parametrize("profile,bound", [((8, 0, 0, 0), 8), ((6, 0, 0, 2), 6), ((0, 8, 0, 0), 16)])
def test_lower_bound_examples(profile, bound):
    assert lemma1_lower_bound(8, profile) == bound


def _compositions(total, parts):
    for cut in itertools.combinations(range(total + parts - 1), parts - 1):
        prev, out = -1, []
        for c in cut + (total + parts - 1,):
            out.append(c - prev - 1)
            prev = c
        yield tuple(out)


@pytest.mark.parametrize("n", [4, 8, 12])
def test_lower_bound_chain_exhaustive(n):
    c = circlet_coeffs(n)
    for prof in _compositions(n, n // 2):
        assert evaluate(c, prof) >= lemma1_lower_bound(n, prof)


def test_lower_bound_rejects_bad_sum():
    with pytest.raises(DomainError):
        lemma1_lower_bound(8, (1, 0, 0, 0))


def test_strength_values():
    assert circlet_strength(8) == crown_strength(8) == Fraction(11, 10)
    assert circlet_strength(12) == Fraction(29, 27)
    assert crown_strength(12) == Fraction(35, 33)
    with pytest.raises(DomainError):
        crown_strength(4)


@pytest.mark.parametrize("n", [12, 16, 20, 24, 28, 32])
def test_strength_dominance(n):
    assert circlet_strength(n) > crown_strength(n)


# -- separation ----------------------------------------------------------

def test_separate_half_one():
    res = separate(8, half_one_point(8))
    assert res.value == 4 and res.violation == 2 and res.violated
    assert res.labeling == tuple(range(1, 9))
    assert res.mode == "exhaustive"


def test_separate_tours_never_violate():
    rng = random.Random(7)
    for _ in range(3):
        x = FractionalPoint.from_tour(random_tour(8, rng))
        res = separate(8, x)
        assert res.violation <= 0


def test_separate_lambda_three_quarters():
    x = lambda_point(8, Fraction(3, 4))
    assert labeled_value(8, x, range(1, 9)) == 6
    res = separate(8, x)
    assert res.value <= 6


def test_separate_matches_brute_force():
    rng = random.Random(11)
    edges = [(i, j) for i in range(1, 9) for j in range(i + 1, 9)]
    x = FractionalPoint.from_dict(8, {e: Fraction(rng.randint(0, 4), 4) for e in rng.sample(edges, 10)})
    best = min(labeled_value(8, x, perm) for perm in itertools.permutations(range(1, 9)))
    res = separate(8, x)
    assert res.value == best
    assert labeled_value(8, x, res.labeling) == res.value
    assert canonical_labeling(res.labeling) == res.labeling


@settings(max_examples=30)
@given(st.permutations(list(range(1, 9))), st.integers(0, 7), st.booleans())
def test_labeled_value_dihedral_invariant(perm, m, flip):
    x = half_one_point(8)
    moved = [((-v if flip else v) + m) % 8 + 1 for v in perm]
    assert labeled_value(8, x, perm) == labeled_value(8, x, moved)


def test_heuristic_is_seeded_and_exact():
    x = half_one_point(12)
    a = separate(12, x, mode="heuristic", budget=3, seed=5)
    b = separate(12, x, mode="heuristic", budget=3, seed=5)
    assert a == b and a.mode == "heuristic"
    assert labeled_value(12, x, a.labeling) == a.value


def test_exhaustive_cap():
    with pytest.raises(BudgetExceededError, match="heuristic"):
        separate(16, half_one_point(16))
    with pytest.raises(UnsupportedInstanceError):
        separate(8, half_one_point(8), mode="magic")


def test_separate_half_one_n12():
    res = separate(12, half_one_point(12))
    assert (res.value, res.violation) == (6, 4)
    assert res.labeling == tuple(range(1, 13))
