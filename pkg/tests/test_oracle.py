import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circlet.core import edge_length, length_profile
from circlet.errors import BudgetExceededError, DomainError
from circlet.inequality import check_circlet, circlet_coeffs, evaluate
from circlet.oracle import (
    LengthMultiset,
    buratti_condition,
    cost_census,
    count_tours,
    edge_length_feasible,
    el_points,
    enumerate_tours,
    min_tour_cost,
)


def brute_min(n, costs):
    best = None
    for rest in itertools.permutations(range(2, n + 1)):
        order = (1,) + rest
        v = sum(costs[edge_length(n, order[i], order[(i + 1) % n]) - 1] for i in range(n))
        best = v if best is None else min(best, v)
    return best


@pytest.mark.parametrize("n,count", [(3, 1), (4, 3), (5, 12), (8, 2520)])
def test_enumerate_counts(n, count):
    tours = list(enumerate_tours(n))
    assert len(tours) == len(set(tours)) == count == count_tours(n)
    assert [t.order for t in tours] == sorted(t.order for t in tours)


def test_enumerate_cap():
    with pytest.raises(BudgetExceededError):
        next(enumerate_tours(13))


@pytest.mark.parametrize("n,expected", [(4, 2), (8, 6), (12, 10), (16, 14)])
def test_held_karp_circlet(n, expected):
    assert min_tour_cost(n, circlet_coeffs(n).c) == expected


def test_held_karp_gap_costs():
    m = 4 * 64
    assert min_tour_cost(8, (1, m, m, 0)) == 6


@settings(max_examples=25, deadline=None)
@given(st.integers(4, 8).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.fractions(-3, 5, max_denominator=6), min_size=n // 2, max_size=n // 2))
))
def test_held_karp_matches_brute_force(args):
    n, costs = args
    assert min_tour_cost(n, costs) == brute_min(n, [Fraction(c) for c in costs])


def test_held_karp_errors():
    with pytest.raises(DomainError):
        min_tour_cost(8, (1, 2))
    with pytest.raises(BudgetExceededError):
        min_tour_cost(21, (1,) * 10)


@pytest.mark.parametrize("n", [4, 8])
def test_oracle_agreement(n):
    c = circlet_coeffs(n).c
    direct = min(evaluate(c, length_profile(n, t)) for t in enumerate_tours(n))
    census = cost_census(n, c)
    assert direct == census.minimum == min_tour_cost(n, c) == n - 2


def test_census_tight_count():
    census = cost_census(8, circlet_coeffs(8).c, watch=(6, 7))
    assert census.tours == 2520
    assert census.at_minimum == census.count(6) >= 20
    assert census.count(7) == 0  # tour values move in steps of 2 here


def test_el_points():
    assert el_points(4) == [(4, 0), (2, 2)]
    assert (5, 0) in el_points(5)
    pts = el_points(8)
    assert all(sum(p) == 8 and check_circlet(8, p).satisfied for p in pts)
    brute = {length_profile(8, t) for t in enumerate_tours(8)}
    assert set(pts) == brute


@pytest.mark.parametrize(
    "lengths,holds,q",
    [([2] * 7, False, 2), ([1] * 7, True, None), ([1, 1, 1, 1, 1, 1, 4], True, None), ([4] * 7, False, 2)],
)
def test_buratti_examples(lengths, holds, q):
    assert tuple(buratti_condition(8, lengths)) == (holds, q)


def test_buratti_size_check():
    with pytest.raises(DomainError):
        buratti_condition(8, [1, 1])
    with pytest.raises(DomainError):
        LengthMultiset.from_lengths(8, [5])


@pytest.mark.parametrize(
    "lengths,kind,expected",
    [([1] * 6 + [4] * 2, "cycle", True), ([1] * 8, "cycle", True), ([2] * 7, "path", False), ([2] * 8, "cycle", False)],
)
def test_feasibility_examples(lengths, kind, expected):
    assert edge_length_feasible(8, lengths, kind=kind) is expected


def _brute_path_lengths(n):
    found = set()
    for perm in itertools.permutations(range(1, n + 1)):
        found.add(tuple(sorted(edge_length(n, perm[i], perm[i + 1]) for i in range(n - 1))))
    return found


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_path_feasibility_matches_brute_force(n):
    realised = _brute_path_lengths(n)
    for L in itertools.combinations_with_replacement(range(1, n // 2 + 1), n - 1):
        assert edge_length_feasible(n, L, kind="path") is (L in realised)


def test_feasibility_cap_and_kind():
    with pytest.raises(BudgetExceededError):
        edge_length_feasible(11, [1] * 10)
    with pytest.raises(DomainError):
        edge_length_feasible(8, [1] * 7, kind="walk")
    with pytest.raises(DomainError):
        edge_length_feasible(8, [1] * 7, kind="cycle")
