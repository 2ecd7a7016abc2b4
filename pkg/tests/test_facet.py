import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from circlet.core import all_edges, edge_length, length_profile
from circlet.errors import BudgetExceededError, DomainError, UnsupportedInstanceError
from circlet.facet import (
    FacetCertificate,
    base_tours,
    certify_facet,
    exact_rank,
    full_family,
    incidence_vector,
    k_tour,
    special_edge,
    unique_edges_hold,
)
from circlet.inequality import circlet_coeffs, evaluate


@pytest.mark.parametrize("n,count,profile", [(4, 2, (2, 2)), (8, 4, (6, 0, 0, 2)), (12, 6, (10, 0, 0, 0, 0, 2))])
def test_base_tours(n, count, profile):
    tours = base_tours(n)
    assert len(tours) == len(set(tours)) == count
    assert all(length_profile(n, t) == profile for t in tours)


def test_base_tour_shape():
    assert str(base_tours(8)[0]) == "1-2-3-4-8-7-6-5"


@pytest.mark.parametrize("n,k,profile", [(8, 4, (3, 0, 1, 4)), (8, 3, (4, 1, 0, 3))])
def test_k_tour_examples(n, k, profile):
    assert length_profile(n, k_tour(n, k)) == profile


def test_k_tour_n12_k5():
    e = special_edge(12, 5)
    assert edge_length(12, *e) == 2
    assert circlet_coeffs(12).cost(2) == 4


@pytest.mark.parametrize("n", [8, 12, 16, 20, 24])
def test_k_tour_profiles(n):
    d = n // 2
    c = circlet_coeffs(n)
    for k in range(3, d + 1):
        prof = length_profile(n, k_tour(n, k))
        special = k - 1 if k % 2 == 0 else d - k + 1
        assert prof[d - 1] == k and prof[0] == n - k - 1 and prof[special - 1] == 1
        assert c.cost(special) == k - 1
        assert evaluate(c, prof) == n - 2


def test_k_tour_range():
    with pytest.raises(DomainError):
        k_tour(8, 2)
    with pytest.raises(DomainError):
        k_tour(8, 5)


@pytest.mark.parametrize("n,size", [(4, 2), (8, 20), (12, 54), (16, 104)])
def test_family_size_and_tightness(n, size):
    fam = full_family(n)
    assert len(fam) == len(set(fam)) == size == n * (n - 3) // 2
    c = circlet_coeffs(n)
    assert all(evaluate(c, length_profile(n, t)) == n - 2 for t in fam)


@settings(max_examples=20)
@given(st.sampled_from([8, 12, 16]), st.integers(0, 100), st.integers(0, 40))
def test_rotation_closure(n, idx, m):
    fam = full_family(n)
    t = fam[idx % len(fam)]
    assert evaluate(circlet_coeffs(n), length_profile(n, t.rotate(m))) == n - 2


@pytest.mark.parametrize("n", [8, 12, 16])
def test_unique_edges(n):
    assert unique_edges_hold(n)


def test_incidence_vector():
    t = base_tours(8)[0]
    v = incidence_vector(t)
    assert len(v) == 28 and sum(v) == 8
    assert {e for e, bit in zip(all_edges(8), v) if bit} == t.edge_set()


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 7), st.integers(1, 7), st.integers(0, 10**6))
def test_exact_rank_matches_sympy(rows, cols, seed):
    rng = random.Random(seed)
    m = [[rng.choice([0, 0, 1, -1, 2, 3]) for _ in range(cols)] for _ in range(rows)]
    assert exact_rank(m) == sympy.Matrix(m).rank()


def test_exact_rank_family_against_sympy():
    rows = [incidence_vector(t) for t in full_family(8)]
    assert exact_rank(rows) == sympy.Matrix(rows).rank() == 20


@pytest.mark.parametrize("n,size", [(4, 2), (8, 20), (12, 54), (16, 104)])
def test_certificates(n, size):
    cert = certify_facet(n)
    assert cert.valid and cert.rank == cert.family == size
    assert cert.to_line() == f"facet n={n} family={size} rank={size} tight=true valid=true"


def test_certificate_invalid_when_short():
    assert not FacetCertificate(8, 20, 19, True).valid
    assert "valid=false" in FacetCertificate(8, 20, 20, False).to_line()


def test_certify_errors():
    with pytest.raises(BudgetExceededError):
        certify_facet(20)
    with pytest.raises(UnsupportedInstanceError):
        certify_facet(10)
