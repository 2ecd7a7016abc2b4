"""The n(n-3)/2 tight tours and an exact rank certificate."""

from __future__ import annotations

from dataclasses import dataclass

from .core import Tour, all_edges, as_instance, check_cap, edge_length, get_caps, length_profile
from .errors import DomainError
from .inequality import circlet_coeffs, evaluate


def incidence_vector(tour: Tour) -> list[int]:
    """0/1 vector over the edges of K_n in sorted (i, j) order."""
    used = tour.edge_set()
    return [1 if e in used else 0 for e in all_edges(tour.n)]


def base_tours(inst) -> list[Tour]:
    """Chords {1, d+1} and {d, n} joined by length-1 paths, with its d rotations."""
    inst = as_instance(inst).require_circlet()
    n, d = inst.n, inst.d
    base = Tour(tuple(range(1, d + 1)) + tuple(range(n, d, -1)))
    return [base.rotate(m) for m in range(d)]


def k_tour(inst, k: int) -> Tour:
    """Tight tour with k length-d edges, n-k-1 length-1 edges and one edge of cost k-1."""
    inst = as_instance(inst).require_circlet()
    n, d = inst.n, inst.d
    if not 3 <= k <= d:
        raise DomainError(f"k must lie in [3, {d}], got {k}")
    first = d - k + 2
    order = list(range(1, first + 1))
    top = True
    for col in range(first, d + 1):
        # cross to the other side, then step right unless this is the last column
        order.append(col + d if top else col)
        top = not top
        if col < d:
            order.append(col + 1 if top else col + 1 + d)
    order.extend(range(n - k + 1, d, -1))
    return Tour(tuple(order))


def special_edge(inst, k: int) -> tuple[int, int]:
    """The single edge of the k-tour whose length is neither 1 nor d."""
    inst = as_instance(inst)
    t = k_tour(inst, k)
    odd = [e for e in t.edges() if edge_length(inst, *e) not in (1, inst.d)]
    if len(odd) != 1:
        raise DomainError(f"k-tour for k={k} has {len(odd)} special edges")
    return odd[0]


def full_family(inst) -> list[Tour]:
    inst = as_instance(inst).require_circlet()
    family = base_tours(inst)
    for k in range(3, inst.d + 1):
        t = k_tour(inst, k)
        family.extend(t.rotate(m) for m in range(inst.n))
    return family


def exact_rank(rows) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination."""
    a = [list(map(int, r)) for r in rows]
    if not a:
        return 0
    m, ncols = len(a), len(a[0])
    rank, prev = 0, 1
    for col in range(ncols):
        piv = next((r for r in range(rank, m) if a[r][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][col]
        for r in range(rank + 1, m):
            f = a[r][col]
            row, prow = a[r], a[rank]
            a[r] = [(p * row[c] - f * prow[c]) // prev for c in range(ncols)]
        prev = p
        rank += 1
        if rank == m:
            break
    return rank


@dataclass(frozen=True)
class FacetCertificate:
    n: int
    family: int
    rank: int
    tight: bool
    distinct: bool = True
    unique_edges: bool = True

    @property
    def expected(self) -> int:
        return self.n * (self.n - 3) // 2

    @property
    def valid(self) -> bool:
        return (self.family == self.rank == self.expected and self.tight
                and self.distinct and self.unique_edges)

    def to_line(self) -> str:
        b = lambda v: "true" if v else "false"
        return (f"facet n={self.n} family={self.family} rank={self.rank} "
                f"tight={b(self.tight)} valid={b(self.valid)}")


def unique_edges_hold(inst) -> bool:
    """Each rotated k-tour's special edge is used by no other family member."""
    inst = as_instance(inst).require_circlet()
    family = full_family(inst)
    owners: dict = {}
    for idx, t in enumerate(family):
        for e in t.edges():
            owners.setdefault(e, []).append(idx)
    n = inst.n
    for k in range(3, inst.d + 1):
        base = special_edge(inst, k)
        for m in range(n):
            s, t = ((base[0] + m - 1) % n + 1, (base[1] + m - 1) % n + 1)
            if len(owners.get((min(s, t), max(s, t)), [])) != 1:
                return False
    return True


def certify_facet(inst, cap: int | None = None) -> FacetCertificate:
    inst = as_instance(inst).require_circlet()
    n = inst.n
    check_cap(n, get_caps().rank if cap is None else cap, "facet rank")
    family = full_family(inst)
    coeffs = circlet_coeffs(inst)
    tight = all(evaluate(coeffs, length_profile(inst, t)) == coeffs.rhs for t in family)
    distinct = len(set(family)) == len(family)
    rank = exact_rank(incidence_vector(t) for t in family)
    return FacetCertificate(n, len(family), rank, tight, distinct, unique_edges_hold(inst))
