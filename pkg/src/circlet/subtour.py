"""Subtour-LP points, exact feasibility via min cut, gap instances, Eulerian example."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .core import FractionalPoint, as_instance, check_cap, edge_length, get_caps, project_weights
from .errors import DomainError, UnsupportedInstanceError
from .inequality import circlet_coeffs, evaluate, tt_coeffs
from .oracle import min_tour_cost


def half_one_point(inst) -> FractionalPoint:
    """1/2 on every length-1 edge, 1 on every length-d edge."""
    return lambda_point(inst, Fraction(1, 2))


def lambda_point(inst, lam) -> FractionalPoint:
    """lam on length-1 edges and 2 - 2 lam on length-d edges.

    Any rational lam is accepted; use ``box_feasible`` to see whether the
    weights stay inside [0, 1].
    """
    inst = as_instance(inst).require_circlet()
    lam = Fraction(lam)
    return FractionalPoint.from_length_weights(inst.n, {1: lam, inst.d: 2 - 2 * lam})


def box_feasible(x: FractionalPoint) -> bool:
    return all(0 <= w <= 1 for _, w in x.items)


# ---------------------------------------------------------------------------
# exact global minimum cut

class Cut(NamedTuple):
    value: Fraction
    side: frozenset


def min_cut(n: int, weights: dict) -> Cut:
    """Stoer-Wagner global minimum cut on vertices 1..n with exact weights.

    ``weights`` maps (i, j) with i < j to a nonnegative rational.  The
    returned side is the smaller shore (ties broken toward the one that
    contains the smallest label).
    """
    if n < 2:
        raise DomainError("a cut needs at least two vertices")
    w = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    for (i, j), v in weights.items():
        w[i][j] += Fraction(v)
        w[j][i] += Fraction(v)
    groups = {v: {v} for v in range(1, n + 1)}
    active = list(range(1, n + 1))
    best = None
    while len(active) > 1:
        conn = {v: Fraction(0) for v in active}
        order = []
        left = set(active)
        while left:
            v = max(sorted(left), key=lambda q: conn[q])
            left.discard(v)
            order.append(v)
            for q in left:
                conn[q] += w[v][q]
        s, t = order[-2], order[-1]
        phase = conn[t]
        if best is None or phase < best.value:
            best = Cut(phase, frozenset(groups[t]))
        # merge t into s
        groups[s] |= groups.pop(t)
        for q in active:
            if q not in (s, t):
                w[s][q] += w[t][q]
                w[q][s] = w[s][q]
        active.remove(t)
    side = best.side
    other = frozenset(range(1, n + 1)) - side
    if len(other) < len(side) or (len(other) == len(side) and min(other) < min(side)):
        side = other
    return Cut(best.value, side)


@dataclass(frozen=True)
class SubtourResult:
    feasible: bool
    reason: str | None = None  # "box", "degree" or "cut"
    witness: object = None

    def describe(self) -> str:
        if self.feasible:
            return "feasible"
        q = lambda v: str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
        if self.reason == "box":
            (i, j), w = self.witness
            return f"infeasible box edge={i}-{j} weight={q(w)}"
        if self.reason == "degree":
            v, deg = self.witness
            return f"infeasible degree vertex={v} degree={q(deg)}"
        side, value = self.witness
        return f"infeasible cut side={','.join(map(str, side))} value={q(value)}"


def subtour_feasible(inst, x: FractionalPoint, cap: int | None = None) -> SubtourResult:
    """Box, degree-2 and cut >= 2 checks, all in exact arithmetic."""
    inst = as_instance(inst)
    n = inst.n
    if x.n != n:
        raise DomainError(f"point lives on n={x.n}, instance has n={n}")
    check_cap(n, get_caps().cut if cap is None else cap, "subtour min cut")
    for e, wt in x.items:
        if not 0 <= wt <= 1:
            return SubtourResult(False, "box", (e, wt))
    for v in range(1, n + 1):
        if x.degree(v) != 2:
            return SubtourResult(False, "degree", (v, x.degree(v)))
    cut = min_cut(n, x.as_dict())
    if cut.value < 2:
        return SubtourResult(False, "cut", (tuple(sorted(cut.side)), cut.value))
    return SubtourResult(True)


# ---------------------------------------------------------------------------
# bounds and strength

class LambdaBounds(NamedTuple):
    circlet: Fraction
    crown: Fraction


def lambda_bounds(inst) -> LambdaBounds:
    n = as_instance(inst).require_circlet().n
    if n < 8:
        raise DomainError("the crown bound needs n >= 8")
    return LambdaBounds(1 - Fraction(2, n),
                        Fraction(1, 2) + Fraction(2, 3 * n) + Fraction(1, 3 * (n - 6)))


def min_fx_at_half_one(inst):
    """Tight-triangular value of the half/one point."""
    inst = as_instance(inst).require_circlet()
    return evaluate(tt_coeffs(inst), project_weights(inst, half_one_point(inst)))


# ---------------------------------------------------------------------------
# gap instance

@dataclass(frozen=True)
class GapInstance:
    n: int
    costs: tuple[int, ...]  # per length 1..d

    @property
    def big_m(self) -> int:
        return 4 * self.n * self.n

    def cost_of(self, x: FractionalPoint):
        return evaluate(self.costs, project_weights(self.n, x))


def _power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def gap_instance(inst) -> GapInstance:
    """Cost 1 at length 1, 0 at length d, 4n^2 elsewhere."""
    inst = as_instance(inst).require_circlet()
    n, d = inst.n, inst.d
    if not _power_of_two(n):
        raise UnsupportedInstanceError(f"gap instances need n a power of two, got {n}")
    m = 4 * n * n
    return GapInstance(n, (1,) + (m,) * (d - 2) + (0,))


class GapRatio(NamedTuple):
    tour_opt: Fraction | int
    lp_value: Fraction | int
    ratio: Fraction


def gap_ratio(inst, cap: int | None = None) -> GapRatio:
    g = gap_instance(inst)
    opt = min_tour_cost(g.n, g.costs, cap=cap)
    lp = g.cost_of(half_one_point(g.n))
    return GapRatio(opt, lp, Fraction(opt) / Fraction(lp))


# ---------------------------------------------------------------------------
# Eulerian multigraph

@dataclass(frozen=True)
class EulerianMultigraph:
    n: int
    edges: tuple  # ((i, j), multiplicity), sorted

    def degree(self, v: int) -> int:
        return sum(m for (i, j), m in self.edges if v in (i, j))

    def all_even(self) -> bool:
        return all(self.degree(v) % 2 == 0 for v in range(1, self.n + 1))

    def is_connected(self) -> bool:
        adj = {v: set() for v in range(1, self.n + 1)}
        for (i, j), _ in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        seen, stack = {1}, [1]
        while stack:
            for q in adj[stack.pop()] - seen:
                seen.add(q)
                stack.append(q)
        return len(seen) == self.n

    def cost(self, costs) -> int:
        return sum(m * costs[edge_length(self.n, i, j) - 1] for (i, j), m in self.edges)


def eulerian_counterexample(inst) -> EulerianMultigraph:
    """Connected even-degree multigraph of gap cost d: every chord, paired short edges."""
    inst = as_instance(inst).require_circlet()
    n, d = inst.n, inst.d
    mult: dict = {}

    def add(i, j, m=1):
        e = (min(i, j), max(i, j))
        mult[e] = mult.get(e, 0) + m

    for i in range(1, d // 2 + 1):
        add(2 * i - 1, 2 * i)
    for i in range(1, (d - 2) // 2 + 1):
        add(d + 2 * i, d + 2 * i + 1)
    add(d, d + 1)
    for i in range(1, d + 1):
        add(i, i + d)
    add(d, n)
    return EulerianMultigraph(n, tuple(sorted(mult.items())))


def circlet_value(inst, x: FractionalPoint):
    return evaluate(circlet_coeffs(inst), project_weights(inst, x))
