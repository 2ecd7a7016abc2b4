"""Ground-truth engines: tour enumeration, Held-Karp, EL(n), prescribed lengths."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np

from .core import (
    Tour,
    as_instance,
    block_lengths,
    check_cap,
    cycle_blocks,
    get_caps,
    iter_canonical_orders,
)
from .errors import DomainError


def enumerate_tours(inst, cap: int | None = None) -> Iterator[Tour]:
    """Every undirected Hamiltonian cycle once, in lexicographic order."""
    n = as_instance(inst).n
    check_cap(n, get_caps().enumeration if cap is None else cap, "tour enumeration")
    for order in iter_canonical_orders(n):
        yield Tour(order)


def count_tours(n: int) -> int:
    total = 1
    for k in range(2, n):
        total *= k
    return total // 2 if n > 3 else 1


# ---------------------------------------------------------------------------
# Held-Karp

_INF = np.int64(1) << 60


def _scaled_costs(costs: Sequence) -> tuple[int, list[int]]:
    fr = [Fraction(c) for c in costs]
    scale = lcm(*(c.denominator for c in fr))
    return scale, [int(c * scale) for c in fr]


def min_tour_cost(inst, costs: Sequence, cap: int | None = None):
    """Exact minimum over all Hamiltonian cycles of sum of costs[length-1].

    Dynamic program over (visited subset, last vertex) with vertex 1 as
    the fixed start; one popcount layer is relaxed at a time with numpy.
    """
    inst = as_instance(inst)
    n, d = inst.n, inst.d
    check_cap(n, get_caps().dp if cap is None else cap, "Held-Karp")
    if len(costs) != d:
        raise DomainError(f"need {d} per-length costs, got {len(costs)}")
    scale, icost = _scaled_costs(costs)

    idx = np.arange(n)
    diff = np.abs(idx[:, None] - idx[None, :])
    length = np.minimum(diff, n - diff)
    table = np.array([0] + icost, dtype=np.int64)
    C = table[length]  # C[a, b] for 0-based vertices

    m = n - 1  # vertices 2..n become bits 0..m-1
    size = 1 << m
    dp = np.full((size, m), _INF, dtype=np.int64)
    for j in range(m):
        dp[1 << j, j] = C[0, j + 1]

    masks = np.arange(size, dtype=np.int64)
    popcount = np.zeros(size, dtype=np.int8)
    for b in range(m):
        popcount += ((masks >> b) & 1).astype(np.int8)
    order = np.argsort(popcount, kind="stable")
    bounds = np.searchsorted(popcount[order], np.arange(m + 2))
    inner = C[1:, 1:]
    for s in range(2, m + 1):
        layer = order[bounds[s] : bounds[s + 1]]
        for j in range(m):
            sel = layer[(layer >> j) & 1 == 1]
            prev = sel ^ (1 << j)
            dp[sel, j] = (dp[prev] + inner[:, j][None, :]).min(axis=1)
    best = int((dp[size - 1] + C[1:, 0]).min())
    result = Fraction(best, scale)
    return int(result) if result.denominator == 1 else result


# ---------------------------------------------------------------------------
# exhaustive reductions over all cycles

@dataclass(frozen=True)
class Census:
    """Exhaustive summary of sum costs[length-1] over all cycles on K_n."""

    n: int
    tours: int
    minimum: int
    at_minimum: int
    count_at: dict

    def count(self, value: int) -> int:
        return self.count_at.get(value, 0)


def cost_census(inst, costs: Sequence[int], watch: Iterable[int] = (), cap: int | None = None) -> Census:
    """Minimum cost, its multiplicity, and counts at ``watch`` values."""
    n = as_instance(inst).n
    check_cap(n, get_caps().enumeration if cap is None else cap, "tour enumeration")
    table = np.array([0] + list(costs), dtype=np.int64)
    watch = tuple(watch)
    total, best, at_best = 0, None, 0
    counts = {w: 0 for w in watch}
    for block in cycle_blocks(n):
        value = table[block_lengths(n, block)].sum(axis=1)
        total += len(value)
        vmin = int(value.min())
        k = int((value == vmin).sum())
        if best is None or vmin < best:
            best, at_best = vmin, k
        elif vmin == best:
            at_best += k
        for w in watch:
            counts[w] += int((value == w).sum())
    return Census(n, total, best, at_best, counts)


def el_points(inst, cap: int | None = None) -> list[tuple[int, ...]]:
    """The distinct length profiles of Hamiltonian cycles, sorted."""
    inst = as_instance(inst)
    n, d = inst.n, inst.d
    check_cap(n, get_caps().enumeration if cap is None else cap, "EL(n) enumeration")
    found = set()
    for block in cycle_blocks(n):
        lengths = block_lengths(n, block)
        prof = np.stack([(lengths == l).sum(axis=1) for l in range(1, d + 1)], axis=1)
        for row in np.unique(prof, axis=0):
            found.add(tuple(int(v) for v in row))
    return sorted(found, reverse=True)


# ---------------------------------------------------------------------------
# prescribed edge lengths

@dataclass(frozen=True)
class LengthMultiset:
    """counts[l-1] copies of length l."""

    counts: tuple[int, ...]

    @classmethod
    def from_lengths(cls, n: int, lengths: Iterable[int]) -> "LengthMultiset":
        d = n // 2
        counts = [0] * d
        for l in lengths:
            if not 1 <= l <= d:
                raise DomainError(f"length {l} outside 1..{d} for n={n}")
            counts[l - 1] += 1
        return cls(tuple(counts))

    @property
    def size(self) -> int:
        return sum(self.counts)

    def lengths(self) -> list[int]:
        return [l for l, c in enumerate(self.counts, start=1) for _ in range(c)]


def _as_multiset(n: int, L) -> LengthMultiset:
    if isinstance(L, LengthMultiset):
        if len(L.counts) != n // 2:
            raise DomainError(f"multiset indexed 1..{len(L.counts)}, expected 1..{n // 2}")
        return L
    return LengthMultiset.from_lengths(n, L)


class BurattiResult(NamedTuple):
    holds: bool
    violated_q: int | None


def divisors(n: int) -> list[int]:
    return [q for q in range(1, n + 1) if n % q == 0]


def buratti_condition(inst, L) -> BurattiResult:
    """#{e in L : q | e} <= n - q for every divisor q of n (q = 1 and q = n included)."""
    n = as_instance(inst).n
    L = _as_multiset(n, L)
    if L.size != n - 1:
        raise DomainError(f"a path multiset has n-1={n - 1} entries, got {L.size}")
    lengths = L.lengths()
    for q in divisors(n):
        if sum(1 for e in lengths if e % q == 0) > n - q:
            return BurattiResult(False, q)
    return BurattiResult(True, None)


def edge_length_feasible(inst, L, kind: str = "path", cap: int | None = None) -> bool:
    """Is there a Hamiltonian path/cycle on K_n using exactly the lengths L?"""
    n = as_instance(inst).n
    check_cap(n, get_caps().feasibility if cap is None else cap, "edge-length feasibility")
    if kind not in ("path", "cycle"):
        raise DomainError(f"kind must be 'path' or 'cycle', got {kind!r}")
    L = _as_multiset(n, L)
    need = n - 1 if kind == "path" else n
    if L.size != need:
        raise DomainError(f"a {kind} multiset has {need} entries, got {L.size}")
    counts = list(L.counts)
    visited = [False] * n
    visited[0] = True  # rotation lets every walk start at vertex 1 (index 0)

    def step(v: int, placed: int) -> bool:
        if placed == n - 1:
            if kind == "path":
                return True
            diff = v  # distance back to index 0
            back = min(diff, n - diff)
            return counts[back - 1] == 1
        for l in range(1, len(counts) + 1):
            if not counts[l - 1]:
                continue
            for w in {(v + l) % n, (v - l) % n}:
                if not visited[w]:
                    visited[w] = True
                    counts[l - 1] -= 1
                    if step(w, placed + 1):
                        return True
                    counts[l - 1] += 1
                    visited[w] = False
        return False

    return step(0, 0)
