"""Circlet coefficients, evaluation, tight-triangular form, strength, separation."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import NamedTuple, Sequence

import numpy as np

from .core import (
    FractionalPoint,
    as_instance,
    check_cap,
    cycle_blocks,
    edge_length,
    get_caps,
    project_weights,
)
from .errors import BudgetExceededError, DomainError, UnsupportedInstanceError


@dataclass(frozen=True)
class CircletCoefficients:
    n: int
    c: tuple[int, ...]

    @property
    def rhs(self) -> int:
        return self.n - 2

    def cost(self, length: int) -> int:
        return self.c[length - 1]


@dataclass(frozen=True)
class TTCoefficients:
    n: int
    f: tuple[int, ...]
    rhs: int

    def cost(self, length: int) -> int:
        return self.f[length - 1]


def circlet_coeffs(inst) -> CircletCoefficients:
    inst = as_instance(inst).require_circlet()
    d = inst.d
    return CircletCoefficients(inst.n, tuple(i if i % 2 else d - i for i in range(1, d + 1)))


def tt_coeffs(inst) -> TTCoefficients:
    inst = as_instance(inst).require_circlet()
    n, d = inst.n, inst.d
    f = tuple(d - 2 + c for c in circlet_coeffs(inst).c)
    return TTCoefficients(n, f, n * n // 2 - n - 2)


def _vector(coeffs) -> Sequence[int]:
    if isinstance(coeffs, CircletCoefficients):
        return coeffs.c
    if isinstance(coeffs, TTCoefficients):
        return coeffs.f
    return coeffs


def evaluate(coeffs, profile) -> Fraction | int:
    c = _vector(coeffs)
    if len(c) != len(profile):
        raise DomainError(f"dimension mismatch: {len(c)} coefficients, {len(profile)} entries")
    total = sum(ci * ti for ci, ti in zip(c, profile))
    if isinstance(total, Fraction) and total.denominator == 1:
        return int(total)
    return total


class CheckResult(NamedTuple):
    satisfied: bool
    slack: Fraction | int


def check_circlet(inst, profile) -> CheckResult:
    coeffs = circlet_coeffs(inst)
    slack = evaluate(coeffs, profile) - coeffs.rhs
    return CheckResult(slack >= 0, slack)


def lemma1_lower_bound(inst, profile) -> Fraction | int:
    """2n - t_1 - 2 t_d, a lower bound on the circlet value of any profile
    with nonnegative entries summing to n."""
    inst = as_instance(inst).require_circlet()
    if len(profile) != inst.d:
        raise DomainError(f"profile has {len(profile)} entries, expected {inst.d}")
    if sum(profile) != inst.n:
        raise DomainError(f"profile sums to {sum(profile)}, expected n={inst.n}")
    return 2 * inst.n - profile[0] - 2 * profile[-1]


def tt_triangle_check(inst) -> bool:
    """Exhaustive check that the TT coefficients are in tight triangular form."""
    tt = tt_coeffs(inst)
    n = tt.n
    f = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                f[i][j] = tt.cost(edge_length(n, i, j))
    tight = [False] * (n + 1)
    for i, j, k in itertools.permutations(range(1, n + 1), 3):
        lhs = f[i][j] + f[j][k]
        if lhs < f[i][k]:
            return False
        if lhs == f[i][k]:
            tight[j] = True
    return all(tight[1:])


def circlet_strength(inst) -> Fraction:
    n = as_instance(inst).require_circlet().n
    return Fraction(n * n - 2 * n - 4, n * n - 3 * n)


def crown_strength(inst) -> Fraction:
    n = as_instance(inst).require_circlet().n
    if n < 8:
        raise DomainError("the crown strength formula needs n >= 8")
    return Fraction(3 * n * n - 12 * n - 8, 3 * n * n - 14 * n)


# ---------------------------------------------------------------------------
# separation over labelings

@dataclass(frozen=True)
class SeparationResult:
    labeling: tuple[int, ...]  # labeling[v-1] is the new label of vertex v
    value: Fraction | int
    rhs: int
    mode: str

    @property
    def violation(self) -> Fraction | int:
        return self.rhs - self.value

    @property
    def violated(self) -> bool:
        return self.violation > 0


def labeled_value(inst, x: FractionalPoint, labeling: Sequence[int]):
    """Circlet value of ``x`` after renaming vertex v to ``labeling[v-1]``."""
    inst = as_instance(inst)
    relabeled = x.relabel(lambda v: labeling[v - 1])
    return evaluate(circlet_coeffs(inst), project_weights(inst, relabeled))


def canonical_labeling(labeling: Sequence[int]) -> tuple[int, ...]:
    """Smallest labeling in the dihedral orbit (rotations and v -> n - v of labels)."""
    n = len(labeling)
    best = None
    for m in range(n):
        for sign in (1, -1):
            cand = tuple((sign * (lab - 1) + m) % n + 1 for lab in labeling)
            if best is None or cand < best:
                best = cand
    return best


def _scaled_support(x: FractionalPoint):
    scale = lcm(*(w.denominator for _, w in x.items)) if x.items else 1
    return scale, [(i, j, int(w * scale)) for (i, j), w in x.items]


def _separate_exhaustive(inst, x: FractionalPoint) -> SeparationResult:
    n = inst.n
    coeffs = circlet_coeffs(inst)
    cost = np.array((0,) + coeffs.c, dtype=np.int64)
    scale, support = _scaled_support(x)
    best_value = None
    best_label = None
    for block in cycle_blocks(n):
        # block[r, p] is the vertex that receives label p+1
        pos = np.empty_like(block)
        rows = np.arange(block.shape[0])[:, None]
        pos[rows, block - 1] = np.arange(n, dtype=block.dtype)[None, :]
        value = np.zeros(block.shape[0], dtype=np.int64)
        for i, j, w in support:
            diff = np.abs(pos[:, i - 1] - pos[:, j - 1])
            value += w * cost[np.minimum(diff, n - diff)]
        vmin = int(value.min())
        if best_value is not None and vmin > best_value:
            continue
        hits = pos[value == vmin] + 1
        # the orbit members fixing label 1 are the row and its reflection
        both = np.concatenate([hits, (1 - hits) % n + 1])
        first = both[np.lexsort(both.T[::-1])[0]]
        cand = tuple(int(v) for v in first)
        if best_value is None or vmin < best_value or cand < best_label:
            best_value, best_label = vmin, cand
    value = Fraction(best_value, scale)
    value = int(value) if value.denominator == 1 else value
    return SeparationResult(best_label, value, coeffs.rhs, "exhaustive")


def _separate_heuristic(inst, x: FractionalPoint, budget: int, seed) -> SeparationResult:
    n = inst.n
    coeffs = circlet_coeffs(inst)
    scale, support = _scaled_support(x)
    cost = (0,) + coeffs.c

    def value_of(lab):
        total = 0
        for i, j, w in support:
            diff = abs(lab[i - 1] - lab[j - 1])
            total += w * cost[min(diff, n - diff)]
        return total

    rng = random.Random(seed)
    best_value, best_label = None, None
    for attempt in range(max(1, budget)):
        lab = list(range(1, n + 1))
        if attempt:  # the first restart keeps the point's own labeling
            rng.shuffle(lab)
        cur = value_of(lab)
        improved = True
        while improved:
            improved = False
            for a in range(n):
                for b in range(a + 1, n):
                    lab[a], lab[b] = lab[b], lab[a]
                    v = value_of(lab)
                    if v < cur:
                        cur, improved = v, True
                    else:
                        lab[a], lab[b] = lab[b], lab[a]
        canon = canonical_labeling(lab)
        if best_value is None or cur < best_value or (cur == best_value and canon < best_label):
            best_value, best_label = cur, canon
    value = Fraction(best_value, scale)
    value = int(value) if value.denominator == 1 else value
    return SeparationResult(best_label, value, coeffs.rhs, "heuristic")


def separate(inst, x: FractionalPoint, mode: str = "exhaustive", budget: int = 50, seed=0,
             cap: int | None = None) -> SeparationResult:
    """Search vertex labelings for the smallest circlet value of ``x``.

    Exhaustive mode visits one labeling per dihedral class, n!/(2n) in all,
    and breaks ties by the lexicographically smallest labeling.  Heuristic
    mode runs ``budget`` restarts of 2-swap local search, the first from
    the identity labeling and the rest seeded at random; a heuristic
    non-violation certifies nothing.
    """
    inst = as_instance(inst).require_circlet()
    if x.n != inst.n:
        raise DomainError(f"point lives on n={x.n}, instance has n={inst.n}")
    if mode == "exhaustive":
        try:
            check_cap(inst.n, get_caps().enumeration if cap is None else cap,
                      "exhaustive separation")
        except BudgetExceededError as exc:
            raise BudgetExceededError(f"{exc}; try mode='heuristic'") from None
        return _separate_exhaustive(inst, x)
    if mode == "heuristic":
        return _separate_heuristic(inst, x, budget, seed)
    raise UnsupportedInstanceError(f"unknown separation mode {mode!r}")
