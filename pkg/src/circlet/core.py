"""Instances, edge lengths, canonical tours and length profiles.

Vertices are labelled 1..n throughout.  Every weight is an exact
``fractions.Fraction`` (or a plain ``int`` where the value is integral).
"""

from __future__ import annotations

import itertools
import os
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence, Tuple, Union

import numpy as np

from .errors import (
    BudgetExceededError,
    InvalidEdgeError,
    InvalidTourError,
    ParseError,
    UnsupportedInstanceError,
)

Edge = Tuple[int, int]
LengthProfile = Tuple[Union[int, Fraction], ...]


# ---------------------------------------------------------------------------
# caps

@dataclass(frozen=True)
class Caps:
    enumeration: int = 12
    dp: int = 20
    rank: int = 16
    feasibility: int = 10
    cut: int = 64


_CAP_KEYS = {
    "enum": "enumeration",
    "enumeration": "enumeration",
    "dp": "dp",
    "rank": "rank",
    "feasibility": "feasibility",
    "feas": "feasibility",
    "cut": "cut",
}


def get_caps(env: Mapping[str, str] | None = None) -> Caps:
    """Read caps from ``CIRCLET_CAPS``.

    Accepts either ``"12/20/16"`` (enumeration/dp/rank) or comma separated
    ``key=value`` pairs such as ``"enum=10,dp=18,feasibility=9"``.
    """
    env = os.environ if env is None else env
    raw = env.get("CIRCLET_CAPS", "").strip()
    if not raw:
        return Caps()
    values = {}
    if "=" not in raw:
        parts = [p for p in raw.split("/") if p]
        for key, part in zip(("enumeration", "dp", "rank"), parts):
            values[key] = int(part)
    else:
        for item in raw.split(","):
            key, _, val = item.partition("=")
            key = key.strip().lower()
            if key not in _CAP_KEYS:
                raise ValueError(f"unknown cap {key!r} in CIRCLET_CAPS")
            values[_CAP_KEYS[key]] = int(val)
    return Caps(**values)


def check_cap(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise BudgetExceededError(
            f"{what} is capped at n <= {cap} (got n={n}); "
            "raise the cap via CIRCLET_CAPS or use a non-exhaustive mode"
        )


# ---------------------------------------------------------------------------
# instances and edges

@dataclass(frozen=True)
class Instance:
    n: int

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 3:
            raise UnsupportedInstanceError(f"need an integer n >= 3, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))

    @property
    def d(self) -> int:
        return self.n // 2

    def require_circlet(self) -> "Instance":
        if self.n % 4:
            raise UnsupportedInstanceError(
                f"circlet inequalities are defined only for 4 | n (got n={self.n})"
            )
        return self

    def require_even(self) -> "Instance":
        if self.n % 2:
            raise UnsupportedInstanceError(f"need even n (got n={self.n})")
        return self


def as_instance(inst) -> Instance:
    if isinstance(inst, Instance):
        return inst
    return Instance(inst)


def wrap(n: int, v: int) -> int:
    """Reduce a label into 1..n."""
    return (v - 1) % n + 1


def edge_length(inst, i: int, j: int) -> int:
    n = as_instance(inst).n
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise InvalidEdgeError(f"invalid edge {{{i}, {j}}} on n={n}")
    diff = abs(i - j)
    return min(diff, n - diff)


def norm_edge(i: int, j: int) -> Edge:
    return (i, j) if i < j else (j, i)


def all_edges(n: int) -> list[Edge]:
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


# ---------------------------------------------------------------------------
# tours

def canonical_order(seq: Sequence[int]) -> tuple[int, ...]:
    seq = list(seq)
    k = seq.index(1)
    seq = seq[k:] + seq[:k]
    if len(seq) > 2 and seq[1] > seq[-1]:
        seq = [seq[0]] + seq[:0:-1]
    return tuple(seq)


@dataclass(frozen=True)
class Tour:
    """An undirected Hamiltonian cycle, stored in canonical visit order."""

    order: tuple[int, ...]

    def __post_init__(self):
        order = tuple(int(v) for v in self.order)
        n = len(order)
        if n < 3:
            raise InvalidTourError("a tour needs at least 3 vertices")
        if sorted(order) != list(range(1, n + 1)):
            raise InvalidTourError(f"not a permutation of 1..{n}: {order}")
        object.__setattr__(self, "order", canonical_order(order))

    @property
    def n(self) -> int:
        return len(self.order)

    def edges(self) -> list[Edge]:
        o = self.order
        return [norm_edge(o[i], o[(i + 1) % len(o)]) for i in range(len(o))]

    def edge_set(self) -> frozenset:
        return frozenset(self.edges())

    def neighbors(self) -> dict[int, tuple[int, int]]:
        o, n = self.order, len(self.order)
        return {o[i]: (o[i - 1], o[(i + 1) % n]) for i in range(n)}

    def relabel(self, mapping) -> "Tour":
        """Apply a vertex relabelling given as a callable or a dict."""
        f = mapping if callable(mapping) else mapping.__getitem__
        return Tour(tuple(f(v) for v in self.order))

    def rotate(self, m: int) -> "Tour":
        n = self.n
        return self.relabel(lambda v: wrap(n, v + m))

    def reflect(self) -> "Tour":
        n = self.n
        return self.relabel(lambda v: wrap(n, n - v))

    def __str__(self):
        return "-".join(map(str, self.order))


def identity_tour(n: int) -> Tour:
    return Tour(tuple(range(1, n + 1)))


def _as_tour(tour) -> Tour:
    return tour if isinstance(tour, Tour) else Tour(tuple(tour))


def length_profile(inst, tour) -> tuple[int, ...]:
    inst = as_instance(inst)
    tour = _as_tour(tour)
    if tour.n != inst.n:
        raise InvalidTourError(f"tour has {tour.n} vertices, instance has n={inst.n}")
    t = [0] * inst.d
    for i, j in tour.edges():
        t[edge_length(inst, i, j) - 1] += 1
    return tuple(t)


def random_tour(n: int, rng) -> Tour:
    """``rng`` is a ``random.Random`` or ``numpy.random.Generator``."""
    order = list(range(1, n + 1))
    if isinstance(rng, np.random.Generator):
        order = [int(v) for v in rng.permutation(order)]
    else:
        rng.shuffle(order)
    return Tour(tuple(order))


# ---------------------------------------------------------------------------
# fractional points

def _to_fraction(w) -> Fraction:
    if isinstance(w, float):
        raise TypeError("floating point weights are not accepted; use Fraction")
    return Fraction(w)


@dataclass(frozen=True)
class FractionalPoint:
    """A symmetric rational weighting of the edges of K_n.

    Zero weights are dropped; absent edges read as 0.  Weights outside
    [0, 1] are representable so that box violations can be reported.
    """

    n: int
    items: tuple = field(default=())

    def __post_init__(self):
        clean = {}
        for (i, j), w in self.items:
            e = norm_edge(int(i), int(j))
            edge_length(self.n, *e)
            if e in clean:
                raise InvalidEdgeError(f"duplicate edge {e}")
            clean[e] = _to_fraction(w)
        object.__setattr__(
            self, "items", tuple(sorted((e, w) for e, w in clean.items() if w != 0))
        )

    @classmethod
    def from_dict(cls, n: int, weights: Mapping[Edge, object]) -> "FractionalPoint":
        return cls(n, tuple(weights.items()))

    @classmethod
    def from_tour(cls, tour) -> "FractionalPoint":
        tour = _as_tour(tour)
        return cls(tour.n, tuple((e, 1) for e in tour.edges()))

    @classmethod
    def from_length_weights(cls, n: int, by_length: Mapping[int, object]) -> "FractionalPoint":
        """Put weight ``by_length[l]`` on every edge of length l."""
        return cls(
            n,
            tuple(
                (e, by_length[edge_length(n, *e)])
                for e in all_edges(n)
                if edge_length(n, *e) in by_length
            ),
        )

    def as_dict(self) -> dict[Edge, Fraction]:
        return dict(self.items)

    def weight(self, i: int, j: int) -> Fraction:
        return self.as_dict().get(norm_edge(i, j), Fraction(0))

    def degree(self, v: int) -> Fraction:
        return sum((w for (i, j), w in self.items if v in (i, j)), Fraction(0))

    def relabel(self, mapping) -> "FractionalPoint":
        f = mapping if callable(mapping) else mapping.__getitem__
        return FractionalPoint(self.n, tuple(((f(i), f(j)), w) for (i, j), w in self.items))


def project_weights(inst, x: FractionalPoint) -> tuple[Fraction, ...]:
    inst = as_instance(inst)
    if x.n != inst.n:
        raise InvalidTourError(f"point lives on n={x.n}, instance has n={inst.n}")
    t = [Fraction(0)] * inst.d
    for (i, j), w in x.items:
        t[edge_length(inst, i, j) - 1] += w
    return tuple(t)


# ---------------------------------------------------------------------------
# text format

_INT = re.compile(r"[+-]?\d+\Z")
_RATIONAL = re.compile(r"([+-]?\d+)(?:/(\d+))?\Z")


def _parse_int(tok: str, lineno: int) -> int:
    if not _INT.match(tok):
        raise ParseError(f"expected an integer, got {tok!r}", lineno)
    return int(tok)


def parse_rational(tok: str, lineno: int | None = None) -> Fraction:
    m = _RATIONAL.match(tok)
    if not m:
        raise ParseError(f"expected a rational p/q, got {tok!r}", lineno)
    p, q = int(m.group(1)), int(m.group(2) or 1)
    if q == 0:
        raise ParseError("zero denominator", lineno)
    return Fraction(p, q)


def parse_input(text: str):
    """Parse the line format into an Instance, Tour or FractionalPoint.

    A document with a ``tour`` line yields a Tour, one with ``e`` lines a
    FractionalPoint (an ``n`` line is then required), and a bare ``n`` line
    an Instance.
    """
    n = None
    tour = None
    edges: dict[Edge, Fraction] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, *rest = line.split()
        if head == "n":
            if len(rest) != 1:
                raise ParseError("expected 'n <int>'", lineno)
            if n is not None:
                raise ParseError("duplicate 'n' line", lineno)
            n = _parse_int(rest[0], lineno)
            if n < 3:
                raise ParseError(f"n must be >= 3, got {n}", lineno)
        elif head == "tour":
            if tour is not None:
                raise ParseError("more than one tour", lineno)
            seq = [_parse_int(tok, lineno) for tok in rest]
            seen = set()
            for v in seq:
                if v in seen:
                    raise ParseError(f"duplicate vertex {v}", lineno)
                seen.add(v)
            if n is not None and len(seq) != n:
                raise ParseError(f"tour has {len(seq)} vertices but n={n}", lineno)
            try:
                tour = Tour(tuple(seq))
            except InvalidTourError as exc:
                raise ParseError(str(exc), lineno) from None
        elif head == "e":
            if len(rest) != 3:
                raise ParseError("expected 'e <i> <j> <p>/<q>'", lineno)
            if n is None:
                raise ParseError("'e' line before 'n' line", lineno)
            i, j = _parse_int(rest[0], lineno), _parse_int(rest[1], lineno)
            try:
                e = norm_edge(i, j)
                edge_length(n, i, j)
            except InvalidEdgeError as exc:
                raise ParseError(str(exc), lineno) from None
            if e in edges:
                raise ParseError(f"duplicate edge {e}", lineno)
            edges[e] = parse_rational(rest[2], lineno)
        else:
            raise ParseError(f"unknown record {head!r}", lineno)
    if tour is not None:
        if edges:
            raise ParseError("a document holds either a tour or edge weights, not both")
        return tour
    if edges:
        return FractionalPoint.from_dict(n, edges)
    if n is None:
        raise ParseError("empty document")
    return Instance(n)


def format_rational(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def serialize(value) -> str:
    if isinstance(value, Instance):
        return f"n {value.n}\n"
    if isinstance(value, Tour):
        return f"n {value.n}\ntour {' '.join(map(str, value.order))}\n"
    if isinstance(value, FractionalPoint):
        lines = [f"n {value.n}"]
        lines += [f"e {i} {j} {format_rational(w)}" for (i, j), w in value.items]
        return "\n".join(lines) + "\n"
    raise TypeError(f"cannot serialize {type(value).__name__}")


# ---------------------------------------------------------------------------
# vectorised cycle blocks

@lru_cache(maxsize=4)
def _index_permutations(m: int) -> np.ndarray:
    if m == 0:
        return np.zeros((1, 0), dtype=np.int8)
    return np.array(list(itertools.permutations(range(m))), dtype=np.int8)


def cycle_blocks(n: int) -> Iterator[np.ndarray]:
    """Yield all canonical cycles on 1..n as int16 arrays of visit orders.

    Each block fixes the second vertex ``a`` and the last vertex ``b``
    (a < b) and lists the (n-3)! orders of the rest.  Together the blocks
    hold each of the (n-1)!/2 undirected cycles exactly once.  Blocks are
    ordered by (a, b), so rows are not globally lexicographic.
    """
    perms = _index_permutations(n - 3)
    for a in range(2, n + 1):
        for b in range(a + 1, n + 1):
            middle = np.array([v for v in range(2, n + 1) if v not in (a, b)], dtype=np.int16)
            block = np.empty((perms.shape[0], n), dtype=np.int16)
            block[:, 0] = 1
            block[:, 1] = a
            block[:, 2 : n - 1] = middle[perms]
            block[:, n - 1] = b
            yield block


def block_lengths(n: int, block: np.ndarray) -> np.ndarray:
    diff = np.abs(block - np.roll(block, -1, axis=1))
    return np.minimum(diff, n - diff)


def iter_canonical_orders(n: int) -> Iterable[tuple[int, ...]]:
    """Canonical cycles in lexicographic order of the visit sequence."""
    for rest in itertools.permutations(range(2, n + 1)):
        if rest[0] < rest[-1]:
            yield (1,) + rest
