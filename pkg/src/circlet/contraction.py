"""Windows, forbidden structures and the four-vertex contraction.

Structure kinds at a window u (labels mod n, d = n/2):

* ``A``:  edges {u+d, u}, {u, u+1}, {u+1, u+1+d}
* ``B1``: edges {u+1, u}, {u, u+d}, {u+d, u+1+d}
* ``B2``: edges {u, u+1}, {u+1, u+1+d}, {u+1+d, u+d}

After rotating the window to u = 1, a B2 hit is the chain
j-1-2-(d+2)-(d+1)-k and an A hit is the chain j-(d+2)-2-1-(d+1)-k.
Contraction deletes 1, 2, d+1, d+2, joins j to k and relabels the rest.
B1 hits are reflected (v -> n - v) into B2 hits first.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple

from .core import Tour, as_instance, edge_length, length_profile, norm_edge, wrap
from .errors import DomainError
from .inequality import circlet_coeffs, evaluate

KINDS = ("A", "B1", "B2")


def _even_instance(n: int):
    inst = as_instance(n).require_even()
    if inst.n < 4:
        raise DomainError("windows need n >= 4")
    return inst


def window(n: int, u: int) -> tuple[int, int, int, int]:
    d = n // 2
    return (wrap(n, u), wrap(n, u + 1), wrap(n, u + d), wrap(n, u + d + 1))


def window_count(tour: Tour, u: int) -> int:
    """T_u: length-1 and length-d tour edges inside the window at u."""
    n = tour.n
    _even_instance(n)
    a, b, c, e = window(n, u)
    edges = tour.edge_set()
    return sum(norm_edge(p, q) in edges for p, q in ((a, b), (c, e), (a, c), (b, e)))


class WindowIdentity(NamedTuple):
    lhs: int
    rhs: int


def window_identity(tour: Tour) -> WindowIdentity:
    """(t_1 + 2 t_d, T_1 + ... + T_d)."""
    n = tour.n
    inst = _even_instance(n)
    t = length_profile(inst, tour)
    return WindowIdentity(t[0] + 2 * t[-1], sum(window_count(tour, u) for u in range(1, inst.d + 1)))


# ---------------------------------------------------------------------------
# structure detection

@dataclass(frozen=True)
class StructureHit:
    u: int
    kind: str
    j: int
    k: int
    contractible: bool = True


def _path(n: int, u: int, kind: str) -> tuple[int, int, int, int]:
    d = n // 2
    a, b, ad, bd = wrap(n, u), wrap(n, u + 1), wrap(n, u + d), wrap(n, u + d + 1)
    if kind == "A":
        return (ad, a, b, bd)
    if kind == "B1":
        return (b, a, ad, bd)
    if kind == "B2":
        return (a, b, bd, ad)
    raise DomainError(f"unknown structure kind {kind!r}")


def _hit_at(tour: Tour, u: int, kind: str, edges=None, nbrs=None) -> StructureHit | None:
    n = tour.n
    edges = tour.edge_set() if edges is None else edges
    path = _path(n, u, kind)
    if not all(norm_edge(path[i], path[i + 1]) in edges for i in range(3)):
        return None
    nbrs = tour.neighbors() if nbrs is None else nbrs

    def outer(end, inner):
        p, q = nbrs[end]
        return q if p == inner else p

    # A and B2 read j at the end next to u+d+1 / u; k next to u+d
    if kind == "A":
        j, k = outer(path[3], path[2]), outer(path[0], path[1])
    else:
        j, k = outer(path[0], path[1]), outer(path[3], path[2])
    contractible = j != k and j not in path and k not in path
    return StructureHit(wrap(n, u), kind, j, k, contractible)


def detect_structures(tour: Tour) -> list[StructureHit]:
    n = tour.n
    _even_instance(n)
    edges, nbrs = tour.edge_set(), tour.neighbors()
    hits = []
    for u in range(1, n + 1):
        for kind in KINDS:
            hit = _hit_at(tour, u, kind, edges, nbrs)
            if hit is not None:
                hits.append(hit)
    return hits


# ---------------------------------------------------------------------------
# normalisation

@dataclass(frozen=True)
class Normalization:
    """Label map v -> wrap(n, s*v + shift) with s = -1 when reflected."""

    n: int
    reflected: bool
    shift: int

    def __call__(self, v: int) -> int:
        return wrap(self.n, (-v if self.reflected else v) + self.shift)

    def __str__(self):
        sign = "-v" if self.reflected else "v"
        return f"v -> {sign}{self.shift:+d} mod {self.n}"


def normalize_hit(tour: Tour, hit: StructureHit) -> tuple[Tour, StructureHit, Normalization]:
    """Rotate (and reflect B1 into B2) so that the hit sits at u = 1."""
    n = tour.n
    if hit.kind == "B1":
        w = wrap(n, -hit.u - 1)
        norm = Normalization(n, True, 1 - w)  # v -> -v, then rotate w to 1
        kind = "B2"
    else:
        norm = Normalization(n, False, 1 - hit.u)
        kind = hit.kind
    ntour = tour.relabel(norm)
    nhit = _hit_at(ntour, 1, kind)
    if nhit is None:
        raise DomainError(f"{hit} is not present in tour {tour}")
    assert (nhit.j, nhit.k) == (norm(hit.j), norm(hit.k))
    return ntour, nhit, norm


# ---------------------------------------------------------------------------
# per-edge bookkeeping (window normalised to u = 1)

def _window_one(n: int) -> tuple[int, ...]:
    d = n // 2
    return (1, 2, d + 1, d + 2)


def contracted_label(n: int, s: int) -> int:
    d = n // 2
    if 3 <= s <= d:
        return s - 2
    if d + 3 <= s <= n:
        return s - 4
    raise DomainError(f"vertex {s} lies in the contracted window {{1, 2, {d + 1}, {d + 2}}}")


def circlet_cost(n: int, s: int, t: int) -> int:
    return circlet_coeffs(n).cost(edge_length(n, s, t))


def contracted_cost(n: int, s: int, t: int) -> int:
    """Circlet cost at n-4 of the image of edge {s, t}, computed directly."""
    return circlet_cost(n - 4, contracted_label(n, s), contracted_label(n, t))


class PerEdgeDelta(NamedTuple):
    new_length: int
    new_cost: int
    delta: int


def per_edge_delta(inst, s: int, t: int) -> PerEdgeDelta:
    """Closed-form length/cost change of an edge avoiding the window at u = 1."""
    inst = as_instance(inst).require_circlet()
    n, d = inst.n, inst.d
    if s in _window_one(n) or t in _window_one(n):
        raise DomainError(f"edge {{{s}, {t}}} touches the contracted window")
    length = edge_length(inst, s, t)
    cost = circlet_coeffs(inst).cost(length)
    top_s, top_t = s <= d, t <= d
    same_group = top_s == top_t
    new_length = length if same_group else length - 2
    same_parity = s % 2 == t % 2
    keeps = same_group != same_parity
    new_cost = cost if keeps else cost - 2
    return PerEdgeDelta(new_length, new_cost, cost - new_cost)


# ---------------------------------------------------------------------------
# contraction

def _chain(n: int, kind: str, j: int, k: int) -> list[int]:
    d = n // 2
    if kind == "B2":
        return [j, 1, 2, d + 2, d + 1, k]
    if kind == "A":
        return [j, d + 2, 2, 1, d + 1, k]
    raise DomainError(f"no chain for kind {kind!r}; normalise B1 hits first")


def contract(tour: Tour, hit: StructureHit) -> Tour:
    """Contract an A or B2 hit to a tour on n - 4 vertices."""
    n = tour.n
    as_instance(n).require_circlet()
    if hit.kind == "B1":
        raise DomainError("B1 hits must be reflected into B2 first (see normalize_hit)")
    if n < 8:
        raise DomainError("contraction needs n >= 8")
    if not hit.contractible:
        raise DomainError(f"{hit} is not contractible")
    ntour, nhit, _ = normalize_hit(tour, hit)
    gone = set(_window_one(n))
    order = [contracted_label(n, v) for v in ntour.order if v not in gone]
    return Tour(tuple(order))


@dataclass(frozen=True)
class ContractionReport:
    original: Tour
    contracted: Tour
    kind: str
    u: int
    j: int
    k: int
    normalization: Normalization
    chain: tuple[int, ...]  # normalised labels, j first
    chain_cost: int
    new_edge: tuple[int, int]  # contracted labels
    new_cost: int
    per_edge: tuple  # ((s, t), old cost, new cost) in normalised labels
    direct_delta: int

    @property
    def chain_delta(self) -> int:
        return self.chain_cost - self.new_cost

    @property
    def reduced_edges(self) -> int:
        return sum(1 for _, old, new in self.per_edge if old != new)

    @property
    def aggregate(self) -> int:
        return self.chain_delta + sum(old - new for _, old, new in self.per_edge)

    @property
    def consistent(self) -> bool:
        return self.aggregate == self.direct_delta

    @property
    def dichotomy(self) -> bool:
        """Chain drop >= 4, or exactly 2 with some other edge getting cheaper."""
        if self.chain_delta >= 4:
            return True
        return self.chain_delta == 2 and self.reduced_edges > 0

    @property
    def ok(self) -> bool:
        parity = self.chain_delta % 2 == 0 if self.kind == "A" else True
        return self.consistent and self.aggregate >= 4 and self.dichotomy and parity

    def to_line(self, verbose: bool = False) -> str:
        line = f"contract {self.kind} u={self.u} j={self.j} k={self.k} delta={self.aggregate}"
        if not verbose:
            return line
        rows = [line, f"  normalization {self.normalization}",
                f"  chain {'-'.join(map(str, self.chain))} cost={self.chain_cost} "
                f"new_edge={self.new_edge[0]}-{self.new_edge[1]} new_cost={self.new_cost} "
                f"chain_delta={self.chain_delta}"]
        for (s, t), old, new in self.per_edge:
            rows.append(f"  edge {s} {t} old={old} new={new} delta={old - new}")
        return "\n".join(rows)


def aggregate_delta(tour: Tour, hit: StructureHit) -> ContractionReport:
    n = tour.n
    as_instance(n).require_circlet()
    if n < 8 or not hit.contractible:
        raise DomainError(f"{hit} is not contractible on n={n}")
    ntour, nhit, norm = normalize_hit(tour, hit)
    chain = _chain(n, nhit.kind, nhit.j, nhit.k)
    chain_edges = {norm_edge(chain[i], chain[i + 1]) for i in range(5)}
    chain_cost = sum(circlet_cost(n, chain[i], chain[i + 1]) for i in range(5))
    jp, kp = contracted_label(n, nhit.j), contracted_label(n, nhit.k)
    new_cost = circlet_cost(n - 4, jp, kp)
    per_edge = tuple(
        ((s, t), circlet_cost(n, s, t), contracted_cost(n, s, t))
        for s, t in ntour.edges()
        if (s, t) not in chain_edges
    )
    contracted = contract(ntour, nhit)
    before = evaluate(circlet_coeffs(n), length_profile(n, tour))
    after = evaluate(circlet_coeffs(n - 4), length_profile(n - 4, contracted))
    return ContractionReport(
        original=tour,
        contracted=contracted,
        kind=hit.kind,
        u=hit.u,
        j=hit.j,
        k=hit.k,
        normalization=norm,
        chain=tuple(chain),
        chain_cost=chain_cost,
        new_edge=norm_edge(jp, kp),
        new_cost=new_cost,
        per_edge=per_edge,
        direct_delta=before - after,
    )


# ---------------------------------------------------------------------------
# closed forms for the chain excess

def _side(n: int, v: int) -> str:
    d = n // 2
    if 3 <= v <= d:
        return "top"
    if d + 3 <= v <= n:
        return "bottom"
    raise DomainError(f"vertex {v} lies in the contracted window")


def admissible_pairs(n: int):
    d = n // 2
    outside = [v for v in range(1, n + 1) if v not in (1, 2, d + 1, d + 2)]
    return [(j, k) for j in outside for k in outside if j != k]


def chain_excess(inst, variant: str, j: int, k: int) -> int:
    """Direct value of the chain excess over its threshold.

    variant B2: c(j,1) + c(d+1,k) - c'(j',k') - 2
    variant A:  c(j,d+2) + c(d+1,k) - c'(j',k') - 1
    """
    inst = as_instance(inst).require_circlet()
    n, d = inst.n, inst.d
    _side(n, j), _side(n, k)
    if j == k:
        raise DomainError("j and k must differ")
    new = contracted_cost(n, j, k)
    if variant == "B2":
        return circlet_cost(n, j, 1) + circlet_cost(n, d + 1, k) - new - 2
    if variant == "A":
        return circlet_cost(n, j, d + 2) + circlet_cost(n, d + 1, k) - new - 1
    raise DomainError(f"variant must be 'A' or 'B2', got {variant!r}")


def _case_b2(n, d, j, k, sj, sk):
    a = abs(j - k)
    je, ke = j % 2 == 0, k % 2 == 0
    if je and ke:
        if sj == sk == "top":
            return j - k + a
        if sj == sk == "bottom":
            return k - j + a
        if sj == "top":
            return 2 * k - n - 4 if k < d + j else 2 * j - 4
        return n - 2 * k if j < d + k else 2 * n - 2 * j
    if not je and not ke:
        if sj == sk == "top":
            return k - j + a
        if sj == sk == "bottom":
            return j - k + a
        if sj == "top":
            return n - 2 * j if k < d + j else 2 * n - 2 * k
        return 2 * j - n - 4 if j < d + k else 2 * k - 4
    if not je and ke:
        if sj == sk == "top":
            return n - j - k - a
        if sj == sk == "bottom":
            return j + k - a - n - 4
        if sj == "top":
            return 0 if k < d + j else 2 * k - 2 * j - n
        return 0 if j < d + k else 2 * j - 2 * k - n
    if sj == sk == "top":
        return j + k - a - 4
    if sj == sk == "bottom":
        return 2 * n - j - k - a
    if sj == "top":
        return 0 if k > d + j else n + 2 * j - 2 * k
    return 0 if j > d + k else n - 2 * j + 2 * k


def _case_a(n, d, j, k, sj, sk):
    a = abs(j - k)
    je, ke = j % 2 == 0, k % 2 == 0
    if je and ke:
        if sj == sk == "top":
            return j - k + a
        if sj == sk == "bottom":
            return 2 + a - (j - k)
        if sj == "top":
            return 2 * k - n - 4 if k < d + j else 2 * j - 4
        return n - 2 * k + 2 if j < d + k else 2 * n - 2 * j + 2
    if not je and not ke:
        if sj == sk == "top":
            return 2 + a + (k - j)
        if sj == sk == "bottom":
            return a + j - k
        if sj == "top":
            return n + 2 - 2 * j if k < d + j else 2 * n + 2 - 2 * k
        return 2 * j - n - 4 if j < d + k else 2 * k - 4
    if not je and ke:
        if sj == sk == "top":
            return n + 2 - j - k - a
        if sj == sk == "bottom":
            return j + k - a - n - 4
        if sj == "top":
            return 2 if k < d + j else 2 * k - 2 * j - n + 2
        return 0 if j < d + k else 2 * j - 2 * k - n
    if sj == sk == "top":
        return j + k - a - 4
    if sj == sk == "bottom":
        return 2 * n + 2 - j - k - a
    if sj == "top":
        return n + 2 * j - 2 * k if k < d + j else 0
    return n + 2 - 2 * j + 2 * k if j < d + k else 2


def appendix_case_value(inst, variant: str, j: int, k: int) -> int:
    """Closed-form chain excess, selected by the parities and sides of j, k."""
    inst = as_instance(inst).require_circlet()
    n, d = inst.n, inst.d
    if j == k:
        raise DomainError("j and k must differ")
    sj, sk = _side(n, j), _side(n, k)
    if variant == "B2":
        return _case_b2(n, d, j, k, sj, sk)
    if variant == "A":
        return _case_a(n, d, j, k, sj, sk)
    raise DomainError(f"variant must be 'A' or 'B2', got {variant!r}")


def a_zero_case(n: int, j: int, k: int) -> bool:
    """The four (j, k) configurations where the A-chain excess can vanish."""
    d = n // 2
    if j <= d and k <= d and j % 2 == 0 and k % 2 == 0 and j < k:
        return True
    if j >= d + 3 and k >= d + 3 and j % 2 == 1 and k % 2 == 1 and j < k:
        return True
    if j >= d + 3 and j % 2 == 1 and k <= d and k % 2 == 0 and j <= d + k:
        return True
    return j <= d and j % 2 == 0 and k >= d + 3 and k % 2 == 1 and k >= d + j


# ---------------------------------------------------------------------------
# group walk

S1 = frozenset({"TO", "BE"})
S2 = frozenset({"TE", "BO"})
G_CIRCLE = frozenset(
    frozenset(p) for p in (("TO", "TE"), ("TO", "BO"), ("BE", "TE"), ("BO", "BE"))
)


def vertex_group(n: int, v: int) -> str:
    side = "T" if _side(n, v) == "top" else "B"
    return side + ("O" if v % 2 else "E")


def groups(n: int) -> dict[str, list[int]]:
    d = n // 2
    out = {"TO": [], "TE": [], "BO": [], "BE": []}
    for v in range(1, n + 1):
        if v not in (1, 2, d + 1, d + 2):
            out[vertex_group(n, v)].append(v)
    return out


@dataclass(frozen=True)
class WalkTrace:
    walk: tuple[str, ...]
    vertices: tuple[int, ...]  # normalised labels from j to k
    uses_only_G_circle: bool
    group_visit_counts: tuple[int, int, int, int]  # TO, TE, BO, BE
    ends_in_S2: bool


def group_walk_trace(tour: Tour, hit: StructureHit) -> WalkTrace:
    """Trace the j -> k path through the non-window vertices of an A hit."""
    n = tour.n
    as_instance(n).require_circlet()
    if hit.kind != "A":
        raise DomainError("the group walk is defined for A hits")
    if n < 8 or not hit.contractible:
        raise DomainError(f"{hit} is not contractible on n={n}")
    ntour, nhit, _ = normalize_hit(tour, hit)
    d = n // 2
    order = list(ntour.order)
    i = order.index(nhit.j)
    step = 1 if order[(i - 1) % n] == d + 2 else -1
    path = []
    while True:
        v = order[i % n]
        path.append(v)
        if v == nhit.k:
            break
        i += step
    walk = tuple(vertex_group(n, v) for v in path)
    only = all(frozenset((walk[t], walk[t + 1])) in G_CIRCLE for t in range(len(walk) - 1))
    counts = Counter(walk)
    return WalkTrace(
        walk=walk,
        vertices=tuple(path),
        uses_only_G_circle=only,
        group_visit_counts=tuple(counts[g] for g in ("TO", "TE", "BO", "BE")),
        ends_in_S2=walk[0] in S2 and walk[-1] in S2,
    )
