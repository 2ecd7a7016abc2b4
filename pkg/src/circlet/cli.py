"""Command-line front end.

Exit codes: 0 ok, 1 violation or failed certificate, 2 usage or input
error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .contraction import aggregate_delta, detect_structures
from .core import FractionalPoint, Tour, get_caps, length_profile, parse_input, parse_rational, project_weights
from .errors import BudgetExceededError, CircletError
from .facet import certify_facet
from .inequality import check_circlet, circlet_coeffs, circlet_strength, crown_strength, separate, tt_coeffs
from .oracle import LengthMultiset, buratti_condition, cost_census, edge_length_feasible, el_points, min_tour_cost
from .subtour import eulerian_counterexample, gap_instance, gap_ratio, half_one_point, lambda_bounds, lambda_point, subtour_feasible

OK, VIOLATION, USAGE, BUDGET = 0, 1, 2, 3


def fmt(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def b(v: bool) -> str:
    return "true" if v else "false"


def _read(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return parse_input(text)


def _profile(value):
    if isinstance(value, Tour):
        return value.n, length_profile(value.n, value)
    if isinstance(value, FractionalPoint):
        return value.n, project_weights(value.n, value)
    raise CircletError("expected a tour or edge weights, got a bare instance")


# ---------------------------------------------------------------------------
# subcommands; each prints and returns an exit code

def cmd_coeffs(a) -> int:
    c, tt = circlet_coeffs(a.n), tt_coeffs(a.n)
    print("c: " + " ".join(map(str, c.c)))
    print(f"rhs: {c.rhs}")
    print("f: " + " ".join(map(str, tt.f)))
    print(f"tt_rhs: {tt.rhs}")
    return OK


def cmd_check(a) -> int:
    n, prof = _profile(_read(a.file))
    res = check_circlet(n, prof)
    print("profile: " + " ".join(fmt(t) for t in prof))
    value = res.slack + circlet_coeffs(n).rhs
    print(f"value={fmt(value)} rhs={n - 2} slack={fmt(res.slack)} satisfied={b(res.satisfied)}")
    return OK if res.satisfied else VIOLATION


def cmd_verify(a) -> int:
    c = circlet_coeffs(a.n)
    best = min_tour_cost(a.n, c.c)
    valid = best == c.rhs
    print(f"min={fmt(best)} rhs={c.rhs} valid={b(valid)}")
    if a.exhaustive:
        census = cost_census(a.n, c.c)
        ok = census.minimum == c.rhs
        print(f"exhaustive tours={census.tours} min={census.minimum} tight={census.at_minimum} valid={b(ok)}")
        valid = valid and ok
    return OK if valid else VIOLATION


def cmd_facet(a) -> int:
    cert = certify_facet(a.n)
    print(cert.to_line())
    return OK if cert.valid else VIOLATION


def cmd_strength(a) -> int:
    ours = circlet_strength(a.n)
    line = f"n={a.n} circlet={fmt(ours)}"
    if a.n >= 8:
        crown = crown_strength(a.n)
        line += f" crown={fmt(crown)} circlet_ge_crown={b(ours >= crown)}"
    print(line)
    return OK


def cmd_contract(a) -> int:
    tour = _read(a.file)
    if not isinstance(tour, Tour):
        raise CircletError("contract needs a tour")
    status = OK
    hits = detect_structures(tour)
    for hit in hits:
        if not hit.contractible or tour.n < 8:
            print(f"skip {hit.kind} u={hit.u} j={hit.j} k={hit.k} contractible=false")
            continue
        rep = aggregate_delta(tour, hit)
        print(rep.to_line(verbose=a.verbose))
        if a.verbose:
            print(f"  contracted {rep.contracted}")
        if not rep.ok:
            status = VIOLATION
    print(f"hits={len(hits)}")
    return status


def cmd_separate(a) -> int:
    value = _read(a.file)
    x = FractionalPoint.from_tour(value) if isinstance(value, Tour) else value
    if not isinstance(x, FractionalPoint):
        raise CircletError("separate needs a tour or edge weights")
    res = separate(x.n, x, mode=a.mode, budget=a.budget, seed=a.seed)
    print(f"mode={res.mode} value={fmt(res.value)} rhs={res.rhs} violation={fmt(res.violation)} "
          f"violated={b(res.violated)}")
    print("labeling: " + " ".join(map(str, res.labeling)))
    return VIOLATION if res.violated else OK


def cmd_el(a) -> int:
    pts = el_points(a.n)
    for p in pts:
        print("t " + " ".join(map(str, p)))
    print(f"count={len(pts)}")
    return OK


def cmd_buratti(a) -> int:
    L = LengthMultiset.from_lengths(a.n, a.lengths)
    status = OK
    if a.kind == "path":
        res = buratti_condition(a.n, L)
        q = "" if res.holds else f" q={res.violated_q}"
        print(f"condition holds={b(res.holds)}{q}")
        status = OK if res.holds else VIOLATION
    if a.n <= get_caps().feasibility:
        feasible = edge_length_feasible(a.n, L, kind=a.kind)
        print(f"{a.kind} feasible={b(feasible)}")
        if not feasible:
            status = VIOLATION
    else:
        print(f"{a.kind} feasible=skipped cap={get_caps().feasibility}")
    return status


def cmd_subtour(a) -> int:
    x = half_one_point(a.n) if a.lam is None else lambda_point(a.n, a.lam)
    prof = project_weights(a.n, x)
    res = subtour_feasible(a.n, x)
    chk = check_circlet(a.n, prof)
    print("profile: " + " ".join(fmt(t) for t in prof))
    print(f"subtour {res.describe()}")
    print(f"circlet value={fmt(chk.slack + a.n - 2)} rhs={a.n - 2} satisfied={b(chk.satisfied)}")
    if a.n >= 8:
        lb = lambda_bounds(a.n)
        print(f"lambda_bounds circlet={fmt(lb.circlet)} crown={fmt(lb.crown)}")
    return OK if res.feasible else VIOLATION


def cmd_gap(a) -> int:
    g = gap_instance(a.n)
    r = gap_ratio(a.n)
    print(f"tour_opt={fmt(r.tour_opt)} lp_value={fmt(r.lp_value)} ratio={fmt(r.ratio)}")
    e = eulerian_counterexample(a.n)
    cost = e.cost(g.costs)
    print(f"eulerian cost={cost} even={b(e.all_even())} connected={b(e.is_connected())}")
    ok = r.tour_opt == a.n - 2 and e.all_even() and e.is_connected()
    return OK if ok else VIOLATION


# ---------------------------------------------------------------------------

def _rational(tok: str) -> Fraction:
    try:
        return parse_rational(tok)
    except CircletError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="circlet", description="Circlet inequality toolkit.")
    p.add_argument("--threads", type=int, default=1, help="worker cap (computations run in one thread)")
    sub = p.add_subparsers(dest="command", required=True)

    def with_n(name, fn, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("n", type=int)
        sp.set_defaults(fn=fn)
        return sp

    def with_file(name, fn, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("file", help="input file, or - for stdin")
        sp.set_defaults(fn=fn)
        return sp

    with_n("coeffs", cmd_coeffs, "circlet and tight-triangular coefficients")
    with_file("check", cmd_check, "evaluate the circlet inequality on a tour or point")
    sp = with_n("verify", cmd_verify, "minimum circlet tour cost by Held-Karp")
    sp.add_argument("--exhaustive", action="store_true", help="also enumerate every tour")
    with_n("facet", cmd_facet, "tight family and exact rank")
    with_n("strength", cmd_strength, "circlet versus crown strength")
    sp = with_file("contract", cmd_contract, "detect and contract window structures")
    sp.add_argument("--verbose", "-v", action="store_true")
    sp = with_file("separate", cmd_separate, "search labelings for a violated circlet")
    sp.add_argument("--mode", choices=("exhaustive", "heuristic"), default="exhaustive")
    sp.add_argument("--budget", type=int, default=50)
    sp.add_argument("--seed", type=int, default=0)
    with_n("el", cmd_el, "all length profiles of tours")
    sp = with_n("buratti", cmd_buratti, "length-multiset condition and brute-force feasibility")
    sp.add_argument("lengths", type=int, nargs="+")
    sp.add_argument("--kind", choices=("path", "cycle"), default="path")
    sp = with_n("subtour", cmd_subtour, "half/one or lambda point against the subtour LP")
    sp.add_argument("--lambda", dest="lam", type=_rational, default=None)
    with_n("gap", cmd_gap, "integrality-gap instance and Eulerian example")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.fn(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BUDGET
    except (CircletError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
