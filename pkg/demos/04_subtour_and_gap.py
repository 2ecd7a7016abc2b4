# Fractional points the inequality cuts off, and what they cost.
from fractions import Fraction

from circlet import (
    half_one_point, lambda_point, subtour_feasible, project_weights, check_circlet,
    lambda_bounds, circlet_strength, crown_strength, min_fx_at_half_one, tt_coeffs,
    gap_ratio, eulerian_counterexample, gap_instance, separate,
)

n = 12
x = half_one_point(n)
print("half/one profile", [str(t) for t in project_weights(n, x)])
print("subtour:", subtour_feasible(n, x).describe())
print("circlet slack", check_circlet(n, project_weights(n, x)).slack)
print("best labeling found by exhaustive search:", separate(n, x))

# sweep lambda across the box
for lam in [Fraction(k, 12) for k in range(4, 14)]:
    p = lambda_point(n, lam)
    print(f"  lambda={str(lam):5s} subtour={subtour_feasible(n, p).feasible!s:5s} "
          f"circlet ok={check_circlet(n, project_weights(n, p)).satisfied}")
print("lambda bounds", lambda_bounds(n))

for n in (8, 12, 16):
    print(f"n={n} strength {circlet_strength(n)} vs crown {crown_strength(n)}; "
          f"{tt_coeffs(n).rhs}/{min_fx_at_half_one(n)}")

for n in (8, 16):
    r = gap_ratio(n)
    e = eulerian_counterexample(n)
    print(f"n={n} gap: tour {r.tour_opt}, lp {r.lp_value}, ratio {r.ratio}; "
          f"eulerian cost {e.cost(gap_instance(n).costs)}")
