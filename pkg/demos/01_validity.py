# Validity and tightness of the circlet inequality, checked three ways.
from collections import Counter

import numpy as np

from circlet import circlet_coeffs, length_profile, min_tour_cost, enumerate_tours, evaluate
from circlet.oracle import cost_census

# coefficients by edge length; odd lengths cost their length, even ones d - length
for n in (4, 8, 12, 16):
    c = circlet_coeffs(n)
    print(f"n={n:2d}  c={c.c}  rhs={c.rhs}")

# every tour on 8 cities, scored directly
values = Counter(evaluate(circlet_coeffs(8), length_profile(8, t)) for t in enumerate_tours(8))
print("\nn=8 value histogram:", dict(sorted(values.items())))

# the same minimum from the numpy census (fast enough for n=12 too)
for n in (8, 12):
    census = cost_census(n, circlet_coeffs(n).c)
    print(f"census n={n}: {census.tours} tours, min {census.minimum}, {census.at_minimum} tight")

# Held-Karp reaches further
for n in (16, 20):
    print(f"Held-Karp n={n}: min = {min_tour_cost(n, circlet_coeffs(n).c)}")

# profiles are just histograms of edge lengths; a random tour for flavour
rng = np.random.default_rng(0)
order = tuple(int(v) for v in rng.permutation(np.arange(1, 13)))
print("\nrandom n=12 tour", order, "profile", length_profile(12, order))
