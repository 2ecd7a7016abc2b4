# The tight family and its rank.
import time

from circlet import base_tours, k_tour, full_family, certify_facet, length_profile
from circlet.facet import special_edge

n = 12
print("base tours:")
for t in base_tours(n)[:3]:
    print("  ", t, length_profile(n, t))

print("k-tours (one rotation each):")
for k in range(3, n // 2 + 1):
    t = k_tour(n, k)
    print(f"   k={k} {t} special edge {special_edge(n, k)} profile {length_profile(n, t)}")

print("family size", len(full_family(n)), "expected", n * (n - 3) // 2)

for n in (4, 8, 12, 16):
    t0 = time.perf_counter()
    cert = certify_facet(n)
    print(cert.to_line(), f"({time.perf_counter() - t0:.2f}s)")
