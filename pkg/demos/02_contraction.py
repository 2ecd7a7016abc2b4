# Walk through one contraction: find a window structure, delete four
# vertices, relabel, and account for every unit of cost that disappears.
from circlet import Tour, detect_structures, aggregate_delta, window_identity, length_profile
from circlet.contraction import groups, group_walk_trace, StructureHit

tour = Tour((1, 2, 8, 7, 11, 5, 6, 12, 9, 10, 3, 4))
print("tour", tour, "profile", length_profile(12, tour))
print("t1 + 2 t_d and window sum:", tuple(window_identity(tour)))

for hit in detect_structures(tour):
    print(" ", hit)

report = aggregate_delta(tour, StructureHit(1, "B2", 4, 11))
print()
print(report.to_line(verbose=True))
print("contracted to", report.contracted, "on", report.contracted.n, "vertices")
print("aggregate", report.aggregate, "direct", report.direct_delta)

# the parity/side groups that control which edges keep their cost
print("\ngroups at n=12:", groups(12))

# an A structure whose chain only drops by 2: another edge must pay
planted = Tour((4, 8, 2, 1, 7, 6, 3, 5, 9, 10, 11, 12))
hit = StructureHit(1, "A", 4, 6)
rep = aggregate_delta(planted, hit)
walk = group_walk_trace(planted, hit)
print("\nA hit", hit)
print("chain delta", rep.chain_delta, "cheaper edges", rep.reduced_edges, "total", rep.aggregate)
print("walk", " ".join(walk.walk), "only G-circle edges:", walk.uses_only_G_circle)
