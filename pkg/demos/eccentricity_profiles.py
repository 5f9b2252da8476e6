"""Tour of the exact eccentricity machinery on a gallery of small graphs.

Run:  python demos/eccentricity_profiles.py
"""
import eccbounds as eb

gallery = [
    ("path P9", eb.path_graph(9)),
    ("cycle C7", eb.cycle_graph(7)),
    ("complete K6", eb.complete_graph(6)),
    ("complete bipartite K33", eb.complete_bipartite(3, 3)),
    ("Petersen", eb.petersen_graph()),
    ("Heawood", eb.heawood_graph()),
    ("Hoffman-Singleton", eb.hoffman_singleton_graph()),
]

print(f"{'graph':<24} {'n':>4} {'m':>4} {'girth':>6} {'radius':>6} "
      f"{'diam':>5} {'avec':>9} {'decimal':>9}")
for name, g in gallery:
    prof = eb.eccentricity_profile(g)
    gi = eb.girth(g)
    print(f"{name:<24} {g.n:>4} {g.m:>4} {str(gi) if gi else 'acyclic':>6} "
          f"{prof.radius:>6} {prof.diameter:>5} {str(prof.avec):>9} "
          f"{float(prof.avec):>9.4f}")

# the path is the extremal case: its average eccentricity is the maximum
# over all connected graphs of the same order, and the closed form agrees
# with the measured value exactly
print("\npath extremality, n = 1..12:")
for n in range(1, 13):
    closed = eb.path_avec_closed_form(n)
    measured = eb.eccentricity_profile(eb.path_graph(n)).avec
    assert closed == measured
    print(f"  n={n:<3} avec(P_n) = {closed}")

# weighted averages: moving all weight to one end of a path is the worst case
p5 = eb.path_graph(5)
from fractions import Fraction as F
end_heavy = eb.WeightFunction((F(10), F(1), F(1), F(1), F(1)))
print(f"\nweighted P5, end-heavy: {eb.weighted_avec(p5, end_heavy)} "
      f"vs uniform {eb.eccentricity_profile(p5).avec}")
