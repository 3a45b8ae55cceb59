"""
Path covers with few short paths
================================

A path cover splits the vertices of a graph into vertex-disjoint paths.
Short paths are expensive when the cover is turned into a schedule, so the
two objectives here are the number of singletons (0-paths) and the number of
singletons plus single edges (1-paths).

"""

from flowcover import Graph, algorithm_A, algorithm_B, decompose, maximum_two_matching
from flowcover import refine_to_min_singletons
from flowcover.oracle import brute_cover_stats

# %%
# Everything starts from a maximum 2-matching: a largest edge set in which
# every vertex has degree at most two.  Its components are paths and cycles.
spider = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 4)])
m = maximum_two_matching(spider)
d = decompose(m)
print("2-matching edges:", sorted(m.edges))
print("singletons:", d.p0, " 1-paths:", d.p1, " 3-paths:", d.p3)

# %%
# Minimizing singletons alone lets a leaf join the center at the price of a
# 1-path.  Minimizing singletons plus 1-paths accepts the lone leaf instead.
for name, cover in (("A", algorithm_A(spider)), ("B", algorithm_B(spider))):
    paths, zero, one = cover.counts
    print(f"{name}: {cover.paths}  paths={paths} 0-paths={zero} 1-paths={one}")

# %%
# Starting from B's fixed point, a singleton can still be traded for a
# 1-path without raising the 0/1 total.  The refined cover is optimal for
# both objectives at once, which the brute-force oracle confirms.
refined = refine_to_min_singletons(spider)
stats = brute_cover_stats(spider)
print("refined:", refined.paths, refined.counts)
print("oracle: min 0/1-paths", stats.min_num_01_paths, "and then min 0-paths", stats.joint_min_0_paths)

# %%
# A longer example where the saving path threads through several components:
# a 1-path, a 3-path, a 4-path and a 5-path.  B rewires three edges in one
# swap and leaves no short path at all.
edges = [(0, 1), (2, 3), (3, 4), (4, 5), (6, 7), (7, 8), (8, 9), (9, 10)]
edges += [(i, i + 1) for i in range(11, 16)]
chain = Graph.from_edges(17, edges + [(1, 3), (5, 8), (6, 13)])
print("B on the chain:", algorithm_B(chain).paths)
