"""
Unit jobs on two machines with conflicts
========================================

Every job runs for one time unit on M1 and then one unit on M2.  Two jobs
joined in the conflict graph may never run at the same time on different
machines.  Jobs that agree (the complement graph) can overlap, and a path of
agreeing jobs runs back to back with M2 trailing M1 by one unit.

"""

import random

from flowcover import (
    Instance,
    complement,
    render_gantt,
    solve_unit,
    solve_unit_with_cover,
    unit_lower_bound,
    validate_schedule,
)
from flowcover.generators import chained_triangles
from flowcover.oracle import brute_unit_optimum
from flowcover.verify import random_graph

# %%
# Chained triangles: the agreement graph is a row of triangles linked by
# single edges, so a Hamiltonian path exists and the optimum is n + 1.
inst = chained_triangles(3)
opt = brute_unit_optimum(inst.conflicts)
s, cover = solve_unit_with_cover(inst, "B")
print(f"n = {inst.n}, optimum = {opt}, B makespan = {s.makespan}")
print("cover:", cover.paths)
print(render_gantt(inst, s))

# %%
# Each path contributes its length plus one unit of drain time, so the
# makespan is always n plus the number of paths.  A cover from B also gives
# a certified lower bound n + (#0-paths + #1-paths) without any oracle.
print("lower bound from B's cover:", unit_lower_bound(inst, cover))

# %%
# On random instances the measured ratios stay well inside 4/3 for B and 3/2
# for A.
rng = random.Random(0)
worst = {"A": 1.0, "B": 1.0}
for _ in range(300):
    conflicts = random_graph(rng, rng.randint(2, 8), 0.5)
    best = brute_unit_optimum(conflicts)
    for mode in worst:
        sched = solve_unit(Instance.unit(conflicts), mode)
        assert validate_schedule(Instance.unit(conflicts), sched) is None
        worst[mode] = max(worst[mode], sched.makespan / best)
print("worst observed ratios:", {k: round(v, 3) for k, v in worst.items()})

# %%
# At larger sizes the oracle is out of reach, but B's bound still is.
big = Instance.unit(complement(random_graph(rng, 200, 0.05)))
s, cover = solve_unit_with_cover(big, "B")
print(f"n = 200: makespan {s.makespan}, bound {unit_lower_bound(big, cover)}")
