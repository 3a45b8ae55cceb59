"""Oracle cross-check suites behind ``flowcover verify``.

Each suite returns a list of human-readable mismatch descriptions; an empty
list means everything agreed.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Iterator

from .graph import Graph, complement, graph_from_mask, recognize_two_cliques
from .generators import two_cliques
from .matching import loose_ends_independent, maximum_two_matching
from .oracle import (
    brute_cover_stats,
    brute_max_two_matching,
    brute_unit_optimum,
    case_formula_makespan,
)
from .pathcover import algorithm_A, algorithm_B, refine_to_min_singletons
from .scheduling import (
    AggregatedPair,
    Instance,
    algorithm_C,
    lower_bound_two_cliques,
    makespan_identity_check,
    schedule_from_cover,
    validate_schedule,
)


def all_graphs(n: int) -> Iterator[Graph]:
    for mask in range(1 << (n * (n - 1) // 2)):
        yield graph_from_mask(n, mask)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def check_graph(g: Graph) -> list[str]:
    """Matching size, both objectives, refinement, and unit-schedule bounds."""
    out = []
    m = maximum_two_matching(g)
    if g.m <= 25 and len(m) != brute_max_two_matching(g):
        out.append(f"2-matching size {len(m)} != brute force on {g.edges}")
    if not loose_ends_independent(m):
        out.append(f"adjacent loose vertices in maximum 2-matching on {g.edges}")
    st = brute_cover_stats(g)
    a, b, r = algorithm_A(g), algorithm_B(g), refine_to_min_singletons(g)
    if a.num_0_paths != st.min_num_0_paths:
        out.append(f"A: {a.num_0_paths} 0-paths, optimum {st.min_num_0_paths} on {g.edges}")
    if b.num_0_paths + b.num_1_paths != st.min_num_01_paths:
        out.append(f"B: {b.num_0_paths + b.num_1_paths} 0/1-paths, optimum {st.min_num_01_paths} on {g.edges}")
    if (r.num_0_paths + r.num_1_paths, r.num_0_paths) != (st.min_num_01_paths, st.joint_min_0_paths):
        out.append(f"refined: {r.counts} vs joint optimum on {g.edges}")
    for cover in (a, b, r):
        if not cover.is_valid_for(g):
            out.append(f"invalid cover {cover.paths} on {g.edges}")
    return out


def check_unit_ratios(conflicts: Graph) -> list[str]:
    out = []
    inst = Instance.unit(conflicts)
    agree = complement(conflicts)
    opt = brute_unit_optimum(conflicts)
    for cover, limit in ((algorithm_B(agree), Fraction(4, 3)), (algorithm_A(agree), Fraction(3, 2))):
        s = schedule_from_cover(cover, inst.n)
        v = validate_schedule(inst, s)
        if v is not None:
            out.append(f"invalid schedule: {v}")
        if not makespan_identity_check(cover, s):
            out.append(f"makespan {s.makespan} != n + {cover.num_paths}")
        if s.makespan > limit * opt:
            out.append(f"makespan {s.makespan} exceeds {limit} x {opt} on conflicts {conflicts.edges}")
    return out


def check_two_cliques(rng: random.Random, n: int, p_max: int) -> list[str]:
    l = rng.randint(0, n)
    inst = two_cliques(l, n, p_max, seed=rng.randrange(2**31))
    part = recognize_two_cliques(inst.conflicts)
    if part is None:
        return [f"two-clique instance not recognized (l={l}, n={n})"]
    s = algorithm_C(inst, part)
    out = []
    v = validate_schedule(inst, s)
    if v is not None:
        out.append(f"algorithm C schedule invalid: {v}")
    lb = lower_bound_two_cliques(inst, part)
    if 2 * s.makespan > 3 * lb:
        out.append(f"algorithm C makespan {s.makespan} > 3/2 x {lb}")
    agg = AggregatedPair.of(inst, part)
    if s.makespan != case_formula_makespan(agg.pa1, agg.pa2, agg.pb1, agg.pb2):
        out.append(f"algorithm C makespan {s.makespan} differs from case formula for {agg}")
    return out


def suite_small_exhaustive(seed: int = 0) -> list[str]:
    out = []
    for n in range(1, 6):
        for g in all_graphs(n):
            out += check_graph(g)
            out += check_unit_ratios(g)
    rng = random.Random(seed)
    for _ in range(200):
        out += check_two_cliques(rng, rng.randint(1, 12), 20)
    return out


def suite_random(seed: int = 0, count: int = 300) -> list[str]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, 9)
        out += check_graph(random_graph(rng, n, rng.random()))
    return out


def suite_ratios(seed: int = 0, count: int = 300) -> list[str]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, 8)
        out += check_unit_ratios(random_graph(rng, n, rng.random()))
    for _ in range(count):
        out += check_two_cliques(rng, rng.randint(1, 40), 100)
    return out


SUITES: dict[str, Callable[[int], list[str]]] = {
    "small-exhaustive": suite_small_exhaustive,
    "random": suite_random,
    "ratios": suite_ratios,
}
