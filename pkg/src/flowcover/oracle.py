"""Exhaustive reference solvers for small instances.

Nothing here is used on the solving path.  Every routine hard-fails above
its size guard instead of truncating the search.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .graph import CliquePartition, Graph, complement

MAX_TWO_MATCHING_EDGES = 25
MAX_COVER_VERTICES = 10
MAX_PERMUTATION_JOBS = 8


class OracleTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class CoverStats:
    min_num_paths: int
    min_num_0_paths: int
    min_num_01_paths: int
    # fewest 0-paths among covers with min_num_01_paths 0/1-paths
    joint_min_0_paths: int


def brute_max_two_matching(g: Graph) -> int:
    """Largest edge subset with all degrees <= 2, by enumerating feasible subsets."""
    if g.m > MAX_TWO_MATCHING_EDGES:
        raise OracleTooLarge(f"{g.m} edges exceeds the guard of {MAX_TWO_MATCHING_EDGES}")
    edges = g.edges
    deg = [0] * g.n
    best = 0

    def rec(i: int, size: int) -> None:
        nonlocal best
        if i == len(edges):
            best = max(best, size)
            return
        u, v = edges[i]
        if deg[u] < 2 and deg[v] < 2:
            deg[u] += 1
            deg[v] += 1
            rec(i + 1, size + 1)
            deg[u] -= 1
            deg[v] -= 1
        rec(i + 1, size)

    rec(0, 0)
    return best


def bnb_max_two_matching(g: Graph) -> int:
    """Second, independent oracle: vertex-branching with a capacity bound.

    Branches on how the lowest vertex with spare capacity uses its remaining
    incident edges; prunes with ``sum(min(cap, free degree)) / 2``.
    """
    cap = [2] * g.n
    alive = [set(a) for a in g.adjacency]
    best = 0

    def bound() -> int:
        return sum(min(cap[v], len(alive[v])) for v in range(g.n)) // 2

    def rec(size: int) -> None:
        nonlocal best
        best = max(best, size)
        if size + bound() <= best:
            return
        v = next((u for u in range(g.n) if cap[u] > 0 and alive[u]), None)
        if v is None:
            return
        nbrs = sorted(alive[v])
        for u in nbrs:
            alive[u].discard(v)
        alive[v] = set()
        saved_cap = cap[v]
        for k in range(min(saved_cap, len(nbrs)), -1, -1):
            for chosen in itertools.combinations(nbrs, k):
                if any(cap[u] == 0 for u in chosen):
                    continue
                for u in chosen:
                    cap[u] -= 1
                cap[v] = 0
                rec(size + k)
                for u in chosen:
                    cap[u] += 1
        cap[v] = saved_cap
        alive[v] = set(nbrs)
        for u in nbrs:
            alive[u].add(v)

    rec(0)
    return best


def _pathable_subsets(g: Graph) -> list[bool]:
    """pathable[S]: the subgraph induced by bitmask S has a Hamiltonian path."""
    n = g.n
    nbr_mask = [sum(1 << u for u in g.adjacency[v]) for v in range(n)]
    ends = [0] * (1 << n)
    for v in range(n):
        ends[1 << v] = 1 << v
    for s in range(1, 1 << n):
        e = ends[s]
        if not e:
            continue
        for v in range(n):
            if e >> v & 1:
                ext = nbr_mask[v] & ~s
                while ext:
                    low = ext & -ext
                    ends[s | low] |= low
                    ext ^= low
    return [bool(e) for e in ends]


def brute_cover_stats(g: Graph) -> CoverStats:
    """All four path-cover minima by DP over vertex subsets (3^n)."""
    n = g.n
    if n > MAX_COVER_VERTICES:
        raise OracleTooLarge(f"{n} vertices exceeds the guard of {MAX_COVER_VERTICES}")
    if n == 0:
        return CoverStats(0, 0, 0, 0)
    pathable = _pathable_subsets(g)
    size = [bin(s).count("1") for s in range(1 << n)]
    full = (1 << n) - 1
    inf = (n + 1, n + 1)
    paths = [0] * (1 << n)
    zero = [0] * (1 << n)
    zo = [0] * (1 << n)
    joint = [(0, 0)] * (1 << n)
    for s in range(1, full + 1):
        low = s & -s
        rest = s ^ low
        bp = b0 = b01 = n + 1
        bj = inf
        # subsets t of s containing the lowest vertex
        sub = rest
        while True:
            t = sub | low
            if pathable[t]:
                r = s ^ t
                k = size[t]
                c0 = 1 if k == 1 else 0
                c01 = 1 if k <= 2 else 0
                bp = min(bp, 1 + paths[r])
                b0 = min(b0, c0 + zero[r])
                b01 = min(b01, c01 + zo[r])
                jr = joint[r]
                cand = (c01 + jr[0], c0 + jr[1])
                if cand < bj:
                    bj = cand
            if sub == 0:
                break
            sub = (sub - 1) & rest
        paths[s], zero[s], zo[s], joint[s] = bp, b0, b01, bj
    return CoverStats(paths[full], zero[full], zo[full], joint[full][1])


def brute_unit_optimum(conflicts: Graph) -> int:
    """Optimal makespan for unit jobs: n plus a minimum agreement path cover."""
    if conflicts.n > MAX_COVER_VERTICES:
        raise OracleTooLarge(f"{conflicts.n} jobs exceeds the guard of {MAX_COVER_VERTICES}")
    return conflicts.n + brute_cover_stats(complement(conflicts)).min_num_paths


def _earliest(lo: int, length: int, busy: Sequence[tuple[int, int]]) -> int:
    """Earliest t >= lo with [t, t+length) disjoint from every busy interval."""
    if length == 0:
        return lo
    t = lo
    moved = True
    while moved:
        moved = False
        for a, b in busy:
            if a < t + length and t < b:
                t = b
                moved = True
    return t


def permutation_makespan(order: Sequence[int], times: Sequence[tuple[int, int]],
                         conflicts: Graph) -> int:
    """Makespan of the earliest-start permutation schedule for ``order``."""
    m1_free = m2_free = 0
    on_m1: dict[int, tuple[int, int]] = {}
    on_m2: dict[int, tuple[int, int]] = {}
    makespan = 0
    for j in order:
        p1, p2 = times[j]
        blockers2 = [on_m2[i] for i in conflicts.adjacency[j] if i in on_m2]
        s1 = _earliest(m1_free, p1, blockers2)
        blockers1 = [on_m1[i] for i in conflicts.adjacency[j] if i in on_m1]
        s2 = _earliest(max(m2_free, s1 + p1), p2, blockers1)
        on_m1[j] = (s1, s1 + p1)
        on_m2[j] = (s2, s2 + p2)
        m1_free = max(m1_free, s1 + p1)
        m2_free = max(m2_free, s2 + p2)
        makespan = max(makespan, s2 + p2)
    return makespan


def brute_two_clique_bound(times: Sequence[tuple[int, int]], conflicts: Graph,
                           partition: CliquePartition | None = None) -> int:
    """Best permutation-schedule makespan over all job orders.

    Only an upper reference for the true optimum: schedules that use
    different orders on the two machines are not searched.
    """
    n = len(times)
    if n > MAX_PERMUTATION_JOBS:
        raise OracleTooLarge(f"{n} jobs exceeds the guard of {MAX_PERMUTATION_JOBS}")
    if n == 0:
        return 0
    return min(permutation_makespan(order, times, conflicts)
               for order in itertools.permutations(range(n)))


def case_formula_makespan(pa1: int, pa2: int, pb1: int, pb2: int) -> int:
    """Aggregated two-job makespan by the case split of the 3/2 analysis.

    Sides are relabeled so that A has the smaller M1 sum; the case
    ``pa1 > pa2 <= pb2`` runs B first and the other cases run A first.
    """
    if pa1 > pb1:
        pa1, pa2, pb1, pb2 = pb1, pb2, pa1, pa2
    if pa1 > pa2 and pa2 <= pb2:
        return pb1 + max(pb2, pa1) + pa2
    return pa1 + max(pa2, pb1) + pb2
