"""Maximum matchings, maximum 2-matchings, and 2-matching decomposition.

The 2-matching is obtained from an ordinary maximum matching on a gadget
graph: every host vertex gets two copies (its degree capacity) and every
host edge ``(u, v)`` becomes a path ``copies(u) - e_u - e_v - copies(v)``.
A gadget contributes one matched edge when the host edge is unused and two
when it is used, so a maximum gadget matching of size ``k`` projects to a
maximum 2-matching with ``k - m`` edges.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .graph import Graph

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


# -- maximum matching (Edmonds' blossom contraction) -----------------------


def maximum_matching(g: Graph, initial: Optional[Iterable[Edge]] = None) -> set[Edge]:
    """Maximum-cardinality matching of a general graph.

    Each free vertex is grown into an alternating tree once, in index order,
    with odd cycles contracted on the fly.  A vertex that has no augmenting
    path never gets one later, so a single pass is enough.  ``initial``
    seeds the search with a valid matching (a greedy one is used otherwise).
    """
    n = g.n
    adj = g.adjacency
    mate = [-1] * n
    if initial is not None:
        for u, v in initial:
            if mate[u] != -1 or mate[v] != -1:
                raise ValueError("initial edges do not form a matching")
            mate[u], mate[v] = v, u
    else:
        for u in range(n):
            if mate[u] == -1:
                for v in adj[u]:
                    if mate[v] == -1:
                        mate[u], mate[v] = v, u
                        break

    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    in_blossom = [False] * n

    def lca(a: int, b: int) -> int:
        seen = set()
        while True:
            a = base[a]
            seen.add(a)
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if b in seen:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int, marked: list[int]) -> None:
        while base[v] != b:
            for x in (base[v], base[mate[v]]):
                if not in_blossom[x]:
                    in_blossom[x] = True
                    marked.append(x)
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    def grow(root: int) -> int:
        # vertices currently contracted into each blossom base
        members: dict[int, list[int]] = {}
        touched = [root]
        used[root] = True
        queue = deque([root])
        found = -1
        while queue and found == -1:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    cur = lca(v, to)
                    marked: list[int] = []
                    mark_path(v, cur, to, marked)
                    mark_path(to, cur, v, marked)
                    into = members.setdefault(cur, [cur])
                    for b in marked:
                        in_blossom[b] = False
                        if b == cur:
                            continue
                        for i in members.pop(b, [b]):
                            base[i] = cur
                            into.append(i)
                            if not used[i]:
                                used[i] = True
                                touched.append(i)
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    touched.append(to)
                    if mate[to] == -1:
                        found = to
                        break
                    nxt = mate[to]
                    if not used[nxt]:
                        used[nxt] = True
                        touched.append(nxt)
                        queue.append(nxt)
        if found != -1:
            v = found
            while v != -1:
                pv = parent[v]
                ppv = mate[pv]
                mate[v], mate[pv] = pv, v
                v = ppv
        for i in touched:
            parent[i] = -1
            base[i] = i
            used[i] = False
        return found

    for root in range(n):
        if mate[root] == -1 and adj[root]:
            grow(root)

    return {(u, mate[u]) for u in range(n) if mate[u] > u}


def is_matching(g: Graph, edges: Iterable[Edge]) -> bool:
    seen: set[int] = set()
    for u, v in edges:
        if not g.has_edge(u, v) or u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


# -- 2-matchings -----------------------------------------------------------


@dataclass(frozen=True)
class TwoMatching:
    """A subset of host edges in which every vertex has degree at most 2."""

    host: Graph
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        deg = [0] * self.host.n
        for u, v in self.edges:
            if u > v or not self.host.has_edge(u, v):
                raise ValueError(f"({u}, {v}) is not a normalized host edge")
            deg[u] += 1
            deg[v] += 1
            if deg[u] > 2 or deg[v] > 2:
                raise ValueError(f"degree cap exceeded at edge ({u}, {v})")

    @classmethod
    def of(cls, host: Graph, edges: Iterable[Edge]) -> "TwoMatching":
        return cls(host, frozenset(_norm(u, v) for u, v in edges))

    def __len__(self) -> int:
        return len(self.edges)

    def neighbors(self) -> list[list[int]]:
        nbrs: list[list[int]] = [[] for _ in range(self.host.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return nbrs


def _greedy_two_matching(g: Graph) -> list[Edge]:
    """Greedy seed: grow a linear forest first, close cycles only afterwards.

    Any maximal seed is correct; avoiding early cycle closures keeps the
    number of components (and so of cover paths) down in dense hosts.
    """
    deg = [0] * g.n
    root = list(range(g.n))

    def find(v: int) -> int:
        while root[v] != v:
            root[v] = root[root[v]]
            v = root[v]
        return v

    chosen: set[Edge] = set()
    for closing in (False, True):
        for u, v in g.edges:
            if deg[u] == 2 or deg[v] == 2 or (u, v) in chosen:
                continue
            ru, rv = find(u), find(v)
            if ru == rv and not closing:
                continue
            deg[u] += 1
            deg[v] += 1
            chosen.add((u, v))
            root[ru] = rv
    return sorted(chosen)


def maximum_two_matching(g: Graph) -> TwoMatching:
    """Maximum 2-matching of ``g`` through the degree-capacity gadget."""
    n, m = g.n, g.m
    if m == 0:
        return TwoMatching(g, frozenset())
    # copies of v: 2v, 2v+1; gadget of edge i = (u, v): e_u = 2n+2i, e_v = 2n+2i+1
    gadget_edges = []
    for i, (u, v) in enumerate(g.edges):
        eu, ev = 2 * n + 2 * i, 2 * n + 2 * i + 1
        gadget_edges += [(2 * u, eu), (2 * u + 1, eu), (2 * v, ev), (2 * v + 1, ev), (eu, ev)]
    gadget = Graph.from_edges(2 * n + 2 * m, gadget_edges)

    used = set(_greedy_two_matching(g))
    next_copy = [0] * n
    seed = []
    for i, (u, v) in enumerate(g.edges):
        eu, ev = 2 * n + 2 * i, 2 * n + 2 * i + 1
        if (u, v) in used:
            seed.append((2 * u + next_copy[u], eu))
            seed.append((2 * v + next_copy[v], ev))
            next_copy[u] += 1
            next_copy[v] += 1
        else:
            seed.append((eu, ev))

    mate = {}
    for a, b in maximum_matching(gadget, initial=seed):
        mate[a] = b
        mate[b] = a
    chosen = []
    for i, (u, v) in enumerate(g.edges):
        eu, ev = 2 * n + 2 * i, 2 * n + 2 * i + 1
        if mate.get(eu, 2 * n) < 2 * n and mate.get(ev, 2 * n) < 2 * n:
            chosen.append((u, v))
    return TwoMatching(g, frozenset(chosen))


# -- decomposition ---------------------------------------------------------


@dataclass(frozen=True)
class MatchingDecomposition:
    """Components of a 2-matching, bucketed by shape.

    Paths are vertex sequences with the smaller endpoint first; cycles start
    at their smallest vertex and continue toward its smaller neighbor.
    """

    p0: tuple[int, ...]
    p1: tuple[Edge, ...]
    p2: tuple[tuple[int, ...], ...]
    p3: tuple[tuple[int, ...], ...]
    p4: tuple[tuple[int, ...], ...]
    p_ge5: tuple[tuple[int, ...], ...]
    cycles: tuple[tuple[int, ...], ...]

    @property
    def p_ge3(self) -> tuple[tuple[int, ...], ...]:
        return self.p3 + self.p4 + self.p_ge5

    @property
    def p234(self) -> tuple[tuple[int, ...], ...]:
        return self.p2 + self.p3 + self.p4

    def paths(self) -> list[tuple[int, ...]]:
        """All path components as vertex sequences (singletons included)."""
        out = [(v,) for v in self.p0] + [tuple(e) for e in self.p1]
        return out + list(self.p2 + self.p3 + self.p4 + self.p_ge5)

    def components(self) -> list[tuple[tuple[int, ...], bool]]:
        """``(sequence, is_cycle)`` for every component."""
        return [(p, False) for p in self.paths()] + [(c, True) for c in self.cycles]


def canonical_path(seq: Sequence[int]) -> tuple[int, ...]:
    seq = tuple(seq)
    return seq if seq[0] <= seq[-1] else seq[::-1]


def canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    k = len(seq)
    i = min(range(k), key=seq.__getitem__)
    fwd = tuple(seq[(i + j) % k] for j in range(k))
    if fwd[1] > fwd[-1]:
        fwd = (fwd[0],) + fwd[:0:-1]
    return fwd


def trace_components(n: int, nbrs: Sequence[Sequence[int]]) -> list[tuple[tuple[int, ...], bool]]:
    """Walk a max-degree-2 adjacency into canonical paths and cycles."""
    seen = [False] * n
    comps: list[tuple[tuple[int, ...], bool]] = []
    # paths first, starting from endpoints and singletons
    for s in range(n):
        if seen[s] or len(nbrs[s]) == 2:
            continue
        seq = [s]
        seen[s] = True
        prev, cur = -1, s
        while True:
            nxt = [w for w in nbrs[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            seen[cur] = True
            seq.append(cur)
        comps.append((canonical_path(seq), False))
    for s in range(n):
        if seen[s]:
            continue
        seq = [s]
        seen[s] = True
        prev, cur = s, nbrs[s][0]
        while cur != s:
            seen[cur] = True
            seq.append(cur)
            a, b = nbrs[cur]
            prev, cur = cur, (b if a == prev else a)
        comps.append((canonical_cycle(seq), True))
    return comps


def decompose(m: TwoMatching) -> MatchingDecomposition:
    buckets: dict[str, list] = {k: [] for k in ("p0", "p1", "p2", "p3", "p4", "p_ge5", "cycles")}
    for seq, is_cycle in trace_components(m.host.n, m.neighbors()):
        if is_cycle:
            buckets["cycles"].append(seq)
            continue
        k = len(seq) - 1
        if k == 0:
            buckets["p0"].append(seq[0])
        elif k == 1:
            buckets["p1"].append(seq)
        elif k <= 4:
            buckets[f"p{k}"].append(seq)
        else:
            buckets["p_ge5"].append(seq)
    return MatchingDecomposition(**{k: tuple(sorted(v)) for k, v in buckets.items()})


def loose_ends_independent(m: TwoMatching) -> bool:
    """True when no two singletons/endpoints of ``m`` are adjacent in the host.

    Holds for every maximum 2-matching: such an edge could simply be added.
    """
    nbrs = m.neighbors()
    loose = [v for v in range(m.host.n) if len(nbrs[v]) < 2]
    loose_set = set(loose)
    for u in loose:
        for w in m.host.adjacency[u]:
            if w in loose_set and w not in nbrs[u]:
                return False
    return True
