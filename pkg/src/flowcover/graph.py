"""Simple undirected graphs, the instance text format, and two-clique recognition.

Vertices are the integers ``0..n-1``.  The same :class:`Graph` type is used
for a conflict graph and for its complement, the agreement graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional


class ParseError(ValueError):
    """Raised for malformed instance text; carries the 1-based line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph with a sorted edge list and sorted adjacency."""

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen: set[tuple[int, int]] = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        return cls(n, tuple(sorted(seen)), tuple(tuple(sorted(a)) for a in adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        a = self.adjacency[u]
        # adjacency rows are short for the graphs we care about
        return v in a

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))


def complement(g: Graph) -> Graph:
    """Agreement graph of a conflict graph (and vice versa)."""
    present = set(g.edges)
    edges = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if (u, v) not in present]
    return Graph.from_edges(g.n, edges)


def graph_from_mask(n: int, mask: int) -> Graph:
    """Graph whose edge set is selected by the bits of ``mask``.

    Bit ``i`` refers to the ``i``-th pair in lexicographic order of
    ``(u, v)`` with ``u < v``.  Used to sweep all labeled graphs on ``n``
    vertices.
    """
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


@dataclass(frozen=True)
class CliquePartition:
    side_a: frozenset[int]
    side_b: frozenset[int]


def recognize_two_cliques(g: Graph) -> Optional[CliquePartition]:
    """Return the two cliques if ``g`` is ``K_l`` union ``K_{n-l}``, else None.

    Works on the conflict graph directly in O(n + m): label components, then
    check that each one has ``k(k-1)/2`` edges.
    """
    if g.n == 0:
        return CliquePartition(frozenset(), frozenset())
    comp = [-1] * g.n
    sizes: list[int] = []
    for s in range(g.n):
        if comp[s] >= 0:
            continue
        if len(sizes) == 2:
            return None
        cid = len(sizes)
        comp[s] = cid
        size = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            size += 1
            for w in g.adjacency[u]:
                if comp[w] < 0:
                    comp[w] = cid
                    queue.append(w)
        sizes.append(size)
    for v in range(g.n):
        if g.degree(v) != sizes[comp[v]] - 1:
            return None
    side_a = frozenset(v for v in range(g.n) if comp[v] == 0)
    side_b = frozenset(v for v in range(g.n) if comp[v] == 1)
    return CliquePartition(side_a, side_b)


def is_two_clique_partition(g: Graph, part: CliquePartition) -> bool:
    """Check that ``part`` certifies ``g`` as a disjoint union of two cliques."""
    a, b = part.side_a, part.side_b
    if a & b or len(a) + len(b) != g.n or any(not 0 <= v < g.n for v in a | b):
        return False
    for u, v in g.edges:
        if (u in a) != (v in a):
            return False
    na, nb = len(a), len(b)
    return g.m == na * (na - 1) // 2 + nb * (nb - 1) // 2


# -- instance text ---------------------------------------------------------


def parse_instance(text: str) -> tuple[Graph, Optional[list[tuple[int, int]]]]:
    """Parse instance text into the conflict graph and optional job times.

    Returns ``(graph, times)`` where ``times`` is None when no ``j`` lines
    are present (unit jobs).
    """
    n = m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    times: dict[int, tuple[int, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0].startswith("c"):
            continue
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise ParseError(lineno, "duplicate header")
            if len(parts) != 4 or parts[1] != "fsc":
                raise ParseError(lineno, "expected header 'p fsc <n> <m>'")
            n, m = _ints(lineno, parts[2:])
            if n < 0 or m < 0:
                raise ParseError(lineno, "negative count in header")
            continue
        if n is None:
            raise ParseError(lineno, "data line before header")
        if tag == "e":
            if len(parts) != 3:
                raise ParseError(lineno, "expected 'e <u> <v>'")
            u, v = _ints(lineno, parts[1:])
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(lineno, f"vertex index out of range in edge ({u}, {v})")
            if u == v:
                raise ParseError(lineno, f"self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ParseError(lineno, f"duplicate edge {key}")
            seen.add(key)
            edges.append(key)
        elif tag == "j":
            if len(parts) != 4:
                raise ParseError(lineno, "expected 'j <idx> <p1> <p2>'")
            idx, p1, p2 = _ints(lineno, parts[1:])
            if not 0 <= idx < n:
                raise ParseError(lineno, f"job index {idx} out of range")
            if p1 < 0 or p2 < 0:
                raise ParseError(lineno, "processing times must be nonnegative")
            if idx in times:
                raise ParseError(lineno, f"duplicate job line for {idx}")
            times[idx] = (p1, p2)
        else:
            raise ParseError(lineno, f"unknown line type {tag!r}")
    if n is None:
        raise ParseError(max(1, len(text.splitlines())), "missing header")
    if len(edges) != m:
        raise ParseError(len(text.splitlines()), f"header announces {m} edges, found {len(edges)}")
    if times and len(times) != n:
        raise ParseError(len(text.splitlines()), f"expected {n} job lines, found {len(times)}")
    graph = Graph.from_edges(n, edges)
    return graph, ([times[j] for j in range(n)] if times else None)


def parse_graph(text: str) -> Graph:
    return parse_instance(text)[0]


def format_instance(g: Graph, times: Optional[list[tuple[int, int]]] = None,
                    comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        lines.extend(f"c {c}" for c in comment.splitlines())
    lines.append(f"p fsc {g.n} {g.m}")
    if times is not None:
        lines.extend(f"j {j} {p1} {p2}" for j, (p1, p2) in enumerate(times))
    lines.extend(f"e {u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def _ints(lineno: int, tokens: list[str]) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(lineno, f"expected integers, got {' '.join(tokens)!r}") from None
