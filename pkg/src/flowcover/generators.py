"""Seeded instance families."""

from __future__ import annotations

import random
from typing import Optional

from .graph import Graph, complement, format_instance, parse_instance
from .scheduling import Instance

Times = Optional[list[tuple[int, int]]]


def random_gnp(n: int, p: float, seed: int = 0) -> Instance:
    """Unit jobs with an Erdos-Renyi conflict graph."""
    if n < 1 or not 0.0 <= p <= 1.0:
        raise ValueError("random_gnp needs n >= 1 and 0 <= p <= 1")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Instance.unit(Graph.from_edges(n, edges))


def chained_triangles_agreement(k: int) -> Graph:
    """``k`` triangles ``{3i, 3i+1, 3i+2}`` chained by the bridges ``(3i+2, 3i+3)``.

    Maximum degree 3; ``0, 1, ..., 3k-1`` is a Hamiltonian path.
    """
    if k < 1:
        raise ValueError("chained_triangles needs k >= 1")
    edges = []
    for i in range(k):
        a = 3 * i
        edges += [(a, a + 1), (a, a + 2), (a + 1, a + 2)]
        if i + 1 < k:
            edges.append((a + 2, a + 3))
    return Graph.from_edges(3 * k, edges)


def chained_triangles(k: int) -> Instance:
    """Unit instance whose agreement graph is the triangle chain."""
    return Instance.unit(complement(chained_triangles_agreement(k)))


def two_cliques(l: int, n: int, p_max: int, seed: int = 0) -> Instance:
    """Conflicts ``K_l`` on jobs ``0..l-1`` plus ``K_{n-l}`` on the rest."""
    if n < 1 or not 0 <= l <= n or p_max < 1:
        raise ValueError("two_cliques needs n >= 1, 0 <= l <= n and p_max >= 1")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(l) for v in range(u + 1, l)]
    edges += [(u, v) for u in range(l, n) for v in range(u + 1, n)]
    jobs = tuple((rng.randint(1, p_max), rng.randint(1, p_max)) for _ in range(n))
    return Instance(jobs, Graph.from_edges(n, edges))


def unit_from_graph(text: str) -> Instance:
    """Unit instance from instance text or a plain ``u v`` edge list (0-based)."""
    body = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith(("c", "#"))]
    if body and body[0].split()[0] == "p":
        g, _ = parse_instance(text)
        return Instance.unit(g)
    pairs = [tuple(int(t) for t in ln.split()[:2]) for ln in body]
    n = max((max(p) for p in pairs), default=-1) + 1
    return Instance.unit(Graph.from_edges(n, pairs))


def instance_text(instance: Instance, comment: Optional[str] = None) -> str:
    times = None if instance.is_unit else list(instance.jobs)
    return format_instance(instance.conflicts, times, comment)


def load_instance(text: str) -> Instance:
    g, times = parse_instance(text)
    return Instance.unit(g) if times is None else Instance(tuple(times), g)
