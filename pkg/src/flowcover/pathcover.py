"""Path covers minimizing 0-paths, or 0-paths plus 1-paths.

Both algorithms start from a maximum 2-matching and repeatedly swap edges
along an alternating path that "saves" a deficient object (a singleton, or
for the second objective also a 1-path).  Swaps keep the cardinality, so
every intermediate state is again a maximum 2-matching.  When no saving path
exists, one edge is dropped from every cycle.

The search for a saving path is a single BFS from all deficient objects at
once.  Every hop leaves an object through a non-matching edge, enters a
component at vertex ``x``, and either stops there (``x`` can give up an
edge without creating a new deficient piece) or cuts the component at ``x``
and continues from the piece that was cut off.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .graph import Graph
from .matching import (
    Edge,
    MatchingDecomposition,
    TwoMatching,
    _norm,
    canonical_path,
    decompose,
    maximum_two_matching,
    trace_components,
)


class InvalidSwap(RuntimeError):
    """An alternating path does not fit the 2-matching it is applied to."""


class ObjectKind(Enum):
    SINGLETON = "singleton"
    ONE_PATH = "one_path"


@dataclass(frozen=True)
class SaveObject:
    kind: ObjectKind
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class AlternatingPath:
    """Alternating path ``v0 - v1 - ... - v_{2i+2}``.

    ``vertices`` lists the representatives; the added edge into ``v_{2j+1}``
    may leave from the other vertex of a two-vertex object, which is why the
    edge lists are stored explicitly.
    """

    root: SaveObject
    vertices: tuple[int, ...]
    add_edges: tuple[Edge, ...]
    remove_edges: tuple[Edge, ...]


@dataclass(frozen=True)
class PathCover:
    paths: tuple[tuple[int, ...], ...]

    @property
    def num_paths(self) -> int:
        return len(self.paths)

    @property
    def num_0_paths(self) -> int:
        return sum(1 for p in self.paths if len(p) == 1)

    @property
    def num_1_paths(self) -> int:
        return sum(1 for p in self.paths if len(p) == 2)

    @property
    def counts(self) -> tuple[int, int, int]:
        return self.num_paths, self.num_0_paths, self.num_1_paths

    def is_valid_for(self, host: Graph) -> bool:
        seen = [False] * host.n
        for p in self.paths:
            for v in p:
                if not 0 <= v < host.n or seen[v]:
                    return False
                seen[v] = True
            if any(not host.has_edge(a, b) for a, b in zip(p, p[1:])):
                return False
        return all(seen)


# -- component bookkeeping ------------------------------------------------


class _Layout:
    """Per-vertex view of a decomposition: component, position, shape."""

    def __init__(self, n: int, d: MatchingDecomposition):
        self.comp = [0] * n
        self.pos = [0] * n
        self.seqs: list[tuple[int, ...]] = []
        self.cyclic: list[bool] = []
        for seq, is_cycle in d.components():
            cid = len(self.seqs)
            self.seqs.append(seq)
            self.cyclic.append(is_cycle)
            for i, v in enumerate(seq):
                self.comp[v] = cid
                self.pos[v] = i

    def path_length(self, v: int) -> int:
        """Edge count of v's component if it is a path, else -1."""
        c = self.comp[v]
        return -1 if self.cyclic[c] else len(self.seqs[c]) - 1

    def is_internal(self, v: int) -> bool:
        c = self.comp[v]
        return self.cyclic[c] or 0 < self.pos[v] < len(self.seqs[c]) - 1

    def is_middle(self, v: int) -> bool:
        seq = self.seqs[self.comp[v]]
        return len(seq) % 2 == 1 and self.pos[v] == len(seq) // 2

    def neighbors_on(self, v: int) -> list[int]:
        c = self.comp[v]
        seq, i = self.seqs[c], self.pos[v]
        if self.cyclic[c]:
            return sorted({seq[i - 1], seq[(i + 1) % len(seq)]})
        return sorted(seq[j] for j in (i - 1, i + 1) if 0 <= j < len(seq))

    def cut(self, x: int, y: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Pieces of x's path after deleting (x, y): (piece with x, piece with y)."""
        seq, i = self.seqs[self.comp[x]], self.pos[x]
        if self.pos[y] > i:
            return seq[: i + 1], seq[i + 1:]
        return seq[i:], seq[:i]


def _deficiency(d: MatchingDecomposition, with_one_paths: bool) -> int:
    return len(d.p0) + (len(d.p1) if with_one_paths else 0)


# -- saving-path search -----------------------------------------------------


def find_saving_path_A(host: Graph, m: TwoMatching) -> Optional[AlternatingPath]:
    """Alternating path saving some singleton, or None.

    Interior hops enter 2-paths at the middle vertex and leave from an
    endpoint; the search stops at the first vertex on a cycle or on a path
    with at least 3 edges.
    """
    d = decompose(m)
    if not d.p0:
        return None
    lay = _Layout(host.n, d)
    return _search(host, lay, [(v,) for v in d.p0], mode="A")


def find_saving_path_B(host: Graph, m: TwoMatching) -> Optional[AlternatingPath]:
    """Alternating path saving some singleton or 1-path, or None.

    Interior hops enter a 2-, 3- or 4-path at a vertex separating its two
    end-objects (the middle, for a 4-path) and continue from either end-object.
    Terminal vertices lie on a cycle, on a path with at least 5 edges, or on
    a 4-path away from its middle.
    """
    d = decompose(m)
    if not d.p0 and not d.p1:
        return None
    lay = _Layout(host.n, d)
    roots = sorted([(v,) for v in d.p0] + [tuple(e) for e in d.p1])
    return _search(host, lay, roots, mode="B")


def _search(host: Graph, lay: _Layout, roots: Sequence[tuple[int, ...]],
            mode: str) -> Optional[AlternatingPath]:
    # Out-states are (vertex, entry): ``vertex`` belongs to an object that
    # was cut off at ``entry`` (entry -1 for a root object).  For each state
    # we keep the object's vertices and its representative.
    obj_of: dict[tuple[int, int], tuple[int, ...]] = {}
    rep_of: dict[tuple[int, int], int] = {}
    entry_from: dict[int, tuple[int, int]] = {}  # entry x -> out-state hopping into it
    queue: deque[tuple[int, int]] = deque()

    def push(state: tuple[int, int], obj: tuple[int, ...], rep: int) -> None:
        if state not in obj_of:
            obj_of[state] = obj
            rep_of[state] = rep
            queue.append(state)

    for obj in roots:
        for v in sorted(obj):
            push((v, -1), obj, v)

    def comps_on_path(state: tuple[int, int]) -> set[int]:
        seen = set()
        while state[1] != -1:
            x = state[1]
            seen.add(lay.comp[x])
            state = entry_from[x]
        return seen

    while queue:
        state = queue.popleft()
        w, _ = state
        obj = obj_of[state]
        for x in host.adjacency[w]:
            if lay.comp[x] == lay.comp[w]:
                continue
            y = _terminal_choice(lay, x, len(obj), mode)
            if y is not None:
                if lay.path_length(x) == 4 and lay.comp[x] in comps_on_path(state):
                    continue
                return _build(lay, state, x, y, roots, entry_from, rep_of, obj_of)
            if x in entry_from or not _is_entry(lay, x, mode):
                continue
            if lay.path_length(x) >= 3 and lay.comp[x] in comps_on_path(state):
                continue
            entry_from[x] = state
            for y in lay.neighbors_on(x):
                _, piece = lay.cut(x, y)
                for u in sorted(piece):
                    push((u, x), piece, y)
    return None


def _is_entry(lay: _Layout, x: int, mode: str) -> bool:
    k = lay.path_length(x)
    if mode == "A":
        return k == 2 and lay.is_middle(x)
    if k in (2, 3):
        return lay.is_internal(x)
    return k == 4 and lay.is_middle(x)


def _terminal_choice(lay: _Layout, x: int, obj_size: int, mode: str) -> Optional[int]:
    """Vertex y such that swapping out (x, y) is a valid last step, else None."""
    k = lay.path_length(x)
    if k == -1:
        return lay.neighbors_on(x)[0]
    if mode == "A":
        if k < 3:
            return None
        min_piece = 2
    else:
        if k < 4 or (k == 4 and lay.is_middle(x)):
            return None
        min_piece = 3
    for y in lay.neighbors_on(x):
        near, far = lay.cut(x, y)
        if len(far) >= min_piece and len(near) + obj_size >= min_piece:
            return y
    return None


def _build(lay: _Layout, state: tuple[int, int], x: int, y: int,
           roots: Sequence[tuple[int, ...]], entry_from, rep_of, obj_of) -> AlternatingPath:
    verts = [y, x]
    adds = [_norm(state[0], x)]
    removes = [_norm(x, y)]
    while True:
        verts.append(rep_of[state])
        entry = state[1]
        if entry == -1:
            break
        removes.append(_norm(entry, rep_of[state]))
        verts.append(entry)
        state = entry_from[entry]
        adds.append(_norm(state[0], entry))
    root_obj = obj_of[state]
    kind = ObjectKind.SINGLETON if len(root_obj) == 1 else ObjectKind.ONE_PATH
    return AlternatingPath(
        root=SaveObject(kind, tuple(sorted(root_obj))),
        vertices=tuple(reversed(verts)),
        add_edges=tuple(reversed(adds)),
        remove_edges=tuple(reversed(removes)),
    )


def apply_swap(m: TwoMatching, ap: AlternatingPath) -> TwoMatching:
    """Exchange the removed and added edges of ``ap``; raises InvalidSwap."""
    if len(ap.add_edges) != len(ap.remove_edges):
        raise InvalidSwap("add/remove edge counts differ")
    rem = {_norm(*e) for e in ap.remove_edges}
    add = {_norm(*e) for e in ap.add_edges}
    if len(rem) != len(ap.remove_edges) or len(add) != len(ap.add_edges):
        raise InvalidSwap("repeated edge on alternating path")
    if not rem <= m.edges:
        raise InvalidSwap(f"edges {sorted(rem - m.edges)} are not in the matching")
    if add & m.edges:
        raise InvalidSwap(f"edges {sorted(add & m.edges)} are already in the matching")
    if any(not m.host.has_edge(u, v) for u, v in add):
        raise InvalidSwap("added edge is not a host edge")
    try:
        return TwoMatching(m.host, (m.edges - rem) | add)
    except ValueError as exc:
        raise InvalidSwap(str(exc)) from None


# -- drivers ------------------------------------------------------------------


def _augment(host: Graph, m: TwoMatching, mode: str) -> TwoMatching:
    """Apply saving swaps until none exists; each must cut the deficiency by one."""
    find = find_saving_path_A if mode == "A" else find_saving_path_B
    with_one = mode == "B"
    size = len(m)
    before = decompose(m)
    for _ in range(host.n + 1):
        ap = find(host, m)
        if ap is None:
            return m
        m = apply_swap(m, ap)
        after = decompose(m)
        if len(m) != size or _deficiency(after, with_one) != _deficiency(before, with_one) - 1:
            raise InvalidSwap(f"swap along {ap.vertices} did not save exactly one object")
        if mode == "A" and len(after.p0) + len(after.p1) > len(before.p0) + len(before.p1):
            raise InvalidSwap(f"swap along {ap.vertices} created more than one 1-path")
        before = after
    raise InvalidSwap("augmentation did not terminate within n rounds")


def break_cycles(m: TwoMatching) -> PathCover:
    """Drop from each cycle the edge between its smallest vertex and that
    vertex's smaller cycle neighbor."""
    paths = []
    for seq, is_cycle in trace_components(m.host.n, m.neighbors()):
        # canonical cycle (c0, c1, ..., ck): deleting (c0, c1) leaves c1 ... ck c0
        paths.append(canonical_path(seq[1:] + seq[:1]) if is_cycle else seq)
    return PathCover(tuple(sorted(paths)))


def algorithm_A(host: Graph) -> PathCover:
    """Path cover of ``host`` with the fewest 0-paths."""
    return break_cycles(_augment(host, maximum_two_matching(host), "A"))


def algorithm_B(host: Graph) -> PathCover:
    """Path cover of ``host`` with the fewest 0-paths plus 1-paths."""
    return break_cycles(_augment(host, maximum_two_matching(host), "B"))


def saturate_B(host: Graph) -> TwoMatching:
    """Maximum 2-matching at which no 0/1-path can be saved any more."""
    return _augment(host, maximum_two_matching(host), "B")


def refine_to_min_singletons(host: Graph, m: Optional[TwoMatching] = None) -> PathCover:
    """Trade singletons for 1-paths starting from a saturated B matching.

    The result keeps the minimum number of 0- and 1-paths and, among those
    covers, has the fewest 0-paths.
    """
    if m is None:
        m = saturate_B(host)
    d0 = decompose(m)
    total = len(d0.p0) + len(d0.p1)
    m = _augment(host, m, "A")
    d1 = decompose(m)
    if len(d1.p0) + len(d1.p1) > total:
        raise InvalidSwap("refinement increased the number of 0/1-paths")
    return break_cycles(m)


def path_cover(host: Graph, mode: str = "B") -> PathCover:
    """Dispatch on ``mode``: ``"A"``, ``"B"`` or ``"B-refined"``."""
    mode = mode.replace("_", "-")
    if mode == "A":
        return algorithm_A(host)
    if mode == "B":
        return algorithm_B(host)
    if mode == "B-refined":
        return refine_to_min_singletons(host)
    raise ValueError(f"unknown mode {mode!r}; expected A, B or B-refined")
