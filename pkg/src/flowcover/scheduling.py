"""Two-machine flow-shop schedules under a conflict graph.

Unit jobs are scheduled from a path cover of the agreement graph: each path
runs back to back on M1 and one time unit later on M2, so consecutive jobs
of a path overlap only with agreeing neighbors.  For two-clique conflict
graphs each clique is merged into one aggregated job and the two aggregated
jobs are ordered by Johnson's rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import CliquePartition, Graph, complement, is_two_clique_partition
from .pathcover import PathCover, path_cover


class InstanceError(ValueError):
    pass


@dataclass(frozen=True)
class Instance:
    jobs: tuple[tuple[int, int], ...]
    conflicts: Graph

    def __post_init__(self) -> None:
        if len(self.jobs) != self.conflicts.n:
            raise InstanceError(f"{len(self.jobs)} jobs but conflict graph has {self.conflicts.n} vertices")
        if any(p1 < 0 or p2 < 0 for p1, p2 in self.jobs):
            raise InstanceError("processing times must be nonnegative")

    @classmethod
    def unit(cls, conflicts: Graph) -> "Instance":
        return cls(((1, 1),) * conflicts.n, conflicts)

    @property
    def n(self) -> int:
        return len(self.jobs)

    @property
    def is_unit(self) -> bool:
        return all(p == (1, 1) for p in self.jobs)


@dataclass(frozen=True)
class Schedule:
    start1: tuple[int, ...]
    start2: tuple[int, ...]
    makespan: int


@dataclass(frozen=True)
class AggregatedPair:
    pa1: int
    pa2: int
    pb1: int
    pb2: int

    @classmethod
    def of(cls, instance: Instance, partition: CliquePartition) -> "AggregatedPair":
        a, b = sorted(partition.side_a), sorted(partition.side_b)
        jobs = instance.jobs
        return cls(sum(jobs[j][0] for j in a), sum(jobs[j][1] for j in a),
                   sum(jobs[j][0] for j in b), sum(jobs[j][1] for j in b))


# -- unit jobs ----------------------------------------------------------------


def schedule_from_cover(cover: PathCover, n: int) -> Schedule:
    """Concatenate one sub-schedule per path; the makespan is ``n + len(paths)``."""
    seen = sorted(v for p in cover.paths for v in p)
    if seen != list(range(n)):
        raise InstanceError("cover does not partition the jobs 0..n-1")
    start1 = [0] * n
    start2 = [0] * n
    t = 0
    for path in cover.paths:
        for i, job in enumerate(path):
            start1[job] = t + i
            start2[job] = t + i + 1
        t += len(path) + 1
    return Schedule(tuple(start1), tuple(start2), t)


def makespan_identity_check(cover: PathCover, s: Schedule) -> bool:
    return s.makespan == len(s.start1) + cover.num_paths


def solve_unit_with_cover(instance: Instance, mode: str = "B") -> tuple[Schedule, PathCover]:
    if not instance.is_unit:
        raise InstanceError("solve_unit needs unit jobs; use algorithm_C for two-clique instances")
    cover = path_cover(complement(instance.conflicts), mode)
    return schedule_from_cover(cover, instance.n), cover


def solve_unit(instance: Instance, mode: str = "B") -> Schedule:
    """Schedule unit jobs from a path cover of the agreement graph.

    Mode ``"B"`` or ``"B-refined"`` stays within 4/3 of the optimum, mode
    ``"A"`` within 3/2.
    """
    return solve_unit_with_cover(instance, mode)[0]


def unit_lower_bound(instance: Instance, cover: PathCover) -> int:
    """``n + #(0- and 1-paths)`` of a B cover; no schedule can beat it."""
    return instance.n + cover.num_0_paths + cover.num_1_paths


# -- two cliques -------------------------------------------------------------


def _check_partition(instance: Instance, partition: CliquePartition) -> None:
    if not is_two_clique_partition(instance.conflicts, partition):
        raise InstanceError("partition does not match a two-clique conflict graph")


def lower_bound_two_cliques(instance: Instance, partition: CliquePartition) -> int:
    _check_partition(instance, partition)
    s = AggregatedPair.of(instance, partition)
    return max(s.pa1 + s.pa2, s.pa1 + s.pb1, s.pb1 + s.pb2, s.pa2 + s.pb2)


def johnson_a_first(s: AggregatedPair) -> bool:
    """Johnson's rule for two jobs; ties keep A first."""
    return min(s.pa1, s.pb2) <= min(s.pb1, s.pa2)


def algorithm_C(instance: Instance, partition: CliquePartition) -> Schedule:
    """Johnson-ordered aggregated cliques, expanded back into single jobs."""
    _check_partition(instance, partition)
    s = AggregatedPair.of(instance, partition)
    a, b = sorted(partition.side_a), sorted(partition.side_b)
    first, second = (a, b) if johnson_a_first(s) else (b, a)
    jobs = instance.jobs
    start1 = [0] * instance.n
    start2 = [0] * instance.n

    def run(block: list[int], m1_at: int, m2_not_before: int) -> tuple[int, int]:
        t = m1_at
        for j in block:
            start1[j] = t
            t += jobs[j][0]
        m1_end = t
        t = max(m1_end, m2_not_before)
        for j in block:
            start2[j] = t
            t += jobs[j][1]
        return m1_end, t

    m1_end, m2_end = run(first, 0, 0)
    _, makespan = run(second, m1_end, m2_end)
    return Schedule(tuple(start1), tuple(start2), makespan)


# -- validation ---------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    kind: str
    jobs: tuple[int, ...]
    detail: str

    def __str__(self) -> str:
        return f"{self.kind} {self.jobs}: {self.detail}"


def validate_schedule(instance: Instance, s: Schedule) -> Optional[Violation]:
    """First violated schedule constraint, or None when the schedule is feasible."""
    n = instance.n
    if len(s.start1) != n or len(s.start2) != n:
        return Violation("shape", (), f"expected {n} start times per machine")
    jobs = instance.jobs
    iv1 = [(s.start1[j], s.start1[j] + jobs[j][0]) for j in range(n)]
    iv2 = [(s.start2[j], s.start2[j] + jobs[j][1]) for j in range(n)]
    for j in range(n):
        if s.start1[j] < 0:
            return Violation("negative-start", (j,), f"M1 start {s.start1[j]}")
        if s.start2[j] < iv1[j][1]:
            return Violation("flow-order", (j,),
                             f"M2 start {s.start2[j]} before M1 completion {iv1[j][1]}")
    for name, iv in (("M1", iv1), ("M2", iv2)):
        busy = sorted((a, b, j) for j, (a, b) in enumerate(iv) if b > a)
        for (a0, b0, j0), (a1, b1, j1) in zip(busy, busy[1:]):
            if a1 < b0:
                return Violation("machine-overlap", (j0, j1), f"{name} intervals [{a0},{b0}) and [{a1},{b1})")
    for i, j in instance.conflicts.edges:
        for x, y in ((i, j), (j, i)):
            a, b = iv1[x]
            c, d = iv2[y]
            if a < b and c < d and a < d and c < b:
                return Violation("conflict", (i, j),
                                 f"job {x} on M1 [{a},{b}) overlaps job {y} on M2 [{c},{d})")
    expected = max((b for _, b in iv2), default=0)
    if s.makespan != expected:
        return Violation("makespan", (), f"reported {s.makespan}, completion is {expected}")
    return None


def idle_points(instance: Instance, s: Schedule) -> list[int]:
    """Time units before the makespan at which both machines are idle.

    A normalized schedule has none; their presence is not infeasibility.
    """
    busy = set()
    for j, (p1, p2) in enumerate(instance.jobs):
        busy.update(range(s.start1[j], s.start1[j] + p1))
        busy.update(range(s.start2[j], s.start2[j] + p2))
    return [t for t in range(s.makespan) if t not in busy]


def render_gantt(instance: Instance, s: Schedule) -> str:
    """One character column per time unit; only for unit-job schedules."""
    if not instance.is_unit:
        raise InstanceError("Gantt rendering is only available for unit jobs")
    width = max(len(str(instance.n - 1)), 1) if instance.n else 1
    rows = []
    for name, starts in (("M1", s.start1), ("M2", s.start2)):
        cells = ["." * width] * s.makespan
        for j, t in enumerate(starts):
            cells[t] = str(j).rjust(width)
        rows.append(f"{name} |" + "|".join(cells) + "|")
    return "\n".join(rows)


def format_schedule(s: Schedule) -> str:
    lines = [f"{j} {a} {b}" for j, (a, b) in enumerate(zip(s.start1, s.start2))]
    lines.append(f"makespan {s.makespan}")
    return "\n".join(lines) + "\n"


def parse_schedule(text: str) -> Schedule:
    """Inverse of :func:`format_schedule`."""
    rows: dict[int, tuple[int, int]] = {}
    makespan = None
    for line in text.splitlines():
        parts = line.split()
        if not parts:
            continue
        if parts[0] == "makespan":
            makespan = int(parts[1])
        else:
            j, a, b = map(int, parts)
            rows[j] = (a, b)
    if makespan is None or sorted(rows) != list(range(len(rows))):
        raise ValueError("malformed schedule text")
    return Schedule(tuple(rows[j][0] for j in range(len(rows))),
                    tuple(rows[j][1] for j in range(len(rows))), makespan)


def ratio(makespan: int, reference: int) -> float:
    return makespan / reference if reference else 1.0
