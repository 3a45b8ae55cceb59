"""Command-line entry point: ``flowcover <subcommand> ...``.

Exit codes: 0 success, 1 usage or input error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Optional, Sequence

from . import generators
from .graph import ParseError, complement, recognize_two_cliques
from .matching import decompose, maximum_two_matching
from .pathcover import algorithm_B, path_cover
from .scheduling import (
    Instance,
    InstanceError,
    Schedule,
    algorithm_C,
    format_schedule,
    lower_bound_two_cliques,
    ratio,
    render_gantt,
    solve_unit_with_cover,
    unit_lower_bound,
    validate_schedule,
)
from .verify import SUITES

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2
MODES = ("A", "B", "B-refined")


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


@dataclass
class RunReport:
    instance_id: str
    algorithm: str
    makespan: int
    lower_bound: Optional[int]
    ratio: Optional[float]
    wall_time: float
    num_paths: Optional[int] = None
    num_0_paths: Optional[int] = None
    num_1_paths: Optional[int] = None

    def lines(self, timing: bool = True) -> list[str]:
        out = [f"instance {self.instance_id}", f"algorithm {self.algorithm}", f"makespan {self.makespan}"]
        if self.lower_bound is not None:
            out.append(f"lower_bound {self.lower_bound}")
            out.append(f"ratio {self.ratio:.4f}")
        if self.num_paths is not None:
            out.append(f"cover paths={self.num_paths} zero={self.num_0_paths} one={self.num_1_paths}")
        if timing:
            out.append(f"wall_time {self.wall_time:.4f}")
        return out


def _read(path: str) -> Instance:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return generators.load_instance(text)
    except (ParseError, ValueError) as exc:
        raise CliError(f"{path}: {exc}") from None


def _checked(instance: Instance, s: Schedule) -> Schedule:
    v = validate_schedule(instance, s)
    if v is not None:
        raise CliError(f"produced schedule is infeasible: {v}", EXIT_VERIFY)
    return s


def run_unit(instance: Instance, mode: str, instance_id: str) -> tuple[Schedule, RunReport]:
    t0 = time.perf_counter()
    s, cover = solve_unit_with_cover(instance, mode)
    bound_cover = cover if mode != "A" else algorithm_B(complement(instance.conflicts))
    elapsed = time.perf_counter() - t0
    _checked(instance, s)
    lb = unit_lower_bound(instance, bound_cover)
    report = RunReport(instance_id, f"unit-{mode}", s.makespan, lb, ratio(s.makespan, lb), elapsed,
                       *cover.counts)
    return s, report


def run_cliques(instance: Instance, instance_id: str) -> tuple[Schedule, RunReport]:
    t0 = time.perf_counter()
    part = recognize_two_cliques(instance.conflicts)
    if part is None:
        raise CliError("conflict graph is not a disjoint union of two cliques")
    s = algorithm_C(instance, part)
    lb = lower_bound_two_cliques(instance, part)
    elapsed = time.perf_counter() - t0
    _checked(instance, s)
    return s, RunReport(instance_id, "cliques-C", s.makespan, lb, ratio(s.makespan, lb), elapsed)


# -- subcommands ------------------------------------------------------------


def cmd_gen(args: argparse.Namespace) -> int:
    fam = args.family
    try:
        if fam == "random_gnp":
            inst = generators.random_gnp(args.n, args.p, args.seed)
            note = f"random_gnp n={args.n} p={args.p} seed={args.seed}"
        elif fam == "chained_triangles":
            inst = generators.chained_triangles(args.k)
            note = f"chained_triangles k={args.k}"
        elif fam == "two_cliques":
            l = args.l if args.l is not None else args.n // 2
            inst = generators.two_cliques(l, args.n, args.p_max, args.seed)
            note = f"two_cliques l={l} n={args.n} p_max={args.p_max} seed={args.seed}"
        else:
            if not args.graph:
                raise CliError("unit_from_graph needs --graph PATH")
            try:
                with open(args.graph, encoding="utf-8") as fh:
                    inst = generators.unit_from_graph(fh.read())
            except OSError as exc:
                raise CliError(f"cannot read {args.graph}: {exc.strerror}") from None
            note = f"unit_from_graph {args.graph}"
    except ValueError as exc:
        raise CliError(str(exc)) from None
    text = generators.instance_text(inst, note)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_matching(args: argparse.Namespace) -> int:
    inst = _read(args.path)
    agree = inst.conflicts if args.host else complement(inst.conflicts)
    m = maximum_two_matching(agree)
    d = decompose(m)
    sizes = {"p0": len(d.p0), "p1": len(d.p1), "p2": len(d.p2), "p3": len(d.p3),
             "p4": len(d.p4), "p_ge5": len(d.p_ge5), "cycles": len(d.cycles)}
    if args.json:
        print(json.dumps({"size": len(m), "buckets": sizes, "edges": sorted(m.edges)}))
    else:
        print(f"size {len(m)}")
        print(" ".join(f"{k}={v}" for k, v in sizes.items()))
    return EXIT_OK


def cmd_pathcover(args: argparse.Namespace) -> int:
    inst = _read(args.path)
    agree = inst.conflicts if args.host else complement(inst.conflicts)
    cover = path_cover(agree, args.mode)
    if args.json:
        print(json.dumps({"paths": [list(p) for p in cover.paths],
                          "num_paths": cover.num_paths, "num_0_paths": cover.num_0_paths,
                          "num_1_paths": cover.num_1_paths}))
    else:
        for p in cover.paths:
            print(" ".join(map(str, p)))
        print(f"paths {cover.num_paths} zero {cover.num_0_paths} one {cover.num_1_paths}")
    return EXIT_OK


def _emit(instance: Instance, s: Schedule, report: RunReport, args: argparse.Namespace) -> None:
    if args.json:
        print(json.dumps({"start1": list(s.start1), "start2": list(s.start2), "makespan": s.makespan,
                          "report": {k: v for k, v in asdict(report).items()
                                     if args.timing or k != "wall_time"}}))
        return
    sys.stdout.write(format_schedule(s))
    if getattr(args, "gantt", False):
        print(render_gantt(instance, s))
    print("\n".join(report.lines(args.timing)))


def cmd_solve_unit(args: argparse.Namespace) -> int:
    inst = _read(args.path)
    if not inst.is_unit:
        raise CliError("solve-unit needs unit jobs; use solve-cliques for two-clique instances")
    s, report = run_unit(inst, args.mode, args.path)
    _emit(inst, s, report, args)
    return EXIT_OK


def cmd_solve_cliques(args: argparse.Namespace) -> int:
    inst = _read(args.path)
    s, report = run_cliques(inst, args.path)
    if args.gantt and not inst.is_unit:
        args.gantt = False
    _emit(inst, s, report, args)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    failures = SUITES[args.suite](args.seed)
    for f in failures[:50]:
        print(f"FAIL {f}")
    print(f"suite {args.suite}: {'ok' if not failures else f'{len(failures)} mismatches'}")
    return EXIT_OK if not failures else EXIT_VERIFY


def _bench_one(job: tuple[str, str, int, float, int, str]) -> RunReport:
    family, iid, size, p, seed, mode = job
    if family == "random_gnp":
        return run_unit(generators.random_gnp(size, p, seed), mode, iid)[1]
    if family == "chained_triangles":
        return run_unit(generators.chained_triangles(size), mode, iid)[1]
    return run_cliques(generators.two_cliques(size // 2, size, 100, seed), iid)[1]


def cmd_bench(args: argparse.Namespace) -> int:
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s]
    except ValueError:
        raise CliError("--sizes must be a comma-separated list of integers") from None
    jobs = [(args.family, f"{args.family}-{size}-{r}", size, args.p, args.seed + r, args.mode)
            for size in sizes for r in range(args.repeat)]
    if args.workers > 1:
        with ProcessPoolExecutor(args.workers) as pool:
            reports = list(pool.map(_bench_one, jobs))
    else:
        reports = [_bench_one(j) for j in jobs]
    for rep in sorted(reports, key=lambda r: r.instance_id):
        print(" ".join(rep.lines(args.timing)).replace("instance ", "", 1))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="flowcover", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a generated instance")
    g.add_argument("--family", required=True,
                   choices=["random_gnp", "chained_triangles", "two_cliques", "unit_from_graph"])
    g.add_argument("--n", type=int, default=10)
    g.add_argument("--p", type=float, default=0.5)
    g.add_argument("--k", type=int, default=2)
    g.add_argument("--l", type=int, default=None)
    g.add_argument("--p-max", type=int, default=10)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--graph", help="input graph for unit_from_graph")
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("path")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--no-timing", dest="timing", action="store_false")

    m = sub.add_parser("matching", help="maximum 2-matching of the agreement graph")
    common(m)
    m.add_argument("--host", action="store_true", help="use the file's graph as the host directly")
    m.set_defaults(func=cmd_matching)

    pc = sub.add_parser("pathcover", help="path cover of the agreement graph")
    common(pc)
    pc.add_argument("--mode", choices=MODES, default="B")
    pc.add_argument("--host", action="store_true", help="use the file's graph as the host directly")
    pc.set_defaults(func=cmd_pathcover)

    su = sub.add_parser("solve-unit", help="schedule unit jobs via a path cover")
    common(su)
    su.add_argument("--mode", choices=MODES, default="B")
    su.add_argument("--gantt", action="store_true")
    su.set_defaults(func=cmd_solve_unit)

    sc = sub.add_parser("solve-cliques", help="schedule a two-clique instance")
    common(sc)
    sc.add_argument("--gantt", action="store_true")
    sc.set_defaults(func=cmd_solve_cliques)

    v = sub.add_parser("verify", help="run an oracle cross-check suite")
    v.add_argument("--suite", choices=sorted(SUITES), default="small-exhaustive")
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="timed batches over a generated family")
    b.add_argument("--family", choices=["random_gnp", "chained_triangles", "two_cliques"], default="random_gnp")
    b.add_argument("--sizes", default="50,100,200")
    b.add_argument("--repeat", type=int, default=3)
    b.add_argument("--p", type=float, default=0.9, help="conflict density for random_gnp")
    b.add_argument("--mode", choices=MODES, default="B")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--workers", type=int, default=1)
    b.add_argument("--no-timing", dest="timing", action="store_false")
    b.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (CliError, InstanceError) as exc:
        print(f"flowcover: {exc}", file=sys.stderr)
        return getattr(exc, "code", EXIT_USAGE)


if __name__ == "__main__":
    sys.exit(main())
