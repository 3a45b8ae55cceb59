import random

import pytest

from flowcover.generators import chained_triangles, random_gnp, two_cliques
from flowcover.graph import CliquePartition, complement, recognize_two_cliques
from flowcover.oracle import brute_unit_optimum, case_formula_makespan
from flowcover.pathcover import PathCover, algorithm_B
from flowcover.scheduling import (
    AggregatedPair,
    Instance,
    InstanceError,
    Schedule,
    algorithm_C,
    format_schedule,
    idle_points,
    johnson_a_first,
    lower_bound_two_cliques,
    makespan_identity_check,
    parse_schedule,
    render_gantt,
    schedule_from_cover,
    solve_unit,
    unit_lower_bound,
    validate_schedule,
)

from conftest import make


def clique_pair(sizes_a, sizes_b):
    """Instance with conflicts K_|A| on the first jobs and K_|B| on the rest."""
    la, n = len(sizes_a), len(sizes_a) + len(sizes_b)
    edges = [(u, v) for u in range(la) for v in range(u + 1, la)]
    edges += [(u, v) for u in range(la, n) for v in range(u + 1, n)]
    inst = Instance(tuple(sizes_a) + tuple(sizes_b), make(n, edges))
    return inst, recognize_two_cliques(inst.conflicts)


# -- unit schedules from covers ---------------------------------------------


@pytest.mark.parametrize("paths, n, makespan", [
    (((0, 1, 2, 3, 4),), 5, 6),
    (((0,), (1,), (2,), (3,)), 4, 8),
    (((0, 1, 2), (3, 4)), 5, 7),
    (((0, 1, 2, 3), (4, 5, 6)), 7, 9),
])
def test_schedule_from_cover_makespan(paths, n, makespan):
    cover = PathCover(paths)
    s = schedule_from_cover(cover, n)
    assert s.makespan == makespan
    assert makespan_identity_check(cover, s)


def test_schedule_from_cover_layout():
    s = schedule_from_cover(PathCover(((2, 0), (1,))), 3)
    assert s.start1 == (1, 3, 0) and s.start2 == (2, 4, 1) and s.makespan == 5


def test_schedule_from_cover_rejects_non_partition():
    with pytest.raises(InstanceError):
        schedule_from_cover(PathCover(((0, 1),)), 3)
    with pytest.raises(InstanceError):
        schedule_from_cover(PathCover(((0, 1), (1, 2))), 3)


def test_solve_unit_examples():
    assert solve_unit(Instance.unit(make(6, []))).makespan == 7
    k4 = make(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    assert solve_unit(Instance.unit(k4)).makespan == 8


def test_solve_unit_chained_triangles_k3():
    inst = chained_triangles(3)
    assert brute_unit_optimum(inst.conflicts) == 10
    s = solve_unit(inst, "B")
    assert s.makespan <= 13
    assert validate_schedule(inst, s) is None


def test_solve_unit_rejects_non_unit():
    inst = Instance(((1, 2), (1, 1)), make(2, []))
    with pytest.raises(InstanceError):
        solve_unit(inst)


def test_unit_lower_bound_never_exceeds_optimum():
    rng = random.Random(8)
    for _ in range(200):
        inst = random_gnp(rng.randint(1, 8), rng.random(), rng.randrange(1000))
        cover = algorithm_B(complement(inst.conflicts))
        assert unit_lower_bound(inst, cover) <= brute_unit_optimum(inst.conflicts)


@pytest.mark.parametrize("mode", ["A", "B", "B-refined"])
def test_unit_schedules_validate(mode):
    rng = random.Random(31)
    for _ in range(300):
        inst = random_gnp(rng.randint(1, 40), rng.random(), rng.randrange(10**6))
        s = solve_unit(inst, mode)
        assert validate_schedule(inst, s) is None


# -- two cliques ----------------------------------------------------------------


def test_algorithm_c_single_job_cliques():
    inst, part = clique_pair([(2, 3)], [(4, 5)])
    s = algorithm_C(inst, part)
    assert s.makespan == 11
    assert lower_bound_two_cliques(inst, part) == 9
    assert validate_schedule(inst, s) is None


def test_algorithm_c_unit_half_split():
    inst, part = clique_pair([(1, 1)] * 2, [(1, 1)] * 2)
    assert algorithm_C(inst, part).makespan == 6
    assert lower_bound_two_cliques(inst, part) == 4


def test_algorithm_c_single_clique():
    inst, part = clique_pair([(3, 1), (2, 4), (1, 1)], [])
    assert part.side_b == frozenset()
    s = algorithm_C(inst, part)
    assert s.makespan == 6 + 6
    assert lower_bound_two_cliques(inst, part) == 12
    assert validate_schedule(inst, s) is None


def test_algorithm_c_runs_b_first_when_johnson_says_so():
    # A = (5, 1), B = (2, 6): min(5, 6) > min(2, 1) so B goes first
    inst, part = clique_pair([(5, 1)], [(2, 6)])
    agg = AggregatedPair.of(inst, part)
    assert not johnson_a_first(agg)
    s = algorithm_C(inst, part)
    assert s.start1[1] == 0
    assert s.makespan == 2 + max(6, 5) + 1 == case_formula_makespan(5, 1, 2, 6)


def test_johnson_tie_keeps_a_first():
    assert johnson_a_first(AggregatedPair(3, 3, 3, 3))


def test_algorithm_c_rejects_wrong_partition():
    inst, _ = clique_pair([(1, 1)] * 2, [(1, 1)] * 2)
    bad = CliquePartition(frozenset({0, 2}), frozenset({1, 3}))
    with pytest.raises(InstanceError):
        algorithm_C(inst, bad)
    with pytest.raises(InstanceError):
        lower_bound_two_cliques(inst, bad)


def test_algorithm_c_random_instances():
    rng = random.Random(12)
    for _ in range(300):
        n = rng.randint(1, 30)
        inst = two_cliques(rng.randint(0, n), n, rng.randint(1, 50), rng.randrange(10**6))
        part = recognize_two_cliques(inst.conflicts)
        s = algorithm_C(inst, part)
        assert validate_schedule(inst, s) is None
        assert 2 * s.makespan <= 3 * lower_bound_two_cliques(inst, part)
        agg = AggregatedPair.of(inst, part)
        assert s.makespan == case_formula_makespan(agg.pa1, agg.pa2, agg.pb1, agg.pb2)


def test_zero_processing_times_are_allowed():
    inst, part = clique_pair([(0, 2), (3, 0)], [(0, 0)])
    s = algorithm_C(inst, part)
    assert validate_schedule(inst, s) is None


# -- validation ---------------------------------------------------------------


def test_validate_flow_order():
    inst = Instance.unit(make(2, []))
    v = validate_schedule(inst, Schedule((0, 1), (0, 2), 3))
    assert v.kind == "flow-order" and v.jobs == (0,)


def test_validate_conflict():
    inst = Instance.unit(make(2, [(0, 1)]))
    v = validate_schedule(inst, Schedule((0, 1), (1, 2), 3))
    assert v.kind == "conflict" and v.jobs == (0, 1)


def test_validate_machine_overlap_and_makespan():
    inst = Instance.unit(make(2, []))
    assert validate_schedule(inst, Schedule((0, 0), (1, 2), 3)).kind == "machine-overlap"
    assert validate_schedule(inst, Schedule((0, 1), (1, 2), 4)).kind == "makespan"
    assert validate_schedule(inst, Schedule((0,), (1,), 2)).kind == "shape"
    assert validate_schedule(inst, Schedule((-1, 1), (1, 2), 3)).kind == "negative-start"
    assert validate_schedule(inst, Schedule((0, 1), (1, 2), 3)) is None


def test_instance_invariants():
    with pytest.raises(InstanceError):
        Instance(((1, 1),), make(2, []))
    with pytest.raises(InstanceError):
        Instance(((1, -1),), make(1, []))
    assert Instance.unit(make(3, [])).is_unit


# -- text helpers ----------------------------------------------------------------


def test_schedule_text_round_trip():
    s = schedule_from_cover(PathCover(((0, 2), (1,))), 3)
    assert parse_schedule(format_schedule(s)) == s
    assert format_schedule(s).endswith("makespan 5\n")


def test_gantt_and_idle_points():
    inst = Instance.unit(make(3, [(0, 1)]))
    s = schedule_from_cover(PathCover(((0, 2), (1,))), 3)
    assert render_gantt(inst, s).splitlines() == ["M1 |0|2|.|1|.|", "M2 |.|0|2|.|1|"]
    assert idle_points(inst, s) == []
    with pytest.raises(InstanceError):
        render_gantt(Instance(((2, 1),), make(1, [])), Schedule((0,), (2,), 3))
