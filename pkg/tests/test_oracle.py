import itertools

import pytest

from flowcover.generators import chained_triangles
from flowcover.graph import complement, recognize_two_cliques
from flowcover.oracle import (
    CoverStats,
    OracleTooLarge,
    bnb_max_two_matching,
    brute_cover_stats,
    brute_max_two_matching,
    brute_two_clique_bound,
    brute_unit_optimum,
    case_formula_makespan,
    permutation_makespan,
)
from flowcover.scheduling import Instance, lower_bound_two_cliques
from flowcover.verify import all_graphs

from conftest import make


def complete(n):
    return make(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


@pytest.mark.parametrize("g, size", [
    (complete(3), 3),
    (complete(4), 4),
    (make(4, [(0, 1), (0, 2), (0, 3)]), 2),
    (make(5, []), 0),
])
def test_brute_two_matching_examples(g, size):
    assert brute_max_two_matching(g) == size == bnb_max_two_matching(g)


def test_two_matching_oracles_agree_on_all_small_graphs():
    for n in range(1, 6):
        for g in all_graphs(n):
            assert brute_max_two_matching(g) == bnb_max_two_matching(g), g.edges


def test_two_matching_guard():
    with pytest.raises(OracleTooLarge):
        brute_max_two_matching(complete(8))


def test_cover_stats_examples():
    assert brute_cover_stats(make(3, [(0, 1), (1, 2)])) == CoverStats(1, 0, 0, 0)
    st = brute_cover_stats(make(4, [(0, 1), (0, 2), (0, 3)]))
    assert (st.min_num_paths, st.min_num_0_paths, st.min_num_01_paths) == (2, 1, 1)
    assert brute_cover_stats(make(3, [])) == CoverStats(3, 3, 3, 3)


def test_cover_stats_guard():
    with pytest.raises(OracleTooLarge):
        brute_cover_stats(make(11, []))


def _paths_partitions(g):
    """Every partition of V into Hamiltonian-pathable blocks, as path lists."""
    n = g.n
    if n == 0:
        yield []
        return

    def rec(rest):
        if not rest:
            yield []
            return
        first = min(rest)
        others = sorted(rest - {first})
        for k in range(len(others) + 1):
            for combo in itertools.combinations(others, k):
                block = (first,) + combo
                for perm in itertools.permutations(block):
                    if all(g.has_edge(a, b) for a, b in zip(perm, perm[1:])):
                        for tail in rec(rest - set(block)):
                            yield [perm] + tail
                        break

    yield from rec(set(range(n)))


def test_cover_stats_against_naive_enumeration():
    for n in range(1, 5):
        for g in all_graphs(n):
            covers = list(_paths_partitions(g))
            best = min(len(c) for c in covers)
            zero = min(sum(len(p) == 1 for p in c) for c in covers)
            zo = min(sum(len(p) <= 2 for p in c) for c in covers)
            joint = min(sum(len(p) == 1 for p in c) for c in covers if sum(len(p) <= 2 for p in c) == zo)
            assert brute_cover_stats(g) == CoverStats(best, zero, zo, joint), g.edges


def test_cover_stats_self_consistent():
    for g in all_graphs(5):
        st = brute_cover_stats(g)
        assert st.min_num_0_paths <= st.min_num_01_paths <= g.n
        assert st.joint_min_0_paths >= st.min_num_0_paths
        assert brute_unit_optimum(complement(g)) >= g.n + 1


def test_unit_optimum_examples():
    assert brute_unit_optimum(make(5, [])) == 6
    assert brute_unit_optimum(complete(5)) == 10
    assert brute_unit_optimum(chained_triangles(2).conflicts) == 7


def test_two_clique_bound_unit_halves():
    inst = Instance.unit(make(4, [(0, 1), (2, 3)]))
    part = recognize_two_cliques(inst.conflicts)
    best = brute_two_clique_bound(inst.jobs, inst.conflicts, part)
    assert lower_bound_two_cliques(inst, part) == 4 <= best <= 6
    assert best == 5


def test_two_clique_bound_single_clique():
    assert brute_two_clique_bound([(1, 1)] * 3, complete(3)) == 6


def test_two_clique_bound_two_jobs():
    assert brute_two_clique_bound([(2, 3), (4, 5)], make(2, [])) == 11


def test_two_clique_bound_guard():
    with pytest.raises(OracleTooLarge):
        brute_two_clique_bound([(1, 1)] * 9, make(9, []))


def test_permutation_makespan_waits_for_conflicts():
    # job 1 conflicts with job 0 and must not start on M1 while 0 is on M2
    assert permutation_makespan([0, 1], [(1, 1), (1, 1)], make(2, [(0, 1)])) == 4
    assert permutation_makespan([0, 1], [(1, 1), (1, 1)], make(2, [])) == 3


def test_case_formula():
    assert case_formula_makespan(2, 3, 4, 5) == 11
    assert case_formula_makespan(4, 5, 2, 3) == 11
    # A has the smaller M1 sum but a short M2 part: B first
    assert case_formula_makespan(3, 1, 4, 6) == 4 + 6 + 1
