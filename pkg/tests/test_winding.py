import random

import pytest
from hypothesis import given, strategies as st

from cyclehom.errors import NotAWalk, NotP9Free
from cyclehom.graph import build_graph, cycle_graph, path_graph
from cyclehom.instances import random_graph
from cyclehom.lists import ListAssignment, cycle_target, path_target
from cyclehom.oracle import enumerate_all, solve_exact, verify
from cyclehom.winding import (image_window, orient_by_hom, potentials, slope, solve_localized,
                              solve_path_hom)

from conftest import graphs


def test_edge_k10():
    assert solve_localized(path_graph(2), ListAssignment.full(2, 10), 10) == [1, 2]


def test_c4_k10():
    f = solve_localized(cycle_graph(4), ListAssignment.full(4, 10), 10)
    assert verify(cycle_graph(4), None, cycle_target(10), f)
    assert len(set(f)) == 2


def test_odd_cycle_k10():
    assert solve_localized(cycle_graph(5), ListAssignment.full(5, 10), 10) is None


def test_p9_rejected():
    with pytest.raises(NotP9Free):
        solve_localized(path_graph(9), ListAssignment.full(9, 10), 10)


def test_slopes():
    og = orient_by_hom(cycle_graph(5), [1, 2, 3, 4, 5], 5)
    assert slope(og, [0, 1, 2, 3, 4, 0]) == 5
    assert slope(og, [0, 1, 0]) == 0
    with pytest.raises(NotAWalk):
        slope(og, [0, 2])


def test_image_window():
    assert image_window([1, 2, 3], 10) == (1, 3)
    assert image_window([10, 1, 2], 10) == (10, 3)
    assert image_window({0: 4}, 7) == (4, 1)


def test_potentials():
    assert potentials(cycle_graph(5), [1, 2, 3, 4, 5], 5) is None
    p = potentials(path_graph(3), [1, 2, 1], 5)
    assert p == [1, 2, 1]


@given(graphs(max_n=7), st.integers(2, 7), st.data())
def test_path_hom_matches_oracle(g, t, data):
    masks = [data.draw(st.integers(1, (1 << t) - 1)) for _ in range(g.n)]
    got = solve_path_hom(g, masks, t)
    lists = ListAssignment(t, tuple(masks))
    want = solve_exact(g, lists, path_target(t))
    assert (got is None) == (want is None)
    if got is not None:
        assert verify(g, lists, path_target(t), got)


@pytest.mark.parametrize("seed", range(40))
def test_localized_matches_oracle(seed):
    rng = random.Random(seed)
    k = rng.choice([10, 11, 12])
    g = random_graph(rng, rng.randint(2, 9), 0.35)
    from cyclehom.graph import find_induced_path
    if find_induced_path(g, 9) is not None:
        return
    lists = ListAssignment(k, tuple(rng.choice([(1 << k) - 1, rng.randint(1, (1 << k) - 1)]) for _ in range(g.n)))
    got = solve_localized(g, lists, k)
    assert (got is None) == (solve_exact(g, lists) is None)


@pytest.mark.parametrize("t", [4, 5])
def test_small_pt_free_graphs_stay_in_window(t):
    for g in (path_graph(t - 1), cycle_graph(t), build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])):
        from cyclehom.graph import is_pt_free
        if not is_pt_free(g, t):
            continue
        for k in range(t + 1, t + 5):
            for f in enumerate_all(g, None, cycle_target(k)):
                assert image_window(f, k)[1] <= t - 1
                assert potentials(g, f, k) is not None
