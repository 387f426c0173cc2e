import pytest

from src.core.exceptions import GuardExceededError, InvalidArgumentError
from src.cut import mincut, mincut_vector
from src.lowerbound import (
    check_family_distinctness,
    check_forced_terminal,
    check_subgraph_necessity,
    check_vij_necessity,
    count_distinct_vectors,
    family_members,
    family_mincut_vectors,
    generate_gk,
    pair_indices,
    xij_partition,
)


def test_generate_g4_shape(g4):
    graph = g4.graph
    assert len(graph.terminals) == 8
    assert len(graph.nonterminals) == 6
    assert len(graph.edges) == 16
    assert graph.neighbors("v_1_2") == ("a1", "a2")
    assert graph.neighbors("a1") == ("d1", "v_1_2", "v_1_3", "v_1_4")


def test_generate_with_everything_removed():
    inst = generate_gk(2, [(1, 2)])
    assert list(inst.graph.vertices) == ["a1", "a2", "d1", "d2"]
    assert inst.graph.edges == (("a1", "d1"), ("a2", "d2"))
    assert inst.removed == ((1, 2),)


def test_generate_g3_weights(g3):
    weights = sorted(vertex.weight for vertex in g3.graph.vertices.values())
    assert weights == [1, 1, 1, 2, 2, 2, 4, 4, 4]
    assert g3.graph.total_weight == 21


def test_generate_rejects_bad_arguments():
    with pytest.raises(InvalidArgumentError):
        generate_gk(1)
    with pytest.raises(InvalidArgumentError):
        generate_gk(2, [(1, 3)])
    with pytest.raises(InvalidArgumentError):
        generate_gk(3, [(2, 1)])


def test_pair_indices():
    assert pair_indices(2) == [(1, 2)]
    assert pair_indices(4) == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]


def test_xij_partition(g3):
    query = xij_partition(g3, 1, 2)
    assert query.sources == ("a1", "d1", "d3")
    assert query.sinks == ("a2", "a3", "d2")

    small = xij_partition(generate_gk(2), 1, 2)
    assert small.sources == ("a1", "d1")
    assert small.sinks == ("a2", "d2")

    with pytest.raises(InvalidArgumentError):
        xij_partition(g3, 2, 1)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_xij_values_follow_removed_set(k):
    # 完整实例处为 2k-3，删去 v_i_j 后恰好降到 2k-4
    for removed in family_members(k):
        inst = generate_gk(k, removed)
        for i, j in pair_indices(k):
            value = mincut(inst.graph, xij_partition(inst, i, j)).value
            assert value == (2 * k - 4 if (i, j) in removed else 2 * k - 3)


def test_forced_terminal_k3(g3):
    for i, j in pair_indices(3):
        side = xij_partition(g3, i, j).sources
        (other,) = {1, 2, 3} - {i, j}
        assert check_forced_terminal(g3, other, side)
        # 与 d_i 同侧，不满足前置条件
        with pytest.raises(InvalidArgumentError):
            check_forced_terminal(g3, i, side)


def test_forced_terminal_either_side(g3):
    query = xij_partition(g3, 1, 2)
    assert check_forced_terminal(g3, 3, query.sinks)


def test_forced_terminal_precondition():
    inst = generate_gk(2)
    with pytest.raises(InvalidArgumentError):
        check_forced_terminal(inst, 1, ["a1", "d1"])
    with pytest.raises(InvalidArgumentError):
        check_forced_terminal(inst, 3, ["a1"])
    with pytest.raises(InvalidArgumentError):
        check_forced_terminal(inst, 1, ["a1", "v_1_2"])


def test_vij_necessity_g4(g4):
    check = check_vij_necessity(g4, 1, 2)
    assert check.value == 5
    assert check.forced

    reduced = check_vij_necessity(generate_gk(4, [(1, 2)]), 1, 2)
    assert reduced.value == 4
    assert not reduced.forced


@pytest.mark.parametrize("exhaustive", [False, True])
def test_vij_necessity_g3(g3, exhaustive):
    for i, j in pair_indices(3):
        check = check_vij_necessity(g3, i, j, exhaustive=exhaustive)
        assert check.value == 3
        assert check.forced


def test_family_members_order():
    assert family_members(2) == [(), ((1, 2),)]
    members = family_members(3)
    assert len(members) == 8
    assert members[3] == ((1, 2), (1, 3))


@pytest.mark.parametrize(("k", "expected"), [(2, 2), (3, 8)])
def test_count_distinct_vectors(k, expected):
    assert count_distinct_vectors(k) == expected


def test_family_vector_lengths():
    vectors = family_mincut_vectors(3)
    assert len(vectors) == 8
    assert all(len(vector.entries) == 64 for vector in vectors.values())


def test_family_parallel_matches_serial():
    assert family_mincut_vectors(3, jobs=2) == family_mincut_vectors(3)


@pytest.mark.parametrize("k", [2, 3])
def test_family_distinctness(k):
    assert check_family_distinctness(k)


def test_family_distinctness_k4():
    assert check_family_distinctness(4, jobs=2)


def test_family_guards():
    with pytest.raises(GuardExceededError):
        check_family_distinctness(5)
    with pytest.raises(InvalidArgumentError):
        family_mincut_vectors(1)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_subgraph_necessity(k):
    assert check_subgraph_necessity(k)


@pytest.mark.parametrize("removed", [(), ((1, 2),), ((1, 3), (2, 3))])
def test_unweighted_instance_has_same_vector(removed):
    inst = generate_gk(3, removed)
    assert mincut_vector(inst.unweighted(), inst.copy_map()) == mincut_vector(inst.graph)
