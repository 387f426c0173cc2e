import random

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from src.core.exceptions import GraphFormatError, GraphStructureError
from src.cut import mincut, mincut_vector
from src.graph import (
    TerminalGraph,
    Vertex,
    component_id,
    component_passages,
    contract_nonterminal_components,
    expand_weighted,
    expansion_copies,
    max_component_size,
    parse_graph,
    serialize_graph,
    subdivide_terminal_edges,
    subdivision_id,
    weak_components,
)
from src.graph.random import random_quasi_bipartite, random_tau_quasi_bipartite, random_weighted_graph
from src.schemas.cut import CutQuery

PROPERTY_SETTINGS = settings(
    max_examples=60,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)


def test_parse_path(path_graph):
    assert path_graph.orientation == "undirected"
    assert list(path_graph.vertices) == ["a", "b", "v"]
    assert path_graph.terminals == ("a", "b")
    assert path_graph.edges == (("a", "v"), ("b", "v"))
    assert path_graph.is_unweighted()


def test_parse_weighted_directed():
    g = parse_graph("graph directed\nnode a terminal=1 weight=2\nnode b terminal=1 weight=4\nedge a b")
    assert g.directed
    assert g.vertices["a"].weight == 2
    assert g.vertices["b"].weight == 4
    assert g.edges == (("a", "b"),)


def test_parse_options_any_order_and_comments():
    g = parse_graph(b"# leading comment\n\ngraph undirected\nnode x weight=3 terminal=1\n# c\nnode y\nedge y x\n")
    assert g.vertices["x"] == Vertex(weight=3, terminal=True)
    # 无向边按规范顺序保存
    assert g.edges == (("x", "y"),)


@pytest.mark.parametrize(
    ("text", "line"),
    [
        ("graph undirected\nnode a\nedge a a\n", 3),
        ("graph undirected\nnode a\n\nedge a b\n", 4),
        ("graph undirected\nnode a\nnode a\n", 3),
        ("graph undirected\nnode a\nnode b\nedge a b\nedge b a\n", 5),
        ("graph undirected\nnode a weight=0\n", 2),
        ("graph undirected\nnode a weight=x\n", 2),
        ("graph undirected\nnode a color=red\n", 2),
        ("graph undirected\nnode a-b\n", 2),
        ("graph undirected\nvertex a\n", 2),
        ("node a\n", 1),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(GraphFormatError) as exc_info:
        parse_graph(text)
    assert exc_info.value.line == line


def test_parse_invalid_utf8():
    with pytest.raises(GraphFormatError) as exc_info:
        parse_graph(b"graph undirected\nnode \xff\n")
    assert exc_info.value.line == 2
    assert isinstance(exc_info.value.__cause__, UnicodeDecodeError)


def test_parse_directed_allows_both_directions():
    g = parse_graph("graph directed\nnode a\nnode b\nedge a b\nedge b a\n")
    assert g.edges == (("a", "b"), ("b", "a"))


def test_serialize_canonical(path_graph):
    assert serialize_graph(path_graph) == (
        b"graph undirected\nnode a terminal=1\nnode b terminal=1\nnode v\nedge a v\nedge b v\n"
    )


def test_serialize_empty():
    assert serialize_graph(TerminalGraph()) == b"graph undirected\n"


def test_serialize_comments(path_graph):
    text = serialize_graph(path_graph, ["edge a v from pair (a,b) via undirected_link"]).decode()
    assert text.endswith("# edge a v from pair (a,b) via undirected_link\n")
    assert parse_graph(text).edges == path_graph.edges


@given(seed=st.integers(min_value=0, max_value=10_000), directed=st.booleans())
@PROPERTY_SETTINGS
def test_serialize_idempotent(seed, directed):
    g = random_weighted_graph(random.Random(seed), 7, 0.4, directed=directed, k=3)
    text = serialize_graph(g)
    assert serialize_graph(parse_graph(text)) == text


def test_build_rejects_bad_structure():
    with pytest.raises(GraphStructureError):
        TerminalGraph.build("undirected", ["a"], [("a", "a")])
    with pytest.raises(GraphStructureError):
        TerminalGraph.build("undirected", ["a"], [("a", "b")])
    with pytest.raises(GraphStructureError):
        TerminalGraph.build("undirected", ["a", "b"], [("a", "b"), ("b", "a")])
    with pytest.raises(GraphStructureError):
        TerminalGraph.build("undirected", ["a b"])


def test_graph_helpers(star_graph):
    assert star_graph.k == 3
    assert star_graph.nonterminals == ("v",)
    assert star_graph.neighbors("v") == ("a", "b", "c")
    assert star_graph.has_edge("v", "a")
    assert star_graph.is_quasi_bipartite()
    assert star_graph.without(["v"]).edges == ()
    promoted = star_graph.with_terminals(["a", "v"])
    assert promoted.terminals == ("a", "v")
    with pytest.raises(GraphStructureError):
        star_graph.with_terminals(["z"])


def test_subdivide_single_terminal_edge():
    g = TerminalGraph.build("undirected", {"t1": Vertex(terminal=True), "t2": Vertex(terminal=True)}, [("t1", "t2")])
    sub, record = subdivide_terminal_edges(g)
    fresh = subdivision_id("t1", "t2")
    assert record.mapping == {("t1", "t2"): fresh}
    assert set(sub.vertices) == {"t1", "t2", fresh}
    # "__sub_" 前缀排在终端 id 之前
    assert set(sub.edges) == {(fresh, "t1"), (fresh, "t2")}
    assert sub.vertices[fresh] == Vertex()
    query = CutQuery.of(["t1"], ["t2"])
    assert mincut(g, query).value == mincut(sub, query).value == 1


def test_subdivide_weighted_edge_keeps_cut():
    g = TerminalGraph.build(
        "undirected", {"a": Vertex(terminal=True, weight=2), "b": Vertex(terminal=True, weight=4)}, [("a", "b")]
    )
    sub, _ = subdivide_terminal_edges(g)
    assert sub.vertices[subdivision_id("a", "b")].weight == 2
    query = CutQuery.of(["a"], ["b"])
    assert mincut(g, query).value == mincut(sub, query).value == 2


def test_subdivide_directed_keeps_direction():
    g = TerminalGraph.build("directed", {"a": Vertex(terminal=True), "b": Vertex(terminal=True)}, [("a", "b")])
    sub, _ = subdivide_terminal_edges(g)
    fresh = subdivision_id("a", "b")
    assert sub.edges == ((fresh, "b"), ("a", fresh))
    assert mincut(sub, CutQuery.of(["b"], ["a"])).value == 0


def test_subdivide_noop(path_graph):
    sub, record = subdivide_terminal_edges(path_graph)
    assert sub is path_graph
    assert len(record) == 0


def test_subdivide_rejects_non_quasi_bipartite():
    g = TerminalGraph.build("undirected", {"a": Vertex(terminal=True), "u": Vertex(), "v": Vertex()}, [("u", "v")])
    with pytest.raises(GraphStructureError):
        subdivide_terminal_edges(g)


def test_subdivide_rejects_collision():
    fresh = subdivision_id("a", "b")
    g = TerminalGraph.build(
        "undirected", {"a": Vertex(terminal=True), "b": Vertex(terminal=True), fresh: Vertex()}, [("a", "b")]
    )
    with pytest.raises(GraphStructureError):
        subdivide_terminal_edges(g)


def test_subdivide_g4_preserves_vector(g4):
    sub, record = subdivide_terminal_edges(g4.graph)
    assert len(record) == 4
    assert mincut_vector(sub).entries == mincut_vector(g4.graph).entries


@pytest.mark.parametrize("seed", range(100))
def test_subdivision_preserves_all_terminal_cuts(seed):
    rng = random.Random(seed)
    directed = seed % 2 == 1
    g = random_quasi_bipartite(rng, rng.randint(2, 4), rng.randint(0, 5), 0.5, directed=directed)
    if seed % 4 >= 2:
        for tid in g.terminals:
            g = g.with_weight(tid, rng.randint(1, 4))
    sub, _ = subdivide_terminal_edges(g)
    terminals = list(g.terminals)
    for _ in range(6):
        labels = [rng.randrange(3) for _ in terminals]
        sources = [t for t, label in zip(terminals, labels) if label == 0]
        deleted = [t for t, label in zip(terminals, labels) if label == 1]
        sinks = [t for t, label in zip(terminals, labels) if label == 2]
        query = CutQuery.of(sources, sinks, deleted)
        assert mincut(g, query).value == mincut(sub, query).value


def test_component_passages_follow_arc_direction():
    vertices = {"t1": Vertex(terminal=True), "t3": Vertex(terminal=True), "x": Vertex(), "y": Vertex()}
    dead_end = TerminalGraph.build("directed", vertices, [("t1", "x"), ("y", "x"), ("y", "t3")])
    assert component_passages(dead_end, contract_nonterminal_components(dead_end)) == set()

    through = TerminalGraph.build("directed", vertices, [("t1", "x"), ("x", "y"), ("y", "t3")])
    assert component_passages(through, contract_nonterminal_components(through)) == {("t1", "__cmp_x", "t3")}


def test_component_passages_undirected():
    g = TerminalGraph.build(
        "undirected",
        {"a": Vertex(terminal=True), "b": Vertex(terminal=True), "u": Vertex(), "v": Vertex()},
        [("u", "v"), ("a", "u"), ("v", "b")],
    )
    assert component_passages(g, contract_nonterminal_components(g)) == {("a", "__cmp_u", "b"), ("b", "__cmp_u", "a")}

def test_contract_quasi_bipartite_is_identity(star_graph):
    contraction = contract_nonterminal_components(star_graph)
    cid = component_id(("v",))
    assert contraction.component_map == {cid: ("v",)}
    assert contraction.quotient.edges == (("__cmp_v", "a"), ("__cmp_v", "b"), ("__cmp_v", "c"))
    assert contraction.max_component_size == 1


def test_contract_single_component():
    vertices = {"t": Vertex(terminal=True), "u": Vertex(), "v": Vertex()}
    g = TerminalGraph.build("undirected", vertices, [("u", "v"), ("t", "u")])
    contraction = contract_nonterminal_components(g)
    assert contraction.component_map == {"__cmp_u": ("u", "v")}
    assert contraction.quotient.edges == (("__cmp_u", "t"),)
    assert contraction.component_count == 1
    assert contraction.max_component_size == 2


def test_contract_directed_keeps_arc_directions():
    g = TerminalGraph.build(
        "directed",
        {"a": Vertex(terminal=True), "b": Vertex(terminal=True), "u": Vertex(), "v": Vertex()},
        [("a", "u"), ("v", "u"), ("v", "b")],
    )
    contraction = contract_nonterminal_components(g)
    assert contraction.quotient.edges == (("__cmp_u", "b"), ("a", "__cmp_u"))


@pytest.mark.parametrize("seed", range(30))
def test_contract_quotient_is_quasi_bipartite(seed):
    rng = random.Random(seed)
    g = random_tau_quasi_bipartite(rng, 3, 3, 4, 0.4, directed=seed % 2 == 0)
    contraction = contract_nonterminal_components(g)
    assert contraction.quotient.is_quasi_bipartite()
    members = sorted(vid for component in contraction.component_map.values() for vid in component)
    assert members == sorted(g.nonterminals)
    assert contraction.max_component_size == max_component_size(g)


def test_weak_components_ignore_direction():
    g = TerminalGraph.build("directed", ["a", "b", "c", "d"], [("a", "b"), ("c", "b")])
    assert weak_components(g) == [("a", "b", "c"), ("d",)]
    assert weak_components(g, ["b"]) == [("a",), ("c",), ("d",)]


def test_expand_unit_weight_is_identity(path_graph):
    assert serialize_graph(expand_weighted(path_graph)) == serialize_graph(path_graph)


def test_expand_single_weighted_edge():
    g = TerminalGraph.build(
        "undirected", {"a": Vertex(weight=2, terminal=True), "b": Vertex(weight=4, terminal=True)}, [("a", "b")]
    )
    expanded = expand_weighted(g)
    assert len(expanded.vertices) == 6
    assert len(expanded.edges) == 8
    copies = expansion_copies(g)
    assert mincut(g, CutQuery.of(["a"], ["b"])).value == 2
    assert mincut(expanded, CutQuery.of(copies["a"], copies["b"])).value == 2


def test_expand_g3_vector_matches(g3):
    expanded = g3.unweighted()
    assert len(expanded.vertices) == g3.graph.total_weight == 21
    assert mincut_vector(expanded, g3.copy_map()).entries == mincut_vector(g3.graph).entries


@pytest.mark.parametrize("seed", range(100))
def test_expansion_preserves_mincut_vector(seed):
    rng = random.Random(seed)
    g = random_weighted_graph(rng, rng.randint(3, 8), 0.4, directed=seed % 2 == 0, k=rng.randint(1, 4))
    copies = expansion_copies(g)
    groups = {tid: copies[tid] for tid in g.terminals}
    assert mincut_vector(expand_weighted(g), groups).entries == mincut_vector(g).entries
