import random

import networkx as nx
import pytest

from src.core.exceptions import GraphStructureError
from src.graph import TerminalGraph, Vertex, canonical_edge, subdivide_terminal_edges
from src.graph.random import random_quasi_bipartite
from src.link import LinkGraph, Matching, build_link_graph, maximum_matching


def reference_matching_size(link: LinkGraph) -> int:
    """networkx 的 Hopcroft-Karp 作为对照"""
    graph = nx.Graph()
    top = [("L", pair) for pair in link.left]
    graph.add_nodes_from(top)
    graph.add_nodes_from(("R", edge) for edge in link.right)
    graph.add_edges_from((("L", pair), ("R", edge)) for pair, edge in link.adjacencies())
    return len(nx.bipartite.hopcroft_karp_matching(graph, top_nodes=top)) // 2


def test_path_link_graph(path_graph):
    link = build_link_graph(path_graph, "undirected_link")
    assert link.left == (("a", "b"), ("b", "a"))
    assert link.adjacencies() == [(("a", "b"), ("a", "v")), (("b", "a"), ("b", "v"))]


def test_star_link_graph(star_graph):
    link = build_link_graph(star_graph, "undirected_link")
    assert len(link.left) == 6
    assert all(len(link.neighbors(pair)) == 1 for pair in link.left)
    assert link.right_degree() == {("a", "v"): 2, ("b", "v"): 2, ("c", "v"): 2}
    assert len(link) == 6


def test_directed_link_flavors(directed_path):
    out_link = build_link_graph(directed_path, "out_link")
    in_link = build_link_graph(directed_path, "in_link")
    assert out_link.adjacencies() == [(("a", "b"), ("a", "v"))]
    assert in_link.adjacencies() == [(("a", "b"), ("v", "b"))]
    # 反方向没有路径
    assert out_link.neighbors(("b", "a")) == ()


def test_link_graph_rejects_bad_input(path_graph, directed_path):
    with pytest.raises(GraphStructureError):
        build_link_graph(path_graph, "out_link")
    with pytest.raises(GraphStructureError):
        build_link_graph(directed_path, "undirected_link")
    g = TerminalGraph.build("undirected", {"a": Vertex(terminal=True), "b": Vertex(terminal=True)}, [("a", "b")])
    with pytest.raises(GraphStructureError):
        build_link_graph(g, "undirected_link")


def test_empty_matching():
    g = TerminalGraph.build("undirected", {"a": Vertex(terminal=True), "b": Vertex(terminal=True)})
    matching = maximum_matching(build_link_graph(g, "undirected_link"))
    assert matching == Matching()
    assert matching.size == 0


def test_complete_two_by_two():
    left = (("a", "b"), ("b", "a"))
    right = (("a", "u"), ("a", "v"))
    link = LinkGraph("undirected_link", left, right, {pair: right for pair in left})
    matching = maximum_matching(link)
    assert matching.size == 2
    assert matching.is_valid_for(link)


def test_star_matching(star_graph):
    link = build_link_graph(star_graph, "undirected_link")
    matching = maximum_matching(link)
    assert len(matching) == 3
    assert matching.is_valid_for(link)
    assert {edge for _, edge in matching.pairs} == {("a", "v"), ("b", "v"), ("c", "v")}


def test_augmenting_path_is_followed():
    # 贪心会让 p1 占用 e1，需要沿增广路把 p1 换到 e2
    p1, p2 = ("a", "b"), ("b", "a")
    e1, e2 = ("a", "u"), ("a", "v")
    link = LinkGraph("undirected_link", (p1, p2), (e1, e2), {p1: (e1, e2), p2: (e1,)})
    matching = maximum_matching(link)
    assert matching.edge_of(p1) == e2
    assert matching.edge_of(p2) == e1


@pytest.mark.parametrize("seed", range(200))
def test_matching_is_maximum(seed):
    rng = random.Random(seed)
    directed = seed % 2 == 1
    g, _ = subdivide_terminal_edges(
        random_quasi_bipartite(
            rng, rng.randint(2, 5), rng.randint(0, 8), rng.choice([0.2, 0.5, 0.8]), directed=directed
        )
    )
    for flavor in ("out_link", "in_link") if directed else ("undirected_link",):
        link = build_link_graph(g, flavor)
        matching = maximum_matching(link)
        assert matching.is_valid_for(link)
        assert matching.size == reference_matching_size(link)


@pytest.mark.parametrize("seed", range(100))
def test_link_graph_matches_length_two_paths(seed):
    rng = random.Random(seed)
    directed = seed % 2 == 0
    g, _ = subdivide_terminal_edges(
        random_quasi_bipartite(rng, rng.randint(2, 5), rng.randint(0, 7), 0.5, directed=directed)
    )
    # 逐个枚举 a → v → b，不依赖 build_link_graph 的遍历方式
    paths = [
        (a, v, b)
        for a in g.terminals
        for b in g.terminals
        for v in g.nonterminals
        if a != b and g.has_edge(a, v) and g.has_edge(v, b)
    ]
    for flavor in ("out_link", "in_link") if directed else ("undirected_link",):
        link = build_link_graph(g, flavor)
        expected = [
            ((a, b), (v, b) if flavor == "in_link" else canonical_edge(a, v, directed)) for a, v, b in paths
        ]
        assert len(link) == len(paths)
        assert sorted(link.adjacencies()) == sorted(expected)
        assert all(edge in g.edge_set for _, edge in link.adjacencies())

def test_matching_is_deterministic():
    rng = random.Random(7)
    g, _ = subdivide_terminal_edges(random_quasi_bipartite(rng, 5, 8, 0.6))
    link = build_link_graph(g, "undirected_link")
    assert maximum_matching(link) == maximum_matching(build_link_graph(g, "undirected_link"))


def test_link_graph_path_filter(directed_path):
    assert len(build_link_graph(directed_path, "out_link")) == 1
    rejected = build_link_graph(directed_path, "out_link", lambda a, v, b: v != "v")
    assert len(rejected) == 0
    assert rejected.right == directed_path.edges
