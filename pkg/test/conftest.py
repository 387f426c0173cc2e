import sys
from pathlib import Path

import pytest

# Ensure project root
ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from src.graph import TerminalGraph, Vertex, parse_graph
from src.lowerbound import generate_gk

PATH_TEXT = "graph undirected\nnode a terminal=1\nnode v\nnode b terminal=1\nedge a v\nedge v b\n"


@pytest.fixture
def path_graph() -> TerminalGraph:
    # a - v - b
    return parse_graph(PATH_TEXT)


@pytest.fixture
def star_graph() -> TerminalGraph:
    # 非终端 v 与终端 a, b, c 相邻
    return TerminalGraph.build(
        "undirected",
        {"a": Vertex(terminal=True), "b": Vertex(terminal=True), "c": Vertex(terminal=True), "v": Vertex()},
        [("a", "v"), ("b", "v"), ("c", "v")],
    )


@pytest.fixture
def directed_path() -> TerminalGraph:
    return TerminalGraph.build(
        "directed", {"a": Vertex(terminal=True), "v": Vertex(), "b": Vertex(terminal=True)}, [("a", "v"), ("v", "b")]
    )


@pytest.fixture
def g3():
    return generate_gk(3)


@pytest.fixture
def g4():
    return generate_gk(4)
