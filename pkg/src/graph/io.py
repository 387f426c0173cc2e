from __future__ import annotations

from typing import TYPE_CHECKING

from src.core.exceptions import GraphFormatError, GraphStructureError

from .graph import VERTEX_ID_PATTERN, TerminalGraph, Vertex, canonical_edge

if TYPE_CHECKING:
    from pathlib import Path

HEADERS = {"graph directed": "directed", "graph undirected": "undirected"}


def _parse_flag(value: str, line: int) -> bool:
    if value not in {"0", "1"}:
        raise GraphFormatError(f"terminal 只能为 0 或 1，得到 {value!r}", line)
    return value == "1"


def _parse_weight(value: str, line: int) -> int:
    try:
        weight = int(value)
    except ValueError:
        raise GraphFormatError(f"weight 不是整数: {value!r}", line) from None
    if weight < 1:
        raise GraphFormatError(f"weight 必须 >= 1，得到 {weight}", line)
    return weight


def _parse_node(tokens: list[str], line: int) -> tuple[str, Vertex]:
    if len(tokens) < 2:
        raise GraphFormatError("node 行缺少顶点 id", line)
    vid = tokens[1]
    if not VERTEX_ID_PATTERN.match(vid):
        raise GraphFormatError(f"非法顶点 id: {vid!r}", line)

    options: dict[str, str] = {}
    for token in tokens[2:]:
        key, sep, value = token.partition("=")
        if not sep or key not in {"terminal", "weight"}:
            raise GraphFormatError(f"无法识别的 node 参数: {token!r}", line)
        if key in options:
            raise GraphFormatError(f"重复的 node 参数: {key}", line)
        options[key] = value

    return vid, Vertex(
        terminal=_parse_flag(options["terminal"], line) if "terminal" in options else False,
        weight=_parse_weight(options["weight"], line) if "weight" in options else 1,
    )


def parse_graph(data: bytes | str) -> TerminalGraph:
    """
    解析文本格式的图

    格式（UTF-8，按行）::

        graph undirected
        # 注释
        node a terminal=1 weight=2
        node v
        edge a v

    节点与边可以任意顺序出现，所有错误都带行号。

    Raises:
        GraphFormatError: 格式错误、未知顶点、重复顶点、重复边、自环、weight < 1
    """
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as err:
            line = data.count(b"\n", 0, err.start) + 1
            raise GraphFormatError(f"不是合法的 UTF-8（字节偏移 {err.start}）", line) from err
    else:
        text = data

    orientation: str | None = None
    vertices: dict[str, Vertex] = {}
    edge_lines: list[tuple[int, str, str]] = []

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue

        if orientation is None:
            normalized = " ".join(line.split())
            if normalized not in HEADERS:
                raise GraphFormatError(f"缺少图头部 'graph directed' 或 'graph undirected'，得到 {line!r}", number)
            orientation = HEADERS[normalized]
            continue

        tokens = line.split()
        match tokens[0]:
            case "node":
                vid, vertex = _parse_node(tokens, number)
                if vid in vertices:
                    raise GraphFormatError(f"重复的顶点 id: {vid}", number)
                vertices[vid] = vertex
            case "edge":
                if len(tokens) != 3:
                    raise GraphFormatError("edge 行格式应为 'edge <src> <dst>'", number)
                edge_lines.append((number, tokens[1], tokens[2]))
            case "graph":
                raise GraphFormatError("重复的图头部", number)
            case _:
                raise GraphFormatError(f"无法识别的行: {line!r}", number)

    if orientation is None:
        raise GraphFormatError("空输入，缺少图头部")

    directed = orientation == "directed"
    seen: set[tuple[str, str]] = set()
    for number, u, v in edge_lines:
        if u == v:
            raise GraphFormatError(f"不允许自环: {u}", number)
        for vid in (u, v):
            if vid not in vertices:
                raise GraphFormatError(f"边引用了未知顶点: {vid}", number)
        edge = canonical_edge(u, v, directed)
        if edge in seen:
            raise GraphFormatError(f"重复的边: {u} {v}", number)
        seen.add(edge)

    try:
        return TerminalGraph.build(orientation, vertices, ((u, v) for _, u, v in edge_lines))  # type: ignore[arg-type]
    except GraphStructureError as exc:
        raise GraphFormatError(str(exc)) from exc


def serialize_graph(g: TerminalGraph, comments: list[str] | None = None) -> bytes:
    """
    输出规范文本：头部、按 id 升序的节点、按 (src, dst) 升序的边，最后是可选的注释行
    """
    lines = [f"graph {g.orientation}"]
    for vid, vertex in g.vertices.items():
        parts = ["node", vid]
        if vertex.terminal:
            parts.append("terminal=1")
        if vertex.weight != 1:
            parts.append(f"weight={vertex.weight}")
        lines.append(" ".join(parts))
    lines.extend(f"edge {u} {v}" for u, v in g.edges)
    if comments:
        lines.extend(comment if comment.startswith("#") else f"# {comment}" for comment in comments)
    return ("\n".join(lines) + "\n").encode("utf-8")


def read_graph(path: Path) -> TerminalGraph:
    return parse_graph(path.read_bytes())


def write_graph(g: TerminalGraph, path: Path, comments: list[str] | None = None) -> None:
    path.write_bytes(serialize_graph(g, comments))
