from __future__ import annotations

from typing import TYPE_CHECKING

from src.core.exceptions import GraphStructureError
from src.graph import Edge, TerminalGraph, canonical_edge, subdivide_terminal_edges
from src.link import build_link_graph, maximum_matching
from src.schemas.sparsifier import ProvenanceEntry, SparsifierResult, SparsifierStats
from src.utils.logging import logger

if TYPE_CHECKING:
    from src.graph import SubdivisionRecord
    from src.link import LinkFlavor, Matching, PathFilter

sparsifier_logger = logger.bind(name="sparsifier")


def require_unweighted(g: TerminalGraph) -> None:
    if not g.is_unweighted():
        raise GraphStructureError("稀疏化只支持单位权图，带权图请先调用 expand_weighted")


def _require_input(g: TerminalGraph, directed: bool) -> None:
    if g.directed != directed:
        raise GraphStructureError(f"需要{'有' if directed else '无'}向图，输入为 {g.orientation}")
    require_unweighted(g)
    if not g.is_quasi_bipartite():
        raise GraphStructureError("输入图不是 quasi-bipartite，存在两端都不是终端的边")


def _selected_paths(matching: Matching, flavor: LinkFlavor) -> list[tuple[str, str, str, LinkFlavor]]:
    """将匹配中的每一对 ((a,b), e) 还原为路径 a → v → b"""
    paths = []
    for (a, b), (u, w) in matching.pairs:
        if flavor == "in_link":
            v = u
        else:
            v = w if u == a else u
        paths.append((a, v, b, flavor))
    return paths


def _assemble(
    g: TerminalGraph,
    work: TerminalGraph,
    record: SubdivisionRecord,
    paths: list[tuple[str, str, str, LinkFlavor]],
) -> tuple[TerminalGraph, tuple[ProvenanceEntry, ...]]:
    """
    根据选中的路径组装 G'，并撤销细分

    细分顶点 v_e 的两条边都被选中时还原为原边 e，只选中一条时连同 v_e 一起丢弃。
    """
    selected: dict[Edge, set[tuple[tuple[str, str], LinkFlavor]]] = {}
    for a, v, b, flavor in paths:
        for edge in (canonical_edge(a, v, work.directed), canonical_edge(v, b, work.directed)):
            selected.setdefault(edge, set()).add(((a, b), flavor))

    origin = record.reverse
    halves: dict[str, list[Edge]] = {}
    kept: dict[Edge, set[tuple[tuple[str, str], LinkFlavor]]] = {}
    for edge, sources in selected.items():
        fresh = next((vid for vid in edge if vid in origin), None)
        if fresh is None:
            kept[edge] = sources
            continue
        halves.setdefault(fresh, []).append(edge)

    for fresh, edges in halves.items():
        if len(edges) < 2:
            continue
        sources = set().union(*(selected[edge] for edge in edges))
        kept[origin[fresh]] = sources

    vertex_ids = set(g.terminals)
    for u, v in kept:
        vertex_ids.update((u, v))

    sparsifier = TerminalGraph.build(g.orientation, {vid: g.vertices[vid] for vid in vertex_ids}, kept)
    entries = [
        ProvenanceEntry(edge=edge, pair=pair, flavor=flavor)
        for edge, sources in kept.items()
        for pair, flavor in sources
    ]
    entries.sort(key=lambda entry: (entry.edge, entry.pair, entry.flavor))
    return sparsifier, tuple(entries)


def sparsify_qb_undirected(g: TerminalGraph) -> SparsifierResult:
    """
    无向 quasi-bipartite 图的点割稀疏化

    细分终端-终端边，在 link graph 上求最大匹配 M，对每个匹配对 ((a,b), {a,v}) 保留 {a,v} 与 {v,b}。
    |E'| ≤ 2|M| ≤ 2k(k-1)。

    Raises:
        GraphStructureError: 有向、带权或不是 quasi-bipartite
    """
    _require_input(g, directed=False)
    work, record = subdivide_terminal_edges(g)
    matching = maximum_matching(build_link_graph(work, "undirected_link"))
    sparsifier, provenance = _assemble(g, work, record, _selected_paths(matching, "undirected_link"))

    stats = SparsifierStats(
        construction="qb",
        directed=False,
        k=g.k,
        k_effective=g.k,
        vertices=len(sparsifier.vertices),
        edges=len(sparsifier.edges),
        nonterminals=len(sparsifier.nonterminals),
        matching=matching.size,
    )
    sparsifier_logger.debug(f"无向 quasi-bipartite 稀疏化: {g.summary()} -> {sparsifier.summary()} |M|={matching.size}")
    return SparsifierResult(sparsifier=sparsifier, provenance=provenance, stats=stats)


def sparsify_qb_directed(g: TerminalGraph, path_filter: PathFilter | None = None) -> SparsifierResult:
    """
    有向 quasi-bipartite 图的点割稀疏化

    分别在 out-link 与 in-link 图上求最大匹配 M_out、M_in；
    每个匹配对代表一条路径 a → v → b，保留 (a,v) 与 (v,b)。|E'| ≤ 4k(k-1)。
    path_filter 用于剔除商图中实际不可达的路径 a → C → b。
    """
    _require_input(g, directed=True)
    work, record = subdivide_terminal_edges(g)
    out_matching = maximum_matching(build_link_graph(work, "out_link", path_filter))
    in_matching = maximum_matching(build_link_graph(work, "in_link", path_filter))
    paths = _selected_paths(out_matching, "out_link") + _selected_paths(in_matching, "in_link")
    sparsifier, provenance = _assemble(g, work, record, paths)

    stats = SparsifierStats(
        construction="qb",
        directed=True,
        k=g.k,
        k_effective=g.k,
        vertices=len(sparsifier.vertices),
        edges=len(sparsifier.edges),
        nonterminals=len(sparsifier.nonterminals),
        matching_out=out_matching.size,
        matching_in=in_matching.size,
    )
    sparsifier_logger.debug(
        f"有向 quasi-bipartite 稀疏化: {g.summary()} -> {sparsifier.summary()} "
        f"|M_out|={out_matching.size} |M_in|={in_matching.size}"
    )
    return SparsifierResult(sparsifier=sparsifier, provenance=provenance, stats=stats)


def sparsify_qb(g: TerminalGraph, path_filter: PathFilter | None = None) -> SparsifierResult:
    return sparsify_qb_directed(g, path_filter) if g.directed else sparsify_qb_undirected(g)
