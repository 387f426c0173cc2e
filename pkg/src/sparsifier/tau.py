from __future__ import annotations

from src.graph import (
    Edge,
    TerminalGraph,
    canonical_edge,
    component_passages,
    contract_nonterminal_components,
    max_component_size,
)
from src.schemas.sparsifier import ProvenanceEntry, SparsifierResult

from .quasi_bipartite import require_unweighted, sparsifier_logger, sparsify_qb


def sparsify_tau(g: TerminalGraph) -> SparsifierResult:
    """
    τ-quasi-bipartite 图的点割稀疏化

    收缩 G∖T 的每个（弱）连通分量得到 quasi-bipartite 商图，在商图上稀疏化后再展开：
    有向图只为能在分量内部真正走通的路径 a → C → b 建立连接；
    被保留的分量恢复全部顶点与内部边，终端与分量之间只恢复商图中被选中方向的原边。
    所有分量都是单点（c ≤ 1）时直接使用 quasi-bipartite 构造。

    Raises:
        GraphStructureError: 带权输入
    """
    require_unweighted(g)
    c = max_component_size(g)
    if c <= 1:
        result = sparsify_qb(g)
        stats = result.stats.model_copy(update={"components": len(g.nonterminals), "c": c})
        return result.model_copy(update={"stats": stats})

    contraction = contract_nonterminal_components(g)
    passages = component_passages(g, contraction) if g.directed else None

    def passable(a: str, v: str, b: str) -> bool:
        # 弱连通分量内部不一定有 a 到 b 的通路
        return passages is None or v not in contraction.component_map or (a, v, b) in passages

    inner = sparsify_qb(contraction.quotient, passable)
    kept_components = set(inner.sparsifier.nonterminals)
    selected = set(inner.sparsifier.edges)

    # 选中每个分量的匹配对，展开后记为分量内部边的来源
    by_quotient_edge: dict[Edge, list[ProvenanceEntry]] = {}
    by_component: dict[str, list[ProvenanceEntry]] = {}
    for entry in inner.provenance:
        by_quotient_edge.setdefault(entry.edge, []).append(entry)
        for vid in entry.edge:
            if vid in contraction.component_map:
                by_component.setdefault(vid, []).append(entry)

    edges: list[Edge] = []
    provenance: list[ProvenanceEntry] = []
    for u, v in g.edges:
        cu, cv = contraction.member_of.get(u, u), contraction.member_of.get(v, v)
        if cu == cv:
            if cu not in kept_components:
                continue
            edges.append((u, v))
            provenance.extend(
                entry.model_copy(update={"edge": (u, v), "component": cu}) for entry in by_component.get(cu, ())
            )
            continue
        quotient_edge = canonical_edge(cu, cv, g.directed)
        if quotient_edge not in selected:
            continue
        edges.append((u, v))
        provenance.extend(
            entry.model_copy(update={"edge": (u, v)}) for entry in by_quotient_edge.get(quotient_edge, ())
        )

    vertex_ids = set(g.terminals)
    for cid in kept_components:
        vertex_ids.update(contraction.component_map[cid])

    sparsifier = TerminalGraph.build(g.orientation, {vid: g.vertices[vid] for vid in vertex_ids}, edges)
    provenance = sorted(
        set(provenance), key=lambda entry: (entry.edge, entry.pair, entry.flavor, entry.component or "")
    )
    stats = inner.stats.model_copy(
        update={
            "construction": "tau",
            "k": g.k,
            "k_effective": g.k,
            "vertices": len(sparsifier.vertices),
            "edges": len(sparsifier.edges),
            "nonterminals": len(sparsifier.nonterminals),
            "components": contraction.component_count,
            "c": contraction.max_component_size,
        }
    )
    sparsifier_logger.debug(
        f"τ 稀疏化: {g.summary()} ℓ={contraction.component_count} c={contraction.max_component_size}"
        f" 保留 {len(kept_components)} 个分量 -> {sparsifier.summary()}"
    )
    return SparsifierResult(sparsifier=sparsifier, provenance=tuple(provenance), stats=stats)
