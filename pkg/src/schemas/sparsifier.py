from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, model_validator

from src.graph import TerminalGraph

Construction = Literal["qb", "tau", "separator"]
SparsifyMode = Literal["auto", "qb", "tau", "separator"]


class ProvenanceEntry(BaseModel):
    """
    保留边的来源：哪个匹配对 (a,b) 经由哪种 link graph 选中了它

    component 非空时表示该边是被保留分量的内部边，pair 为选中该分量的匹配对。
    """

    model_config = ConfigDict(frozen=True)

    edge: tuple[str, str]
    pair: tuple[str, str]
    flavor: Literal["undirected_link", "out_link", "in_link"]
    component: str | None = None

    def line(self) -> str:
        u, v = self.edge
        a, b = self.pair
        text = f"edge {u} {v} from pair ({a},{b}) via {self.flavor}"
        if self.component:
            text += f" inside {self.component}"
        return text


class SparsifierStats(BaseModel):
    """
    Attributes:
        k (int): 原终端数
        k_effective (int): 实际参与构造的终端数，扩展终端流程中为 |T ∪ S'|
        vertices (int): |V'|
        edges (int): |E'|
        nonterminals (int): |V'∖T|
        matching (int | None): 无向构造的 |M|
        matching_out / matching_in (int | None): 有向构造的 |M_out|、|M_in|
        components (int | None): ℓ，G∖T 的分量数
        c (int | None): 最大分量大小
        tau / separator / rounds (int | None): 扩展终端流程的 τ、|S'| 与贪心轮数
    """

    model_config = ConfigDict(frozen=True)

    construction: Construction
    directed: bool
    k: int
    k_effective: int
    vertices: int
    edges: int
    nonterminals: int
    matching: int | None = None
    matching_out: int | None = None
    matching_in: int | None = None
    components: int | None = None
    c: int | None = None
    tau: int | None = None
    separator: int | None = None
    rounds: int | None = None

    def line(self, bound_ok: bool) -> str:
        return f"k={self.k} V'={self.vertices} E'={self.edges} bound_ok={'true' if bound_ok else 'false'}"


class SparsifierResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    sparsifier: TerminalGraph
    provenance: tuple[ProvenanceEntry, ...] = ()
    stats: SparsifierStats

    def provenance_of(self, u: str, v: str) -> list[ProvenanceEntry]:
        return [entry for entry in self.provenance if entry.edge == (u, v)]


class SeparatorResult(BaseModel):
    """
    τ-separator

    Attributes:
        separator (tuple[str, ...]): S'，按 id 升序
        tau (int): τ
        rounds (int | None): 贪心轮数，每轮加入 τ+1 个顶点；精确搜索的结果为 None
    """

    model_config = ConfigDict(frozen=True)

    separator: tuple[str, ...]
    tau: int
    rounds: int | None = None

    @model_validator(mode="after")
    def check_rounds(self):
        if self.rounds is not None and len(self.separator) != (self.tau + 1) * self.rounds:
            raise ValueError(f"|S'| = {len(self.separator)} 与 (τ+1)·rounds = {(self.tau + 1) * self.rounds} 不符")
        return self

    @property
    def size(self) -> int:
        return len(self.separator)
