from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from src.utils.tools import fmt_set

VerifyMode = Literal["bipartition", "full", "paranoid"]


class Witness(BaseModel):
    """
    第一个不一致的查询

    Attributes:
        sources (tuple[str, ...]): A
        sinks (tuple[str, ...]): B
        deleted (tuple[str, ...]): D
        value_in_g (int): 原图中的割值
        value_in_sparsifier (int): 稀疏图中的割值
    """

    model_config = ConfigDict(frozen=True)

    sources: tuple[str, ...]
    sinks: tuple[str, ...]
    deleted: tuple[str, ...] = ()
    value_in_g: int
    value_in_sparsifier: int


class VerificationReport(BaseModel):
    """
    model_dump_json(by_alias=True) 输出 {mode, queries, outcome, witness}
    """

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    mode: VerifyMode
    queries_checked: int = Field(serialization_alias="queries")
    outcome: Literal["pass", "fail"]
    witness: Witness | None = None

    @property
    def passed(self) -> bool:
        return self.outcome == "pass"

    def text(self) -> str:
        lines = [f"mode={self.mode} queries={self.queries_checked} outcome={self.outcome}"]
        if self.witness is not None:
            w = self.witness
            lines.append(
                f"witness A={fmt_set(w.sources)} B={fmt_set(w.sinks)} D={fmt_set(w.deleted)} "
                f"value_in_g={w.value_in_g} value_in_sparsifier={w.value_in_sparsifier}"
            )
        return "\n".join(lines)
