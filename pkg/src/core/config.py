from __future__ import annotations

from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.utils.tools import default_jobs, split_list


class CommandOptions(BaseModel):
    """各子命令参数的公共基类，参数在任何计算开始前完成校验"""

    model_config = ConfigDict(frozen=True, extra="ignore")


class SparsifyOptions(CommandOptions):
    input: Path
    output: Path
    mode: Literal["auto", "qb", "tau", "separator"] = "auto"
    tau: int | None = Field(default=None, ge=1)
    provenance: bool = False

    @model_validator(mode="after")
    def check_tau(self):
        if self.mode == "separator" and self.tau is None:
            raise ValueError("--mode separator 需要同时指定 --tau")
        return self

    @property
    def effective_mode(self) -> Literal["auto", "qb", "tau", "separator"]:
        """指定 --tau 时总是走扩展终端流程"""
        return "separator" if self.tau is not None else self.mode


class VerifyOptions(CommandOptions):
    graph: Path
    sparsifier: Path
    mode: Literal["bipartition", "full", "paranoid"] = "full"
    cross_check: bool = False
    json_output: bool = False
    jobs: int = Field(default_factory=default_jobs, ge=1)

    @field_validator("jobs", mode="before")
    @classmethod
    def fill_jobs(cls, v):
        return default_jobs() if v is None else v


class MincutOptions(CommandOptions):
    graph: Path
    sources: tuple[str, ...]
    sinks: tuple[str, ...]
    deleted: tuple[str, ...] = ()
    witness: bool = False

    @field_validator("sources", "sinks", "deleted", mode="before")
    @classmethod
    def parse_list(cls, v):
        if v is None:
            return ()
        if isinstance(v, str):
            return tuple(split_list(v))
        return tuple(v)


class GenLowerOptions(CommandOptions):
    k: int = Field(ge=2)
    remove: tuple[tuple[int, int], ...] = ()
    unweighted: bool = False
    output: str

    @field_validator("remove", mode="before")
    @classmethod
    def parse_pairs(cls, v):
        """解析 "i:j,i:j" 形式的下标列表"""
        if v is None:
            return ()
        if not isinstance(v, str):
            return v
        pairs = []
        for item in split_list(v):
            left, sep, right = item.partition(":")
            if not sep:
                raise ValueError(f"无法解析下标对 {item!r}，应为 i:j")
            try:
                pairs.append((int(left), int(right)))
            except ValueError:
                raise ValueError(f"无法解析下标对 {item!r}，应为整数 i:j") from None
        return tuple(pairs)

    @model_validator(mode="after")
    def check_pairs(self):
        for i, j in self.remove:
            if not 1 <= i < j <= self.k:
                raise ValueError(f"下标对 {i}:{j} 不满足 1 ≤ i < j ≤ {self.k}")
        return self

    @property
    def to_stdout(self) -> bool:
        return self.output == "-"


class StatsOptions(CommandOptions):
    graph: Path
    tau: int | None = Field(default=None, ge=1)

