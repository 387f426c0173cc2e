from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import TYPE_CHECKING

from pydantic import ValidationError

from src.core.config import GenLowerOptions, MincutOptions, SparsifyOptions, StatsOptions, VerifyOptions
from src.core.constants import EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAILED, PROGRAM_NAME, PROGRAM_VERSION
from src.core.exceptions import SparsifierError
from src.cut import mincut
from src.graph import max_component_size, read_graph, serialize_graph, weak_components, write_graph
from src.lowerbound import generate_gk
from src.schemas.cut import CutQuery
from src.sparsifier import check_size_bounds, find_tau_separator, provenance_lines, sparsify
from src.utils.logging import exception_logger, set_log_level, system_logger
from src.utils.tools import Timer, fmt_bool, fmt_set
from src.verifier import verify_sparsifier

if TYPE_CHECKING:
    from collections.abc import Callable, Sequence


def build_parser() -> argparse.ArgumentParser:
    # 全局日志参数，放在子命令前后均可
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--debug", action="store_true", default=argparse.SUPPRESS, help="输出调试日志")
    common.add_argument(
        "--log-level", dest="log_level", default=argparse.SUPPRESS, help="控制台日志级别，如 DEBUG / INFO / WARNING"
    )

    parser = argparse.ArgumentParser(prog=PROGRAM_NAME, description="点割稀疏化工具", parents=[common])
    parser.add_argument("--version", action="version", version=f"%(prog)s {PROGRAM_VERSION}")
    commands = parser.add_subparsers(dest="command", required=True)

    sparsify_parser = commands.add_parser("sparsify", parents=[common], help="构造点割稀疏图")
    sparsify_parser.add_argument("--input", required=True)
    sparsify_parser.add_argument("--output", required=True)
    sparsify_parser.add_argument("--mode", choices=["auto", "qb", "tau", "separator"], default="auto")
    sparsify_parser.add_argument("--tau", type=int)
    sparsify_parser.add_argument("--provenance", action="store_true", help="在输出文件末尾追加来源注释")

    verify_parser = commands.add_parser("verify", parents=[common], help="穷举验证稀疏图")
    verify_parser.add_argument("--graph", required=True)
    verify_parser.add_argument("--sparsifier", required=True)
    verify_parser.add_argument("--mode", choices=["bipartition", "full", "paranoid"], default="full")
    verify_parser.add_argument("--cross-check", dest="cross_check", action="store_true")
    verify_parser.add_argument("--json", dest="json_output", action="store_true")
    verify_parser.add_argument("--jobs", type=int)

    mincut_parser = commands.add_parser("mincut", parents=[common], help="计算最小点割")
    mincut_parser.add_argument("--graph", required=True)
    mincut_parser.add_argument("--source-set", dest="sources", required=True)
    mincut_parser.add_argument("--sink-set", dest="sinks", required=True)
    mincut_parser.add_argument("--delete", dest="deleted")
    mincut_parser.add_argument("--witness", action="store_true")

    lower_parser = commands.add_parser("gen-lower", parents=[common], help="生成下界实例 G_k")
    lower_parser.add_argument("--k", type=int, required=True)
    lower_parser.add_argument("--remove", help="删除的 v_i_j，形如 1:2,3:4")
    lower_parser.add_argument("--unweighted", action="store_true", help="展开为单位权图")
    lower_parser.add_argument("--output", required=True, help="输出文件，- 表示标准输出")

    stats_parser = commands.add_parser("stats", parents=[common], help="输出图的统计信息")
    stats_parser.add_argument("--graph", required=True)
    stats_parser.add_argument("--tau", type=int, help="贪心 separator 的 τ，默认取 G∖T 最大分量大小 c")

    return parser


def cmd_sparsify(options: SparsifyOptions) -> int:
    g = read_graph(options.input)
    with Timer() as timer:
        result = sparsify(g, options.effective_mode, options.tau)
    bound_ok = check_size_bounds(result)
    comments = provenance_lines(result) if options.provenance else None
    write_graph(result.sparsifier, options.output, comments)
    system_logger.info(f"稀疏化完成 ({result.stats.construction})，用时 {timer.cost:.3f}s")
    print(result.stats.line(bound_ok))
    return EXIT_OK


def cmd_verify(options: VerifyOptions) -> int:
    g = read_graph(options.graph)
    h = read_graph(options.sparsifier)
    with Timer() as timer:
        report = verify_sparsifier(g, h, options.mode, cross_check=options.cross_check, jobs=options.jobs)
    system_logger.info(f"验证完成，用时 {timer.cost:.3f}s")
    print(report.model_dump_json(by_alias=True) if options.json_output else report.text())
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def cmd_mincut(options: MincutOptions) -> int:
    g = read_graph(options.graph)
    result = mincut(g, CutQuery.of(options.sources, options.sinks, options.deleted))
    print(result.value)
    if options.witness:
        print(f"witness={fmt_set(result.witness or ())}")
    return EXIT_OK


def cmd_gen_lower(options: GenLowerOptions) -> int:
    inst = generate_gk(options.k, options.remove)
    graph = inst.unweighted() if options.unweighted else inst.graph
    if options.to_stdout:
        sys.stdout.write(serialize_graph(graph).decode("utf-8"))
    else:
        write_graph(graph, Path(options.output))
    return EXIT_OK


def cmd_stats(options: StatsOptions) -> int:
    g = read_graph(options.graph)
    c = max_component_size(g)
    components = len(weak_components(g, g.terminals))
    quasi_bipartite = g.is_quasi_bipartite()
    line = (
        f"orientation={g.orientation} k={g.k} V={len(g.vertices)} E={len(g.edges)} c={c} "
        f"components={components} quasi_bipartite={fmt_bool(quasi_bipartite)}"
    )
    if not quasi_bipartite:
        tau = options.tau if options.tau is not None else c
        line += f" greedy_separator={find_tau_separator(g, tau).size}"
    print(line)
    return EXIT_OK


COMMANDS: dict[str, tuple[type, Callable]] = {
    "sparsify": (SparsifyOptions, cmd_sparsify),
    "verify": (VerifyOptions, cmd_verify),
    "mincut": (MincutOptions, cmd_mincut),
    "gen-lower": (GenLowerOptions, cmd_gen_lower),
    "stats": (StatsOptions, cmd_stats),
}


def _dispatch(args: argparse.Namespace) -> int:
    options_type, handler = COMMANDS[args.command]
    try:
        options = options_type.model_validate(vars(args))
    except ValidationError as exc:
        messages = "; ".join(error["msg"] for error in exc.errors())
        system_logger.error(f"参数错误: {messages}")
        return EXIT_USAGE

    try:
        return handler(options)
    except SparsifierError as exc:
        system_logger.error(str(exc))
    except OSError as exc:
        system_logger.error(f"文件读写失败: {exc}")
    return EXIT_USAGE


def run(argv: Sequence[str] | None = None) -> int:
    """
    解析命令行并执行，返回退出码：0 成功，1 验证失败，2 参数 / 输入 / 规模错误
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    try:
        if getattr(args, "debug", False):
            set_log_level("DEBUG")
        elif getattr(args, "log_level", None):
            set_log_level(args.log_level)
    except ValueError as exc:
        system_logger.error(f"无效的日志级别: {exc}")
        return EXIT_USAGE

    status = EXIT_USAGE
    with exception_logger("命令执行异常"):
        status = _dispatch(args)
    return status


def main() -> None:
    sys.exit(run())
