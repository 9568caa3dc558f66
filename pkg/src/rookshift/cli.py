"""Command line interface: shift, count, verify, graph, report.

Exit codes: 0 when the command succeeds (and, for ``verify``, the checked
statement holds); 1 when a verifier finds a counterexample; 2 for unusable
arguments or unparsable input; 3 for well-formed input that breaks a data
invariant, such as a dot outside its column.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
from dataclasses import dataclass
from multiprocessing import Pool

from .core import (
    Board,
    InvariantViolation,
    PatternSet,
    Permutation,
    Placement,
)
from .enumeration import (
    count_avoiders,
    enumerate_placements,
    verify_bwx_bijection,
    verify_involution_transfer,
    verify_motzkin_identities,
    verify_wilf_set,
)
from .rewriting import (
    global_commutation_check,
    local_commutation_check,
    normal_form,
)
from .shifts import ShiftTrace, phi_star, psi_star

# Exhaustive sweeps above this width stop being desk-scale.
_MAX_N = 12


@dataclass
class CliConfig:
    """Everything a subcommand needs, decoded from parsed arguments."""

    command: str
    check: str | None = None
    op: str | None = None
    k: int | None = None
    n: int | None = None
    n_max: int | None = None
    board: Board | None = None
    perm: Permutation | None = None
    patterns: PatternSet | None = None
    involutions: bool = False
    fmt: str = "text"
    trace: bool = False
    trace_cap: int | None = None
    seed_perms: tuple[Permutation, ...] = ()
    render: str | None = None
    out_dir: str | None = None
    jobs: int = 1
    seed: int | None = None
    random_strategies: int = 0


def _require_desk_scale(n: int) -> None:
    if n > _MAX_N:
        raise ValueError(f"exhaustive runs are capped at n = {_MAX_N}, got {n}")
    if n < 0:
        raise ValueError("n must be nonnegative")


def _require_k(config: CliConfig) -> int:
    if config.k is None or config.k < 2:
        raise ValueError("this command needs --k with a value of at least 2")
    return config.k


def _board_for(config: CliConfig, n_fallback: int | None = None) -> Board:
    if config.board is not None:
        _require_desk_scale(config.board.n_columns)
        return config.board
    if config.n is not None:
        _require_desk_scale(config.n)
        return Board.square(config.n)
    if n_fallback is not None:
        return Board.square(n_fallback)
    raise ValueError("give either --board or --n")


def _placement_for(config: CliConfig) -> Placement:
    if config.perm is None:
        raise ValueError("this command needs --perm")
    board = config.board or Board.square(len(config.perm))
    return Placement(board, config.perm)


def _print_trace(trace: ShiftTrace) -> None:
    for index, step in enumerate(trace.steps, start=1):
        moved = " ".join(str(i) for i in step.moved_positions)
        print(
            f"step {index}: {step.op}  moved positions ({moved})  "
            f"{step.perm_before} -> {step.perm_after}  "
            f"inversions {step.inv_before} -> {step.inv_after}"
        )
    if trace.total_steps > len(trace.steps):
        print(f"... {trace.total_steps - len(trace.steps)} further steps not recorded")


def _trace_json(trace: ShiftTrace) -> list[dict]:
    return [
        {
            "op": step.op,
            "moved_positions": list(step.moved_positions),
            "perm_before": list(step.perm_before.values),
            "perm_after": list(step.perm_after.values),
            "inv_before": step.inv_before,
            "inv_after": step.inv_after,
        }
        for step in trace.steps
    ]


def cmd_shift(config: CliConfig) -> int:
    from .rewriting import ShiftProgram, apply_program

    k = _require_k(config)
    placement = _placement_for(config)
    if config.op == "phi-star":
        result, trace = phi_star(placement, k, config.trace_cap)
    elif config.op == "psi-star":
        result, trace = psi_star(placement, k, config.trace_cap)
    else:
        word = "phi" if config.op == "phi" else "psi"
        result, trace = apply_program(placement, k, ShiftProgram((word,)))
    if config.fmt == "json":
        payload = {
            "op": config.op,
            "k": k,
            "board": list(placement.board.column_heights),
            "perm": list(placement.perm.values),
            "result": list(result.perm.values),
            "total_steps": trace.total_steps,
        }
        if config.trace:
            payload["steps"] = _trace_json(trace)
        print(json.dumps(payload, indent=2, sort_keys=True))
        return 0
    if config.trace:
        _print_trace(trace)
    print(result.perm)
    return 0


def cmd_count(config: CliConfig) -> int:
    if config.patterns is None:
        raise ValueError("count needs at least one --avoid pattern")
    board = _board_for(config)
    report = count_avoiders(board, config.patterns, symmetric_only=config.involutions)
    if config.fmt == "json":
        print(json.dumps(report.to_json_dict(), indent=2, sort_keys=True))
    else:
        print(report.count)
    return 0


def _jobs_for(config: CliConfig) -> int:
    if config.jobs > 1:
        return config.jobs
    fallback = os.environ.get("FERRERS_JOBS", "")
    if config.jobs == 1 and fallback.strip():
        try:
            return max(1, int(fallback))
        except ValueError:
            raise ValueError(f"FERRERS_JOBS must be an integer, got {fallback!r}")
    return max(1, config.jobs)


def _commutation_batch(args: tuple[tuple[int, ...], tuple[tuple[int, ...], ...], int, str]):
    heights, perm_batch, k, check = args
    board = Board(heights)
    for values in perm_batch:
        p = Placement(board, Permutation(values))
        if check == "global":
            if not global_commutation_check(p, k):
                return values
        else:
            report = local_commutation_check(p, k)
            if report.applicable and not (report.holds and report.both_still_contain):
                return values
    return None


def _sweep_commutation(board: Board, k: int, jobs: int, check: str):
    """Scan placements in lexicographic order; return (cases, first failure)."""
    perms = (p.perm.values for p in enumerate_placements(board))
    heights = board.column_heights
    cases = 0
    if jobs <= 1:
        for values in perms:
            cases += 1
            if _commutation_batch((heights, (values,), k, check)) is not None:
                return cases, values
        return cases, None
    batches = []
    while True:
        batch = tuple(itertools.islice(perms, 2048))
        if not batch:
            break
        batches.append((heights, batch, k, check))
        cases += len(batch)
    with Pool(jobs) as pool:
        for result in pool.imap(_commutation_batch, batches):
            if result is not None:
                pool.terminate()
                return cases, result
    return cases, None


def _verify_outcome(config: CliConfig, check: str, passed: bool, detail: str,
                    cases: int, counterexample: dict | None) -> int:
    if config.fmt == "json":
        payload = {
            "check": check,
            "pass": passed,
            "cases": cases,
            "detail": detail,
            "counterexample": counterexample,
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        status = "PASS" if passed else "FAIL"
        line = f"{status} {check}: {detail}"
        if not passed and counterexample:
            rendered = ", ".join(f"{key}={value}" for key, value in counterexample.items())
            line += f"; counterexample: {rendered}"
        print(line)
    return 0 if passed else 1


def cmd_verify(config: CliConfig) -> int:
    check = config.check
    jobs = _jobs_for(config)
    if check in ("commutation", "local-commutation"):
        k = _require_k(config)
        board = _board_for(config)
        kind = "global" if check == "commutation" else "local"
        cases, failure = _sweep_commutation(board, k, jobs, kind)
        detail = (
            f"checked {cases} placements on board {board or 'empty'} with k={k}"
        )
        counterexample = None
        if failure is not None:
            counterexample = {"perm": " ".join(map(str, failure)), "board": str(board), "k": k}
        return _verify_outcome(config, check, failure is None, detail, cases, counterexample)
    if check == "confluence":
        k = _require_k(config)
        board = _board_for(config)
        if config.random_strategies > 0 and config.seed is None:
            raise ValueError("--seed is required when --random-strategies is positive")
        strategies: list[tuple[str, int | None]] = [
            ("always-phi", None),
            ("always-psi", None),
            ("alternate", None),
        ]
        for offset in range(config.random_strategies):
            strategies.append(("random", (config.seed or 0) + offset))
        cases = 0
        for p in enumerate_placements(board):
            cases += 1
            outcomes = {
                normal_form(p, k, name, seed=seed) for name, seed in strategies
            }
            if len(outcomes) != 1:
                counterexample = {"perm": str(p.perm), "board": str(board), "k": k}
                detail = f"strategies disagreed after {cases} placements"
                return _verify_outcome(config, check, False, detail, cases, counterexample)
        detail = (
            f"{len(strategies)} strategies agree in result and step count on "
            f"{cases} placements (board {board}, k={k})"
        )
        return _verify_outcome(config, check, True, detail, cases, None)
    if check == "bwx":
        k = _require_k(config)
        board = _board_for(config)
        ok = verify_bwx_bijection(board, k)
        detail = f"iterated A-shift bijects the avoider classes on board {board} with k={k}"
        counterexample = None if ok else {"board": str(board), "k": k}
        return _verify_outcome(config, check, ok, detail, 1, counterexample)
    if check == "involution-transfer":
        k = _require_k(config)
        board = _board_for(config)
        ok = verify_involution_transfer(board, k)
        detail = (
            f"iterated A-shift bijects the symmetric avoider classes on board "
            f"{board} with k={k}"
        )
        counterexample = None if ok else {"board": str(board), "k": k}
        return _verify_outcome(config, check, ok, detail, 1, counterexample)
    if check == "wilf":
        k = _require_k(config)
        if config.n is None:
            raise ValueError("verify wilf needs --n")
        _require_desk_scale(config.n)
        if config.patterns is None:
            raise ValueError("verify wilf needs at least one --pattern")
        report = verify_wilf_set(config.n, config.patterns, k)
        detail = (
            f"involutions of length {report.n}: {report.count} avoid "
            f"{{{', '.join(str(t) for t in report.patterns)}}} and "
            f"{report.swapped_count} avoid "
            f"{{{', '.join(str(t) for t in report.swapped_patterns)}}}"
        )
        counterexample = None if report.equal else report.to_json_dict()
        return _verify_outcome(config, check, report.equal, detail, 2, counterexample)
    if check == "motzkin":
        if config.n_max is None:
            raise ValueError("verify motzkin needs --n-max")
        _require_desk_scale(config.n_max)
        report = verify_motzkin_identities(config.n_max)
        if config.fmt == "text":
            for row in report.rows:
                counts = " ".join(
                    f"{pattern}:{count}" for pattern, count in sorted(row["counts"].items())
                )
                print(f"n={row['n']}  closed form {row['motzkin']}  {counts}")
        bad = [row["n"] for row in report.rows if not row["equal"]]
        detail = f"involution counts match the closed form for n <= {config.n_max}"
        counterexample = None if report.all_equal else {"n": bad[0]}
        return _verify_outcome(
            config, check, report.all_equal, detail, len(report.rows), counterexample
        )
    raise ValueError(f"unknown check {check!r}")


def cmd_graph(config: CliConfig) -> int:
    from .rewriting import export_graph

    k = _require_k(config)
    if not config.seed_perms:
        raise ValueError("graph needs at least one --seed-perm")
    seeds = []
    for perm in config.seed_perms:
        board = config.board or Board.square(len(perm))
        seeds.append(Placement(board, perm))
    print(export_graph(seeds, k, config.fmt), end="")
    if config.render:
        from .reporting import render_rewrite_graph

        written = render_rewrite_graph(seeds, k, config.render)
        print(f"rendered graph to {written}", file=sys.stderr)
    return 0


def cmd_report(config: CliConfig) -> int:
    from .reporting import render_rewrite_graph, write_motzkin_report

    if config.out_dir is None:
        raise ValueError("report needs --out-dir")
    n_max = config.n_max if config.n_max is not None else 7
    _require_desk_scale(n_max)
    written = write_motzkin_report(n_max, config.out_dir)
    if config.seed_perms:
        k = _require_k(config)
        seeds = []
        for perm in config.seed_perms:
            board = config.board or Board.square(len(perm))
            seeds.append(Placement(board, perm))
        written.append(
            render_rewrite_graph(seeds, k, os.path.join(config.out_dir, "rewrite_graph.png"))
        )
    for path in written:
        print(path)
    return 0


_RUNNERS = {
    "shift": cmd_shift,
    "count": cmd_count,
    "verify": cmd_verify,
    "graph": cmd_graph,
    "report": cmd_report,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rookshift",
        description="Shift maps on full rook placements, with exhaustive verifiers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    shift = sub.add_parser("shift", help="apply a shift map to one placement")
    shift.add_argument("--op", required=True, choices=("phi", "psi", "phi-star", "psi-star"))
    shift.add_argument("--k", type=int, required=True, help="pattern length (at least 2)")
    shift.add_argument("--perm", required=True, help="one-line notation, e.g. '7 4 6 3 5 2 1'")
    shift.add_argument("--board", help="column heights, e.g. '4,3,2,2'; default square")
    shift.add_argument("--trace", action="store_true", help="print each effective step")
    shift.add_argument("--trace-cap", type=int, default=None, help="record at most this many steps")
    shift.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")

    count = sub.add_parser("count", help="count pattern-avoiding placements")
    count.add_argument("--board", help="column heights, e.g. '4,4,4,4'")
    count.add_argument("--n", type=int, help="use the n x n square board")
    count.add_argument("--avoid", action="append", required=True, help="pattern to avoid; repeatable")
    count.add_argument("--involutions", action="store_true", help="count symmetric placements only")
    count.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")

    verify = sub.add_parser("verify", help="run one exhaustive verifier")
    verify.add_argument(
        "check",
        choices=(
            "commutation",
            "local-commutation",
            "confluence",
            "bwx",
            "involution-transfer",
            "wilf",
            "motzkin",
        ),
    )
    verify.add_argument("--k", type=int)
    verify.add_argument("--n", type=int)
    verify.add_argument("--n-max", dest="n_max", type=int)
    verify.add_argument("--board")
    verify.add_argument("--pattern", action="append", help="pattern for wilf; repeatable")
    verify.add_argument("--random-strategies", type=int, default=0,
                        help="number of seeded random strategies for confluence")
    verify.add_argument("--seed", type=int, help="base seed for random strategies")
    verify.add_argument("--jobs", type=int, default=1,
                        help="worker processes; FERRERS_JOBS is the fallback")
    verify.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")

    graph = sub.add_parser("graph", help="export the rewrite graph from seed placements")
    graph.add_argument("--k", type=int, required=True)
    graph.add_argument("--seed-perm", action="append", dest="seed_perms",
                       required=True, help="seed permutation; repeatable")
    graph.add_argument("--board", help="board for every seed; default square")
    graph.add_argument("--format", dest="fmt", choices=("dot", "json"), default="dot")
    graph.add_argument("--render", help="also draw the graph to this image file")

    report = sub.add_parser("report", help="write count tables and figures to a directory")
    report.add_argument("--out-dir", required=True)
    report.add_argument("--n-max", dest="n_max", type=int, default=7)
    report.add_argument("--k", type=int, help="needed with --seed-perm")
    report.add_argument("--seed-perm", action="append", dest="seed_perms",
                        help="also draw the rewrite graph from this placement; repeatable")
    report.add_argument("--board", help="board for the seed placements")

    return parser


def _config_from(args: argparse.Namespace) -> CliConfig:
    patterns = None
    raw_patterns = getattr(args, "avoid", None) or getattr(args, "pattern", None)
    if raw_patterns:
        patterns = PatternSet.of(*raw_patterns)
    seed_perms = tuple(
        Permutation.parse(text) for text in (getattr(args, "seed_perms", None) or ())
    )
    return CliConfig(
        command=args.command,
        check=getattr(args, "check", None),
        op=getattr(args, "op", None),
        k=getattr(args, "k", None),
        n=getattr(args, "n", None),
        n_max=getattr(args, "n_max", None),
        board=Board.parse(args.board) if getattr(args, "board", None) else None,
        perm=Permutation.parse(args.perm) if getattr(args, "perm", None) else None,
        patterns=patterns,
        involutions=getattr(args, "involutions", False),
        fmt=getattr(args, "fmt", "text"),
        trace=getattr(args, "trace", False),
        trace_cap=getattr(args, "trace_cap", None),
        seed_perms=seed_perms,
        render=getattr(args, "render", None),
        out_dir=getattr(args, "out_dir", None),
        jobs=getattr(args, "jobs", 1),
        seed=getattr(args, "seed", None),
        random_strategies=getattr(args, "random_strategies", 0),
    )


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        config = _config_from(args)
        return _RUNNERS[config.command](config)
    except InvariantViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
