"""Command-line surface: ``count``, ``enumerate``, ``wilf`` and ``plot-data``.

Data goes to standard output (CSV by default), progress to standard error.
Work is split into pure per-(n, multiplicity) units; with ``--jobs`` above 1
the units run in a process pool and are reduced in a fixed order, so output
is byte-identical for any worker count.  Exit codes: 0 success, 1 Wilf
violation found, 2 usage error, 3 refused workload.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Sequence

from .counting import depth_two_count, divisors, frobenius_count
from .enumeration import (
    TreeOptions,
    enumerate_brute_force,
    enumerate_naive,
    enumerate_tree,
    tree_count,
)
from .wilf import WilfTally, merge_tallies, wilf_tally

__all__ = ["main"]

JOBS_ENV_VAR = "MAXPRIM_JOBS"
DEFAULT_BRUTE_CAP = 26
NOVEL_SAMPLE_CAP = 10

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_REFUSED = 3


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _range_pair(text: str) -> tuple[int, int]:
    lo_text, _, hi_text = text.partition("..")
    try:
        lo = int(lo_text)
        hi = int(hi_text) if hi_text else lo
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a range like 1..35: {text!r}") from None
    if not 1 <= lo <= hi:
        raise argparse.ArgumentTypeError(f"need 1 <= A <= B in a range, got {text!r}")
    return lo, hi


def _default_jobs() -> int:
    env = os.environ.get(JOBS_ENV_VAR, "").strip()
    if env:
        try:
            value = int(env)
        except ValueError:
            value = 0
        if value >= 1:
            return value
    return os.cpu_count() or 1


def _progress(args: argparse.Namespace, message: str) -> None:
    if getattr(args, "progress", False):
        print(message, file=sys.stderr, flush=True)


def _run_units(fn: Callable, units: Sequence, jobs: int) -> list:
    if jobs <= 1 or len(units) <= 1:
        return [fn(u) for u in units]
    with ProcessPoolExecutor(max_workers=min(jobs, len(units))) as pool:
        return list(pool.map(fn, units, chunksize=1))


def _fmt_float(x: float) -> float:
    # Normalize to 10 significant digits once, so CSV and JSON carry the
    # exact same value no matter how the consumer parses it.
    return float(f"{x:.10g}")


def _gens_field(gens: Iterable[int]) -> str:
    return ";".join(map(str, gens))


# ----------------------------------------------------------------- output --


def _emit_rows(rows: list[dict], headers: list[str], args: argparse.Namespace) -> None:
    out = sys.stdout
    close = False
    if args.output:
        out = open(args.output, "w", newline="")
        close = True
    try:
        if args.format == "csv":
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(headers)
            for row in rows:
                writer.writerow(["" if row[h] is None else row[h] for h in headers])
        elif args.format == "json":
            json.dump([{h: row[h] for h in headers} for row in rows], out, indent=2)
            out.write("\n")
        else:
            widths = {
                h: max(len(h), *(len(str(row[h])) for row in rows), 1) if rows else len(h)
                for h in headers
            }
            out.write("  ".join(h.ljust(widths[h]) for h in headers).rstrip() + "\n")
            for row in rows:
                cells = ["" if row[h] is None else str(row[h]) for h in headers]
                out.write("  ".join(c.ljust(widths[h]) for c, h in zip(cells, headers)).rstrip() + "\n")
    finally:
        if close:
            out.close()


# ------------------------------------------------------------ work units --


def _count_unit(task: tuple[int, int, int | None]) -> int:
    n, m, len_cutoff = task
    return tree_count(n, m, len_cutoff)


def _wilf_unit(task: tuple[int, int | None, int | None, bool, int]) -> WilfTally:
    n, m, len_cutoff, full_check, cap = task
    return wilf_tally(n, m, len_cutoff, full_check, cap)


def _enum_unit(task: tuple[int, int, str, int | None]) -> tuple:
    n, m, algorithm, len_cutoff = task
    fn = {
        "brute": enumerate_brute_force,
        "naive": enumerate_naive,
        "tree": enumerate_tree,
    }[algorithm]
    result = fn(n, m, TreeOptions(len_cutoff=len_cutoff))
    return result.semigroups or ()


def _load_seed_table(path: str) -> dict[int, int]:
    """Seed of previously computed counts by maximum primitive: CSV with
    columns n and A_n (extra columns are ignored)."""
    seed: dict[int, int] = {}
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if not reader.fieldnames or "n" not in reader.fieldnames or "A_n" not in reader.fieldnames:
            raise ValueError(f"{path}: expected CSV columns n and A_n")
        for row in reader:
            if row["n"] and row["A_n"]:
                seed[int(row["n"])] = int(row["A_n"])
    return seed


def _compute_max_primitive_counts(
    needed: Iterable[int], args: argparse.Namespace, seed: dict[int, int]
) -> dict[int, int]:
    """Counts by maximum primitive for every n in ``needed``."""
    counts = dict(seed)
    formula_mode = args.mode == "formula-assisted"
    todo = [n for n in sorted(set(needed)) if n not in counts]
    units: list[tuple[int, int, int | None]] = []
    spans: list[tuple[int, int, int, int]] = []  # (n, base, start, stop)
    for n in todo:
        if n == 1:
            counts[n] = 1
            continue
        if n == 2:
            counts[n] = 0
            continue
        if formula_mode:
            base = depth_two_count(n)
            m_range = range(2, n // 2 + 1)
        else:
            base = 0
            m_range = range(2, n)
        start = len(units)
        units.extend((n, m, args.len) for m in m_range)
        spans.append((n, base, start, len(units)))
    _progress(args, f"counting: {len(todo)} values, {len(units)} work units, jobs={args.jobs}")
    partials = _run_units(_count_unit, units, args.jobs)
    for n, base, start, stop in spans:
        counts[n] = base + sum(partials[start:stop])
        _progress(args, f"counted n={n}: {counts[n]}")
    return counts


# ------------------------------------------------------------- commands --


def _cmd_count(args: argparse.Namespace) -> int:
    lo, hi = args.range
    seed = _load_seed_table(args.seed_table) if args.seed_table else {}
    needed: set[int] = set()
    for n in range(lo, hi + 1):
        needed.add(n)
        needed.update(divisors(n))
    counts = _compute_max_primitive_counts(needed, args, seed)
    rows = [
        {"n": n, "A_n": counts[n], "N_n": frobenius_count(n, counts)}
        for n in range(lo, hi + 1)
    ]
    _emit_rows(rows, ["n", "A_n", "N_n"], args)
    return EXIT_OK


def _cmd_enumerate(args: argparse.Namespace) -> int:
    top = args.max_primitive
    if args.algorithm == "brute" and top > args.brute_cap:
        print(
            f"refusing brute-force enumeration for max primitive {top} > cap "
            f"{args.brute_cap}: 2^{top - 2} subsets; raise --brute-cap to force",
            file=sys.stderr,
        )
        return EXIT_REFUSED
    listing: list[tuple[int, ...]]
    if top == 1:
        listing = [(1,)] if args.multiplicity in (None, 1) else []
    else:
        if args.multiplicity is None:
            ms = list(range(2, top))
        elif args.multiplicity >= top:
            print(
                f"multiplicity {args.multiplicity} must be below the max primitive {top}",
                file=sys.stderr,
            )
            return EXIT_USAGE
        else:
            ms = [args.multiplicity]
        units = [(top, m, args.algorithm, args.len) for m in ms]
        _progress(args, f"enumerate: {len(units)} work units, jobs={args.jobs}")
        chunks = _run_units(_enum_unit, units, args.jobs)
        listing = [gens for chunk in chunks for gens in chunk]
    if args.format == "json":
        rows = [list(gens) for gens in listing]
        out = sys.stdout if not args.output else open(args.output, "w", newline="")
        try:
            json.dump(rows, out, indent=2)
            out.write("\n")
        finally:
            if args.output:
                out.close()
    else:
        rows = [{"generators": _gens_field(g) if args.format == "csv" else ",".join(map(str, g))} for g in listing]
        _emit_rows(rows, ["generators"], args)
    return EXIT_OK


def _cmd_wilf(args: argparse.Namespace) -> int:
    lo, hi = args.range
    units: list[tuple[int, int | None, int | None, bool, int]] = []
    groups: list[tuple[int, int, int]] = []  # (n, start, stop)
    for n in range(lo, hi + 1):
        start = len(units)
        if args.multiplicity is not None:
            units.append((n, args.multiplicity, args.len, args.full, NOVEL_SAMPLE_CAP))
        elif n == 1:
            units.append((1, None, args.len, args.full, NOVEL_SAMPLE_CAP))
        else:
            units.extend((n, m, args.len, args.full, NOVEL_SAMPLE_CAP) for m in range(2, n))
        groups.append((n, start, len(units)))
    _progress(args, f"wilf: {len(units)} work units, jobs={args.jobs}")
    partials = _run_units(_wilf_unit, units, args.jobs)
    rows = []
    headers = ["n", "total", "violations", "novel"]
    if args.report_novel:
        headers.append("novel_samples")
    violating: list[tuple[int, ...]] = []
    for n, start, stop in groups:
        tally = merge_tallies(partials[start:stop], NOVEL_SAMPLE_CAP)
        violating.extend(tally.violations)
        row = {
            "n": n,
            "total": tally.total,
            "violations": len(tally.violations),
            "novel": tally.novel_count,
        }
        if args.report_novel:
            row["novel_samples"] = " ".join(_gens_field(g) for g in tally.novel_samples)
        rows.append(row)
        _progress(args, f"wilf n={n}: checked {tally.total}")
    _emit_rows(rows, headers, args)
    for gens in violating:
        print(f"WILF VIOLATION: {_gens_field(gens)}", file=sys.stderr)
    return EXIT_VIOLATION if violating else EXIT_OK


def _cmd_plot_data(args: argparse.Namespace) -> int:
    lo, hi = args.range
    seed = _load_seed_table(args.seed_table) if args.seed_table else {}
    needed = set(range(lo, hi + 1))
    if lo > 1:
        needed.add(lo - 1)
    counts = _compute_max_primitive_counts(needed, args, seed)
    rows = []
    for n in range(lo, hi + 1):
        a = counts[n]
        prev = counts.get(n - 1)
        log2_a = _fmt_float(math.log2(a)) if a > 0 else None
        ratio = None
        if prev and a:
            ratio = _fmt_float(a / prev)
        rows.append(
            {
                "n": n,
                "A_n": a,
                "log2_A_n": log2_a,
                "ratio_even_over_odd": ratio if n % 2 == 0 else None,
                "ratio_odd_over_even": ratio if n % 2 == 1 else None,
            }
        )
    _emit_rows(
        rows,
        ["n", "A_n", "log2_A_n", "ratio_even_over_odd", "ratio_odd_over_even"],
        args,
    )
    return EXIT_OK


# --------------------------------------------------------------- parser --


def _add_common(sub: argparse.ArgumentParser, with_mode: bool, with_seed: bool) -> None:
    if with_mode:
        sub.add_argument(
            "--mode",
            choices=["full", "formula-assisted"],
            default="formula-assisted",
            help="count by full enumeration, or count the primitive-depth-2 "
            "region in closed form (default)",
        )
    sub.add_argument(
        "--len",
        type=_positive_int,
        default=None,
        help="tree cutoff: subtrees with at most this many candidates are "
        "completed directly (default: heuristic per (M, m))",
    )
    sub.add_argument(
        "--jobs",
        type=_positive_int,
        default=None,
        help=f"worker processes (default: ${JOBS_ENV_VAR} or the CPU count)",
    )
    sub.add_argument(
        "--format", choices=["csv", "json", "text"], default="csv", help="output format"
    )
    sub.add_argument("--output", "-o", default=None, help="write to a file instead of stdout")
    sub.add_argument("--progress", action="store_true", help="progress lines on stderr")
    if with_seed:
        sub.add_argument(
            "--seed-table",
            default=None,
            help="CSV with columns n,A_n of already-known counts to reuse",
        )


def _add_range(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "range_pos",
        metavar="RANGE",
        nargs="?",
        type=_range_pair,
        default=None,
        help="range of maximum primitives, like 1..35 or a single 30",
    )
    sub.add_argument(
        "--range", dest="range_flag", type=_range_pair, default=None, help="same as RANGE"
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maxprim",
        description="Exact counting, enumeration and Wilf verification for "
        "numerical semigroups with a given maximum primitive.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="counts by maximum primitive and Frobenius number")
    _add_range(p_count)
    _add_common(p_count, with_mode=True, with_seed=True)
    p_count.set_defaults(func=_cmd_count)

    p_enum = sub.add_parser("enumerate", help="list semigroups by minimal generating set")
    p_enum.add_argument("--max-primitive", type=_positive_int, required=True)
    p_enum.add_argument("--multiplicity", type=_positive_int, default=None)
    p_enum.add_argument(
        "--algorithm", choices=["brute", "naive", "tree"], default="tree"
    )
    p_enum.add_argument(
        "--brute-cap",
        type=_positive_int,
        default=DEFAULT_BRUTE_CAP,
        help="refuse --algorithm brute above this max primitive "
        f"(default {DEFAULT_BRUTE_CAP})",
    )
    _add_common(p_enum, with_mode=False, with_seed=False)
    p_enum.set_defaults(func=_cmd_enumerate)

    p_wilf = sub.add_parser("wilf", help="verify Wilf's inequality over a range")
    _add_range(p_wilf)
    p_wilf.add_argument("--multiplicity", type=_positive_int, default=None)
    p_wilf.add_argument(
        "--report-novel",
        action="store_true",
        help="add a column with sample semigroups matching no known condition",
    )
    p_wilf.add_argument(
        "--full",
        action="store_true",
        help="check the inequality on every semigroup, no known-case skipping",
    )
    _add_common(p_wilf, with_mode=False, with_seed=False)
    p_wilf.set_defaults(func=_cmd_wilf)

    p_plot = sub.add_parser("plot-data", help="growth and ratio series for plotting")
    _add_range(p_plot)
    _add_common(p_plot, with_mode=True, with_seed=True)
    p_plot.set_defaults(func=_cmd_plot_data)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "range_pos"):
        if args.range_pos and args.range_flag and args.range_pos != args.range_flag:
            parser.error("the range was given twice with different values")
        args.range = args.range_pos or args.range_flag
        if args.range is None:
            parser.error("a range like 1..35 is required (positional or --range)")
    if args.jobs is None:
        args.jobs = _default_jobs()
    try:
        return args.func(args)
    except ValueError as exc:
        parser.error(str(exc))
        return EXIT_USAGE  # unreachable; parser.error raises SystemExit(2)
