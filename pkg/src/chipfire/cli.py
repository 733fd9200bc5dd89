"""Command-line front end.

    chipfire table --n 4                     arrival table as CSV or JSON
    chipfire stable --n 4                    stable-configuration bit rows
    chipfire distance --n 15                 distance distribution
    chipfire firings --n 10                  total firing count (both routes)
    chipfire diff --n 9                      difference table
    chipfire segment --n 9                   four-part split summary
    chipfire sequences total-firings --upto 10
    chipfire verify --n 2..12 --trials 10    invariant scorecard
    chipfire render --kind stable-dots --n 9 --out fig.svg

CSV output carries no header unless ``--header`` is given, so files for
different n concatenate cleanly.  Exit codes: 0 all good, 1 invariant
failure, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import cache, checks, difftable, render, sequences, stable, structure
from .core import MAX_EXPONENT, ChipfireError, Row

EXIT_OK = 0
EXIT_INVARIANT = 1
EXIT_USAGE = 2
EXIT_IO = 3


# ---------------------------------------------------------------------------
# argument helpers


def _exponent(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= n <= MAX_EXPONENT:
        raise argparse.ArgumentTypeError(f"n must be in 0..{MAX_EXPONENT}, got {n}")
    return n


def _exponent_range(text: str) -> range:
    """Accept a single exponent or an inclusive span like ``2..12``."""
    lo, sep, hi = text.partition("..")
    try:
        start = int(lo)
        stop = int(hi) if sep else start
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an exponent range: {text!r}") from None
    if not 0 <= start <= stop <= MAX_EXPONENT:
        raise argparse.ArgumentTypeError(f"bad exponent range: {text!r}")
    return range(start, stop + 1)


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


# ---------------------------------------------------------------------------
# serialization


def rows_to_csv(rows: Sequence[Row], header: bool = False) -> str:
    lines = ["index,y_min,values"] if header else []
    for r in rows:
        lines.append(f"{r.index},{r.y_min},{' '.join(map(str, r.values))}")
    return "\n".join(lines) + "\n"


def rows_from_csv(text: str) -> list[Row]:
    """Parse ``rows_to_csv`` output (with or without header) back into rows."""
    out: list[Row] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("index,"):
            continue
        index, y_min, values = line.split(",", 2)
        out.append(
            Row(
                index=int(index),
                y_min=int(y_min),
                values=tuple(int(v) for v in values.split()),
            )
        )
    return out


def _diff_rows_to_csv(diffs: Sequence[difftable.DiffRow], header: bool) -> str:
    lines = ["index,y_min,values"] if header else []
    for d in diffs:
        lines.append(f"{d.index},{d.y_min},{' '.join(map(str, d.values))}")
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _json(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


# ---------------------------------------------------------------------------
# commands


def _cmd_table(args) -> int:
    rows = cache.load_or_compute(args.n, args.cache_dir)
    if args.max_rows is not None:
        rows = rows[: args.max_rows]
    if args.format == "csv":
        _emit(rows_to_csv(rows, header=args.header), args.out)
    else:
        payload = {
            "n": args.n,
            "row_count": len(rows),
            "rows": [
                {"index": r.index, "y_min": r.y_min, "values": list(r.values)}
                for r in rows
            ],
        }
        _emit(_json(payload), args.out)
    return EXIT_OK


def _stable_config(args) -> stable.StableConfig:
    rows = cache.load_or_compute(args.n, args.cache_dir)
    return stable.StableConfig(n=args.n, rows=tuple(stable.stable_row(r) for r in rows))


def _cmd_stable(args) -> int:
    config = _stable_config(args)
    if args.format == "csv":
        lines = ["index,y_min,bits"] if args.header else []
        lines.extend(f"{r.index},{r.y_min},{r.pattern()}" for r in config.rows)
        _emit("\n".join(lines) + "\n", args.out)
    else:
        payload = {
            "n": config.n,
            "chip_count": config.chip_count,
            "rows": [
                {"index": r.index, "y_min": r.y_min, "bits": r.pattern()}
                for r in config.rows
            ],
        }
        _emit(_json(payload), args.out)
    return EXIT_OK


def _cmd_distance(args) -> int:
    d = stable.distance_distribution(_stable_config(args))
    if args.format == "csv":
        lines = ["offset,count"] if args.header else []
        lines.extend(f"{i},{d.count(i)}" for i in d.offsets())
        _emit("\n".join(lines) + "\n", args.out)
    else:
        payload = {"n": d.n, "half_width": d.half_width, "counts": list(d.counts)}
        _emit(_json(payload), args.out)
    return EXIT_OK


def _cmd_firings(args) -> int:
    rows = cache.load_or_compute(args.n, args.cache_dir)
    via_sum = sum(v >> 1 for r in rows for v in r.values)
    config = stable.StableConfig(n=args.n, rows=tuple(stable.stable_row(r) for r in rows))
    mu2 = stable.second_raw_moment(stable.distance_distribution(config))
    if mu2 != 2 * via_sum:
        raise ChipfireError(
            f"firing-count routes disagree for n={args.n}: "
            f"sum route {via_sum}, half moment {mu2 / 2}"
        )
    if args.format == "csv":
        lines = ["n,total_firings"] if args.header else []
        lines.append(f"{args.n},{via_sum}")
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(_json({"n": args.n, "total_firings": via_sum}), args.out)
    return EXIT_OK


def _cmd_diff(args) -> int:
    rows = cache.load_or_compute(args.n, args.cache_dir)
    diffs = [difftable.diff_row(r) for r in rows]
    if args.format == "csv":
        _emit(_diff_rows_to_csv(diffs, args.header), args.out)
    else:
        payload = {
            "n": args.n,
            "row_count": len(diffs),
            "rows": [
                {"index": d.index, "y_min": d.y_min, "values": list(d.values)}
                for d in diffs
            ],
        }
        _emit(_json(payload), args.out)
    return EXIT_OK


def _cmd_segment(args) -> int:
    seg = structure.segment(args.n)
    if args.format == "csv":
        header = (
            "n,top_start,top_stop,midsection_start,midsection_stop,"
            "rectangle_start,rectangle_stop,bottom_start,bottom_stop,"
            "longest_length,first_longest_row"
        )
        lines = [header] if args.header else []
        spans = [f"{part.start},{part.stop}" for _, part in seg.parts()]
        lines.append(
            f"{seg.n},{','.join(spans)},{seg.longest_length},{seg.first_longest_row}"
        )
        _emit("\n".join(lines) + "\n", args.out)
    else:
        payload = {
            "n": seg.n,
            **{name: [part.start, part.stop] for name, part in seg.parts()},
            "longest_length": seg.longest_length,
            "first_longest_row": seg.first_longest_row,
        }
        _emit(_json(payload), args.out)
    return EXIT_OK


def _cmd_sequences(args) -> int:
    if args.id == "half-nonzero-rows":
        values = sequences.half_nonzero_rows(args.upto)
        offset = 1
    else:
        values = sequences.generate(args.id, args.upto)
        offset = sequences.SEQUENCES[args.id].offset
    if args.format == "csv":
        lines = ["index,value"] if args.header else []
        lines.extend(f"{offset + k},{v}" for k, v in enumerate(values))
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(_json({"id": args.id, "offset": offset, "values": values}), args.out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    properties = args.properties.split(",") if args.properties else None
    all_results: list[checks.CheckResult] = []
    lines: list[str] = []
    if properties is None or any(p in "minimal-row-descent" for p in properties):
        descent = checks.minimal_descent_check()
        all_results.append(descent)
        lines.append(_format_check(descent))
    for n in args.n:
        for result in checks.run_checks(
            n, properties=properties, oracle_trials=args.trials, seed=args.seed
        ):
            all_results.append(result)
            lines.append(_format_check(result))
    failed = checks.failures(all_results)
    lines.append(f"summary: {len(all_results)} checks, {len(failed)} failures")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_INVARIANT if failed else EXIT_OK


def _format_check(r: checks.CheckResult) -> str:
    where = f"n={r.n} " if r.n is not None else ""
    if r.advisory:
        verdict = "report holds" if r.passed else "report does-not-hold"
    else:
        verdict = "pass" if r.passed else "FAIL"
    detail = f" ({r.detail})" if r.detail else ""
    return f"{where}{r.name}: {verdict}{detail}"


def _cmd_render(args) -> int:
    spec = render.RenderSpec(
        kind=args.kind,
        n=args.n,
        out_path=args.out,
        width=args.width,
        height=args.height,
        dot_radius=args.dot_radius,
    )
    path = render.render(spec)
    sys.stdout.write(f"{path}\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chipfire",
        description="Chip-firing tables on the first-quadrant lattice.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", default=None, help="write to a file instead of stdout")
        p.add_argument("--header", action="store_true", help="include a CSV header line")

    def add_table_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--n", type=_exponent, required=True)
        p.add_argument("--cache-dir", default=None,
                       help=f"row cache directory (or ${cache.ENV_CACHE_DIR})")
        add_output_flags(p)

    p_table = sub.add_parser("table", help="arrival table rows")
    add_table_flags(p_table)
    p_table.add_argument("--max-rows", type=_positive, default=None)
    p_table.set_defaults(func=_cmd_table)

    p_stable = sub.add_parser("stable", help="stable-configuration bit rows")
    add_table_flags(p_stable)
    p_stable.set_defaults(func=_cmd_stable)

    p_distance = sub.add_parser("distance", help="distance distribution")
    add_table_flags(p_distance)
    p_distance.set_defaults(func=_cmd_distance)

    p_firings = sub.add_parser("firings", help="total firing count")
    add_table_flags(p_firings)
    p_firings.set_defaults(func=_cmd_firings)

    p_diff = sub.add_parser("diff", help="difference table rows")
    add_table_flags(p_diff)
    p_diff.set_defaults(func=_cmd_diff)

    p_segment = sub.add_parser("segment", help="four-part row segmentation")
    p_segment.add_argument("--n", type=_exponent, required=True)
    add_output_flags(p_segment)
    p_segment.set_defaults(func=_cmd_segment)

    p_seq = sub.add_parser("sequences", help="derived integer sequences")
    p_seq.add_argument(
        "id",
        choices=sorted(sequences.SEQUENCES) + ["half-nonzero-rows"],
    )
    p_seq.add_argument("--upto", type=int, required=True, help="last index, inclusive")
    add_output_flags(p_seq)
    p_seq.set_defaults(func=_cmd_sequences)

    p_verify = sub.add_parser("verify", help="run the invariant scorecard")
    p_verify.add_argument("--n", type=_exponent_range, required=True,
                          metavar="N or A..B")
    p_verify.add_argument("--properties", default=None,
                          help="comma-separated name filters")
    p_verify.add_argument("--trials", type=int, default=10,
                          help="random oracle runs per n (< 2 disables the oracle)")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--out", default=None)
    p_verify.set_defaults(func=_cmd_verify)

    p_render = sub.add_parser("render", help="emit an SVG figure")
    p_render.add_argument("--kind", choices=render.KINDS, required=True)
    p_render.add_argument("--n", type=_exponent, required=True)
    p_render.add_argument("--out", required=True)
    p_render.add_argument("--width", type=_positive, default=960)
    p_render.add_argument("--height", type=_positive, default=640)
    p_render.add_argument("--dot-radius", type=float, default=2.0)
    p_render.set_defaults(func=_cmd_render)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ChipfireError as exc:
        sys.stderr.write(f"chipfire: {exc}\n")
        return EXIT_INVARIANT
    except OSError as exc:
        sys.stderr.write(f"chipfire: {exc}\n")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
