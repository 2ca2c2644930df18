"""Command-line interface: metric queries, construction, comparisons, channel sweeps.

Exit codes: 0 success, 2 usage or domain error, 3 I/O error. Data rows go to
stdout; diagnostics and warnings go to stderr. The CHROMACAP_SEED environment
variable supplies a default seed for `construct` and `simulate`; an explicit
--seed flag wins.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .capacity import AlphabetSpec, entropy_gain, joint_alphabet_entropy, palette_entropy, product_entropy
from .channel import ChannelModel, symbol_error_rate
from .construction import ConstructionConfig, construct
from .cost import (
    capacity_report,
    compare,
    comparison_csv,
    comparison_json_lines,
    comparison_table_text,
    hccb_comparison_table,
)
from .errors import ChromacapError, ParseError, UnknownPaletteError
from .palette import Palette, builtin_palette, load_palette, serialize_palette

SEED_ENV_VAR = "CHROMACAP_SEED"

FORMATS = ("csv", "table", "json-lines")


def _fmt6(x: float) -> str:
    """Six decimals with trailing zeros stripped (at least one decimal kept)."""
    if x == 0:
        x = 0.0  # normalize -0.0
    s = f"{x:.6f}".rstrip("0")
    return s + "0" if s.endswith(".") else s


def _resolve_seed(flag_value: int | None) -> int:
    if flag_value is not None:
        return flag_value
    env = os.environ.get(SEED_ENV_VAR)
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise ParseError(f"{SEED_ENV_VAR}={env!r}: expected an integer") from None


def _resolve_palette(arg: str) -> Palette:
    path = Path(arg)
    if path.exists():
        return load_palette(path)
    try:
        return builtin_palette(arg)
    except UnknownPaletteError:
        raise ParseError(f"{arg}: not a palette file or built-in palette name") from None


def _cmd_entropy(args) -> int:
    pairs = [("h", palette_entropy(args.n, args.mode))]
    if args.vs is not None:
        pairs.append(("delta_h", entropy_gain(args.n, args.vs, args.mode)))
    if args.patterns is not None:
        spec = AlphabetSpec(args.n, args.patterns)
        pairs.append(("h_joint", joint_alphabet_entropy(spec)))
        pairs.append(("h_product", product_entropy(spec)))
        print(
            "note: h_product is the paper-form product (bits^2), non-additive; "
            "h_joint is the combined-alphabet entropy",
            file=sys.stderr,
        )
    if args.format == "json-lines":
        print(json.dumps({k: round(v, 6) for k, v in pairs}))
    else:
        print(" ".join(f"{k}={_fmt6(v)}" for k, v in pairs))
    return 0


def _cmd_construct(args) -> int:
    if args.n > 100:
        print(f"warning: n={args.n} is beyond the validated range (2..100)", file=sys.stderr)
    cfg = ConstructionConfig(n=args.n, seed=_resolve_seed(args.seed), restarts=args.restarts)
    result = construct(cfg)
    document = serialize_palette(result.palette) + "\n"
    report = capacity_report(result.palette)
    summary = f"min_diff={result.achieved_min_diff} a_r={report.accuracy_requirement:.6f}"
    if args.out is not None:
        Path(args.out).write_text(document)
        print(summary)
    else:
        sys.stdout.write(document)
        print(summary, file=sys.stderr)
    return 0


EVAL_CSV_HEADER = "n,min_diff,a_r,h_paper,h_shannon"


def _eval_fields(report) -> list[str]:
    return [
        str(report.n_colors),
        "-" if report.min_diff is None else str(report.min_diff),
        "-" if report.accuracy_requirement is None else f"{report.accuracy_requirement:.6f}",
        _fmt6(report.entropy_paper),
        _fmt6(report.entropy_shannon),
    ]


def _cmd_eval(args) -> int:
    reports = []
    failures = []
    for arg in args.palettes:
        try:
            reports.append(capacity_report(_resolve_palette(arg)))
        except (ChromacapError, OSError) as exc:
            failures.append(f"{arg}: {exc}")
    if failures:
        for line in failures:
            print(line, file=sys.stderr)
        return 2
    if args.format == "json-lines":
        for r in reports:
            print(
                json.dumps(
                    {
                        "name": r.palette_name,
                        "n": r.n_colors,
                        "min_diff": r.min_diff,
                        "a_r": None if r.accuracy_requirement is None else round(r.accuracy_requirement, 6),
                        "h_paper": round(r.entropy_paper, 6),
                        "h_shannon": round(r.entropy_shannon, 6),
                    }
                )
            )
    elif args.format == "table":
        header = EVAL_CSV_HEADER.split(",")
        body = [_eval_fields(r) for r in reports]
        widths = [max(len(h), *(len(row[i]) for row in body)) for i, h in enumerate(header)]
        print("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip())
        for row in body:
            print("  ".join(f.ljust(w) for f, w in zip(row, widths)).rstrip())
    else:
        print(EVAL_CSV_HEADER)
        for r in reports:
            print(",".join(_eval_fields(r)))
    return 0


def _cmd_compare(args) -> int:
    p2 = _resolve_palette(args.p2)
    p1 = _resolve_palette(args.p1)
    row = compare(p2, p1, supplied_da=args.da)
    if args.format == "csv":
        sys.stdout.write(comparison_csv([row]))
    elif args.format == "table":
        sys.stdout.write(comparison_table_text([row]))
    elif args.format == "json-lines":
        sys.stdout.write(comparison_json_lines([row]))
    else:
        rep = row.reported()
        print(
            f"p2={row.p2_name} p1={row.p1_name} n2={row.n2} n1={row.n1} "
            f"delta_density={rep['delta_density']} delta_accuracy={rep['delta_accuracy']} "
            f"ce={rep['ce']} delta_h={_fmt6(row.entropy_gain_paper)} "
            f"da_source={row.delta_accuracy_source}"
        )
    return 0


def _cmd_table1(args) -> int:
    rows = hccb_comparison_table()
    if args.format == "table":
        sys.stdout.write(comparison_table_text(rows))
    elif args.format == "json-lines":
        sys.stdout.write(comparison_json_lines(rows))
    else:
        sys.stdout.write(comparison_csv(rows))
    return 0


SIM_CSV_HEADER = "palette,sigma,trials,errors,ser,hw95"


def _cmd_simulate(args) -> int:
    palette = _resolve_palette(args.palette)
    try:
        sigmas = [float(s) for s in args.sigma.split(",") if s.strip() != ""]
    except ValueError:
        raise ParseError(f"--sigma {args.sigma!r}: expected a comma-separated list of numbers") from None
    if not sigmas:
        raise ParseError("--sigma: expected at least one value")
    seed = _resolve_seed(args.seed)
    results = [
        (sigma, symbol_error_rate(palette, ChannelModel(sigma=sigma, seed=seed, trials=args.trials)))
        for sigma in sigmas
    ]
    if args.format == "json-lines":
        for sigma, r in results:
            print(
                json.dumps(
                    {
                        "palette": palette.name,
                        "sigma": sigma,
                        "trials": r.trials,
                        "errors": r.errors,
                        "ser": r.ser,
                        "hw95": round(r.half_width_95, 9),
                    }
                )
            )
        return 0
    rows = [
        [palette.name, _fmt6(sigma), str(r.trials), str(r.errors), _fmt6(r.ser), _fmt6(r.half_width_95)]
        for sigma, r in results
    ]
    if args.format == "table":
        header = SIM_CSV_HEADER.split(",")
        widths = [max(len(h), *(len(row[i]) for row in rows)) for i, h in enumerate(header)]
        print("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip())
        for row in rows:
            print("  ".join(f.ljust(w) for f, w in zip(row, widths)).rstrip())
    else:
        print(SIM_CSV_HEADER)
        for row in rows:
            print(",".join(row))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chromacap",
        description="Information capacity and cost-effectiveness of color palettes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("entropy", help="per-symbol entropy of an N-color alphabet")
    p.add_argument("n", type=int, help="palette size")
    p.add_argument("--vs", type=int, default=None, metavar="N1", help="also report the gain over N1 colors")
    p.add_argument("--patterns", type=int, default=None, metavar="NP", help="also report combined color-pattern forms")
    p.add_argument("--mode", choices=("paper", "shannon"), default="paper")
    p.add_argument("--format", choices=("plain", "json-lines"), default="plain")
    p.set_defaults(func=_cmd_entropy)

    p = sub.add_parser("construct", help="build a maximally-separated palette")
    p.add_argument("n", type=int, help="palette size (2..100 validated; larger warns)")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--restarts", type=int, default=8)
    p.add_argument("--out", default=None, metavar="PATH", help="write the palette document here instead of stdout")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("eval", help="capacity report for palette files or built-in names")
    p.add_argument("palettes", nargs="+", metavar="PALETTE")
    p.add_argument("--format", choices=FORMATS, default="csv")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("compare", help="cost-effectiveness of palette P2 (larger) versus P1")
    p.add_argument("p2", metavar="P2")
    p.add_argument("p1", metavar="P1")
    p.add_argument("--da", type=float, default=None, help="supplied accuracy cost (required for sized-only palettes)")
    p.add_argument("--format", choices=("plain",) + FORMATS, default="plain")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("table1", help="emit the bundled 24-row HCCB comparison table")
    p.add_argument("--format", choices=FORMATS, default="csv")
    p.set_defaults(func=_cmd_table1)

    p = sub.add_parser("simulate", help="symbol-error-rate sweep over channel noise levels")
    p.add_argument("palette", metavar="PALETTE")
    p.add_argument("--sigma", default="0,10,20,30,40,50,60,70,80,90,100", help="comma-separated noise levels")
    p.add_argument("--trials", type=int, default=10000)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--format", choices=FORMATS, default="csv")
    p.set_defaults(func=_cmd_simulate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses exit code 2 for usage errors
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ChromacapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
