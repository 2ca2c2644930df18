"""Cost-effectiveness scoring for palettes of different sizes."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from typing import Iterable, Mapping, Sequence

from .capacity import entropy_gain, palette_entropy
from .errors import ChromacapError, DomainError, MissingAccuracyError
from .palette import (
    MAX_DIFF,
    CapacityReport,
    Palette,
    builtin_palette,
    min_pairwise_diff,
)


def accuracy_requirement(p: Palette) -> float:
    """Decoding accuracy demanded by a palette: 1 - min_pairwise_diff/765.

    Grows toward 1 as the closest color pair tightens; 0 only when the
    palette realizes the full cube diameter (two opposite corners and no
    closer pair).
    """
    return 1.0 - min_pairwise_diff(p) / MAX_DIFF


def delta_density(n2: int, n1: int) -> float:
    """Effective density contribution of using n2 colors over n1: log2(n2)/log2(n1) - 1."""
    if n1 < 2:
        raise DomainError(f"n1 must be >= 2, got {n1}")
    if n2 <= n1:
        raise DomainError(f"need n2 > n1, got n2={n2}, n1={n1}")
    return math.log2(n2) / math.log2(n1) - 1.0


def delta_accuracy(p2: Palette, p1: Palette) -> float:
    """Accuracy cost of switching to p2: max(0, A_r(p2) - A_r(p1)).

    Clamped at zero: a better-separated replacement carries no accuracy
    cost. Comparisons involving sized-only palettes must supply the value
    externally (see compare).
    """
    return max(0.0, accuracy_requirement(p2) - accuracy_requirement(p1))


def cost_effectiveness(dd: float, da: float) -> float:
    """CE score (dd - da) / (1 + da); positive exactly when dd exceeds da."""
    if da < 0:
        raise DomainError(f"accuracy cost must be >= 0, got {da}")
    return (dd - da) / (1.0 + da)


def round_reported(x: float, places: int = 3) -> float:
    """Round half away from zero, the convention for reported values."""
    q = Decimal(1).scaleb(-places)
    return float(Decimal(repr(x)).quantize(q, rounding=ROUND_HALF_UP))


def _fmt_reported(x: float, places: int = 3) -> str:
    q = Decimal(1).scaleb(-places)
    return str(Decimal(repr(x)).quantize(q, rounding=ROUND_HALF_UP))


@dataclass(frozen=True)
class ComparisonRow:
    """One size-increase comparison: p2 (the larger palette) measured against p1.

    Raw values are retained; reported() renders the 3-decimal presentation
    form (half-away-from-zero, decimal points).
    """

    p2_name: str
    p1_name: str
    n2: int
    n1: int
    delta_density: float
    delta_accuracy: float
    ce: float
    entropy_gain_paper: float
    delta_accuracy_source: str  # "computed" | "supplied"

    def reported(self) -> dict[str, str]:
        return {
            "delta_density": _fmt_reported(self.delta_density),
            "delta_accuracy": _fmt_reported(self.delta_accuracy),
            "ce": _fmt_reported(self.ce),
        }


def compare(p2: Palette, p1: Palette, supplied_da: float | None = None) -> ComparisonRow:
    """Build the comparison row for p2 (larger) versus p1.

    The accuracy cost is computed from the palettes' colors unless
    supplied_da is given; it must be supplied when either palette is
    sized-only.
    """
    n2, n1 = p2.n_colors, p1.n_colors
    dd = delta_density(n2, n1)  # also validates n2 > n1 >= 2
    if supplied_da is not None:
        if supplied_da < 0:
            raise DomainError(f"supplied accuracy cost must be >= 0, got {supplied_da}")
        da = float(supplied_da)
        source = "supplied"
    else:
        if p2.is_sized_only or p1.is_sized_only:
            raise MissingAccuracyError(
                f"comparison {p2.name!r} vs {p1.name!r} involves a sized-only palette; "
                "supply the accuracy cost explicitly"
            )
        da = delta_accuracy(p2, p1)
        source = "computed"
    return ComparisonRow(
        p2_name=p2.name,
        p1_name=p1.name,
        n2=n2,
        n1=n1,
        delta_density=dd,
        delta_accuracy=da,
        ce=cost_effectiveness(dd, da),
        entropy_gain_paper=entropy_gain(n2, n1, "paper"),
        delta_accuracy_source=source,
    )


@dataclass(frozen=True)
class ComparisonMatrix:
    """Rows for every comparable pair, plus notes for pairs that were skipped."""

    rows: tuple[ComparisonRow, ...]
    notes: tuple[str, ...]


def comparison_matrix(
    palettes: Sequence[Palette],
    supplied_da: Mapping[tuple[str, str], float] | None = None,
) -> ComparisonMatrix:
    """Compare every size-ordered pair of the given palettes.

    Pairs of equal size are skipped with a note; per-pair errors (for
    example a sized-only palette without a supplied accuracy cost) are
    collected as notes instead of aborting the batch. Rows are sorted by
    (n1, n2, p2_name) regardless of input or evaluation order.
    """
    if len(palettes) < 2:
        raise DomainError(f"need at least 2 palettes, got {len(palettes)}")
    supplied_da = supplied_da or {}
    rows = []
    notes = []
    for i, a in enumerate(palettes):
        for b in palettes[i + 1 :]:
            if a.n_colors == b.n_colors:
                notes.append(f"skipped {a.name} vs {b.name}: equal sizes (n={a.n_colors})")
                continue
            p2, p1 = (a, b) if a.n_colors > b.n_colors else (b, a)
            try:
                rows.append(compare(p2, p1, supplied_da.get((p2.name, p1.name))))
            except ChromacapError as exc:
                notes.append(f"skipped {p2.name} vs {p1.name}: {exc}")
    rows.sort(key=lambda r: (r.n1, r.n2, r.p2_name))
    return ComparisonMatrix(tuple(rows), tuple(notes))


# The bundled HCCB comparison set: 24 pairings of the two HCCB palettes with
# maximally-separated palettes of 3..15 colors. The palettes behind the family
# labels are unpublished, so their accuracy costs are carried here as supplied
# inputs rather than recomputed.
HCCB_COMPARISON_PAIRINGS: tuple[tuple[str, str, float], ...] = (
    ("HCCB4", "3c", 1.000),
    ("HCCB4", "4e", 1.000),
    ("6s", "HCCB4", 0.000),
    ("7a", "HCCB4", 0.000),
    ("8b", "HCCB4", 0.000),
    ("9d", "HCCB4", 0.000),
    ("10c", "HCCB4", 0.178),
    ("11c", "HCCB4", 0.188),
    ("12d", "HCCB4", 0.294),
    ("13c", "HCCB4", 0.002),
    ("14c", "HCCB4", 0.002),
    ("15c", "HCCB4", 0.212),
    ("HCCB8", "3c", 1.000),
    ("HCCB8", "4e", 1.000),
    ("HCCB8", "5d", 0.332),
    ("HCCB8", "6s", 0.000),
    ("HCCB8", "7a", 0.000),
    ("9d", "HCCB8", 0.000),
    ("10c", "HCCB8", 0.178),
    ("11c", "HCCB8", 0.188),
    ("12d", "HCCB8", 0.294),
    ("13c", "HCCB8", 0.002),
    ("14c", "HCCB8", 0.002),
    ("15c", "HCCB8", 0.212),
)


def hccb_comparison_table() -> tuple[ComparisonRow, ...]:
    """The bundled 24-row HCCB comparison set, in its canonical order."""
    return tuple(
        compare(builtin_palette(p2), builtin_palette(p1), supplied_da=da)
        for p2, p1, da in HCCB_COMPARISON_PAIRINGS
    )


def capacity_report(p: Palette) -> CapacityReport:
    """Per-palette capacity summary; distance metrics are None when unavailable."""
    if p.is_sized_only or p.n_colors < 2:
        md = None
        ar = None
    else:
        md = min_pairwise_diff(p)
        ar = accuracy_requirement(p)
    return CapacityReport(
        palette_name=p.name,
        n_colors=p.n_colors,
        min_diff=md,
        accuracy_requirement=ar,
        entropy_paper=palette_entropy(p.n_colors, "paper"),
        entropy_shannon=palette_entropy(p.n_colors, "shannon"),
    )


COMPARISON_CSV_HEADER = "p2,p1,n2,n1,delta_density,delta_accuracy,ce,delta_h,da_source"


def _row_fields(row: ComparisonRow) -> list[str]:
    rep = row.reported()
    return [
        row.p2_name,
        row.p1_name,
        str(row.n2),
        str(row.n1),
        rep["delta_density"],
        rep["delta_accuracy"],
        rep["ce"],
        f"{row.entropy_gain_paper:.6f}",
        row.delta_accuracy_source,
    ]


def comparison_csv(rows: Iterable[ComparisonRow]) -> str:
    """CSV rendering: reported 3-decimal deltas/CE, 6-decimal entropy gain."""
    lines = [COMPARISON_CSV_HEADER]
    lines.extend(",".join(_row_fields(row)) for row in rows)
    return "\n".join(lines) + "\n"


def comparison_table_text(rows: Iterable[ComparisonRow]) -> str:
    """Aligned text-table rendering of comparison rows."""
    header = COMPARISON_CSV_HEADER.split(",")
    body = [_row_fields(row) for row in rows]
    widths = [max(len(h), *(len(r[i]) for r in body)) if body else len(h) for i, h in enumerate(header)]
    def fmt(fields):
        return "  ".join(f.ljust(w) for f, w in zip(fields, widths)).rstrip()
    return "\n".join([fmt(header)] + [fmt(r) for r in body]) + "\n"


def comparison_json_lines(rows: Iterable[ComparisonRow]) -> str:
    """One JSON object per row, carrying both raw values and the reported form."""
    out = []
    for row in rows:
        out.append(
            json.dumps(
                {
                    "p2": row.p2_name,
                    "p1": row.p1_name,
                    "n2": row.n2,
                    "n1": row.n1,
                    "delta_density": round(row.delta_density, 6),
                    "delta_accuracy": round(row.delta_accuracy, 6),
                    "ce": round(row.ce, 6),
                    "delta_h": round(row.entropy_gain_paper, 6),
                    "da_source": row.delta_accuracy_source,
                    "reported": row.reported(),
                }
            )
        )
    return "\n".join(out) + "\n"
