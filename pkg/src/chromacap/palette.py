"""Colors, palettes, the city-block color difference, file I/O, and the built-in registry."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path

from .errors import (
    ParseError,
    SizedOnlyPaletteError,
    TooFewColorsError,
    UnknownPaletteError,
)

# Largest city-block distance between two 8-bit RGB colors: 3 * 255.
MAX_DIFF = 765


@dataclass(frozen=True, order=True)
class Color:
    """One point of the discrete 8-bit RGB cube."""

    r: int
    g: int
    b: int

    def __post_init__(self):
        for channel, value in (("r", self.r), ("g", self.g), ("b", self.b)):
            if isinstance(value, bool) or not isinstance(value, int):
                raise ValueError(f"channel {channel}={value!r}: expected an integer")
            if not 0 <= value <= 255:
                raise ValueError(f"channel {channel}={value}: out of range [0, 255]")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.r, self.g, self.b)


@dataclass(frozen=True)
class Palette:
    """A named, ordered collection of colors.

    A palette may be "sized-only": the color count is known but the colors
    themselves are not (``colors`` is empty and ``n_colors`` is positive).
    Capacity metrics need only the size; distance-based metrics raise
    SizedOnlyPaletteError on such palettes.
    """

    name: str
    colors: tuple[Color, ...] = ()
    n_colors: int = 0  # 0 means "derive from colors"

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        if self.n_colors == 0:
            object.__setattr__(self, "n_colors", len(self.colors))
        if self.n_colors < 1:
            raise ValueError(f"palette {self.name!r}: n_colors must be >= 1")

    @classmethod
    def sized(cls, name: str, n_colors: int) -> "Palette":
        """A palette whose size is known but whose colors are unpublished."""
        return cls(name, (), n_colors)

    @property
    def is_sized_only(self) -> bool:
        return not self.colors


@dataclass(frozen=True)
class CapacityReport:
    """Derived per-palette quantities; distance fields are None for sized-only palettes."""

    palette_name: str
    n_colors: int
    min_diff: int | None
    accuracy_requirement: float | None
    entropy_paper: float
    entropy_shannon: float


def color_diff(a: Color, b: Color) -> int:
    """City-block (L1) distance between two colors, in [0, 765]."""
    return abs(a.r - b.r) + abs(a.g - b.g) + abs(a.b - b.b)


def min_pairwise_diff(p: Palette) -> int:
    """Smallest color difference over all unordered pairs of the palette."""
    if p.is_sized_only:
        raise SizedOnlyPaletteError(f"palette {p.name!r} has no explicit colors")
    if len(p.colors) < 2:
        raise TooFewColorsError(f"palette {p.name!r} has {len(p.colors)} color(s); need >= 2")
    return min(color_diff(a, b) for a, b in combinations(p.colors, 2))


def validate_palette(p: Palette) -> list[str]:
    """Check palette invariants; returns a list of violations (empty means ok).

    Violations are data, not faults: duplicate colors and a colors/n_colors
    length mismatch are reported, never raised. Channel ranges are enforced
    by Color itself and rejected at parse time.
    """
    violations = []
    seen: dict[tuple[int, int, int], int] = {}
    for i, c in enumerate(p.colors):
        key = c.as_tuple()
        if key in seen:
            violations.append(f"duplicate color {key} at indices {seen[key]},{i}")
        else:
            seen[key] = i
    if p.colors and len(p.colors) != p.n_colors:
        violations.append(f"length mismatch: {len(p.colors)} colors but n_colors={p.n_colors}")
    return violations


def _parse_channel(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{where}: expected an integer, got {value!r}")
    if not 0 <= value <= 255:
        raise ParseError(f"{where}: channel out of range [0, 255], got {value}")
    return value


def _parse_color_triple(entry, where: str) -> Color:
    if not isinstance(entry, (list, tuple)) or len(entry) != 3:
        raise ParseError(f"{where}: expected an [r, g, b] triple")
    r, g, b = (_parse_channel(v, f"{where}[{j}]") for j, v in enumerate(entry))
    return Color(r, g, b)


def parse_palette(text: str) -> Palette:
    """Parse the canonical palette document (JSON with name plus colors or n_colors)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise ParseError("top-level value must be an object")
    unknown = sorted(set(doc) - {"name", "colors", "n_colors"})
    if unknown:
        raise ParseError(f"unknown field(s): {', '.join(unknown)}")
    name = doc.get("name")
    if not isinstance(name, str) or not name:
        raise ParseError("field 'name': expected a non-empty string")

    n_colors = doc.get("n_colors")
    if n_colors is not None:
        if isinstance(n_colors, bool) or not isinstance(n_colors, int):
            raise ParseError(f"field 'n_colors': expected an integer, got {n_colors!r}")
        if n_colors < 1:
            raise ParseError(f"field 'n_colors': must be >= 1, got {n_colors}")

    if "colors" in doc:
        raw = doc["colors"]
        if not isinstance(raw, list) or not raw:
            raise ParseError("field 'colors': expected a non-empty array of [r, g, b] triples")
        colors = tuple(_parse_color_triple(entry, f"colors[{i}]") for i, entry in enumerate(raw))
        return Palette(name, colors, n_colors or 0)
    if n_colors is None:
        raise ParseError("document must carry either 'colors' or 'n_colors'")
    return Palette.sized(name, n_colors)


def parse_palette_csv(text: str, name: str) -> Palette:
    """Parse the CSV palette form: header r,g,b then one color per row."""
    rows = list(csv.reader(io.StringIO(text)))
    rows = [(lineno, row) for lineno, row in enumerate(rows, start=1) if any(f.strip() for f in row)]
    if not rows:
        raise ParseError("empty CSV document")
    header = [f.strip().lower() for f in rows[0][1]]
    if header != ["r", "g", "b"]:
        raise ParseError(f"line {rows[0][0]}: expected header r,g,b, got {','.join(header)}")
    if len(rows) < 2:
        raise ParseError("CSV document has a header but no color rows")
    colors = []
    for lineno, row in rows[1:]:
        if len(row) != 3:
            raise ParseError(f"line {lineno}: expected 3 fields, got {len(row)}")
        channels = []
        for field in row:
            field = field.strip()
            try:
                channels.append(int(field))
            except ValueError:
                raise ParseError(f"line {lineno}: expected an integer, got {field!r}") from None
        colors.append(_parse_color_triple(channels, f"line {lineno}"))
    return Palette(name, tuple(colors))


def serialize_palette(p: Palette) -> str:
    """Emit the canonical palette document; parse(serialize(p)) == p."""
    if p.is_sized_only:
        doc: dict = {"name": p.name, "n_colors": p.n_colors}
    else:
        doc = {"name": p.name, "colors": [[c.r, c.g, c.b] for c in p.colors]}
        if p.n_colors != len(p.colors):
            doc["n_colors"] = p.n_colors
    return json.dumps(doc)


def load_palette(path: str | Path) -> Palette:
    """Load a palette file; .csv uses the CSV form with the name taken from the filename."""
    path = Path(path)
    text = path.read_text()
    if path.suffix.lower() == ".csv":
        return parse_palette_csv(text, path.stem)
    return parse_palette(text)


def _cube_corners() -> tuple[Color, ...]:
    return tuple(Color(r, g, b) for r in (0, 255) for g in (0, 255) for b in (0, 255))


# Sized-only entries for the palette family used by the bundled HCCB comparison
# set: the leading integer of each label is the palette size; the letter suffix
# distinguishes construction variants whose color values are unpublished.
_FAMILY_LABELS = ("3c", "4e", "5d", "6s", "7a", "8b", "9d", "10c", "11c", "12d", "13c", "14c", "15c")

_REGISTRY: dict[str, Palette] = {
    "bw2": Palette("bw2", (Color(0, 0, 0), Color(255, 255, 255))),
    "corners8": Palette("corners8", _cube_corners()),
    # HCCB4 is a family label, not a size: that variant uses a 5-color palette,
    # and the bundled comparison data is consistent only with N=5.
    "HCCB4": Palette.sized("HCCB4", 5),
    "HCCB8": Palette.sized("HCCB8", 8),
}
_REGISTRY.update({label: Palette.sized(label, int(label[:-1])) for label in _FAMILY_LABELS})


def builtin_names() -> tuple[str, ...]:
    """Registry names, sorted."""
    return tuple(sorted(_REGISTRY))


def builtin_palette(name: str) -> Palette:
    """Look up a registry palette.

    Note: "HCCB4" is sized-only with n_colors=5 (the 4 in the name is a
    variant label, not the color count); "HCCB8" is sized-only with 8.
    """
    try:
        return _REGISTRY[name]
    except KeyError:
        raise UnknownPaletteError(
            f"unknown palette {name!r}; known: {', '.join(builtin_names())}"
        ) from None
