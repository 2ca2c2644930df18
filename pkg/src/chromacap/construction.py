"""Construction of maximally-separated palettes: greedy seeding, local search, brute-force oracle."""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import DomainError, SizedOnlyPaletteError, TooFewColorsError, TooLargeError
from .palette import Color, Palette, min_pairwise_diff, serialize_palette

# Sentinel larger than any real distance (765), used to pad objective vectors.
_PAD = 1024

# |i - j| for every pair of channel values; rows are views used as lookup tables.
_CHANNEL_ABS = np.abs(
    np.arange(256, dtype=np.int16)[:, None] - np.arange(256, dtype=np.int16)[None, :]
)

_LCG_MULT = 6364136223846793005
_LCG_INC = 1442695040888963407
_MASK64 = (1 << 64) - 1


def _round_half_away(x: float) -> int:
    return math.floor(x + 0.5) if x >= 0 else math.ceil(x - 0.5)


def grid_values(levels: int) -> tuple[int, ...]:
    """The uniform channel grid {round(i*255/(levels-1))}, rounding half away from zero."""
    if levels < 2:
        raise DomainError(f"grid_levels must be >= 2, got {levels}")
    return tuple(_round_half_away(i * 255 / (levels - 1)) for i in range(levels))


def _snap_to_grid(color: tuple[int, int, int], levels: int) -> tuple[int, int, int]:
    vals = grid_values(levels)
    return tuple(vals[_round_half_away(c * (levels - 1) / 255)] for c in color)


@dataclass(frozen=True)
class ConstructionConfig:
    """Parameters of the palette construction search.

    step_schedule must be strictly decreasing and end at 1. grid_levels, when
    set, restricts every candidate color (greedy picks, restart seeds, and
    local-search moves) to the uniform channel grid.
    """

    n: int
    seed: int = 0
    restarts: int = 8
    step_schedule: tuple[int, ...] = (64, 16, 4, 1)
    start_color: Color = Color(0, 0, 0)
    grid_levels: int | None = None

    def __post_init__(self):
        if self.n < 2:
            raise DomainError(f"palette size must be >= 2, got {self.n}")
        if self.restarts < 1:
            raise DomainError(f"restarts must be >= 1, got {self.restarts}")
        schedule = tuple(self.step_schedule)
        object.__setattr__(self, "step_schedule", schedule)
        if not schedule or any(s < 1 for s in schedule) or schedule[-1] != 1:
            raise DomainError(f"step schedule must be positive and end at 1, got {schedule}")
        if any(a <= b for a, b in zip(schedule, schedule[1:])):
            raise DomainError(f"step schedule must be strictly decreasing, got {schedule}")
        if self.grid_levels is not None:
            if self.grid_levels < 2:
                raise DomainError(f"grid_levels must be >= 2, got {self.grid_levels}")
            if self.grid_levels**3 < self.n:
                raise DomainError(
                    f"grid of {self.grid_levels}^3 points cannot hold {self.n} colors"
                )


@dataclass(frozen=True)
class ConstructionResult:
    palette: Palette
    achieved_min_diff: int
    restarts_used: int
    improving_moves: int


def _seeded_start_colors(seed: int, count: int) -> list[tuple[int, int, int]]:
    # Restart seeds come from a fixed 64-bit LCG (Knuth MMIX constants); each
    # channel is the top byte of one successive state, so the sequence for a
    # given seed is a prefix of the sequence for any larger restart count.
    state = seed & _MASK64
    colors = []
    for _ in range(count):
        channels = []
        for _ in range(3):
            state = (state * _LCG_MULT + _LCG_INC) & _MASK64
            channels.append(state >> 56)
        colors.append(tuple(channels))
    return colors


def _greedy_full_cube(n: int, start: tuple[int, int, int]) -> list[tuple[int, int, int]]:
    # dl[r, g*256 + b] = min distance from (r, g, b) to the chosen set.
    # Row-slab processing keeps each 64 KiB slab cache-resident; argmax per row
    # with strict > across rows yields the lexicographically smallest maximizer.
    dl = np.empty((256, 65536), dtype=np.int16)
    tmp = np.empty(65536, dtype=np.int16)
    chosen = [start]
    r0, g0, b0 = start
    gb = (_CHANNEL_ABS[g0][:, None] + _CHANNEL_ABS[b0][None, :]).ravel()
    dr = _CHANNEL_ABS[r0]
    for r in range(256):
        np.add(gb, dr[r], out=dl[r])
    while len(chosen) < n:
        best = -1
        best_r = best_j = 0
        for r in range(256):
            row = dl[r]
            j = int(row.argmax())
            v = int(row[j])
            if v > best:
                best, best_r, best_j = v, r, j
        r0, g0, b0 = best_r, best_j >> 8, best_j & 0xFF
        chosen.append((r0, g0, b0))
        if len(chosen) == n:
            break
        gb = (_CHANNEL_ABS[g0][:, None] + _CHANNEL_ABS[b0][None, :]).ravel()
        dr = _CHANNEL_ABS[r0]
        for r in range(256):
            np.add(gb, dr[r], out=tmp)
            np.minimum(dl[r], tmp, out=dl[r])
    return chosen


def _greedy_grid(n: int, start: tuple[int, int, int], levels: int) -> list[tuple[int, int, int]]:
    vals = grid_values(levels)
    candidates = np.array(
        [(r, g, b) for r in vals for g in vals for b in vals], dtype=np.int32
    )  # lexicographic order, so argmax ties resolve to the smallest color
    if n > len(candidates):
        raise DomainError(f"grid of {len(candidates)} points cannot hold {n} colors")
    snapped = _snap_to_grid(start, levels)
    chosen = [snapped]
    dl = np.abs(candidates - np.asarray(snapped)).sum(axis=1)
    while len(chosen) < n:
        j = int(dl.argmax())
        point = tuple(int(x) for x in candidates[j])
        chosen.append(point)
        dl = np.minimum(dl, np.abs(candidates - candidates[j]).sum(axis=1))
    return chosen


def greedy_farthest(n: int, start: Color, grid_levels: int | None = None) -> Palette:
    """Greedy farthest-point palette of n colors.

    The first color is the start color (snapped to the grid when one is set);
    each subsequent color maximizes the minimum distance to the colors chosen
    so far, ties resolved to the lexicographically smallest (r, g, b).
    Fully deterministic.
    """
    if n < 2:
        raise DomainError(f"palette size must be >= 2, got {n}")
    if grid_levels is None:
        if n > 256**3:
            raise DomainError(f"the cube holds only {256 ** 3} colors, requested {n}")
        points = _greedy_full_cube(n, start.as_tuple())
    else:
        points = _greedy_grid(n, start.as_tuple(), grid_levels)
    return Palette(f"greedy{n}", tuple(Color(*p) for p in points))


def _lex_greater(a: np.ndarray, b: np.ndarray) -> bool:
    neq = a != b
    if not neq.any():
        return False
    i = int(np.argmax(neq))
    return bool(a[i] > b[i])


def _candidate_moves(
    colors: np.ndarray, step: int, grid_vals: np.ndarray | None
) -> tuple[np.ndarray, np.ndarray]:
    """All in-range single-channel moves, ordered (color index, channel, -step, +step)."""
    n = len(colors)
    cand = np.repeat(colors, 6, axis=0)
    rows = np.arange(6 * n)
    chan = np.tile([0, 0, 1, 1, 2, 2], n)
    delta = np.tile([-step, step], 3 * n)
    moved = cand[rows, chan] + delta
    cand[rows, chan] = moved
    owner = np.repeat(np.arange(n), 6)
    valid = (moved >= 0) & (moved <= 255)
    if grid_vals is not None:
        valid &= np.isin(moved, grid_vals)
    return cand[valid], owner[valid]


def _local_search(
    colors: np.ndarray, steps: tuple[int, ...], grid: frozenset[int] | None
) -> tuple[np.ndarray, int]:
    """Steepest-ascent single-color coordinate search.

    The objective is the full sorted vector of pairwise distances, compared
    lexicographically (smallest distance first). A move is applied only when
    it strictly increases that vector; among improving moves the largest
    resulting vector wins, earliest in scan order (color index, channel,
    -step then +step) on exact ties.

    Moving one color replaces exactly its own distance row in the pair
    multiset, so a candidate beats the current configuration iff its sorted
    new row lexicographically exceeds the owner's sorted old row. That check
    is vectorized over all candidates; full sorted vectors are materialized
    only to rank the (typically few) qualifying moves against each other.
    """
    n = len(colors)
    iu = np.triu_indices(n, 1)
    touch = (iu[0][None, :] == np.arange(n)[:, None]) | (
        iu[1][None, :] == np.arange(n)[:, None]
    )
    not_owner = ~np.eye(n, dtype=bool)
    grid_vals = np.array(sorted(grid), dtype=np.int16) if grid is not None else None
    work = colors.astype(np.int16)  # channels and distances both fit comfortably
    dmat = np.abs(work[:, None, :] - work[None, :, :]).sum(axis=2, dtype=np.int16)
    np.fill_diagonal(dmat, _PAD)
    moves = 0
    for step in steps:
        while True:
            old_rows = np.sort(dmat, axis=1)[:, : n - 1]
            cand, owner = _candidate_moves(work, step, grid_vals)
            if not len(cand):
                break
            k_idx = np.arange(len(cand))
            dist = np.abs(cand[:, None, :] - work[None, :, :]).sum(axis=2, dtype=np.int16)
            dist[k_idx, owner] = _PAD
            new_rows = np.sort(dist, axis=1)[:, : n - 1]

            old = old_rows[owner]
            neq = new_rows != old
            any_neq = neq.any(axis=1)
            first = np.argmax(neq, axis=1)
            qualifying = np.flatnonzero(
                any_neq & (new_rows[k_idx, first] > old[k_idx, first])
            )
            if not len(qualifying):
                break
            # A qualifier matches the current sorted vector up to the value
            # where its own row first deviates upward, so the smallest such
            # value identifies the steepest group; only exact ties within it
            # need their full vectors ranked.
            divergence = old[qualifying, first[qualifying]]
            group = qualifying[divergence == divergence.min()]
            chosen = int(group[0])
            if len(group) > 1:
                cond = dmat[iu]

                def full_vector(k: int) -> np.ndarray:
                    rest = cond[~touch[owner[k]]]
                    return np.sort(np.concatenate([rest, dist[k][not_owner[owner[k]]]]))

                best_vec = full_vector(chosen)
                for k in group[1:]:
                    vec = full_vector(int(k))
                    if _lex_greater(vec, best_vec):
                        best_vec, chosen = vec, int(k)
            o = int(owner[chosen])
            work[o] = cand[chosen]
            row = dist[chosen]  # distances from the new position; self already _PAD
            dmat[o, :] = row
            dmat[:, o] = row
            moves += 1
    return work.astype(colors.dtype), moves


def local_search_improve(p: Palette, cfg: ConstructionConfig) -> Palette:
    """Improve an explicit palette by steepest-ascent coordinate moves.

    Step sizes follow cfg.step_schedule largest first; at each size the best
    improving move is reapplied until none exists, and the search ends once
    the unit step offers no improvement. The result's min pairwise distance
    is never below the input's.
    """
    if p.is_sized_only:
        raise SizedOnlyPaletteError(f"palette {p.name!r} has no explicit colors")
    if len(p.colors) < 2:
        raise TooFewColorsError(f"palette {p.name!r} needs >= 2 colors to improve")
    grid = frozenset(grid_values(cfg.grid_levels)) if cfg.grid_levels else None
    arr = np.array([c.as_tuple() for c in p.colors], dtype=np.int64)
    arr, _ = _local_search(arr, cfg.step_schedule, grid)
    return Palette(p.name, tuple(Color(*(int(x) for x in row)) for row in arr))


def construct(cfg: ConstructionConfig) -> ConstructionResult:
    """Build a maximally-separated palette of cfg.n colors.

    Runs the greedy seeding from cfg.start_color plus (restarts - 1) runs
    from LCG-seeded start colors, improves each with the local search, and
    keeps the best result by (min pairwise distance, lexicographically
    smallest serialized palette). Deterministic for a fixed config,
    independent of evaluation order.
    """
    name = f"ms{cfg.n}-seed{cfg.seed}"
    starts = [cfg.start_color.as_tuple()] + _seeded_start_colors(cfg.seed, cfg.restarts - 1)
    grid = frozenset(grid_values(cfg.grid_levels)) if cfg.grid_levels else None
    best_key = None
    best_palette = None
    best_md = -1
    best_moves = 0
    for start in starts:
        seeded = greedy_farthest(cfg.n, Color(*start), cfg.grid_levels)
        arr = np.array([c.as_tuple() for c in seeded.colors], dtype=np.int64)
        arr, moves = _local_search(arr, cfg.step_schedule, grid)
        palette = Palette(name, tuple(Color(*(int(x) for x in row)) for row in arr))
        md = min_pairwise_diff(palette)
        key = (-md, serialize_palette(palette))
        if best_key is None or key < best_key:
            best_key, best_palette, best_md, best_moves = key, palette, md, moves
    return ConstructionResult(
        palette=best_palette,
        achieved_min_diff=best_md,
        restarts_used=cfg.restarts,
        improving_moves=best_moves,
    )


# Guard for the exhaustive oracle: at most this many subsets are enumerated.
BRUTE_FORCE_LIMIT = 10_000_000


def brute_force_optimal(n: int, grid_levels: int) -> ConstructionResult:
    """Exhaustive max-min oracle over all n-subsets of the channel grid.

    Enumerates subsets in lexicographic order and keeps the first one
    attaining the best min pairwise distance, so ties resolve to the
    lexicographically smallest subset. Intended as the ground truth for
    small instances; raises TooLargeError beyond BRUTE_FORCE_LIMIT subsets.
    """
    if n < 2:
        raise DomainError(f"palette size must be >= 2, got {n}")
    vals = grid_values(grid_levels)
    candidates = [(r, g, b) for r in vals for g in vals for b in vals]
    if n > len(candidates):
        raise DomainError(f"grid of {len(candidates)} points cannot hold {n} colors")
    total = math.comb(len(candidates), n)
    if total > BRUTE_FORCE_LIMIT:
        raise TooLargeError(
            f"{total} subsets exceed the {BRUTE_FORCE_LIMIT} enumeration guard"
        )
    best_md = -1
    best_subset = None
    for subset in combinations(candidates, n):
        md = _PAD
        for a, b in combinations(subset, 2):
            d = abs(a[0] - b[0]) + abs(a[1] - b[1]) + abs(a[2] - b[2])
            if d < md:
                md = d
                if md <= best_md:
                    break
        if md > best_md:
            best_md = md
            best_subset = subset
    palette = Palette(
        f"bf{n}-grid{grid_levels}", tuple(Color(*p) for p in best_subset)
    )
    return ConstructionResult(
        palette=palette,
        achieved_min_diff=best_md,
        restarts_used=0,
        improving_moves=0,
    )
