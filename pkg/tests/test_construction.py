"""Tests for greedy seeding, local search, full construction, and the brute-force oracle."""
from itertools import combinations

import numpy as np
import pytest

from chromacap import (
    Color,
    ConstructionConfig,
    DomainError,
    Palette,
    TooLargeError,
    brute_force_optimal,
    builtin_palette,
    color_diff,
    construct,
    greedy_farthest,
    grid_values,
    local_search_improve,
    min_pairwise_diff,
    validate_palette,
)

TETRA = Palette("tetra4", (Color(0, 0, 0), Color(0, 255, 255), Color(255, 0, 255), Color(255, 255, 0)))


def cube_field(point):
    """L1 distance from every cube color to the given point, as a (256,256,256) array."""
    axes = [np.abs(np.arange(256) - c) for c in point]
    return axes[0][:, None, None] + axes[1][None, :, None] + axes[2][None, None, :]


class TestGridValues:
    def test_two_levels(self):
        assert grid_values(2) == (0, 255)

    def test_three_levels_rounds_half_away(self):
        assert grid_values(3) == (0, 128, 255)

    def test_four_levels(self):
        assert grid_values(4) == (0, 85, 170, 255)

    def test_domain(self):
        with pytest.raises(DomainError):
            grid_values(1)


class TestGreedyFarthest:
    def test_n2_from_origin(self):
        # oracle: exhaustive scan of the cube for the farthest point from the origin
        field = cube_field((0, 0, 0))
        assert int(field.max()) == 765
        pal = greedy_farthest(2, Color(0, 0, 0))
        assert pal.colors == (Color(0, 0, 0), Color(255, 255, 255))
        assert min_pairwise_diff(pal) == 765

    def test_n3_from_origin(self):
        # oracle: the best third point given two opposite corners is the
        # exhaustive argmax of min(distance to each), attained at 382
        field = np.minimum(cube_field((0, 0, 0)), cube_field((255, 255, 255)))
        best = int(field.max())
        assert best == 382
        pal = greedy_farthest(3, Color(0, 0, 0))
        assert pal.colors[2] == Color(0, 127, 255)  # lexicographically smallest argmax
        assert min_pairwise_diff(pal) == best

    def test_tie_break_is_lexicographic(self):
        field = np.minimum(cube_field((0, 0, 0)), cube_field((255, 255, 255)))
        best = int(field.max())
        first = np.unravel_index(int(field.argmax()), field.shape)  # C-order = lex order
        pal = greedy_farthest(3, Color(0, 0, 0))
        assert pal.colors[2].as_tuple() == tuple(int(x) for x in first)
        assert int(field[first]) == best

    def test_n4_on_corner_grid(self):
        # greedy picks an antipodal pair first, after which every remaining
        # corner sits at 255 from some chosen corner
        pal = greedy_farthest(4, Color(0, 0, 0), grid_levels=2)
        assert pal.colors[:2] == (Color(0, 0, 0), Color(255, 255, 255))
        assert min_pairwise_diff(pal) == 255

    def test_grid_snaps_start(self):
        pal = greedy_farthest(2, Color(7, 250, 100), grid_levels=2)
        assert pal.colors[0] == Color(0, 255, 0)  # each channel snapped to the grid

    def test_grid_capacity_guard(self):
        with pytest.raises(DomainError):
            greedy_farthest(9, Color(0, 0, 0), grid_levels=2)

    def test_deterministic(self):
        a = greedy_farthest(6, Color(10, 20, 30))
        b = greedy_farthest(6, Color(10, 20, 30))
        assert a == b


class TestLocalSearchImprove:
    def test_optimal_tetrahedron_is_fixed_point(self):
        cfg = ConstructionConfig(n=4)
        assert local_search_improve(TETRA, cfg).colors == TETRA.colors

    def test_single_unit_move(self):
        p = Palette("near", (Color(0, 0, 0), Color(254, 255, 255)))
        improved = local_search_improve(p, ConstructionConfig(n=2))
        assert improved.colors == (Color(0, 0, 0), Color(255, 255, 255))

    def test_improves_tight_pair(self):
        p = Palette("tight", (Color(0, 0, 0), Color(0, 0, 1), Color(255, 0, 0)))
        improved = local_search_improve(p, ConstructionConfig(n=3))
        assert min_pairwise_diff(improved) > 1

    def test_never_degrades(self):
        rng = np.random.default_rng(7)
        cfg = ConstructionConfig(n=5)
        for _ in range(10):
            pts = {tuple(int(v) for v in rng.integers(0, 256, 3)) for _ in range(5)}
            while len(pts) < 5:
                pts.add(tuple(int(v) for v in rng.integers(0, 256, 3)))
            p = Palette("r", tuple(Color(*t) for t in sorted(pts)))
            before = min_pairwise_diff(p)
            assert min_pairwise_diff(local_search_improve(p, cfg)) >= before


class TestBruteForceOracle:
    def test_opposite_corners_exist_in_any_grid(self):
        assert brute_force_optimal(2, 2).achieved_min_diff == 765
        assert brute_force_optimal(2, 4).achieved_min_diff == 765

    def test_four_corners(self):
        result = brute_force_optimal(4, 2)
        assert result.achieved_min_diff == 510
        # independently recheck with a direct enumeration over all 70 subsets
        corners = [(r, g, b) for r in (0, 255) for g in (0, 255) for b in (0, 255)]
        best = max(
            min(sum(abs(x - y) for x, y in zip(a, b)) for a, b in combinations(s, 2))
            for s in combinations(corners, 4)
        )
        assert best == 510

    def test_three_of_27(self):
        assert brute_force_optimal(3, 3).achieved_min_diff == 510

    def test_result_consistency(self):
        result = brute_force_optimal(3, 2)
        assert result.achieved_min_diff == min_pairwise_diff(result.palette)
        assert validate_palette(result.palette) == []

    def test_guard(self):
        with pytest.raises(TooLargeError):
            brute_force_optimal(10, 6)

    def test_lexicographic_tiebreak(self):
        # for n=2 on the corner grid several pairs reach 765; the first in
        # lexicographic subset order starts at the origin
        result = brute_force_optimal(2, 2)
        assert result.palette.colors[0] == Color(0, 0, 0)


class TestConstructionConfig:
    def test_defaults(self):
        cfg = ConstructionConfig(n=5)
        assert cfg.restarts == 8 and cfg.step_schedule == (64, 16, 4, 1)
        assert cfg.start_color == Color(0, 0, 0) and cfg.grid_levels is None

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"n": 1},
            {"n": 4, "restarts": 0},
            {"n": 4, "step_schedule": (64, 16)},
            {"n": 4, "step_schedule": (16, 64, 1)},
            {"n": 4, "step_schedule": ()},
            {"n": 9, "grid_levels": 2},
        ],
    )
    def test_validation(self, kwargs):
        with pytest.raises(DomainError):
            ConstructionConfig(**kwargs)


class TestConstruct:
    def test_n2_reaches_cube_diameter(self):
        assert construct(ConstructionConfig(n=2)).achieved_min_diff == 765

    def test_n3_matches_oracle(self):
        assert construct(ConstructionConfig(n=3)).achieved_min_diff == 510

    def test_n4_matches_oracle(self):
        assert construct(ConstructionConfig(n=4)).achieved_min_diff == 510

    def test_n8_at_least_corner_solution(self):
        assert construct(ConstructionConfig(n=8)).achieved_min_diff >= 255

    def test_dominates_corner_grid_oracle_through_n8(self):
        for n in range(2, 9):
            grid_best = brute_force_optimal(n, 2).achieved_min_diff
            assert construct(ConstructionConfig(n=n)).achieved_min_diff >= grid_best

    def test_result_fields(self):
        result = construct(ConstructionConfig(n=5, seed=3))
        assert result.palette.name == "ms5-seed3"
        assert result.achieved_min_diff == min_pairwise_diff(result.palette)
        assert result.restarts_used == 5 or result.restarts_used == 8  # default restarts
        assert result.palette.n_colors == 5
        assert validate_palette(result.palette) == []

    def test_deterministic(self):
        cfg = ConstructionConfig(n=12, seed=11, restarts=2)
        assert construct(cfg) == construct(cfg)

    def test_monotone_restart_budget(self):
        results = [
            construct(ConstructionConfig(n=6, seed=5, restarts=r)).achieved_min_diff
            for r in (1, 2, 4, 8)
        ]
        assert all(b >= a for a, b in zip(results, results[1:]))

    def test_min_diff_non_increasing_in_n(self):
        values = [
            construct(ConstructionConfig(n=n, restarts=2)).achieved_min_diff
            for n in range(2, 17)
        ]
        assert all(b <= a for a, b in zip(values, values[1:]))

    def test_grid_restricted(self):
        result = construct(ConstructionConfig(n=4, grid_levels=2, restarts=2))
        allowed = set(grid_values(2))
        for c in result.palette.colors:
            assert set(c.as_tuple()) <= allowed

    def test_outputs_distinct_colors(self):
        for n in (3, 7, 10):
            result = construct(ConstructionConfig(n=n, restarts=2))
            assert len(set(result.palette.colors)) == n
