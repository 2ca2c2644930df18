"""chromacap: information capacity, cost-effectiveness, and construction of RGB palettes."""

from .capacity import (
    AlphabetSpec,
    Distribution,
    EntropyDecomposition,
    JointDistribution,
    Mode,
    distribution_entropy,
    entropy_gain,
    joint_alphabet_entropy,
    joint_decomposition,
    palette_entropy,
    product_entropy,
    self_information,
)
from .channel import ChannelModel, SimResult, decode_nearest, perturb, symbol_error_rate
from .construction import (
    ConstructionConfig,
    ConstructionResult,
    brute_force_optimal,
    construct,
    greedy_farthest,
    grid_values,
    local_search_improve,
)
from .cost import (
    ComparisonMatrix,
    ComparisonRow,
    accuracy_requirement,
    capacity_report,
    compare,
    comparison_csv,
    comparison_json_lines,
    comparison_matrix,
    comparison_table_text,
    cost_effectiveness,
    delta_accuracy,
    delta_density,
    hccb_comparison_table,
    round_reported,
)
from .errors import (
    ChromacapError,
    DomainError,
    MissingAccuracyError,
    ParseError,
    SizedOnlyPaletteError,
    TooFewColorsError,
    TooLargeError,
    UnknownPaletteError,
)
from .palette import (
    MAX_DIFF,
    CapacityReport,
    Color,
    Palette,
    builtin_names,
    builtin_palette,
    color_diff,
    load_palette,
    min_pairwise_diff,
    parse_palette,
    parse_palette_csv,
    serialize_palette,
    validate_palette,
)

__version__ = "0.1.0"

__all__ = [
    "AlphabetSpec",
    "CapacityReport",
    "ChannelModel",
    "ChromacapError",
    "Color",
    "ComparisonMatrix",
    "ComparisonRow",
    "ConstructionConfig",
    "ConstructionResult",
    "Distribution",
    "DomainError",
    "EntropyDecomposition",
    "JointDistribution",
    "MAX_DIFF",
    "MissingAccuracyError",
    "Mode",
    "Palette",
    "ParseError",
    "SimResult",
    "SizedOnlyPaletteError",
    "TooFewColorsError",
    "TooLargeError",
    "UnknownPaletteError",
    "accuracy_requirement",
    "brute_force_optimal",
    "builtin_names",
    "builtin_palette",
    "capacity_report",
    "color_diff",
    "compare",
    "comparison_csv",
    "comparison_json_lines",
    "comparison_matrix",
    "comparison_table_text",
    "construct",
    "cost_effectiveness",
    "decode_nearest",
    "delta_accuracy",
    "delta_density",
    "distribution_entropy",
    "entropy_gain",
    "greedy_farthest",
    "grid_values",
    "hccb_comparison_table",
    "joint_alphabet_entropy",
    "joint_decomposition",
    "load_palette",
    "local_search_improve",
    "min_pairwise_diff",
    "palette_entropy",
    "parse_palette",
    "parse_palette_csv",
    "perturb",
    "product_entropy",
    "round_reported",
    "self_information",
    "serialize_palette",
    "symbol_error_rate",
    "validate_palette",
]
