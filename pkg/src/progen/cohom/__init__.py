"""Group cohomology in low degrees, Ext, extensions and growth sums."""

from .bar import CochainSpace, fixed_points, h_dim_bar, left_action_matrices
from .decomposition import H1Decomposition, h1_decomposition, h_prime
from .ext import ext_dim, h_dim
from .growth import GrowthEntry, GrowthTable, RatioReport, growth_sums, h2_ratio_report, merge_tables
from .extension import Extension, NotACocycle, check_cocycle, extension_from_cocycle, h2_class_reps, nonsplit_cocycle, schur_p_rank
from .reduced import ReducedCocycles, h_dim_reduced

__all__ = [
    "CochainSpace", "fixed_points", "h_dim_bar", "left_action_matrices",
    "H1Decomposition", "h1_decomposition", "h_prime",
    "ext_dim", "h_dim",
    "Extension", "NotACocycle", "check_cocycle", "extension_from_cocycle", "h2_class_reps", "nonsplit_cocycle", "schur_p_rank",
    "GrowthEntry", "GrowthTable", "RatioReport", "growth_sums", "h2_ratio_report", "merge_tables",
    "ReducedCocycles", "h_dim_reduced",
]
