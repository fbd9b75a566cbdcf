"""Desk-scale towers of direct powers: tensor censuses and growth series."""

from .census import (
    CensusCheck,
    FactorData,
    LevelCensus,
    check_tensor_census,
    chop_counts,
    direct_h1_series,
    explicit_classes,
    h1_product_rule,
    h1_series,
    level_census,
    tensor_module,
)
from .growth import GrowthReport, GrowthSeries, InsufficientData, growth_report, slope_fit
from .spec import TowerSpec, TowerSpecError, factor_group

__all__ = [
    "CensusCheck", "FactorData", "LevelCensus", "check_tensor_census", "chop_counts", "direct_h1_series",
    "explicit_classes", "h1_product_rule", "h1_series", "level_census", "tensor_module",
    "GrowthReport", "GrowthSeries", "InsufficientData", "growth_report", "slope_fit",
    "TowerSpec", "TowerSpecError", "factor_group",
]
