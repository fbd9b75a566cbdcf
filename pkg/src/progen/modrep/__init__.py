"""Modules over finite group algebras: MeatAxe, censuses, generation and projectives."""

from .census import IrrCensus, IrrClass, irr_census, module_census
from .genprob import (
    HeadTerm,
    head,
    head_data,
    hom_growth_sum,
    max_submodule_census,
    max_submodules_enum,
    min_generators,
    min_generators_brute,
    module_gen_prob,
    module_gen_prob_brute,
    module_gen_prob_enum,
    module_gen_prob_mc,
    radical,
)
from .hom import endo_degree, endo_field, hom_dim, hom_space, i_mult, is_iso
from .io import format_module, load_module, parse_module
from .meataxe import composition_factors, find_split, is_irreducible
from .module import GModule, augmentation_module, permutation_module, regular_module, tensor_outer, trivial_module, zero_module
from .projective import Cover, PIMTable, Resolution, minimal_resolution, pim_table, projective_cover

__all__ = [
    "IrrCensus", "IrrClass", "irr_census", "module_census",
    "HeadTerm", "head", "head_data", "hom_growth_sum", "max_submodule_census", "max_submodules_enum",
    "min_generators", "min_generators_brute", "module_gen_prob", "module_gen_prob_brute",
    "module_gen_prob_enum", "module_gen_prob_mc", "radical",
    "endo_degree", "endo_field", "hom_dim", "hom_space", "i_mult", "is_iso",
    "format_module", "load_module", "parse_module",
    "composition_factors", "find_split", "is_irreducible",
    "GModule", "augmentation_module", "permutation_module", "regular_module", "tensor_outer",
    "trivial_module", "zero_module",
    "Cover", "PIMTable", "Resolution", "minimal_resolution", "pim_table", "projective_cover",
]
