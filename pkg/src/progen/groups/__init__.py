"""Permutation groups, subgroup lattices, chief series and generation probabilities."""

from .chief import ChiefFactor, ChiefSeries, chief_series, delta
from .genprob import (
    MCEstimate,
    gen_prob_brute,
    gen_prob_enum,
    gen_prob_exact,
    gen_prob_mc,
    normal_gen_prob,
    normal_gen_prob_brute,
    normal_gen_prob_mc,
    rng_for,
)
from .homomorphism import GroupHom, Quotient, centralizer_kernel, is_frattini_cover, quotient, quotient_by
from .io import format_group, load_group, parse_group
from .lattice import SubgroupLattice, frattini, frattini_mask, maximal_masks, maximal_subgroups, subgroup_lattice
from .named import corpus_small_ids, direct_product, named_group, power, psl25_on_lines, sl25
from .perm import Perm, parse_cycles
from .permgroup import PermGroup
from .small import all_small_groups, small_group

__all__ = [
    "ChiefFactor", "ChiefSeries", "chief_series", "delta",
    "MCEstimate", "gen_prob_brute", "gen_prob_enum", "gen_prob_exact", "gen_prob_mc",
    "normal_gen_prob", "normal_gen_prob_brute", "normal_gen_prob_mc", "rng_for",
    "GroupHom", "Quotient", "centralizer_kernel", "is_frattini_cover", "quotient", "quotient_by",
    "format_group", "load_group", "parse_group",
    "SubgroupLattice", "frattini", "frattini_mask", "maximal_masks", "maximal_subgroups", "subgroup_lattice",
    "corpus_small_ids", "direct_product", "named_group", "power", "psl25_on_lines", "sl25",
    "Perm", "parse_cycles", "PermGroup", "all_small_groups", "small_group",
]
