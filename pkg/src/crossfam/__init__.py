"""Exact-arithmetic toolkit for cross t-intersecting set families.

A subset F of [n] is read as a lattice walk: element j present means an up
step at time j, absent means a right step. Everything downstream (the
hit-the-line families, the single-touch/multi-touch classification, the
shifting operators, the product-measure weights, the exhaustive small-n
search, and the inequality certification registry) is built on that view,
with all arithmetic done in exact rationals.
"""

from .families import (
    SubsetMask,
    Family,
    WalkClass,
    prefix_height,
    hits_line,
    lambda_family,
    classify_walk,
    frankl_family,
    hit_family,
    d_walk,
    e_walk,
    dual_t,
    shifts_to,
    upset_closure,
)
from .measure import (
    Rat,
    mu_weight,
    mu_frankl_closed,
    count_walks_avoiding_line,
    mu_hit_prob,
    mu_class_weight,
    optimal_r,
)
from .shifting import (
    ShiftedPair,
    shift_ij,
    shift_pair_to_fixpoint,
    is_shifted,
    is_cross_t_intersecting,
    maximal_partner,
    extract_ss,
    max_index,
)
from .search import (
    SearchResult,
    enumerate_upsets,
    max_product,
    verify_monotone_n,
    is_isomorphic_to_frankl,
    kneser_link_connected,
    uniqueness_witness_check,
)
from .certify import (
    EEnclosure,
    BoundContext,
    ClaimReport,
    f_bound,
    h_bound,
    g_bound,
    coeffs_21,
    coeffs_10,
    check_claim,
    certify_all,
    claim_ids,
)
from .familyfile import parse_family, serialize_family, FamilyFileError

__all__ = [
    "SubsetMask", "Family", "WalkClass",
    "prefix_height", "hits_line", "lambda_family", "classify_walk",
    "frankl_family", "hit_family", "d_walk", "e_walk", "dual_t",
    "shifts_to", "upset_closure",
    "Rat", "mu_weight", "mu_frankl_closed", "count_walks_avoiding_line",
    "mu_hit_prob", "mu_class_weight", "optimal_r",
    "ShiftedPair", "shift_ij", "shift_pair_to_fixpoint", "is_shifted",
    "is_cross_t_intersecting", "maximal_partner", "extract_ss", "max_index",
    "SearchResult", "enumerate_upsets", "max_product", "verify_monotone_n",
    "is_isomorphic_to_frankl", "kneser_link_connected",
    "uniqueness_witness_check",
    "EEnclosure", "BoundContext", "ClaimReport",
    "f_bound", "h_bound", "g_bound", "coeffs_21", "coeffs_10",
    "check_claim", "certify_all", "claim_ids",
    "parse_family", "serialize_family", "FamilyFileError",
]
