"""Frobenius splittings of polynomial rings over F_p."""

from ._fsplit import (
    FsplitError,
    Polynomial,
    Ring,
    apply,
    cartier_top,
    certify_chain,
    check_splitting,
    d_splitting_check,
    exists_compatible_splitting,
    fedder_module,
    is_compatible,
    matrix_factors,
    matrix_ring,
    matrix_section,
    nilpotent_witness,
    origin_coefficient,
    p1_extension_check,
    phi_poly,
    residue_step,
    run_corpus,
    search_chain,
    semigroup_split_check,
    sigma0,
)

__all__ = [
    "FsplitError",
    "Polynomial",
    "Ring",
    "apply",
    "cartier_top",
    "certify_chain",
    "check_splitting",
    "d_splitting_check",
    "exists_compatible_splitting",
    "fedder_module",
    "is_compatible",
    "matrix_factors",
    "matrix_ring",
    "matrix_section",
    "nilpotent_witness",
    "origin_coefficient",
    "p1_extension_check",
    "phi_poly",
    "residue_step",
    "run_corpus",
    "search_chain",
    "semigroup_split_check",
    "sigma0",
]
