"""loopchain: exact chain-level models of free loop spaces and their power maps.

A computer-algebra library for differential graded (co)algebras, bar and
cobar constructions, twisting cochains and their Hochschild complexes,
homological perturbation data, and simplicial free-loop-space models,
over Z and prime fields.
"""

from .chains import (
    Ring, ZZ, F2, F3, F5, RINGS,
    Token, generator, suspend, desuspend, tensor_token, word_token,
    Element, LinearMap, GradedBasis, ChainComplex,
    koszul_sign, tensor_map, tensor_maps, verify_chain_map, dualize,
    identity_map, zero_map, compose, add_maps,
    DegreeOverflowError, InfiniteTypeError,
)
from .snf import smith_normal_form, homology, HomologyBasis, HomologySummary

__all__ = [
    "Ring", "ZZ", "F2", "F3", "F5", "RINGS",
    "Token", "generator", "suspend", "desuspend", "tensor_token", "word_token",
    "Element", "LinearMap", "GradedBasis", "ChainComplex",
    "koszul_sign", "tensor_map", "tensor_maps", "verify_chain_map", "dualize",
    "identity_map", "zero_map", "compose", "add_maps",
    "DegreeOverflowError", "InfiniteTypeError",
    "smith_normal_form", "homology", "HomologyBasis", "HomologySummary",
]
