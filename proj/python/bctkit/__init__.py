"""Boomerang connectivity and difference distribution tables over GF(2^n)."""

from ._core import (
    Field,
    SBox,
    SizeLimitError,
    bct,
    bct_row,
    claim_ids,
    compose,
    ddt,
    default_irreducible,
    delta_certificate,
    family,
    family_names,
    from_monomial,
    inverse,
    is_permutation,
    make_field,
    moment,
    monomial_uniformity,
    parse_field,
    reproduce,
    two_uniform_certificate,
    uniformity,
    walsh,
    zieve_gammas,
)

__all__ = [
    "Field",
    "SBox",
    "SizeLimitError",
    "bct",
    "bct_row",
    "claim_ids",
    "compose",
    "ddt",
    "default_irreducible",
    "delta_certificate",
    "family",
    "family_names",
    "from_monomial",
    "inverse",
    "is_permutation",
    "make_field",
    "moment",
    "monomial_uniformity",
    "parse_field",
    "reproduce",
    "two_uniform_certificate",
    "uniformity",
    "walsh",
    "zieve_gammas",
]
__version__ = "0.1.0"
