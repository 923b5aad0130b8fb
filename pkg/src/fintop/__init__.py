"""Generalized open sets and locally closed sets on finite topological spaces."""

from fintop.core import (
    FiniteSpace,
    InvalidSpaceError,
    SetFamily,
    SpaceSizeError,
    closure,
    delta_closure,
    delta_interior,
    format_family,
    format_space,
    format_subset,
    interior,
    parse_space,
    parse_subset,
    product_space,
    regular_open_family,
    validate_space,
)
from fintop.local import LCVariant, LCWitness, lc_family, lc_witness
from fintop.variants import Variant, is_variant_open, variant_closed_family, variant_open_family

__version__ = "0.1.0"

__all__ = [
    "FiniteSpace",
    "InvalidSpaceError",
    "LCVariant",
    "LCWitness",
    "SetFamily",
    "SpaceSizeError",
    "Variant",
    "closure",
    "delta_closure",
    "delta_interior",
    "format_family",
    "format_space",
    "format_subset",
    "interior",
    "is_variant_open",
    "lc_family",
    "lc_witness",
    "parse_space",
    "parse_subset",
    "product_space",
    "regular_open_family",
    "validate_space",
    "variant_closed_family",
    "variant_open_family",
]
