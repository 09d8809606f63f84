"""Finite poset arithmetic, exponentiation and exhaustive verification."""

from .canonical import (CanonicalKey, canonical_form, canonical_key, find_isomorphism,
                        invariants, is_isomorphic, poset_from_key)
from .catalog import Catalog, connected_posets, enumerate_posets
from .core import (ComponentPartition, HeightProfile, Poset, antichain, chain, components,
                   crown4, dual, from_covers, height, heights, interval, is_antichain, is_chain,
                   is_connected, is_trivial, product, sum, validate)
from .exponent import (CapExceeded, ExpPoset, c_exp, c_poset, constant_map, d_set, exponent,
                       monotone_maps)
from .factor import (FactorMultiset, common_factor_split, divide, factorize,
                     is_directly_irreducible)

__version__ = "0.1.0"
