"""Equivariant unoriented cobordism of spaces with finitely many stationary points.

Models record only the isotropy representations at stationary points of a
``(Z_2)^q`` action; Stong's invariant of such a model decides whether the
class vanishes.
"""

from .characters import Character, char_compose, char_embed_product, char_eval
from .cobordism import (PairingWitness, check_dold_equivalence, dold_eta_formula, eta,
                        euler_parity, translation_family, is_null_cobordant,
                        pairing_witness, rp_nonvanishing_criterion)
from .repring import (Element, Monomial, elem_add, elem_mul, elem_square, mono_mul,
                      mono_substitute_twist)
from .spaces import (ConjugationModel, FixedPointModel, FlagSpec, ProjSpec,
                     complex_flag_space, complex_from_real, disjoint_union,
                     dold_fixed_data, flag_fixed_points, point_space, product_space,
                     proj_space, real_flag_space, real_flag_tangent)

__all__ = [
    "Character", "char_compose", "char_embed_product", "char_eval",
    "PairingWitness", "check_dold_equivalence", "dold_eta_formula", "eta", "euler_parity",
    "translation_family", "is_null_cobordant", "pairing_witness",
    "rp_nonvanishing_criterion",
    "Element", "Monomial", "elem_add", "elem_mul", "elem_square", "mono_mul",
    "mono_substitute_twist",
    "ConjugationModel", "FixedPointModel", "FlagSpec", "ProjSpec", "complex_flag_space",
    "complex_from_real", "disjoint_union", "dold_fixed_data", "flag_fixed_points",
    "point_space", "product_space", "proj_space", "real_flag_space", "real_flag_tangent",
]
