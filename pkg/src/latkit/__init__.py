"""Exact integral lattices: discriminant forms, gluing, genus, isometry
extension and the A2 orthogonal-square computation."""

from .a2 import (A2Vector, a2_orthogonal_generator, a2_orthogonal_square,
                 same_square_embedding_equivalence)
from .core import (A2, A2_NEG, E8, E8_NEG, U, Lattice, catalog, change_basis, diagonal, direct_sum,
                   disc, discriminant_group, divisibility, is_definite, is_even, is_unimodular, length,
                   make_lattice, odd_unimodular, parity, power, rescale, signature)
from .discform import (Answer, disc_form_automorphisms, genus_tuple, lattice_to_disc_image_surjective,
                       nikulin_criteria, same_genus, torsion_form_isomorphic)
from .dsl import evaluate, lattice_from_text, parse_lattice_expr, pretty
from .embed import (INCONCLUSIVE, OBSTRUCTED, PrimitiveSublattice, glue_data, orthogonal_complement,
                    overlattice_from_glue, saturate, transcendental_disc_candidates,
                    unimodular_embedding_obstruction)
from .errors import (Degenerate, DegenerateComplement, InvalidIsometry, LatticeError, NonIntegralGlue,
                     NonIntegralRescale, NotDefinite, NotIsotropic, NotPrime, NotPrimitive, NotSymmetric,
                     ParseError, TooLarge, UnknownName, ZeroSpan, ZeroVector)
from .extend import (Incompatible, SplitLattice, coprime_glue_triviality, extend_isometry,
                     extension_criterion, minus_one_obstruction, split_lattice)
from .isometry import Isometry, definite_isometries, short_vectors
from .torsion import TorsionQuadraticForm

__version__ = "0.1.0"

__all__ = [
    "A2Vector",
    "a2_orthogonal_generator",
    "a2_orthogonal_square",
    "same_square_embedding_equivalence",
    "A2",
    "A2_NEG",
    "E8",
    "E8_NEG",
    "U",
    "Lattice",
    "catalog",
    "change_basis",
    "diagonal",
    "direct_sum",
    "disc",
    "discriminant_group",
    "divisibility",
    "is_definite",
    "is_even",
    "is_unimodular",
    "length",
    "make_lattice",
    "odd_unimodular",
    "parity",
    "power",
    "rescale",
    "signature",
    "Answer",
    "disc_form_automorphisms",
    "genus_tuple",
    "lattice_to_disc_image_surjective",
    "nikulin_criteria",
    "same_genus",
    "torsion_form_isomorphic",
    "evaluate",
    "lattice_from_text",
    "parse_lattice_expr",
    "pretty",
    "INCONCLUSIVE",
    "OBSTRUCTED",
    "PrimitiveSublattice",
    "glue_data",
    "orthogonal_complement",
    "overlattice_from_glue",
    "saturate",
    "transcendental_disc_candidates",
    "unimodular_embedding_obstruction",
    "Degenerate",
    "DegenerateComplement",
    "InvalidIsometry",
    "LatticeError",
    "NonIntegralGlue",
    "NonIntegralRescale",
    "NotDefinite",
    "NotIsotropic",
    "NotPrime",
    "NotPrimitive",
    "NotSymmetric",
    "ParseError",
    "TooLarge",
    "UnknownName",
    "ZeroSpan",
    "ZeroVector",
    "Incompatible",
    "SplitLattice",
    "coprime_glue_triviality",
    "extend_isometry",
    "extension_criterion",
    "minus_one_obstruction",
    "split_lattice",
    "Isometry",
    "definite_isometries",
    "short_vectors",
    "TorsionQuadraticForm",
]
