"""Block decomposition for finite-dimensional modules of twisted loop algebras.

The library is organised bottom-up:

``rootsys``
    Exact root-system arithmetic in fundamental-weight coordinates: Cartan
    matrices, Weyl orbits and dimensions, Freudenthal multiplicities, Smith
    normal form and the weight-lattice quotient P/Q.
``folding``
    Diagram automorphisms of order 2 and 3 and the folded systems they
    induce (A3 -> C2, D4 -> G2, E6 -> F4, ...).
``drinfeld``
    Polynomial data for untwisted loop-algebra modules: dominant weights
    attached to spectral coordinates, with monoid multiplication.
``twisted``
    The folding map on polynomial data, its fibers, and canonical
    preimages — the combinatorial heart.
``spectral``
    Spectral characters, their twist-symmetrization, and block labels.
``linkage``
    Adjoint tensor decompositions and explicit linkage chains certifying
    that two dominant weights lie in the same block.
``selfcheck``
    Independent brute-force oracles cross-checking all of the above.
``cli``
    JSON/text command-line interface (``python -m loopblocks ...``).
"""

from .drinfeld import (Coordinate, DrinfeldPoly, EMPTY, dual, is_asym,
                       lambda_of, multiply, normalize_poly, poly_from_pairs,
                       sigma_on_poly)
from .errors import (FixedNodeSupport, InvalidType, LoopBlocksError,
                     MalformedTwisted, NonDominant, NoSuchAutomorphism,
                     NotFoundWithinBound, NotInRootLattice, ParityViolation)
from .folding import (FoldedSystem, build_folding, check_folded_weight, embed,
                      in_P_sigma_plus, lambda_component, sigma_on_coset,
                      sigma_on_weight)
from .linkage import (Chain, adjoint_tensor_decompose, hom_nonzero,
                      linkage_chain, verify_chain)
from .rootsys import (CartanLabel, FundGroupElt, RootSystem, all_roots,
                      build_root_system, dominance_geq, dominant_weights_below,
                      in_root_lattice, is_dominant, lift_coset, minus_w0,
                      project_mod_Q, reflect_to_dominant, root_coords,
                      smith_normal_form, stabilizer_order,
                      weight_multiplicities, weyl_dim, weyl_group_order,
                      weyl_orbit_size, zero_coset)
from .spectral import (BlockLabel, EMPTY_CHAR, SpectralCharacter, add_chars,
                       add_labels, block_label, char_of, equiv_sigma,
                       equiv_sigma_witness, normalize_char, same_block,
                       sigma_conjugate_char, symmetrize)
from .twisted import (TWISTED_EMPTY, TwistedPoly, TwistedRoot, asym_collapse,
                      canonical_preimage, check_twisted, fiber, fold,
                      lambda_of_twisted, twisted_multiply,
                      twisted_pi_lambda_a)

__version__ = "0.1.0"

__all__ = [
    "BlockLabel", "CartanLabel", "Chain", "Coordinate", "DrinfeldPoly",
    "EMPTY", "EMPTY_CHAR", "FixedNodeSupport", "FoldedSystem", "FundGroupElt",
    "InvalidType", "LoopBlocksError", "MalformedTwisted", "NonDominant",
    "NoSuchAutomorphism", "NotFoundWithinBound", "NotInRootLattice",
    "ParityViolation", "RootSystem", "SpectralCharacter", "TWISTED_EMPTY",
    "TwistedPoly", "TwistedRoot", "add_chars", "add_labels",
    "adjoint_tensor_decompose", "all_roots", "asym_collapse", "block_label",
    "build_folding", "build_root_system", "canonical_preimage", "char_of",
    "check_folded_weight", "check_twisted", "dominance_geq",
    "dominant_weights_below", "dual", "embed", "equiv_sigma",
    "equiv_sigma_witness", "fiber", "fold", "hom_nonzero", "in_P_sigma_plus",
    "in_root_lattice", "is_asym", "is_dominant", "lambda_component",
    "lambda_of", "lambda_of_twisted", "lift_coset", "linkage_chain",
    "minus_w0", "multiply", "normalize_char", "normalize_poly",
    "poly_from_pairs", "project_mod_Q", "reflect_to_dominant", "root_coords",
    "same_block", "sigma_conjugate_char", "sigma_on_coset", "sigma_on_poly",
    "sigma_on_weight", "smith_normal_form", "stabilizer_order", "symmetrize",
    "twisted_multiply", "twisted_pi_lambda_a", "verify_chain",
    "weight_multiplicities", "weyl_dim", "weyl_group_order", "weyl_orbit_size",
    "zero_coset",
]
