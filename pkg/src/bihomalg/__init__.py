"""Exact-arithmetic kernel for BiHom-type algebras: structure records and
axiom checkers, Rota-Baxter and Baxter operators with their derived
constructions, augmented planar binary trees and the free construction,
bimodules and generalized Rota-Baxter operators, pseudotwistors, and a
finite-field brute-force operator search."""

from .scalars import FieldSpec, Scalar, parse_scalar, scalar_eq, scalar_to_str
from .linalg import (LinearMap, StructureTable, Vector, apply_bilinear,
                     block_diag, maps_commute, tensor2, tensor3)
from .structures import (BiHomAssociativeAlgebra, BiHomDendriform,
                         BiHomQuadri, BiHomTridendriform, CheckReport,
                         check_bihom_associative, check_dendriform,
                         check_quadri, check_structure, check_tridendriform,
                         embed_dend_in_tridend, quadri_projections,
                         tensor_quadri, total_product, tridend_to_dend,
                         yau_twist)
from .rota_baxter import (OneSidedBaxter, RBOperator, baxter_pair_product,
                          check_one_sided_baxter, check_rb_on_dendriform,
                          check_rota_baxter, commuting_pair_quadri, rb_derive,
                          rb_dendriform_to_quadri, rb_double_product,
                          rb_persists_under_twist)
from .trees import (BAugTree, FreeElement, LEAF, PlanarBinaryTree, RBAugTree,
                    action_eval, decompose, enumerate_trees, free_alpha,
                    free_beta, free_multiply, free_R, graft, parse_tree,
                    serialize_tree, tree_alpha, tree_beta, tree_R,
                    TruncatedIdealReducer, truncated_ideal_reduce)
from .bimodules import (BiHomBimodule, GRBOperator, check_bimodule, check_grb,
                        grb_hat, grb_to_dendriform, grb_transpose_actions,
                        split_null_extension, yau_twist_bimodule)
from .pseudotwistors import (PseudotwistorWithCompanions, WeakPseudotwistor,
                             as_weak, baxter_pair_pseudotwistor,
                             check_pseudotwistor, check_weak_pseudotwistor,
                             compose_pseudotwistors, induced_weak_companion,
                             rb_pseudotwistor, twisted_algebra)
from .families import (FAMILY_IDS, evaluate_two_param_algebra, evaluate_rb_family,
                       two_param_algebra, rb_family, symbolic_two_param_algebra,
                       symbolic_rb_family, verify_parametric_family)
from .search import (SearchResult, enumerate_baxter, enumerate_rb,
                     index_to_matrix)
from .specfile import parse_spec, serialize

__version__ = "0.1.0"
