"""Exact-arithmetic SDIT and structure analysis of matrix Lie algebras."""

from .fields import GF, QQ, FieldError, GFElement, PrimeField, RationalField
from .linalg import (EnumerationGuardError, Matrix, ShapeError, Subspace,
                     char_poly, count_subspaces, enumerate_subspaces,
                     gaussian_binomial, kernel, pivot_columns, poly_eval,
                     rank, rational_roots, rref, solve, solve_in_span)
from .liealg import (LieStructure, MatrixSpace, NotClosedError,
                     NotSubalgebraError, SeriesReport, ad_matrix,
                     adjoint_space, associative_envelope, basis_ad_matrices,
                     bracket, bracket_coeffs, closure_check, common_kernel,
                     derived_series, generated_subalgebra, image_space,
                     is_nilpotent, is_self_normalizing, is_semisimple,
                     is_solvable, is_subalgebra, killing_form,
                     lower_central_series, normalizer, structure_constants,
                     subspace_matrices)
from .cartan import (CartanConfig, CartanResult, DescentStalledError,
                     cartan_as_matrix_space, cartan_subalgebra, fitting_null,
                     verify_cartan)
from .sdit import (HittingSet, NonCommutingError, NotLieAlgebraError,
                   NotSemisimpleError, SditVerdict, UnsupportedSpectrumError,
                   WeightDecomposition, hitting_set, random_rank_probe,
                   sdit_decide, semisimple_max_rank, singular_via_weights,
                   weights)
from .shrunk import (ChainError, CompositionFactor, CompositionSeries,
                     DeficitReport, NcrkReport, NotClosedSpaceError,
                     blockd_shrunk_check, composition_series, diagonal_blocks,
                     has_shrunk_bruteforce, has_shrunk_subspace,
                     ncrk_bruteforce, reduce_mod_p, shrink_deficit,
                     supermodularity_check)
from .kernelcert import (DegreeCapError, KernelCertificate,
                         NotAlternatingError, example2_space,
                         find_kernel_certificate, linker_cross_identity_check,
                         monomials, representation_hom_check,
                         verify_certificate)
from .families import (adjoint_of, borel_sl2, heisenberg, lambda_space,
                       make_example, middle_trivial_fixture,
                       random_alternating_family, sl2_basis_hef,
                       sl_monomial_cartan, sl_monomial_module_dim,
                       sl_monomial_rep, sl_standard, strict_upper_line)
from .spacefile import SpaceFileError, format_entry, parse_space, write_space

__version__ = "0.1.0"
