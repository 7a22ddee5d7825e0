"""Exact computation of twisted Alexander polynomials, group cohomology
and deformations of knot group representations over cyclotomic fields."""

from .cyclotomic import CycElt, CycField, cyclotomic_polynomial, euler_phi, field
from .laurent import (INF, LaurentPoly, associated, eval_and_multiplicity,
                      laurent_exact_div, laurent_gcd, laurent_to_str,
                      normalize_associate, parse_laurent)
from .linalg import Mat, MatL, det_laurent, gcd_of_minors, kernel_basis, rank
from .groups import (GroupRingElt, Presentation, Word, abelianization,
                     fox_derivative, parse_presentation, parse_word,
                     presentation_to_str, word_to_str)
from .reps import (RepModule, Representation, algebra_dimension,
                   build_adjoint, build_rho_lambda, build_tensor_dual,
                   catalog, check_representation, irreducible,
                   parse_representation, rep_apply, representation_to_str,
                   scalar_phi_rep, sym_square_rep, torus_knot_presentation,
                   trefoil_presentation, trefoil_sl2_rep, trefoil_sl3_rep,
                   trivial_rep)
from .alexander import (AlexanderData, alexander_data, delta0, delta1,
                        duality_check, wada_column_check, wada_quotient)
from .cohomology import (CochainComplex, CohomDims, Cocycle, Pairing,
                         build_complex, cocycle_basis, cocycle_extend,
                         cohomology_dims, cup_product, restrict_module,
                         scalar_pairing)
from .deform import (DEFORMABLE, INCONCLUSIVE, NO_IRRED_DEFORMATION,
                     CandidateReport, DeformReport, build_rho_cocycle,
                     character_sample, classify_deformation, eq17_sides,
                     infinitesimally_regular, nonsemisimple_locus,
                     parabolic_subspace_basis, rho_plus,
                     torsion_jump_equivalence)
from .trefoil import (CharCoords, CheckRecord, coords_from_traces,
                      duality_failure_counterexample, sl2_involution_check,
                      suite_passed, symmetry_step, trace_coordinates,
                      trefoil_suite)

__version__ = "0.1.0"
