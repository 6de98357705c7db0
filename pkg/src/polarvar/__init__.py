"""Exact polar-variety constructions over a large prime field.

The package builds classic and dual polar ideals of polynomial complete
intersections, measures their dimension, degree, and singular loci through
reduced Groebner bases, and replicates the random-quadric singular-locus
experiment together with the explicit singular and meagerly generic
families.
"""

from .field import DEFAULT_PRIME, FieldElement, PrimeField, field_inverse, is_prime
from .poly import Point, Polynomial, differentiate, evaluate, multiply
from .parsing import ParseError, parse_polynomial, parse_system
from .matrices import (ConstMatrix, PolyMatrix, determinant_division_free,
                       enumerate_minors, jacobian, minor_count, rank_at_point)
from .groebner import (BudgetExceededError, GBLimits, GroebnerBasis,
                       IdealPresentation, StaircaseSummary, degree, dimension,
                       hilbert_numerator, localize_rabinowitsch, normal_form,
                       reduced_groebner_basis, staircase_summary,
                       standard_monomial_count)
from .polar import (CLASSIC, DUAL, MinorCapExceededError, PolarIdealResult,
                    PolarSpec, PolarSpecError, PointClassificationError,
                    SmoothnessReport, classic_polar_ideal, delta_generators,
                    delta_ideal, dual_polar_ideal, incidence_fiber_dim,
                    polar_generators, polar_ideal, polar_stack,
                    singular_locus_generators, singular_locus_ideal,
                    thom_boardman_class, verify_smooth_complete_intersection)
from .families import (ChainReport, DegreeReport, Family31Instance,
                       MeagerMatrixZ, WitnessReport, build_family_31,
                       corner_minor, degree_domination_check, example1_transform,
                       example2_chain, example2_matrix, transform_matrix,
                       transform_matrix_symbolic, unitriangular_inverse,
                       verify_singular_witness)
from .experiment import (CellResult, CellSpec, SamplePointsResult, derive_seed,
                         expected_singular_dim, random_dense_poly,
                         random_full_rank_matrix, random_smooth_system,
                         run_cell, run_grid, sample_points_small_field,
                         summarize_grid)

__version__ = "0.1.0"
