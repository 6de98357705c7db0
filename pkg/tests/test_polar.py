"""Polar constructions: worked instances, degeneracies, pointwise ranks."""

import random

import pytest

from polarvar.field import PrimeField
from polarvar.groebner import normal_form, reduced_groebner_basis, IdealPresentation
from polarvar.matrices import ConstMatrix, minor_count
from polarvar.parsing import parse_polynomial
from polarvar.polar import (MinorCapExceededError, PolarSpec, PolarSpecError,
                            PointClassificationError, analyze_ideal,
                            classic_polar_ideal, delta_generators, delta_ideal,
                            dual_polar_ideal, incidence_fiber_dim,
                            polar_generators, polar_ideal, polar_stack,
                            singular_locus_generators, singular_locus_ideal,
                            thom_boardman_class,
                            verify_smooth_complete_intersection)
from polarvar.experiment import (derive_seed, random_dense_poly,
                                 random_full_rank_matrix)


def P(text, n, field):
    return parse_polynomial(text, n, field)


@pytest.fixture(scope="module")
def circle(K):
    return P("x1^2+x2^2-1", 2, K)


@pytest.fixture(scope="module")
def sphere(K):
    return P("x1^2+x2^2+x3^2-1", 3, K)


def test_classic_circle_two_points(K, circle):
    spec = PolarSpec.classic(2, 1, 1, [circle], ConstMatrix(K, [[1, 0]]))
    R = classic_polar_ideal(spec)
    assert (R.dim, R.degree, R.codim_in_S) == (0, 2, 1)


def test_classic_linear_form_is_empty(K):
    spec = PolarSpec.classic(2, 1, 1, [P("x1", 2, K)], ConstMatrix(K, [[3, 7]]))
    R = classic_polar_ideal(spec)
    assert R.dim == -1 and R.degree == 0 and R.codim_in_S is None


def test_classic_sphere_equator(K, sphere):
    spec = PolarSpec.classic(3, 1, 1, [sphere],
                             ConstMatrix(K, [[1, 0, 0], [0, 1, 0]]))
    R = classic_polar_ideal(spec)
    assert (R.dim, R.degree) == (1, 2)
    # the construction forces x3 = 0 on the sphere
    G = R.gb
    assert normal_form(P("x3", 3, K) * P("x3", 3, K), G).is_zero or \
        normal_form(P("x3", 3, K), G).is_zero


def test_dual_circle_distance_critical_points(K, circle):
    spec = PolarSpec.dual(2, 1, 1, [circle], ConstMatrix(K, [[2, 0]]),
                          column0=[1])
    R = dual_polar_ideal(spec)
    assert (R.dim, R.degree) == (0, 2)
    # the single stacked determinant reduces to a multiple of x2
    gens = polar_generators(spec)
    assert gens[1].monic() == P("x2", 2, K)


def test_dual_circle_center_degenerates(K, circle):
    spec = PolarSpec.dual(2, 1, 1, [circle], ConstMatrix(K, [[0, 0]]),
                          column0=[1], strict=False)
    gens = polar_generators(spec)
    assert gens[1].is_zero  # symbolic cancellation about the center
    R = dual_polar_ideal(spec)
    assert R.dim == 1  # the whole circle


def test_dual_with_zero_offsets_matches_classic(K, circle):
    classic = PolarSpec.classic(2, 1, 1, [circle], ConstMatrix(K, [[1, 0]]))
    dual = PolarSpec.dual(2, 1, 1, [circle], ConstMatrix(K, [[1, 0]]),
                          column0=[0])
    assert polar_generators(classic) == polar_generators(dual)


def test_spec_preconditions(K, circle):
    with pytest.raises(PolarSpecError):
        PolarSpec.classic(2, 1, 1, [circle], ConstMatrix(K, [[0, 0]]))
    with pytest.raises(PolarSpecError):
        PolarSpec.classic(2, 1, 2, [circle], ConstMatrix(K, [[1, 0]]))
    with pytest.raises(PolarSpecError):
        PolarSpec.classic(2, 1, 1, [circle, circle], ConstMatrix(K, [[1, 0]]))
    with pytest.raises(PolarSpecError):
        PolarSpec.classic(3, 1, 1, [circle], ConstMatrix(K, [[1, 0, 0]]))
    spec = PolarSpec.dual(2, 1, 1, [circle], ConstMatrix(K, [[1, 0]]))
    with pytest.raises(PolarSpecError):
        classic_polar_ideal(spec)


def test_polar_stack_shape(K, sphere):
    spec = PolarSpec.classic(3, 1, 1, [sphere],
                             ConstMatrix(K, [[1, 0, 0], [0, 1, 0]]))
    stack = polar_stack(spec)
    assert (stack.rows, stack.cols) == (3, 3)  # (n-i+1) x n
    assert minor_count(stack, 3) == 1


def test_delta_of_sphere_is_empty(K, sphere):
    spec = PolarSpec.classic(3, 1, 1, [sphere],
                             ConstMatrix(K, [[1, 0, 0], [0, 1, 0]]))
    assert delta_ideal(spec).dim == -1


def test_delta_minor_bookkeeping_at_top_index(K):
    # i = n - p: the stack has p+1 rows; delta minors are one size smaller
    # and every polar generator lies in the delta ideal (Laplace expansion)
    field = PrimeField()
    n, p, i = 3, 1, 2
    sphere = P("x1^2+x2^2+x3^2-1", 3, field)
    spec = PolarSpec.classic(n, p, i, [sphere], ConstMatrix(field, [[1, 2, 3]]))
    polar_gens = polar_generators(spec)
    delta_gens = delta_generators(spec)
    assert len(polar_gens) == 1 + 3   # F plus C(3,2) maximal minors
    assert len(delta_gens) == 1 + minor_count(polar_stack(spec), n - i)
    G = reduced_groebner_basis(
        IdealPresentation(field, n, delta_gens))
    for g in polar_gens:
        assert normal_form(g, G).is_zero


def test_delta_codimension_on_random_system(K):
    # (n, p, i) = (6, 2, 1): the degeneracy locus has dimension at most
    # n - p - 2i - 2 = 0
    rng = random.Random(derive_seed(2024, 6, 2))
    F = [random_dense_poly(rng, K, 6) for _ in range(2)]
    assert verify_smooth_complete_intersection(F).ok
    a = random_full_rank_matrix(rng, K, 4, 6)
    spec = PolarSpec.classic(6, 2, 1, F, a)
    d = delta_ideal(spec).dim
    assert d <= 0


def test_pure_codimension_on_random_instances(K):
    rng = random.Random(derive_seed(7, 7, 7))
    for n, p, i in [(3, 1, 1), (3, 2, 1), (4, 2, 1), (4, 1, 2)]:
        F = [random_dense_poly(rng, K, n) for _ in range(p)]
        if not verify_smooth_complete_intersection(F).ok:
            continue
        a = random_full_rank_matrix(rng, K, n - p - i + 1, n)
        for spec in (PolarSpec.classic(n, p, i, F, a),
                     PolarSpec.dual(n, p, i, F, a)):
            R = polar_ideal(spec)
            assert R.dim in (-1, n - p - i)
            if R.dim >= 0:
                assert R.codim_in_S == i


def test_singular_locus_classic_examples(K, circle):
    cross = analyze_ideal(K, 2, 1, [P("x1*x2", 2, K)])
    assert singular_locus_ideal(cross, 1).dim == 0
    cusp = analyze_ideal(K, 2, 1, [P("x2^2-x1^3", 2, K)])
    assert singular_locus_ideal(cusp, 1).dim == 0
    smooth = analyze_ideal(K, 2, 1, [circle])
    assert singular_locus_ideal(smooth, 1).dim == -1


def test_singular_locus_preconditions(K, circle):
    R = analyze_ideal(K, 2, 1, [circle])
    with pytest.raises(PolarSpecError):
        singular_locus_ideal(R, 2)  # wrong codimension
    empty = analyze_ideal(K, 1, 1, [P("x1", 1, K), P("x1+1", 1, K)])
    with pytest.raises(PolarSpecError):
        singular_locus_ideal(empty, 1)


def test_minor_cap_triggers_explicit_error(K):
    gens = [P("x1^2+x2^2+x3^2-1", 3, K), P("x1*x2-x3", 3, K),
            P("x1*x3-x2", 3, K)]
    with pytest.raises(MinorCapExceededError):
        singular_locus_generators(gens, 2, cap=3)


def test_verify_smooth_complete_intersection_cases(K, circle):
    assert verify_smooth_complete_intersection([circle]).ok
    cross = verify_smooth_complete_intersection([P("x1*x2", 2, K)])
    assert cross.regular_sequence_ok and not cross.smooth_ok
    bad = verify_smooth_complete_intersection(
        [P("x1", 2, K), P("x1+1", 2, K)])
    assert not bad.regular_sequence_ok
    assert bad.prefix_dims == (1, -1)


def test_thom_boardman_class_on_sphere(K, sphere):
    a = ConstMatrix(K, [[1, 0, 0], [0, 1, 0]])
    assert thom_boardman_class([sphere], a, [1, 0, 0]) == 1
    assert thom_boardman_class([sphere], a, [0, 0, 1]) == 0
    with pytest.raises(PointClassificationError):
        thom_boardman_class([sphere], a, [0, 0, 0])


def test_thom_boardman_rejects_singular_points(K):
    cross = P("x1*x2", 2, K)
    a = ConstMatrix(K, [[1, 1]])
    with pytest.raises(PointClassificationError):
        thom_boardman_class([cross], a, [0, 0])


def test_incidence_fiber_dimensions(K, sphere):
    a = ConstMatrix(K, [[1, 0, 0], [0, 1, 0]])
    assert incidence_fiber_dim([sphere], a, [1, 0, 0], 1) == 0
    assert incidence_fiber_dim([sphere], a, [0, 0, 1], 1) == -1
    degenerate = ConstMatrix(K, [[1, 0, 0], [1, 0, 0]])
    assert incidence_fiber_dim([sphere], degenerate, [1, 0, 0], 1) == 1


def test_fiber_equals_class_minus_index_everywhere(K, sphere):
    a = ConstMatrix(K, [[1, 0, 0], [0, 1, 0]])
    for x in ([1, 0, 0], [0, 1, 0], [0, 0, 1]):
        j = thom_boardman_class([sphere], a, x)
        for i in (1, 2):
            assert incidence_fiber_dim([sphere], a, x, i) == j - i
