"""Explicit families with provably singular or provably smooth polar loci.

Three constructions live here:

* a family of pairs of quadrics (n >= 6) whose generic polar variety of
  codimension three in A^n carries a certified singular point xi, witnessed
  by exact vanishing of the full gradient of the stacked determinant at xi;

* the unit-triangular coordinate transform A(Z) whose inverse rows B_i(z)
  parametrize a meagerly generic family of classic polar varieties, with
  the exact identity B_i(z) A(z) = [O | I] and the nesting B_{i+1} inside
  B_i;

* the one-parameter dual family B_(i,gamma) whose localized polar
  varieties form a descending chain of smooth subvarieties, each of
  codimension one in the previous, localized away from the corner
  (p-1)-minor of the Jacobian.

Degree comparisons between these structured draws and uniformly random
full-rank draws back the empirical degree-domination check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .field import PrimeField
from .groebner import (DEFAULT_LIMITS, GBLimits, IdealPresentation,
                       localize_rabinowitsch, normal_form)
from .matrices import (ConstMatrix, PolyMatrix, determinant_division_free,
                       jacobian)
from .poly import Point, Polynomial, differentiate, evaluate
from .polar import (CLASSIC, PolarIdealResult, PolarSpec, PolarSpecError,
                    analyze_ideal, polar_generators,
                    singular_locus_generators, singular_locus_ideal,
                    verify_smooth_complete_intersection)


class FamilyDrawError(RuntimeError):
    """The bounded re-draw loop failed to hit a generic instance."""


# --------------------------------------------------------------- family (3.1)


@dataclass
class Family31Instance:
    """A pair of diagonal quadrics with a certified singular polar point."""

    field: PrimeField
    n: int
    c: ConstMatrix            # 2 x n, all entries and all 2x2 subdets nonzero
    a: ConstMatrix            # (n-2) x n, [c; a] invertible
    c1: int
    c2: int
    F1: Polynomial
    F2: Polynomial
    xi: Point

    def system(self) -> tuple[Polynomial, Polynomial]:
        return (self.F1, self.F2)

    def stacked_matrix(self) -> PolyMatrix:
        """The n x n matrix [J(F1,F2); a]."""
        return jacobian([self.F1, self.F2]).stack(self.a.to_poly_matrix(self.n))


def _diagonal_quadric(field: PrimeField, n: int, coeffs: Sequence[int],
                      const: int) -> Polynomial:
    terms = {}
    for j, cj in enumerate(coeffs):
        m = tuple(2 if k == j else 0 for k in range(n))
        terms[m] = cj % field.q
    terms[(0,) * n] = (-const) % field.q
    return Polynomial(field, n, terms)


def build_family_31(n: int, seed: int, field: PrimeField | None = None,
                    max_attempts: int = 50,
                    limits: GBLimits = DEFAULT_LIMITS) -> Family31Instance:
    """Draw matrices c, a and a point xi on the degeneracy space until every
    genericity requirement holds; the returned system is verified to be a
    smooth complete intersection vanishing at xi."""
    if n < 6:
        raise PolarSpecError("the singular family needs n >= 6")
    if field is None:
        field = PrimeField()
    if field.q == 2:
        raise PolarSpecError("characteristic two is rejected: the derivative "
                             "identity carries a factor 2")
    q = field.q
    rng = random.Random(seed)
    for _ in range(max_attempts):
        c_rows = [[rng.randrange(1, q) for _ in range(n)] for _ in range(2)]
        c = ConstMatrix(field, c_rows)
        if any(
            (c_rows[0][u] * c_rows[1][v] - c_rows[0][v] * c_rows[1][u]) % q == 0
                for u in range(n) for v in range(u + 1, n)):
            continue
        a = ConstMatrix(field, [[rng.randrange(q) for _ in range(n)]
                                for _ in range(n - 2)])
        stacked = ConstMatrix(field, list(c.entries) + list(a.entries))
        if stacked.rank() != n:
            continue
        # E: points x with both (c_{u,j} x_j)_j inside the row span of a,
        # i.e. orthogonal to the 2-dimensional kernel of a
        kernel = a.nullspace_basis()
        if len(kernel) != 2:
            continue
        cond_rows = [[c_rows[u][j] * v[j] % q for j in range(n)]
                     for u in range(2) for v in kernel]
        E_basis = ConstMatrix(field, cond_rows).nullspace_basis()
        if not E_basis:
            continue
        xi = _point_with_nonzero_leads(rng, field, E_basis)
        if xi is None:
            continue
        c1 = sum(c_rows[0][j] * xi[j] * xi[j] for j in range(n)) % q
        c2 = sum(c_rows[1][j] * xi[j] * xi[j] for j in range(n)) % q
        if c1 == 0 or c2 == 0:
            continue
        if any((c1 * c_rows[1][j] - c2 * c_rows[0][j]) % q == 0 for j in range(n)):
            continue
        F1 = _diagonal_quadric(field, n, c_rows[0], c1)
        F2 = _diagonal_quadric(field, n, c_rows[1], c2)
        if not verify_smooth_complete_intersection([F1, F2], limits).ok:
            continue
        return Family31Instance(field=field, n=n, c=c, a=a, c1=c1, c2=c2,
                                F1=F1, F2=F2, xi=Point(field, xi))
    raise FamilyDrawError(f"no generic draw found in {max_attempts} attempts")


def _point_with_nonzero_leads(rng: random.Random, field: PrimeField,
                              basis: list[tuple[int, ...]],
                              tries: int = 64) -> tuple[int, ...] | None:
    q = field.q
    n = len(basis[0])
    for _ in range(tries):
        coeffs = [rng.randrange(q) for _ in basis]
        x = [0] * n
        for t, v in zip(coeffs, basis):
            for j in range(n):
                x[j] = (x[j] + t * v[j]) % q
        if x[0] and x[1]:
            return tuple(x)
    return None


def _cofactor(M: PolyMatrix, row: int, col: int) -> Polynomial:
    """Signed cofactor of the (row, col) entry, 1-indexed."""
    rows = [r for r in range(M.rows) if r != row - 1]
    cols = [c for c in range(M.cols) if c != col - 1]
    minor = determinant_division_free(M.submatrix(rows, cols))
    return minor if (row + col) % 2 == 0 else -minor


@dataclass
class WitnessReport:
    """Exact checks certifying that xi is a singular point of the polar
    variety cut out by (F1, F2, det of the stacked matrix)."""

    det_vanishes_at_xi: bool
    gradient_vanishes_at_xi: bool
    derivative_identity_ok: bool
    stack_rank_at_xi: int
    jacobian_rank_is_two: bool
    singular_generators_vanish: bool
    failures: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_singular_witness(inst: Family31Instance) -> WitnessReport:
    field, n = inst.field, inst.n
    N = inst.stacked_matrix()
    detN = determinant_division_free(N)
    xi = inst.xi
    failures: list[str] = []

    det_ok = evaluate(detN, xi) == 0
    if not det_ok:
        failures.append("det of the stacked matrix does not vanish at xi")

    grads = [differentiate(detN, j) for j in range(1, n + 1)]
    grad_ok = all(evaluate(g, xi) == 0 for g in grads)
    if not grad_ok:
        failures.append("gradient of the determinant does not vanish at xi")

    # cofactors along the two gradient rows: m1 keeps grad F1, m2 keeps grad F2
    identity_ok = True
    for j in range(1, n + 1):
        m1j = _cofactor(N, 2, j)
        m2j = _cofactor(N, 1, j)
        rhs = m1j.scale(2 * inst.c[1, j - 1]) + m2j.scale(2 * inst.c[0, j - 1])
        if grads[j - 1] != rhs:
            identity_ok = False
            break
    if not identity_ok:
        failures.append("cofactor form of the determinant derivative fails")

    J3 = jacobian([inst.F1, inst.F2, detN]).evaluate(xi)
    J2 = jacobian([inst.F1, inst.F2]).evaluate(xi)
    rank3 = J3.rank()
    rank_ok = rank3 == 2 and J2.rank() == 2
    if not rank_ok:
        failures.append(f"stacked Jacobian rank at xi is {rank3}, wanted 2")

    sing_gens = singular_locus_generators([inst.F1, inst.F2, detN], 3)
    sing_ok = all(evaluate(g, xi) == 0 for g in sing_gens)
    if not sing_ok:
        failures.append("a singular-locus generator does not vanish at xi")

    return WitnessReport(det_vanishes_at_xi=det_ok,
                         gradient_vanishes_at_xi=grad_ok,
                         derivative_identity_ok=identity_ok,
                         stack_rank_at_xi=rank3,
                         jacobian_rank_is_two=rank_ok,
                         singular_generators_vanish=sing_ok,
                         failures=tuple(failures))


def polar_spec_31(inst: Family31Instance) -> PolarSpec:
    """The classic polar spec whose variety the witness point sits on."""
    return PolarSpec.classic(inst.n, 2, 1, [inst.F1, inst.F2], inst.a)


# ------------------------------------------------- unit-triangular transform


def parameter_count(n: int, p: int) -> int:
    return (n - p) * (n - p + 1) // 2


def _transform_entries(n: int, p: int):
    """Positions (r, t), 1-indexed, of the free parameters below the
    diagonal of the trailing (n-p+1) block."""
    for r in range(p + 1, n + 1):
        for t in range(p, r):
            yield (r, t)


def transform_matrix(field: PrimeField, n: int, p: int,
                     z: Sequence[int]) -> ConstMatrix:
    """The unit lower-triangular n x n coordinate transform A(z)."""
    s = parameter_count(n, p)
    if len(z) != s:
        raise PolarSpecError(f"expected {s} parameters, got {len(z)}")
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for (r, t), v in zip(_transform_entries(n, p), z):
        rows[r - 1][t - 1] = v % field.q
    return ConstMatrix(field, rows)


def transform_matrix_symbolic(field: PrimeField, n: int, p: int) -> PolyMatrix:
    """A(Z) with one fresh variable per parameter slot."""
    s = parameter_count(n, p)
    one = Polynomial.constant(field, s, 1)
    zero = Polynomial.zero(field, s)
    rows = [[one if i == j else zero for j in range(n)] for i in range(n)]
    for idx, (r, t) in enumerate(_transform_entries(n, p)):
        rows[r - 1][t - 1] = Polynomial.variable(field, s, idx + 1)
    return PolyMatrix(rows)


def unitriangular_inverse(M: PolyMatrix) -> PolyMatrix:
    """Exact inverse of a unit lower-triangular polynomial matrix via the
    terminating Neumann series of its strictly lower part."""
    n_amb = M.n
    field = M.field
    size = M.rows
    zero = Polynomial.zero(field, n_amb)
    one = Polynomial.constant(field, n_amb, 1)
    for i in range(size):
        for j in range(size):
            e = M[i, j]
            if i == j and e != one:
                raise ValueError("diagonal must be identically one")
            if j > i and not e.is_zero:
                raise ValueError("matrix must be lower triangular")
    L = [[-M[i, j] if j < i else zero for j in range(size)] for i in range(size)]
    acc = [[one if i == j else zero for j in range(size)] for i in range(size)]
    term = [row[:] for row in acc]
    for _ in range(size - 1):
        nxt = [[zero] * size for _ in range(size)]
        for i in range(size):
            for k in range(size):
                t = term[i][k]
                if t.is_zero:
                    continue
                for j in range(size):
                    if not L[k][j].is_zero:
                        nxt[i][j] = nxt[i][j] + t * L[k][j]
        term = nxt
        for i in range(size):
            for j in range(size):
                if not term[i][j].is_zero:
                    acc[i][j] = acc[i][j] + term[i][j]
    return PolyMatrix(acc)


@dataclass
class MeagerMatrixZ:
    """One specialization B_i(z): rows p+i..n of the inverse transform."""

    n: int
    p: int
    i: int
    z: tuple[int, ...]
    B: ConstMatrix


def example1_transform(n: int, p: int, i: int, z: Sequence[int],
                       field: PrimeField | None = None) -> MeagerMatrixZ:
    """Build A(z), invert it exactly, and slice rows p+i..n; the defining
    identity B_i(z) A(z) = [O | I] is re-checked before returning."""
    if field is None:
        field = PrimeField()
    if not (1 <= p <= n - 1 and 1 <= i <= n - p):
        raise PolarSpecError(f"bad parameters (n, p, i) = ({n}, {p}, {i})")
    A = transform_matrix(field, n, p, z)
    Ainv = A.inverse()
    rows = range(p + i - 1, n)
    B = Ainv.submatrix(rows, range(n))
    prod = B.matmul(A)
    k = n - p - i + 1
    for r in range(k):
        for col in range(n):
            want = 1 if col == p + i - 1 + r else 0
            if prod[r, col] != want:
                raise AssertionError("inverse slice identity failed")
    return MeagerMatrixZ(n=n, p=p, i=i, z=tuple(v % field.q for v in z), B=B)


# ------------------------------------------------------- dual chain (example 2)


def example2_matrix(field: PrimeField, n: int, p: int, i: int,
                    gamma: Sequence[int]) -> ConstMatrix:
    """B_(i,gamma): unit rows in the middle block over the full gamma row."""
    if len(gamma) != n:
        raise PolarSpecError(f"gamma must have {n} entries")
    g = [v % field.q for v in gamma]
    if g[n - i - 1] == 0:
        raise PolarSpecError(f"gamma_{n - i} must be nonzero for level i={i}")
    rows = []
    for k in range(n - p - i):
        rows.append([1 if col == p - 1 + k else 0 for col in range(n)])
    rows.append(g)
    return ConstMatrix(field, rows)


def corner_minor(F: Sequence[Polynomial]) -> Polynomial:
    """det [dF_k/dX_l] over the first p-1 rows and columns; 1 when p = 1."""
    field, n = F[0].field, F[0].n
    p = len(F)
    if p == 1:
        return Polynomial.constant(field, n, 1)
    J = jacobian(F)
    return determinant_division_free(J.submatrix(range(p - 1), range(p - 1)))


@dataclass
class ChainLevel:
    i: int
    dim: int
    degree: int
    smooth: bool
    contains_next: bool | None = None


@dataclass
class ChainReport:
    levels: tuple[ChainLevel, ...]
    dims_descend: bool
    all_smooth: bool
    inclusions_ok: bool

    @property
    def ok(self) -> bool:
        return self.dims_descend and self.all_smooth and self.inclusions_ok


def example2_chain(F: Sequence[Polynomial], gamma: Sequence[int],
                   limits: GBLimits = DEFAULT_LIMITS,
                   minor_cap: int = 50_000) -> ChainReport:
    """Localized dual chain for B_(i,gamma), i = 1 .. n-p.

    Each level is the dual polar ideal localized away from the corner
    minor; per level the dimension, degree, and the Jacobian-criterion
    smoothness of the localized variety are reported, plus the exact
    ideal-membership inclusion of each level in the next."""
    F = list(F)
    field, n = F[0].field, F[0].n
    p = len(F)
    m = corner_minor(F)
    levels: list[ChainLevel] = []
    gens_by_level: list[tuple[Polynomial, ...]] = []
    results: list[PolarIdealResult] = []
    for i in range(1, n - p + 1):
        B = example2_matrix(field, n, p, i, gamma)
        col0 = [0] * (B.rows - 1) + [1]
        spec = PolarSpec.dual(n, p, i, F, B, column0=col0)
        loc = localize_rabinowitsch(
            IdealPresentation(field, n, polar_generators(spec)), m)
        res = analyze_ideal(field, n + 1, p, loc.generators, limits)
        smooth = True
        if res.dim >= 0:
            sing = singular_locus_ideal(res, (n + 1) - res.dim, limits,
                                        cap=minor_cap)
            smooth = sing.dim < 0
        levels.append(ChainLevel(i=i, dim=res.dim, degree=res.degree,
                                 smooth=smooth))
        gens_by_level.append(loc.generators)
        results.append(res)
    dims_ok = all(lv.dim in (-1, n - p - lv.i) for lv in levels)
    seen_empty = False
    for lv in levels:
        if lv.dim < 0:
            seen_empty = True
        elif seen_empty:
            dims_ok = False  # a nonempty level below an empty one
    smooth_ok = all(lv.smooth for lv in levels)
    inclusions = True
    for idx in range(len(levels) - 1):
        deeper = results[idx + 1].gb
        ok = all(normal_form(g, deeper).is_zero for g in gens_by_level[idx])
        levels[idx].contains_next = ok
        inclusions = inclusions and ok
    return ChainReport(levels=tuple(levels), dims_descend=dims_ok,
                       all_smooth=smooth_ok, inclusions_ok=inclusions)


# ------------------------------------------------------------ degree domination


@dataclass
class DegreeReport:
    """Degrees of random full-rank draws next to structured draws."""

    n: int
    p: int
    i: int
    flavor: str
    random_degrees: tuple[int, ...]
    structured_degrees: dict[str, tuple[int, ...]] = dc_field(default_factory=dict)

    @property
    def random_degrees_agree(self) -> bool:
        return len(set(self.random_degrees)) <= 1

    @property
    def generic_degree(self) -> int:
        return self.random_degrees[0]

    @property
    def dominated(self) -> bool:
        top = self.generic_degree
        return all(d <= top for ds in self.structured_degrees.values() for d in ds)

    def bezout_bound(self, d: int) -> int:
        return d ** self.n * self.p ** (self.n - self.p)

    def within_bezout(self, d: int) -> bool:
        bound = self.bezout_bound(d)
        return (all(v <= bound for v in self.random_degrees)
                and all(v <= bound for ds in self.structured_degrees.values()
                        for v in ds))


def _random_full_rank(rng: random.Random, field: PrimeField, rows: int,
                      cols: int) -> ConstMatrix:
    while True:
        M = ConstMatrix(field, [[rng.randrange(field.q) for _ in range(cols)]
                                for _ in range(rows)])
        if M.rank() == rows:
            return M


def degree_domination_check(F: Sequence[Polynomial], i: int, trials: int,
                            seed: int, flavor: str = CLASSIC,
                            structured_draws: int = 3,
                            limits: GBLimits = DEFAULT_LIMITS) -> DegreeReport:
    """Degrees of `trials` random draws (the generic proxy) against draws
    from the structured families; empty varieties count as degree zero."""
    if trials < 1:
        raise PolarSpecError("need at least one random trial")
    F = list(F)
    field, n = F[0].field, F[0].n
    p = len(F)
    rng = random.Random(seed)
    rows = n - p - i + 1

    def polar_degree(spec: PolarSpec) -> int:
        return analyze_ideal(field, n, p, polar_generators(spec), limits).degree

    random_degs = []
    for _ in range(trials):
        a = _random_full_rank(rng, field, rows, n)
        if flavor == CLASSIC:
            spec = PolarSpec.classic(n, p, i, F, a)
        else:
            spec = PolarSpec.dual(n, p, i, F, a)
        random_degs.append(polar_degree(spec))

    structured: dict[str, list[int]] = {"transform_rows": [], "gamma_row": []}
    s = parameter_count(n, p)
    for _ in range(structured_draws):
        z = [rng.randrange(field.q) for _ in range(s)]
        B = example1_transform(n, p, i, z, field).B
        if flavor == CLASSIC:
            spec = PolarSpec.classic(n, p, i, F, B)
        else:
            spec = PolarSpec.dual(n, p, i, F, B)
        structured["transform_rows"].append(polar_degree(spec))
    for _ in range(structured_draws):
        gamma = [rng.randrange(1, field.q) for _ in range(n)]
        B = example2_matrix(field, n, p, i, gamma)
        if flavor == CLASSIC:
            spec = PolarSpec.classic(n, p, i, F, B)
        else:
            col0 = [0] * (B.rows - 1) + [1]
            spec = PolarSpec.dual(n, p, i, F, B, column0=col0)
        structured["gamma_row"].append(polar_degree(spec))

    return DegreeReport(n=n, p=p, i=i, flavor=flavor,
                        random_degrees=tuple(random_degs),
                        structured_degrees={k: tuple(v)
                                            for k, v in structured.items()})
