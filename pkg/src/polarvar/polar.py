"""Classic and dual polar varieties of a polynomial complete intersection.

Given F_1..F_p cutting out S in A^n and a full-rank constant matrix a with
n - p - i + 1 rows, the classic polar ideal adjoins to F all maximal minors
of the (n-i+1) x n stack of the Jacobian over the rows of a; the dual
variant replaces row k of a by (a_{k,1} - a_{k,0}*X_1, ..., a_{k,n} -
a_{k,0}*X_n).  The degeneracy locus one rank lower (all (n-i)-minors of the
same stack) contains every singular point of the polar variety at regular
points of S, and the Jacobian-criterion machinery below measures both.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .field import PrimeField
from .groebner import (DEFAULT_LIMITS, GBLimits, GroebnerBasis, IdealPresentation,
                       degree, dimension, reduced_groebner_basis)
from .matrices import ConstMatrix, PolyMatrix, enumerate_minors, jacobian
from .poly import Polynomial, as_coordinates, evaluate

CLASSIC = "classic"
DUAL = "dual"


class PolarSpecError(ValueError):
    """A polar construction precondition failed (shape, rank, flavor)."""


class PointClassificationError(ValueError):
    """The queried point is off the variety or singular on it."""


class MinorCapExceededError(RuntimeError):
    """Jacobian-criterion minor count blew the cap; delta-proxy mode applies."""

    def __init__(self, count: int, cap: int):
        super().__init__(
            f"singular-locus minor count {count} exceeds cap {cap}; "
            "consider the delta-proxy mode")
        self.count = count
        self.cap = cap


class PolarSpec:
    """One polar-variety construction: (n, p, i, flavor, F, a).

    For the classic flavor `a` is the (n-p-i+1) x n matrix of constant rows;
    for the dual flavor `a` carries an extra leading column 0 holding the
    affine offsets a_{k,0} (all ones in the generic dual convention).
    """

    __slots__ = ("n", "p", "i", "flavor", "F", "a")

    def __init__(self, n: int, p: int, i: int, flavor: str,
                 F: Sequence[Polynomial], a: ConstMatrix, strict: bool = True):
        if not (1 <= p <= n - 1):
            raise PolarSpecError(f"need 1 <= p <= n-1, got p={p}, n={n}")
        if not (1 <= i <= n - p):
            raise PolarSpecError(f"need 1 <= i <= n-p, got i={i}")
        if flavor not in (CLASSIC, DUAL):
            raise PolarSpecError(f"unknown flavor {flavor!r}")
        F = tuple(F)
        if len(F) != p:
            raise PolarSpecError(f"expected {p} polynomials, got {len(F)}")
        if any(f.n != n for f in F):
            raise PolarSpecError("system ambient count differs from n")
        rows = n - p - i + 1
        want_cols = n if flavor == CLASSIC else n + 1
        if a.rows != rows or a.cols != want_cols:
            raise PolarSpecError(
                f"matrix must be {rows}x{want_cols} for flavor {flavor}, "
                f"got {a.rows}x{a.cols}")
        self.n = n
        self.p = p
        self.i = i
        self.flavor = flavor
        self.F = F
        self.a = a
        # strict=False admits deliberately degenerate matrices (e.g. the dual
        # polar variety of a circle about its own center)
        if strict and self.a_star().rank() != rows:
            raise PolarSpecError("columns 1..n of the matrix must have full rank")

    @classmethod
    def classic(cls, n: int, p: int, i: int, F: Sequence[Polynomial],
                a_star: ConstMatrix, strict: bool = True) -> "PolarSpec":
        return cls(n, p, i, CLASSIC, F, a_star, strict=strict)

    @classmethod
    def dual(cls, n: int, p: int, i: int, F: Sequence[Polynomial],
             a_star: ConstMatrix, column0: Sequence[int] | None = None,
             strict: bool = True) -> "PolarSpec":
        """Dual spec from the star part; column 0 defaults to all ones."""
        field = a_star.field
        if column0 is None:
            column0 = [1] * a_star.rows
        if len(column0) != a_star.rows:
            raise PolarSpecError("column 0 must have one entry per row")
        full = [[c0] + list(row) for c0, row in zip(column0, a_star.entries)]
        return cls(n, p, i, DUAL, F, ConstMatrix(field, full), strict=strict)

    @property
    def field(self) -> PrimeField:
        return self.a.field

    def a_star(self) -> ConstMatrix:
        if self.flavor == CLASSIC:
            return self.a
        return self.a.submatrix(range(self.a.rows), range(1, self.a.cols))

    def __repr__(self) -> str:
        return (f"PolarSpec(n={self.n}, p={self.p}, i={self.i}, "
                f"flavor={self.flavor!r})")


@dataclass
class PolarIdealResult:
    """Structured outcome of one polar-ideal computation."""

    ideal: IdealPresentation
    gb: GroebnerBasis
    dim: int
    codim_in_S: int | None
    degree: int
    n: int
    p: int

    @property
    def is_empty(self) -> bool:
        return self.dim < 0


def polar_stack(spec: PolarSpec) -> PolyMatrix:
    """The (n-i+1) x n polynomial matrix [J(F); rows of a]."""
    J = jacobian(spec.F)
    field, n = spec.field, spec.n
    if spec.flavor == CLASSIC:
        bottom = spec.a.to_poly_matrix(n)
    else:
        rows = []
        for k in range(spec.a.rows):
            a0 = spec.a[k, 0]
            row = []
            for l in range(1, n + 1):
                p = Polynomial.constant(field, n, spec.a[k, l])
                if a0:
                    p = p - Polynomial.variable(field, n, l).scale(a0)
                row.append(p)
            rows.append(row)
        bottom = PolyMatrix(rows)
    return J.stack(bottom)


def polar_generators(spec: PolarSpec) -> list[Polynomial]:
    """F joined with all (n-i+1)-minors of the polar stack."""
    stack = polar_stack(spec)
    r = spec.n - spec.i + 1
    return list(spec.F) + list(enumerate_minors(stack, r))


def delta_generators(spec: PolarSpec) -> list[Polynomial]:
    """F joined with all (n-i)-minors of the polar stack (rank drop by two)."""
    stack = polar_stack(spec)
    r = spec.n - spec.i
    return list(spec.F) + list(enumerate_minors(stack, r))


def analyze_ideal(field: PrimeField, n: int, p: int,
                  generators: Sequence[Polynomial],
                  limits: GBLimits = DEFAULT_LIMITS) -> PolarIdealResult:
    """Groebner basis plus dimension/degree bookkeeping for one ideal."""
    ideal = IdealPresentation(field, n, generators)
    gb = reduced_groebner_basis(ideal, limits)
    dim = dimension(gb)
    deg = degree(gb)
    codim = (n - p) - dim if dim >= 0 else None
    return PolarIdealResult(ideal=ideal, gb=gb, dim=dim, codim_in_S=codim,
                            degree=deg, n=n, p=p)


def classic_polar_ideal(spec: PolarSpec,
                        limits: GBLimits = DEFAULT_LIMITS) -> PolarIdealResult:
    if spec.flavor != CLASSIC:
        raise PolarSpecError("classic_polar_ideal needs a classic spec")
    return analyze_ideal(spec.field, spec.n, spec.p, polar_generators(spec), limits)


def dual_polar_ideal(spec: PolarSpec,
                     limits: GBLimits = DEFAULT_LIMITS) -> PolarIdealResult:
    if spec.flavor != DUAL:
        raise PolarSpecError("dual_polar_ideal needs a dual spec")
    return analyze_ideal(spec.field, spec.n, spec.p, polar_generators(spec), limits)


def polar_ideal(spec: PolarSpec, limits: GBLimits = DEFAULT_LIMITS) -> PolarIdealResult:
    return analyze_ideal(spec.field, spec.n, spec.p, polar_generators(spec), limits)


def delta_ideal(spec: PolarSpec, limits: GBLimits = DEFAULT_LIMITS) -> PolarIdealResult:
    return analyze_ideal(spec.field, spec.n, spec.p, delta_generators(spec), limits)


DEFAULT_MINOR_CAP = 20_000


def singular_locus_generators(generators: Sequence[Polynomial], c: int,
                              cap: int = DEFAULT_MINOR_CAP) -> list[Polynomial]:
    """Jacobian-criterion generators: the ideal plus all c-minors of its
    Jacobian; valid for any generating set of an equidimensional radical
    ideal of codimension c."""
    gens = [g for g in generators if not g.is_zero]
    if not gens:
        raise PolarSpecError("singular locus of the zero ideal is undefined")
    n = gens[0].n
    if c < 1 or c > min(len(gens), n):
        raise PolarSpecError(
            f"codimension {c} incompatible with {len(gens)} generators in {n} vars")
    count = comb(len(gens), c) * comb(n, c)
    if count > cap:
        raise MinorCapExceededError(count, cap)
    J = jacobian(gens)
    return list(gens) + list(enumerate_minors(J, c))


def singular_locus_ideal(result: PolarIdealResult, c: int,
                         limits: GBLimits = DEFAULT_LIMITS,
                         cap: int = DEFAULT_MINOR_CAP) -> PolarIdealResult:
    """Singular locus of the variety behind `result` via the Jacobian
    criterion at codimension c = n - dim."""
    if result.dim < 0:
        raise PolarSpecError("singular locus of an empty variety is undefined")
    if c != result.n - result.dim:
        raise PolarSpecError(f"expected codimension {result.n - result.dim}, got {c}")
    gens = singular_locus_generators(result.ideal.generators, c, cap)
    # seeding the presentation with the reduced basis leaves the ideal
    # unchanged and lets the minors reduce against interreduced elements
    seeded = list(result.gb.basis) + gens
    return analyze_ideal(result.ideal.field, result.n, result.p, seeded, limits)


@dataclass
class SmoothnessReport:
    """Outcome of the regular-sequence and smoothness verification."""

    regular_sequence_ok: bool
    smooth_ok: bool
    prefix_dims: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return self.regular_sequence_ok and self.smooth_ok


def verify_smooth_complete_intersection(F: Sequence[Polynomial],
                                        limits: GBLimits = DEFAULT_LIMITS
                                        ) -> SmoothnessReport:
    """Check that F is a regular sequence (each prefix cuts dimension by one)
    whose zero set carries no singular point."""
    F = list(F)
    if not F:
        raise PolarSpecError("empty system")
    field, n = F[0].field, F[0].n
    p = len(F)
    prefix_dims = []
    regular = True
    for k in range(1, p + 1):
        gb = reduced_groebner_basis(IdealPresentation(field, n, F[:k]), limits)
        d = dimension(gb)
        prefix_dims.append(d)
        if d != n - k:
            regular = False
    smooth = False
    if regular:
        gens = list(F) + list(enumerate_minors(jacobian(F), p))
        gb = reduced_groebner_basis(IdealPresentation(field, n, gens), limits)
        smooth = gb.contains_one
    return SmoothnessReport(regular_sequence_ok=regular, smooth_ok=smooth,
                            prefix_dims=tuple(prefix_dims))


def _require_regular_point(F: Sequence[Polynomial], x) -> tuple[int, ConstMatrix]:
    field = F[0].field
    coords = as_coordinates(field, x)
    for f in F:
        if evaluate(f, coords):
            raise PointClassificationError("point does not lie on the variety")
    Jx = jacobian(F).evaluate(coords)
    if Jx.rank() != len(F):
        raise PointClassificationError("point is singular on the variety")
    return len(F), Jx


def thom_boardman_class(F: Sequence[Polynomial], a: ConstMatrix, x) -> int:
    """Kernel dimension j of the projection differential at a regular point:
    j = n - rank of the evaluated stack [J(F)(x); a]."""
    p, Jx = _require_regular_point(F, x)
    n = F[0].n
    if a.cols != n:
        raise PolarSpecError("matrix must have one column per variable")
    stacked = ConstMatrix(a.field, list(Jx.entries) + list(a.entries))
    return n - stacked.rank()


def incidence_fiber_dim(F: Sequence[Polynomial], a: ConstMatrix, x, i: int) -> int:
    """Projective dimension of the multiplier fiber over x; -1 when empty.

    Equals thom_boardman_class(x) - i: the fiber solves J(x)^T lambda^T +
    a^T theta^T = 0 projectively, and the solution space has dimension
    (n - i + 1) - rank([J(x)^T | a^T]) - 1.
    """
    j = thom_boardman_class(F, a, x)
    return j - i
