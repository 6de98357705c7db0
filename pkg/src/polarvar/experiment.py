"""Grid replication of the singular-locus dimension experiment.

For each parameter triple (n, p, i) the cell procedure draws dense random
quadrics with uniform coefficients, re-drawing (bounded) until they form a
verified smooth complete intersection, draws one random full-rank
(n-p) x n matrix whose top n - p - i + 1 rows feed the construction (so
results across i share one matrix), builds the polar ideal, and measures
the dimension of its singular locus either through the full Jacobian
criterion or through the rank-degeneracy proxy.

The observed value is compared against max{-1, n - p - (2i+2)} for p > 1;
hypersurface cells (p = 1) have empty singular locus and empty degeneracy
locus outright, since the constant rows alone already carry full rank.

All randomness flows from one 64-bit master seed through a splitmix64-style
derivation keyed by (n, p, seed index, attempt); runs with equal flags and
master seed are bit-identical.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .field import DEFAULT_PRIME, PrimeField
from .groebner import DEFAULT_LIMITS, BudgetExceededError, GBLimits
from .matrices import ConstMatrix, jacobian
from .poly import Point, Polynomial
from .polar import (CLASSIC, DUAL, MinorCapExceededError, PolarSpec, delta_ideal,
                    polar_ideal, singular_locus_ideal,
                    verify_smooth_complete_intersection)

MODE_FULL = "full"
MODE_DELTA = "delta"

_MASK64 = (1 << 64) - 1


def derive_seed(*parts: int) -> int:
    """Fold integer parts into one 64-bit value via splitmix64 steps."""
    acc = 0x9E3779B97F4A7C15
    for part in parts:
        acc = (acc + (part & _MASK64) + 0x9E3779B97F4A7C15) & _MASK64
        z = acc
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        acc = z ^ (z >> 31)
    return acc


def expected_singular_dim(n: int, p: int, i: int) -> int:
    """The experiment's target value: hypersurface polar varieties are
    always smooth, otherwise max{-1, n - p - (2i+2)}."""
    if p == 1:
        return -1
    return max(-1, n - p - (2 * i + 2))


def random_dense_poly(rng: random.Random, field: PrimeField, n: int,
                      degree: int = 2) -> Polynomial:
    """Uniform coefficients on every monomial of total degree <= degree."""
    q = field.q
    terms: dict[tuple[int, ...], int] = {}

    def rec(prefix: list[int], remaining: int, slot: int) -> None:
        if slot == n:
            c = rng.randrange(q)
            if c:
                terms[tuple(prefix)] = c
            return
        for e in range(remaining + 1):
            prefix.append(e)
            rec(prefix, remaining - e, slot + 1)
            prefix.pop()

    rec([], degree, 0)
    return Polynomial(field, n, terms, _clean=True)


def random_full_rank_matrix(rng: random.Random, field: PrimeField, rows: int,
                            cols: int) -> ConstMatrix:
    while True:
        M = ConstMatrix(field, [[rng.randrange(field.q) for _ in range(cols)]
                                for _ in range(rows)])
        if M.rank() == rows:
            return M


@dataclass(frozen=True)
class CellSpec:
    """One experiment cell: the (n, p, i) triple plus run configuration."""

    n: int
    p: int
    i: int
    flavor: str = CLASSIC
    prime: int = DEFAULT_PRIME
    seed: int = 0
    mode: str = MODE_FULL
    redraw_budget: int = 5

    def __post_init__(self):
        if not (2 <= self.n and 1 <= self.p <= self.n - 1
                and 1 <= self.i <= self.n - self.p):
            raise ValueError(f"invalid triple ({self.n}, {self.p}, {self.i})")
        if self.flavor not in (CLASSIC, DUAL):
            raise ValueError(f"unknown flavor {self.flavor!r}")
        if self.mode not in (MODE_FULL, MODE_DELTA):
            raise ValueError(f"unknown mode {self.mode!r}")


RESULT_FIELDS = ("n", "p", "i", "flavor", "prime", "seed",
                 "regular_sequence_ok", "smooth_ok", "dim_W", "deg_W",
                 "dim_sing", "expected_dim_sing", "match", "mode", "status",
                 "redraws_used", "elapsed_ms")


@dataclass
class CellResult:
    n: int
    p: int
    i: int
    flavor: str
    prime: int
    seed: int
    regular_sequence_ok: bool | None
    smooth_ok: bool | None
    dim_W: int | None
    deg_W: int | None
    dim_sing: int | None
    expected_dim_sing: int
    match: bool | None
    mode: str
    status: str
    redraws_used: int
    elapsed_ms: int

    def to_record(self, with_timing: bool = False) -> dict:
        rec = {k: getattr(self, k) for k in RESULT_FIELDS}
        if not with_timing:
            rec["elapsed_ms"] = None
        return rec


def run_cell(spec: CellSpec, limits: GBLimits = DEFAULT_LIMITS,
             minor_cap: int = 20_000) -> CellResult:
    field = PrimeField(spec.prime)
    n, p, i = spec.n, spec.p, spec.i
    expected = expected_singular_dim(n, p, i)
    start = time.monotonic()

    def finish(status, reg=None, smooth=None, dim_w=None, deg_w=None,
               dim_sing=None, mode=spec.mode, redraws=0) -> CellResult:
        match = (dim_sing == expected) if status == "ok" else None
        return CellResult(
            n=n, p=p, i=i, flavor=spec.flavor, prime=spec.prime, seed=spec.seed,
            regular_sequence_ok=reg, smooth_ok=smooth, dim_W=dim_w, deg_W=deg_w,
            dim_sing=dim_sing, expected_dim_sing=expected, match=match,
            mode=mode, status=status, redraws_used=redraws,
            elapsed_ms=int((time.monotonic() - start) * 1000))

    redraws = 0
    for attempt in range(spec.redraw_budget + 1):
        rng = random.Random(derive_seed(spec.seed, attempt))
        F = [random_dense_poly(rng, field, n) for _ in range(p)]
        a_full = random_full_rank_matrix(rng, field, n - p, n)
        try:
            report = verify_smooth_complete_intersection(F, limits)
        except BudgetExceededError:
            return finish("skipped", redraws=redraws)
        if not report.ok:
            redraws += 1
            continue
        a_star = a_full.submatrix(range(n - p - i + 1), range(n))
        if spec.flavor == CLASSIC:
            pspec = PolarSpec.classic(n, p, i, F, a_star)
        else:
            pspec = PolarSpec.dual(n, p, i, F, a_star)
        try:
            result = polar_ideal(pspec, limits)
        except BudgetExceededError:
            return finish("skipped", reg=True, smooth=True, redraws=redraws)
        if result.dim not in (-1, n - p - i):
            # a failed the (probabilistic) genericity requirement
            redraws += 1
            continue
        mode_used = spec.mode
        try:
            if spec.mode == MODE_FULL:
                if result.dim < 0:
                    dim_sing = -1
                else:
                    try:
                        sing = singular_locus_ideal(result, n - result.dim,
                                                    limits, cap=minor_cap)
                        dim_sing = sing.dim
                    except MinorCapExceededError:
                        mode_used = MODE_DELTA
                        dim_sing = delta_ideal(pspec, limits).dim
            else:
                dim_sing = delta_ideal(pspec, limits).dim
        except BudgetExceededError:
            return finish("skipped", reg=True, smooth=True, dim_w=result.dim,
                          deg_w=result.degree, redraws=redraws)
        return finish("ok", reg=True, smooth=True, dim_w=result.dim,
                      deg_w=result.degree, dim_sing=dim_sing, mode=mode_used,
                      redraws=redraws)
    return finish("redraws_exhausted", redraws=redraws)


def grid_triples(nmax: int) -> list[tuple[int, int, int]]:
    out = []
    for n in range(2, nmax + 1):
        for p in range(1, n):
            for i in range(1, n - p + 1):
                out.append((n, p, i))
    return out


def run_grid(nmax: int, seeds: int = 1, mode: str = MODE_FULL,
             flavor: str = CLASSIC, prime: int = DEFAULT_PRIME,
             master_seed: int = 0, limits: GBLimits = DEFAULT_LIMITS,
             p_max: int | None = None,
             minor_cap: int = 20_000) -> list[CellResult]:
    """All triples up to nmax, `seeds` independent draws each; the quadric
    system and matrix derive from (master, n, p, seed index) only, so cells
    that differ in i alone share them."""
    results = []
    for (n, p, i), k in product(grid_triples(nmax), range(seeds)):
        if p_max is not None and p > p_max:
            continue
        cell_seed = derive_seed(master_seed, n, p, k)
        spec = CellSpec(n=n, p=p, i=i, flavor=flavor, prime=prime,
                        seed=cell_seed, mode=mode)
        results.append(run_cell(spec, limits, minor_cap=minor_cap))
    results.sort(key=lambda r: (r.n, r.p, r.i, r.seed))
    return results


def summarize_grid(results: Sequence[CellResult]) -> str:
    lines = ["  n  p  i  status              dim_W  dim_sing  expected  match"]
    for r in results:
        lines.append(
            f"{r.n:3d}{r.p:3d}{r.i:3d}  {r.status:<18}"
            f"{'' if r.dim_W is None else r.dim_W:>7}"
            f"{'' if r.dim_sing is None else r.dim_sing:>10}"
            f"{r.expected_dim_sing:>10}  "
            f"{'' if r.match is None else ('yes' if r.match else 'NO')}")
    ok = sum(1 for r in results if r.status == "ok")
    matched = sum(1 for r in results if r.match)
    lines.append(f"cells: {len(results)}  completed: {ok}  matched: {matched}")
    return "\n".join(lines)


# ------------------------------------------------------------- point sampling


@dataclass
class SamplePointsResult:
    points: tuple[tuple[Point, bool], ...]  # (point, is_regular)
    exhaustive: bool
    complete: bool


def sample_points_small_field(F: Sequence[Polynomial], cap: int = 100_000,
                              enumeration_limit: int = 10**7,
                              sample_budget: int = 200_000,
                              rng: random.Random | None = None
                              ) -> SamplePointsResult:
    """Points of V(F) over a small field, tagged regular/singular by the
    Jacobian rank; exhaustive when q^n is small enough, otherwise rejection
    sampling up to `cap` points."""
    F = list(F)
    field, n = F[0].field, F[0].n
    q = field.q
    p = len(F)
    J = jacobian(F)
    fast = [list(f.terms.items()) for f in F]

    def on_variety(x: tuple[int, ...]) -> bool:
        for terms in fast:
            total = 0
            for m, c in terms:
                v = c
                for j, e in enumerate(m):
                    if e:
                        v = v * pow(x[j], e, q) % q
                total = (total + v) % q
            if total:
                return False
        return True

    found: list[tuple[Point, bool]] = []
    if q**n <= enumeration_limit:
        idx = [0] * n
        while True:
            x = tuple(idx)
            if on_variety(x):
                pt = Point(field, x)
                regular = J.evaluate(x).rank() == p
                found.append((pt, regular))
                if len(found) >= cap:
                    return SamplePointsResult(tuple(found), True, False)
            k = n - 1
            while k >= 0:
                idx[k] += 1
                if idx[k] < q:
                    break
                idx[k] = 0
                k -= 1
            if k < 0:
                break
        return SamplePointsResult(tuple(found), True, True)
    if rng is None:
        rng = random.Random(0)
    seen: set[tuple[int, ...]] = set()
    for _ in range(sample_budget):
        x = tuple(rng.randrange(q) for _ in range(n))
        if x in seen:
            continue
        seen.add(x)
        if on_variety(x):
            pt = Point(field, x)
            found.append((pt, J.evaluate(x).rank() == p))
            if len(found) >= cap:
                return SamplePointsResult(tuple(found), False, False)
    return SamplePointsResult(tuple(found), False, False)


def random_smooth_system(field: PrimeField, n: int, p: int, seed: int,
                         max_attempts: int = 20,
                         limits: GBLimits = DEFAULT_LIMITS) -> list[Polynomial]:
    """Dense random quadrics redrawn until verified smooth; convenience for
    demos and family-level checks."""
    for attempt in range(max_attempts):
        rng = random.Random(derive_seed(seed, attempt))
        F = [random_dense_poly(rng, field, n) for _ in range(p)]
        if verify_smooth_complete_intersection(F, limits).ok:
            return F
    raise RuntimeError(f"no smooth system found in {max_attempts} attempts")
