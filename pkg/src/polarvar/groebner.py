"""Reduced Groebner bases and staircase analytics over a prime field.

The engine is a Buchberger loop with Gebauer-Moller pair elimination and
sugar-based selection, always in degrevlex.  Resource limits (pair count,
basis size, element degree) turn runaway computations into explicit
BudgetExceededError, never silently truncated output.

Dimension is read combinatorially off the leading-term staircase (largest
variable subset meeting no leading support), degree from the Hilbert-series
numerator of the leading-term ideal; the two dimension routes are computed
independently and cross-checked.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .field import PrimeField
from .poly import (Monomial, Polynomial, drl_key, monomial_div, monomial_divides,
                   monomial_lcm, monomial_mul)


class BudgetExceededError(RuntimeError):
    """A configured resource limit was hit before the computation finished."""

    def __init__(self, kind: str, limit: int):
        super().__init__(f"groebner budget exceeded: {kind} limit {limit}")
        self.kind = kind
        self.limit = limit


@dataclass(frozen=True)
class GBLimits:
    """Resource caps for one basis computation."""

    max_pairs: int = 200_000
    max_basis: int = 3_000
    max_degree: int = 60


DEFAULT_LIMITS = GBLimits()


class IdealPresentation:
    """A generator list: nonzero, monic, deduplicated, order preserved."""

    __slots__ = ("field", "n", "generators")

    def __init__(self, field: PrimeField, n: int, generators: Iterable[Polynomial]):
        seen: set = set()
        gens: list[Polynomial] = []
        for g in generators:
            if g.field != field or g.n != n:
                raise ValueError("generator lives in a different ambient ring")
            if g.is_zero:
                continue
            g = g.monic()
            key = frozenset(g.terms.items())
            if key not in seen:
                seen.add(key)
                gens.append(g)
        self.field = field
        self.n = n
        self.generators = tuple(gens)

    def __repr__(self) -> str:
        return f"IdealPresentation({len(self.generators)} gens, n={self.n})"


class GroebnerBasis:
    """A reduced Groebner basis w.r.t. degrevlex; canonical for its ideal."""

    __slots__ = ("field", "n", "basis", "leading_monomials")

    order = "degrevlex"

    def __init__(self, field: PrimeField, n: int, basis: Sequence[Polynomial]):
        self.field = field
        self.n = n
        self.basis = tuple(basis)
        self.leading_monomials = tuple(g.leading_monomial() for g in self.basis)

    @property
    def contains_one(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_constant() and not self.basis[0].is_zero

    def dimension(self) -> int:
        return dimension(self)

    def degree(self) -> int:
        return degree(self)

    def __repr__(self) -> str:
        return f"GroebnerBasis({len(self.basis)} elements, n={self.n})"


# --------------------------------------------------------------------- engine


def _heap_key(m: Monomial):
    # min-heap entry whose smallest element is the degrevlex-largest monomial
    return (-sum(m), tuple(reversed(m)))


class _Elem:
    __slots__ = ("terms", "lm", "sugar", "redundant")

    def __init__(self, terms: dict, lm: Monomial, sugar: int):
        self.terms = terms
        self.lm = lm
        self.sugar = sugar
        self.redundant = False


def _reduce_full(work: dict, elems: list[_Elem], q: int, sugar: int) -> tuple[dict, int]:
    """Full division remainder: no remainder term divisible by any live lead."""
    work = dict(work)
    heap = [_heap_key(m) for m in work]
    heapq.heapify(heap)
    remainder: dict = {}
    while heap:
        hk = heapq.heappop(heap)
        m = tuple(reversed(hk[1]))
        c = work.get(m)
        if not c:
            continue
        reducer = None
        for e in elems:
            if monomial_divides(e.lm, m):
                reducer = e
                break
        if reducer is None:
            del work[m]
            remainder[m] = c
            continue
        del work[m]
        shift = monomial_div(m, reducer.lm)
        sugar = max(sugar, reducer.sugar + sum(shift))
        for bm, bc in reducer.terms.items():
            if bm == reducer.lm:
                continue
            key = monomial_mul(bm, shift)
            prev = work.get(key, 0)
            s = (prev - c * bc) % q
            if s:
                if not prev:
                    heapq.heappush(heap, _heap_key(key))
                work[key] = s
            elif prev:
                del work[key]
    return remainder, sugar


def _monic(terms: dict, q: int) -> tuple[dict, Monomial]:
    lm = max(terms, key=drl_key)
    lc = terms[lm]
    if lc != 1:
        inv = pow(lc, -1, q)
        terms = {m: c * inv % q for m, c in terms.items()}
    return terms, lm


def _update_pairs(elems: list[_Elem], pairs: dict, pair_heap: list, t: int) -> None:
    """Gebauer-Moller update of the pair set after appending element t."""
    h_lm = elems[t].lm
    # candidate new pairs against live elements
    cand = [i for i in range(t) if not elems[i].redundant]
    lcms = {i: monomial_lcm(elems[i].lm, h_lm) for i in cand}

    def coprime(i: int) -> bool:
        return all(a == 0 or b == 0 for a, b in zip(elems[i].lm, h_lm))

    # criteria M and F: keep one representative among divisible/equal lcms
    kept: list[int] = []
    dropped: set[int] = set()
    for i in cand:
        if i in dropped:
            continue
        li = lcms[i]
        keep = True
        for j in cand:
            if j == i or j in dropped:
                continue
            lj = lcms[j]
            if lj == li:
                # duplicate lcm: the smaller index survives
                if j < i:
                    keep = False
                    break
            elif monomial_divides(lj, li):
                keep = False
                break
        if keep:
            kept.append(i)
        else:
            dropped.add(i)
    # criterion B on old pairs
    for (i, j) in list(pairs):
        lij = pairs[(i, j)][0]
        if (monomial_divides(h_lm, lij)
                and monomial_lcm(elems[i].lm, h_lm) != lij
                and monomial_lcm(elems[j].lm, h_lm) != lij):
            del pairs[(i, j)]
    # Buchberger coprimality criterion on the survivors
    for i in kept:
        if coprime(i):
            continue
        li = lcms[i]
        sugar = max(elems[i].sugar + sum(li) - sum(elems[i].lm),
                    elems[t].sugar + sum(li) - sum(h_lm))
        pairs[(i, t)] = (li, sugar)
        heapq.heappush(pair_heap, (sugar, drl_key(li), i, t))
    # newly dominated leads form no further pairs
    for i in range(t):
        if not elems[i].redundant and monomial_divides(h_lm, elems[i].lm):
            elems[i].redundant = True


def reduced_groebner_basis(I: IdealPresentation,
                           limits: GBLimits = DEFAULT_LIMITS) -> GroebnerBasis:
    """The reduced degrevlex Groebner basis of the ideal presented by I."""
    field, n = I.field, I.n
    q = field.q
    elems: list[_Elem] = []
    pairs: dict = {}
    pair_heap: list = []

    def add_element(terms: dict, sugar: int) -> bool:
        """Returns True when the unit ideal was detected."""
        terms, lm = _monic(terms, q)
        if sum(lm) == 0:
            elems.clear()
            elems.append(_Elem({(0,) * n: 1}, (0,) * n, 0))
            return True
        if len(elems) >= limits.max_basis:
            raise BudgetExceededError("basis size", limits.max_basis)
        elems.append(_Elem(terms, lm, sugar))
        _update_pairs(elems, pairs, pair_heap, len(elems) - 1)
        return False

    unit = False
    for g in I.generators:
        if unit:
            break
        rem, sugar = _reduce_full(g.terms, [e for e in elems if not e.redundant],
                                  q, g.total_degree())
        if rem:
            unit = add_element(rem, sugar)

    processed = 0
    while pair_heap and not unit:
        sugar, _, i, j = heapq.heappop(pair_heap)
        entry = pairs.pop((i, j), None)
        if entry is None:
            continue
        processed += 1
        if processed > limits.max_pairs:
            raise BudgetExceededError("pair count", limits.max_pairs)
        lij = entry[0]
        fi, fj = elems[i], elems[j]
        # S-polynomial of two monic elements: leading terms cancel exactly
        si = monomial_div(lij, fi.lm)
        sj = monomial_div(lij, fj.lm)
        spoly: dict = {}
        for m, c in fi.terms.items():
            spoly[monomial_mul(m, si)] = c
        for m, c in fj.terms.items():
            key = monomial_mul(m, sj)
            s = (spoly.get(key, 0) - c) % q
            if s:
                spoly[key] = s
            else:
                spoly.pop(key, None)
        if not spoly:
            continue
        live = [e for e in elems if not e.redundant]
        rem, rsugar = _reduce_full(spoly, live, q, entry[1])
        if not rem:
            continue
        lead_deg = sum(max(rem, key=drl_key))
        if lead_deg > limits.max_degree:
            raise BudgetExceededError("element degree", limits.max_degree)
        unit = add_element(rem, rsugar)

    if unit:
        return GroebnerBasis(field, n, [Polynomial.constant(field, n, 1)])

    # minimalize: keep leads not divisible by another kept lead
    live = [e for e in elems if not e.redundant]
    kept: list[_Elem] = []
    for e in live:
        if not any(o is not e and monomial_divides(o.lm, e.lm) for o in live):
            kept.append(e)
    # tail-interreduce: full normal form of each element against the others
    reduced: list[Polynomial] = []
    for e in kept:
        others = [o for o in kept if o is not e]
        rem, _ = _reduce_full(e.terms, others, q, e.sugar)
        terms, _ = _monic(rem, q)
        reduced.append(Polynomial(field, n, terms, _clean=True))
    reduced.sort(key=lambda p: drl_key(p.leading_monomial()))
    return GroebnerBasis(field, n, reduced)


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    """Remainder of f modulo G; zero exactly when f lies in the ideal."""
    if f.field != G.field or f.n != G.n:
        raise ValueError("polynomial and basis live in different ambient rings")
    if f.is_zero:
        return f
    elems = [_Elem(g.terms, lm, 0) for g, lm in zip(G.basis, G.leading_monomials)]
    rem, _ = _reduce_full(f.terms, elems, f.field.q, 0)
    return Polynomial(f.field, f.n, rem, _clean=True)


# ------------------------------------------------------------------ staircase


def dimension(G: GroebnerBasis) -> int:
    """Krull dimension of the variety; -1 exactly for the unit ideal."""
    if G.contains_one:
        return -1
    supports = [frozenset(j for j, e in enumerate(lm) if e)
                for lm in G.leading_monomials]
    n = G.n
    if not supports:
        return n
    involved = sorted(set().union(*supports))
    free = n - len(involved)
    for k in range(len(involved), -1, -1):
        for U in combinations(involved, k):
            Uset = set(U)
            if all(not s <= Uset for s in supports):
                return free + k
    return free  # unreachable: k = 0 always succeeds for a proper ideal


def hilbert_numerator(lms: Sequence[Monomial], n: int) -> list[int]:
    """Numerator coefficients of the Hilbert series of R/(lms) over (1-t)^n."""
    gens = _minimalize_monomials(lms)
    if any(sum(m) == 0 for m in gens):
        return [0]
    return list(_hilbert_rec(tuple(sorted(gens))))


def _minimalize_monomials(lms: Iterable[Monomial]) -> list[Monomial]:
    ms = sorted(set(lms), key=lambda m: (sum(m), m))
    out: list[Monomial] = []
    for m in ms:
        if not any(monomial_divides(g, m) for g in out):
            out.append(m)
    return out


def _poly_mul_int(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_add_int(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] += y
    return out


@lru_cache(maxsize=None)
def _hilbert_rec(gens: tuple[Monomial, ...]) -> tuple[int, ...]:
    if not gens:
        return (1,)
    mixed = [m for m in gens if sum(1 for e in m if e) > 1]
    if not mixed:
        # pairwise-coprime pure powers: numerator is the product of 1 - t^a
        out = [1]
        for m in gens:
            a = sum(m)
            factor = [1] + [0] * (a - 1) + [-1]
            out = _poly_mul_int(out, factor)
        return tuple(out)
    # pivot on the variable hitting the most generators
    counts: dict[int, int] = {}
    for m in mixed:
        for j, e in enumerate(m):
            if e:
                counts[j] = counts.get(j, 0) + 1
    j = max(counts, key=lambda k: (counts[k], -k))
    plus: list[Monomial] = [m for m in gens if m[j] == 0]
    pivot = tuple(1 if k == j else 0 for k in range(len(gens[0])))
    plus.append(pivot)
    quot = [m[:j] + (m[j] - 1,) + m[j + 1:] if m[j] else m for m in gens]
    n_plus = _hilbert_rec(tuple(sorted(_minimalize_monomials(plus))))
    n_quot = _hilbert_rec(tuple(sorted(_minimalize_monomials(quot))))
    shifted = [0] + list(n_quot)
    return tuple(_poly_add_int(n_plus, shifted))


def degree(G: GroebnerBasis) -> int:
    """Geometric degree read off the leading-term ideal; empty set has 0."""
    if G.contains_one:
        return 0
    num = hilbert_numerator(G.leading_monomials, G.n)
    strips = 0
    while sum(num) == 0:
        # exact division by (1 - t): running prefix sums
        out = []
        acc = 0
        for c in num[:-1]:
            acc += c
            out.append(acc)
        num = out if out else [0]
        strips += 1
        if not any(num):
            break
    dim_hilbert = G.n - strips
    combinatorial = dimension(G)
    if dim_hilbert != combinatorial:
        raise AssertionError(
            f"staircase dimension mismatch: hilbert {dim_hilbert} vs "
            f"combinatorial {combinatorial}")
    return sum(num)


@dataclass(frozen=True)
class StaircaseSummary:
    """Dimension and degree read off one reduced basis."""

    dimension: int
    degree: int
    is_zero_dimensional: bool


def staircase_summary(G: GroebnerBasis) -> StaircaseSummary:
    d = dimension(G)
    return StaircaseSummary(dimension=d, degree=degree(G),
                            is_zero_dimensional=d == 0)


def standard_monomial_count(G: GroebnerBasis, cap: int = 10**6) -> int:
    """Number of monomials outside the leading-term ideal (finite staircases)."""
    lms = G.leading_monomials
    n = G.n
    # bounding box: a finite staircase needs a pure power per variable
    box = [0] * n
    for j in range(n):
        pure = [m[j] for m in lms if sum(m) == m[j] and m[j] > 0]
        if not pure:
            raise ValueError("staircase is infinite: no pure power in variable "
                             f"x{j + 1}")
        box[j] = min(pure)
    total = 1
    for b in box:
        total *= b
        if total > cap:
            raise ValueError("staircase too large to enumerate")
    count = 0
    idx = [0] * n
    while True:
        m = tuple(idx)
        if not any(monomial_divides(g, m) for g in lms):
            count += 1
        k = n - 1
        while k >= 0:
            idx[k] += 1
            if idx[k] < box[k]:
                break
            idx[k] = 0
            k -= 1
        if k < 0:
            return count


# ---------------------------------------------------------------- localization


def localize_rabinowitsch(I: IdealPresentation, m: Polynomial) -> IdealPresentation:
    """Restrict to the open locus m != 0 by adjoining T*m - 1 in a fresh
    last variable; the localized variety is the graph of 1/m there."""
    if m.is_zero:
        raise ValueError("cannot localize at the zero polynomial")
    if m.field != I.field or m.n != I.n:
        raise ValueError("localization witness lives in a different ring")
    n1 = I.n + 1
    gens = [g.extend(n1) for g in I.generators]
    T = Polynomial.variable(I.field, n1, n1)
    one = Polynomial.constant(I.field, n1, 1)
    gens.append(T * m.extend(n1) - one)
    return IdealPresentation(I.field, n1, gens)
