"""Shared fixtures and independent oracles for the test suite.

The oracles here deliberately re-derive results along different routes
than the library (cofactor expansion along the first row, naive power
evaluation, all-subsets dimension search) so the tests stay dual-route.
"""

from __future__ import annotations

import random
from itertools import combinations

import pytest

from polarvar.field import PrimeField
from polarvar.matrices import PolyMatrix
from polarvar.poly import Polynomial, monomial_divides


@pytest.fixture(scope="session")
def K():
    return PrimeField()


@pytest.fixture(scope="session")
def F7():
    return PrimeField(7)


def random_poly(rng: random.Random, field: PrimeField, n: int,
                max_degree: int = 3, terms: int = 5) -> Polynomial:
    acc = {}
    for _ in range(terms):
        m = [0] * n
        for _ in range(rng.randrange(max_degree + 1)):
            m[rng.randrange(n)] += 1
        acc[tuple(m)] = rng.randrange(field.q)
    return Polynomial(field, n, acc)


def random_nonzero_poly(rng, field, n, max_degree=3, terms=5) -> Polynomial:
    while True:
        f = random_poly(rng, field, n, max_degree, terms)
        if not f.is_zero:
            return f


def det_cofactor(M: PolyMatrix) -> Polynomial:
    """First-row cofactor expansion; independent of the production paths."""
    size = M.rows
    if size == 1:
        return M[0, 0]
    total = Polynomial.zero(M.field, M.n)
    rest = list(range(1, size))
    for j in range(size):
        cols = [c for c in range(size) if c != j]
        sub = det_cofactor(M.submatrix(rest, cols))
        term = M[0, j] * sub
        total = total + term if j % 2 == 0 else total - term
    return total


def naive_evaluate(f: Polynomial, coords) -> int:
    q = f.field.q
    total = 0
    for m, c in f.terms.items():
        v = c
        for x, e in zip(coords, m):
            v = v * pow(x, e, q) % q
        total = (total + v) % q
    return total


def brute_force_dimension(leading_monomials, n: int) -> int:
    """Max cardinality over all 2^n subsets, checked exhaustively."""
    supports = [frozenset(j for j, e in enumerate(lm) if e)
                for lm in leading_monomials]
    if any(not s for s in supports):
        return -1
    best = -1
    for k in range(n + 1):
        for U in combinations(range(n), k):
            Uset = set(U)
            if all(not s <= Uset for s in supports):
                best = max(best, k)
    return best


def count_staircase(leading_monomials, n: int, box: int = 40) -> int:
    """Standard monomials by direct enumeration inside a bounding box."""
    bounds = []
    for j in range(n):
        pure = [m[j] for m in leading_monomials if sum(m) == m[j] and m[j] > 0]
        assert pure, "oracle needs a zero-dimensional staircase"
        bounds.append(min(pure))
    count = 0
    idx = [0] * n

    def rec(slot):
        nonlocal count
        if slot == n:
            m = tuple(idx)
            if not any(monomial_divides(g, m) for g in leading_monomials):
                count += 1
            return
        for e in range(bounds[slot]):
            idx[slot] = e
            rec(slot + 1)
        idx[slot] = 0

    rec(0)
    return count
