"""Matrices with polynomial or constant entries.

Covers the linear-algebra layer the polar constructions sit on: Jacobian
assembly, division-free symbolic determinants (Berkowitz), streaming minor
enumeration in a fixed lexicographic subset order, and numeric rank of an
evaluated matrix via Gaussian elimination over the prime field.
"""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Iterator, Sequence

from .field import PrimeField
from .poly import Point, Polynomial, as_coordinates, differentiate, evaluate


class ConstMatrix:
    """Dense rectangular matrix of canonical residues."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: PrimeField, entries: Sequence[Sequence[int]]):
        rows = [tuple(v % field.q for v in row) for row in entries]
        if not rows or not rows[0]:
            raise ValueError("matrix must be non-empty")
        cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise ValueError("rows have unequal lengths")
        self.field = field
        self.rows = len(rows)
        self.cols = cols
        self.entries = tuple(rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.entries)

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "ConstMatrix":
        return ConstMatrix(self.field,
                           [[self.entries[i][j] for j in col_idx] for i in row_idx])

    def transpose(self) -> "ConstMatrix":
        return ConstMatrix(self.field, list(zip(*self.entries)))

    def matmul(self, other: "ConstMatrix") -> "ConstMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        q = self.field.q
        out = []
        for i in range(self.rows):
            row = self.entries[i]
            out.append([sum(row[k] * other.entries[k][j] for k in range(self.cols)) % q
                        for j in range(other.cols)])
        return ConstMatrix(self.field, out)

    def _echelon(self) -> tuple[list[list[int]], int, int]:
        """Row echelon form; returns (matrix, rank, parity of row swaps)."""
        q = self.field.q
        a = [list(r) for r in self.entries]
        rank = 0
        swaps = 0
        for col in range(self.cols):
            pivot = next((r for r in range(rank, self.rows) if a[r][col]), None)
            if pivot is None:
                continue
            if pivot != rank:
                a[rank], a[pivot] = a[pivot], a[rank]
                swaps += 1
            inv = pow(a[rank][col], -1, q)
            for r in range(rank + 1, self.rows):
                if a[r][col]:
                    factor = a[r][col] * inv % q
                    a[r] = [(x - factor * y) % q for x, y in zip(a[r], a[rank])]
            rank += 1
            if rank == self.rows:
                break
        return a, rank, swaps

    def rank(self) -> int:
        return self._echelon()[1]

    def det(self) -> int:
        if self.rows != self.cols:
            raise ValueError("determinant of non-square matrix")
        a, rank, swaps = self._echelon()
        if rank < self.rows:
            return 0
        q = self.field.q
        d = 1
        # after echelon with partial pivoting the pivots sit on the diagonal
        for i in range(self.rows):
            d = d * a[i][i] % q
        return (q - d) % q if swaps % 2 else d

    def inverse(self) -> "ConstMatrix":
        if self.rows != self.cols:
            raise ValueError("inverse of non-square matrix")
        q = self.field.q
        size = self.rows
        a = [list(r) + [1 if j == i else 0 for j in range(size)]
             for i, r in enumerate(self.entries)]
        for col in range(size):
            pivot = next((r for r in range(col, size) if a[r][col]), None)
            if pivot is None:
                raise ZeroDivisionError("matrix is singular")
            a[col], a[pivot] = a[pivot], a[col]
            inv = pow(a[col][col], -1, q)
            a[col] = [x * inv % q for x in a[col]]
            for r in range(size):
                if r != col and a[r][col]:
                    factor = a[r][col]
                    a[r] = [(x - factor * y) % q for x, y in zip(a[r], a[col])]
        return ConstMatrix(self.field, [row[size:] for row in a])

    def nullspace_basis(self) -> list[tuple[int, ...]]:
        """Basis of {v : A v = 0} as row vectors."""
        q = self.field.q
        a, rank, _ = self._echelon()
        # back-substitute to reduced form
        pivots: list[tuple[int, int]] = []
        r = 0
        for col in range(self.cols):
            if r < rank and a[r][col]:
                pivots.append((r, col))
                r += 1
        for r, col in reversed(pivots):
            inv = pow(a[r][col], -1, q)
            a[r] = [x * inv % q for x in a[r]]
            for r2 in range(r):
                if a[r2][col]:
                    factor = a[r2][col]
                    a[r2] = [(x - factor * y) % q for x, y in zip(a[r2], a[r])]
        pivot_cols = {col for _, col in pivots}
        basis = []
        for free in range(self.cols):
            if free in pivot_cols:
                continue
            v = [0] * self.cols
            v[free] = 1
            for r, col in pivots:
                v[col] = (-a[r][free]) % q
            basis.append(tuple(v))
        return basis

    def to_poly_matrix(self, n: int) -> "PolyMatrix":
        return PolyMatrix(
            [[Polynomial.constant(self.field, n, v) for v in row] for row in self.entries])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ConstMatrix):
            return NotImplemented
        return self.field == other.field and self.entries == other.entries

    def __repr__(self) -> str:
        return f"ConstMatrix({self.rows}x{self.cols} mod {self.field.q})"


class PolyMatrix:
    """Rectangular matrix of polynomials sharing one ambient ring."""

    __slots__ = ("field", "n", "rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[Polynomial]]):
        rows = [tuple(row) for row in entries]
        if not rows or not rows[0]:
            raise ValueError("matrix must be non-empty")
        cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise ValueError("rows have unequal lengths")
        first = rows[0][0]
        for row in rows:
            for p in row:
                if p.field != first.field or p.n != first.n:
                    raise ValueError("entries live in different ambient rings")
        self.field = first.field
        self.n = first.n
        self.rows = len(rows)
        self.cols = cols
        self.entries = tuple(rows)

    def __getitem__(self, ij: tuple[int, int]) -> Polynomial:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple[Polynomial, ...]:
        return self.entries[i]

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix([[self.entries[i][j] for j in col_idx] for i in row_idx])

    def stack(self, bottom: "PolyMatrix") -> "PolyMatrix":
        if bottom.cols != self.cols:
            raise ValueError("column count mismatch in stack")
        return PolyMatrix(list(self.entries) + list(bottom.entries))

    def evaluate(self, x: Point | Sequence[int]) -> ConstMatrix:
        coords = as_coordinates(self.field, x)
        if len(coords) != self.n:
            raise ValueError(f"point has {len(coords)} coordinates, ambient n={self.n}")
        return ConstMatrix(self.field,
                           [[evaluate(p, coords) for p in row] for row in self.entries])

    def __repr__(self) -> str:
        return f"PolyMatrix({self.rows}x{self.cols}, n={self.n}, q={self.field.q})"


def jacobian(F: Sequence[Polynomial]) -> PolyMatrix:
    """The p x n matrix of partials, row k the gradient of F_k."""
    if not F:
        raise ValueError("jacobian of an empty system")
    n = F[0].n
    return PolyMatrix([[differentiate(f, j) for j in range(1, n + 1)] for f in F])


MAX_DET_SIZE = 12


def _berkowitz_vector(rows: list[list[Polynomial]], field: PrimeField, n: int
                      ) -> list[Polynomial]:
    """Coefficients [1, c1, ..., ck] of det(tI - M), top degree first."""
    k = len(rows)
    one = Polynomial.constant(field, n, 1)
    if k == 0:
        return [one]
    if k == 1:
        return [one, -rows[0][0]]
    a = rows[0][0]
    R = rows[0][1:]
    C = [row[0] for row in rows[1:]]
    A = [row[1:] for row in rows[1:]]
    zero = Polynomial.zero(field, n)

    def matvec(mat: list[list[Polynomial]], vec: list[Polynomial]) -> list[Polynomial]:
        out = []
        for row in mat:
            s = zero
            for p, v in zip(row, vec):
                if not (p.is_zero or v.is_zero):
                    s = s + p * v
            out.append(s)
        return out

    diags = [C]
    for _ in range(k - 2):
        diags.append(matvec(A, diags[-1]))
    dots = []
    for d in diags:
        s = zero
        for p, v in zip(R, d):
            if not (p.is_zero or v.is_zero):
                s = s + p * v
        dots.append(-s)
    col = [one, -a] + dots  # first column of the (k+1) x k Toeplitz matrix
    v = _berkowitz_vector(A, field, n)
    out = []
    for i in range(k + 1):
        s = zero
        for j in range(min(i, k - 1) + 1):
            t = col[i - j]
            if not (t.is_zero or v[j].is_zero):
                s = s + t * v[j]
        out.append(s)
    return out


def determinant_division_free(M: PolyMatrix) -> Polynomial:
    """Exact symbolic determinant by the Berkowitz division-free recursion."""
    if M.rows != M.cols:
        raise ValueError("determinant of non-square matrix")
    if M.rows > MAX_DET_SIZE:
        raise ValueError(f"matrix size {M.rows} exceeds the {MAX_DET_SIZE} cap")
    v = _berkowitz_vector([list(r) for r in M.entries], M.field, M.n)
    det = v[-1]
    return det if M.rows % 2 == 0 else -det


def minor_count(M: PolyMatrix, r: int) -> int:
    return comb(M.rows, r) * comb(M.cols, r)


def enumerate_minors(M: PolyMatrix, r: int) -> Iterator[Polynomial]:
    """All r-minors, streamed in lexicographic (row-set, column-set) order.

    Minors of one matrix share subdeterminants heavily, so the determinants
    are expanded along the last row with a memo over (row-set, column-set)
    keys instead of running the generic division-free recursion per minor.
    """
    if not 1 <= r <= min(M.rows, M.cols):
        raise ValueError(f"minor size {r} out of range for {M.rows}x{M.cols}")
    q = M.field.q
    entries = [[p.terms for p in row] for row in M.entries]
    memo: dict[tuple, dict] = {}

    def det(rows: tuple[int, ...], cols: tuple[int, ...]) -> dict:
        if len(rows) == 1:
            return entries[rows[0]][cols[0]]
        key = (rows, cols)
        cached = memo.get(key)
        if cached is not None:
            return cached
        acc: dict = {}
        last = rows[-1]
        sub_rows = rows[:-1]
        k = len(cols)
        for j, cj in enumerate(cols):
            e = entries[last][cj]
            if not e:
                continue
            sub = det(sub_rows, cols[:j] + cols[j + 1:])
            if not sub:
                continue
            if (k - 1 + j) % 2 == 0:
                for m1, c1 in e.items():
                    for m2, c2 in sub.items():
                        mm = tuple(a + b for a, b in zip(m1, m2))
                        v = (acc.get(mm, 0) + c1 * c2) % q
                        if v:
                            acc[mm] = v
                        else:
                            acc.pop(mm, None)
            else:
                for m1, c1 in e.items():
                    for m2, c2 in sub.items():
                        mm = tuple(a + b for a, b in zip(m1, m2))
                        v = (acc.get(mm, 0) - c1 * c2) % q
                        if v:
                            acc[mm] = v
                        else:
                            acc.pop(mm, None)
        memo[key] = acc
        return acc

    for row_idx in combinations(range(M.rows), r):
        for col_idx in combinations(range(M.cols), r):
            yield Polynomial(M.field, M.n, dict(det(row_idx, col_idx)),
                             _clean=True)


def rank_at_point(M: PolyMatrix, x: Point | Sequence[int]) -> int:
    return M.evaluate(x).rank()


def stack_jacobian_const(F: Sequence[Polynomial], a: ConstMatrix) -> PolyMatrix:
    """[J(F); a] with the constant rows lifted to degree-0 polynomials."""
    J = jacobian(F)
    if a.cols != J.cols:
        raise ValueError("constant rows must have one column per variable")
    return J.stack(a.to_poly_matrix(J.n))
