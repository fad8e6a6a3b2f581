"""Exact dense linear algebra and the structured binomial matrices.

Four constructors cover the linear-algebra side of the counting
problem, all of size (k+1) x (k+1):

* ``kernel_matrix(k)``      solves to the kernel column (the n = 2k case),
* ``component_matrix(k, n)`` solves to the component column at general n,
* ``transfer_matrix(n, k)`` advances the kernel column from n = 2k to n,
* ``initial_vector(k)``     is the shared right-hand side,
* ``counting_row(k, n)``    is the row functional with row . matrix = ones,
  so that row . initial_vector is the total count.

Determinants come from two independent engines, fraction-free Bareiss
elimination and Dodgson condensation, which are cross-checked against
each other throughout the test suite.  Matrix indices are 1-based in
documentation and error messages; storage is 0-based.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import binomial, exact_div, scalar_str
from .report import CheckResult, failed, passed

Vector = tuple[Fraction, ...]


class SingularMatrixError(ValueError):
    """Raised when a solve meets a vanishing determinant."""


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix of exact rationals."""

    entries: tuple[tuple[Fraction, ...], ...]

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int | Fraction]]) -> "Matrix":
        if not rows or not rows[0]:
            raise ValueError("matrix needs at least one row and one column")
        width = len(rows[0])
        for r, row in enumerate(rows):
            if len(row) != width:
                raise ValueError(f"row {r + 1} has {len(row)} entries, expected {width}")
        return Matrix(tuple(tuple(Fraction(x) for x in row) for row in rows))

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix.from_rows(
            [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        )

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return mat_mul(self, other)

    def to_json(self) -> list[list[str]]:
        return [[scalar_str(x) for x in row] for row in self.entries]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Exact matrix product."""
    if a.cols != b.rows:
        raise ValueError(f"dimension mismatch: {a.rows}x{a.cols} times {b.rows}x{b.cols}")
    return Matrix.from_rows(
        [
            [sum(a.entries[i][t] * b.entries[t][j] for t in range(a.cols)) for j in range(b.cols)]
            for i in range(a.rows)
        ]
    )


def row_times_matrix(u: Sequence[int | Fraction], a: Matrix) -> Vector:
    if len(u) != a.rows:
        raise ValueError(f"dimension mismatch: row of length {len(u)} times {a.rows}x{a.cols}")
    return tuple(
        sum((Fraction(u[t]) * a.entries[t][j] for t in range(a.rows)), Fraction(0))
        for j in range(a.cols)
    )


def matrix_times_vector(a: Matrix, v: Sequence[int | Fraction]) -> Vector:
    if len(v) != a.cols:
        raise ValueError(f"dimension mismatch: {a.rows}x{a.cols} times vector of length {len(v)}")
    return tuple(
        sum((a.entries[i][t] * Fraction(v[t]) for t in range(a.cols)), Fraction(0))
        for i in range(a.rows)
    )


def dot(u: Sequence[int | Fraction], v: Sequence[int | Fraction]) -> Fraction:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum((Fraction(a) * Fraction(b) for a, b in zip(u, v)), Fraction(0))


def replace_column(a: Matrix, col: int, v: Sequence[int | Fraction]) -> Matrix:
    """Copy of ``a`` with 0-based column ``col`` replaced by ``v``."""
    if len(v) != a.rows:
        raise ValueError(f"dimension mismatch: column of length {len(v)} into {a.rows} rows")
    return Matrix.from_rows(
        [
            [Fraction(v[i]) if j == col else a.entries[i][j] for j in range(a.cols)]
            for i in range(a.rows)
        ]
    )


# ---------------------------------------------------------------------------
# determinant engines
# ---------------------------------------------------------------------------

def det_bareiss(a: Matrix) -> Fraction:
    """Exact determinant by fraction-free Bareiss elimination.

    Denominators are cleared row by row first, so the elimination core
    runs on integers where every interior division is exact.  Pivots are
    located by full search over the trailing submatrix, so no nonzero
    pivot is ever missed and nothing divides by zero.
    """
    if a.rows != a.cols:
        raise ValueError(f"determinant needs a square matrix, got {a.rows}x{a.cols}")
    n = a.rows
    scale = 1
    m: list[list[int]] = []
    for row in a.entries:
        mult = math.lcm(*(x.denominator for x in row))
        scale *= mult
        m.append([int(x * mult) for x in row])
    sign = 1
    prev = 1
    for t in range(n - 1):
        pivot = next(((i, j) for i in range(t, n) for j in range(t, n) if m[i][j]), None)
        if pivot is None:
            return Fraction(0)
        pi, pj = pivot
        if pi != t:
            m[t], m[pi] = m[pi], m[t]
            sign = -sign
        if pj != t:
            for row in m:
                row[t], row[pj] = row[pj], row[t]
            sign = -sign
        p = m[t][t]
        for i in range(t + 1, n):
            for j in range(t + 1, n):
                m[i][j] = exact_div(m[i][j] * p - m[i][t] * m[t][j], prev)
            m[i][t] = 0
        prev = p
    return Fraction(sign * m[n - 1][n - 1], scale)


def _contiguous_minor(a: Matrix, top: int, left: int, size: int) -> Matrix:
    return Matrix(tuple(row[left:left + size] for row in a.entries[top:top + size]))


def det_dodgson(a: Matrix) -> Fraction:
    """Determinant by Dodgson condensation.

    Stage s holds every contiguous s x s minor; the condensation step
    divides by the interior entries of the stage two sizes down.  When
    such an interior entry is zero the affected minor is recomputed with
    :func:`det_bareiss` and condensation continues, so the result is
    always defined and always equals the Bareiss determinant.
    """
    if a.rows != a.cols:
        raise ValueError(f"determinant needs a square matrix, got {a.rows}x{a.cols}")
    n = a.rows
    prev: list[list[Fraction]] = [[Fraction(1)] * (n + 1) for _ in range(n + 1)]
    curr: list[list[Fraction]] = [list(row) for row in a.entries]
    for size in range(2, n + 1):
        width = n - size + 1
        nxt: list[list[Fraction]] = []
        for i in range(width):
            out_row: list[Fraction] = []
            for j in range(width):
                divisor = prev[i + 1][j + 1]
                if divisor == 0:
                    out_row.append(det_bareiss(_contiguous_minor(a, i, j, size)))
                else:
                    numerator = (
                        curr[i][j] * curr[i + 1][j + 1]
                        - curr[i][j + 1] * curr[i + 1][j]
                    )
                    out_row.append(numerator / divisor)
            nxt.append(out_row)
        prev, curr = curr, nxt
    return curr[0][0]


def solve_cramer(a: Matrix, v: Sequence[int | Fraction]) -> Vector:
    """Solve a x = v by column-replacement determinants.

    Chosen over an explicit inverse because the structured matrices here
    have determinant 1, which keeps every solution entry integral.
    """
    if a.rows != a.cols:
        raise ValueError(f"solve needs a square matrix, got {a.rows}x{a.cols}")
    if len(v) != a.rows:
        raise ValueError(f"dimension mismatch: vector of length {len(v)} for {a.rows} rows")
    d = det_bareiss(a)
    if d == 0:
        raise SingularMatrixError("cannot solve: determinant is 0")
    return tuple(det_bareiss(replace_column(a, i, v)) / d for i in range(a.cols))


# ---------------------------------------------------------------------------
# structured constructors
# ---------------------------------------------------------------------------

def transfer_matrix(n: int, k: int) -> Matrix:
    """Advance matrix from the kernel column to size n.

    Entry (i, r), 1-based, is binomial(r + n - 2k - i - 1, r - i); the
    matrix is upper triangular with unit diagonal and reduces to the
    identity at n = 2k.
    """
    if k < 0 or n < 2 * k:
        raise ValueError(f"n >= 2k violated: n={n}, k={k}")
    return Matrix.from_rows(
        [
            [binomial(r + n - 2 * k - i - 1, r - i) for r in range(1, k + 2)]
            for i in range(1, k + 2)
        ]
    )


def kernel_matrix(k: int) -> Matrix:
    """Matrix whose solve against the initial vector yields the kernel.

    Entry (i, j), 1-based, is binomial(i + j - 2k - 1, j - 1), using the
    generalized binomial so negative upper arguments contribute their
    signed values.  Equals ``component_matrix(k, 2k)``.
    """
    if k < 0:
        raise ValueError(f"k must be nonnegative, got k={k}")
    return Matrix.from_rows(
        [
            [binomial(i + j - 2 * k - 1, j - 1) for j in range(1, k + 2)]
            for i in range(1, k + 2)
        ]
    )


def component_matrix(k: int, n: int) -> Matrix:
    """Matrix whose solve against the initial vector yields the components.

    Entry (i, j), 1-based, is (-1)^(j-1) binomial(n - i - 1, j - 1).
    """
    if k < 0 or n < 2 * k:
        raise ValueError(f"n >= 2k violated: n={n}, k={k}")
    return Matrix.from_rows(
        [
            [(-1) ** (j - 1) * binomial(n - i - 1, j - 1) for j in range(1, k + 2)]
            for i in range(1, k + 2)
        ]
    )


def initial_vector(k: int) -> tuple[int, ...]:
    """Alternating-binomial right-hand side, entry i = 1..k+1:

    sum_b (-1)^(k-b) binomial(k, b) binomial(i, b) b!
    """
    if k < 0:
        raise ValueError(f"k must be nonnegative, got k={k}")
    return tuple(
        sum(
            (-1) ** (k - b) * binomial(k, b) * binomial(i, b) * math.factorial(b)
            for b in range(k + 1)
        )
        for i in range(1, k + 2)
    )


def counting_row(k: int, n: int) -> Vector:
    """Row u with u . component_matrix(k, n) = (1, ..., 1).

    Entry j is (-1)^(k+1-j) binomial(n-2, k) binomial(k, j-1) (n-1)/(n-j),
    so u . initial_vector(k) is the total count.  Requires n > k+1; at
    n <= k+1 the denominator n - j vanishes inside the range.
    """
    if k < 0 or n < 2 * k:
        raise ValueError(f"n >= 2k violated: n={n}, k={k}")
    if n <= k + 1:
        raise ValueError(
            f"counting row undefined for n <= k+1: denominator n-j vanishes at j={n} "
            f"(n={n}, k={k})"
        )
    return tuple(
        (-1) ** (k + 1 - j)
        * binomial(n - 2, k)
        * binomial(k, j - 1)
        * Fraction(n - 1, n - j)
        for j in range(1, k + 2)
    )


# ---------------------------------------------------------------------------
# parameterized determinant product
# ---------------------------------------------------------------------------

def shifted_binomial_matrix(k: int, x: int, y: int) -> Matrix:
    """(k+1) x (k+1) matrix with entry (i, j) = binomial(i+j+x+y, i+x)."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got k={k}")
    return Matrix.from_rows(
        [
            [binomial(i + j + x + y, i + x) for j in range(1, k + 2)]
            for i in range(1, k + 2)
        ]
    )


def binomial_det_product(k: int, x: int, y: int) -> Fraction:
    """Closed product form for det(shifted_binomial_matrix(k, x, y)):

    prod_{i=1..k+1} binomial(i+1+x+y, i+x) / binomial(i+y, 1+y)

    Defined only where every divisor binomial is nonzero (y >= -1 on
    integer inputs); a vanishing divisor raises and names the index.
    """
    if k < 0:
        raise ValueError(f"k must be nonnegative, got k={k}")
    total = Fraction(1)
    for i in range(1, k + 2):
        divisor = binomial(i + y, 1 + y)
        if divisor == 0:
            raise ValueError(
                f"vanishing divisor binomial({i + y}, {1 + y}) at i={i} (x={x}, y={y})"
            )
        total *= Fraction(binomial(i + 1 + x + y, i + x), divisor)
    return total


# ---------------------------------------------------------------------------
# consistency checks used by the verification suites
# ---------------------------------------------------------------------------

def check_transfer_consistency(k: int, n: int) -> CheckResult:
    """component_matrix(k, n) @ transfer_matrix(n, k) == kernel_matrix(k)."""
    name = f"matrix-product-collapse k={k} n={n}"
    product = mat_mul(component_matrix(k, n), transfer_matrix(n, k))
    want = kernel_matrix(k)
    if product == want:
        return passed(name, group="lemmaA")
    for i in range(product.rows):
        for j in range(product.cols):
            if product.entries[i][j] != want.entries[i][j]:
                return failed(
                    name,
                    f"entry ({i + 1}, {j + 1}): got {scalar_str(product.entries[i][j])}, "
                    f"expected {scalar_str(want.entries[i][j])}",
                    group="lemmaA",
                )
    raise AssertionError("unreachable")


def check_counting_row(k: int, n: int) -> CheckResult:
    """counting_row(k, n) . component_matrix(k, n) == (1, ..., 1)."""
    name = f"counting-row-normalization k={k} n={n}"
    product = row_times_matrix(counting_row(k, n), component_matrix(k, n))
    for j, value in enumerate(product, start=1):
        if value != 1:
            return failed(
                name, f"column {j}: got {scalar_str(value)}, expected 1", group="lemmaB"
            )
    return passed(name, group="lemmaB")
