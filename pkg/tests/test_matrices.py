"""Exact linear algebra: constructors, determinant engines, solves."""

import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lisenum import (
    Matrix,
    SingularMatrixError,
    binomial,
    binomial_det_product,
    check_counting_row,
    check_transfer_consistency,
    component_matrix,
    counting_row,
    det_bareiss,
    det_dodgson,
    initial_vector,
    kernel_matrix,
    mat_mul,
    row_times_matrix,
    shifted_binomial_matrix,
    solve_cramer,
    transfer_matrix,
)


def det_leibniz(m: Matrix) -> Fraction:
    """Independent oracle: signed sum over all permutations."""
    n = m.rows
    total = Fraction(0)
    for sigma in permutations(range(n)):
        sign = 1
        for a in range(n):
            for b in range(a + 1, n):
                if sigma[a] > sigma[b]:
                    sign = -sign
        product = Fraction(1)
        for i in range(n):
            product *= m.entries[i][sigma[i]]
        total += sign * product
    return total


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def test_transfer_matrix_values():
    for k in range(0, 6):
        assert transfer_matrix(2 * k, k) == Matrix.identity(k + 1)
    assert transfer_matrix(3, 1) == Matrix.from_rows([[1, 1], [0, 1]])
    assert transfer_matrix(6, 2).entries[0] == (1, 2, 3)
    with pytest.raises(ValueError):
        transfer_matrix(3, 2)


def test_kernel_matrix_values():
    assert kernel_matrix(0) == Matrix.from_rows([[1]])
    assert kernel_matrix(1) == Matrix.from_rows([[1, 0], [1, 1]])
    assert kernel_matrix(2) == Matrix.from_rows([[1, -2, 1], [1, -1, 0], [1, 0, 0]])


def test_component_matrix_values():
    assert component_matrix(1, 3) == Matrix.from_rows([[1, -1], [1, 0]])
    assert component_matrix(2, 5) == Matrix.from_rows([[1, -3, 3], [1, -2, 1], [1, -1, 0]])
    assert component_matrix(1, 2) == kernel_matrix(1)
    with pytest.raises(ValueError):
        component_matrix(2, 3)


def test_kernel_matrix_is_component_matrix_at_base_size():
    for k in range(0, 7):
        assert kernel_matrix(k) == component_matrix(k, 2 * k)


def test_initial_vector_values():
    assert initial_vector(0) == (1,)
    assert initial_vector(1) == (0, 1)
    assert initial_vector(2) == (-1, -1, 1)
    assert initial_vector(3) == (2, -1, -4, -1)


def test_initial_vector_recomputable_from_definition():
    from math import factorial

    for k in range(0, 7):
        vec = initial_vector(k)
        for i in range(1, k + 2):
            direct = sum(
                (-1) ** (k - b) * binomial(k, b) * binomial(i, b) * factorial(b)
                for b in range(0, i + 1)
            )
            assert vec[i - 1] == direct


def test_counting_row_values():
    assert counting_row(1, 3) == (Fraction(-1), Fraction(2))
    assert counting_row(2, 5) == (Fraction(3), Fraction(-8), Fraction(6))
    assert counting_row(0, 3) == (Fraction(1),)


def test_counting_row_domain_errors():
    with pytest.raises(ValueError, match="n-j vanishes"):
        counting_row(1, 2)  # n = k+1
    with pytest.raises(ValueError, match="n-j vanishes"):
        counting_row(0, 1)
    with pytest.raises(ValueError):
        counting_row(2, 3)  # n < 2k


# ---------------------------------------------------------------------------
# products
# ---------------------------------------------------------------------------

def test_mat_mul():
    m2 = kernel_matrix(2)
    assert mat_mul(Matrix.identity(3), m2) == m2
    assert mat_mul(component_matrix(2, 4), transfer_matrix(4, 2)) == component_matrix(2, 4)
    assert mat_mul(component_matrix(2, 5), transfer_matrix(5, 2)) == kernel_matrix(2)
    with pytest.raises(ValueError):
        mat_mul(Matrix.identity(2), Matrix.identity(3))


def test_matrix_json_encoding():
    m = Matrix.from_rows([[1, Fraction(1, 2)], [Fraction(-3, 4), 0]])
    assert m.to_json() == [["1", "1/2"], ["-3/4", "0"]]


def test_rectangular_validation():
    with pytest.raises(ValueError):
        Matrix.from_rows([[1, 2], [3]])
    with pytest.raises(ValueError):
        Matrix.from_rows([])


# ---------------------------------------------------------------------------
# determinant engines
# ---------------------------------------------------------------------------

def test_det_small_values():
    assert det_bareiss(Matrix.from_rows([[1, 2], [3, 4]])) == -2
    assert det_dodgson(Matrix.from_rows([[1, 2], [3, 4]])) == -2
    assert det_bareiss(Matrix.from_rows([[7]])) == 7
    assert det_dodgson(Matrix.from_rows([[7]])) == 7


def test_det_requires_square():
    rect = Matrix.from_rows([[1, 2, 3], [4, 5, 6]])
    with pytest.raises(ValueError):
        det_bareiss(rect)
    with pytest.raises(ValueError):
        det_dodgson(rect)


def test_unit_determinants():
    for k in range(0, 6):
        assert det_bareiss(kernel_matrix(k)) == 1
        assert det_dodgson(kernel_matrix(k)) == 1
    assert det_bareiss(component_matrix(3, 9)) == 1
    assert det_dodgson(component_matrix(3, 9)) == 1


def test_dodgson_zero_interior_fallback():
    ones = Matrix.from_rows([[1] * 4 for _ in range(4)])
    assert det_dodgson(ones) == 0
    assert det_bareiss(ones) == 0
    # zero interior with a nonzero determinant
    m = Matrix.from_rows([[2, 1, 3], [5, 0, 1], [4, 2, 2]])
    assert det_dodgson(m) == det_bareiss(m) == det_leibniz(m)


def test_bareiss_needs_column_pivoting():
    # leading column is zero; full pivot search must look sideways
    m = Matrix.from_rows([[0, 0, 2], [0, 3, 1], [5, 1, 4]])
    assert det_bareiss(m) == det_leibniz(m) == -30
    assert det_dodgson(m) == -30


def test_engines_match_leibniz_on_random_integer_matrices():
    rng = random.Random(1729)
    for trial in range(120):
        dim = 1 + trial % 5
        rows = [[rng.randint(-9, 9) for _ in range(dim)] for _ in range(dim)]
        if trial % 3 == 0 and dim >= 3:
            rows[rng.randint(1, dim - 2)][rng.randint(1, dim - 2)] = 0
        m = Matrix.from_rows(rows)
        expected = det_leibniz(m)
        assert det_bareiss(m) == expected
        assert det_dodgson(m) == expected


def test_engines_match_leibniz_on_random_rational_matrices():
    rng = random.Random(4104)
    for trial in range(60):
        dim = 2 + trial % 3
        rows = [
            [Fraction(rng.randint(-8, 8), rng.randint(1, 6)) for _ in range(dim)]
            for _ in range(dim)
        ]
        m = Matrix.from_rows(rows)
        expected = det_leibniz(m)
        assert det_bareiss(m) == expected
        assert det_dodgson(m) == expected


@settings(max_examples=150, deadline=None)
@given(
    st.integers(2, 4).flatmap(
        lambda d: st.lists(
            st.lists(st.integers(-20, 20), min_size=d, max_size=d), min_size=d, max_size=d
        )
    )
)
def test_engines_agree_property(rows):
    m = Matrix.from_rows(rows)
    assert det_bareiss(m) == det_dodgson(m)


# ---------------------------------------------------------------------------
# solving
# ---------------------------------------------------------------------------

def test_solve_cramer_golden():
    assert solve_cramer(kernel_matrix(2), initial_vector(2)) == (1, 2, 2)
    assert solve_cramer(component_matrix(3, 9), initial_vector(3)) == (191, 87, 30, 6)
    v = (Fraction(5), Fraction(-2, 3))
    assert solve_cramer(Matrix.identity(2), v) == v


def test_solve_cramer_random_against_residual():
    rng = random.Random(55)
    solved = 0
    while solved < 40:
        dim = 2 + rng.randrange(3)
        m = Matrix.from_rows([[rng.randint(-6, 6) for _ in range(dim)] for _ in range(dim)])
        if det_bareiss(m) == 0:
            continue
        v = [rng.randint(-9, 9) for _ in range(dim)]
        x = solve_cramer(m, v)
        for i in range(dim):
            assert sum(m.entries[i][j] * x[j] for j in range(dim)) == v[i]
        solved += 1


def test_solve_cramer_errors():
    singular = Matrix.from_rows([[1, 2], [2, 4]])
    with pytest.raises(SingularMatrixError, match="determinant is 0"):
        solve_cramer(singular, (1, 1))
    with pytest.raises(ValueError):
        solve_cramer(Matrix.identity(2), (1, 2, 3))


# ---------------------------------------------------------------------------
# parameterized determinant product
# ---------------------------------------------------------------------------

def test_det_product_k0_closed_form():
    for x in range(-3, 5):
        for y in range(-1, 5):
            assert binomial_det_product(0, x, y) == binomial(x + y + 2, x + 1)


def test_det_product_golden_points():
    # generic entries at (k=1, x=3, y=2) are binomial(i+j+5, i+3)
    m = shifted_binomial_matrix(1, 3, 2)
    assert m == Matrix.from_rows(
        [[binomial(7, 4), binomial(8, 4)], [binomial(8, 5), binomial(9, 5)]]
    )
    assert binomial_det_product(1, 3, 2) == det_bareiss(m) == 490
    # at (k=2, x=-4, y=-1) every numerator binomial has a negative lower
    # index, so both the product and the matrix collapse to zero
    assert binomial_det_product(2, -4, -1) == 0
    assert det_bareiss(shifted_binomial_matrix(2, -4, -1)) == 0


def test_det_product_matches_determinant_on_grid():
    for k in range(0, 4):
        for x in range(-6, 7):
            for y in range(-1, 7):
                closed = binomial_det_product(k, x, y)
                assert closed == det_bareiss(shifted_binomial_matrix(k, x, y)), (k, x, y)


def test_det_product_vanishing_divisor():
    with pytest.raises(ValueError, match="at i=1"):
        binomial_det_product(2, 0, -2)
    with pytest.raises(ValueError, match="vanishing divisor"):
        binomial_det_product(1, 5, -4)


# ---------------------------------------------------------------------------
# suite-facing checks
# ---------------------------------------------------------------------------

def test_transfer_consistency_grid():
    for k in range(0, 6):
        for n in range(2 * k, 21):
            result = check_transfer_consistency(k, n)
            assert result.status == "pass", result.witness


def test_counting_row_normalization_grid():
    for k in range(0, 6):
        for n in range(max(2 * k, k + 2), 21):
            result = check_counting_row(k, n)
            assert result.status == "pass", result.witness
    assert row_times_matrix(counting_row(2, 5), component_matrix(2, 5)) == (1, 1, 1)
