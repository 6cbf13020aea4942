from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from omalex.exact import (
    DomainError,
    RationalMatrix,
    ShapeError,
    det,
    kernel_basis,
    left_kernel_basis,
    rank,
    reduce_columns,
    rref,
    smith_normal_form,
    to_rational,
)
from oracles import det_cofactor, rank_mod

small_int = st.integers(-5, 5)


def square(n):
    return st.lists(st.lists(small_int, min_size=n, max_size=n), min_size=n, max_size=n)


def test_to_rational_parses_strings():
    assert to_rational("3/6") == Fraction(1, 2)
    assert to_rational(-4) == -4
    with pytest.raises(TypeError):
        to_rational(0.5)


def test_det_examples():
    assert det([[1, 1], [4, 3]]) == -1
    assert det([[2, 0, 0], [0, 3, 0], [0, 0, 5]]) == 30
    assert det([["1/2", 0], [0, 4]]) == 2
    assert det(RationalMatrix.from_rows([[1, 2], [2, 4]])) == 0


def test_det_requires_square():
    with pytest.raises(ShapeError):
        det([[1, 2, 3], [4, 5, 6]])


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(square))
def test_det_matches_cofactor_expansion(rows):
    assert det(rows) == det_cofactor(rows)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 4).flatmap(square), st.data())
def test_det_alternating(rows, data):
    i = data.draw(st.integers(0, len(rows) - 1))
    j = data.draw(st.integers(0, len(rows) - 1).filter(lambda k: k != i))
    swapped = [r[:] for r in rows]
    swapped[i], swapped[j] = swapped[j], swapped[i]
    assert det(swapped) == -det(rows)


def test_rank_and_rref():
    rows, piv = rref([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert piv == [0, 1]
    assert rank([[1, 2, 3], [2, 4, 6]]) == 1
    assert rank([[0, 0]]) == 0


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(1, 5), st.data())
def test_kernel_is_kernel(r, c, data):
    rows = data.draw(st.lists(st.lists(small_int, min_size=c, max_size=c), min_size=r, max_size=r))
    k = kernel_basis(rows)
    assert k.rows == c - rank_mod(rows)
    m = RationalMatrix.from_rows(rows)
    for i in range(k.rows):
        v = k.row(i)
        assert all(x == 0 for x in m.apply(v))
        # primitive integer normalisation
        nz = [x for x in v if x != 0]
        assert nz[0] > 0 and all(x.denominator == 1 for x in v)
    if k.rows:
        assert rank(k) == k.rows


def test_left_kernel():
    lk = left_kernel_basis([[1, 1], [2, 2], [0, 1]])
    assert lk.rows == 1
    assert lk.row(0) == (2, -1, 0)


def test_matrix_json_roundtrip():
    m = RationalMatrix.from_rows([[1, "1/3"], [0, -2]], labels=["a", "b"])
    assert RationalMatrix.from_json_obj(m.to_json_obj()) == m
    assert m.T.shape == (2, 2)
    with pytest.raises(ShapeError):
        RationalMatrix.from_rows([[1, 2], [3]])


def test_smith_examples():
    assert smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == (2, 6, 12)
    assert smith_normal_form([[0, 0], [0, 0]]) == ()
    assert smith_normal_form([[2, 0], [0, 3]]) == (1, 6)
    with pytest.raises(DomainError):
        smith_normal_form([["1/2"]])


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(square))
def test_smith_product_is_abs_det(rows):
    d = det(rows)
    factors = smith_normal_form(rows)
    if d == 0:
        assert len(factors) < len(rows)
    else:
        prod = 1
        for x in factors:
            prod *= x
        assert prod == abs(d)
    assert all(b % a == 0 for a, b in zip(factors, factors[1:]))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.integers(1, 5), st.data())
def test_column_reduction_agrees_with_general_snf(r, c, data):
    rows = data.draw(st.lists(st.lists(small_int, min_size=c, max_size=c), min_size=r, max_size=r))
    cols = [{i: rows[i][j] for i in range(r) if rows[i][j]} for j in range(c)]
    factors, _ = reduce_columns(cols)
    assert factors == smith_normal_form(rows)
    assert len(factors) == rank_mod(rows)
