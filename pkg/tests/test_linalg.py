from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from comalg.linalg import (
    DimensionMismatch,
    Matrix,
    SingularMatrixError,
    Subspace,
    format_rational,
    image,
    kernel,
    kron,
    parse_rational,
    quotient,
    rref,
    subspace_intersect,
    subspace_join,
)

from oracles import naive_nullspace, naive_rank, same_span

small = st.integers(-3, 3).map(Fraction)


def matrices(rows=st.integers(1, 4), cols=st.integers(1, 4)):
    return st.tuples(rows, cols).flatmap(
        lambda rc: st.lists(st.lists(small, min_size=rc[1], max_size=rc[1]),
                            min_size=rc[0], max_size=rc[0]).map(lambda r: Matrix.from_rows(r, rc[1])))


def vectors(n, max_count=4):
    return st.lists(st.lists(small, min_size=n, max_size=n).map(tuple), max_size=max_count)


@pytest.mark.parametrize("text,value", [("0", 0), ("-3/4", Fraction(-3, 4)), ("6/4", Fraction(3, 2)), ("12", 12)])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["+1", " 1", "1/0", "1.5", "", "a"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_format_rational_is_canonical():
    assert format_rational(Fraction(6, -4)) == "-3/2"
    assert format_rational(Fraction(4, 2)) == "2"


def test_hand_rref():
    m = Matrix.from_rows([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    r, piv = rref(m)
    assert piv == (0, 1)
    assert r.row(0) == (1, 0, 1) and r.row(1) == (0, 1, 1)


def test_inverse_and_singular():
    m = Matrix.from_rows([[2, 1], [1, 1]])
    assert m @ m.inverse() == Matrix.identity(2)
    with pytest.raises(SingularMatrixError):
        Matrix.from_rows([[1, 2], [2, 4]]).inverse()


def test_shape_mismatch():
    with pytest.raises(DimensionMismatch):
        Matrix.identity(2) @ Matrix.identity(3)


def test_kron_mixed_product():
    a = Matrix.from_rows([[1, 2], [0, 1]])
    b = Matrix.from_rows([[0, 1], [1, 0]])
    assert kron(a, b) @ kron(b, a) == kron(a @ b, b @ a)


@given(matrices())
def test_rank_nullity(m):
    assert kernel(m).dim + m.rank() == m.cols


@given(matrices())
def test_kernel_matches_naive(m):
    ours = kernel(m).vectors
    naive = naive_nullspace([m.row(i) for i in range(m.rows)], m.cols)
    assert same_span(ours, naive, m.cols)
    for v in ours:
        assert not any(m.apply(v))


@given(matrices())
def test_image_rank(m):
    assert image(m).dim == m.rank() == naive_rank([m.row(i) for i in range(m.rows)], m.cols)


@given(vectors(4), vectors(4))
def test_join_intersect_dimension_formula(a, b):
    sa, sb = Subspace.span(4, a), Subspace.span(4, b)
    j, i = subspace_join(sa, sb), subspace_intersect(sa, sb)
    assert sa.dim + sb.dim == j.dim + i.dim
    assert i.issubset(sa) and i.issubset(sb) and sa.issubset(j)


@given(vectors(4))
def test_span_is_canonical(a):
    s = Subspace.span(4, a)
    assert Subspace.span(4, list(reversed(a)) + list(a)) == s
    assert Subspace.span(4, s.vectors) == s


@given(vectors(4), st.lists(small, min_size=4, max_size=4))
def test_quotient_projection_section(rels, v):
    q = quotient(4, Subspace.span(4, rels))
    assert q.quotient_dim == 4 - q.relations.dim
    assert q.projection @ q.section == Matrix.identity(q.quotient_dim)
    diff = tuple(x - y for x, y in zip(v, q.lift(q.project(v))))
    assert q.relations.contains(diff)
