from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from comalg.algebra import (
    Algebra,
    AlgebraError,
    AlgebraMorphism,
    center,
    check_morphism,
    commutant,
    commutation_witness,
    generated_subalgebra,
    is_commutative,
    opposite,
    tensor_algebras,
    tensor_over_central,
    unit_morphism,
    validate_algebra,
)
from comalg.catalog import CATALOG, CHARACTERS, catalog_algebra
from comalg.linalg import Matrix, Subspace

from oracles import naive_center, naive_commutant, same_span

NAMES = sorted(CATALOG)
small = st.integers(-2, 2).map(Fraction)


def element(n):
    return st.lists(small, min_size=n, max_size=n).map(tuple)


@st.composite
def alg_and_elements(draw, count=3):
    a = catalog_algebra(draw(st.sampled_from(NAMES)))
    return a, [draw(element(a.dim)) for _ in range(count)]


@pytest.mark.parametrize("name", NAMES)
def test_catalog_validates(name):
    assert validate_algebra(catalog_algebra(name)) == []


@pytest.mark.parametrize("name,dim,basis", [
    ("K", 1, [(1,)]),
    ("Z2", 2, [(1, 0), (0, 1)]),
    ("dual", 2, [(1, 0), (0, 1)]),
    ("M2", 1, [(1, 0, 0, 1)]),
    ("T2", 1, [(1, 0, 1)]),
])
def test_center_hand_values(name, dim, basis):
    z = center(catalog_algebra(name))
    assert z.dim == dim
    assert z.space == Subspace.span(len(basis[0]), basis)


@pytest.mark.parametrize("name", NAMES)
def test_center_matches_naive(name):
    a = catalog_algebra(name)
    assert same_span(center(a).space.vectors, naive_center(a.mul), a.dim)


def test_commutant_of_diagonal_is_diagonal():
    m2 = catalog_algebra("M2")
    diag = Subspace.span(4, [(1, 0, 0, 0), (0, 0, 0, 1)])
    c = commutant(m2, diag)
    assert c.space == diag
    assert same_span(c.space.vectors, naive_commutant(m2.mul, diag.vectors), 4)


def test_commutativity_witness():
    assert is_commutative(catalog_algebra("Z2"))
    assert commutation_witness(catalog_algebra("M2")) is not None
    i, j = commutation_witness(catalog_algebra("T2"))
    t2 = catalog_algebra("T2")
    assert t2.mul[i][j] != t2.mul[j][i]


def test_nonassociative_table_reported():
    z = (0, 0, 0)
    e0, e1, e2 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
    mul = [[e0, e1, e2], [e1, e2, e2], [e2, z, z]]
    bad = validate_algebra(Algebra(3, mul, e0, "Bad"))
    assert bad and bad[0].kind == "associativity" and bad[0].witness == (1, 1, 1)


def test_generated_subalgebra_hand():
    m2 = catalog_algebra("M2")
    upper = generated_subalgebra(m2, [Subspace.span(4, [(0, 1, 0, 0)])])
    assert upper.dim == 2
    assert generated_subalgebra(m2, [Subspace.span(4, [(0, 1, 0, 0), (0, 0, 1, 0)])]).dim == 4
    assert generated_subalgebra(m2, []).dim == 1


def test_opposite_involution_and_t2():
    t2 = catalog_algebra("T2")
    assert opposite(opposite(t2)) == t2
    assert opposite(t2) != t2
    assert validate_algebra(opposite(t2)) == []


def test_characters_are_morphisms():
    k = catalog_algebra("K")
    for name, chars in CHARACTERS.items():
        a = catalog_algebra(name)
        for chi in chars:
            assert check_morphism(AlgebraMorphism(a, k, Matrix.from_rows([chi]))) == []
    z2 = catalog_algebra("Z2")
    assert check_morphism(AlgebraMorphism(z2, k, Matrix.from_rows([[1, 2]])))


@pytest.mark.parametrize("a,b", [("Z2", "dual"), ("M2", "T2"), ("K", "M2")])
def test_tensor_algebra(a, b):
    t = tensor_algebras(catalog_algebra(a), catalog_algebra(b))
    assert t.dim == catalog_algebra(a).dim * catalog_algebra(b).dim
    assert validate_algebra(t) == []


def _unit(a):
    return unit_morphism(a)


def test_tensor_over_central_dims():
    z2, k = catalog_algebra("Z2"), catalog_algebra("K")
    ident = AlgebraMorphism(z2, z2, Matrix.identity(2))
    assert tensor_over_central(z2, z2, z2, ident, ident)[0].dim == 2
    assert tensor_over_central(z2, z2, k, _unit(z2), _unit(z2))[0].dim == 4
    plus = AlgebraMorphism(z2, k, Matrix.from_rows([[1, 1]]))
    assert tensor_over_central(k, k, z2, plus, plus)[0].dim == 1
    minus = AlgebraMorphism(z2, k, Matrix.from_rows([[1, -1]]))
    with pytest.raises(AlgebraError):
        tensor_over_central(k, k, z2, plus, minus)


def test_tensor_over_noncentral_rejected():
    m2, t2 = catalog_algebra("M2"), catalog_algebra("T2")
    k = catalog_algebra("K")
    with pytest.raises(AlgebraError):
        tensor_over_central(m2, m2, t2, AlgebraMorphism(t2, m2, Matrix.from_rows(
            [[1, 0, 0], [0, 1, 0], [0, 0, 0], [0, 0, 1]])), AlgebraMorphism(t2, m2, Matrix.zeros(4, 3)))
    assert tensor_over_central(m2, t2, k, _unit(m2), _unit(t2))[0].dim == 12


@given(alg_and_elements())
def test_associative_on_random_elements(data):
    a, (x, y, z) = data
    assert a.product(a.product(x, y), z) == a.product(x, a.product(y, z))
    assert a.product(a.unit, x) == tuple(Fraction(v) for v in x)


@given(alg_and_elements(count=2))
def test_center_commutes_with_everything(data):
    a, (x, _) = data
    for zvec in center(a).space.vectors:
        assert a.product(zvec, x) == a.product(x, zvec)


@given(st.sampled_from(NAMES), st.sampled_from(NAMES))
def test_opposite_of_tensor(a, b):
    a, b = catalog_algebra(a), catalog_algebra(b)
    assert opposite(tensor_algebras(a, b)) == tensor_algebras(opposite(a), opposite(b))
