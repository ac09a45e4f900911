import pytest
from hypothesis import given, strategies as st

from comalg.algebra import AlgebraMorphism
from comalg.bimodule import (
    Bimodule,
    BimoduleError,
    BimoduleMorphism,
    associator,
    associator_inverse,
    free_bimodule,
    identity,
    intertwiner_space,
    is_intertwiner,
    left_unitor,
    left_unitor_inverse,
    quotient_bimodule,
    regular_bimodule,
    right_unitor,
    right_unitor_inverse,
    tensor_morphisms_over,
    tensor_over,
    twisted_regular,
    validate_bimodule,
)
from comalg.catalog import CATALOG, catalog_algebra
from comalg.generators import random_bimodule, random_endomorphism
from comalg.linalg import Matrix, Subspace
from comalg.rng import SplitMix64

M2, K, Z2 = catalog_algebra("M2"), catalog_algebra("K"), catalog_algebra("Z2")

# matrix units E11, E12, E21, E22 acting on columns
UNITS = [Matrix.from_rows([[int(r == i and c == j) for c in range(2)] for r in range(2)])
         for i in range(2) for j in range(2)]


def column_module():
    return Bimodule(M2, K, 2, UNITS, [Matrix.identity(2)])


def row_module():
    # v . E_ij on row vectors is E_ij^T on coordinates
    return Bimodule(K, M2, 2, [Matrix.identity(2)], [u.T for u in UNITS])


def test_hand_modules_validate():
    assert validate_bimodule(column_module()) == []
    assert validate_bimodule(row_module()) == []


def test_column_row_tensor_dims():
    assert tensor_over(column_module(), row_module())[0].dim == 4
    assert tensor_over(row_module(), column_module())[0].dim == 1
    assert tensor_over(regular_bimodule(M2), column_module())[0].dim == 2


def test_tensor_needs_matching_algebras():
    with pytest.raises(BimoduleError):
        tensor_over(column_module(), column_module())


def test_wrong_side_rejected():
    # right action given as a morphism instead of an antimorphism
    t2 = catalog_algebra("T2")
    reg = regular_bimodule(t2)
    bad = Bimodule(t2, t2, 3, reg.left_action, reg.left_action)
    kinds = {v.kind for v in validate_bimodule(bad)}
    assert "right-multiplicativity" in kinds or "commutation" in kinds


@pytest.mark.parametrize("name,dim", [("K", 1), ("Z2", 2), ("dual", 2), ("M2", 1), ("T2", 1)])
def test_endomorphisms_of_regular_are_center(name, dim):
    reg = regular_bimodule(catalog_algebra(name))
    assert len(intertwiner_space(reg, reg)) == dim


def test_quotient_rejects_non_submodule():
    free = free_bimodule(Z2, Z2)
    with pytest.raises(BimoduleError):
        quotient_bimodule(free, Subspace.span(4, [(1, 0, 0, 0)]))


def test_twisted_regular_by_identity_is_regular():
    ident = AlgebraMorphism(M2, M2, Matrix.identity(4))
    assert twisted_regular(M2, M2, ident) == regular_bimodule(M2)


def test_unitors_on_column_module():
    m = column_module()
    for u, uinv in ((left_unitor(m), left_unitor_inverse(m)), (right_unitor(m), right_unitor_inverse(m))):
        assert is_intertwiner(u) and is_intertwiner(uinv)
        assert uinv.matrix @ u.matrix == Matrix.identity(m.dim)
        assert u.matrix @ uinv.matrix == Matrix.identity(u.target.dim)


def test_associator_hand_case():
    a = associator(column_module(), row_module(), column_module())
    assert a.source.dim == a.target.dim == 2
    assert a.matrix @ associator_inverse(column_module(), row_module(), column_module()).matrix \
        == Matrix.identity(2)


@st.composite
def bimodule_triples(draw):
    rng = SplitMix64(draw(st.integers(0, 2 ** 64 - 1)))
    names = sorted(CATALOG)
    algs = [catalog_algebra(draw(st.sampled_from([n for n in names if n != "M2"]))) for _ in range(4)]
    ms = [random_bimodule(rng, algs[i], algs[i + 1], 3) for i in range(3)]
    if any(m is None for m in ms):
        ms = [regular_bimodule(K)] * 3
    return rng, ms


@given(bimodule_triples())
def test_random_bimodules_validate(data):
    _, ms = data
    for m in ms:
        assert validate_bimodule(m) == []


@given(bimodule_triples())
def test_associator_is_invertible_intertwiner(data):
    _, (m, n, p) = data
    a, ainv = associator(m, n, p), associator_inverse(m, n, p)
    assert is_intertwiner(a) and is_intertwiner(ainv)
    assert a.matrix @ ainv.matrix == Matrix.identity(a.target.dim)
    assert ainv.matrix @ a.matrix == Matrix.identity(a.source.dim)


@given(bimodule_triples())
def test_tensor_of_morphisms_is_functorial(data):
    rng, (m, n, _) = data
    f1, f2 = random_endomorphism(rng, m), random_endomorphism(rng, m)
    g1, g2 = random_endomorphism(rng, n), random_endomorphism(rng, n)

    def t(f, g):
        return tensor_morphisms_over(BimoduleMorphism(m, m, f), BimoduleMorphism(n, n, g)).matrix

    assert t(f1, g1) @ t(f2, g2) == t(f1 @ f2, g1 @ g2)
    assert tensor_morphisms_over(identity(m), identity(n)).matrix == Matrix.identity(tensor_over(m, n)[0].dim)
