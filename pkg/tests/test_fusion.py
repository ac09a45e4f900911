import pytest

from comalg.algebra import AlgebraError, AlgebraMorphism, opposite, unit_morphism
from comalg.catalog import catalog_algebra
from comalg.fusion import FusionError, FusionInput, fusion_algebra, rho_iso, verify_fusion_theorem
from comalg.linalg import Matrix


def alg(name):
    return catalog_algebra(name)


def scalar_map(b, d, chi):
    """``b -> d``, ``x -> chi(x) 1``."""
    cols = [tuple(c * u for u in alg(d).unit) for c in chi]
    return AlgebraMorphism(alg(b), alg(d), Matrix.from_columns(cols, alg(d).dim))


def identity_map(name):
    return AlgebraMorphism(alg(name), alg(name), Matrix.identity(alg(name).dim))


PLUS, MINUS = (1, 1), (1, -1)

# (D, B, E, iota_D, iota_E, dim of D (x)_B E), dimensions derived by hand
COMBOS = [
    ("M2", "K", "M2", scalar_map("K", "M2", (1,)), scalar_map("K", "M2", (1,)), 16),
    ("Z2", "Z2", "Z2", identity_map("Z2"), identity_map("Z2"), 2),
    ("dual", "K", "T2", scalar_map("K", "dual", (1,)), scalar_map("K", "T2", (1,)), 6),
    ("Z2", "Z2", "dual", identity_map("Z2"), scalar_map("Z2", "dual", PLUS), 2),
    ("Z2", "Z2", "K", identity_map("Z2"), scalar_map("Z2", "K", MINUS), 1),
    ("M2", "Z2", "T2", scalar_map("Z2", "M2", PLUS), scalar_map("Z2", "T2", PLUS), 12),
    ("dual", "dual", "dual", identity_map("dual"), identity_map("dual"), 2),
    ("K", "K", "K", identity_map("K"), identity_map("K"), 1),
    ("T2", "K", "M2", scalar_map("K", "T2", (1,)), scalar_map("K", "M2", (1,)), 12),
    ("Z2", "K", "Z2", scalar_map("K", "Z2", (1,)), scalar_map("K", "Z2", (1,)), 4),
    ("dual", "K", "dual", scalar_map("K", "dual", (1,)), scalar_map("K", "dual", (1,)), 4),
    ("M2", "dual", "M2", scalar_map("dual", "M2", (1, 0)), scalar_map("dual", "M2", (1, 0)), 16),
    ("Z2", "Z2", "M2", identity_map("Z2"), scalar_map("Z2", "M2", MINUS), 4),
    ("T2", "Z2", "Z2", scalar_map("Z2", "T2", MINUS), identity_map("Z2"), 3),
]


@pytest.mark.parametrize("d,b,e,iota_d,iota_e,dim", COMBOS, ids=[f"{c[0]}-{c[1]}-{c[2]}" for c in COMBOS])
def test_fusion_theorem(d, b, e, iota_d, iota_e, dim):
    rep = verify_fusion_theorem(alg(d), alg(b), alg(e), iota_d, iota_e)
    assert rep.ok, rep.lines()
    assert rep.tensor_dim == rep.fused_dim == dim


def test_report_lines():
    rep = verify_fusion_theorem(alg("Z2"), alg("Z2"), alg("Z2"), identity_map("Z2"), identity_map("Z2"))
    assert rep.lines() == ["OK carrier", "OK image-equality", "OK injective", "OK morphism",
                           "OK unit-of-sections", "OK dimension", "dim tensor=2 fused=2"]


def test_mismatched_characters_give_zero():
    with pytest.raises(AlgebraError):
        rho_iso(alg("K"), alg("Z2"), alg("K"), scalar_map("Z2", "K", PLUS), scalar_map("Z2", "K", MINUS))


def test_general_fusion_over_noncommutative_base():
    # T2 included in M2 on the right, transposed into M2 on the left
    m2, t2 = alg("M2"), alg("T2")
    incl = Matrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 0], [0, 0, 1]])
    trans = Matrix.from_rows([[1, 0, 0], [0, 0, 0], [0, 1, 0], [0, 0, 1]])
    inp = FusionInput(m2, m2, t2, AlgebraMorphism(opposite(t2), m2, trans), AlgebraMorphism(t2, m2, incl))
    res = fusion_algebra(inp)
    assert res.carrier.quotient_dim == 4
    # the two commutants act on different tensor factors, so they commute
    for x in res.left_commutant.space.vectors:
        for y in res.right_commutant.space.vectors:
            lx, ry = res.left_rep(x), res.right_rep(y)
            assert lx @ ry == ry @ lx
    assert res.fused.is_closed()


def test_input_validation():
    z2 = alg("Z2")
    with pytest.raises(FusionError):
        FusionInput(z2, z2, z2, identity_map("Z2"), AlgebraMorphism(z2, z2, Matrix.zeros(2, 2))).validate()


def test_rho_is_left_regular():
    rho = rho_iso(alg("Z2"), alg("K"), alg("Z2"), unit_morphism(alg("Z2")), unit_morphism(alg("Z2")))
    assert rho.source.dim == 4 and rho.is_injective()
