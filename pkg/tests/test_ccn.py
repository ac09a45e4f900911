import pytest
from hypothesis import given, strategies as st

from comalg.algebra import AlgebraError
from comalg.bimodule import Bimodule, regular_bimodule
from comalg.catalog import COMMUTATIVE, catalog_algebra
from comalg.ccn import (
    ActionMismatchError,
    NonCommutativeError,
    NotCentralError,
    fuse_defects,
    horizontal_fusion,
    identity_defect,
    identity_sector,
    interchanger,
    make_defect,
    make_net,
    make_sector,
    vertical_fusion,
)
from comalg.generators import random_defect, random_net, random_sector
from comalg.linalg import Matrix
from comalg.rng import SplitMix64
from comalg.translate import ccn_to_comalg, comalg_to_ccn

K, Z2 = make_net(catalog_algebra("K")), make_net(catalog_algebra("Z2"))


@pytest.mark.parametrize("name", COMMUTATIVE)
def test_net_accepts_commutative(name):
    assert make_net(catalog_algebra(name)).algebra == catalog_algebra(name)


@pytest.mark.parametrize("name", ["M2", "T2"])
def test_net_rejects_noncommutative_with_witness(name):
    a = catalog_algebra(name)
    with pytest.raises(NonCommutativeError) as info:
        make_net(a)
    i, j = info.value.witness
    assert a.mul[i][j] != a.mul[j][i]


def test_not_central_reported_before_morphism_failure():
    # 1 -> E11 is neither central nor unital; centrality is reported
    with pytest.raises(NotCentralError) as info:
        make_defect(K, K, catalog_algebra("M2"), Matrix.from_rows([[1], [0], [0], [0]]))
    assert info.value.witness in range(4)


def test_non_morphism_phi_rejected():
    with pytest.raises(AlgebraError):
        make_defect(Z2, K, catalog_algebra("Z2"), Matrix.from_rows([[1, 0], [0, 2]]))


def test_action_mismatch():
    d = identity_defect(Z2)
    reg = regular_bimodule(Z2.algebra)
    # g acts on the right with a sign: still a bimodule, but not a sector
    twisted = Bimodule(Z2.algebra, Z2.algebra, 2, reg.left_action,
                       [reg.right_action[0], -reg.right_action[1]])
    with pytest.raises(ActionMismatchError):
        make_sector(d, d, twisted)


def test_identity_defect_is_a_unit_for_fusion():
    d = identity_defect(Z2)
    assert fuse_defects(d, d).algebra.dim == 2
    e = make_defect(Z2, K, catalog_algebra("Z2"), Matrix.identity(2))
    assert fuse_defects(d, e).algebra.dim == 2


def test_fusion_of_identity_sectors():
    d = identity_defect(Z2)
    s = identity_sector(d)
    assert vertical_fusion(s, s).bimodule == s.bimodule
    h = horizontal_fusion(s, s)
    assert h.dim == 2 and h.top == fuse_defects(d, d)


@st.composite
def sector_quads(draw):
    rng = SplitMix64(draw(st.integers(0, 2 ** 64 - 1)))
    for _ in range(20):
        a, b, c = (random_net(rng, 2) for _ in range(3))
        ds = [random_defect(rng, a, b, 2) for _ in range(3)]
        es = [random_defect(rng, b, c, 2) for _ in range(3)]
        try:
            for d, e in zip(ds, es):
                fuse_defects(d, e)
        except AlgebraError:
            continue
        hs = [random_sector(rng, ds[i], ds[i + 1], 2) for i in range(2)]
        ks = [random_sector(rng, es[i], es[i + 1], 2) for i in range(2)]
        if None not in hs and None not in ks:
            return hs, ks
    s = identity_sector(identity_defect(K))
    return [s, s], [s, s]


@given(sector_quads())
def test_interchanger_is_invertible(data):
    (h, h2), (k, k2) = data
    phi = interchanger(h, k, h2, k2)
    assert phi.matrix.rows == phi.matrix.cols
    assert phi.matrix.rank() == phi.matrix.rows


@given(sector_quads())
def test_translation_round_trip(data):
    (h, h2), _ = data
    for x in (h, h2, h.top, h.bottom, h.top.left_net):
        assert ccn_to_comalg(comalg_to_ccn(x)) == x
