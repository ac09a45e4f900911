import re

import pytest

import comalg.coherence as coh
from comalg.bimodule import regular_bimodule
from comalg.catalog import catalog_algebra
from comalg.ccn import identity_defect, identity_sector, make_defect, make_net
from comalg.coherence import (
    associator_modification_check,
    interchanger_hexagon_check,
    interchanger_square_check,
    naturality_check,
    pentagon_check,
    pentagonator_check,
    run_suite,
    triangle_check,
)
from comalg.linalg import Matrix

FAIL_LINE = re.compile(r"^FAIL [a-z-]+ case=\d+ seed=\d+ entry=\(\d+,\d+\) lhs=-?\d+(/\d+)? rhs=-?\d+(/\d+)?$")


def regular(name):
    return regular_bimodule(catalog_algebra(name))


def identity_sectors(name, n):
    s = identity_sector(identity_defect(make_net(catalog_algebra(name))))
    return [s] * n


@pytest.mark.parametrize("name", ["K", "Z2"])
def test_bimodule_diagrams_on_regular_chains(name):
    r = regular(name)
    assert pentagon_check(r, r, r, r).ok
    assert triangle_check(r, r).ok
    i = Matrix.identity(r.dim)
    assert naturality_check(r, r, r, i, i, i).ok


@pytest.mark.parametrize("name", ["K", "Z2"])
def test_sector_diagrams_on_identity_sectors(name):
    s = identity_sectors(name, 1)[0]
    assert interchanger_square_check(s, s).ok
    assert interchanger_hexagon_check(s, s, s, s, s, s).ok
    i = Matrix.identity(s.dim)
    assert associator_modification_check(s, s, s, i, i, i).ok


@pytest.mark.parametrize("name", ["K", "Z2"])
def test_pentagonator_identity_defects(name):
    d = identity_defect(make_net(catalog_algebra(name)))
    assert pentagonator_check(d, d, d, d).ok


def test_pentagonator_mixed_defects():
    z2, k = make_net(catalog_algebra("Z2")), make_net(catalog_algebra("K"))
    d = make_defect(z2, k, catalog_algebra("Z2"), Matrix.identity(2))
    e = make_defect(k, z2, catalog_algebra("dual"), Matrix.from_rows([[1, 1], [0, 0]]))
    f = identity_defect(z2)
    g = make_defect(z2, k, catalog_algebra("K"), Matrix.from_rows([[1, 1]]))
    assert pentagonator_check(d, e, f, g).ok


def test_broken_associator_is_caught(monkeypatch):
    real = coh.associator

    def doubled(m, n, p):
        a = real(m, n, p)
        return type(a)(a.source, a.target, a.matrix.scale(2))

    monkeypatch.setattr(coh, "associator", doubled)
    r = regular("Z2")
    rep = pentagon_check(r, r, r, r)
    assert not rep.ok
    assert FAIL_LINE.match(rep.line())
    s = identity_sectors("Z2", 1)[0]
    assert not interchanger_hexagon_check(s, s, s, s, s, s).ok


def test_broken_interchanger_is_caught(monkeypatch):
    real = coh.interchanger

    def negated(*args):
        phi = real(*args)
        return type(phi)(phi.source, phi.target, -phi.matrix)

    monkeypatch.setattr(coh, "interchanger", negated)
    s = identity_sectors("Z2", 1)[0]
    rep = interchanger_square_check(s, s)
    assert not rep.ok and rep.entry is not None


def test_broken_fused_associator_is_caught(monkeypatch):
    real = coh.associator_matrix
    monkeypatch.setattr(coh, "associator_matrix", lambda *a: real(*a).scale(3))
    d = identity_defect(make_net(catalog_algebra("Z2")))
    # a scaled associator is not even unital, so the compositor refuses it
    with pytest.raises(coh.CoherenceError):
        pentagonator_check(d, d, d, d)


def test_report_line_ok_format():
    (rep,) = run_suite(42, 1, 2, "triangle")
    assert rep.line() == f"OK triangle case=0 seed={rep.seed}"


@pytest.mark.parametrize("kind", coh.KINDS + coh.EXTRA_KINDS)
def test_small_suites_pass_and_are_deterministic(kind):
    first = [r.line() for r in run_suite(7, 4, 2, kind)]
    assert all(line.startswith("OK ") for line in first)
    assert first == [r.line() for r in run_suite(7, 4, 2, kind)]


def test_suite_arguments_validated():
    with pytest.raises(ValueError):
        run_suite(0, 0, 2)
    with pytest.raises(ValueError):
        run_suite(0, 1, 2, "nope")


def test_all_runs_every_diagram_kind():
    kinds = [r.kind for r in run_suite(1, 1, 2, "all")]
    assert kinds == list(coh.KINDS)
