"""Acceptance battery: one PASS/FAIL line per criterion, exact arithmetic only.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines, or
``python3 tests/test_acceptance.py`` for the lines alone.
"""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from comalg.algebra import Subspace, center, commutant
from comalg.catalog import CATALOG, COMMUTATIVE, catalog_algebra
from comalg.ccn import NonCommutativeError, identity_defect, make_intertwiner, make_net
from comalg.coherence import KINDS, run_suite
from comalg.fusion import verify_fusion_theorem
from comalg.generators import random_defect, random_endomorphism, random_net, random_sector
from comalg.intervals import arc, black, canonical_battery, check_defect_axioms, configuration, white
from comalg.rng import SplitMix64
from comalg.translate import ccn_to_comalg, comalg_to_ccn

from oracles import naive_center, naive_product, naive_commutant, same_span
from test_cli import COMMANDS, GOLDEN, run_cli
from test_fusion import COMBOS, alg
from test_intervals import isotony_counterexample

SEED = 20240607
MAX_DIM = 3
CASES = {kind: 100 for kind in KINDS}
CASES["interchanger-hexagon"] = 25


def criterion_1():
    bad = []
    for d, b, e, iota_d, iota_e, dim in COMBOS:
        rep = verify_fusion_theorem(alg(d), alg(b), alg(e), iota_d, iota_e)
        if not (rep.ok and rep.tensor_dim == rep.fused_dim == dim):
            bad.append(f"{d}-{b}-{e}")
    names = {c[:3] for c in COMBOS}
    required = {("M2", "K", "M2"), ("Z2", "Z2", "Z2"), ("dual", "K", "T2")}
    ok = not bad and len(COMBOS) >= 12 and required <= names
    return ok, f"{len(COMBOS)} combinations" if ok else f"failed {bad}"


def criterion_2():
    bad = []
    for name in CATALOG:
        a = catalog_algebra(name)
        try:
            make_net(a)
            accepted = True
        except NonCommutativeError as exc:
            i, j = exc.witness
            accepted = False
            ei, ej = a.basis_vector(i), a.basis_vector(j)
            if naive_product(a.mul, ei, ej) == naive_product(a.mul, ej, ei):
                bad.append(f"{name} bad witness")
        if accepted != (name in COMMUTATIVE):
            bad.append(name)
    return not bad, f"{len(CATALOG)} algebras" if not bad else f"wrong on {bad}"


def _suite_lines(kind):
    return [r.line() for r in run_suite(SEED, CASES[kind], MAX_DIM, kind)]


def criterion_3():
    details = []
    ok = True
    for kind in KINDS:
        first, second = _suite_lines(kind), _suite_lines(kind)
        fails = sum(not line.startswith("OK ") for line in first)
        if fails or first != second or len(first) != CASES[kind]:
            ok = False
        details.append(f"{kind}={len(first) - fails}/{CASES[kind]}")
    return ok, " ".join(details)


def criterion_4():
    lines = [r.line() for r in run_suite(SEED, 100, MAX_DIM, "naturality")]
    fails = [line for line in lines if not line.startswith("OK ")]
    return not fails and len(lines) == 100, f"{len(lines) - len(fails)}/100 triples"


def criterion_5():
    bad = []
    checks = 0
    for name in ("K", "Z2"):
        d = identity_defect(make_net(catalog_algebra(name)))
        for n, cfg in enumerate(canonical_battery()):
            results = check_defect_axioms(d, cfg)
            checks += len(results)
            bad += [f"{name}#{n}: {r.line()}" for r in results if not r.ok]
    cfg = configuration([("I", arc(white(0), white(1))), ("K", arc(black(-1), white(1)))], [("I", "K")])
    (res,) = check_defect_axioms(isotony_counterexample(), cfg)
    caught = res.line() == "FAIL isotony I K witness=(1,-1)"
    ok = not bad and caught and len(canonical_battery()) == 12
    return ok, f"{checks} checks, counterexample: {res.line()}" if ok else f"{bad} caught={caught}"


def mixed_records(seed=SEED, count=20):
    rng = SplitMix64(seed)
    out = []
    while len(out) < count:
        a, b = random_net(rng, 2), random_net(rng, 2)
        d, e = random_defect(rng, a, b, 2), random_defect(rng, a, b, 2)
        kind = len(out) % 4
        if kind == 0:
            out.append(a)
        elif kind == 1:
            out.append(d)
        else:
            s = random_sector(rng, d, e, 3)
            if s is None:
                continue
            if kind == 2:
                out.append(s)
            else:
                out.append(make_intertwiner(s, s, random_endomorphism(rng, s.bimodule)))
    return out


def criterion_6():
    records = mixed_records()
    bad = [i for i, x in enumerate(records)
           if ccn_to_comalg(comalg_to_ccn(x)) != x
           or comalg_to_ccn(ccn_to_comalg(comalg_to_ccn(x))) != comalg_to_ccn(x)]
    kinds = sorted({type(x).__name__ for x in records})
    return not bad and len(records) == 20, f"20 records of {','.join(kinds)}" if not bad else f"mismatch at {bad}"


def _subsets(a, rng):
    yield Subspace.span(a.dim, [])
    yield a.whole()
    for i in range(a.dim):
        yield Subspace.span(a.dim, [a.basis_vector(i)])
    for _ in range(3):
        yield Subspace.span(a.dim, [tuple(rng.small_int() for _ in range(a.dim)) for _ in range(2)])


def criterion_7():
    rng = SplitMix64(SEED)
    bad = []
    count = 0
    for name in CATALOG:
        a = catalog_algebra(name)
        if not same_span(center(a).space.vectors, naive_center(a.mul), a.dim):
            bad.append(f"center {name}")
        for s in _subsets(a, rng):
            count += 1
            if not same_span(commutant(a, s).space.vectors, naive_commutant(a.mul, s.vectors), a.dim):
                bad.append(f"commutant {name} {s.vectors}")
    return not bad, f"{len(CATALOG)} centers, {count} commutants" if not bad else f"{bad}"


def criterion_8():
    bad = []
    for name, argv, code in COMMANDS:
        c1, o1, _ = run_cli(argv)
        c2, o2, _ = run_cli(argv)
        if c1 != code or c2 != code or o1 != o2 or o1 != (GOLDEN / f"{name}.txt").read_bytes():
            bad.append(name)
    return not bad, f"{len(COMMANDS)} commands" if not bad else f"differ: {bad}"


CRITERIA = [
    (1, "fusion theorem suite", criterion_1),
    (2, "commutativity gate", criterion_2),
    (3, "coherence suites", criterion_3),
    (4, "unitor/associator naturality", criterion_4),
    (5, "interval axioms battery", criterion_5),
    (6, "round trip of records", criterion_6),
    (7, "center/commutant oracle", criterion_7),
    (8, "CLI determinism", criterion_8),
]


def line(n, title, ok, detail):
    return f"{'PASS' if ok else 'FAIL'} criterion {n} {title}: {detail}"


@pytest.mark.parametrize("n,title,fn", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(n, title, fn, capsys):
    ok, detail = fn()
    with capsys.disabled():
        print("\n" + line(n, title, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = [(n, t, *fn()) for n, t, fn in CRITERIA]
    for r in results:
        print(line(*r))
    sys.exit(0 if all(r[2] for r in results) else 1)
