"""Exact checks of the coherence diagrams of bimodules, sectors and defects.

Every check builds the two composites of a diagram as explicit rational
matrices and compares them entry by entry.  Reports carry the first
differing entry so a failure can be reproduced from ``(kind, seed)`` alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .algebra import AlgebraMorphism, check_morphism
from .bimodule import (
    Bimodule,
    BimoduleMorphism,
    associator,
    associator_inverse,
    associator_inverse_matrix,
    associator_matrix,
    descend_kron,
    identity,
    left_unitor,
    left_unitor_inverse,
    maps_relations,
    regular_bimodule,
    right_unitor,
    right_unitor_inverse,
    tensor_morphisms_over,
    tensor_over,
    twisted_regular,
)
from .ccn import (
    Defect,
    Intertwiner,
    Net,
    Sector,
    fuse_defects,
    fuse_defects_with_witness,
    horizontal_associator,
    horizontal_associator_inverse,
    horizontal_fusion,
    horizontal_fusion_intertwiners,
    horizontal_fusion_with_witness,
    identity_defect,
    identity_intertwiner,
    identity_sector,
    interchanger,
    make_intertwiner,
    make_net,
    make_sector,
    vertical_fusion,
    vertical_fusion_intertwiners,
    vertical_fusion_with_witness,
)
from .catalog import catalog_algebra
from .generators import (
    MAX_TRIES,
    fuses,
    random_algebra,
    random_bimodule,
    random_defect,
    random_endomorphism,
    random_net,
    random_sector,
)
from .linalg import Matrix, QuotientSpace, format_rational
from .rng import SplitMix64, case_seeds

KINDS = (
    "pentagon",
    "triangle",
    "interchanger-square",
    "interchanger-hexagon",
    "pentagonator",
    "associator-modification",
)
# unitors and associator of bimodules: invertibility and naturality
EXTRA_KINDS = ("naturality",)

# the fused algebras of four defects grow like dim**4; keep them small
DEFECT_DIM_CAP = {"pentagonator": 2, "interchanger-hexagon": 2, "associator-modification": 2}
SECTOR_DIM_CAP = {"interchanger-hexagon": 2, "associator-modification": 2, "pentagonator": 2}

Pair = tuple[Matrix, Matrix]


class CoherenceError(RuntimeError):
    pass


@dataclass(frozen=True)
class CoherenceCase:
    kind: str
    seed: int
    parts: tuple


@dataclass(frozen=True)
class CheckReport:
    kind: str
    case: int
    seed: int
    ok: bool
    entry: tuple[int, int] | None = None
    lhs: Matrix | None = None
    rhs: Matrix | None = None

    def line(self) -> str:
        head = f"{self.kind} case={self.case} seed={self.seed}"
        if self.ok:
            return f"OK {head}"
        i, j = self.entry
        return (f"FAIL {head} entry=({i},{j}) "
                f"lhs={format_rational(self.lhs[i, j])} rhs={format_rational(self.rhs[i, j])}")


def first_difference(pairs: Sequence[Pair]) -> tuple[Matrix, Matrix, tuple[int, int]] | None:
    for lhs, rhs in pairs:
        if lhs.shape != rhs.shape:
            raise CoherenceError(f"composites have different shapes {lhs.shape} and {rhs.shape}")
        if lhs == rhs:
            continue
        for i in range(lhs.rows):
            for j in range(lhs.cols):
                if lhs[i, j] != rhs[i, j]:
                    return lhs, rhs, (i, j)
    return None


def report(kind: str, pairs: Sequence[Pair], case: int = 0, seed: int = 0) -> CheckReport:
    diff = first_difference(pairs)
    if diff is None:
        return CheckReport(kind, case, seed, True)
    lhs, rhs, entry = diff
    return CheckReport(kind, case, seed, False, entry, lhs, rhs)


def _intertwining_pairs(f: Matrix, src: Bimodule, tgt: Bimodule) -> list[Pair]:
    pairs = [(f @ a, b @ f) for a, b in zip(src.left_action, tgt.left_action)]
    pairs += [(f @ a, b @ f) for a, b in zip(src.right_action, tgt.right_action)]
    return pairs


def _invertibility_pairs(f: Matrix, g: Matrix) -> list[Pair]:
    return [(f @ g, Matrix.identity(f.rows)), (g @ f, Matrix.identity(g.rows))]


# -- bimodule diagrams ----------------------------------------------------------

def pentagon_pairs(h1: Bimodule, h2: Bimodule, h3: Bimodule, h4: Bimodule) -> list[Pair]:
    """``a . a`` against ``(id (x) a) . a . (a (x) id)`` on ``((h1 h2) h3) h4``."""
    a_12_3_4 = associator(_t(h1, h2), h3, h4)
    a_1_2_34 = associator(h1, h2, _t(h3, h4))
    lhs = a_1_2_34.matrix @ a_12_3_4.matrix
    a_123_id = tensor_morphisms_over(associator(h1, h2, h3), identity(h4))
    a_1_23_4 = associator(h1, _t(h2, h3), h4)
    id_a_234 = tensor_morphisms_over(identity(h1), associator(h2, h3, h4))
    rhs = id_a_234.matrix @ a_1_23_4.matrix @ a_123_id.matrix
    return [(lhs, rhs)]


def _t(m: Bimodule, n: Bimodule) -> Bimodule:
    return tensor_over(m, n)[0]


def pentagon_check(h1, h2, h3, h4) -> CheckReport:
    return report("pentagon", pentagon_pairs(h1, h2, h3, h4))


def triangle_pairs(h: Bimodule, h2: Bimodule) -> list[Pair]:
    """``r (x) id`` against ``(id (x) l) . a`` on ``(h (x) D') (x) h2``."""
    reg = regular_bimodule(h.right_alg)
    lhs = tensor_morphisms_over(right_unitor_inverse(h), identity(h2)).matrix
    rhs = (tensor_morphisms_over(identity(h), left_unitor_inverse(h2)).matrix
           @ associator(h, reg, h2).matrix)
    return [(lhs, rhs)]


def triangle_check(h, h2) -> CheckReport:
    return report("triangle", triangle_pairs(h, h2))


def naturality_pairs(h1: Bimodule, h2: Bimodule, h3: Bimodule,
                     f1: Matrix, f2: Matrix, f3: Matrix) -> list[Pair]:
    """Associator and unitors are invertible intertwiners, natural in each slot."""
    pairs: list[Pair] = []
    a, ainv = associator(h1, h2, h3), associator_inverse(h1, h2, h3)
    pairs += _invertibility_pairs(a.matrix, ainv.matrix)
    pairs += _intertwining_pairs(a.matrix, a.source, a.target)
    g1, g2, g3 = (BimoduleMorphism(h, h, f) for h, f in ((h1, f1), (h2, f2), (h3, f3)))
    left = tensor_morphisms_over(tensor_morphisms_over(g1, g2), g3)
    right = tensor_morphisms_over(g1, tensor_morphisms_over(g2, g3))
    pairs.append((a.matrix @ left.matrix, right.matrix @ a.matrix))
    for h, g in ((h1, g1), (h2, g2), (h3, g3)):
        for u, uinv, side in ((left_unitor(h), left_unitor_inverse(h), "l"),
                              (right_unitor(h), right_unitor_inverse(h), "r")):
            pairs += _invertibility_pairs(u.matrix, uinv.matrix)
            pairs += _intertwining_pairs(u.matrix, u.source, u.target)
            if side == "l":
                moved = tensor_morphisms_over(identity(regular_bimodule(h.left_alg)), g)
            else:
                moved = tensor_morphisms_over(g, identity(regular_bimodule(h.right_alg)))
            pairs.append((u.matrix @ g.matrix, moved.matrix @ u.matrix))
    return pairs


def naturality_check(h1, h2, h3, f1, f2, f3) -> CheckReport:
    return report("naturality", naturality_pairs(h1, h2, h3, f1, f2, f3))


# -- sector diagrams -------------------------------------------------------------

def _as_intertwiner(source: Sector, target: Sector, f: BimoduleMorphism) -> Intertwiner:
    return Intertwiner(source, target, f.matrix)


def _action_pairs(m: Bimodule, n: Bimodule) -> list[Pair]:
    return list(zip(m.left_action, n.left_action)) + list(zip(m.right_action, n.right_action))


def interchanger_square_pairs(h: Sector, k: Sector) -> list[Pair]:
    """Both unit squares of the interchanger, right and left."""
    pairs: list[Pair] = []
    hk = horizontal_fusion(h, k)

    # right: trailing identity sectors of the bottom defects
    id_d2, id_e2 = identity_sector(h.bottom), identity_sector(k.bottom)
    pairs += _action_pairs(horizontal_fusion(id_d2, id_e2).bimodule,
                           regular_bimodule(hk.bottom.algebra))
    phi = interchanger(h, k, id_d2, id_e2)
    r_h = _as_intertwiner(vertical_fusion(h, id_d2), h, right_unitor_inverse(h.bimodule))
    r_k = _as_intertwiner(vertical_fusion(k, id_e2), k, right_unitor_inverse(k.bimodule))
    rr = horizontal_fusion_intertwiners(r_h, r_k)
    pairs.append((right_unitor_inverse(hk.bimodule).matrix, rr.matrix @ phi.matrix))

    # left: leading identity sectors of the top defects
    id_d, id_e = identity_sector(h.top), identity_sector(k.top)
    pairs += _action_pairs(horizontal_fusion(id_d, id_e).bimodule,
                           regular_bimodule(hk.top.algebra))
    phi = interchanger(id_d, id_e, h, k)
    l_h = _as_intertwiner(vertical_fusion(id_d, h), h, left_unitor_inverse(h.bimodule))
    l_k = _as_intertwiner(vertical_fusion(id_e, k), k, left_unitor_inverse(k.bimodule))
    ll = horizontal_fusion_intertwiners(l_h, l_k)
    pairs.append((left_unitor_inverse(hk.bimodule).matrix, ll.matrix @ phi.matrix))
    return pairs


def interchanger_square_check(h, k) -> CheckReport:
    return report("interchanger-square", interchanger_square_pairs(h, k))


def _vertical_associator(x: Sector, y: Sector, z: Sector) -> Intertwiner:
    a = associator(x.bimodule, y.bimodule, z.bimodule)
    return Intertwiner(vertical_fusion(vertical_fusion(x, y), z),
                       vertical_fusion(x, vertical_fusion(y, z)), a.matrix)


def interchanger_hexagon_pairs(h, h2, h3, k, k2, k3) -> list[Pair]:
    """``Phi . (id (x) Phi) . a`` against ``(a (x)_B a) . Phi . (Phi (x) id)``."""
    x, x2, x3 = horizontal_fusion(h, k), horizontal_fusion(h2, k2), horizontal_fusion(h3, k3)
    a_x = _vertical_associator(x, x2, x3)
    phi_23 = interchanger(h2, k2, h3, k3)
    id_phi = vertical_fusion_intertwiners(identity_intertwiner(x), phi_23)
    phi_outer = interchanger(h, k, vertical_fusion(h2, h3), vertical_fusion(k2, k3))
    lhs = phi_outer.matrix @ id_phi.matrix @ a_x.matrix

    phi_12 = interchanger(h, k, h2, k2)
    phi_id = vertical_fusion_intertwiners(phi_12, identity_intertwiner(x3))
    phi_inner = interchanger(vertical_fusion(h, h2), vertical_fusion(k, k2), h3, k3)
    aa = horizontal_fusion_intertwiners(_vertical_associator(h, h2, h3),
                                        _vertical_associator(k, k2, k3))
    rhs = aa.matrix @ phi_inner.matrix @ phi_id.matrix
    return [(lhs, rhs)]


def interchanger_hexagon_check(h, h2, h3, k, k2, k3) -> CheckReport:
    return report("interchanger-hexagon", interchanger_hexagon_pairs(h, h2, h3, k, k2, k3))


# -- compositors ----------------------------------------------------------------------

@dataclass(frozen=True)
class Compositor:
    """``a_{x,y,z}``: ``(xy)z`` as a bimodule over ``(xy)z`` and ``x(yz)``.

    ``alpha: (xy)z -> x(yz)`` and ``beta`` its inverse, both read off on
    sections; the right action goes through ``beta`` and the partner
    ``a^■`` is ``x(yz)`` with the right action through ``alpha``.
    """

    left: Defect
    right: Defect
    alpha: Matrix
    beta: Matrix
    sector: Sector
    partner: Sector


def compositor(x: Defect, y: Defect, z: Defect) -> Compositor:
    xy, q1 = fuse_defects_with_witness(x, y)
    left, q12 = fuse_defects_with_witness(xy, z)
    yz, q2 = fuse_defects_with_witness(y, z)
    right, q23 = fuse_defects_with_witness(x, yz)
    alpha = associator_matrix(y.algebra.dim, z.algebra.dim, q1, q12, q2, q23)
    beta = associator_inverse_matrix(x.algebra.dim, y.algebra.dim, q2, q23, q1, q12)
    for m, s, t in ((alpha, left, right), (beta, right, left)):
        bad = check_morphism(AlgebraMorphism(s.algebra, t.algebra, m))
        if bad:
            raise CoherenceError(f"associator of fused algebras is not a morphism: {bad[0]}")
    b_mor = AlgebraMorphism(right.algebra, left.algebra, beta)
    a_mor = AlgebraMorphism(left.algebra, right.algebra, alpha)
    sector = make_sector(left, right, twisted_regular(left.algebra, right.algebra, b_mor))
    partner = make_sector(right, left, twisted_regular(right.algebra, left.algebra, a_mor))
    return Compositor(left, right, alpha, beta, sector, partner)


def _descend_pair(x: Defect, y: Defect, x2: Defect, y2: Defect, a: Matrix, b: Matrix) -> Matrix:
    """The map ``x (x) y -> x2 (x) y2`` of fused algebras induced by ``a (x) b``."""
    _, qs = fuse_defects_with_witness(x, y)
    _, qt = fuse_defects_with_witness(x2, y2)
    if not maps_relations(qs, a, b, qt):
        raise CoherenceError("induced map of fused algebras is not well defined")
    return descend_kron(qs, a, b, qt)


def _unit_vector(s: Sector) -> tuple:
    return s.bimodule.left_alg.unit


def _vertical_with_unit(s: Sector, us, t: Sector, ut) -> tuple[Sector, tuple]:
    st, q = vertical_fusion_with_witness(s, t)
    return st, q.project(tuple(a * b for a in us for b in ut))


def _horizontal_with_unit(s: Sector, us, t: Sector, ut) -> tuple[Sector, tuple]:
    st, q = horizontal_fusion_with_witness(s, t)
    return st, q.project(tuple(a * b for a in us for b in ut))


def _cyclic_matrix(s: Sector, u) -> Matrix:
    return Matrix.from_columns([L.apply(u) for L in s.bimodule.left_action], s.dim)


def pentagonator_pairs(d: Defect, e: Defect, f: Defect, g: Defect) -> list[Pair]:
    """The pentagon of compositors.

    On algebras: ``alpha_{D,E,FG} alpha_{DE,F,G}`` against
    ``(id (x) alpha_{E,F,G}) alpha_{D,EF,G} (alpha_{D,E,F} (x) id)``.
    On sectors: both composites of compositors are free of rank one over
    ``((DE)F)G`` on the fused units; the pentagonator is the module map
    matching the units, and it must intertwine the right actions too.
    """
    pairs: list[Pair] = []
    de, ef, fg = fuse_defects(d, e), fuse_defects(e, f), fuse_defects(f, g)
    c_de_f_g, c_d_e_fg = compositor(de, f, g), compositor(d, e, fg)
    c_def, c_d_ef_g, c_efg = compositor(d, e, f), compositor(d, ef, g), compositor(e, f, g)
    for c in (c_de_f_g, c_d_e_fg, c_def, c_d_ef_g, c_efg):
        pairs += _invertibility_pairs(c.alpha, c.beta)
    lhs = c_d_e_fg.alpha @ c_de_f_g.alpha
    a_id = _descend_pair(c_def.left, g, c_def.right, g, c_def.alpha, Matrix.identity(g.algebra.dim))
    id_a = _descend_pair(d, c_efg.left, d, c_efg.right, Matrix.identity(d.algebra.dim), c_efg.alpha)
    pairs.append((lhs, id_a @ c_d_ef_g.alpha @ a_id))

    x, ux = _vertical_with_unit(c_de_f_g.sector, _unit_vector(c_de_f_g.sector),
                                c_d_e_fg.sector, _unit_vector(c_d_e_fg.sector))
    id_g, id_d = identity_sector(g), identity_sector(d)
    s1, u1 = _horizontal_with_unit(c_def.sector, _unit_vector(c_def.sector), id_g, g.algebra.unit)
    s3, u3 = _horizontal_with_unit(id_d, d.algebra.unit, c_efg.sector, _unit_vector(c_efg.sector))
    s12, u12 = _vertical_with_unit(s1, u1, c_d_ef_g.sector, _unit_vector(c_d_ef_g.sector))
    y, uy = _vertical_with_unit(s12, u12, s3, u3)
    gx, gy = _cyclic_matrix(x, ux), _cyclic_matrix(y, uy)
    if gy.rows != gy.cols or gy.rank() != gy.rows or gx.rank() != gx.rows:
        raise CoherenceError("composite compositor is not free of rank one on its unit")
    pi = gx @ gy.inverse()
    pairs += _intertwining_pairs(pi, y.bimodule, x.bimodule)
    return pairs


def pentagonator_check(d, e, f, g) -> CheckReport:
    return report("pentagonator", pentagonator_pairs(d, e, f, g))


def _collapse_right(s: Sector, c: Sector, q: QuotientSpace) -> Matrix:
    """``s (x) c -> s``, ``h (x) x -> h.x`` for ``c`` twisted regular on the left."""
    cols = []
    for col in q.free_coords:
        h, x = divmod(col, c.dim)
        cols.append(s.bimodule.right_action[x].column(h))
    return Matrix.from_columns(cols, s.dim)


def _collapse_left(c: Sector, s: Sector, q: QuotientSpace, twist: Matrix) -> Matrix:
    """``c (x) s -> s``, ``x (x) h -> twist(x).h``."""
    cols = []
    for col in q.free_coords:
        x, h = divmod(col, s.dim)
        cols.append(s.bimodule.left(twist.column(x)).column(h))
    return Matrix.from_columns(cols, s.dim)


def _modification(h_l: Sector, h_r: Sector, top: Sector, bottom: Sector,
                  core: Matrix, twist: Matrix) -> tuple[Sector, Sector, Matrix]:
    """``h_l (x) bottom -> top (x) h_r`` from the core map ``h_l -> h_r``."""
    src, qs = vertical_fusion_with_witness(h_l, bottom)
    tgt, qt = vertical_fusion_with_witness(top, h_r)
    c_l = _collapse_right(h_l, bottom, qs)
    c_r = _collapse_left(top, h_r, qt, twist)
    if c_r.rows != c_r.cols or c_r.rank() != c_r.rows:
        raise CoherenceError("compositor collapse is not invertible")
    return src, tgt, c_r.inverse() @ core @ c_l


def associator_modification_pairs(h: Sector, h2: Sector, h3: Sector,
                                  f: Matrix, f2: Matrix, f3: Matrix) -> list[Pair]:
    """``a_{H,H',H''}`` and its partner: intertwiners, mutually inverse cores, natural."""
    pairs: list[Pair] = []
    top = compositor(h.top, h2.top, h3.top)
    bottom = compositor(h.bottom, h2.bottom, h3.bottom)
    h_l, h_r, core = horizontal_associator(h, h2, h3)
    _, _, core_inv = horizontal_associator_inverse(h, h2, h3)
    pairs += _invertibility_pairs(core, core_inv)

    src, tgt, a_h = _modification(h_l, h_r, top.sector, bottom.sector, core, top.alpha)
    pairs += _intertwining_pairs(a_h, src.bimodule, tgt.bimodule)
    src2, tgt2, a_h2 = _modification(h_r, h_l, top.partner, bottom.partner, core_inv, top.beta)
    pairs += _intertwining_pairs(a_h2, src2.bimodule, tgt2.bimodule)

    fs = [make_intertwiner(s, s, m) for s, m in ((h, f), (h2, f2), (h3, f3))]
    f_l = horizontal_fusion_intertwiners(horizontal_fusion_intertwiners(fs[0], fs[1]), fs[2])
    f_r = horizontal_fusion_intertwiners(fs[0], horizontal_fusion_intertwiners(fs[1], fs[2]))
    n_l = vertical_fusion_intertwiners(f_l, identity_intertwiner(bottom.sector))
    n_r = vertical_fusion_intertwiners(identity_intertwiner(top.sector), f_r)
    pairs.append((a_h @ n_l.matrix, n_r.matrix @ a_h))
    n_l2 = vertical_fusion_intertwiners(f_r, identity_intertwiner(bottom.partner))
    n_r2 = vertical_fusion_intertwiners(identity_intertwiner(top.partner), f_l)
    pairs.append((a_h2 @ n_l2.matrix, n_r2.matrix @ a_h2))
    return pairs


def associator_modification_check(h, h2, h3, f, f2, f3) -> CheckReport:
    return report("associator-modification", associator_modification_pairs(h, h2, h3, f, f2, f3))


# -- random cases -------------------------------------------------------------------

def _k_net() -> Net:
    return make_net(catalog_algebra("K"))


def _bimodule_chain(rng: SplitMix64, n: int, max_dim: int) -> tuple[Bimodule, ...]:
    for _ in range(MAX_TRIES):
        algs = [random_algebra(rng, max_dim) for _ in range(n + 1)]
        ms = [random_bimodule(rng, algs[i], algs[i + 1], max_dim) for i in range(n)]
        if all(m is not None for m in ms):
            return tuple(ms)
    k = catalog_algebra("K")
    return tuple(regular_bimodule(k) for _ in range(n))


def _defect_column(rng, a: Net, b: Net, n: int, max_dim: int) -> list[Defect]:
    return [random_defect(rng, a, b, max_dim) for _ in range(n)]


def _sector_chain(rng, defects: Sequence[Defect], max_dim: int) -> list[Sector] | None:
    out = []
    for top, bottom in zip(defects, defects[1:]):
        s = random_sector(rng, top, bottom, max_dim)
        if s is None:
            return None
        out.append(s)
    return out


def _identity_chain(n: int) -> list[Sector]:
    d = identity_defect(_k_net())
    return [identity_sector(d) for _ in range(n)]


def _horizontal_chains(rng, max_dim: int, length: int, nets: int):
    """``nets - 1`` columns of ``length`` chained sectors over a row of nets."""
    ddim = max_dim
    for _ in range(MAX_TRIES):
        row = [random_net(rng, min(ddim, 2)) for _ in range(nets)]
        cols = [_defect_column(rng, row[i], row[i + 1], length + 1, ddim) for i in range(nets - 1)]
        if not all(fuses([c[r] for c in cols]) for r in range(length + 1)):
            continue
        chains = [_sector_chain(rng, col, max_dim) for col in cols]
        if all(c is not None for c in chains):
            return chains
    return [_identity_chain(length) for _ in range(nets - 1)]


def generate_case(kind: str, seed: int, max_dim: int) -> CoherenceCase:
    rng = SplitMix64(seed)
    cap = min(max_dim, SECTOR_DIM_CAP.get(kind, max_dim))
    if kind == "pentagon":
        parts = _bimodule_chain(rng, 4, max_dim)
    elif kind == "triangle":
        parts = _bimodule_chain(rng, 2, max_dim)
    elif kind == "naturality":
        ms = _bimodule_chain(rng, 3, max_dim)
        parts = ms + tuple(random_endomorphism(rng, m) for m in ms)
    elif kind == "interchanger-square":
        (h,), (k,) = _horizontal_chains(rng, cap, 1, 3)
        parts = (h, k)
    elif kind == "interchanger-hexagon":
        hs, ks = _horizontal_chains(rng, cap, 3, 3)
        parts = (*hs, *ks)
    elif kind == "associator-modification":
        cols = _horizontal_chains(rng, cap, 1, 4)
        hs = tuple(c[0] for c in cols)
        parts = hs + tuple(random_endomorphism(rng, s.bimodule) for s in hs)
    elif kind == "pentagonator":
        dcap = min(max_dim, DEFECT_DIM_CAP[kind])
        parts = None
        for _ in range(MAX_TRIES):
            row = [random_net(rng, dcap) for _ in range(5)]
            ds = [random_defect(rng, row[i], row[i + 1], dcap) for i in range(4)]
            if fuses(ds):
                parts = tuple(ds)
                break
        if parts is None:
            parts = tuple(identity_defect(_k_net()) for _ in range(4))
    else:
        raise ValueError(f"unknown coherence kind {kind!r}")
    return CoherenceCase(kind, seed, parts)


CHECKS: dict[str, Callable[..., list[Pair]]] = {
    "pentagon": pentagon_pairs,
    "triangle": triangle_pairs,
    "interchanger-square": interchanger_square_pairs,
    "interchanger-hexagon": interchanger_hexagon_pairs,
    "pentagonator": pentagonator_pairs,
    "associator-modification": associator_modification_pairs,
    "naturality": naturality_pairs,
}


def check_case(case: CoherenceCase, index: int = 0) -> CheckReport:
    return report(case.kind, CHECKS[case.kind](*case.parts), index, case.seed)


def run_suite(seed: int, cases: int, max_dim: int, kind: str = "all") -> list[CheckReport]:
    if cases < 1:
        raise ValueError("a suite needs at least one case")
    if max_dim < 1:
        raise ValueError("max_dim must be positive")
    kinds = KINDS if kind == "all" else (kind,)
    for k in kinds:
        if k not in CHECKS:
            raise ValueError(f"unknown coherence kind {k!r}")
    out = []
    for k in kinds:
        for n, s in enumerate(case_seeds(seed, cases)):
            out.append(check_case(generate_case(k, s, max_dim), n))
    return out


__all__ = [
    "CHECKS", "CheckReport", "CoherenceCase", "CoherenceError", "Compositor", "EXTRA_KINDS",
    "KINDS", "associator_modification_check", "check_case", "compositor", "first_difference",
    "generate_case", "interchanger_hexagon_check", "interchanger_square_check",
    "naturality_check", "pentagon_check", "pentagonator_check", "report", "run_suite",
    "triangle_check",
]
