"""Locally constant nets, defects, sectors and intertwiners.

A net is a commutative algebra ``A``; a defect between ``A`` and ``B`` is an
algebra ``D`` with a homomorphism ``phi: A (x) B -> Z(D)``; a sector between
two such defects is a bimodule on which both induced ``A (x) B`` actions
agree.  Fusion of defects is the tensor product over the shared net, and the
four compositions of sectors and intertwiners are tensor products and
matrix products.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import (
    Algebra,
    AlgebraError,
    AlgebraMorphism,
    check_morphism,
    commutation_witness,
    restrict_central_image,
    tensor_algebras,
    tensor_over_central,
    validate_algebra,
)
from .bimodule import (
    Bimodule,
    BimoduleMorphism,
    associator_inverse_matrix,
    associator_matrix,
    balanced_relations,
    descend_kron,
    intertwiner_witness,
    maps_relations,
    regular_bimodule,
    tensor_morphisms_over,
    tensor_over,
    validate_bimodule,
)
from .linalg import ONE, Matrix, QuotientSpace, kron, quotient


class CCNError(ValueError):
    pass


class NonCommutativeError(CCNError):
    """Raised for a non-commutative net algebra; ``witness`` is a basis pair ``(i, j)``
    with ``e_i e_j != e_j e_i``.  Two commuting subalgebras of a net sitting on
    disjoint intervals cover the same constant algebra, so it must commute with itself."""

    def __init__(self, witness: tuple[int, int], name: str = ""):
        self.witness = witness
        super().__init__(f"net algebra {name} is not commutative: e{witness[0]} e{witness[1]} "
                         f"!= e{witness[1]} e{witness[0]}")


class NotCentralError(CCNError):
    """``witness`` is the basis index of ``D`` that fails to commute with ``phi(source_index)``."""

    def __init__(self, witness: int, source_index: int):
        self.witness = witness
        self.source_index = source_index
        super().__init__(f"phi(e{source_index}) does not commute with basis element {witness} of D")


class ActionMismatchError(CCNError):
    """``witness`` is a basis pair ``(a, b)`` where the two induced actions differ."""

    def __init__(self, witness: tuple[int, int]):
        self.witness = witness
        super().__init__(f"actions of a{witness[0]} (x) b{witness[1]} through the two defects differ")


@dataclass(frozen=True)
class Net:
    algebra: Algebra


@dataclass(frozen=True)
class Defect:
    left_net: Net
    right_net: Net
    algebra: Algebra
    phi: AlgebraMorphism

    def left_embedding(self) -> Matrix:
        """``a -> phi(a (x) 1)``."""
        b = self.right_net.algebra
        return self.phi.matrix @ kron(Matrix.identity(self.left_net.algebra.dim), _column(b.unit))

    def right_embedding(self) -> Matrix:
        """``b -> phi(1 (x) b)``."""
        a = self.left_net.algebra
        return self.phi.matrix @ kron(_column(a.unit), Matrix.identity(self.right_net.algebra.dim))


@dataclass(frozen=True)
class Sector:
    top: Defect
    bottom: Defect
    bimodule: Bimodule

    @property
    def dim(self) -> int:
        return self.bimodule.dim


@dataclass(frozen=True)
class Intertwiner:
    source: Sector
    target: Sector
    matrix: Matrix

    def as_bimodule_morphism(self) -> BimoduleMorphism:
        return BimoduleMorphism(self.source.bimodule, self.target.bimodule, self.matrix)


def _column(v) -> Matrix:
    return Matrix.from_columns([v], len(v))


# -- nets and defects -------------------------------------------------------------

def make_net(a: Algebra) -> Net:
    bad = validate_algebra(a)
    if bad:
        raise AlgebraError(f"not an algebra: {bad[0]}")
    w = commutation_witness(a)
    if w is not None:
        raise NonCommutativeError(w, a.name)
    return Net(a)


def multiplication_map(a: Algebra) -> AlgebraMorphism:
    cols = [a.product(a.basis_vector(i), a.basis_vector(j))
            for i in range(a.dim) for j in range(a.dim)]
    return AlgebraMorphism(tensor_algebras(a, a), a, Matrix.from_columns(cols, a.dim))


def identity_defect(n: Net) -> Defect:
    return Defect(n, n, n.algebra, multiplication_map(n.algebra))


def make_defect(a: Net, b: Net, d: Algebra, phi) -> Defect:
    """Validate ``phi: A (x) B -> D``; centrality is checked before multiplicativity."""
    source = tensor_algebras(a.algebra, b.algebra)
    if isinstance(phi, AlgebraMorphism):
        if phi.source != source or phi.target != d:
            raise CCNError("phi must map A (x) B into D")
        phi = AlgebraMorphism(source, d, phi.matrix)
    else:
        phi = AlgebraMorphism(source, d, phi)
    bad = validate_algebra(d)
    if bad:
        raise AlgebraError(f"defect algebra is not an algebra: {bad[0]}")
    w = restrict_central_image(d, phi)
    if w is not None:
        raise NotCentralError(w.witness[1], w.witness[0])
    bad = check_morphism(phi)
    if bad:
        raise AlgebraError(f"phi is not an algebra morphism: {bad[0]}")
    return Defect(a, b, d, phi)


@lru_cache(maxsize=4096)
def fuse_defects_with_witness(d: Defect, e: Defect) -> tuple[Defect, QuotientSpace]:
    if d.right_net != e.left_net:
        raise CCNError("defects do not share the middle net")
    b = d.right_net.algebra
    iota_d = AlgebraMorphism(b, d.algebra, d.right_embedding())
    iota_e = AlgebraMorphism(b, e.algebra, e.left_embedding())
    alg, q = tensor_over_central(d.algebra, e.algebra, b, iota_d, iota_e)
    raw = kron(d.left_embedding(), e.right_embedding())
    cols = [q.project(raw.column(k)) for k in range(raw.cols)]
    phi = Matrix.from_columns(cols, alg.dim)
    return make_defect(d.left_net, e.right_net, alg, phi), q


def fuse_defects(d: Defect, e: Defect) -> Defect:
    return fuse_defects_with_witness(d, e)[0]


# -- sectors -----------------------------------------------------------------------

def action_mismatch(top: Defect, bottom: Defect, m: Bimodule) -> tuple[int, int] | None:
    nb = top.right_net.algebra.dim
    for k in range(top.phi.source.dim):
        if m.left(top.phi.matrix.column(k)) != m.right(bottom.phi.matrix.column(k)):
            return divmod(k, nb)
    return None


def make_sector(top: Defect, bottom: Defect, m: Bimodule) -> Sector:
    if top.left_net != bottom.left_net or top.right_net != bottom.right_net:
        raise CCNError("defects connect different nets")
    if m.left_alg != top.algebra or m.right_alg != bottom.algebra:
        raise CCNError("bimodule algebras do not match the defects")
    bad = validate_bimodule(m)
    if bad:
        raise CCNError(f"not a bimodule: {bad[0]}")
    w = action_mismatch(top, bottom, m)
    if w is not None:
        raise ActionMismatchError(w)
    return Sector(top, bottom, m)


def identity_sector(d: Defect) -> Sector:
    return make_sector(d, d, regular_bimodule(d.algebra))


def vertical_fusion_with_witness(h: Sector, k: Sector) -> tuple[Sector, QuotientSpace]:
    if h.bottom != k.top:
        raise CCNError("bottom defect of the first sector is not the top of the second")
    m, q = tensor_over(h.bimodule, k.bimodule)
    return make_sector(h.top, k.bottom, m), q


def vertical_fusion(h: Sector, k: Sector) -> Sector:
    return vertical_fusion_with_witness(h, k)[0]


def middle_actions(h: Sector, k: Sector) -> tuple[list[Matrix], list[Matrix]]:
    """Actions of the shared net on ``h`` and on ``k``, each checked through both defects."""
    if h.top.right_net != k.top.left_net:
        raise CCNError("sectors do not share the middle net")
    ops_h = []
    for col, col2 in zip(_cols(h.top.right_embedding()), _cols(h.bottom.right_embedding())):
        a, b = h.bimodule.left(col), h.bimodule.right(col2)
        if a != b:
            raise CCNError("middle net acts differently through the two defects of the left sector")
        ops_h.append(a)
    ops_k = []
    for col, col2 in zip(_cols(k.top.left_embedding()), _cols(k.bottom.left_embedding())):
        a, b = k.bimodule.left(col), k.bimodule.right(col2)
        if a != b:
            raise CCNError("middle net acts differently through the two defects of the right sector")
        ops_k.append(a)
    return ops_h, ops_k


def _cols(m: Matrix) -> list[tuple]:
    return [m.column(j) for j in range(m.cols)]


def horizontal_fusion_with_witness(h: Sector, k: Sector) -> tuple[Sector, QuotientSpace]:
    ops_h, ops_k = middle_actions(h, k)
    dh, dk = h.dim, k.dim
    q = quotient(dh * dk, balanced_relations(dh, ops_h, dk, ops_k))
    top, qt = fuse_defects_with_witness(h.top, k.top)
    bottom, qb = fuse_defects_with_witness(h.bottom, k.bottom)
    left = _fused_action(q, qt, h.bimodule.left_action, k.bimodule.left_action)
    right = _fused_action(q, qb, h.bimodule.right_action, k.bimodule.right_action)
    m = Bimodule(top.algebra, bottom.algebra, q.quotient_dim, left, right)
    return make_sector(top, bottom, m), q


def _fused_action(q: QuotientSpace, qalg: QuotientSpace, ops_h, ops_k) -> list[Matrix]:
    nk = len(ops_k)
    out = []
    for c in qalg.free_coords:
        i, j = divmod(c, nk)
        if not maps_relations(q, ops_h[i], ops_k[j], q):
            raise CCNError("fused action does not descend to the balanced tensor product")
        out.append(descend_kron(q, ops_h[i], ops_k[j], q))
    return out


def horizontal_fusion(h: Sector, k: Sector) -> Sector:
    return horizontal_fusion_with_witness(h, k)[0]


# -- intertwiners ------------------------------------------------------------------

def make_intertwiner(source: Sector, target: Sector, matrix: Matrix) -> Intertwiner:
    if source.top != target.top or source.bottom != target.bottom:
        raise CCNError("sectors connect different defects")
    w = intertwiner_witness(BimoduleMorphism(source.bimodule, target.bimodule, matrix))
    if w is not None:
        raise CCNError(f"not an intertwiner: {w}")
    return Intertwiner(source, target, matrix)


def identity_intertwiner(h: Sector) -> Intertwiner:
    return Intertwiner(h, h, Matrix.identity(h.dim))


def transversal_fusion(psi: Intertwiner, phi: Intertwiner) -> Intertwiner:
    """``psi . phi``."""
    if phi.target != psi.source:
        raise CCNError("composition domain mismatch")
    return Intertwiner(phi.source, psi.target, psi.matrix @ phi.matrix)


def vertical_fusion_intertwiners(phi: Intertwiner, psi: Intertwiner) -> Intertwiner:
    f = tensor_morphisms_over(phi.as_bimodule_morphism(), psi.as_bimodule_morphism())
    src = vertical_fusion(phi.source, psi.source)
    tgt = vertical_fusion(phi.target, psi.target)
    return Intertwiner(src, tgt, f.matrix)


def horizontal_fusion_intertwiners(phi: Intertwiner, psi: Intertwiner) -> Intertwiner:
    src, qs = horizontal_fusion_with_witness(phi.source, psi.source)
    tgt, qt = horizontal_fusion_with_witness(phi.target, psi.target)
    if not maps_relations(qs, phi.matrix, psi.matrix, qt):
        raise CCNError("induced map is not well defined on the balanced tensor product")
    return make_intertwiner(src, tgt, descend_kron(qs, phi.matrix, psi.matrix, qt))


def horizontal_associator(h: Sector, h2: Sector, h3: Sector) -> tuple[Sector, Sector, Matrix]:
    """``(h h2) h3 -> h (h2 h3)`` for horizontal fusion over nets.

    The two sides sit over different (isomorphic) fused defects, so the
    sectors and the bare matrix are returned; the compositor collapse maps
    turn it into an intertwiner.
    """
    hh2, q1 = horizontal_fusion_with_witness(h, h2)
    left, q12 = horizontal_fusion_with_witness(hh2, h3)
    h2h3, q2 = horizontal_fusion_with_witness(h2, h3)
    right, q23 = horizontal_fusion_with_witness(h, h2h3)
    return left, right, associator_matrix(h2.dim, h3.dim, q1, q12, q2, q23)


def horizontal_associator_inverse(h: Sector, h2: Sector, h3: Sector) -> tuple[Sector, Sector, Matrix]:
    """``h (h2 h3) -> (h h2) h3``, built from sections rather than by inversion."""
    hh2, q1 = horizontal_fusion_with_witness(h, h2)
    left, q12 = horizontal_fusion_with_witness(hh2, h3)
    h2h3, q2 = horizontal_fusion_with_witness(h2, h3)
    right, q23 = horizontal_fusion_with_witness(h, h2h3)
    return right, left, associator_inverse_matrix(h.dim, h2.dim, q2, q23, q1, q12)


def interchanger(h: Sector, k: Sector, h2: Sector, k2: Sector) -> Intertwiner:
    """``(h k) (x)_{D'E'} (h2 k2) -> (h (x)_{D'} h2) (k (x)_{E'} k2)``,
    ``(x y) (x') (x2 y2) -> (x x2) (y y2)``."""
    hk, q_hk = horizontal_fusion_with_witness(h, k)
    h2k2, q_h2k2 = horizontal_fusion_with_witness(h2, k2)
    src, q_s = vertical_fusion_with_witness(hk, h2k2)
    hh2, q_hh = vertical_fusion_with_witness(h, h2)
    kk2, q_kk = vertical_fusion_with_witness(k, k2)
    tgt, q_t = horizontal_fusion_with_witness(hh2, kk2)
    dk, dh2, dk2 = k.dim, h2.dim, k2.dim
    nkk = kk2.dim

    def raw_column(c: int) -> dict:
        u, v = divmod(c, h2k2.dim)
        x, y = divmod(q_hk.free_coords[u], dk)
        x2, y2 = divmod(q_h2k2.free_coords[v], dk2)
        vh = q_hh.project_sparse({x * dh2 + x2: ONE})
        vk = q_kk.project_sparse({y * dk2 + y2: ONE})
        return q_t.project_sparse({i * nkk + j: a * b for i, a in vh.items() for j, b in vk.items()})

    for rel in q_s.relations.vectors:
        acc: dict = {}
        for c, coeff in enumerate(rel):
            if coeff:
                for i, val in raw_column(c).items():
                    acc[i] = acc.get(i, 0) + coeff * val
        if any(acc.values()):
            raise CCNError("interchanger is not well defined")
    cols = [raw_column(c) for c in q_s.free_coords]
    return make_intertwiner(src, tgt, Matrix.from_sparse_columns(tgt.dim, cols))


__all__ = [
    "ActionMismatchError", "CCNError", "Defect", "Intertwiner", "Net", "NonCommutativeError",
    "NotCentralError", "Sector", "action_mismatch", "fuse_defects", "fuse_defects_with_witness",
    "horizontal_associator", "horizontal_associator_inverse", "horizontal_fusion", "horizontal_fusion_intertwiners",
    "horizontal_fusion_with_witness", "identity_defect", "identity_intertwiner", "identity_sector",
    "interchanger", "make_defect", "make_intertwiner", "make_net", "make_sector",
    "middle_actions", "multiplication_map", "transversal_fusion", "vertical_fusion",
    "vertical_fusion_intertwiners", "vertical_fusion_with_witness",
]
