"""Bimodules, bimodule maps, tensor products over an algebra, and the
canonical associator/unitor isomorphisms as explicit matrices.

A ``D``-``E`` bimodule stores one matrix per basis vector of ``D`` (a
morphism ``D -> End(M)``) and one per basis vector of ``E`` (an
antimorphism, so ``x.(e1 e2) = (x.e1).e2``).  Tensor products ``M (x)_E N``
are quotients of ``M (x) N`` with pure tensors indexed ``(x, y) -> x * N.dim + y``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .algebra import Algebra, Violation
from .linalg import (
    ONE,
    ZERO,
    DimensionMismatch,
    Matrix,
    QuotientSpace,
    SingularMatrixError,
    Subspace,
    kernel,
    kron,
    linear_combination,
    quotient,
    vstack,
)


class BimoduleError(ValueError):
    pass


class Bimodule:
    __slots__ = ("left_alg", "right_alg", "dim", "left_action", "right_action", "_hash")

    def __init__(self, left_alg: Algebra, right_alg: Algebra, dim: int,
                 left_action: Sequence[Matrix], right_action: Sequence[Matrix]):
        left_action = tuple(left_action)
        right_action = tuple(right_action)
        if len(left_action) != left_alg.dim or len(right_action) != right_alg.dim:
            raise DimensionMismatch("one action matrix per algebra basis vector is required")
        for m in left_action + right_action:
            if m.shape != (dim, dim):
                raise DimensionMismatch(f"action matrix {m.shape} on a {dim}-dimensional bimodule")
        self.left_alg = left_alg
        self.right_alg = right_alg
        self.dim = dim
        self.left_action = left_action
        self.right_action = right_action
        self._hash = None

    def __repr__(self):
        return f"Bimodule({self.left_alg.name}-{self.right_alg.name}, dim={self.dim})"

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Bimodule):
            return NotImplemented
        return (self.dim == other.dim and self.left_action == other.left_action
                and self.right_action == other.right_action
                and self.left_alg == other.left_alg and self.right_alg == other.right_alg)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.dim, self.left_action, self.right_action))
        return self._hash

    def left(self, d: Sequence[Fraction]) -> Matrix:
        """Matrix of ``m -> d.m``."""
        return linear_combination(d, self.left_action, self.dim, self.dim)

    def right(self, e: Sequence[Fraction]) -> Matrix:
        """Matrix of ``m -> m.e``."""
        return linear_combination(e, self.right_action, self.dim, self.dim)


class BimoduleMorphism:
    __slots__ = ("source", "target", "matrix")

    def __init__(self, source: Bimodule, target: Bimodule, matrix: Matrix):
        if source.left_alg != target.left_alg or source.right_alg != target.right_alg:
            raise BimoduleError("source and target are bimodules over different algebras")
        if matrix.shape != (target.dim, source.dim):
            raise DimensionMismatch(f"matrix is {matrix.shape}, expected {(target.dim, source.dim)}")
        self.source = source
        self.target = target
        self.matrix = matrix

    def __repr__(self):
        return f"BimoduleMorphism({self.source!r} -> {self.target!r})"

    def __eq__(self, other):
        if not isinstance(other, BimoduleMorphism):
            return NotImplemented
        return (self.matrix == other.matrix and self.source == other.source
                and self.target == other.target)

    def __hash__(self):
        return hash(self.matrix)

    def inverse(self) -> "BimoduleMorphism":
        try:
            inv = self.matrix.inverse()
        except SingularMatrixError:
            raise BimoduleError("bimodule map is not invertible") from None
        return BimoduleMorphism(self.target, self.source, inv)


# -- validation ---------------------------------------------------------------

def validate_bimodule(m: Bimodule) -> list[Violation]:
    """Left morphism, right antimorphism, and commuting actions."""
    report = []
    ident = Matrix.identity(m.dim)
    D, E = m.left_alg, m.right_alg
    if m.left(D.unit) != ident:
        report.append(Violation("left-unit", ()))
    if m.right(E.unit) != ident:
        report.append(Violation("right-unit", ()))
    for i in range(D.dim):
        for j in range(D.dim):
            prod = D.product(D.basis_vector(i), D.basis_vector(j))
            if m.left(prod) != m.left_action[i] @ m.left_action[j]:
                report.append(Violation("left-multiplicativity", (i, j)))
    for i in range(E.dim):
        for j in range(E.dim):
            prod = E.product(E.basis_vector(i), E.basis_vector(j))
            if m.right(prod) != m.right_action[j] @ m.right_action[i]:
                report.append(Violation("right-multiplicativity", (i, j)))
    for i, L in enumerate(m.left_action):
        for j, R in enumerate(m.right_action):
            if L @ R != R @ L:
                report.append(Violation("commutation", (i, j)))
    return report


def regular_bimodule(d: Algebra) -> Bimodule:
    return Bimodule(d, d, d.dim, d.left_mult, d.right_mult)


def free_bimodule(d: Algebra, e: Algebra) -> Bimodule:
    """``D (x) E`` with ``D`` acting on the left factor and ``E`` on the right."""
    idd, ide = Matrix.identity(d.dim), Matrix.identity(e.dim)
    return Bimodule(d, e, d.dim * e.dim,
                    [kron(L, ide) for L in d.left_mult],
                    [kron(idd, R) for R in e.right_mult])


def submodule(m: Bimodule, vectors) -> Subspace:
    """Sub-bimodule generated by ``vectors``: span of ``L(d_i) R(e_j) v``."""
    ops = [L @ R for L in m.left_action for R in m.right_action]
    return Subspace.span(m.dim, (op.apply(v) for v in vectors for op in ops))


def quotient_bimodule(m: Bimodule, sub: Subspace) -> tuple[Bimodule, QuotientSpace]:
    """``m / sub``; raises if ``sub`` is not stable under both actions."""
    q = quotient(m.dim, sub)
    left = [descend(q, L, q) for L in m.left_action]
    right = [descend(q, R, q) for R in m.right_action]
    for op in m.left_action + m.right_action:
        if not _preserves(op, sub):
            raise BimoduleError("subspace is not a sub-bimodule")
    return Bimodule(m.left_alg, m.right_alg, q.quotient_dim, left, right), q


def _preserves(op: Matrix, sub: Subspace) -> bool:
    return all(sub.contains(op.apply(v)) for v in sub.vectors)


def descend(src: QuotientSpace, op: Matrix, tgt: QuotientSpace) -> Matrix:
    """``P_tgt . op . S_src`` computed column by column."""
    cols = []
    for c in src.free_coords:
        cols.append(tgt.project_sparse(op.column_dict(c)))
    return Matrix.from_sparse_columns(tgt.quotient_dim, cols)


def descend_kron(src: QuotientSpace, a: Matrix, b: Matrix, tgt: QuotientSpace) -> Matrix:
    """``P_tgt . (a kron b) . S_src`` without forming the Kronecker product."""
    nb = b.cols
    nb_out = b.rows
    cols = []
    for c in src.free_coords:
        x, y = divmod(c, nb)
        ca, cb = a.column_dict(x), b.column_dict(y)
        raw = {i * nb_out + j: u * v for i, u in ca.items() for j, v in cb.items()}
        cols.append(tgt.project_sparse(raw))
    return Matrix.from_sparse_columns(tgt.quotient_dim, cols)


def maps_relations(src: QuotientSpace, a: Matrix, b: Matrix, tgt: QuotientSpace) -> bool:
    """Does ``a kron b`` send every relation of ``src`` into the relations of ``tgt``?"""
    nb, nb_out = b.cols, b.rows
    for rel in src.relations.vectors:
        raw: dict = {}
        for c, coeff in enumerate(rel):
            if not coeff:
                continue
            x, y = divmod(c, nb)
            for i, u in a.column_dict(x).items():
                for j, v in b.column_dict(y).items():
                    k = i * nb_out + j
                    raw[k] = raw.get(k, ZERO) + coeff * u * v
        if tgt.project_sparse(raw):
            return False
    return True


# -- tensor products ------------------------------------------------------------

def balanced_relations(dm: int, ops_m: Sequence[Matrix], dn: int, ops_n: Sequence[Matrix]) -> Subspace:
    """``span{ A_k x (x) y - x (x) B_k y }`` inside ``Q^dm (x) Q^dn`` for paired operators."""
    rels = []
    for A, B in zip(ops_m, ops_n):
        for x in range(dm):
            colx = A.column_dict(x)
            for y in range(dn):
                coly = B.column_dict(y)
                v: dict = {}
                for i, s in colx.items():
                    v[i * dn + y] = v.get(i * dn + y, ZERO) + s
                for j, s in coly.items():
                    v[x * dn + j] = v.get(x * dn + j, ZERO) - s
                v = {k: val for k, val in v.items() if val}
                if v:
                    rels.append(v)
    return Subspace.span(dm * dn, rels)


def balancing_relations(m: Bimodule, n: Bimodule) -> Subspace:
    """``span{ x.e (x) y - x (x) e.y }`` inside ``m (x) n``."""
    return balanced_relations(m.dim, m.right_action, n.dim, n.left_action)


def tensor_over(m: Bimodule, n: Bimodule) -> tuple[Bimodule, QuotientSpace]:
    """``m (x)_E n`` together with its quotient witness."""
    if m.right_alg != n.left_alg:
        raise BimoduleError(
            f"middle algebras differ: {m.right_alg.name} vs {n.left_alg.name}")
    q = quotient(m.dim * n.dim, balancing_relations(m, n))
    idm, idn = Matrix.identity(m.dim), Matrix.identity(n.dim)
    left = [descend_kron(q, L, idn, q) for L in m.left_action]
    right = [descend_kron(q, idm, R, q) for R in n.right_action]
    return Bimodule(m.left_alg, n.right_alg, q.quotient_dim, left, right), q


def identity(m: Bimodule) -> BimoduleMorphism:
    return BimoduleMorphism(m, m, Matrix.identity(m.dim))


def is_intertwiner(phi: BimoduleMorphism) -> bool:
    return intertwiner_witness(phi) is None


def intertwiner_witness(phi: BimoduleMorphism) -> Violation | None:
    s, t, f = phi.source, phi.target, phi.matrix
    for i, (Ls, Lt) in enumerate(zip(s.left_action, t.left_action)):
        if f @ Ls != Lt @ f:
            return Violation("left-intertwining", (i,))
    for j, (Rs, Rt) in enumerate(zip(s.right_action, t.right_action)):
        if f @ Rs != Rt @ f:
            return Violation("right-intertwining", (j,))
    return None


def compose_morphisms(psi: BimoduleMorphism, phi: BimoduleMorphism) -> BimoduleMorphism:
    """``psi . phi``."""
    if phi.target != psi.source:
        raise BimoduleError("composition domain mismatch")
    return BimoduleMorphism(phi.source, psi.target, psi.matrix @ phi.matrix)


def tensor_morphisms_over(phi: BimoduleMorphism, psi: BimoduleMorphism) -> BimoduleMorphism:
    """The map ``M (x)_E N -> M' (x)_E N'`` induced by ``phi (x) psi``."""
    if phi.source.right_alg != psi.source.left_alg:
        raise BimoduleError("middle algebras differ")
    src, qs = tensor_over(phi.source, psi.source)
    tgt, qt = tensor_over(phi.target, psi.target)
    if not maps_relations(qs, phi.matrix, psi.matrix, qt):
        raise BimoduleError("induced map is not well defined on the balanced tensor product")
    out = BimoduleMorphism(src, tgt, descend_kron(qs, phi.matrix, psi.matrix, qt))
    w = intertwiner_witness(out)
    if w is not None:
        raise BimoduleError(f"induced map is not an intertwiner: {w}")
    return out


def intertwiner_space(m: Bimodule, n: Bimodule) -> list[Matrix]:
    """Basis of all bimodule maps ``m -> n``.

    Unknown ``f`` flattened row-major: ``vec(f A) = (I kron A^T) vec f`` and
    ``vec(B f) = (B kron I) vec f``.
    """
    if m.left_alg != n.left_alg or m.right_alg != n.right_alg:
        raise BimoduleError("bimodules over different algebras")
    im, i_n = Matrix.identity(m.dim), Matrix.identity(n.dim)
    blocks = []
    for A, B in zip(m.left_action + m.right_action, n.left_action + n.right_action):
        blocks.append(kron(i_n, A.T) - kron(B, im))
    ker = kernel(vstack(blocks, cols=m.dim * n.dim))
    return [Matrix.unflatten(n.dim, m.dim, v) for v in ker.vectors]


# -- canonical isomorphisms -------------------------------------------------------

def associator(m: Bimodule, n: Bimodule, p: Bimodule) -> BimoduleMorphism:
    """``(m (x) n) (x) p -> m (x) (n (x) p)``, ``(x y) z -> x (y z)``.

    Both sides are quotients of the raw triple tensor by the same relations,
    so lifting through the left sections and projecting through the right
    projections is the canonical map.
    """
    mn, q1 = tensor_over(m, n)
    left, q12 = tensor_over(mn, p)
    np_, q2 = tensor_over(n, p)
    right, q23 = tensor_over(m, np_)
    return BimoduleMorphism(left, right, associator_matrix(n.dim, p.dim, q1, q12, q2, q23))


def associator_matrix(dn: int, dp: int, q1: QuotientSpace, q12: QuotientSpace,
                      q2: QuotientSpace, q23: QuotientSpace) -> Matrix:
    """``(x y) z -> x (y z)`` between quotients ``(M N / q1) P / q12`` and ``M (N P / q2) / q23``.

    Section vectors of ``q1`` are pure tensors, so the map is read off on
    raw coordinates.
    """
    cols = []
    for c in q12.free_coords:
        u, z = divmod(c, dp)
        x, y = divmod(q1.free_coords[u], dn)
        inner = q2.project_sparse({y * dp + z: ONE})
        vec = {x * q2.quotient_dim + w: v for w, v in inner.items()}
        cols.append(q23.project_sparse(vec))
    return Matrix.from_sparse_columns(q23.quotient_dim, cols)


def associator_inverse_matrix(dm: int, dn: int, q2: QuotientSpace, q23: QuotientSpace,
                              q1: QuotientSpace, q12: QuotientSpace) -> Matrix:
    """``x (y z) -> (x y) z``, read off on section vectors of ``q23`` and ``q2``."""
    dnp = q2.quotient_dim
    dp = q2.ambient_dim // dn if dn else 0
    cols = []
    for c in q23.free_coords:
        x, w = divmod(c, dnp)
        y, z = divmod(q2.free_coords[w], dp)
        inner = q1.project_sparse({x * dn + y: ONE})
        vec = {u * dp + z: v for u, v in inner.items()}
        cols.append(q12.project_sparse(vec))
    return Matrix.from_sparse_columns(q12.quotient_dim, cols)


def associator_inverse(m: Bimodule, n: Bimodule, p: Bimodule) -> BimoduleMorphism:
    """``m (x) (n (x) p) -> (m (x) n) (x) p`` built directly, not by inversion."""
    mn, q1 = tensor_over(m, n)
    left, q12 = tensor_over(mn, p)
    np_, q2 = tensor_over(n, p)
    right, q23 = tensor_over(m, np_)
    return BimoduleMorphism(right, left, associator_inverse_matrix(m.dim, n.dim, q2, q23, q1, q12))


def twisted_regular(x: Algebra, y: Algebra, beta) -> Bimodule:
    """``x`` as an ``x``-``y`` bimodule, ``y`` acting by right multiplication through ``beta: y -> x``."""
    right = [x.right_matrix(beta.matrix.column(k)) for k in range(y.dim)]
    return Bimodule(x, y, x.dim, x.left_mult, right)


def left_unitor(m: Bimodule) -> BimoduleMorphism:
    """``m -> D (x)_D m``, ``h -> 1 (x) h``."""
    reg = regular_bimodule(m.left_alg)
    tgt, q = tensor_over(reg, m)
    unit = m.left_alg.unit
    cols = []
    for h in range(m.dim):
        cols.append(q.project_sparse({i * m.dim + h: u for i, u in enumerate(unit) if u}))
    return BimoduleMorphism(m, tgt, Matrix.from_sparse_columns(q.quotient_dim, cols))


def right_unitor(m: Bimodule) -> BimoduleMorphism:
    """``m -> m (x)_E E``, ``h -> h (x) 1``."""
    e = m.right_alg
    reg = regular_bimodule(e)
    tgt, q = tensor_over(m, reg)
    cols = []
    for h in range(m.dim):
        cols.append(q.project_sparse({h * e.dim + i: u for i, u in enumerate(e.unit) if u}))
    return BimoduleMorphism(m, tgt, Matrix.from_sparse_columns(q.quotient_dim, cols))


def left_unitor_inverse(m: Bimodule) -> BimoduleMorphism:
    """``D (x)_D m -> m``, ``d (x) h -> d.h``; independent of the matrix inverse."""
    reg = regular_bimodule(m.left_alg)
    src, q = tensor_over(reg, m)
    cols = []
    for c in q.free_coords:
        i, h = divmod(c, m.dim)
        cols.append(m.left_action[i].column(h))
    return BimoduleMorphism(src, m, Matrix.from_columns(cols, m.dim))


def right_unitor_inverse(m: Bimodule) -> BimoduleMorphism:
    """``m (x)_E E -> m``, ``h (x) e -> h.e``."""
    e = m.right_alg
    reg = regular_bimodule(e)
    src, q = tensor_over(m, reg)
    cols = []
    for c in q.free_coords:
        h, i = divmod(c, e.dim)
        cols.append(m.right_action[i].column(h))
    return BimoduleMorphism(src, m, Matrix.from_columns(cols, m.dim))


def zero_morphism(m: Bimodule, n: Bimodule) -> BimoduleMorphism:
    return BimoduleMorphism(m, n, Matrix.zeros(n.dim, m.dim))


def scale_morphism(c, phi: BimoduleMorphism) -> BimoduleMorphism:
    return BimoduleMorphism(phi.source, phi.target, phi.matrix.scale(Fraction(c)))


__all__ = [
    "Bimodule", "BimoduleError", "BimoduleMorphism", "associator", "associator_inverse",
    "associator_inverse_matrix", "associator_matrix", "twisted_regular",
    "balanced_relations", "balancing_relations",
    "compose_morphisms", "descend", "descend_kron", "free_bimodule", "identity",
    "intertwiner_space", "intertwiner_witness", "is_intertwiner", "left_unitor",
    "left_unitor_inverse", "maps_relations", "quotient_bimodule", "regular_bimodule", "right_unitor",
    "right_unitor_inverse", "scale_morphism", "submodule", "tensor_morphisms_over",
    "tensor_over", "validate_bimodule", "zero_morphism",
]
