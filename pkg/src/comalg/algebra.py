"""Finite-dimensional unital associative algebras given by structure constants.

An algebra of dimension ``n`` has basis ``e_0 .. e_{n-1}`` and products
``e_i e_j = sum_k mul[i][j][k] e_k``.  Elements are tuples of Fractions.
Equality of algebras is equality of (dim, structure constants, unit); the
name is only a label.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Sequence

from .linalg import (
    ZERO,
    DimensionMismatch,
    Matrix,
    QuotientSpace,
    SingularMatrixError,
    Subspace,
    image,
    kernel,
    kron,
    kron_vectors,
    linear_combination,
    quotient,
    unit_vector,
    vector,
    vstack,
)


class AlgebraError(ValueError):
    pass


class Violation(NamedTuple):
    """One failed axiom: a short kind tag and the basis indices witnessing it."""

    kind: str
    witness: tuple

    def __str__(self):
        return f"{self.kind} {self.witness}" if self.witness else self.kind


class Algebra:
    __slots__ = ("name", "dim", "_mul", "unit", "_left", "_right", "_hash", "__weakref__")

    def __init__(self, dim: int, mul, unit, name: str = "A", *, allow_zero: bool = False):
        if dim == 0 and not allow_zero:
            raise AlgebraError("zero-dimensional algebras are only produced by endomorphism_algebra(0)")
        if dim < 0:
            raise AlgebraError("negative dimension")
        if mul is not None:
            mul = tuple(tuple(vector(mul[i][j]) for j in range(dim)) for i in range(dim))
            if len(mul) != dim or any(len(v) != dim for row in mul for v in row):
                raise DimensionMismatch("structure constants have the wrong shape")
        unit = vector(unit)
        if len(unit) != dim:
            raise DimensionMismatch("unit has the wrong length")
        self.name = name
        self.dim = dim
        self._mul = mul
        self.unit = unit
        self._left = None
        self._right = None
        self._hash = None

    @property
    def mul(self):
        return self._mul

    def __repr__(self):
        return f"Algebra({self.name!r}, dim={self.dim})"

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Algebra):
            return NotImplemented
        return self.dim == other.dim and self.unit == other.unit and self.mul == other.mul

    def __hash__(self):
        if self._hash is None:
            # structure constants stay out of the hash: End(n) builds them lazily
            self._hash = hash((self.dim, self.unit))
        return self._hash

    def renamed(self, name: str) -> "Algebra":
        return Algebra(self.dim, self.mul, self.unit, name, allow_zero=True)

    def basis_vector(self, i: int) -> tuple[Fraction, ...]:
        return unit_vector(self.dim, i)

    def product(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> tuple[Fraction, ...]:
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch(f"elements must have length {self.dim}")
        acc = [ZERO] * self.dim
        mul = self.mul
        ys = [(j, b) for j, b in enumerate(y) if b]
        for i, a in enumerate(x):
            if not a:
                continue
            row = mul[i]
            for j, b in ys:
                ab = a * b
                for k, c in enumerate(row[j]):
                    if c:
                        acc[k] += ab * c
        return tuple(acc)

    @property
    def left_mult(self) -> tuple[Matrix, ...]:
        """Matrices of ``z -> e_i z`` for each basis vector."""
        if self._left is None:
            self._left = tuple(
                Matrix.from_columns([self.product(self.basis_vector(i), self.basis_vector(j))
                                     for j in range(self.dim)], self.dim)
                for i in range(self.dim))
        return self._left

    @property
    def right_mult(self) -> tuple[Matrix, ...]:
        """Matrices of ``z -> z e_i`` for each basis vector."""
        if self._right is None:
            self._right = tuple(
                Matrix.from_columns([self.product(self.basis_vector(j), self.basis_vector(i))
                                     for j in range(self.dim)], self.dim)
                for i in range(self.dim))
        return self._right

    def left_matrix(self, x: Sequence[Fraction]) -> Matrix:
        return _combine(x, self.left_mult, self.dim)

    def right_matrix(self, x: Sequence[Fraction]) -> Matrix:
        return _combine(x, self.right_mult, self.dim)

    def whole(self) -> Subspace:
        return Subspace.whole(self.dim)


def _combine(coeffs, mats, n) -> Matrix:
    return linear_combination(coeffs, mats, n, n)


class MatrixAlgebra(Algebra):
    """``End(K^n)`` with basis the matrix units ``E_pq`` in row-major order.

    Products go through matrix multiplication; the n^6 structure-constant
    tensor is only built if someone asks for it.
    """

    __slots__ = ("n",)

    def __init__(self, n: int, name: str | None = None):
        self.n = n
        super().__init__(n * n, None, Matrix.identity(n).flatten(), name or f"End({n})", allow_zero=True)

    @property
    def mul(self):
        if self._mul is None:
            d = self.dim
            self._mul = tuple(tuple(self.product(unit_vector(d, i), unit_vector(d, j)) for j in range(d))
                              for i in range(d))
        return self._mul

    def to_matrix(self, x: Sequence[Fraction]) -> Matrix:
        return Matrix.unflatten(self.n, self.n, x)

    def from_matrix(self, m: Matrix) -> tuple[Fraction, ...]:
        if m.shape != (self.n, self.n):
            raise DimensionMismatch(f"expected a {self.n}x{self.n} matrix")
        return m.flatten()

    def product(self, x, y):
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch(f"elements must have length {self.dim}")
        return (self.to_matrix(x) @ self.to_matrix(y)).flatten()

    def __eq__(self, other):
        if isinstance(other, MatrixAlgebra):
            return self.n == other.n
        return super().__eq__(other)

    __hash__ = Algebra.__hash__


class AlgebraMorphism:
    """Linear map ``source -> target``; ``matrix`` is target.dim x source.dim."""

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source: Algebra, target: Algebra, matrix: Matrix):
        if matrix.shape != (target.dim, source.dim):
            raise DimensionMismatch(
                f"morphism matrix is {matrix.shape}, expected {(target.dim, source.dim)}")
        self.source = source
        self.target = target
        self.matrix = matrix

    def __call__(self, x) -> tuple[Fraction, ...]:
        return self.matrix.apply(x)

    def __eq__(self, other):
        if not isinstance(other, AlgebraMorphism):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.matrix == other.matrix)

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"AlgebraMorphism({self.source.name} -> {self.target.name})"

    def image(self) -> Subspace:
        return image(self.matrix)

    def is_injective(self) -> bool:
        return self.matrix.rank() == self.source.dim


class Subalgebra:
    __slots__ = ("parent", "space")

    def __init__(self, parent: Algebra, space: Subspace):
        if space.ambient_dim != parent.dim:
            raise DimensionMismatch("subspace does not live in the parent algebra")
        self.parent = parent
        self.space = space

    @property
    def dim(self) -> int:
        return self.space.dim

    def __eq__(self, other):
        if not isinstance(other, Subalgebra):
            return NotImplemented
        return self.parent == other.parent and self.space == other.space

    def __hash__(self):
        return hash(self.space)

    def __repr__(self):
        return f"Subalgebra(of {self.parent.name}, dim={self.dim})"

    def is_closed(self) -> bool:
        a = self.parent
        if not self.space.contains(a.unit):
            return False
        vs = self.space.vectors
        return all(self.space.contains(a.product(x, y)) for x in vs for y in vs)


# -- operations ---------------------------------------------------------------

def multiply(a: Algebra, x, y) -> tuple[Fraction, ...]:
    return a.product(x, y)


def validate_algebra(a: Algebra) -> list[Violation]:
    """Associativity triples and unit-law failures; empty iff ``a`` is valid."""
    report = []
    n = a.dim
    L = a.left_mult
    for i in range(n):
        for j in range(n):
            eij = a.product(a.basis_vector(i), a.basis_vector(j))
            lhs = a.left_matrix(eij)
            rhs = L[i] @ L[j]
            if lhs != rhs:
                for k in range(n):
                    if lhs.column(k) != rhs.column(k):
                        report.append(Violation("associativity", (i, j, k)))
                        break
    for i in range(n):
        x = a.basis_vector(i)
        if a.product(a.unit, x) != x:
            report.append(Violation("left-unit", (i,)))
        if a.product(x, a.unit) != x:
            report.append(Violation("right-unit", (i,)))
    return report


def opposite(a: Algebra) -> Algebra:
    n = a.dim
    mul = tuple(tuple(a.mul[j][i] for j in range(n)) for i in range(n))
    return Algebra(n, mul, a.unit, f"{a.name}^op", allow_zero=True)


def is_commutative(a: Algebra) -> bool:
    return commutation_witness(a) is None


def commutation_witness(a: Algebra) -> tuple[int, int] | None:
    """First basis pair ``(i, j)`` with ``e_i e_j != e_j e_i``."""
    for i in range(a.dim):
        for j in range(i + 1, a.dim):
            if a.mul[i][j] != a.mul[j][i]:
                return (i, j)
    return None


def _commutator_matrix(a: Algebra, xs) -> Matrix:
    blocks = [a.left_matrix(x) - a.right_matrix(x) for x in xs]
    return vstack(blocks, cols=a.dim)


def center(a: Algebra) -> Subalgebra:
    """``Z(a)``: kernel of the stacked maps ``x -> e_i x - x e_i``."""
    blocks = [L - R for L, R in zip(a.left_mult, a.right_mult)]
    return Subalgebra(a, kernel(vstack(blocks, cols=a.dim)))


def commutant(a: Algebra, s: Subspace) -> Subalgebra:
    if s.ambient_dim != a.dim:
        raise DimensionMismatch("subspace does not live in the algebra")
    return Subalgebra(a, kernel(_commutator_matrix(a, s.vectors)))


def generated_subalgebra(a: Algebra, parts: Sequence[Subspace]) -> Subalgebra:
    """Smallest unital subalgebra containing every part.

    Grows ``V <- V + V.S`` (S = all generators) until the dimension stops
    changing; words in the generators span the result.
    """
    for p in parts:
        if p.ambient_dim != a.dim:
            raise DimensionMismatch("part does not live in the algebra")
    gens = [v for p in parts for v in p.vectors]
    if a.dim == 0:
        return Subalgebra(a, Subspace.zero(0))
    space = Subspace.span(a.dim, [a.unit] + gens)
    frontier = list(space.vectors)
    ech = space._echelon()
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                p = a.product(x, g)
                r = ech.reduce(dict((k, v) for k, v in enumerate(p) if v))
                if r:
                    ech.insert(r)
                    new.append(p)
        frontier = new
    return Subalgebra(a, Subspace._from_echelon(a.dim, ech))


def tensor_algebras(a: Algebra, b: Algebra) -> Algebra:
    """``a (x) b`` with basis ``(i, j) -> i * b.dim + j``."""
    na, nb = a.dim, b.dim
    n = na * nb
    mul = []
    for i in range(na):
        for j in range(nb):
            row = []
            for k in range(na):
                for l in range(nb):
                    row.append(kron_vectors(a.mul[i][k], b.mul[j][l]))
            mul.append(tuple(row))
    return Algebra(n, mul, kron_vectors(a.unit, b.unit), f"{a.name}*{b.name}", allow_zero=True)


def identity_morphism(a: Algebra) -> AlgebraMorphism:
    return AlgebraMorphism(a, a, Matrix.identity(a.dim))


def field() -> Algebra:
    return Algebra(1, [[[1]]], [1], "K")


def unit_morphism(a: Algebra) -> AlgebraMorphism:
    """``K -> a``, ``1 -> unit``."""
    return AlgebraMorphism(field(), a, Matrix.from_columns([a.unit], a.dim))


def check_morphism(m: AlgebraMorphism) -> list[Violation]:
    report = []
    src, tgt = m.source, m.target
    if m(src.unit) != tgt.unit:
        report.append(Violation("unit", ()))
    images = [m.matrix.column(i) for i in range(src.dim)]
    for i in range(src.dim):
        for j in range(src.dim):
            lhs = m(src.product(src.basis_vector(i), src.basis_vector(j)))
            rhs = tgt.product(images[i], images[j])
            if lhs != rhs:
                report.append(Violation("multiplicativity", (i, j)))
    return report


def compose_morphisms(g: AlgebraMorphism, f: AlgebraMorphism) -> AlgebraMorphism:
    """``g . f``; raises if ``f.target != g.source`` or the result is not a morphism."""
    if f.target != g.source:
        raise AlgebraError("composition domain mismatch")
    h = AlgebraMorphism(f.source, g.target, g.matrix @ f.matrix)
    bad = check_morphism(h)
    if bad:
        raise AlgebraError(f"composite is not an algebra morphism: {bad[0]}")
    return h


def restrict_central_image(a: Algebra, m: AlgebraMorphism) -> Violation | None:
    """``None`` if the image of ``m`` lies in the center of ``a``, else a witness.

    The witness ``(i, k)`` names a source basis vector ``i`` whose image fails
    to commute with the target basis vector ``k``.
    """
    for i in range(m.source.dim):
        x = m.matrix.column(i)
        for k in range(a.dim):
            e = a.basis_vector(k)
            if a.product(x, e) != a.product(e, x):
                return Violation("not-central", (i, k))
    return None


def tensor_over_central(a: Algebra, b: Algebra, c: Algebra,
                        ja: AlgebraMorphism, jb: AlgebraMorphism) -> tuple[Algebra, QuotientSpace]:
    """``a (x)_c b`` for central structure maps ``ja: c -> a`` and ``jb: c -> b``.

    Quotient of ``a (x) b`` by ``(x ja(c_i)) (x) y - x (x) (jb(c_i) y)``; the
    relations form a two-sided ideal because the images are central.
    """
    if not is_commutative(c):
        raise AlgebraError("base algebra must be commutative")
    if ja.source != c or jb.source != c or ja.target != a or jb.target != b:
        raise AlgebraError("structure maps do not match the algebras")
    for alg, j, side in ((a, ja, "left"), (b, jb, "right")):
        w = restrict_central_image(alg, j)
        if w is not None:
            raise AlgebraError(f"{side} structure map is not central: witness {w.witness}")
    q = balanced_quotient(a, b, c, ja.matrix, jb.matrix)
    if q.quotient_dim == 0:
        raise AlgebraError("balanced tensor product is the zero algebra")
    t = tensor_algebras(a, b)
    basis = [q.lift(unit_vector(q.quotient_dim, s)) for s in range(q.quotient_dim)]
    mul = [[q.project(t.product(x, y)) for y in basis] for x in basis]
    unit = q.project(t.unit)
    name = f"{a.name}*{b.name}" if c.dim == 1 else f"{a.name}*[{c.name}]{b.name}"
    return Algebra(q.quotient_dim, mul, unit, name), q


def balanced_quotient(a: Algebra, b: Algebra, c: Algebra, ja: Matrix, jb: Matrix) -> QuotientSpace:
    """``a (x) b`` modulo ``(x ja(c_k)) (x) y - x (x) (jb(c_k) y)``."""
    na, nb = a.dim, b.dim
    rels = []
    for k in range(c.dim):
        ra = a.right_matrix(ja.column(k))
        lb = b.left_matrix(jb.column(k))
        for x in range(na):
            colx = ra.column_dict(x)
            for y in range(nb):
                coly = lb.column_dict(y)
                v: dict = {}
                for i, s in colx.items():
                    v[i * nb + y] = v.get(i * nb + y, ZERO) + s
                for j, s in coly.items():
                    v[x * nb + j] = v.get(x * nb + j, ZERO) - s
                v = {key: val for key, val in v.items() if val}
                if v:
                    rels.append(v)
    return quotient(na * nb, Subspace.span(na * nb, rels))


def endomorphism_algebra(n: int) -> MatrixAlgebra:
    if n < 0:
        raise AlgebraError("negative size")
    return MatrixAlgebra(n)


def conjugate_endomorphisms(f: Matrix) -> AlgebraMorphism:
    """``phi -> f phi f^-1`` as a morphism ``End(n) -> End(n)``.

    On row-major flattenings ``vec(F X G) = (F kron G^T) vec(X)``.
    """
    if f.rows != f.cols:
        raise AlgebraError("conjugation needs a square matrix")
    try:
        finv = f.inverse()
    except SingularMatrixError:
        raise AlgebraError("conjugating matrix is singular") from None
    end = endomorphism_algebra(f.rows)
    return AlgebraMorphism(end, end, kron(f, finv.T))


def is_algebra_isomorphism(m: AlgebraMorphism) -> bool:
    return (m.source.dim == m.target.dim and m.is_injective() and not check_morphism(m))


__all__ = [
    "Algebra", "AlgebraError", "AlgebraMorphism", "MatrixAlgebra", "Subalgebra", "Violation",
    "center", "check_morphism", "commutant", "commutation_witness", "compose_morphisms",
    "conjugate_endomorphisms", "endomorphism_algebra", "field", "generated_subalgebra",
    "identity_morphism", "is_algebra_isomorphism", "is_commutative", "multiply", "opposite",
    "tensor_algebras", "tensor_over_central", "unit_morphism", "validate_algebra",
    "balanced_quotient", "restrict_central_image",
]
