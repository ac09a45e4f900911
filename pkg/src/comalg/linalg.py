"""Exact rational linear algebra.

Everything here works over :class:`fractions.Fraction`.  Matrices are dense
and immutable; row reduction is done internally on sparse ``{column: value}``
rows because the relation spaces built for tensor products are very sparse.

Subspaces are always stored through the canonical reduced row-echelon form of
a basis, so two subspaces are equal exactly when their bases are equal.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

Q = Fraction
ZERO = Fraction(0)
ONE = Fraction(1)

_RATIONAL_RE = re.compile(r"-?[0-9]+(?:/[0-9]+)?\Z")


class LinalgError(ValueError):
    pass


class DimensionMismatch(LinalgError):
    pass


class SingularMatrixError(LinalgError):
    pass


def parse_rational(text: str) -> Fraction:
    """Parse ``-3/4``, ``0``, ``7``.  Whitespace and ``+`` are rejected."""
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator: {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_vector(vec: Sequence[Fraction]) -> str:
    return ",".join(format_rational(x) for x in vec)


def vector(values: Iterable) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


def unit_vector(n: int, i: int) -> tuple[Fraction, ...]:
    return tuple(ONE if k == i else ZERO for k in range(n))


def zero_vector(n: int) -> tuple[Fraction, ...]:
    return (ZERO,) * n


def add_vectors(x, y):
    return tuple(a + b for a, b in zip(x, y))


def scale_vector(c, x):
    return tuple(c * a for a in x)


def kron_vectors(x, y) -> tuple[Fraction, ...]:
    return tuple(a * b for a in x for b in y)


class Matrix:
    """Dense immutable matrix of Fractions, stored row-major."""

    __slots__ = ("rows", "cols", "entries", "_hash")

    def __init__(self, rows: int, cols: int, entries):
        entries = tuple(tuple(Fraction(x) for x in row) for row in entries)
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise DimensionMismatch(f"entries do not form a {rows}x{cols} grid")
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self._hash = None

    @classmethod
    def _raw(cls, rows, cols, entries):
        # entries already a tuple of tuples of Fraction
        m = cls.__new__(cls)
        m.rows, m.cols, m.entries, m._hash = rows, cols, entries, None
        return m

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = list(rows)
        if cols is None:
            if not rows:
                raise LinalgError("cannot infer column count of an empty row list")
            cols = len(rows[0])
        return cls(len(rows), cols, rows)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "Matrix":
        columns = list(columns)
        return cls(rows, len(columns), [[c[i] for c in columns] for i in range(rows)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls._raw(rows, cols, tuple((ZERO,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._raw(n, n, tuple(unit_vector(n, i) for i in range(n)))

    @classmethod
    def from_sparse_columns(cls, rows: int, columns: Sequence[dict]) -> "Matrix":
        grid = [[ZERO] * len(columns) for _ in range(rows)]
        for j, col in enumerate(columns):
            for i, v in col.items():
                grid[i][j] = v
        return cls._raw(rows, len(columns), tuple(tuple(r) for r in grid))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __repr__(self):
        body = "; ".join(format_vector(r) for r in self.entries)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self.entries))
        return self._hash

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.entries)

    def column_dict(self, j: int) -> dict:
        return {i: r[j] for i, r in enumerate(self.entries) if r[j]}

    @property
    def T(self) -> "Matrix":
        return Matrix._raw(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else tuple(() for _ in range(self.cols)))

    def is_zero(self) -> bool:
        return not any(x for r in self.entries for x in r)

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == Matrix.identity(self.rows)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        return Matrix._raw(self.rows, self.cols, tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot subtract {self.shape} and {other.shape}")
        return Matrix._raw(self.rows, self.cols, tuple(
            tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)))

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, c) -> "Matrix":
        c = Fraction(c)
        return Matrix._raw(self.rows, self.cols, tuple(tuple(c * a for a in r) for r in self.entries))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        ocols = other.cols
        orows = other.entries
        # skip zeros on both sides; operands here are mostly sparse
        sparse_other = [[(j, b) for j, b in enumerate(r) if b] for r in orows]
        out = []
        for r in self.entries:
            acc = [ZERO] * ocols
            for k, a in enumerate(r):
                if a:
                    for j, b in sparse_other[k]:
                        acc[j] += a * b
            out.append(tuple(acc))
        return Matrix._raw(self.rows, ocols, tuple(out))

    def apply(self, vec: Sequence[Fraction]) -> tuple[Fraction, ...]:
        if len(vec) != self.cols:
            raise DimensionMismatch(f"vector of length {len(vec)} for {self.shape} matrix")
        nz = [(k, v) for k, v in enumerate(vec) if v]
        return tuple(sum((r[k] * v for k, v in nz), ZERO) for r in self.entries)

    def flatten(self) -> tuple[Fraction, ...]:
        return tuple(x for r in self.entries for x in r)

    @classmethod
    def unflatten(cls, rows: int, cols: int, flat: Sequence[Fraction]) -> "Matrix":
        if len(flat) != rows * cols:
            raise DimensionMismatch("flat vector has the wrong length")
        return cls(rows, cols, [flat[i * cols:(i + 1) * cols] for i in range(rows)])

    def rank(self) -> int:
        return len(rref(self)[1])

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise SingularMatrixError(f"non-square {self.shape} matrix has no inverse")
        n = self.rows
        aug = Matrix._raw(n, 2 * n, tuple(r + e for r, e in zip(self.entries, Matrix.identity(n).entries)))
        red, pivots = rref(aug)
        if tuple(pivots[:n]) != tuple(range(n)) or len(pivots) < n:
            raise SingularMatrixError("matrix is singular")
        return Matrix._raw(n, n, tuple(r[n:] for r in red.entries))


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; row/column index (i, j) maps to i * b.dim + j."""
    rows = []
    for ra in a.entries:
        for rb in b.entries:
            rows.append(tuple(x * y for x in ra for y in rb))
    return Matrix._raw(a.rows * b.rows, a.cols * b.cols, tuple(rows))


def hstack(mats: Sequence[Matrix]) -> Matrix:
    rows = mats[0].rows
    if any(m.rows != rows for m in mats):
        raise DimensionMismatch("hstack needs equal row counts")
    return Matrix._raw(rows, sum(m.cols for m in mats),
                       tuple(sum((m.entries[i] for m in mats), ()) for i in range(rows)))


def vstack(mats: Sequence[Matrix], cols: int | None = None) -> Matrix:
    if not mats:
        if cols is None:
            raise LinalgError("vstack of nothing needs an explicit column count")
        return Matrix.zeros(0, cols)
    cols = mats[0].cols
    if any(m.cols != cols for m in mats):
        raise DimensionMismatch("vstack needs equal column counts")
    return Matrix._raw(sum(m.rows for m in mats), cols, sum((m.entries for m in mats), ()))


def linear_combination(coeffs: Sequence[Fraction], mats: Sequence[Matrix], rows: int, cols: int) -> Matrix:
    acc = [[ZERO] * cols for _ in range(rows)]
    for c, m in zip(coeffs, mats):
        if not c:
            continue
        for i, r in enumerate(m.entries):
            row = acc[i]
            for j, x in enumerate(r):
                if x:
                    row[j] += c * x
    return Matrix._raw(rows, cols, tuple(tuple(r) for r in acc))


# -- sparse elimination -----------------------------------------------------

def _to_sparse(vec) -> dict:
    if isinstance(vec, dict):
        return {k: Fraction(v) for k, v in vec.items() if v}
    return {k: v for k, v in enumerate(vec) if v}


class _Echelon:
    """Incrementally maintained fully reduced echelon basis."""

    __slots__ = ("rows",)

    def __init__(self):
        self.rows: dict[int, dict] = {}

    def reduce(self, vec: dict) -> dict:
        r = dict(vec)
        for p in [p for p in r if p in self.rows]:
            c = r.get(p)
            if not c:
                continue
            for k, v in self.rows[p].items():
                nv = r.get(k, ZERO) - c * v
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
        return r

    def insert(self, vec: dict) -> bool:
        r = self.reduce(vec)
        if not r:
            return False
        p = min(r)
        inv = ONE / r[p]
        r = {k: v * inv for k, v in r.items()}
        for q, row in self.rows.items():
            c = row.get(p)
            if c:
                for k, v in r.items():
                    nv = row.get(k, ZERO) - c * v
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
        self.rows[p] = r
        return True

    def pivots(self) -> list[int]:
        return sorted(self.rows)


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Canonical reduced row-echelon form and its pivot columns.

    The returned matrix has the same shape as ``m``; zero rows sit at the bottom.
    """
    ech = _Echelon()
    for r in m.entries:
        ech.insert(_to_sparse(r))
    pivots = ech.pivots()
    rows = [tuple(ech.rows[p].get(k, ZERO) for k in range(m.cols)) for p in pivots]
    rows += [(ZERO,) * m.cols] * (m.rows - len(pivots))
    return Matrix._raw(m.rows, m.cols, tuple(rows)), tuple(pivots)


class Subspace:
    """A subspace of ``Q^ambient_dim`` held by its canonical RREF basis."""

    __slots__ = ("ambient_dim", "basis", "pivots", "_sparse")

    def __init__(self, ambient_dim: int, basis: Matrix, pivots: tuple[int, ...], _sparse=None):
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = pivots
        self._sparse = _sparse

    @classmethod
    def span(cls, ambient_dim: int, vectors: Iterable) -> "Subspace":
        ech = _Echelon()
        for v in vectors:
            if not isinstance(v, dict) and len(v) != ambient_dim:
                raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
            ech.insert(_to_sparse(v))
        return cls._from_echelon(ambient_dim, ech)

    @classmethod
    def _from_echelon(cls, ambient_dim: int, ech: _Echelon) -> "Subspace":
        pivots = tuple(ech.pivots())
        rows = tuple(tuple(ech.rows[p].get(k, ZERO) for k in range(ambient_dim)) for p in pivots)
        sparse = {p: dict(ech.rows[p]) for p in pivots}
        return cls(ambient_dim, Matrix._raw(len(rows), ambient_dim, rows), pivots, sparse)

    @classmethod
    def whole(cls, n: int) -> "Subspace":
        return cls.span(n, (unit_vector(n, i) for i in range(n)))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, Matrix.zeros(0, n), (), {})

    @classmethod
    def row_space(cls, m: Matrix) -> "Subspace":
        return cls.span(m.cols, m.entries)

    @property
    def dim(self) -> int:
        return len(self.pivots)

    @property
    def vectors(self) -> tuple[tuple[Fraction, ...], ...]:
        return self.basis.entries

    def _echelon(self) -> _Echelon:
        ech = _Echelon()
        if self._sparse is None:
            self._sparse = {p: _to_sparse(r) for p, r in zip(self.pivots, self.basis.entries)}
        ech.rows = {p: dict(r) for p, r in self._sparse.items()}
        return ech

    def residual(self, vec) -> dict:
        """Sparse remainder of ``vec`` after reducing by the basis."""
        if self._sparse is None:
            self._echelon()
        ech = _Echelon()
        ech.rows = self._sparse
        return ech.reduce(_to_sparse(vec))

    def contains(self, vec) -> bool:
        if not isinstance(vec, dict) and len(vec) != self.ambient_dim:
            raise DimensionMismatch("vector length does not match ambient dimension")
        return not self.residual(vec)

    def issubset(self, other: "Subspace") -> bool:
        _check_same_ambient(self, other)
        return all(other.contains(v) for v in self.vectors)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(ambient={self.ambient_dim}, dim={self.dim}, basis={[format_vector(v) for v in self.vectors]})"


def _check_same_ambient(a: Subspace, b: Subspace):
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch(f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}")


def kernel(m: Matrix) -> Subspace:
    """Null space ``{v : m v = 0}`` as a canonical subspace of ``Q^cols``."""
    red, pivots = rref(m)
    pivset = set(pivots)
    vecs = []
    for f in range(m.cols):
        if f in pivset:
            continue
        v = {f: ONE}
        for i, p in enumerate(pivots):
            c = red.entries[i][f]
            if c:
                v[p] = -c
        vecs.append(v)
    return Subspace.span(m.cols, vecs)


def image(m: Matrix) -> Subspace:
    """Column space of ``m``."""
    return Subspace.span(m.rows, (m.column_dict(j) for j in range(m.cols)))


def subspace_join(a: Subspace, b: Subspace) -> Subspace:
    _check_same_ambient(a, b)
    ech = a._echelon()
    for v in b.vectors:
        ech.insert(_to_sparse(v))
    return Subspace._from_echelon(a.ambient_dim, ech)


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection via the kernel of the stacked bases.

    A pair ``(x, y)`` with ``x . A = y . B`` gives the common vector ``x . A``;
    those pairs are the kernel of ``[A^T | -B^T]``.
    """
    _check_same_ambient(a, b)
    n = a.ambient_dim
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(n)
    stacked = hstack([a.basis.T, b.basis.T.scale(-1)])
    ker = kernel(stacked)
    vecs = []
    for coeffs in ker.vectors:
        x = coeffs[:a.dim]
        v = [ZERO] * n
        for c, row in zip(x, a.vectors):
            if c:
                for k, val in enumerate(row):
                    if val:
                        v[k] += c * val
        vecs.append(v)
    return Subspace.span(n, vecs)


class QuotientSpace:
    """``Q^ambient_dim / relations`` with explicit projection and section.

    The quotient basis is the set of non-pivot coordinates of the relations'
    RREF, in increasing order; the section sends quotient basis vector ``k``
    to the ambient unit vector at the ``k``-th non-pivot coordinate.
    """

    __slots__ = ("ambient_dim", "relations", "quotient_dim", "free_coords", "_coord_index",
                 "_projection", "_section", "_pivot_tails")

    def __init__(self, ambient_dim: int, relations: Subspace):
        if relations.ambient_dim != ambient_dim:
            raise DimensionMismatch("relations live in a different ambient space")
        pivset = set(relations.pivots)
        self.ambient_dim = ambient_dim
        self.relations = relations
        self.free_coords = tuple(k for k in range(ambient_dim) if k not in pivset)
        self.quotient_dim = len(self.free_coords)
        self._coord_index = {c: i for i, c in enumerate(self.free_coords)}
        sparse = relations._sparse if relations._sparse is not None else {
            p: _to_sparse(r) for p, r in zip(relations.pivots, relations.vectors)}
        # pivot p: e_p == -(rest of its relation row) modulo relations
        self._pivot_tails = {
            p: {self._coord_index[k]: -v for k, v in row.items() if k != p}
            for p, row in sparse.items()}
        self._projection = None
        self._section = None

    def project_sparse(self, vec) -> dict:
        out: dict = {}
        items = vec.items() if isinstance(vec, dict) else enumerate(vec)
        for k, v in items:
            if not v:
                continue
            idx = self._coord_index.get(k)
            if idx is not None:
                nv = out.get(idx, ZERO) + v
            else:
                for i, t in self._pivot_tails[k].items():
                    nv2 = out.get(i, ZERO) + v * t
                    if nv2:
                        out[i] = nv2
                    else:
                        out.pop(i, None)
                continue
            if nv:
                out[idx] = nv
            else:
                out.pop(idx, None)
        return out

    def project(self, vec) -> tuple[Fraction, ...]:
        if not isinstance(vec, dict) and len(vec) != self.ambient_dim:
            raise DimensionMismatch("vector length does not match ambient dimension")
        out = self.project_sparse(vec)
        return tuple(out.get(i, ZERO) for i in range(self.quotient_dim))

    def lift(self, qvec: Sequence[Fraction]) -> tuple[Fraction, ...]:
        if len(qvec) != self.quotient_dim:
            raise DimensionMismatch("vector length does not match quotient dimension")
        v = [ZERO] * self.ambient_dim
        for c, x in zip(self.free_coords, qvec):
            v[c] = Fraction(x)
        return tuple(v)

    @property
    def projection(self) -> Matrix:
        if self._projection is None:
            cols = [self.project_sparse({k: ONE}) for k in range(self.ambient_dim)]
            self._projection = Matrix.from_sparse_columns(self.quotient_dim, cols)
        return self._projection

    @property
    def section(self) -> Matrix:
        if self._section is None:
            cols = [{c: ONE} for c in self.free_coords]
            self._section = Matrix.from_sparse_columns(self.ambient_dim, cols)
        return self._section

    def __eq__(self, other):
        if not isinstance(other, QuotientSpace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.relations == other.relations

    def __hash__(self):
        return hash((self.ambient_dim, self.relations))

    def __repr__(self):
        return f"QuotientSpace(ambient={self.ambient_dim}, dim={self.quotient_dim})"


def quotient(ambient_dim: int, relations: Subspace) -> QuotientSpace:
    return QuotientSpace(ambient_dim, relations)


def apply_sparse(m: Matrix, vec: dict) -> dict:
    """``m @ vec`` for a sparse vector, returned sparse."""
    out: dict = {}
    for k, v in vec.items():
        for i, r in enumerate(m.entries):
            x = r[k]
            if x:
                nv = out.get(i, ZERO) + x * v
                if nv:
                    out[i] = nv
                else:
                    out.pop(i, None)
    return out
