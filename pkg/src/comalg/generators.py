"""Seeded random instances that are valid by construction.

Algebras come from the fixed catalog; bimodules are quotients of free
bimodules by sub-bimodules generated from random sparse vectors; defects are
built from characters, identities and tensor factors of the nets, so the
structure map is central without any rejection step.  Every loop is bounded
and every draw goes through :class:`~comalg.rng.SplitMix64`.
"""

from __future__ import annotations

from typing import Sequence

from .algebra import Algebra, AlgebraError, AlgebraMorphism, field, tensor_algebras
from .bimodule import Bimodule, free_bimodule, intertwiner_space, quotient_bimodule, submodule
from .catalog import CATALOG, CHARACTERS, COMMUTATIVE, catalog_algebra
from .ccn import (
    Defect,
    Net,
    Sector,
    fuse_defects,
    identity_defect,
    make_defect,
    make_net,
    make_sector,
)
from .linalg import Matrix, Subspace, linear_combination, subspace_join
from .rng import SplitMix64

MAX_TRIES = 24


class GenerationError(RuntimeError):
    pass


def random_algebra(rng: SplitMix64, max_dim: int, commutative: bool = False) -> Algebra:
    names = COMMUTATIVE if commutative else tuple(CATALOG)
    pool = [n for n in names if catalog_algebra(n).dim <= max_dim]
    return catalog_algebra(rng.choice(pool))


def random_net(rng: SplitMix64, max_dim: int) -> Net:
    return make_net(random_algebra(rng, max_dim, commutative=True))


def _sparse_vector(rng: SplitMix64, n: int) -> tuple:
    v = [0] * n
    for _ in range(1 + rng.below(2)):
        v[rng.below(n)] = rng.small_int(1, 2) * rng.choice((1, -1))
    return tuple(v)


def random_quotient(rng: SplitMix64, m: Bimodule, max_dim: int,
                    base: Sequence = ()) -> Bimodule | None:
    """A random nonzero quotient of ``m`` of dimension at most ``max_dim``.

    ``base`` vectors are always quotiented out.  Returns ``None`` when the
    bounded search fails.
    """
    sub = submodule(m, base) if base else Subspace.zero(m.dim)
    room = m.dim - sub.dim
    if room == 0:
        return None
    target = 1 + rng.below(min(max_dim, room))
    for _ in range(MAX_TRIES):
        if m.dim - sub.dim <= target:
            break
        bigger = subspace_join(sub, submodule(m, [_sparse_vector(rng, m.dim)]))
        if bigger.dim < m.dim:
            sub = bigger
    if m.dim - sub.dim > max_dim:
        return None
    return quotient_bimodule(m, sub)[0]


def random_bimodule(rng: SplitMix64, d: Algebra, e: Algebra, max_dim: int) -> Bimodule | None:
    return random_quotient(rng, free_bimodule(d, e), max_dim)


def random_sector(rng: SplitMix64, top: Defect, bottom: Defect, max_dim: int) -> Sector | None:
    """Quotient of ``top (x) bottom`` in which the two net actions already agree."""
    m = free_bimodule(top.algebra, bottom.algebra)
    base = []
    for k in range(top.phi.source.dim):
        diff = m.left(top.phi.matrix.column(k)) - m.right(bottom.phi.matrix.column(k))
        base.extend(diff.column(c) for c in range(m.dim))
    base = [v for v in base if any(v)]
    q = random_quotient(rng, m, max_dim, base)
    if q is None:
        return None
    return make_sector(top, bottom, q)


def _side(rng: SplitMix64, net: Algebra) -> tuple[Algebra, list[tuple]]:
    """Either the net algebra itself or ``K`` through a character."""
    n = net.dim
    if net.dim > 1 and rng.below(2) == 0:
        return net, [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    chars = CHARACTERS[_catalog_name(net)]
    chi = rng.choice(chars)
    return field(), [(chi[j],) for j in range(n)]


def _catalog_name(a: Algebra) -> str:
    for name in COMMUTATIVE:
        if catalog_algebra(name) == a:
            return name
    raise GenerationError(f"{a.name} is not a commutative catalog algebra")


def random_defect(rng: SplitMix64, a: Net, b: Net, max_dim: int) -> Defect:
    """``L (x) X (x) R`` where ``L``/``R`` is the net algebra or ``K`` via a character."""
    if a == b and rng.below(4) == 0:
        return identity_defect(a)
    for _ in range(MAX_TRIES):
        left, lmap = _side(rng, a.algebra)
        right, rmap = _side(rng, b.algebra)
        room = max_dim // (left.dim * right.dim)
        if room == 0:
            continue
        x = random_algebra(rng, room)
        d = tensor_algebras(tensor_algebras(left, x), right)
        cols = []
        for i in range(a.algebra.dim):
            for j in range(b.algebra.dim):
                col = []
                for li in lmap[i]:
                    for xu in x.unit:
                        for rj in rmap[j]:
                            col.append(li * xu * rj)
                cols.append(col)
        return make_defect(a, b, d, Matrix.from_columns(cols, d.dim))
    if a == b:
        return identity_defect(a)
    raise GenerationError("no defect fits the dimension bound")


def random_endomorphism(rng: SplitMix64, m: Bimodule) -> Matrix:
    basis = intertwiner_space(m, m)
    coeffs = [rng.small_rational() for _ in basis]
    return linear_combination(coeffs, basis, m.dim, m.dim)


def fuses(row: Sequence[Defect]) -> bool:
    """Is the fusion of the whole row nonzero?

    ``((d e) f) ...`` is nonzero only if every consecutive sub-fusion is,
    so a single left fold decides it for every bracketing.
    """
    try:
        acc = row[0]
        for d in row[1:]:
            acc = fuse_defects(acc, d)
    except AlgebraError:
        return False
    return True


__all__ = [
    "GenerationError", "fuses", "random_algebra", "random_bimodule", "random_defect",
    "random_endomorphism", "random_net", "random_quotient", "random_sector",
]
