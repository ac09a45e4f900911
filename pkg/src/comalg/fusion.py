"""Fusion of two algebras over a third, and the explicit isomorphism between
the central tensor product and the fused algebra it generates.

The carrier ``A (x)_C B`` is the quotient of ``A (x) B`` by the balancing
relations.  Relative commutants of the images of ``C`` act on it by left
multiplication on their own tensor factor; the fused algebra is the unital
subalgebra of ``End(carrier)`` they generate.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable

from .algebra import (
    Algebra,
    AlgebraError,
    AlgebraMorphism,
    MatrixAlgebra,
    Subalgebra,
    check_morphism,
    commutant,
    endomorphism_algebra,
    generated_subalgebra,
    opposite,
    balanced_quotient,
    tensor_over_central,
    validate_algebra,
)
from .bimodule import descend_kron, maps_relations
from .linalg import Matrix, QuotientSpace, Subspace, image


class FusionError(AlgebraError):
    pass


@dataclass(frozen=True)
class FusionInput:
    a: Algebra
    b: Algebra
    c: Algebra
    j_a: AlgebraMorphism  # c^op -> a
    j_b: AlgebraMorphism  # c -> b

    def validate(self) -> None:
        for alg in (self.a, self.b, self.c):
            bad = validate_algebra(alg)
            if bad:
                raise FusionError(f"{alg.name} is not an algebra: {bad[0]}")
        if self.j_a.source != opposite(self.c) or self.j_a.target != self.a:
            raise FusionError("j_a must map the opposite of c into a")
        if self.j_b.source != self.c or self.j_b.target != self.b:
            raise FusionError("j_b must map c into b")
        for j in (self.j_a, self.j_b):
            bad = check_morphism(j)
            if bad:
                raise FusionError(f"structure map is not an algebra morphism: {bad[0]}")


@dataclass(frozen=True)
class FusionResult:
    carrier: QuotientSpace
    end_algebra: MatrixAlgebra
    fused: Subalgebra
    left_commutant: Subalgebra
    right_commutant: Subalgebra
    left_rep: Callable = dc_field(repr=False)
    right_rep: Callable = dc_field(repr=False)


def balanced_carrier(inp: FusionInput) -> QuotientSpace:
    inp.validate()
    return balanced_quotient(inp.a, inp.b, inp.c, inp.j_a.matrix, inp.j_b.matrix)


def _representation(q: QuotientSpace, mult: Callable[[tuple], Matrix], left_side: bool, other_dim: int):
    ident = Matrix.identity(other_dim)

    def rep(x) -> Matrix:
        m = mult(x)
        a, b = (m, ident) if left_side else (ident, m)
        if not maps_relations(q, a, b, q):
            raise FusionError("multiplication does not descend to the balanced tensor product")
        return descend_kron(q, a, b, q)

    return rep


def fusion_algebra(inp: FusionInput) -> FusionResult:
    q = balanced_carrier(inp)
    a, b = inp.a, inp.b
    left_comm = commutant(a, inp.j_a.image())
    right_comm = commutant(b, inp.j_b.image())
    left_rep = _representation(q, a.left_matrix, True, b.dim)
    right_rep = _representation(q, b.left_matrix, False, a.dim)
    end = endomorphism_algebra(q.quotient_dim)
    gens = [left_rep(x).flatten() for x in left_comm.space.vectors]
    gens += [right_rep(y).flatten() for y in right_comm.space.vectors]
    fused = generated_subalgebra(end, [Subspace.span(end.dim, gens)])
    return FusionResult(q, end, fused, left_comm, right_comm, left_rep, right_rep)


def central_fusion_input(d: Algebra, b: Algebra, e: Algebra,
                         iota_d: AlgebraMorphism, iota_e: AlgebraMorphism) -> FusionInput:
    """View central maps ``b -> Z(d)``, ``b -> Z(e)`` as general fusion data."""
    bop = opposite(b)
    j_a = AlgebraMorphism(bop, d, iota_d.matrix)
    return FusionInput(d, e, b, j_a, iota_e)


def rho_iso(d: Algebra, b: Algebra, e: Algebra,
            iota_d: AlgebraMorphism, iota_e: AlgebraMorphism) -> AlgebraMorphism:
    """``rho: d (x)_b e -> End(d (x)_b e)``, each element acting by left multiplication."""
    t, q = tensor_over_central(d, e, b, iota_d, iota_e)
    end = endomorphism_algebra(t.dim)
    cols = [L.flatten() for L in t.left_mult]
    rho = AlgebraMorphism(t, end, Matrix.from_columns(cols, end.dim))
    bad = check_morphism(rho)
    if bad:
        raise FusionError(f"rho is not an algebra morphism: {bad[0]}")
    return rho


@dataclass(frozen=True)
class FusionReport:
    checks: tuple[tuple[str, bool], ...]
    tensor_dim: int
    fused_dim: int

    @property
    def ok(self) -> bool:
        return all(p for _, p in self.checks)

    def lines(self) -> list[str]:
        out = [f"{'OK' if p else 'FAIL'} {name}" for name, p in self.checks]
        out.append(f"dim tensor={self.tensor_dim} fused={self.fused_dim}")
        return out


def verify_fusion_theorem(d: Algebra, b: Algebra, e: Algebra,
                          iota_d: AlgebraMorphism, iota_e: AlgebraMorphism) -> FusionReport:
    """Compare the fused algebra with the image of ``rho``."""
    rho = rho_iso(d, b, e, iota_d, iota_e)
    res = fusion_algebra(central_fusion_input(d, b, e, iota_d, iota_e))
    same_carrier = res.carrier.quotient_dim == rho.source.dim
    img = image(rho.matrix)
    checks = (
        ("carrier", same_carrier),
        ("image-equality", same_carrier and img == res.fused.space),
        ("injective", rho.is_injective()),
        ("morphism", not check_morphism(rho)),
        ("unit-of-sections", _acts_on_unit(rho)),
        ("dimension", rho.source.dim == res.fused.dim),
    )
    return FusionReport(checks, rho.source.dim, res.fused.dim)


def _acts_on_unit(rho: AlgebraMorphism) -> bool:
    """``rho_xi(1) = xi`` for every basis vector ``xi``."""
    t, end = rho.source, rho.target
    for s in range(t.dim):
        act = end.to_matrix(rho.matrix.column(s))
        if act.apply(t.unit) != t.basis_vector(s):
            return False
    return True


__all__ = [
    "FusionError", "FusionInput", "FusionReport", "FusionResult", "balanced_carrier",
    "central_fusion_input", "fusion_algebra", "rho_iso", "verify_fusion_theorem",
]
