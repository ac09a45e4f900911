"""Translation between locally constant net records and bare algebraic data.

The net-side records store what the interval functors evaluate to: the
algebra on each class of interval and the maps induced by inclusions.  The
algebraic side stores a commutative algebra, a pair ``(D, phi)``, a
bimodule, a bimodule map.  Both translations are exact and mutually inverse.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import singledispatch

from .algebra import Algebra, AlgebraMorphism, tensor_algebras
from .ccn import Defect, Intertwiner, Net, Sector
from .bimodule import Bimodule
from .intervals import arc, black, evaluate_defect, evaluate_embedding, white
from .linalg import Matrix

# one representative per class, both halves inside the bicolored one;
# locally constant functors only see the class
WHITE_REP = arc(white(-1), white(1))
BLACK_REP = arc(black(-1), black(1))
BICOLORED_REP = arc(black(-1), white(1))


@dataclass(frozen=True)
class LCNet:
    value: Algebra
    involution: Matrix


@dataclass(frozen=True)
class LCDefect:
    white_net: LCNet
    black_net: LCNet
    white: Algebra
    black: Algebra
    bicolored: Algebra
    white_to_bicolored: Matrix
    black_to_bicolored: Matrix


@dataclass(frozen=True)
class LCSector:
    top: LCDefect
    bottom: LCDefect
    dim: int
    rho_top: tuple[Matrix, ...]
    rho_bottom: tuple[Matrix, ...]


@dataclass(frozen=True)
class LCIntertwiner:
    source: LCSector
    target: LCSector
    matrix: Matrix


@singledispatch
def comalg_to_ccn(x):
    raise TypeError(f"no net-side record for {type(x).__name__}")


@comalg_to_ccn.register
def _(x: Net) -> LCNet:
    return LCNet(x.algebra, Matrix.identity(x.algebra.dim))


@comalg_to_ccn.register
def _(x: Defect) -> LCDefect:
    return LCDefect(
        comalg_to_ccn(x.left_net), comalg_to_ccn(x.right_net),
        evaluate_defect(x, WHITE_REP), evaluate_defect(x, BLACK_REP),
        evaluate_defect(x, BICOLORED_REP),
        evaluate_embedding(x, WHITE_REP, BICOLORED_REP).matrix,
        evaluate_embedding(x, BLACK_REP, BICOLORED_REP).matrix,
    )


@comalg_to_ccn.register
def _(x: Sector) -> LCSector:
    m = x.bimodule
    return LCSector(comalg_to_ccn(x.top), comalg_to_ccn(x.bottom), m.dim,
                    m.left_action, m.right_action)


@comalg_to_ccn.register
def _(x: Intertwiner) -> LCIntertwiner:
    return LCIntertwiner(comalg_to_ccn(x.source), comalg_to_ccn(x.target), x.matrix)


@singledispatch
def ccn_to_comalg(x):
    raise TypeError(f"no algebraic record for {type(x).__name__}")


@ccn_to_comalg.register
def _(x: LCNet) -> Net:
    if not x.involution.is_identity():
        raise ValueError("only the unoriented case is supported")
    return Net(x.value)


@ccn_to_comalg.register
def _(x: LCDefect) -> Defect:
    a, b, d = x.white, x.black, x.bicolored
    cols = []
    for i in range(a.dim):
        w = x.white_to_bicolored.column(i)
        for j in range(b.dim):
            cols.append(d.product(w, x.black_to_bicolored.column(j)))
    phi = AlgebraMorphism(tensor_algebras(a, b), d, Matrix.from_columns(cols, d.dim))
    return Defect(ccn_to_comalg(x.white_net), ccn_to_comalg(x.black_net), d, phi)


@ccn_to_comalg.register
def _(x: LCSector) -> Sector:
    top, bottom = ccn_to_comalg(x.top), ccn_to_comalg(x.bottom)
    return Sector(top, bottom, Bimodule(top.algebra, bottom.algebra, x.dim, x.rho_top, x.rho_bottom))


@ccn_to_comalg.register
def _(x: LCIntertwiner) -> Intertwiner:
    return Intertwiner(ccn_to_comalg(x.source), ccn_to_comalg(x.target), x.matrix)


__all__ = ["LCDefect", "LCIntertwiner", "LCNet", "LCSector", "ccn_to_comalg", "comalg_to_ccn"]
