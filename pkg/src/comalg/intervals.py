"""Combinatorial model of the bicolored circle.

Points are ``Top`` (i), ``Bot`` (-i) or ``(half, q)`` with ``q`` rational:
on the black (right) half ``q`` stands for ``exp(i arctan q)``, on the white
(left) half for ``-exp(i arctan q)``.  Every map needed by the locally
constant layer acts on these coordinates exactly.

Going counterclockwise from ``Bot`` one meets the black half with ``q``
increasing, then ``Top``, then the white half with ``q`` increasing.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import (
    Algebra,
    AlgebraMorphism,
    generated_subalgebra,
    identity_morphism,
    opposite,
)
from .ccn import Defect
from .linalg import format_rational, kernel, parse_rational


class IntervalError(ValueError):
    pass


class Half(enum.Enum):
    WHITE = "w"
    BLACK = "b"


@dataclass(frozen=True)
class CirclePoint:
    kind: str  # "top", "bot" or "half"
    half: Half | None = None
    coord: Fraction | None = None

    def __post_init__(self):
        if self.kind == "half":
            if self.half is None or self.coord is None:
                raise IntervalError("half point needs a half and a coordinate")
            object.__setattr__(self, "coord", Fraction(self.coord))
        elif self.kind in ("top", "bot"):
            if self.half is not None or self.coord is not None:
                raise IntervalError("top and bottom carry no coordinate")
        else:
            raise IntervalError(f"unknown point kind {self.kind!r}")

    @property
    def key(self) -> tuple:
        if self.kind == "bot":
            return (0, Fraction(0))
        if self.kind == "top":
            return (2, Fraction(0))
        return (1 if self.half is Half.BLACK else 3, self.coord)

    def __str__(self):
        if self.kind != "half":
            return self.kind
        return f"{self.half.value}:{format_rational(self.coord)}"


TOP = CirclePoint("top")
BOT = CirclePoint("bot")


def white(q) -> CirclePoint:
    return CirclePoint("half", Half.WHITE, Fraction(q))


def black(q) -> CirclePoint:
    return CirclePoint("half", Half.BLACK, Fraction(q))


POSITIVE = "+"
NEGATIVE = "-"


def _flip(orientation: str) -> str:
    return NEGATIVE if orientation == POSITIVE else POSITIVE


def _offset(origin: CirclePoint, p: CirclePoint) -> tuple:
    """Sort key for the counterclockwise distance from ``origin`` to ``p``."""
    return (0 if p.key >= origin.key else 1, p.key)


def _in_arc(lo: CirclePoint, hi: CirclePoint, p: CirclePoint) -> bool:
    """Is ``p`` on the closed counterclockwise arc ``lo -> hi``?"""
    return _offset(lo, p) <= _offset(lo, hi)


class ColorClass(enum.Enum):
    WHITE = "White"
    BLACK = "Black"
    UPPER_BICOLORED = "UpperBicolored"
    LOWER_BICOLORED = "LowerBicolored"
    GENUINELY_BICOLORED = "GenuinelyBicolored"
    TRICOLORED = "Tricolored"
    INVALID = "Invalid"


UPPER_CLASSES = (ColorClass.WHITE, ColorClass.BLACK, ColorClass.GENUINELY_BICOLORED)


def classify_points(start: CirclePoint, end: CirclePoint, orientation: str) -> ColorClass:
    """Classify raw arc data; ``INVALID`` if it is not a circle interval."""
    if start == end or orientation not in (POSITIVE, NEGATIVE):
        return ColorClass.INVALID
    if start.kind != "half" or end.kind != "half":
        # the arc would contain i or -i without a neighborhood of it
        return ColorClass.INVALID
    lo, hi = (start, end) if orientation == POSITIVE else (end, start)
    has_top = _in_arc(lo, hi, TOP)
    has_bot = _in_arc(lo, hi, BOT)
    if has_top and has_bot:
        return ColorClass.TRICOLORED
    if has_top:
        return ColorClass.GENUINELY_BICOLORED
    if has_bot:
        return ColorClass.LOWER_BICOLORED
    return ColorClass.WHITE if lo.half is Half.WHITE else ColorClass.BLACK


@dataclass(frozen=True)
class CircleInterval:
    start: CirclePoint
    end: CirclePoint
    orientation: str = POSITIVE

    def __post_init__(self):
        if classify_points(self.start, self.end, self.orientation) is ColorClass.INVALID:
            raise IntervalError(f"not a circle interval: {self}")

    @property
    def lo(self) -> CirclePoint:
        return self.start if self.orientation == POSITIVE else self.end

    @property
    def hi(self) -> CirclePoint:
        return self.end if self.orientation == POSITIVE else self.start

    def reversed(self) -> "CircleInterval":
        """Same set, opposite orientation."""
        return CircleInterval(self.end, self.start, _flip(self.orientation))

    def __contains__(self, p: CirclePoint) -> bool:
        return _in_arc(self.lo, self.hi, p)

    def __str__(self):
        return f"arc({self.start},{self.end},{self.orientation})"


def arc(start: CirclePoint, end: CirclePoint, orientation: str = POSITIVE) -> CircleInterval:
    return CircleInterval(start, end, orientation)


@dataclass(frozen=True)
class RealInterval:
    lo: Fraction
    hi: Fraction
    orientation: str = POSITIVE

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if not self.lo < self.hi:
            raise IntervalError("a real interval needs lo < hi")
        if self.orientation not in (POSITIVE, NEGATIVE):
            raise IntervalError("orientation must be + or -")


def classify(i: CircleInterval) -> ColorClass:
    return classify_points(i.start, i.end, i.orientation)


def is_upper(cls: ColorClass) -> bool:
    return cls in UPPER_CLASSES


def reflect_point(p: CirclePoint) -> CirclePoint:
    if p.kind == "top":
        return BOT
    if p.kind == "bot":
        return TOP
    return CirclePoint("half", p.half, -p.coord)


def reflect_j(i: CircleInterval) -> CircleInterval:
    """Reflection in the horizontal axis; reverses orientation."""
    return CircleInterval(reflect_point(i.start), reflect_point(i.end), _flip(i.orientation))


def _phi_half(half: Half, j: RealInterval) -> CircleInterval:
    lo = CirclePoint("half", half, j.lo)
    hi = CirclePoint("half", half, j.hi)
    if j.orientation == POSITIVE:
        return CircleInterval(lo, hi, POSITIVE)
    return CircleInterval(hi, lo, NEGATIVE)


def phi_white(j: RealInterval) -> CircleInterval:
    return _phi_half(Half.WHITE, j)


def phi_black(j: RealInterval) -> CircleInterval:
    return _phi_half(Half.BLACK, j)


def _phi_half_inverse(half: Half, i: CircleInterval) -> RealInterval:
    if classify(i) is not (ColorClass.WHITE if half is Half.WHITE else ColorClass.BLACK):
        raise IntervalError(f"{i} does not lie in the {half.name.lower()} half")
    return RealInterval(i.lo.coord, i.hi.coord, i.orientation)


def phi_white_inverse(i: CircleInterval) -> RealInterval:
    return _phi_half_inverse(Half.WHITE, i)


def phi_black_inverse(i: CircleInterval) -> RealInterval:
    return _phi_half_inverse(Half.BLACK, i)


def phi_top(i: CircleInterval) -> CircleInterval:
    return i


def phi_bot(i: CircleInterval) -> CircleInterval:
    return reflect_j(i)


def contains(outer: CircleInterval, inner: CircleInterval) -> bool:
    """Set containment of the underlying arcs (orientation ignored)."""
    o = outer.lo
    a, b, e = _offset(o, inner.lo), _offset(o, inner.hi), _offset(o, outer.hi)
    return a <= b <= e


def disjoint_interiors(i: CircleInterval, j: CircleInterval) -> bool:
    """``j`` lies in the closed complement arc of ``i``."""
    o = i.hi
    a, b, e = _offset(o, j.lo), _offset(o, j.hi), _offset(o, i.lo)
    return a <= b <= e


def union_interval(i: CircleInterval, j: CircleInterval) -> CircleInterval | None:
    """``i u j`` if it is again an interval with the common orientation."""
    if i.orientation != j.orientation:
        return None
    if contains(i, j):
        return i
    if contains(j, i):
        return j
    lo = hi = None
    if j.lo in i and i.lo not in j:
        lo, hi = i.lo, j.hi
    elif i.lo in j and j.lo not in i:
        lo, hi = j.lo, i.hi
    if lo is None:
        return None
    s, e = (lo, hi) if i.orientation == POSITIVE else (hi, lo)
    if classify_points(s, e, i.orientation) is ColorClass.INVALID:
        return None
    return CircleInterval(s, e, i.orientation)


def same_set(i: CircleInterval, j: CircleInterval) -> bool:
    return i.lo == j.lo and i.hi == j.hi


# -- evaluation of a locally constant defect ----------------------------------------

def evaluate_defect(d: Defect, i: CircleInterval) -> Algebra:
    cls = classify(i)
    if cls is ColorClass.WHITE:
        alg = d.left_net.algebra
    elif cls is ColorClass.BLACK:
        alg = d.right_net.algebra
    elif cls is ColorClass.GENUINELY_BICOLORED:
        alg = d.algebra
    else:
        raise IntervalError(f"a defect is not evaluated on {cls.value} intervals")
    return alg if i.orientation == POSITIVE else opposite(alg)


def evaluate_embedding(d: Defect, src: CircleInterval, dst: CircleInterval) -> AlgebraMorphism:
    if not contains(dst, src):
        raise IntervalError(f"{src} is not contained in {dst}")
    if src.orientation != dst.orientation:
        raise IntervalError("embeddings must preserve orientation")
    a, b = evaluate_defect(d, src), evaluate_defect(d, dst)
    cs, cd = classify(src), classify(dst)
    if cs is cd:
        return identity_morphism(a)
    if cd is ColorClass.GENUINELY_BICOLORED and cs is ColorClass.WHITE:
        return AlgebraMorphism(a, b, d.left_embedding())
    if cd is ColorClass.GENUINELY_BICOLORED and cs is ColorClass.BLACK:
        return AlgebraMorphism(a, b, d.right_embedding())
    raise IntervalError(f"no embedding of a {cs.value} interval into a {cd.value} one")


# -- axiom checks on finite configurations -----------------------------------------------

@dataclass(frozen=True)
class Configuration:
    intervals: tuple[tuple[str, CircleInterval], ...]
    inclusions: tuple[tuple[str, str], ...]

    def interval(self, name: str) -> CircleInterval:
        for n, i in self.intervals:
            if n == name:
                return i
        raise IntervalError(f"unknown interval {name!r}")

    def validate(self) -> None:
        names = [n for n, _ in self.intervals]
        if len(set(names)) != len(names):
            raise IntervalError("interval names must be unique")
        for n, i in self.intervals:
            if not is_upper(classify(i)):
                raise IntervalError(f"{n} is {classify(i).value}; only upper intervals carry a defect")
        for small, big in self.inclusions:
            s, b = self.interval(small), self.interval(big)
            if not contains(b, s):
                raise IntervalError(f"declared inclusion {small} in {big} does not hold")
            if s.orientation != b.orientation:
                raise IntervalError(f"declared inclusion {small} in {big} reverses orientation")


def configuration(intervals: Sequence[tuple[str, CircleInterval]],
                  inclusions: Iterable[tuple[str, str]] = ()) -> Configuration:
    return Configuration(tuple(intervals), tuple(inclusions))


@dataclass(frozen=True)
class AxiomResult:
    kind: str
    subject: tuple[str, ...]
    ok: bool
    witness: str = ""

    def line(self) -> str:
        head = f"{'OK' if self.ok else 'FAIL'} {self.kind} {' '.join(self.subject)}"
        return f"{head} witness={self.witness}" if self.witness else head


def check_defect_axioms(d: Defect, config: Configuration) -> list[AxiomResult]:
    """Isotony on every declared inclusion, locality on interior-disjoint pairs
    inside a common interval, strong additivity on pairs whose union is a
    declared superset."""
    config.validate()
    out = []
    emb = {}
    for small, big in config.inclusions:
        m = evaluate_embedding(d, config.interval(small), config.interval(big))
        emb[(small, big)] = m
        ker = kernel(m.matrix)
        wit = "" if ker.dim == 0 else "(" + ",".join(format_rational(x) for x in ker.vectors[0]) + ")"
        out.append(AxiomResult("isotony", (small, big), ker.dim == 0, wit))
    inside: dict[str, list[str]] = {}
    for small, big in config.inclusions:
        inside.setdefault(big, []).append(small)
    for big, smalls in inside.items():
        kint = config.interval(big)
        target = evaluate_defect(d, kint)
        for x in range(len(smalls)):
            for y in range(x + 1, len(smalls)):
                n1, n2 = smalls[x], smalls[y]
                i1, i2 = config.interval(n1), config.interval(n2)
                m1, m2 = emb[(n1, big)], emb[(n2, big)]
                if disjoint_interiors(i1, i2):
                    w = _commutation_failure(target, m1, m2)
                    out.append(AxiomResult("locality", (n1, n2, big), w is None,
                                           "" if w is None else f"({w[0]},{w[1]})"))
                u = union_interval(i1, i2)
                if u is not None and same_set(u, kint):
                    gen = generated_subalgebra(target, [m1.image(), m2.image()])
                    ok = gen.dim == target.dim
                    out.append(AxiomResult("additivity", (n1, n2, big), ok,
                                           "" if ok else f"dim={gen.dim}/{target.dim}"))
    return out


def _commutation_failure(alg: Algebra, m1: AlgebraMorphism, m2: AlgebraMorphism):
    for i in range(m1.source.dim):
        x = m1.matrix.column(i)
        for j in range(m2.source.dim):
            y = m2.matrix.column(j)
            if alg.product(x, y) != alg.product(y, x):
                return (i, j)
    return None


# -- fusion interval data --------------------------------------------------------------

def mirror_point(p: CirclePoint) -> CirclePoint:
    """Reflection in the vertical axis: swaps the halves, ``(h, q) -> (h', -q)``."""
    if p.kind != "half":
        return p
    other = Half.WHITE if p.half is Half.BLACK else Half.BLACK
    return CirclePoint("half", other, -p.coord)


@dataclass(frozen=True)
class FusionIntervalData:
    interval: CircleInterval
    black_endpoint: CirclePoint
    white_endpoint: CirclePoint
    c_class: ColorClass
    cbar_class: ColorClass
    j_orientation: str
    j_lo: Fraction
    symmetric: bool


def fusion_interval_data(i: CircleInterval) -> FusionIntervalData:
    """Combinatorial roles of the pieces used to fuse defects on ``i``.

    ``C`` runs from the black endpoint of ``i`` to the angle-halving point
    towards ``i``; ``C-bar`` is the matching white piece.  The halving points
    are irrational in these coordinates and are not returned; ``J`` is the
    positively oriented real interval with ``phi_black(J) = C``, whose lower
    end is the black endpoint coordinate.
    """
    if classify(i) is not ColorClass.GENUINELY_BICOLORED:
        raise IntervalError("fusion data needs a genuinely bicolored interval")
    b, w = i.lo, i.hi
    return FusionIntervalData(i, b, w, ColorClass.BLACK, ColorClass.WHITE, POSITIVE, b.coord,
                              mirror_point(b) == w)


# -- literal syntax --------------------------------------------------------------------

_POINT = r"(?:top|bot|[wb]:-?[0-9]+(?:/[0-9]+)?)"
_ARC = re.compile(rf"^arc\(\s*({_POINT})\s*,\s*({_POINT})\s*,\s*([+-])\s*\)$")


def parse_point(text: str) -> CirclePoint:
    text = text.strip()
    if text == "top":
        return TOP
    if text == "bot":
        return BOT
    if len(text) > 2 and text[1] == ":" and text[0] in "wb":
        half = Half.WHITE if text[0] == "w" else Half.BLACK
        return CirclePoint("half", half, parse_rational(text[2:]))
    raise IntervalError(f"bad circle point {text!r}")


def parse_arc(text: str) -> CircleInterval:
    m = _ARC.match(text.strip())
    if not m:
        raise IntervalError(f"bad interval literal {text!r}")
    return CircleInterval(parse_point(m.group(1)), parse_point(m.group(2)), m.group(3))


def canonical_battery() -> list[Configuration]:
    """Twelve small configurations: nested chains, covers and disjoint pairs."""
    gb = arc(black(-1), white(1))
    wt = arc(white(0), white(1))
    bk = arc(black(-1), black(0))
    gb_small = arc(black(0), white(0))
    up = arc(black(-1), white(0))
    dn = arc(black(0), white(1))
    neg = gb.reversed()
    return [
        configuration([("K", gb)]),
        configuration([("I", wt), ("K", gb)], [("I", "K")]),
        configuration([("I", bk), ("K", gb)], [("I", "K")]),
        configuration([("I", gb_small), ("K", gb)], [("I", "K")]),
        configuration([("I", wt), ("J", bk), ("K", gb)], [("I", "K"), ("J", "K")]),
        configuration([("I", bk), ("J", dn), ("K", gb)], [("I", "K"), ("J", "K")]),
        configuration([("I", up), ("J", wt), ("K", gb)], [("I", "K"), ("J", "K")]),
        configuration([("I", up), ("J", dn), ("K", gb)], [("I", "K"), ("J", "K")]),
        configuration([("I", wt), ("J", gb_small), ("L", bk), ("K", gb)],
                      [("I", "K"), ("J", "K"), ("L", "K")]),
        configuration([("I", arc(white(0), white(1))), ("J", arc(white(-1), white(0))),
                       ("K", arc(white(-1), white(1)))], [("I", "K"), ("J", "K")]),
        configuration([("I", wt), ("M", dn), ("K", gb)], [("I", "M"), ("M", "K"), ("I", "K")]),
        configuration([("I", wt.reversed()), ("K", neg)], [("I", "K")]),
    ]


__all__ = [
    "AxiomResult", "BOT", "CircleInterval", "CirclePoint", "ColorClass", "Configuration",
    "FusionIntervalData", "Half", "IntervalError", "NEGATIVE", "POSITIVE", "RealInterval",
    "TOP", "arc", "black", "canonical_battery", "check_defect_axioms", "classify",
    "classify_points", "configuration", "contains", "disjoint_interiors", "evaluate_defect",
    "evaluate_embedding", "fusion_interval_data", "is_upper", "mirror_point", "parse_arc",
    "parse_point", "phi_black", "phi_black_inverse", "phi_bot", "phi_top", "phi_white",
    "phi_white_inverse", "reflect_j", "reflect_point", "same_set", "union_interval", "white",
]
