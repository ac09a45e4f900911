"""Reader and writer for the line-oriented definition format.

A file is a sequence of blocks; ``#`` starts a comment::

    algebra Z2 { dim 2 unit 1,0 mul 0 0 -> 1,0 mul 0 1 -> 0,1
                 mul 1 0 -> 0,1 mul 1 1 -> 1,0 }
    morphism j : Z2 -> M { row 1,0 ... }       # source may be X^op or X*Y
    subspace S : M { row 1,0,0,1 }
    bimodule H : D - E { dim 2 left 0 { row 1,0 row 0,1 } right 0 { ... } }
    net A { algebra Z2 }
    defect D : A - B { algebra X row <vec> ... }
    sector S : D - E { bimodule H }

Unlisted ``mul`` entries and actions default to zero.  Vectors are
comma-separated rationals and may not contain spaces after a sign.  Every
object is validated as soon as its block closes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .algebra import (
    Algebra,
    AlgebraError,
    AlgebraMorphism,
    check_morphism,
    opposite,
    tensor_algebras,
    validate_algebra,
)
from .bimodule import Bimodule, validate_bimodule
from .ccn import CCNError, Defect, Net, Sector, make_defect, make_net, make_sector
from .intervals import Configuration, IntervalError, configuration, parse_arc
from .linalg import Matrix, Subspace, format_vector, parse_rational

_TOKEN = re.compile(r"[{}]|[^\s{}]+")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_']*$")


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 0, col: int = 0):
        super().__init__(message)
        self.message, self.line, self.col = message, line, col

    def __str__(self):
        return f"{self.line}:{self.col}: {self.message}"


@dataclass(frozen=True)
class Token:
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    out = []
    for n, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0]
        for m in _TOKEN.finditer(line):
            out.append(Token(m.group(), n, m.start() + 1))
    return out


class _Stream:
    def __init__(self, tokens: list[Token]):
        self.tokens, self.pos = tokens, 0

    def peek(self) -> Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self, what: str = "token") -> Token:
        t = self.peek()
        if t is None:
            last = self.tokens[-1] if self.tokens else Token("", 1, 1)
            raise ParseError(f"unexpected end of input, expected {what}", last.line, last.col)
        self.pos += 1
        return t

    def expect(self, text: str) -> Token:
        t = self.next(repr(text))
        if t.text != text:
            raise ParseError(f"expected {text!r}, got {t.text!r}", t.line, t.col)
        return t

    def name(self) -> Token:
        t = self.next("a name")
        if not _NAME.match(t.text):
            raise ParseError(f"bad name {t.text!r}", t.line, t.col)
        return t

    def integer(self) -> int:
        t = self.next("an integer")
        if not re.fullmatch(r"\d+", t.text):
            raise ParseError(f"expected a non-negative integer, got {t.text!r}", t.line, t.col)
        return int(t.text)

    def vector(self) -> tuple[Fraction, ...]:
        t = self.next("a vector")
        text = t.text
        while text.endswith(",") or (self.peek() is not None and self.peek().text.startswith(",")):
            text += self.next("a vector").text
        try:
            return tuple(parse_rational(x) for x in text.split(","))
        except ValueError as exc:
            raise ParseError(str(exc), t.line, t.col) from None


@dataclass
class Workspace:
    algebras: dict[str, Algebra] = field(default_factory=dict)
    morphisms: dict[str, AlgebraMorphism] = field(default_factory=dict)
    subspaces: dict[str, tuple[Algebra, Subspace]] = field(default_factory=dict)
    bimodules: dict[str, Bimodule] = field(default_factory=dict)
    nets: dict[str, Net] = field(default_factory=dict)
    defects: dict[str, Defect] = field(default_factory=dict)
    sectors: dict[str, Sector] = field(default_factory=dict)
    order: list[tuple[str, str]] = field(default_factory=list)

    def _table(self, kind: str) -> dict:
        return getattr(self, {"algebra": "algebras", "morphism": "morphisms",
                              "subspace": "subspaces", "bimodule": "bimodules",
                              "net": "nets", "defect": "defects", "sector": "sectors"}[kind])

    def get(self, kind: str, name: str, tok: Token | None = None):
        table = self._table(kind)
        if name not in table:
            line, col = (tok.line, tok.col) if tok else (0, 0)
            raise ParseError(f"unknown {kind} {name!r}", line, col)
        return table[name]

    def add(self, kind: str, tok: Token, value) -> None:
        # one namespace per kind: every reference says which kind it expects
        if tok.text in self._table(kind):
            raise ParseError(f"duplicate {kind} {tok.text!r}", tok.line, tok.col)
        self._table(kind)[tok.text] = value
        self.order.append((kind, tok.text))


def _row_list(s: _Stream, head: Token, rows: int, cols: int) -> Matrix:
    """``row <vec> ...``; missing rows are zero."""
    got = []
    while s.peek() is not None and s.peek().text == "row":
        t = s.next()
        v = s.vector()
        if len(v) != cols:
            raise ParseError(f"row has {len(v)} entries, expected {cols}", t.line, t.col)
        got.append(v)
    if len(got) > rows:
        raise ParseError(f"{len(got)} rows given, expected {rows}", head.line, head.col)
    got += [(Fraction(0),) * cols] * (rows - len(got))
    return Matrix.from_rows(got, cols)


def _rows(s: _Stream, head: Token, rows: int, cols: int) -> Matrix:
    s.expect("{")
    m = _row_list(s, head, rows, cols)
    s.expect("}")
    return m


def _algebra(s: _Stream, ws: Workspace, head: Token) -> None:
    name = s.name()
    s.expect("{")
    s.expect("dim")
    n = s.integer()
    s.expect("unit")
    ut = s.peek()
    unit = s.vector()
    if len(unit) != n:
        raise ParseError(f"unit has {len(unit)} entries, expected {n}", ut.line, ut.col)
    zero = (Fraction(0),) * n
    mul = [[zero] * n for _ in range(n)]
    while s.peek() is not None and s.peek().text == "mul":
        t = s.next()
        i, j = s.integer(), s.integer()
        s.expect("->")
        v = s.vector()
        if i >= n or j >= n or len(v) != n:
            raise ParseError("mul entry out of range", t.line, t.col)
        mul[i][j] = v
    s.expect("}")
    try:
        alg = Algebra(n, mul, unit, name.text)
    except (AlgebraError, ValueError) as exc:
        raise ParseError(str(exc), head.line, head.col) from None
    bad = validate_algebra(alg)
    if bad:
        raise ParseError(f"algebra {name.text} fails {bad[0]}", head.line, head.col)
    ws.add("algebra", name, alg)


def _source_algebra(s: _Stream, ws: Workspace) -> Algebra:
    """``X``, ``X^op`` or a tensor product ``X*Y``."""
    t = s.next("an algebra")
    algs = []
    for p in t.text.split("*"):
        if p.endswith("^op"):
            algs.append(opposite(ws.get("algebra", p[:-3], t)))
        else:
            algs.append(ws.get("algebra", p, t))
    out = algs[0]
    for a in algs[1:]:
        out = tensor_algebras(out, a)
    return out


def _morphism(s: _Stream, ws: Workspace, head: Token) -> None:
    name = s.name()
    s.expect(":")
    src = _source_algebra(s, ws)
    s.expect("->")
    dt = s.name()
    dst = ws.get("algebra", dt.text, dt)
    m = AlgebraMorphism(src, dst, _rows(s, head, dst.dim, src.dim))
    bad = check_morphism(m)
    if bad:
        raise ParseError(f"morphism {name.text} fails {bad[0]}", head.line, head.col)
    ws.add("morphism", name, m)


def _subspace(s: _Stream, ws: Workspace, head: Token) -> None:
    name = s.name()
    s.expect(":")
    at = s.name()
    alg = ws.get("algebra", at.text, at)
    s.expect("{")
    vecs = []
    while s.peek() is not None and s.peek().text == "row":
        t = s.next()
        v = s.vector()
        if len(v) != alg.dim:
            raise ParseError(f"row has {len(v)} entries, expected {alg.dim}", t.line, t.col)
        vecs.append(v)
    s.expect("}")
    ws.add("subspace", name, (alg, Subspace.span(alg.dim, vecs)))


def _pair(s: _Stream, ws: Workspace, kind: str):
    s.expect(":")
    lt = s.name()
    left = ws.get(kind, lt.text, lt)
    s.expect("-")
    rt = s.name()
    return left, ws.get(kind, rt.text, rt)


def _bimodule(s: _Stream, ws: Workspace, head: Token) -> None:
    name = s.name()
    d, e = _pair(s, ws, "algebra")
    s.expect("{")
    s.expect("dim")
    n = s.integer()
    acts = {"left": [Matrix.zeros(n, n)] * d.dim, "right": [Matrix.zeros(n, n)] * e.dim}
    while s.peek() is not None and s.peek().text in acts:
        side = s.next()
        i = s.integer()
        if i >= len(acts[side.text]):
            raise ParseError(f"{side.text} action index {i} out of range", side.line, side.col)
        acts[side.text][i] = _rows(s, side, n, n)
    s.expect("}")
    m = Bimodule(d, e, n, acts["left"], acts["right"])
    bad = validate_bimodule(m)
    if bad:
        raise ParseError(f"bimodule {name.text} fails {bad[0]}", head.line, head.col)
    ws.add("bimodule", name, m)


def _net(s: _Stream, ws: Workspace, head: Token) -> None:
    name = s.name()
    s.expect("{")
    s.expect("algebra")
    at = s.name()
    alg = ws.get("algebra", at.text, at)
    s.expect("}")
    try:
        ws.add("net", name, make_net(alg))
    except (AlgebraError, CCNError) as exc:
        raise ParseError(f"net {name.text}: {exc}", head.line, head.col) from None


def _defect(s: _Stream, ws: Workspace, head: Token) -> None:
    name = s.name()
    a, b = _pair(s, ws, "net")
    s.expect("{")
    s.expect("algebra")
    at = s.name()
    d = ws.get("algebra", at.text, at)
    phi = _row_list(s, head, d.dim, a.algebra.dim * b.algebra.dim)
    s.expect("}")
    try:
        ws.add("defect", name, make_defect(a, b, d, phi))
    except (AlgebraError, CCNError) as exc:
        raise ParseError(f"defect {name.text}: {exc}", head.line, head.col) from None


def _sector(s: _Stream, ws: Workspace, head: Token) -> None:
    name = s.name()
    top, bottom = _pair(s, ws, "defect")
    s.expect("{")
    s.expect("bimodule")
    bt = s.name()
    m = ws.get("bimodule", bt.text, bt)
    s.expect("}")
    try:
        ws.add("sector", name, make_sector(top, bottom, m))
    except CCNError as exc:
        raise ParseError(f"sector {name.text}: {exc}", head.line, head.col) from None


_BLOCKS = {
    "algebra": _algebra, "morphism": _morphism, "subspace": _subspace,
    "bimodule": _bimodule, "net": _net, "defect": _defect, "sector": _sector,
}


def parse(text: str) -> Workspace:
    s = _Stream(tokenize(text))
    ws = Workspace()
    while s.peek() is not None:
        head = s.next()
        handler = _BLOCKS.get(head.text)
        if handler is None:
            raise ParseError(f"unknown block {head.text!r}", head.line, head.col)
        handler(s, ws, head)
    return ws


def parse_config(text: str) -> Configuration:
    """``interval <name> = arc(<pt>,<pt>,<+|->)`` and ``include <I> <K>`` lines."""
    intervals, inclusions = [], []
    names = set()
    for n, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        if words[0] == "interval" and len(words) >= 4 and words[2] == "=":
            if words[1] in names:
                raise ParseError(f"duplicate interval {words[1]!r}", n, 1)
            try:
                intervals.append((words[1], parse_arc("".join(words[3:]))))
            except IntervalError as exc:
                raise ParseError(str(exc), n, raw.index(words[3]) + 1) from None
            names.add(words[1])
        elif words[0] == "include" and len(words) == 3:
            for w in words[1:]:
                if w not in names:
                    raise ParseError(f"unknown interval {w!r}", n, raw.index(w) + 1)
            inclusions.append((words[1], words[2]))
        else:
            raise ParseError(f"cannot parse {line!r}", n, 1)
    cfg = configuration(intervals, inclusions)
    try:
        cfg.validate()
    except IntervalError as exc:
        raise ParseError(str(exc), 0, 0) from None
    return cfg


# -- writers -------------------------------------------------------------------------

def _mat_rows(m: Matrix, indent: str) -> Iterator[str]:
    for i in range(m.rows):
        yield f"{indent}row {format_vector(m.row(i))}"


def format_algebra(a: Algebra, name: str | None = None) -> list[str]:
    name = name or a.name
    out = [f"algebra {name} {{", f"  dim {a.dim}", f"  unit {format_vector(a.unit)}"]
    for i in range(a.dim):
        for j in range(a.dim):
            v = a.product(a.basis_vector(i), a.basis_vector(j))
            if any(v):
                out.append(f"  mul {i} {j} -> {format_vector(v)}")
    out.append("}")
    return out


def format_bimodule(m: Bimodule, name: str, left: str, right: str) -> list[str]:
    out = [f"bimodule {name} : {left} - {right} {{", f"  dim {m.dim}"]
    for side, acts in (("left", m.left_action), ("right", m.right_action)):
        for i, a in enumerate(acts):
            if a.is_zero():
                continue
            out.append(f"  {side} {i} {{")
            out.extend(_mat_rows(a, "    "))
            out.append("  }")
    out.append("}")
    return out


def format_defect_phi(d: Defect, name: str, left: str, right: str, alg: str) -> list[str]:
    out = [f"defect {name} : {left} - {right} {{", f"  algebra {alg}"]
    out.extend(_mat_rows(d.phi.matrix, "  "))
    out.append("}")
    return out


__all__ = [
    "ParseError", "Token", "Workspace", "format_algebra", "format_bimodule",
    "format_defect_phi", "parse", "parse_config", "tokenize",
]
