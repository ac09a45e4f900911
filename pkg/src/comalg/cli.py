"""Command-line front end.

Exit status: 0 when every reported check is OK, 1 when any check FAILs,
2 on unreadable, malformed or invalid input.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .algebra import (
    AlgebraError,
    AlgebraMorphism,
    center,
    commutant,
    is_commutative,
    opposite,
    restrict_central_image,
    tensor_algebras,
    tensor_over_central,
)
from .ccn import (
    CCNError,
    action_mismatch,
    fuse_defects,
    horizontal_fusion,
    vertical_fusion,
)
from .bimodule import validate_bimodule
from .coherence import CHECKS, KINDS, CoherenceError, run_suite
from .fileformat import (
    ParseError,
    Workspace,
    format_algebra,
    format_bimodule,
    format_defect_phi,
    parse,
    parse_config,
)
from .fusion import FusionError, FusionInput, fusion_algebra, verify_fusion_theorem
from .intervals import IntervalError, check_defect_axioms
from .linalg import format_vector


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _load(path: str) -> Workspace:
    text = _read(path)
    try:
        return parse(text)
    except ParseError as exc:
        raise InputError(f"{path}:{exc}") from None


def _lookup(ws: Workspace, kind: str, name: str):
    try:
        return ws.get(kind, name)
    except ParseError:
        raise InputError(f"no {kind} named {name!r}") from None


def _name_of(table: dict, value, fallback: str) -> str:
    for k, v in table.items():
        if v == value:
            return k
    return fallback


# -- commands ------------------------------------------------------------------------

def cmd_validate(args) -> tuple[list[str], int]:
    ws = _load(args.file)
    return [f"OK {kind} {name}" for kind, name in ws.order], 0


def _basis_report(space) -> list[str]:
    return [f"dim {space.dim}"] + [f"basis {format_vector(v)}" for v in space.vectors]


def cmd_center(args):
    ws = _load(args.file)
    return _basis_report(center(_lookup(ws, "algebra", args.alg)).space), 0


def cmd_commutant(args):
    ws = _load(args.file)
    a = _lookup(ws, "algebra", args.alg)
    owner, sub = _lookup(ws, "subspace", args.subspace)
    if owner != a:
        raise InputError(f"subspace {args.subspace} does not live in {args.alg}")
    return _basis_report(commutant(a, sub).space), 0


def cmd_opposite(args):
    ws = _load(args.file)
    a = _lookup(ws, "algebra", args.alg)
    return format_algebra(opposite(a), f"{args.alg}_op"), 0


def cmd_tensor(args):
    ws = _load(args.file)
    a, b = _lookup(ws, "algebra", args.a), _lookup(ws, "algebra", args.b)
    if args.over is None:
        return format_algebra(tensor_algebras(a, b), f"{args.a}_{args.b}"), 0
    if len(args.over) != 3:
        raise InputError("over needs <c> <ja> <jb>")
    cname, ja_name, jb_name = args.over
    c = _lookup(ws, "algebra", cname)
    ja, jb = _lookup(ws, "morphism", ja_name), _lookup(ws, "morphism", jb_name)
    if ja.target != a or jb.target != b:
        raise InputError("structure maps must land in the two factors")
    ja_c = AlgebraMorphism(c, a, ja.matrix)
    central = (is_commutative(c) and restrict_central_image(a, ja_c) is None
               and restrict_central_image(b, jb) is None)
    if central:
        t, _ = tensor_over_central(a, b, c, ja_c, jb)
        return format_algebra(t, f"{args.a}_{cname}_{args.b}"), 0
    res = fusion_algebra(FusionInput(a, b, c, AlgebraMorphism(opposite(c), a, ja.matrix), jb))
    return [f"carrier dim {res.carrier.quotient_dim}", f"fused dim {res.fused.dim}"], 0


def cmd_fuse_defects(args):
    ws = _load(args.file)
    d, e = _lookup(ws, "defect", args.d), _lookup(ws, "defect", args.e)
    f = fuse_defects(d, e)
    name = f"{args.d}_{args.e}"
    left = _name_of(ws.nets, f.left_net, "?")
    right = _name_of(ws.nets, f.right_net, "?")
    return format_algebra(f.algebra, name) + format_defect_phi(f, name, left, right, name), 0


def cmd_verify_fusion(args):
    ws = _load(args.file)
    d, e = _lookup(ws, "defect", args.d), _lookup(ws, "defect", args.e)
    b = _lookup(ws, "net", args.b)
    if d.right_net != b or e.left_net != b:
        raise InputError(f"{args.d} and {args.e} do not meet along {args.b}")
    iota_d = AlgebraMorphism(b.algebra, d.algebra, d.right_embedding())
    iota_e = AlgebraMorphism(b.algebra, e.algebra, e.left_embedding())
    rep = verify_fusion_theorem(d.algebra, b.algebra, e.algebra, iota_d, iota_e)
    return rep.lines(), 0 if rep.ok else 1


def cmd_sector_check(args):
    ws = _load(args.file)
    s = _lookup(ws, "sector", args.sector)
    lines, code = [], 0
    bad = validate_bimodule(s.bimodule)
    lines.append(f"OK bimodule {args.sector}" if not bad else f"FAIL bimodule {args.sector} witness={bad[0]}")
    w = action_mismatch(s.top, s.bottom, s.bimodule)
    lines.append(f"OK actions {args.sector}" if w is None
                 else f"FAIL actions {args.sector} witness=({w[0]},{w[1]})")
    if bad or w is not None:
        code = 1
    lines.append(f"dim {s.dim}")
    return lines, code


def _emit_sector(ws: Workspace, s, name: str, new_defects: dict) -> list[str]:
    out: list[str] = []
    names = {}
    for role, d in (("top", s.top), ("bottom", s.bottom)):
        known = _name_of(ws.defects, d, "")
        if known:
            names[role] = (known, _name_of(ws.algebras, d.algebra, d.algebra.name))
            continue
        dname = new_defects[role]
        if dname not in {n for n, _ in names.values()}:
            left = _name_of(ws.nets, d.left_net, "?")
            right = _name_of(ws.nets, d.right_net, "?")
            out += format_algebra(d.algebra, dname)
            out += format_defect_phi(d, dname, left, right, dname)
        names[role] = (dname, dname)
    out += format_bimodule(s.bimodule, name, names["top"][1], names["bottom"][1])
    out.append(f"sector {name} : {names['top'][0]} - {names['bottom'][0]} {{ bimodule {name} }}")
    return out


def cmd_vfuse(args):
    ws = _load(args.file)
    x, y = _lookup(ws, "sector", args.x), _lookup(ws, "sector", args.y)
    if x.bottom != y.top:
        raise InputError(f"bottom of {args.x} is not the top of {args.y}")
    return _emit_sector(ws, vertical_fusion(x, y), f"{args.x}_{args.y}", {}), 0


def cmd_hfuse(args):
    ws = _load(args.file)
    x, y = _lookup(ws, "sector", args.x), _lookup(ws, "sector", args.y)
    if x.top.right_net != y.top.left_net:
        raise InputError(f"{args.x} and {args.y} do not share a net")
    s = horizontal_fusion(x, y)
    tops = (_name_of(ws.defects, x.top, "t"), _name_of(ws.defects, y.top, "t"))
    bots = (_name_of(ws.defects, x.bottom, "b"), _name_of(ws.defects, y.bottom, "b"))
    new = {"top": "_".join(tops), "bottom": "_".join(bots)}
    return _emit_sector(ws, s, f"{args.x}_{args.y}", new), 0


def cmd_coherence(args):
    if args.cases < 1:
        raise InputError("--cases must be at least 1")
    if args.max_dim < 1:
        raise InputError("--max-dim must be at least 1")
    if args.suite != "all" and args.suite not in CHECKS:
        raise InputError(f"unknown suite {args.suite!r}")
    reports = run_suite(args.seed, args.cases, args.max_dim, args.suite)
    return [r.line() for r in reports], 0 if all(r.ok for r in reports) else 1


def cmd_net_axioms(args):
    ws = _load(args.file)
    d = _lookup(ws, "defect", args.defect)
    try:
        cfg = parse_config(_read(args.config))
    except ParseError as exc:
        raise InputError(f"{args.config}:{exc}") from None
    results = check_defect_axioms(d, cfg)
    return [r.line() for r in results], 0 if all(r.ok for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="comalg", allow_abbrev=False,
                                description="Exact computations with algebras, bimodules and defects.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, *positional):
        sp = sub.add_parser(name, allow_abbrev=False)
        for arg in positional:
            sp.add_argument(arg)
        sp.set_defaults(fn=fn)
        return sp

    add("validate", cmd_validate, "file")
    add("center", cmd_center, "file", "alg")
    add("commutant", cmd_commutant, "file", "alg", "subspace")
    add("opposite", cmd_opposite, "file", "alg")
    sp = add("tensor", cmd_tensor, "file", "a", "b")
    sp.add_argument("over", nargs="*", metavar="over c ja jb")
    add("fuse-defects", cmd_fuse_defects, "file", "d", "e")
    add("verify-fusion", cmd_verify_fusion, "file", "d", "b", "e")
    add("sector-check", cmd_sector_check, "file", "sector")
    add("vfuse", cmd_vfuse, "file", "x", "y")
    add("hfuse", cmd_hfuse, "file", "x", "y")
    sp = add("coherence", cmd_coherence)
    sp.add_argument("--suite", required=True, help="|".join(KINDS + ("naturality", "all")))
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--cases", type=int, default=100)
    sp.add_argument("--max-dim", type=int, default=2)
    sp = add("net-axioms", cmd_net_axioms, "file", "defect")
    sp.add_argument("--config", required=True)
    return p


def _normalize_over(args) -> None:
    if getattr(args, "command", None) != "tensor":
        return
    if not args.over:
        args.over = None
    elif args.over[0] != "over":
        raise InputError("expected 'over <c> <ja> <jb>'")
    else:
        args.over = args.over[1:]


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _normalize_over(args)
        lines, code = args.fn(args)
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except (AlgebraError, CCNError, FusionError, IntervalError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except CoherenceError as exc:
        # a diagram that cannot even be assembled counts as a failed check
        sys.stderr.write(f"error: {exc}\n")
        return 1
    sys.stdout.write("".join(line + "\n" for line in lines))
    return code


if __name__ == "__main__":
    sys.exit(main())
