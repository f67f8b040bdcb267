"""``braidrack`` command-line tool.

Exit codes: 0 success, 1 axiom violation (validate) or braids distinguished
(compare), 2 input error, 3 size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import braids, coloring, freerack, pointed, racks
from .errors import AxiomOneViolation, AxiomTwoViolation, BraidRackError, ParseError, SizeCapExceeded

FORMATS = ("perm", "dense", "coo", "json-summary")


def load_rack(spec: str) -> racks.FiniteRack:
    """Resolve ``dihedral:n``, ``trivial:n``, ``ts:m:t:s``, ``core:<file>`` or a table file."""
    name, _, rest = spec.partition(":")
    try:
        if name == "dihedral" and rest:
            return racks.dihedral_quandle(int(rest))
        if name == "trivial" and rest:
            return racks.trivial_rack(int(rest))
        if name == "ts" and rest:
            m, t, s = (int(v) for v in rest.split(":"))
            return racks.ts_rack(m, t, s)
    except ValueError as exc:
        if isinstance(exc, BraidRackError):
            raise
        raise ParseError(f"bad builtin rack spec {spec!r}") from None
    if name == "core" and rest:
        cayley = racks.parse_rack_file(Path(rest).read_text(), validate=False)
        return racks.core_quandle(cayley, name=spec)
    rack = racks.parse_rack_file(Path(spec).read_text())
    return racks.FiniteRack(rack.table, rack.inv_table, rack.is_quandle, spec)


def resolve_cap(flag: int | None) -> int:
    if flag is not None:
        return flag
    env = os.environ.get("BRAIDRACK_CAP")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ParseError(f"BRAIDRACK_CAP is not an integer: {env!r}") from None
    return coloring.DEFAULT_CAP


def read_word(text: str | None, path: str | None, strands: int | None) -> braids.BraidWord:
    if path is not None:
        text = Path(path).read_text()
    return braids.parse_braid(text or "", strands)


def parse_colors(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise ParseError(f"bad color list {text!r}") from None


def _word(args, attr="word"):
    return read_word(getattr(args, attr), getattr(args, attr + "_file", None), args.strands)


def cmd_validate(args, out):
    try:
        rack = load_rack(args.rack)
    except (AxiomOneViolation, AxiomTwoViolation) as exc:
        print(f"{type(exc).__name__}: {exc}", file=out)
        print("FAIL", file=out)
        return 1
    kind = "quandle" if rack.is_quandle else "rack"
    print(f"order {rack.order}, {kind}, PASS", file=out)
    return 0


def summary(rack, word, mat) -> dict:
    return {
        "rack": rack.name,
        "order": rack.order,
        "strands": word.strands,
        "word": list(word.letters),
        "size": mat.size,
        "trace": mat.trace(),
        "components": braids.closure_components(word),
    }


def cmd_matrix(args, out):
    rack = load_rack(args.rack)
    word = _word(args)
    try:
        mat = coloring.counting_matrix(rack, word, cap=resolve_cap(args.cap), workers=args.workers)
    except SizeCapExceeded as exc:
        print(f"{exc}; use the 'trace' subcommand for closure counts", file=sys.stderr)
        return 3
    if args.format == "json-summary":
        print(json.dumps(summary(rack, word, mat), sort_keys=True), file=out)
        return 0
    if args.legend:
        print(coloring.legend(rack.order, word.strands), file=out)
    body = {"perm": coloring.format_perm, "dense": coloring.format_dense,
            "coo": coloring.format_coo}[args.format](mat)
    if body:
        print(body, file=out)
    print(f"trace={mat.trace()} size={mat.size}", file=out)
    return 0


def cmd_trace(args, out):
    rack = load_rack(args.rack)
    word = _word(args)
    cap = resolve_cap(args.cap) * coloring.CLOSURE_CAP_FACTOR
    print(coloring.closure_colorings(rack, word, cap=cap, workers=args.workers), file=out)
    return 0


def cmd_closure(args, out):
    word = _word(args)
    perm = braids.underlying_permutation(word)
    print(f"components={braids.closure_components(word)}", file=out)
    print("permutation=" + " ".join(map(str, perm)), file=out)
    if args.rack:
        rack = load_rack(args.rack)
        cap = resolve_cap(args.cap) * coloring.CLOSURE_CAP_FACTOR
        print(f"colorings={coloring.closure_colorings(rack, word, cap=cap, workers=args.workers)}",
              file=out)
    return 0


def cmd_pointed(args, out):
    rack = load_rack(args.rack)
    word = _word(args)
    px = pointed.PointedRack.for_braid(rack, parse_colors(args.top), parse_colors(args.bottom))
    print(pointed.pointed_counting_invariant(px, word), file=out)
    return 0


def cmd_fundamental(args, out):
    word = _word(args)
    for line in freerack.fundamental_pointed_rack(word).lines(args.label_style):
        print(line, file=out)
    return 0


def cmd_compare(args, out):
    a = _word(args, "a")
    b = _word(args, "b")
    if a.strands != b.strands:
        raise BraidRackError("braids have different strand counts")
    specs = [s for group in args.racks for s in group.split(",") if s]
    cap = resolve_cap(args.cap)
    for spec in specs:
        rack = load_rack(spec)
        if args.trace_only:
            ta = coloring.closure_colorings(rack, a, cap=cap * coloring.CLOSURE_CAP_FACTOR, workers=args.workers)
            tb = coloring.closure_colorings(rack, b, cap=cap * coloring.CLOSURE_CAP_FACTOR, workers=args.workers)
            differ = ta != tb
        else:
            differ = (coloring.counting_matrix(rack, a, cap, args.workers)
                      != coloring.counting_matrix(rack, b, cap, args.workers))
        if differ:
            print(f"distinguished by {spec}", file=out)
            return 1
    print("indistinguishable over given racks", file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="braidrack", description="Rack invariants of braids.")
    sub = p.add_subparsers(dest="command", required=True)

    def word_args(sp, name="word", required=True):
        g = sp.add_mutually_exclusive_group(required=required)
        g.add_argument(f"--{name}", help="braid letters, e.g. \"1 -2 1\" or \"s1 s2' s1\"")
        g.add_argument(f"--{name}-file", dest=f"{name}_file", help="file with optional n=<strands> header")

    def compute_args(sp):
        sp.add_argument("--cap", type=int, default=None, help="m^n size cap (env BRAIDRACK_CAP)")
        sp.add_argument("--workers", type=int, default=1)

    sp = sub.add_parser("validate", help="check the rack axioms")
    sp.add_argument("--rack", required=True)
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("matrix", help="rack counting matrix")
    sp.add_argument("--rack", required=True)
    sp.add_argument("--strands", type=int)
    word_args(sp)
    sp.add_argument("--format", choices=FORMATS, default="perm")
    sp.add_argument("--legend", action="store_true", help="emit '# i = (c1,...,cn)' lines")
    compute_args(sp)
    sp.set_defaults(func=cmd_matrix)

    sp = sub.add_parser("trace", help="colorings of the closure")
    sp.add_argument("--rack", required=True)
    sp.add_argument("--strands", type=int)
    word_args(sp)
    compute_args(sp)
    sp.set_defaults(func=cmd_trace)

    sp = sub.add_parser("closure", help="closure components, optionally with coloring count")
    sp.add_argument("--rack")
    sp.add_argument("--strands", type=int)
    word_args(sp)
    compute_args(sp)
    sp.set_defaults(func=cmd_closure)

    sp = sub.add_parser("pointed", help="pointed rack counting invariant (0 or 1)")
    sp.add_argument("--rack", required=True)
    sp.add_argument("--strands", type=int)
    word_args(sp)
    sp.add_argument("--top", required=True)
    sp.add_argument("--bottom", required=True)
    sp.set_defaults(func=cmd_pointed)

    sp = sub.add_parser("fundamental", help="symbolic bottom labels")
    sp.add_argument("--strands", type=int)
    word_args(sp)
    sp.add_argument("--label-style", choices=("x", "t"), default="x")
    sp.set_defaults(func=cmd_fundamental)

    sp = sub.add_parser("compare", help="compare two braids over a list of racks")
    sp.add_argument("--racks", nargs="+", required=True)
    sp.add_argument("--strands", type=int)
    word_args(sp, "a")
    word_args(sp, "b")
    sp.add_argument("--trace-only", action="store_true")
    compute_args(sp)
    sp.set_defaults(func=cmd_compare)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except SizeCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (BraidRackError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
