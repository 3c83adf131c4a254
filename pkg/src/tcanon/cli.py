"""Command line front end.

Subcommands: ``canon`` (canonical form of an expression), ``equiv`` (all
equivalent signed configurations), ``transversal`` (independent
configurations, one per coset), ``group-info`` (order, base, strong
generators, zero flag).  Tensor declarations come from a line-oriented
spec file:

    # comment
    tensor R rank 4
    gen -(1,2)
    gen +(1,3)(2,4)
    tensor A rank 3
    antisymmetric 1 2 3

Exit codes: 0 success, 1 parse or validation error, 2 enumeration cap
exceeded.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Optional, Sequence

from .chain import DEFAULT_CAP, CapExceeded, SignConflictError, independent_transversal
from .perm import ParseError, format_cycles, parse_cycles
from .tensor import (
    FreeIndexViolation,
    TensorConfiguration,
    TensorSymmetrySpec,
    canonicalize,
    equivalent_configs,
    perm_to_config,
    shortcut_generators,
    symmetry_chain,
)
from .tensor import _base_order

__all__ = ["main", "parse_spec_text", "parse_expression", "format_expression"]

_IDENT = re.compile(r"[A-Za-z_]\w*\Z")
_EXPR = re.compile(r"\s*(-)?\s*([A-Za-z_]\w*)\s*\[(.*)\]\s*\Z", re.S)


def parse_expression(text: str):
    """Parse ``-Name[l1,l2,...]`` into (sign, name, labels)."""
    m = _EXPR.match(text)
    if m is None:
        raise ParseError(f"cannot parse expression {text!r}", 0)
    sign = -1 if m.group(1) else 1
    name = m.group(2)
    body = m.group(3)
    labels = [lab.strip() for lab in body.split(",")]
    if labels == [""]:
        raise ParseError("expression has no indices", m.start(3))
    for lab in labels:
        if not _IDENT.match(lab):
            raise ParseError(f"bad index label {lab!r}", m.start(3))
    return sign, name, tuple(labels)


def format_expression(name: str, sign: int, labels: Sequence[str]) -> str:
    return ("-" if sign < 0 else "") + name + "[" + ",".join(labels) + "]"


def parse_spec_text(text: str) -> dict:
    """Parse tensor declarations; returns name -> TensorSymmetrySpec."""
    specs: dict = {}
    current: Optional[dict] = None

    def finish():
        nonlocal current
        if current is not None:
            specs[current["name"]] = TensorSymmetrySpec(
                current["name"],
                current["rank"],
                tuple(current["gens"]),
                tuple(current["prov"]),
            )
            current = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        head = words[0]
        if head == "tensor":
            if len(words) != 4 or words[2] != "rank":
                raise ParseError(f"line {lineno}: expected 'tensor <name> rank <n>'", 0)
            name = words[1]
            if not _IDENT.match(name):
                raise ParseError(f"line {lineno}: bad tensor name {name!r}", 0)
            try:
                rank = int(words[3])
            except ValueError:
                raise ParseError(f"line {lineno}: bad rank {words[3]!r}", 0) from None
            if rank < 1:
                raise ParseError(f"line {lineno}: rank must be positive", 0)
            finish()
            if name in specs:
                raise ParseError(f"line {lineno}: tensor {name!r} declared twice", 0)
            current = {"name": name, "rank": rank, "gens": [], "prov": []}
        elif head == "gen":
            if current is None:
                raise ParseError(f"line {lineno}: 'gen' before any tensor declaration", 0)
            cycles_text = line[len("gen"):].strip()
            try:
                g = parse_cycles(cycles_text, current["rank"])
            except ParseError as e:
                col = raw.index(cycles_text) + e.position + 1 if cycles_text else 1
                raise ParseError(f"line {lineno}, column {col}: {e.args[0]}", e.position) from None
            current["gens"].append(g)
            current["prov"].append(f"gen {cycles_text}")
        elif head in ("symmetric", "antisymmetric"):
            if current is None:
                raise ParseError(f"line {lineno}: {head!r} before any tensor declaration", 0)
            try:
                slots = [int(w) for w in words[1:]]
            except ValueError:
                raise ParseError(f"line {lineno}: slots must be integers", 0) from None
            try:
                gens = shortcut_generators(head, slots, current["rank"])
            except ValueError as e:
                raise ParseError(f"line {lineno}: {e}", 0) from None
            current["gens"].extend(gens)
            current["prov"].append(f"{head} {' '.join(words[1:])}")
        else:
            raise ParseError(f"line {lineno}: unknown directive {head!r}", 0)
    finish()
    if not specs:
        raise ParseError("spec file declares no tensors", 0)
    return specs


def _parse_base(text: str, rank: int) -> tuple:
    try:
        points = tuple(int(w) for w in text.split(","))
    except ValueError:
        raise ParseError(f"bad base list {text!r}", 0) from None
    if sorted(points) != list(range(1, rank + 1)):
        raise ValueError(f"base {list(points)} is not a permutation of 1..{rank}")
    return points


def _emit_config(name, sign, labels, fmt, out):
    if fmt == "json-lines":
        out.write(json.dumps(
            {"sign": sign, "tensor": name, "indices": list(labels), "zero": False}
        ) + "\n")
    else:
        out.write(format_expression(name, sign, labels) + "\n")


def _run(args, out) -> int:
    with open(args.spec, "r", encoding="utf-8") as fh:
        specs = parse_spec_text(fh.read())
    sign, name, labels = parse_expression(args.expression)
    spec = specs.get(name)
    if spec is None:
        raise ValueError(f"tensor {name!r} is not declared in {args.spec}")
    base = _parse_base(args.base, spec.rank) if args.base else None
    fmt = args.format

    if args.command == "canon":
        config = TensorConfiguration(name, labels, sign)
        form = canonicalize(spec, config, base)
        if form.zero:
            if fmt == "json-lines":
                out.write(json.dumps(
                    {"sign": 1, "tensor": name, "indices": [], "zero": True}
                ) + "\n")
            else:
                out.write("0\n")
        else:
            _emit_config(name, form.sign, form.labels, fmt, out)
        return 0

    if args.command == "equiv":
        config = TensorConfiguration(name, labels, sign)
        for c in equivalent_configs(spec, config, args.cap):
            _emit_config(name, c.sign, c.labels, fmt, out)
        return 0

    if args.command == "transversal":
        chain = symmetry_chain(spec, base)
        order = _base_order(spec, chain, base)
        reps = independent_transversal(chain, order, args.cap)
        std = sorted(labels)
        for s in reps:
            c = perm_to_config(spec, s, std)
            _emit_config(name, c.sign, c.labels, fmt, out)
        return 0

    # group-info
    chain = symmetry_chain(spec, base)
    strong = [format_cycles(g) for g in chain.strong_generators]
    if fmt == "json-lines":
        out.write(json.dumps({
            "tensor": name,
            "rank": spec.rank,
            "order": chain.order(),
            "base": list(chain.base),
            "strong_generators": strong,
            "zero": chain.sign_residue,
        }) + "\n")
    else:
        out.write(f"tensor: {name}\n")
        out.write(f"rank: {spec.rank}\n")
        out.write(f"order: {chain.order()}\n")
        out.write("base: " + ",".join(str(b) for b in chain.base) + "\n")
        out.write("strong generators: " + ", ".join(strong) + "\n")
        out.write("identically zero: " + ("yes" if chain.sign_residue else "no") + "\n")
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="tcanon",
        description="Canonicalize tensor expressions with permutation symmetries.",
        epilog="Put -- before an expression that starts with a minus sign: "
               "tcanon canon --spec tensors.spec -- '-T[b,a]'",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for cmd, help_text in [
        ("canon", "print the canonical form of an expression"),
        ("equiv", "print every equivalent signed configuration"),
        ("transversal", "print one independent configuration per coset"),
        ("group-info", "print order, base and strong generators"),
    ]:
        p = sub.add_parser(cmd, help=help_text)
        p.add_argument("--spec", required=True, help="tensor declaration file")
        p.add_argument("--base", help="comma-separated point order, e.g. 1,3,2,4")
        p.add_argument("--format", choices=["text", "json-lines"], default="text")
        p.add_argument("--cap", type=int, default=DEFAULT_CAP,
                       help=f"refuse enumerations larger than this (default {DEFAULT_CAP})")
        p.add_argument("expression", help="tensor expression, e.g. '-T[b,a,c]'")
    args = parser.parse_args(argv)

    try:
        return _run(args, sys.stdout)
    except CapExceeded as e:
        print(f"tcanon: {e}", file=sys.stderr)
        return 2
    except (ParseError, FreeIndexViolation, SignConflictError, ValueError, OSError) as e:
        print(f"tcanon: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
