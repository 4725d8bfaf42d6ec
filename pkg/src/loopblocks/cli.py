"""Command-line front door: the library over JSON (or plain text).

Subcommands mirror the library operations one-to-one::

    loopblocks info   --type A3 --m 2
    loopblocks fold   --type A3 --m 2 --poly '{"support":[...]}'
    loopblocks fiber  --type A3 --m 2 --twisted '[{"node":1,"roots":[...]}]'
    loopblocks char   --type A3 --m 2 --poly @poly.json
    loopblocks blocks --type A3 --m 2 --p @p.json --q @q.json
    loopblocks chain  --type A2 --from 1,1 --to 0,0 [--bound N]
    loopblocks selftest

Every response is an envelope ``{"command", "context", "result"}`` where the
context echoes the resolved folding (type, m, folded label, orbit table).
``--format text`` renders the same structure as indented text.  Exit codes:
0 success, 1 self-test failure, 2 invalid input, 3 sound refusal
(NoSuchAutomorphism, NotInRootLattice), 4 search bound exhausted.

Weights are comma-separated integers on the command line and JSON integer
arrays in payloads; polynomials are JSON, inline or ``@file``.  Node numbers
in twisted payloads are 1-based orbit representatives.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import folding, linkage, spectral, twisted
from .drinfeld import Coordinate, poly_from_pairs
from .errors import (FixedNodeSupport, InvalidType, LoopBlocksError,
                     MalformedTwisted, NonDominant, NoSuchAutomorphism,
                     NotFoundWithinBound, NotInRootLattice, ParityViolation)
from .rootsys import build_root_system
from .selfcheck import run_selftest
from .twisted import TwistedRoot, check_twisted

EXIT_OK = 0
EXIT_SELFTEST_FAILED = 1
EXIT_INVALID_INPUT = 2
EXIT_REFUSAL = 3
EXIT_BOUND_EXHAUSTED = 4

_INVALID = (InvalidType, NonDominant, FixedNodeSupport, ParityViolation,
            MalformedTwisted)
_REFUSAL = (NoSuchAutomorphism, NotInRootLattice)


# ---------------------------------------------------------------------------
# Parsing helpers
# ---------------------------------------------------------------------------

def _load_json_arg(text, what):
    """Inline JSON or @file; raises InvalidType with a pointed message."""
    if text.startswith("@"):
        try:
            with open(text[1:], "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InvalidType(f"cannot read {what} file {text[1:]!r}: {exc}")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidType(f"{what} is not valid JSON: {exc}")


def _parse_weight_arg(text, what):
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise InvalidType(f"{what} must be comma-separated integers, got {text!r}")


def _require(cond, message):
    if not cond:
        raise InvalidType(message)


def poly_from_json(data, m):
    """{"support":[{"weight":[...],"coord":{"sym":...,"zeta":...}}]} -> poly."""
    _require(isinstance(data, dict) and "support" in data,
             'a polynomial is an object with a "support" list')
    _require(isinstance(data["support"], list), '"support" must be a list')
    pairs = []
    for entry in data["support"]:
        _require(isinstance(entry, dict) and "weight" in entry and "coord" in entry,
                 'each support entry needs "weight" and "coord"')
        w = entry["weight"]
        _require(isinstance(w, list) and all(isinstance(x, int) for x in w),
                 '"weight" must be an integer array')
        coord = entry["coord"]
        _require(isinstance(coord, dict) and isinstance(coord.get("sym"), str)
                 and isinstance(coord.get("zeta", 0), int),
                 '"coord" must be {"sym": str, "zeta": int}')
        pairs.append((tuple(w), Coordinate(coord["sym"], coord.get("zeta", 0))))
    return poly_from_pairs(pairs, m=m)


def poly_to_json(p):
    return {
        "support": [
            {"weight": list(w), "coord": {"sym": c.sym, "zeta": c.zeta}}
            for c, w in p.support
        ]
    }


def twisted_from_json(fs, data):
    """[{"node":1,"roots":[{"sym":...,"zeta":...,"mult":...}]}] -> TwistedPoly."""
    _require(isinstance(data, list),
             "a twisted polynomial is a list of {node, roots} objects")
    entries = {}
    for comp in data:
        _require(isinstance(comp, dict) and "node" in comp and "roots" in comp,
                 'each component needs "node" and "roots"')
        node = comp["node"]
        _require(isinstance(node, int) and 1 <= node <= fs.ambient.rank,
                 f'"node" must be in 1..{fs.ambient.rank}, got {node!r}')
        bucket = entries.setdefault(node - 1, {})
        _require(isinstance(comp["roots"], list), '"roots" must be a list')
        for root in comp["roots"]:
            _require(isinstance(root, dict) and isinstance(root.get("sym"), str),
                     'each root needs "sym" (and optional "zeta", "mult")')
            mult = root.get("mult", 1)
            zeta = root.get("zeta", 0)
            _require(isinstance(mult, int) and isinstance(zeta, int),
                     '"zeta" and "mult" must be integers')
            if mult <= 0:
                raise MalformedTwisted(f"multiplicity {mult} at node {node}")
            r = TwistedRoot(root["sym"], zeta % fs.m)
            bucket[r] = bucket.get(r, 0) + mult
    return check_twisted(fs, twisted._make(entries))


def twisted_to_json(p):
    return [
        {
            "node": node + 1,
            "roots": [
                {"sym": r.sym, "zeta": r.zeta, "mult": mu} for r, mu in roots
            ],
        }
        for node, roots in p.comps
    ]


def char_to_json(x):
    return [
        {"coord": {"sym": c.sym, "zeta": c.zeta}, "coset": list(v.residues)}
        for c, v in x.support
    ]


def label_to_json(label):
    return {"folded": label.folded, "character": char_to_json(label.canon)}


def chain_to_json(c):
    return {
        "steps": [list(s) for s in c.steps],
        "directions": list(c.directions),
    }


def _context(fs):
    return {
        "type": str(fs.ambient.label),
        "m": fs.m,
        "folded": str(fs.folded.label),
        "is_A2n": fs.is_A2n,
        "orbits": [[i + 1 for i in orbit] for orbit in fs.orbits],
    }


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

def _render_text(obj, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for key, value in obj.items():
            if isinstance(value, (dict, list)) and value:
                lines.append(f"{pad}{key}:")
                lines.extend(_render_text(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(value)}")
    elif isinstance(obj, list):
        if all(not isinstance(v, (dict, list)) for v in obj):
            lines.append(f"{pad}{', '.join(_scalar(v) for v in obj)}")
        else:
            for value in obj:
                if isinstance(value, (dict, list)) and value:
                    lines.append(f"{pad}-")
                    lines.extend(_render_text(value, indent + 1))
                else:
                    lines.append(f"{pad}- {_scalar(value)}")
    else:
        lines.append(f"{pad}{_scalar(obj)}")
    return lines


def _scalar(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return "[]"
    if isinstance(value, dict):
        return "{}"
    return str(value)


def _emit(envelope, fmt, out):
    if fmt == "json":
        out.write(json.dumps(envelope, indent=2, sort_keys=False) + "\n")
    else:
        out.write("\n".join(_render_text(envelope)) + "\n")


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def _folding_of(args):
    return folding.build_folding(args.type, args.m)


def cmd_info(args):
    fs = _folding_of(args)
    result = {
        "folded": str(fs.folded.label),
        "orbits": [[i + 1 for i in orbit] for orbit in fs.orbits],
        "stabilizers": [fs.m // len(orbit) for orbit in fs.orbits],
        "ambient_invariant_factors": list(fs.ambient.invariant_factors),
        "folded_invariant_factors": list(fs.folded.invariant_factors),
    }
    return fs, result


def cmd_fold(args):
    fs = _folding_of(args)
    p = poly_from_json(_load_json_arg(args.poly, "--poly"), fs.m)
    return fs, twisted_to_json(twisted.fold(fs, p))


def cmd_fiber(args):
    fs = _folding_of(args)
    tp = twisted_from_json(fs, _load_json_arg(args.twisted, "--twisted"))
    members = sorted(twisted.fiber(fs, tp), key=lambda q: q.support)
    return fs, [poly_to_json(q) for q in members]


def cmd_char(args):
    fs = _folding_of(args)
    p = poly_from_json(_load_json_arg(args.poly, "--poly"), fs.m)
    x = spectral.char_of(fs.ambient, p)
    return fs, {
        "character": char_to_json(x),
        "symmetrized": char_to_json(spectral.symmetrize(fs, x)),
    }


def cmd_blocks(args):
    fs = _folding_of(args)
    p = twisted_from_json(fs, _load_json_arg(args.p, "--p"))
    q = twisted_from_json(fs, _load_json_arg(args.q, "--q"))
    lp = spectral.block_label(fs, p)
    lq = spectral.block_label(fs, q)
    return fs, {
        "same_block": lp == lq,
        "label_p": label_to_json(lp),
        "label_q": label_to_json(lq),
    }


def cmd_chain(args):
    rs = build_root_system(args.type)
    lam = _parse_weight_arg(args.src, "--from")
    mu = _parse_weight_arg(args.dst, "--to")
    if args.bound is not None and args.bound < 0:
        raise InvalidType(f"--bound must be nonnegative, got {args.bound}")
    # linkage_chain returns steps running mu -> lam; --from is the start.
    c = linkage.linkage_chain(rs, mu, lam, bound=args.bound)
    assert linkage.verify_chain(rs, c)
    return {"type": str(rs.label)}, chain_to_json(c)


def cmd_selftest(args):
    sections = []
    passed = run_selftest(report=lambda name, ok: sections.append(
        {"name": name, "ok": ok}))
    return None, {"passed": passed, "sections": sections}


# ---------------------------------------------------------------------------
# Dispatch
# ---------------------------------------------------------------------------

def _build_parser():
    parser = argparse.ArgumentParser(
        prog="loopblocks",
        description="Block decomposition for twisted loop algebra modules.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_m=True):
        p.add_argument("--type", required=True, help='Cartan label, e.g. "A3"')
        if with_m:
            p.add_argument("--m", type=int, required=True,
                           help="order of the twist (2 or 3)")
        p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("info", help="folding summary: orbits, invariants")
    common(p)

    p = sub.add_parser("fold", help="fold an untwisted polynomial")
    common(p)
    p.add_argument("--poly", required=True, help="DrinfeldPoly JSON or @file")

    p = sub.add_parser("fiber", help="all preimages of a twisted polynomial")
    common(p)
    p.add_argument("--twisted", required=True, help="TwistedPoly JSON or @file")

    p = sub.add_parser("char", help="spectral character and its symmetrization")
    common(p)
    p.add_argument("--poly", required=True, help="DrinfeldPoly JSON or @file")

    p = sub.add_parser("blocks", help="compare the blocks of two twisted polys")
    common(p)
    p.add_argument("--p", required=True, help="TwistedPoly JSON or @file")
    p.add_argument("--q", required=True, help="TwistedPoly JSON or @file")

    p = sub.add_parser("chain", help="linkage chain between dominant weights")
    common(p, with_m=False)
    p.add_argument("--from", dest="src", required=True,
                   help="source weight, comma-separated")
    p.add_argument("--to", dest="dst", required=True,
                   help="target weight, comma-separated")
    p.add_argument("--bound", type=int, default=None,
                   help="box slack for the search (default: automatic)")

    p = sub.add_parser("selftest", help="run the oracle cross-check battery")
    p.add_argument("--format", choices=("json", "text"), default="text")
    return parser


_HANDLERS = {
    "info": cmd_info,
    "fold": cmd_fold,
    "fiber": cmd_fiber,
    "char": cmd_char,
    "blocks": cmd_blocks,
    "chain": cmd_chain,
    "selftest": cmd_selftest,
}


def main(argv=None):
    args = _build_parser().parse_args(argv)
    out = sys.stdout
    try:
        context, result = _HANDLERS[args.command](args)
    except _INVALID as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except _REFUSAL as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_REFUSAL
    except NotFoundWithinBound as exc:
        print(f"error: NotFoundWithinBound: {exc}", file=sys.stderr)
        return EXIT_BOUND_EXHAUSTED

    envelope = {"command": args.command}
    if context is not None:
        if isinstance(context, dict):
            envelope["context"] = context
        else:
            envelope["context"] = _context(context)
    envelope["result"] = result
    _emit(envelope, args.format, out)

    if args.command == "selftest" and not result["passed"]:
        return EXIT_SELFTEST_FAILED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
