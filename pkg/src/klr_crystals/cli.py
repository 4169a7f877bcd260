"""Command line front end: graph export, unfolding checks, shuffles,
one-dimensional classification, and the verification suites.

Exit codes: 0 success, 1 a verification suite failed, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cartan import InvalidDatumError
from .crystal_core import build_graph, export_graph
from .highest_weight import hw_crystal
from .klr_char import Character, LaurentPoly, onedim_classify, qshuffle
from .verify import (
    verify_axioms,
    verify_case_split,
    verify_counts,
    verify_iso,
    verify_serre,
    verify_trivial_family,
)

SUITES = {
    "axioms": lambda ell, hw, depth: verify_axioms(ell, hw, depth),
    "iso": lambda ell, hw, depth: verify_iso(ell, hw, depth),
    "casesplit": lambda ell, hw, depth: verify_case_split(ell, hw, depth),
    "trivial": lambda ell, hw, depth: verify_trivial_family(ell, depth),
    "serre": lambda ell, hw, depth: verify_serre(ell, depth),
    "counts": lambda ell, hw, depth: verify_counts(ell, depth),
}


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="klr-crystals",
        description="exact crystal graphs and character checks over the cyclic datum",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    graph = sub.add_parser("graph", help="emit a truncated crystal graph")
    graph.add_argument("--ell", type=int, required=True)
    graph.add_argument("--hw", type=int, required=True)
    graph.add_argument("--model", choices=("restricted", "regular"), default="restricted")
    graph.add_argument("--depth", type=int, required=True)
    graph.add_argument("--format", choices=("dot", "json"), default="dot")
    graph.add_argument("--out")

    iso = sub.add_parser("iso", help="check the unfolding morphisms")
    iso.add_argument("--ell", type=int, required=True)
    iso.add_argument("--hw", type=int, required=True)
    iso.add_argument("--depth", type=int, required=True)
    iso.add_argument("--direction", choices=("row", "column", "both"), default="both")
    iso.add_argument("--format", choices=("json",), default="json")
    iso.add_argument("--out")

    shuffle = sub.add_parser("shuffle", help="shuffle two residue sequences")
    shuffle.add_argument("--ell", type=int, required=True)
    shuffle.add_argument("--left", required=True)
    shuffle.add_argument("--right", required=True)
    shuffle.add_argument("--q1", action="store_true")
    shuffle.add_argument("--out")

    onedim = sub.add_parser("onedim", help="list one-dimensional residue sequences")
    onedim.add_argument("--ell", type=int, required=True)
    onedim.add_argument("--len", type=int, required=True)
    onedim.add_argument("--out")

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("--suite", choices=(*SUITES, "all"), required=True)
    verify.add_argument("--ell", type=int, required=True)
    verify.add_argument("--hw", type=int, default=0)
    verify.add_argument("--depth", type=int, required=True)
    verify.add_argument("--format", choices=("json",), default="json")
    verify.add_argument("--out")
    return parser


def _parse_residues(text, ell):
    seq = []
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        try:
            seq.append(int(piece) % ell)
        except ValueError:
            raise InvalidDatumError(f"residues must be integers, got {piece!r}")
    return tuple(seq)


def _dispatch(args):
    """Return (payload bytes, failed flag)."""
    if args.command == "graph":
        B = hw_crystal(args.ell, args.hw, args.model)
        g = build_graph(B, [()], args.depth)
        return export_graph(g, args.format), False

    if args.command == "iso":
        rep = verify_iso(args.ell, args.hw, args.depth, direction=args.direction)
        return rep.to_json_bytes(), not rep.ok()

    if args.command == "shuffle":
        left = _parse_residues(args.left, args.ell)
        right = _parse_residues(args.right, args.ell)
        c = qshuffle(
            Character(args.ell, {left: LaurentPoly.one()}),
            Character(args.ell, {right: LaurentPoly.one()}),
        )
        if args.q1:
            c = Character(
                args.ell,
                {s: LaurentPoly({0: p.at_q1()}) for s, p in c.terms.items()},
            )
        return c.to_json_bytes(), False

    if args.command == "onedim":
        seqs = sorted(onedim_classify(args.ell, getattr(args, "len")))
        text = "".join(",".join(str(x) for x in seq) + "\n" for seq in seqs)
        return text.encode("utf-8"), False

    reports = []
    names = list(SUITES) if args.suite == "all" else [args.suite]
    for name in names:
        reports.append(SUITES[name](args.ell, args.hw, args.depth))
    failed = any(not rep.ok() for rep in reports)
    if args.suite == "all":
        doc = [rep.to_doc() for rep in reports]
        payload = (json.dumps(doc, indent=2, ensure_ascii=False) + "\n").encode("utf-8")
    else:
        payload = reports[0].to_json_bytes()
    return payload, failed


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        payload, failed = _dispatch(args)
    except InvalidDatumError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out = getattr(args, "out", None)
    if out:
        with open(out, "wb") as handle:
            handle.write(payload)
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.buffer.flush()
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
