"""Command-line front end.

Exit codes: 0 when everything checked out, 1 when a search found a
counterexample (or a golden/diagram check failed), 2 for malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from fintop import golden
from fintop.core import FiniteSpace, InvalidSpaceError, canonical_order, format_space, parse_space
from fintop.lab import BoundExceededError, ClaimSpec, blc_elc_independence, find_counterexample
from fintop.local import (
    DIAGRAM_ARROWS,
    LCVariant,
    characterize_alc,
    characterize_alo,
    lc_family,
    lc_mask,
)
from fintop.variants import (
    Variant,
    variant_closed_family,
    variant_open_family,
    variant_open_mask,
)


class UsageError(Exception):
    pass


def _load(path: str) -> FiniteSpace:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_space(text)
    except InvalidSpaceError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _cmd_check(args, out) -> int:
    out.write(format_space(_load(args.file)))
    return 0


def _resolve_family(space: FiniteSpace, symbol: str, lc: bool):
    try:
        if lc:
            lcv = LCVariant.parse(symbol)
            return lcv.value, lc_family(space, lcv)
        v = Variant.parse(symbol)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if symbol.strip().lower() == v.closed_symbol.lower():
        return v.closed_symbol, variant_closed_family(space, v)
    return v.value, variant_open_family(space, v)


def _cmd_families(args, out) -> int:
    space = _load(args.file)
    requested = [(s, False) for s in args.variant] + [(s, True) for s in args.lc]
    if not requested:
        requested = [(v.value, False) for v in Variant] + [(l.value, True) for l in LCVariant]
    blocks = [_resolve_family(space, symbol, lc) for symbol, lc in requested]
    for label, fam in blocks:
        if len(blocks) > 1:
            out.write(f"# {label}\n")
        out.write(space.format_family(fam) + "\n")
    return 0


def _flag(b: bool) -> str:
    return "true" if b else "false"


def _cmd_classify(args, out) -> int:
    space = _load(args.file)
    try:
        a = space.parse_subset(args.set)
    except InvalidSpaceError as exc:
        raise UsageError(f"--set: {exc}") from None
    out.write(f"set: {space.format_subset(a)}\n")
    for v in Variant:
        out.write(f"{v.value}: {_flag(bool(variant_open_mask(space, v)[a]))}\n")
    for lcv in LCVariant:
        out.write(f"{lcv.value}: {_flag(bool(lc_mask(space, lcv)[a]))}\n")
    out.write("a-locally closed forms:\n")
    out.write(_indent(characterize_alc(space, a).format(space)) + "\n")
    out.write("a-locally open forms:\n")
    out.write(_indent(characterize_alo(space, a).format(space).replace(" P=", " Q=")) + "\n")
    return 0


def _indent(text: str) -> str:
    return "\n".join("  " + line for line in text.splitlines())


def _cmd_diagram(args, out) -> int:
    space = _load(args.file)
    columns = [(v.value, variant_open_mask(space, v)) for v in Variant]
    columns += [(l.value, lc_mask(space, l)) for l in LCVariant]
    width = max(len(space.format_subset(space.full)), 3)
    out.write("set".ljust(width) + " " + " ".join(label for label, _ in columns) + "\n")
    for a in canonical_order(space.n):
        cells = " ".join(("1" if mask[a] else "0").rjust(len(label)) for label, mask in columns)
        out.write(space.format_subset(int(a)).ljust(width) + " " + cells + "\n")
    ok = True
    for src, dst in DIAGRAM_ARROWS:
        holds = bool((~lc_mask(space, src) | lc_mask(space, dst)).all())
        ok &= holds
        out.write(f"{src.value} => {dst.value}: {'holds' if holds else 'FAILS'}\n")
    out.write("all arrows hold\n" if ok else "some arrows fail\n")
    return 0 if ok else 1


def _cmd_search(args, out) -> int:
    if args.workers < 1:
        raise UsageError("--workers must be at least 1")
    try:
        if args.question_3_10:
            records = list(blc_elc_independence(args.points, args.workers))
            payload = [r.to_dict() for r in records]
        else:
            claim = ClaimSpec.parse(args.claim)
            records = [find_counterexample(claim, args.points, args.workers)]
            payload = records[0].to_dict()
    except (ValueError, BoundExceededError) as exc:
        raise UsageError(str(exc)) from None
    out.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
    return 1 if any(r.found for r in records) else 0


def _cmd_verify_paper(args, out) -> int:
    results = golden.run_golden()
    for r in results:
        if r.ok:
            out.write(f"ok   {r.name}\n")
        else:
            out.write(f"FAIL {r.name}\n{r.diff()}\n")
    bad = sum(not r.ok for r in results)
    out.write(f"{len(results) - bad}/{len(results)} examples match\n")
    return 0 if bad == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fintop", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a space file and print its canonical form")
    p.add_argument("file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("families", help="print families in canonical form")
    p.add_argument("file")
    p.add_argument("--variant", action="append", default=[], metavar="V", help="e.g. aO, SO, aC")
    p.add_argument("--lc", action="append", default=[], metavar="L", help="e.g. LC, aLC, eLC")
    p.set_defaults(func=_cmd_families)

    p = sub.add_parser("classify", help="membership of one subset in every family")
    p.add_argument("file")
    p.add_argument("--set", required=True, help='set literal such as "{a,c}"')
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("diagram", help="membership matrix and implication arrows")
    p.add_argument("file")
    p.set_defaults(func=_cmd_diagram)

    p = sub.add_parser("search", help="exhaustive counterexample search")
    p.add_argument("--points", type=int, required=True, metavar="N", help="largest space size searched")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--claim", metavar="SRC=>DST")
    group.add_argument("--question-3-10", action="store_true", help="search BLC=>eLC and eLC=>BLC")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("verify-paper", help="recompute the worked examples against stored output")
    p.set_defaults(func=_cmd_verify_paper)
    return parser


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"fintop {args.command}: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
