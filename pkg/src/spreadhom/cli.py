"""Command-line driver: validate files, print invariants, compare modules.

Exit codes: 0 ok; 1 validation/parse failure; 2 well-posed but undecided
(truncated resolution, cyclic Hom matrix, enumeration cap); 3 unsupported
input (e.g. a barcode request off a path-shaped poset).
"""
from __future__ import annotations

import argparse
import itertools
import json
import os
import sys

from .approx import check_family, resolve
from .errors import (
    CapExceededError,
    FileFormatError,
    HomMatrixSingularError,
    NotTypeAError,
    ResolutionTruncatedError,
    SpreadHomError,
)
from .field import DEFAULT_PRIME, PrimeField
from .files import load_family, load_module, load_poset
from .hom import hom_dim
from .invariants import (
    barcode,
    class_via_hom_matrix,
    class_via_resolution,
    compare,
    generalized_rank,
    rank_invariant,
    signed_diagram,
)

INVARIANT_KINDS = ("dimvec", "rank", "class", "dimhom", "genrank", "diagram", "barcode", "resolve")
COMPARE_KINDS = ("dimvec", "rank", "class", "dimhom", "genrank", "diagram")
FORMAT_TAG = "spreadhom.v1"


def _pmap(fn, items, jobs: int):
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items))


class Reporter:
    def __init__(self, jsonl: bool, command: str, options: dict):
        self.jsonl = jsonl
        if jsonl:
            head = {"record": "header", "format": FORMAT_TAG, "command": command}
            head.update(options)
            print(json.dumps(head, sort_keys=True))

    def record(self, text: str, **payload):
        if self.jsonl:
            print(json.dumps(payload, sort_keys=True))
        else:
            print(text)


def _load_workspace(args, need_family=False, need_collection=False):
    field = PrimeField(args.prime)
    module, poset, _ = load_module(args.module, field)
    family = None
    if need_family:
        if not args.family:
            raise FileFormatError(f"kind {args.kind!r} needs --family")
        family = load_family(args.family, poset, args.cap)
    if need_collection:
        if not args.collection:
            raise FileFormatError(f"kind {args.kind!r} needs --collection")
        family = load_family(args.collection, poset, args.cap)
    return field, module, poset, family


def cmd_validate(args) -> int:
    poset = load_poset(args.poset)
    print(f"ok poset {args.poset}: {poset.n} elements, {len(poset.covers)} covers")
    field = PrimeField(args.prime)
    for path in args.modules:
        module, _, _ = load_module(path, field, poset)
        dims = {poset.label(a): d for a, d in enumerate(module.dims) if d}
        print(f"ok module {path}: dims {dims}")
    return 0


def cmd_invariant(args) -> int:
    kind = args.kind
    rep_options = {"kind": kind, "module": args.module, "prime": args.prime}
    need_family = kind in ("class", "dimhom", "resolve")
    need_collection = kind in ("genrank", "diagram")
    field, module, poset, family = _load_workspace(args, need_family, need_collection)
    rep = Reporter(args.jsonl, "invariant", rep_options)

    if kind == "dimvec":
        dims = {poset.label(a): int(d) for a, d in enumerate(module.dims)}
        rep.record(f"dimension vector: {dims}", record="invariant", kind=kind, dims=dims)
        return 0

    if kind == "rank":
        rk = rank_invariant(module)
        entries = [
            [poset.label(a), poset.label(b), int(r)]
            for (a, b), r in sorted(rk.entries.items())
        ]
        rep.record(rk.table(), record="invariant", kind=kind, entries=entries)
        return 0

    if kind == "class":
        if check_family(family).hom_acyclic:
            cls = class_via_hom_matrix(family, module)
            route = "hom_matrix"
        else:
            cls = class_via_resolution(family, module, args.max_depth)
            route = "resolution"
        rep.record(
            f"class ({route}): {cls.render()}",
            record="invariant", kind=kind, route=route, coeffs=cls.nonzero(),
        )
        return 0

    if kind == "dimhom":
        mods = family.member_modules(field)
        values = _pmap(lambda r: hom_dim(r, module), mods, args.jobs)
        shown = {s.render(): int(v) for s, v in zip(family.members, values)}
        text = "\n".join(f"{k}: {v}" for k, v in shown.items())
        rep.record(text, record="invariant", kind=kind, values=shown)
        return 0

    if kind == "genrank":
        values = _pmap(lambda s: generalized_rank(module, s), family.members, args.jobs)
        shown = {s.render(): int(v) for s, v in zip(family.members, values)}
        text = "\n".join(f"{k}: {v}" for k, v in shown.items())
        rep.record(text, record="invariant", kind=kind, values=shown)
        return 0

    if kind == "diagram":
        diag = signed_diagram(module, family.members)
        rep.record(
            f"signed diagram: {diag.render()}",
            record="invariant", kind=kind, coeffs=diag.nonzero(),
        )
        return 0

    if kind == "barcode":
        cls = barcode(module, args.cap)
        rep.record(f"barcode: {cls.render()}", record="invariant", kind=kind, coeffs=cls.nonzero())
        return 0

    # resolve
    res = resolve(family, module, args.max_depth)
    term_dicts = []
    lines = []
    for k, term in enumerate(res.terms):
        shown = {
            s.render(): int(c) for s, c in zip(family.members, term) if c
        }
        term_dicts.append(shown)
        lines.append(f"term {k}: {shown if shown else '0'}")
    lines.append(f"status: {res.status}")
    if res.periodicity is not None:
        lines.append(f"periodicity hint: kernels {res.periodicity[0]} and {res.periodicity[1]} look alike")
    rep.record(
        "\n".join(lines),
        record="invariant", kind=kind, terms=term_dicts, status=res.status,
        periodicity=list(res.periodicity) if res.periodicity else None,
    )
    return 0 if res.status == "finite" else 2


def cmd_compare(args) -> int:
    field = PrimeField(args.prime)
    if args.batch:
        paths = sorted(
            os.path.join(args.batch, f)
            for f in os.listdir(args.batch)
            if f.endswith((".yaml", ".yml"))
        )
        pairs = list(itertools.combinations(paths, 2))
    else:
        if not args.module_b:
            raise FileFormatError("compare needs two module files (or --batch DIR)")
        pairs = [(args.module_a, args.module_b)]
    rep = Reporter(args.jsonl, "compare", {"kind": args.kind, "prime": args.prime})
    for path_a, path_b in pairs:
        module_a, poset, _ = load_module(path_a, field)
        module_b, _, _ = load_module(path_b, field, poset)
        kwargs = {}
        if args.kind in ("class", "dimhom"):
            if not args.family:
                raise FileFormatError(f"kind {args.kind!r} needs --family")
            kwargs["family"] = load_family(args.family, poset, args.cap)
        if args.kind in ("genrank", "diagram"):
            if not args.collection:
                raise FileFormatError(f"kind {args.kind!r} needs --collection")
            kwargs["collection"] = load_family(args.collection, poset, args.cap).members
        verdict = compare(args.kind, module_a, module_b, max_depth=args.max_depth, **kwargs)
        rep.record(
            f"{path_a} vs {path_b}: {verdict}",
            record="compare", kind=args.kind, a=path_a, b=path_b, verdict=verdict,
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spreadhom",
        description="Invariants of persistence modules over finite posets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--prime", type=int, default=DEFAULT_PRIME,
                       help=f"field characteristic (default {DEFAULT_PRIME})")
        p.add_argument("--max-depth", type=int, default=32, dest="max_depth",
                       help="resolution depth limit (default 32)")
        p.add_argument("--cap", type=int, default=100_000,
                       help="spread enumeration cap (default 100000)")
        p.add_argument("--jobs", type=int, default=1,
                       help="worker threads for per-member evaluations")
        p.add_argument("--jsonl", action="store_true",
                       help="emit line-delimited records instead of text")

    v = sub.add_parser("validate", help="parse and validate poset/module files")
    v.add_argument("poset")
    v.add_argument("modules", nargs="*")
    common(v)
    v.set_defaults(fn=cmd_validate)

    i = sub.add_parser("invariant", help="compute one invariant of one module")
    i.add_argument("kind", choices=INVARIANT_KINDS)
    i.add_argument("module")
    i.add_argument("--family", help="builtin family name or family file")
    i.add_argument("--collection", help="spread collection (same format as --family)")
    common(i)
    i.set_defaults(fn=cmd_invariant)

    c = sub.add_parser("compare", help="equal/distinguished verdict for module pairs")
    c.add_argument("kind", choices=COMPARE_KINDS)
    c.add_argument("module_a", nargs="?")
    c.add_argument("module_b", nargs="?")
    c.add_argument("--batch", help="directory of module files; compares all pairs")
    c.add_argument("--family", help="family for class/dimhom")
    c.add_argument("--collection", help="spread collection for genrank/diagram")
    common(c)
    c.set_defaults(fn=cmd_compare)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ResolutionTruncatedError as e:
        print(f"undecided: {e}", file=sys.stderr)
        if e.terms:
            print(f"partial terms: {[list(t) for t in e.terms]}", file=sys.stderr)
        return 2
    except (HomMatrixSingularError, CapExceededError) as e:
        print(f"undecided: {e}", file=sys.stderr)
        return 2
    except NotTypeAError as e:
        print(f"unsupported: {e}", file=sys.stderr)
        return 3
    except (FileFormatError, SpreadHomError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
