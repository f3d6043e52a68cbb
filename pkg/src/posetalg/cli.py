"""Command-line interface.

Exit status is 0 when the requested property or round-trip holds, 1 when it
fails, and 2 for unreadable or unsuitable input.
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import enumeration as en
from .complemented import (
    DEFAULT_SUBSET_CAP,
    distributivity_witness,
    find_complementations,
    sym_diff_table,
)
from .cones import max_l, meets_exist, min_u
from .dual import boolean_from_dual, check_dual_axioms, dual_from_boolean, dual_roundtrip
from .errors import AxiomsFail, ConsistencyFail, KindMismatch, MissingComplement, NotBoolean, PosetError
from .io import PosetFile, StructureFile, read_any, resolve
from .operator_structure import (
    check_axioms,
    poset_from_structure,
    roundtrip_structure,
    structure_from_poset,
)
from .sheffer import check_sheffer_axioms, poset_from_sheffer, sheffer_from_poset, sheffer_roundtrip
from .tables import OperatorTable

OK, FAIL, INPUT_ERROR = 0, 1, 2

CLASSES = ("poset", "bounded", "complemented", "distributive", "boolean", "lattice")
TABLE_OPS = ("sd", "maxl", "minu", "sheffer")
STRUCTURES = ("operator", "sheffer", "dual")


def _load(path: str):
    return read_any(resolve(path))


def _poset_file(path: str) -> PosetFile:
    f = _load(path)
    if not isinstance(f, PosetFile):
        raise KindMismatch(f"{path} holds a structure, not a poset")
    return f


def _complemented(pf: PosetFile):
    if pf.complement is None:
        raise MissingComplement("this operation needs a 'complement:' section")
    return pf.complemented()


# check ----------------------------------------------------------------------


def cmd_check(args) -> int:
    pf = _poset_file(args.file)
    p = pf.poset()
    cls = args.cls
    verdict, detail = True, ""
    if cls == "bounded" or cls == "lattice":
        verdict = p.is_bounded()
        detail = "" if verdict else "no bottom or no top"
        if verdict and cls == "lattice":
            verdict = meets_exist(p)
            detail = "" if verdict else "some pair has no meet or no join"
    elif cls in ("distributive", "boolean", "complemented"):
        if cls != "distributive":
            if not p.is_bounded():
                verdict, detail = False, "no bottom or no top"
            elif pf.complement is None:
                comps = find_complementations(p)
                verdict = bool(comps)
                detail = f"{len(comps)} complementation(s) found" if comps else "no complementation exists"
        if verdict and cls != "complemented":
            w = distributivity_witness(p)
            if w is not None:
                verdict = False
                x, y, z = (p.names[a] for a in w.args)
                detail = (f"not distributive at ({x},{y},{z}): L(U({x},{y}),{z}) = {p.render(w.lhs)}, "
                          f"LU(L({x},{z}),L({y},{z})) = {p.render(w.rhs)}")
    print(f"{args.file}: {cls}: {'yes' if verdict else 'no'}" + (f" ({detail})" if detail else ""))
    return OK if verdict else FAIL


# table ----------------------------------------------------------------------


def build_table(pf: PosetFile, op: str) -> OperatorTable:
    if op == "sd":
        return sym_diff_table(_complemented(pf))
    if op == "sheffer":
        s = sheffer_from_poset(_complemented(pf))
        return OperatorTable("|", s.names, s.stroke)
    p = pf.poset()
    f, symbol = (max_l, "ML") if op == "maxl" else (min_u, "MU")
    n = p.size
    return OperatorTable(symbol, p.names, [[f(p, 1 << x, 1 << y) for y in range(n)] for x in range(n)])


def cmd_table(args) -> int:
    table = build_table(_poset_file(args.file), args.op)
    sys.stdout.write(table.render_golden() if args.format == "golden" else table.render_json())
    return OK


# axioms ---------------------------------------------------------------------

def _structure(path: str, kind: str):
    f = _load(path)
    if isinstance(f, StructureFile):
        if f.kind != kind:
            raise KindMismatch(f"file holds a {f.kind} structure, not {kind}")
        return f.structure()
    if kind == "operator":
        return structure_from_poset(f.poset())
    cp = _complemented(f)
    return sheffer_from_poset(cp) if kind == "sheffer" else dual_from_boolean(cp)


def cmd_axioms(args) -> int:
    s = _structure(args.file, args.structure)
    if args.structure == "operator":
        report = check_axioms(s)
    elif args.structure == "sheffer":
        report = check_sheffer_axioms(s)
    else:
        report = check_dual_axioms(s, subset_cap=args.subset_cap)
    print(report.render())
    return OK if report.ok else FAIL


# roundtrip ------------------------------------------------------------------


def cmd_roundtrip(args) -> int:
    f = _load(args.file)
    via = args.via
    try:
        if isinstance(f, StructureFile):
            if f.kind != via:
                raise KindMismatch(f"file holds a {f.kind} structure, not {via}")
            s = f.structure()
            if via == "operator":
                ok = roundtrip_structure(s)
            elif via == "sheffer":
                ok = sheffer_from_poset(poset_from_sheffer(s)) == s
            else:
                ok = bool(dual_roundtrip(s))
        elif via == "operator":
            p = f.poset()
            ok = poset_from_structure(structure_from_poset(p)) == p
        elif via == "sheffer":
            ok = sheffer_roundtrip(_complemented(f))
        else:
            cp = _complemented(f)
            ok = boolean_from_dual(dual_from_boolean(cp)) == cp
    except NotBoolean as exc:
        print(f"{args.file}: round-trip via {via}: not applicable ({exc})")
        return FAIL
    except (AxiomsFail, ConsistencyFail) as exc:
        print(f"{args.file}: round-trip via {via}: fails ({exc})")
        return FAIL
    print(f"{args.file}: round-trip via {via}: {'holds' if ok else 'fails'}")
    return OK if ok else FAIL


# enumerate / counterexample -------------------------------------------------


def cmd_enumerate(args) -> int:
    if args.theorem:
        report = en.exhaustive_check(args.theorem, args.max_size, args.labeling, args.workers)
        print(report.render())
        print(f"elapsed {report.elapsed:.2f}s")
        return OK if report.ok else FAIL
    en._check_size(args.max_size)
    for n in range(1, args.max_size + 1):
        line = f"size {n}: {en.PosetStream(n, args.filter, args.labeling).count()} instances"
        if args.dedup:
            line += f", {en.unlabeled_count(n, args.filter, args.labeling)} up to isomorphism"
        print(line)
    return OK


def cmd_counterexample(args) -> int:
    found = en.find_counterexample(args.property, args.max_size, args.labeling)
    if found is None:
        print(f"# no counterexample to {args.property} up to {args.max_size} elements")
        return FAIL
    comp = getattr(found.instance, "comp", None)
    text = f"# {args.property} fails: {found.render()}\n" + PosetFile.from_poset(found.poset, comp).dumps()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    sys.stdout.write(text)
    return OK


# parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="posetalg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="classify a poset file")
    c.add_argument("file")
    c.add_argument("--class", dest="cls", choices=CLASSES, required=True)
    c.set_defaults(func=cmd_check)

    t = sub.add_parser("table", help="print a pair table of an operator")
    t.add_argument("file")
    t.add_argument("--op", choices=TABLE_OPS, required=True)
    t.add_argument("--format", choices=("golden", "json"), default="golden")
    t.set_defaults(func=cmd_table)

    a = sub.add_parser("axioms", help="check the axioms of a structure")
    a.add_argument("file")
    a.add_argument("--structure", choices=STRUCTURES, required=True)
    a.add_argument("--subset-cap", type=int, default=DEFAULT_SUBSET_CAP)
    a.set_defaults(func=cmd_axioms)

    r = sub.add_parser("roundtrip", help="rebuild a poset or structure through a construction")
    r.add_argument("file")
    r.add_argument("--via", choices=STRUCTURES, required=True)
    r.set_defaults(func=cmd_roundtrip)

    e = sub.add_parser("enumerate", help="count small posets or sweep a theorem over them")
    e.add_argument("--max-size", type=int, required=True)
    e.add_argument("--filter", choices=en.FILTERS, default="all")
    e.add_argument("--labeling", choices=en.LABELINGS, default="auto")
    e.add_argument("--theorem", choices=tuple(en.THEOREMS))
    e.add_argument("--workers", type=int, default=None)
    e.add_argument("--dedup", action="store_true", help="also count up to isomorphism")
    e.set_defaults(func=cmd_enumerate)

    x = sub.add_parser("counterexample", help="search for the smallest violation of a property")
    x.add_argument("--property", choices=tuple(en.PROPERTIES), required=True)
    x.add_argument("--max-size", type=int, required=True)
    x.add_argument("--labeling", choices=en.LABELINGS, default="auto")
    x.add_argument("--output", help="also write the poset file here")
    x.set_defaults(func=cmd_counterexample)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (PosetError, FileNotFoundError) as exc:
        print(f"error: {exc.__class__.__name__}: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
