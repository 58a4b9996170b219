"""Batch command-line front end.

Subcommands: validate, homology, torsion, torsion-acyclic, torsion-self,
dual, snf, ord, turaev, gen.  Input files are the JSON documents described
in the documents module; scalars stay exact strings end to end.  Exit
codes: 0 success, 1 parse or validation failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .chain_maps import dual_map
from .complexes import dual_complex, homology_data
from .documents import (
    complex_to_document,
    dump_document,
    load_complex,
    load_map,
    map_to_document,
)
from .errors import ParamOutOfRange, ParseError, TorsionError, UsageError, ValidationError
from .fields import FIELD_BY_NAME, QPOLY
from .generate import gen_instance
from .torsion import torsion, torsion_acyclic, torsion_self_map
from .ufd import order_of_homology, smith_normal_form, turaev_torsion


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torsionkit",
        description="Exact torsion of quasi-isomorphisms between based chain complexes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, complex_arg=False, map_arg=False, degree=False,
            out=False, gen_args=False):
        p = sub.add_parser(name, help=help_text)
        if complex_arg:
            p.add_argument("--complex", metavar="FILE", help="complex document")
        if map_arg:
            p.add_argument("--map", metavar="FILE", help="map document")
        if degree:
            p.add_argument("--degree", type=int, metavar="I", help="degree index")
        if out:
            p.add_argument("--out", metavar="FILE", help="write the result here")
        if gen_args:
            p.add_argument("--seed", type=int, required=True, metavar="N")
            p.add_argument(
                "--profile",
                default="iso",
                choices=["iso", "qiso", "self", "non-qiso", "acyclic", "poly"],
            )
            p.add_argument("--m", type=int, default=2, help="complex length")
            p.add_argument("--max-dim", type=int, default=4, help="per-degree cap")
            p.add_argument(
                "--field", default="Q", choices=sorted(FIELD_BY_NAME),
                help="coefficient field for map profiles",
            )
        p.add_argument("--json", action="store_true", help="machine-readable report")
        return p

    add("validate", "check a complex or map document", complex_arg=True, map_arg=True)
    add("homology", "per-degree homology data of a complex", complex_arg=True)
    add("torsion", "torsion of a quasi-isomorphism", map_arg=True)
    add("torsion-acyclic", "torsion of a based acyclic complex", complex_arg=True)
    add("torsion-self", "torsion of a self-map from induced determinants", map_arg=True)
    add("dual", "dual complex or dual map document", complex_arg=True, map_arg=True, out=True)
    add("snf", "Smith normal form of a boundary matrix over Q[t]",
        complex_arg=True, degree=True)
    add("ord", "order of a homology module over Q[t]", complex_arg=True, degree=True)
    add("turaev", "alternating product of homology orders over Q[t]", complex_arg=True)
    add("gen", "emit a seeded random instance document", out=True, gen_args=True)
    return parser


def _need(args, attr: str, flag: str):
    value = getattr(args, attr, None)
    if value is None:
        raise UsageError(f"this command needs {flag}")
    return value


def _emit(args, report: dict, human: str) -> None:
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print(human)


def _cmd_validate(args) -> None:
    if args.complex and args.map:
        raise UsageError("pass either --complex or --map, not both")
    if args.complex:
        c = load_complex(args.complex)
        desc = f"complex of length {c.length} over {c.ring.name}, dims {c.dims}"
        _emit(args, {"command": "validate", "ok": True, "kind": "complex",
                     "field": c.ring.name, "dims": list(c.dims)}, f"ok: {desc}")
    elif args.map:
        f = load_map(args.map)
        desc = (
            f"chain map of length {f.length} over {f.source.ring.name}, "
            f"dims {f.source.dims} -> {f.target.dims}"
        )
        _emit(args, {"command": "validate", "ok": True, "kind": "map",
                     "field": f.source.ring.name,
                     "source_dims": list(f.source.dims),
                     "target_dims": list(f.target.dims)}, f"ok: {desc}")
    else:
        raise UsageError("pass --complex FILE or --map FILE")


def _cmd_homology(args) -> None:
    c = load_complex(_need(args, "complex", "--complex"))
    h = homology_data(c)
    rows = []
    lines = []
    for i, d in enumerate(h.degrees):
        rows.append(
            {"degree": i, "dim": c.dims[i], "boundary_rank": d.boundary_rank,
             "betti": d.betti}
        )
        lines.append(
            f"degree {i}: dim {c.dims[i]}, boundary rank {d.boundary_rank}, "
            f"betti {d.betti}"
        )
    _emit(args, {"command": "homology", "field": c.ring.name, "degrees": rows},
          "\n".join(lines))


def _cmd_torsion(args) -> None:
    f = load_map(_need(args, "map", "--map"))
    value = torsion(f)
    text = f.source.ring.to_str(value)
    _emit(args, {"command": "torsion", "field": f.source.ring.name, "tau": text},
          f"tau = {text}")


def _cmd_torsion_acyclic(args) -> None:
    c = load_complex(_need(args, "complex", "--complex"))
    value = torsion_acyclic(c)
    text = c.ring.to_str(value)
    _emit(args, {"command": "torsion-acyclic", "field": c.ring.name, "tau": text},
          f"tau = {text}")


def _cmd_torsion_self(args) -> None:
    f = load_map(_need(args, "map", "--map"))
    value = torsion_self_map(f)
    text = f.source.ring.to_str(value)
    _emit(args, {"command": "torsion-self", "field": f.source.ring.name, "tau": text},
          f"tau = {text}")


def _cmd_dual(args) -> None:
    if args.complex and args.map:
        raise UsageError("pass either --complex or --map, not both")
    if args.complex:
        c = load_complex(args.complex)
        doc = complex_to_document(dual_complex(c), comment="dual complex")
    elif args.map:
        f = load_map(args.map)
        doc = map_to_document(dual_map(f), comment="dual map")
    else:
        raise UsageError("pass --complex FILE or --map FILE")
    text = dump_document(doc, args.out)
    if args.out:
        _emit(args, {"command": "dual", "ok": True, "out": args.out},
              f"wrote dual document to {args.out}")
    else:
        print(text, end="")


def _cmd_snf(args) -> None:
    c = load_complex(_need(args, "complex", "--complex"), ring=QPOLY)
    degree = args.degree if args.degree is not None else 0
    if not 0 <= degree < max(c.length, 1) or c.length == 0:
        raise UsageError(f"--degree must index a boundary (0..{c.length - 1})")
    snf = smith_normal_form(c.boundary(degree))
    factors = [QPOLY.to_str(p) for p in snf.invariant_factors]
    _emit(args, {"command": "snf", "degree": degree, "invariant_factors": factors},
          f"invariant factors of boundary {degree}: "
          + (", ".join(factors) if factors else "(none)"))


def _cmd_ord(args) -> None:
    c = load_complex(_need(args, "complex", "--complex"), ring=QPOLY)
    degree = args.degree
    if degree is None:
        raise UsageError("ord needs --degree I")
    if not 0 <= degree <= c.length:
        raise UsageError(f"--degree must be in 0..{c.length}")
    value = order_of_homology(c, degree)
    text = QPOLY.to_str(value)
    _emit(args, {"command": "ord", "degree": degree, "ord": text},
          f"ord H_{degree} = {text}")


def _cmd_turaev(args) -> None:
    c = load_complex(_need(args, "complex", "--complex"), ring=QPOLY)
    value = turaev_torsion(c)
    from .fields import QT

    text = QT.to_str(value)
    _emit(args, {"command": "turaev", "tau": text,
                 "note": "defined up to a nonzero rational factor"},
          f"tau = {text}\n(defined up to a nonzero rational factor)")


def _cmd_gen(args) -> None:
    try:
        doc = gen_instance(
            args.seed,
            m=args.m,
            max_dim=args.max_dim,
            profile=args.profile,
            ring=FIELD_BY_NAME[args.field],
        )
    except ParamOutOfRange as exc:
        raise UsageError(str(exc)) from exc
    text = dump_document(doc, args.out)
    if args.out:
        _emit(args, {"command": "gen", "ok": True, "out": args.out,
                     "profile": args.profile, "seed": args.seed},
              f"wrote {args.profile} document to {args.out}")
    else:
        print(text, end="")


_COMMANDS = {
    "validate": _cmd_validate,
    "homology": _cmd_homology,
    "torsion": _cmd_torsion,
    "torsion-acyclic": _cmd_torsion_acyclic,
    "torsion-self": _cmd_torsion_self,
    "dual": _cmd_dual,
    "snf": _cmd_snf,
    "ord": _cmd_ord,
    "turaev": _cmd_turaev,
    "gen": _cmd_gen,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (ParseError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except TorsionError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
