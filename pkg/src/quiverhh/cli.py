"""Command-line interface.

Subcommands: ``info``, ``hh``, ``center``, ``pi1-rank``, ``glue``,
``verify``, ``examples``, ``fuzz``.  Output is deterministic for fixed
input and flags; ``--json`` switches reports to one JSON object per line
with fields check/status/lhs/rhs/witness.  Exit codes: 0 clean, 1 a fail
report was produced, 2 usage, parse or validation errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import MonomialAlgebra
from .checks import FUZZ_CHECKS, CHECKS, run_checks, run_fuzz
from .errors import QuiverHHError
from .examples_data import EXAMPLES, example_by_name
from .fileformat import parse, print_algebra
from .fundgroup import pi1_rank
from .gluing import glue, gluing_kind
from .higher import CrownUnsupported, hh_dim_high
from .quiver import betti, connected_components, crown_order, is_sink_arrow, is_source_arrow, path_str
from .paircomplex import center_product, complex_data, hh1_lie


def _load(path: str) -> MonomialAlgebra:
    with open(path, "r", encoding="utf-8") as fh:
        return parse(fh.read())


def _arrow_id(A: MonomialAlgebra, name: str) -> int:
    if name not in A.quiver.arrow_index:
        raise QuiverHHError(f"no arrow named {name}")
    return A.quiver.arrow_index[name]


def cmd_info(args) -> int:
    A = _load(args.file)
    Q = A.quiver
    comps = connected_components(Q)
    print(f"field: {A.field}")
    print(f"vertices: {Q.num_vertices}")
    print(f"arrows: {Q.num_arrows}")
    print(f"relations: {len(A.relations)}")
    print(f"dimension: {A.dim}")
    by_len: dict = {}
    for p in A.basis:
        by_len[p.length] = by_len.get(p.length, 0) + 1
    print("basis by length: " + ", ".join(f"{k}:{v}" for k, v in sorted(by_len.items())))
    print(f"components: {len(comps)}")
    print(f"betti: {betti(Q)}")
    print(f"radical square zero: {A.is_radical_square_zero()}")
    order = crown_order(Q)
    print(f"crown: {order if order is not None else 'no'}")
    sources = [Q.arrow_name(a) for a in range(Q.num_arrows) if is_source_arrow(Q, a)]
    sinks = [Q.arrow_name(a) for a in range(Q.num_arrows) if is_sink_arrow(Q, a)]
    nodes = [Q.arrow_name(a) for a in range(Q.num_arrows) if A.is_node_arrow(a)]
    print(f"source arrows: {', '.join(sources) if sources else '-'}")
    print(f"sink arrows: {', '.join(sinks) if sinks else '-'}")
    print(f"node arrows: {', '.join(nodes) if nodes else '-'}")
    return 0


def _parse_degrees(spec: str):
    if ".." in spec:
        lo, hi = spec.split("..", 1)
        return int(lo), int(hi)
    d = int(spec)
    return d, d


def cmd_hh(args) -> int:
    A = _load(args.file)
    lo, hi = _parse_degrees(args.degrees)
    C = complex_data(A)
    for n in range(lo, hi + 1):
        if n == 0:
            print(f"HH^0: {C.hh0.dim}")
        elif n == 1:
            print(f"HH^1: {C.hh1_view.dim}")
        else:
            try:
                val = hh_dim_high(A, n)
            except QuiverHHError as err:
                print(f"HH^{n}: unsupported ({err})")
                continue
            if isinstance(val, CrownUnsupported):
                print(f"HH^{n}: {val}")
            else:
                print(f"HH^{n}: {val}")
    if args.lie and C.hh1_view.dim:
        pres = hh1_lie(A)
        print("HH^1 basis: " + "; ".join(pres.basis_labels))
        if pres.is_abelian():
            print("bracket: abelian")
        else:
            for (i, j), coords in sorted(pres.constants.items()):
                if any(c != 0 for c in coords):
                    terms = " + ".join(
                        f"{A.field.scalar_str(c)}*x{k}" for k, c in enumerate(coords) if c != 0
                    )
                    print(f"[x{i}, x{j}] = {terms}")
    return 0


def cmd_center(args) -> int:
    A = _load(args.file)
    table = center_product(A)
    print(f"dim Z: {table.dim}")
    for i, lab in enumerate(table.basis_labels):
        print(f"z{i}: pivot {lab}")
    print(f"unit coordinates: {tuple(A.field.scalar_str(c) for c in table.unit)}")
    for (i, j), coords in sorted(table.table.items()):
        if i <= j:
            txt = " + ".join(
                f"{A.field.scalar_str(c)}*z{k}" for k, c in enumerate(coords) if c != 0
            )
            print(f"z{i} * z{j} = {txt if txt else '0'}")
    return 0


def cmd_pi1_rank(args) -> int:
    A = _load(args.file)
    print(pi1_rank(A))
    return 0


def cmd_glue(args) -> int:
    A = _load(args.file)
    g = glue(A, _arrow_id(A, args.alpha), _arrow_id(A, args.beta), args.name)
    text = print_algebra(g.B)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    kind = gluing_kind(g)
    print(f"# dim: {A.dim} -> {g.B.dim}", file=sys.stderr)
    print(
        f"# source-sink: {kind['source_sink']}, same block: {kind['same_block']}",
        file=sys.stderr,
    )
    new = ", ".join(path_str(g.B.quiver, p) for p in g.z_new)
    print(f"# new relations: {new if new else '-'}", file=sys.stderr)
    return 0


def _emit_reports(reports, as_json: bool) -> int:
    worst = 0
    for rep in reports:
        if as_json:
            print(json.dumps(rep.as_dict(), sort_keys=True))
        else:
            extra = ""
            if rep.lhs is not None or rep.rhs is not None:
                extra = f"  lhs={rep.lhs} rhs={rep.rhs}"
            if rep.witness is not None:
                extra += f"  witness={rep.witness}"
            if rep.reason:
                extra += f"  ({rep.reason})"
            print(f"{rep.check:24s} {rep.status}{extra}")
        if rep.failed:
            worst = 1
    return worst


def cmd_verify(args) -> int:
    A = _load(args.file)
    g = glue(A, _arrow_id(A, args.alpha), _arrow_id(A, args.beta))
    names = None if args.checks == "all" else [c.strip() for c in args.checks.split(",")]
    reports = run_checks(g, names)
    return _emit_reports(reports, args.json)


def cmd_examples(args) -> int:
    if args.show:
        entry = example_by_name(args.show)
        sys.stdout.write(entry.text)
        return 0
    if not args.run:
        for e in EXAMPLES:
            print(f"{e.name:18s} {e.title}")
        return 0
    worst = 0
    for e in EXAMPLES:
        A = parse(e.text)
        g = glue(A, _arrow_id(A, e.alpha), _arrow_id(A, e.beta))
        reports = run_checks(g)
        mismatches = []
        for rep in reports:
            expected = e.expect_status.get(rep.check, ("pass", "not-applicable"))
            if isinstance(expected, str):
                expected = (expected,)
            if rep.status not in expected:
                mismatches.append(rep)
        verdict = "ok" if not mismatches else "UNEXPECTED"
        if mismatches:
            worst = 1
        print(f"{e.name:18s} {verdict}")
        if args.json:
            for rep in reports:
                obj = rep.as_dict()
                obj["example"] = e.name
                print(json.dumps(obj, sort_keys=True))
        for rep in mismatches:
            print(f"  {rep.check}: got {rep.status} ({rep.reason or rep.lhs})")
    return worst


def cmd_fuzz(args) -> int:
    checks = FUZZ_CHECKS if args.checks == "default" else tuple(
        c.strip() for c in args.checks.split(",")
    )
    reports, failures = run_fuzz(args.seed, args.count, checks)
    statuses: dict = {}
    for _, reps in reports:
        for rep in reps:
            statuses[rep.status] = statuses.get(rep.status, 0) + 1
    if args.json:
        for inst_seed, reps in reports:
            for rep in reps:
                obj = rep.as_dict()
                obj["seed"] = inst_seed
                print(json.dumps(obj, sort_keys=True))
    else:
        print(f"instances: {args.count}")
        for k in sorted(statuses):
            print(f"{k}: {statuses[k]}")
        for inst_seed, rep, confirmed in failures:
            tag = "confirmed counterexample" if confirmed else "UNCONFIRMED"
            print(f"fail @ seed {inst_seed}: {rep.check} lhs={rep.lhs} rhs={rep.rhs} [{tag}]")
            if args.repro:
                sys.stdout.write(rep.repro)
    return 1 if failures else 0


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        prog="quiverhh",
        description="Exact cohomology invariants of monomial quiver algebras and arrow gluings",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("info", help="summarize an algebra file")
    p.add_argument("file")
    p.set_defaults(fn=cmd_info)

    p = sub.add_parser("hh", help="cohomology dimensions")
    p.add_argument("file")
    p.add_argument("--degrees", default="0..1", help="N or N..M (default 0..1)")
    p.add_argument("--lie", action="store_true", help="print degree-one structure constants")
    p.set_defaults(fn=cmd_hh)

    p = sub.add_parser("center", help="center dimension and multiplication table")
    p.add_argument("file")
    p.set_defaults(fn=cmd_center)

    p = sub.add_parser("pi1-rank", help="first Betti number rank of the character group")
    p.add_argument("file")
    p.set_defaults(fn=cmd_pi1_rank)

    p = sub.add_parser("glue", help="glue two arrows and print the resulting algebra")
    p.add_argument("file")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--out")
    p.add_argument("--name", default="gamma*", help="name for the merged arrow")
    p.set_defaults(fn=cmd_glue)

    p = sub.add_parser("verify", help="run comparison checks for a gluing")
    p.add_argument("file")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--checks", default="all", help=f"comma list from: {', '.join(CHECKS)}")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("examples", help="list, show or run the built-in examples")
    p.add_argument("--run", action="store_true")
    p.add_argument("--show", metavar="NAME")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_examples)

    p = sub.add_parser("fuzz", help="random instances through the comparison checks")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--checks", default="default")
    p.add_argument("--json", action="store_true")
    p.add_argument("--repro", action="store_true", help="print reproduction files for failures")
    p.set_defaults(fn=cmd_fuzz)

    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except (QuiverHHError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
