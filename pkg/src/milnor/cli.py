"""Command-line front end.

Exit status: 0 on success, 1 when a mathematical identity that must hold
fails (an implementation bug), 2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .alternating import triples
from .census import find_rank, find_trivial_quotients, run_census
from .formats import (
    FormatError,
    linking_matrix_to_json,
    load_linking_matrix,
    load_surface_system,
    load_target,
    surface_system_to_json,
)
from .quotient import (
    classes_equal,
    coset_reduce,
    mod2_rank,
    presentation_matrix,
    quotient_group,
    rank_lower_bound,
    verify_dependencies,
)
from .sublink import verify_surjection
from .surface import (
    ClaspWordError,
    SurfaceSystemError,
    derive_linking_matrix,
    m_count,
    realize,
    total_triple_linking,
)

EXIT_OK, EXIT_INVARIANT, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _load_matrix(path):
    lam = load_linking_matrix(path)
    if lam.n < 3:
        raise InputError(f"{path}: need at least 3 components, got {lam.n}")
    return lam


def cmd_quotient(args) -> int:
    lam = _load_matrix(args.matrix)
    P = presentation_matrix(lam)
    group = quotient_group(lam)
    payload = {
        "n": lam.n,
        "presentation": [P.rows, P.cols],
        "group": str(group),
        "invariant_factors": list(group.invariant_factors),
        "free_rank": group.free_rank,
        "rank": group.free_rank,
        "mod2_rank": mod2_rank(lam),
    }
    lines = [
        f"components:   {lam.n}",
        f"presentation: {P.rows} generators x {P.cols} relators",
        f"M(L) =        {group}",
        f"rank:         {group.free_rank}",
        f"mod-2 rank:   {payload['mod2_rank']}",
    ]
    status = EXIT_OK
    if args.check_bound:
        if lam.n >= 6:
            bound = rank_lower_bound(lam.n)
            ok = group.free_rank >= bound
            payload.update(bound=bound, bound_ok=ok)
            lines.append(f"rank bound:   {bound} ({'holds' if ok else 'VIOLATED'})")
            if not ok:
                status = EXIT_INVARIANT
        else:
            lines.append("rank bound:   only stated for n >= 6")
    _emit(args, payload, "\n".join(lines))
    return status


def cmd_triple(args) -> int:
    F = load_surface_system(args.surface)
    lam = derive_linking_matrix(F)
    if lam.n < 3:
        raise InputError("need at least 3 components")
    mu = total_triple_linking(F)
    canon = coset_reduce(lam, mu.rep)
    rows = [(t, m_count(F, *t), F.t(*t)) for t in triples(F.n)]
    payload = {
        "linking_matrix": linking_matrix_to_json(lam),
        "coefficients": [{"ijk": list(t), "m": m, "t": tp, "m_minus_t": m - tp} for t, m, tp in rows],
        "raw": list(mu.rep.coeffs),
        "reduced": list(canon.coeffs),
        "group": str(quotient_group(lam)),
        "is_zero": canon.is_zero(),
    }
    lines = ["linking matrix:", str(lam), "", "  ijk       m      t    m-t"]
    lines += [f"  {t.i}{t.j}{t.k}".ljust(7) + f"{m:6d} {tp:6d} {m - tp:6d}" for t, m, tp in rows]
    lines += ["", f"mu(L) = {mu.rep}", f"reduced class = {canon}  in  {payload['group']}"]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_realize(args) -> int:
    lam = _load_matrix(args.matrix)
    target = load_target(args.target, lam.n)
    F, moves = realize(lam, target)
    # re-verify the emitted data from scratch
    mu = total_triple_linking(F)
    ok = derive_linking_matrix(F) == lam and classes_equal(lam, mu.rep, target)
    data = surface_system_to_json(F)
    if args.output:
        Path(args.output).write_text(json.dumps(data, indent=2) + "\n")
    log = [str(m) for m in moves]
    if args.log:
        Path(args.log).write_text("".join(f"{m}\n" for m in log))
    payload = {"surface_system": data, "moves": log, "verified": ok}
    text = [f"{len(moves)} Borromean move(s)"] + [f"  {m}" for m in log]
    if not args.output:
        text += ["", json.dumps(data, indent=2)]
    else:
        text.append(f"surface system written to {args.output}")
    text.append("round trip: " + ("class equals target" if ok else "MISMATCH"))
    _emit(args, payload, "\n".join(text))
    return EXIT_OK if ok else EXIT_INVARIANT


def cmd_verify(args) -> int:
    lam = _load_matrix(args.matrix)
    both = not (args.dependencies or args.surjection)
    reports = []
    if args.dependencies or both:
        reports.append(verify_dependencies(lam))
    if args.surjection or both:
        if lam.n >= 4:
            reports.extend(verify_surjection(lam, c) for c in range(1, lam.n + 1))
        elif args.surjection:
            raise InputError("surjection check needs n >= 4")
    ok = all(r.ok for r in reports)
    payload = {"ok": ok, "reports": [
        {"title": r.title, "checked": r.checked, "failures": r.failures} for r in reports]}
    _emit(args, payload, "\n".join(str(r) for r in reports))
    return EXIT_OK if ok else EXIT_INVARIANT


def cmd_census(args) -> int:
    def progress(done, total):
        print(f"  {done}/{total} matrices", file=sys.stderr)
    if args.find_rank is not None or args.trivial:
        if args.trivial:
            found, label = find_trivial_quotients(args.n), "with trivial M over Z"
        else:
            found, label = find_rank(args.n, args.find_rank), f"of mod-2 rank {args.find_rank}"
        payload = {"n": args.n, "count": len(found),
                   "matrices": [m.to_lists() for m in found]}
        text = [f"{len(found)} matrices {label}"]
        for m in found[:args.limit]:
            text += ["", str(m)]
        if len(found) > args.limit:
            text.append(f"... ({len(found) - args.limit} more)")
        _emit(args, payload, "\n".join(text))
        return EXIT_OK
    result = run_census(args.n, threads=args.threads,
                        progress=progress if args.verbose else None)
    if result.total != sum(result.histogram.values()):
        return EXIT_INVARIANT
    text = (f"n = {result.n}: {result.total} matrices in {result.elapsed:.2f}s\n\n"
            + result.format_table())
    _emit(args, result.to_json(), text)
    return EXIT_OK


def _positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--threads", type=_positive, default=argparse.SUPPRESS,
                        help="worker processes for the census")
    common.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="milnor", parents=[common],
        description="Total Milnor quotients and total triple linking numbers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("quotient", parents=[common], help="compute M(L) for a linking matrix")
    p.add_argument("matrix")
    p.add_argument("--check-bound", action="store_true",
                   help="compare the rank against the n >= 6 lower bound")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("triple", parents=[common], help="total triple linking class of clasp-word data")
    p.add_argument("surface")
    p.set_defaults(func=cmd_triple)

    p = sub.add_parser("realize", parents=[common], help="build clasp-word data realizing a class")
    p.add_argument("matrix")
    p.add_argument("target")
    p.add_argument("-o", "--output", help="write the surface-system JSON here")
    p.add_argument("--log", help="write the move log here")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("verify", parents=[common], help="check relator dependencies and sublink surjections")
    p.add_argument("matrix")
    p.add_argument("--dependencies", action="store_true")
    p.add_argument("--surjection", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", parents=[common], help="mod-2 rank census over all 0/1 matrices")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--find-rank", type=int, metavar="R",
                   help="list the matrices of mod-2 rank R instead of the histogram")
    p.add_argument("--trivial", action="store_true",
                   help="list matrices whose quotient is trivial over Z")
    p.add_argument("--limit", type=int, default=5, help="matrices to print in text mode")
    p.set_defaults(func=cmd_census)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, default in (("json", False), ("threads", 1), ("verbose", False)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return args.func(args)
    except (FormatError, InputError, SurfaceSystemError, ClaspWordError, ValueError) as e:
        print(f"milnor {args.command}: error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
