"""Command-line front end.

Every subcommand reads .tng files (see the diagram module grammar), writes
deterministic text to stdout, and supports --json for a machine-readable
object (schema in the README).  Exit codes: 0 success, 1 usage, 2 parse or
validation error, 3 domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from .diagram import TangleDiagram, ensure_valid, load_tng, validate
from .enhanced import (contract, enumerate_enhancements, invariant_rho_poly,
                       invariant_total_poly, state_polys)
from .errors import DomainError, InvalidDiagramError, ParseError, TangleError
from .laurent import ROOT_INDICES, LaurentPoly, ensure_root_index
from .moves import verify_manifest
from .pairing import p_poly, pairing_matrix
from .skein import bracket, enumerate_basis, format_matching


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def complex_text(z: complex) -> str:
    re, im = round(z.real, 9) + 0.0, round(z.imag, 9) + 0.0
    sign = "+" if im >= 0 else "-"
    return f"{re:.9f} {sign} {abs(im):.9f}i"


def poly_json(p: LaurentPoly) -> dict:
    return {"terms": [[e, c] for e, c in p.items_desc()], "text": str(p)}


def complex_json(z: complex) -> dict:
    return {"re": round(z.real, 9) + 0.0, "im": round(z.imag, 9) + 0.0}


def _emit(args, text_lines, obj) -> None:
    if args.json:
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _read(path: str) -> TangleDiagram:
    try:
        return load_tng(path)
    except OSError as exc:
        raise ParseError(0, f"cannot read {path}: {exc.strerror or exc}") from exc


def _load(path: str) -> TangleDiagram:
    d = _read(path)
    ensure_valid(d)
    return d


def _matching_json(mt) -> list:
    return [list(pair) for pair in mt]


def cmd_basis(args) -> int:
    basis = enumerate_basis(args.m, args.n)
    lines = [format_matching(mt) for mt in basis.elements]
    _emit(args, lines, {
        "m": args.m, "n": args.n, "count": len(basis),
        "elements": [_matching_json(mt) for mt in basis.elements],
    })
    return 0


def cmd_bracket(args) -> int:
    d = _load(args.file)
    vec = bracket(d)
    lines = [f"{format_matching(mt)}: {coeff}"
             for mt, coeff in zip(vec.basis.elements, vec.coords)]
    _emit(args, lines, {
        "m": d.m, "n": d.n,
        "coords": [{"element": _matching_json(mt), "poly": poly_json(c)}
                   for mt, c in zip(vec.basis.elements, vec.coords)],
    })
    return 0


def cmd_pairing(args) -> int:
    A = pairing_matrix(args.m, args.n)
    lines = [" | ".join(str(entry) for entry in row) for row in A.entries]
    _emit(args, lines, {
        "m": args.m, "n": args.n, "size": len(A.entries),
        "entries": [[poly_json(entry) for entry in row] for row in A.entries],
    })
    return 0


def cmd_p(args) -> int:
    d = _load(args.file)
    p = p_poly(d)
    if args.k is None:
        _emit(args, [f"P(D) = {p}"], {"p": poly_json(p)})
    else:
        ensure_root_index(args.k)
        z = p.eval_root(args.k)
        _emit(args, [f"P(D)_{args.k} = {complex_text(z)}"],
              {"k": args.k, "value": complex_json(z)})
    return 0


def cmd_rho(args) -> int:
    d = _load(args.file)
    enhancements = enumerate_enhancements(d)
    lines = ["{" + ",".join(str(x) for x in sorted(rho)) + "}"
             for rho in enhancements]
    _emit(args, lines, {
        "count": len(enhancements),
        "enhancements": [sorted(rho) for rho in enhancements],
    })
    return 0


def _pick_rho(d: TangleDiagram, rho_index: int | None) -> frozenset:
    """The enhancement a state/invariant command should work with."""
    if rho_index is not None:
        if d.thick:
            raise DomainError(
                "--rho conflicts with the file's own thick-edge lines")
        enhancements = enumerate_enhancements(d)
        if not 0 <= rho_index < len(enhancements):
            raise DomainError(
                f"rho index {rho_index} out of range: "
                f"{len(enhancements)} enhancements")
        return enhancements[rho_index]
    if d.thick:
        return frozenset(d.thick)
    if d.trivalent:
        raise DomainError(
            "diagram has trivalent vertices: pick an enhancement with --rho "
            "or declare thick edges in the file")
    return frozenset()


def cmd_states(args) -> int:
    d = _load(args.file)
    rho = _pick_rho(d, args.rho)
    contracted = contract(d, rho) if (d.trivalent or rho) else d
    entries = state_polys(contracted)
    lines = [f"state {i} [{','.join(patterns)}]: {p}"
             for i, (patterns, p) in enumerate(entries)]
    _emit(args, lines, {
        "rho": sorted(rho),
        "states": [{"assignment": list(patterns), "poly": poly_json(p)}
                   for patterns, p in entries],
    })
    return 0


def cmd_invariant(args) -> int:
    d = _load(args.file)
    ks = ROOT_INDICES if args.all_k else (args.k,)
    for k in ks:
        ensure_root_index(k)
    with ThreadPoolExecutor(max_workers=max(args.threads, 1)) as pool:
        map_fn = map if args.threads <= 1 else pool.map
        if args.rho is not None or d.thick:
            rho = _pick_rho(d, args.rho)
            poly = invariant_rho_poly(d, rho)
        else:
            poly = invariant_total_poly(d, map_fn=map_fn)
    values = [(k, poly.eval_root(k)) for k in ks]
    lines = [f"I_{k}(G) = {complex_text(z)}" for k, z in values]
    _emit(args, lines, {
        "values": [{"k": k, "value": complex_json(z)} for k, z in values],
    })
    return 0


def cmd_verify(args) -> int:
    if args.k is not None:
        ensure_root_index(args.k)
    with ThreadPoolExecutor(max_workers=max(args.threads, 1)) as pool:
        map_fn = map if args.threads <= 1 else pool.map
        try:
            results = verify_manifest(args.manifest, k=args.k, map_fn=map_fn)
        except OSError as exc:
            raise ParseError(
                0, f"cannot read {args.manifest}: {exc.strerror or exc}") from exc
    lines = []
    for r in results:
        status = "ok" if r.ok else f"FAIL ({r.detail})"
        lines.append(f"pair {r.name} ({r.move}, {r.expected}): {status}")
    _emit(args, lines, {
        "ok": all(r.ok for r in results),
        "results": [{"name": r.name, "move": r.move, "expected": r.expected,
                     "ok": r.ok, "detail": r.detail} for r in results],
    })
    return 0 if all(r.ok for r in results) else 3


def cmd_validate(args) -> int:
    try:
        d = _read(args.file)
    except (ParseError, InvalidDiagramError) as exc:
        _emit(args, [f"problem: {exc}"], {"ok": False, "problems": [str(exc)]})
        return 2
    report = validate(d)
    if report.ok:
        _emit(args, ["ok"], {"ok": True, "problems": []})
        return 0
    _emit(args, [f"problem: {p}" for p in report.problems],
          {"ok": False, "problems": list(report.problems)})
    return 2


def build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit a JSON object instead of text")
    common.add_argument("--threads", type=int, default=1, metavar="N",
                        help="worker threads for state sums (default 1)")

    parser = _Parser(prog="tanglepoly",
                     description="Skein-module invariants of tangles and "
                                 "trivalent graph diagrams.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_basis = sub.add_parser("basis", parents=[common],
                             help="list the flat (m,n) basis")
    p_basis.add_argument("m", type=int)
    p_basis.add_argument("n", type=int)
    p_basis.set_defaults(func=cmd_basis)

    p_bracket = sub.add_parser("bracket", parents=[common],
                               help="bracket coordinates of a strand diagram")
    p_bracket.add_argument("file")
    p_bracket.set_defaults(func=cmd_bracket)

    p_pairing = sub.add_parser("pairing", parents=[common],
                               help="pairing matrix for boundary (m,n)")
    p_pairing.add_argument("m", type=int)
    p_pairing.add_argument("n", type=int)
    p_pairing.set_defaults(func=cmd_pairing)

    p_p = sub.add_parser("p", parents=[common],
                         help="pairing polynomial P(D), or its value at a root")
    p_p.add_argument("file")
    p_p.add_argument("--k", type=int, default=None,
                     help="evaluate at the admissible root index K")
    p_p.set_defaults(func=cmd_p)

    p_rho = sub.add_parser("rho", parents=[common],
                           help="list the enhancements of a graph diagram")
    p_rho.add_argument("file")
    p_rho.set_defaults(func=cmd_rho)

    p_states = sub.add_parser("states", parents=[common],
                              help="per-state polynomials after contraction")
    p_states.add_argument("file")
    p_states.add_argument("--rho", type=int, default=None, metavar="INDEX",
                          help="enhancement index from the rho listing")
    p_states.set_defaults(func=cmd_states)

    p_inv = sub.add_parser("invariant", parents=[common],
                           help="root values of the summed invariant")
    p_inv.add_argument("file")
    p_inv.add_argument("--rho", type=int, default=None, metavar="INDEX",
                       help="enhancement index from the rho listing")
    group = p_inv.add_mutually_exclusive_group(required=True)
    group.add_argument("--k", type=int, default=None,
                       help="single admissible root index")
    group.add_argument("--all-k", action="store_true",
                       help="all eight admissible root indices")
    p_inv.set_defaults(func=cmd_invariant)

    p_verify = sub.add_parser("verify", parents=[common],
                              help="check every pair in a fixture manifest")
    p_verify.add_argument("manifest")
    p_verify.add_argument("--k", type=int, default=None,
                          help="restrict root checks to one index")
    p_verify.set_defaults(func=cmd_verify)

    p_validate = sub.add_parser("validate", parents=[common],
                                help="structural and planarity check")
    p_validate.add_argument("file")
    p_validate.set_defaults(func=cmd_validate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, InvalidDiagramError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except TangleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
