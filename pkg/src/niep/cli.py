"""Command-line front end.

Exit codes encode the verdict lattice so pipelines can tell a proof of
non-realizability from an open question:

* 0  the command produced Realizable / Satisfied / a true membership
* 1  the command produced NotRealizable / Violated / a false membership
* 2  Undecided, Undetermined or Inapplicable
* 64 usage error
* 65 malformed input data

Reports are deterministic: identical invocations print identical bytes.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import __version__
from .augment import DEFAULT_K_MAX, check_bh_hypotheses, min_zeros_for_necessary
from .conditions import CheckConfig, run_all_necessary
from .construct import (
    realize_auto,
    realize_circulant_n3,
    realize_companion,
    realize_hadamard_suleimanova,
)
from .deciders import FAMILIES
from .errors import ConstructionError, NiepError, OutsidePi3
from .graphs import bipartition, decide_bipartite_sniep, matching_number
from .regions import dd_karpelevich_necessary, in_perfect_mirsky
from .reports import ConditionVerdict, DecisionVerdict
from .serialize import (
    ParseError,
    dumps,
    loads,
    matrix_to_json,
    parse_complex_entry,
    parse_graph,
    parse_matrix,
    parse_real_list,
    parse_spectrum_values,
)
from .spectrum import DEFAULT_TOL
from .sufficient import BaseRealization, Partition, check_perfect2, check_suleimanova, check_suleimanova_perfect

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_OPEN = 2
EXIT_USAGE = 64
EXIT_DATA = 65


class UsageError(Exception):
    """A required flag or flag combination is missing."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors must exit 64, not argparse's 2
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _verdict_exit(verdict) -> int:
    if verdict in (DecisionVerdict.REALIZABLE, ConditionVerdict.SATISFIED, True):
        return EXIT_TRUE
    if verdict in (DecisionVerdict.NOT_REALIZABLE, ConditionVerdict.VIOLATED, False):
        return EXIT_FALSE
    return EXIT_OPEN


def _read_inputs(args) -> list:
    """Inline JSON or file contents; a file may hold one JSON document or
    one document per line (batch)."""
    if getattr(args, "inline", None) is not None:
        return [loads(args.inline)]
    path = getattr(args, "file", None)
    if path is None:
        raise UsageError("provide an input with --in or --file")
    try:
        text = open(path, "r", encoding="utf-8").read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    try:
        return [loads(text)]
    except ParseError:
        lines = [ln for ln in text.splitlines() if ln.strip()]
        return [loads(ln) for ln in lines]


def _emit(args, payload) -> None:
    if getattr(args, "format", "json") == "text":
        _emit_text(payload)
    else:
        print(dumps(payload))


def _emit_text(payload, indent: str = "") -> None:
    if isinstance(payload, dict):
        for key in sorted(payload):
            value = payload[key]
            if isinstance(value, (dict, list)):
                print(f"{indent}{key}:")
                _emit_text(value, indent + "  ")
            else:
                print(f"{indent}{key}: {value}")
    elif isinstance(payload, list):
        for value in payload:
            if isinstance(value, (dict, list)):
                _emit_text(value, indent + "  ")
            else:
                print(f"{indent}{value}")
    else:
        print(f"{indent}{payload}")


def _cmd_check(args) -> int:
    cfg = CheckConfig(tol=args.tol, jll_km_bound=args.kmax)
    payloads, codes = [], []
    for doc in _read_inputs(args):
        values = parse_spectrum_values(doc)
        result = run_all_necessary(values, cfg)
        payloads.append(result.to_json())
        codes.append(EXIT_FALSE if result.aggregate is DecisionVerdict.NOT_REALIZABLE else EXIT_OPEN)
    _emit(args, payloads[0] if len(payloads) == 1 else payloads)
    return max(codes)


def _cmd_decide(args) -> int:
    kind, fn = FAMILIES[args.family]
    payloads, codes = [], []
    for doc in _read_inputs(args):
        if kind == "coeffs":
            if args.p is None:
                raise UsageError("--p is required for the coeffgap family")
            decision = fn(parse_real_list(doc), args.p, tol=args.tol)
        elif kind == "spectrum+diag":
            if args.diag is None:
                raise UsageError(f"--diag is required for family {args.family}")
            diag = parse_real_list(loads(args.diag))
            decision = fn(parse_spectrum_values(doc), diag, tol=args.tol)
        else:
            decision = fn(parse_spectrum_values(doc), tol=args.tol)
        payloads.append({"family": args.family, **decision.to_json()})
        codes.append(_verdict_exit(decision.verdict))
    for p in payloads:
        p.get("flags", {}).pop("partition", None)
    _emit(args, payloads[0] if len(payloads) == 1 else payloads)
    return max(codes)


def _partition_from_json(doc) -> Partition:
    if not isinstance(doc, list):
        raise ParseError("a partition is [[head, [tail...]], ...]")
    blocks = []
    for item in doc:
        if not isinstance(item, list) or len(item) != 2:
            raise ParseError(f"partition blocks are [head, [tail...]], got {item!r}")
        head = parse_complex_entry(item[0]).real
        tail = tuple(parse_real_list(item[1])) if item[1] else ()
        blocks.append((head, tail))
    return Partition(tuple(blocks))


def _cmd_sufficient(args) -> int:
    if args.condition == "perfect2":
        if args.base_matrix is None or args.base_spectrum is None or args.tails is None:
            raise UsageError("perfect2 needs --base-matrix, --base-spectrum and --tails")
        base = BaseRealization(
            matrix=tuple(map(tuple, parse_matrix(loads(args.base_matrix)))),
            spectrum=tuple(parse_real_list(loads(args.base_spectrum))),
        )
        tails_doc = loads(args.tails)
        if not isinstance(tails_doc, list):
            raise ParseError("--tails must be an array of arrays")
        tails = [parse_real_list(t) if t else [] for t in tails_doc]
        decision = check_perfect2(base, tails, tol=args.tol)
        payload = {"condition": "perfect2", **decision.to_json()}
        _emit(args, payload)
        return _verdict_exit(decision.verdict)

    (doc,) = _read_inputs(args)
    values = parse_spectrum_values(doc)
    if args.condition == "suleimanova":
        decision = check_suleimanova(values, tol=args.tol)
    else:
        partition = _partition_from_json(loads(args.partition)) if args.partition else None
        decision = check_suleimanova_perfect(
            values, partition=partition, tol=args.tol, exhaustive=args.exhaustive
        )
    payload = {"condition": args.condition, **decision.to_json()}
    flags = payload.get("flags")
    if flags and isinstance(flags.get("partition"), Partition):
        flags["partition"] = [[h, list(t)] for h, t in flags["partition"].blocks]
    _emit(args, payload)
    return _verdict_exit(decision.verdict)


def _cmd_realize(args) -> int:
    (doc,) = _read_inputs(args)
    values = parse_spectrum_values(doc)
    tol = args.tol
    try:
        if args.method == "companion":
            cert = realize_companion(values, tol)
        elif args.method == "hadamard":
            cert = realize_hadamard_suleimanova(values, tol)
        elif args.method == "circulant3":
            eps = tol * max(1.0, max(abs(v) for v in values))
            reals = [v for v in values if abs(v.imag) <= eps]
            pairs = [v for v in values if v.imag > eps]
            if len(values) != 3 or len(reals) != 1 or len(pairs) != 1:
                raise ParseError("circulant3 needs one real value and a conjugate pair")
            cert = realize_circulant_n3(reals[0].real, pairs[0], tol)
        else:
            cert = realize_auto(values, tol)
    except OutsidePi3 as exc:
        _emit(args, {"method": args.method, "verdict": "NotRealizable", "error": str(exc)})
        return EXIT_FALSE
    except ConstructionError as exc:
        _emit(args, {"method": args.method, "verdict": "Undetermined", "error": str(exc)})
        return EXIT_OPEN
    payload = {"method": args.method, **cert.to_json()}
    if args.emit_matrix:
        with open(args.emit_matrix, "w", encoding="utf-8") as fh:
            fh.write(dumps(matrix_to_json(cert.matrix)) + "\n")
    _emit(args, payload)
    return EXIT_TRUE if cert.valid else EXIT_OPEN


def _cmd_region(args) -> int:
    tol = args.tol
    if args.point is not None:
        z = parse_complex_entry(loads(args.point))
        member, exact = in_perfect_mirsky(z, args.n, tol)
        dd = dd_karpelevich_necessary(z, args.n, tol) if args.n >= 2 else None
        payload = {
            "point": [z.real, z.imag],
            "n": args.n,
            "in_pi_union": member,
            "exact_region": exact,
            "dd_verdict": dd.verdict.value if dd else None,
        }
        _emit(args, payload)
        return EXIT_TRUE if member else EXIT_FALSE
    if args.grid is None:
        raise UsageError("region needs --grid=re0,re1,im0,im1,steps or --point")
    try:
        re0, re1, im0, im1, steps = (float(x) for x in args.grid.split(","))
        steps = int(steps)
        if steps < 2:
            raise ValueError
    except ValueError as exc:
        raise ParseError("--grid must be re0,re1,im0,im1,steps with steps >= 2") from exc
    rows = []
    for im in np.linspace(im0, im1, steps):
        for re in np.linspace(re0, re1, steps):
            z = complex(re, im)
            member, _ = in_perfect_mirsky(z, args.n, tol)
            dd = dd_karpelevich_necessary(z, args.n, tol)
            rows.append((float(re), float(im), member, dd.verdict.value))
    if args.format == "json":
        _emit(args, [
            {"re": r, "im": i, "in_pi_union": m, "dd_verdict": d} for r, i, m, d in rows
        ])
    else:
        print("re,im,in_pi_union,dd_verdict")
        for r, i, m, d in rows:
            print(f"{r!r},{i!r},{int(m)},{d}")
    return EXIT_TRUE


def _cmd_graph(args) -> int:
    if args.graph is None:
        raise UsageError("graph needs --graph '{\"n\": ..., \"edges\": [[u,v],...]}'")
    g = parse_graph(loads(args.graph))
    left, right = bipartition(g)
    if getattr(args, "inline", None) is None and getattr(args, "file", None) is None:
        payload = {
            "bipartition": [list(left), list(right)],
            "matching_number": matching_number(g),
        }
        _emit(args, payload)
        return EXIT_TRUE
    (doc,) = _read_inputs(args)
    values = parse_real_list(doc)
    decision = decide_bipartite_sniep(g, values, tol=args.tol)
    decision_json = decision.to_json()
    decision_json.pop("flags", None)
    payload = {
        "bipartition": [list(left), list(right)],
        "matching_number": matching_number(g),
        **decision_json,
    }
    _emit(args, payload)
    return _verdict_exit(decision.verdict)


def _cmd_augment(args) -> int:
    (doc,) = _read_inputs(args)
    values = parse_spectrum_values(doc)
    cfg = CheckConfig(tol=args.tol)
    n_max = args.nmax if args.nmax is not None else len(values) + 10
    report = min_zeros_for_necessary(values, n_max, cfg)
    bh = check_bh_hypotheses(values, k_max=args.kmax, tol=args.tol)
    payload = {
        **report.to_json(),
        "bh_hypotheses": [r.to_json() for r in bh],
    }
    _emit(args, payload)
    return EXIT_TRUE if report.found else EXIT_OPEN


def _cmd_version(args) -> int:
    _emit(args, {"version": __version__})
    return EXIT_TRUE


def _add_io_flags(p: argparse.ArgumentParser, need_input: bool = True) -> None:
    p.add_argument("--in", dest="inline", metavar="JSON", help="inline JSON input")
    p.add_argument("--file", help="path to a JSON input (or one JSON per line)")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="absolute tolerance")
    p.add_argument("--format", choices=("json", "text"), default="json")


def build_parser() -> _Parser:
    parser = _Parser(prog="niep", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run every necessary condition")
    _add_io_flags(p)
    p.add_argument("--kmax", type=int, default=20, help="bound on k*m for the power-sum inequalities")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("decide", help="complete low-dimensional deciders")
    _add_io_flags(p)
    p.add_argument("--family", choices=sorted(FAMILIES), required=True)
    p.add_argument("--p", type=int, help="gap parameter for the coeffgap family")
    p.add_argument("--diag", metavar="JSON", help="diagonal entries for diag3/symdiag3")
    p.set_defaults(fn=_cmd_decide)

    p = sub.add_parser("sufficient", help="checkable sufficient conditions")
    _add_io_flags(p)
    p.add_argument(
        "--condition",
        choices=("suleimanova", "suleimanova-perfect", "perfect2"),
        required=True,
    )
    p.add_argument("--partition", metavar="JSON", help="[[head, [tail...]], ...]")
    p.add_argument("--exhaustive", action="store_true", help="try all head assignments")
    p.add_argument("--base-matrix", metavar="JSON")
    p.add_argument("--base-spectrum", metavar="JSON")
    p.add_argument("--tails", metavar="JSON")
    p.set_defaults(fn=_cmd_sufficient)

    p = sub.add_parser("realize", help="build a certified realizing matrix")
    _add_io_flags(p)
    p.add_argument("--method", choices=("companion", "circulant3", "hadamard", "auto"), default="auto")
    p.add_argument("--emit-matrix", metavar="PATH", help="write the matrix JSON here")
    p.set_defaults(fn=_cmd_realize)

    p = sub.add_parser("region", help="single-eigenvalue region queries")
    p.add_argument("--n", type=int, required=True, help="matrix order of the region")
    p.add_argument("--grid", metavar="RE0,RE1,IM0,IM1,STEPS",
                   help="use --grid=-1.1,1.1,-1.1,1.1,100 for negative bounds")
    p.add_argument("--point", metavar="JSON", help="single point, a number or [re, im]")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(fn=_cmd_region)

    p = sub.add_parser("graph", help="bipartite-graph symmetric realizability")
    _add_io_flags(p)
    p.add_argument("--graph", metavar="JSON", help='{"n": int, "edges": [[u, v], ...]}')
    p.set_defaults(fn=_cmd_graph)

    p = sub.add_parser("augment", help="zero-padding search and nonzero-spectrum hypotheses")
    _add_io_flags(p)
    p.add_argument("--nmax", type=int, help="largest total size to scan")
    p.add_argument("--kmax", type=int, default=DEFAULT_K_MAX, help="exponent scope")
    p.set_defaults(fn=_cmd_augment)

    p = sub.add_parser("version", help="print the package version")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(fn=_cmd_version)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"niep: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"niep: input error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except NiepError as exc:
        print(f"niep: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DATA


def main() -> None:  # console-script entry point
    sys.exit(run())
