"""Command-line front end.

Subcommands::

    verify-counterexample   built-in deformed-Segre pipeline (full check)
    verify-quotient         the quotient ring itself (cyclic canonical module)
    ideal <op>              gb, dim, codim, colon, intersect, eliminate,
                            member, hilbert, regular on user ring/ideal files
    divisor <op>            h0, h1, floor, gens, watanabe, segre-h2, segre-qg

Exit codes: 0 success / all assertions pass, 1 input error, 2 verification
or internal failure, 3 unsupported request.  Output is deterministic:
identical inputs give byte-identical output, except that measured timings
appear only under ``--timings``.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

from . import divisors as dv
from .errors import (
    InputError,
    QuasigorError,
    UnsupportedRequestError,
    VerificationError,
)
from .groebner import buchberger
from .ideals import Ideal
from .linkage import verify_counterexample, verify_quotient_ring
from .parse import parse_generators, parse_polynomial, parse_ring
from .reporting import SCHEMA_VERSION

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_FAIL = 2
EXIT_UNSUPPORTED = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quasigor",
        description="Exact Groebner/linkage verification and Q-divisor section rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("verify-counterexample", "run the full deformed-Segre verification"),
        ("verify-quotient", "verify the quotient ring has a cyclic canonical module"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--field", default="Q", help="Q, F2 or Fp:<p> (default Q)")
        p.add_argument("--json", action="store_true", help="emit the JSON report")
        p.add_argument("--timings", action="store_true", help="include wall-clock timings")
        p.add_argument("--trace", action="store_true", help="step progress on stderr")

    p = sub.add_parser("ideal", help="operations on ideals given by text files")
    p.add_argument("op", choices=[
        "gb", "dim", "codim", "colon", "intersect", "eliminate", "member", "hilbert", "regular",
    ])
    p.add_argument("--ring", required=True, metavar="FILE", help="ring declaration file")
    p.add_argument("inputs", nargs="+", help="ideal file(s), then op-specific arguments")
    p.add_argument("--json", action="store_true")
    p.add_argument("--trace", action="store_true", help="Buchberger trace on stderr")

    p = sub.add_parser("divisor", help="Q-divisor computations on P^1")
    p.add_argument("op", choices=["h0", "h1", "floor", "gens", "watanabe", "segre-h2", "segre-qg"])
    p.add_argument("inputs", nargs="+", help="divisor expression(s); 'elliptic' for the built-in table")
    p.add_argument("--n", type=int, default=1, help="level (multiple of the divisor)")
    p.add_argument("--i", type=int, default=2, help="local cohomology index for segre-h2")
    p.add_argument("--a", type=int, help="a-invariant for watanabe / shift for segre-qg")
    p.add_argument("--bound", type=int, help="degree bound for gens")
    p.add_argument("--range", dest="n_range", default="-5:5", help="n range LO:HI for segre-qg")
    p.add_argument("--json", action="store_true")
    return parser


def _digest(pieces) -> str:
    h = hashlib.sha256()
    for piece in pieces:
        h.update(piece.encode("utf-8"))
        h.update(b"\x00")
    return h.hexdigest()[:16]


def _emit_json(payload: dict):
    print(json.dumps(payload, indent=2, sort_keys=True))


def _run_verification(args) -> int:
    trace = (lambda msg: print(msg, file=sys.stderr)) if args.trace else None
    runner = verify_counterexample if args.command == "verify-counterexample" else verify_quotient_ring
    report = runner(args.field)
    if trace:
        for label, ms in report.timings_ms.items():
            trace(f"{label}: {ms:.0f} ms")
    if args.json:
        payload = report.to_json_dict(include_timings=args.timings)
        payload["inputs_digest"] = _digest([args.command, report.field_label])
        _emit_json(payload)
    else:
        print(report.render_text(include_timings=args.timings))
    if report.experimental:
        return EXIT_OK
    if not report.passed:
        failing = ", ".join(s.label for s in report.failed_steps)
        print(f"verification failed at: {failing}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def _load_ideal(path: str, ring) -> Ideal:
    text = Path(path).read_text(encoding="utf-8")
    return Ideal(ring, parse_generators(text, ring))


def _take(items: list, count: int, what: str):
    if len(items) != count:
        raise InputError(f"'{what}' expects {count} argument(s), got {len(items)}")
    return items


def _run_ideal(args) -> int:
    ring = parse_ring(Path(args.ring).read_text(encoding="utf-8"))
    op = args.op
    inputs = list(args.inputs)
    trace = (lambda msg: print(msg, file=sys.stderr)) if args.trace else None
    result: object
    if op == "gb":
        (path,) = _take(inputs, 1, op)
        ideal = _load_ideal(path, ring)
        gb = buchberger(ideal.generators, trace=trace) if ideal.generators else ideal.groebner_basis()
        result = [str(g) for g in gb]
        text = "\n".join(result)
    elif op in ("dim", "codim"):
        (path,) = _take(inputs, 1, op)
        ideal = _load_ideal(path, ring)
        result = ideal.dimension() if op == "dim" else ideal.codimension()
        text = str(result)
    elif op in ("colon", "intersect"):
        first, second = _take(inputs, 2, op)
        left = _load_ideal(first, ring)
        right = _load_ideal(second, ring)
        out = left.colon(right) if op == "colon" else left.intersect(right)
        result = [str(g) for g in out.groebner_basis()]
        text = "\n".join(result)
    elif op == "eliminate":
        path, names = _take(inputs, 2, op)
        ideal = _load_ideal(path, ring)
        out = ideal.eliminate([v.strip() for v in names.split(",") if v.strip()])
        result = [str(g) for g in out.groebner_basis()]
        text = "\n".join(result)
    elif op == "member":
        path, expr = _take(inputs, 2, op)
        ideal = _load_ideal(path, ring)
        result = ideal.contains(parse_polynomial(expr, ring))
        text = str(result).lower()
    elif op == "hilbert":
        path, degree = _take(inputs, 2, op)
        ideal = _load_ideal(path, ring)
        result = ideal.hilbert_function(int(degree))
        text = str(result)
    elif op == "regular":
        path, expr = _take(inputs, 2, op)
        ideal = _load_ideal(path, ring)
        result = ideal.is_regular_element(parse_polynomial(expr, ring))
        text = str(result).lower()
    else:  # pragma: no cover - argparse restricts choices
        raise InputError(f"unknown op {op!r}")
    if args.json:
        _emit_json(
            {
                "schema_version": SCHEMA_VERSION,
                "command": "ideal",
                "op": op,
                "inputs_digest": _digest([args.ring] + inputs),
                "result": result,
            }
        )
    else:
        print(text)
    return EXIT_OK


def _table(spec: str):
    if spec == "elliptic":
        return dv.EllipticCohomologyTable()
    return dv.P1CohomologyTable(dv.parse_divisor(spec))


def _run_divisor(args) -> int:
    op = args.op
    inputs = list(args.inputs)
    result: object
    if op in ("h0", "h1", "floor"):
        (expr,) = _take(inputs, 1, op)
        divisor = dv.parse_divisor(expr)
        floored = divisor.floor_multiple(args.n)
        if op == "floor":
            result = str(floored)
            text = result
        else:
            result = dv.h0(floored) if op == "h0" else dv.h1(floored)
            text = str(result)
    elif op == "gens":
        (expr,) = _take(inputs, 1, op)
        if args.bound is None:
            raise InputError("'gens' needs --bound")
        gens, rels = dv.generator_degrees(dv.parse_divisor(expr), args.bound)
        result = {"generators": list(gens), "relations": list(rels)}
        text = "generators: " + ",".join(map(str, gens))
        text += "; relation: " + (",".join(map(str, rels)) if rels else "none")
    elif op == "watanabe":
        (expr,) = _take(inputs, 1, op)
        if args.a is None:
            raise InputError("'watanabe' needs --a")
        result = dv.watanabe_gorenstein(dv.parse_divisor(expr), args.a)
        text = str(result).lower()
    elif op == "segre-h2":
        left, right = _take(inputs, 2, op)
        value = dv.segre_local_cohomology_dim(_table(left), _table(right), args.i, args.n)
        result = value
        text = str(value)
        if args.i == 2 and value:
            text += "\nnon-Cohen-Macaulay witness: nonzero H^2 in a graded piece"
    elif op == "segre-qg":
        left, right = _take(inputs, 2, op)
        if args.a is None:
            raise InputError("'segre-qg' needs --a")
        lo, _, hi = args.n_range.partition(":")
        try:
            n_range = range(int(lo), int(hi) + 1)
        except ValueError:
            raise InputError(f"bad --range {args.n_range!r}, expected LO:HI") from None
        result = dv.quasi_gorenstein_hilbert_check(_table(left), _table(right), args.a, n_range)
        text = str(result).lower()
        text += "  (necessary condition at Hilbert-function level, not a proof)"
    else:  # pragma: no cover
        raise InputError(f"unknown op {op!r}")
    if args.json:
        _emit_json(
            {
                "schema_version": SCHEMA_VERSION,
                "command": "divisor",
                "op": op,
                "inputs_digest": _digest(inputs),
                "result": result,
            }
        )
    else:
        print(text)
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command in ("verify-counterexample", "verify-quotient"):
            return _run_verification(args)
        if args.command == "ideal":
            return _run_ideal(args)
        return _run_divisor(args)
    except UnsupportedRequestError as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except VerificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except QuasigorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    raise SystemExit(main())
