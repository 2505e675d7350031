"""Command line interface.

Commands
    decide   print EXISTS or ABSENT for a matrix (optionally a whole directory)
    report   print the status of every condition the decider evaluates
    witness  build a category and emit its JSON certificate
    verify   replay a certificate against a matrix with the exhaustive verifier
    oracle   brute-force search, independent of the decision procedure

Exit codes: 0 category exists / certificate verified, 1 no category / failed
verification, 2 bad input or usage, 3 oracle budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .certificate import build_certificate, load_certificate
from .decider import condition_report, decide, decide_by_submatrices
from .errors import CertificateError, ParseError, Rejected, ShapeError, TripleBudgetError
from .matrix import HomMatrix, parse_matrix
from .oracle import SearchBudget, oracle_decide
from .reduction import reduce
from .verifier import verify_category
from .witness import build_witness

EXIT_EXISTS = 0
EXIT_ABSENT = 1
EXIT_USAGE = 2
EXIT_UNKNOWN = 3


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_matrix(path: str) -> HomMatrix:
    return parse_matrix(_read_text(path))


def _print_verdict(verdict, as_json: bool, explain: bool, M: HomMatrix) -> None:
    if as_json:
        payload = {
            "decision": "exists" if verdict.exists else "absent",
            "reason": verdict.reason.to_json() if verdict.reason else None,
        }
        if verdict.subset is not None:
            payload["subset"] = list(verdict.subset)
        if verdict.rmap is not None:
            payload["reduced_size"] = verdict.rmap.m
        if explain:
            payload["conditions"] = condition_report(M)
        print(json.dumps(payload, indent=2))
        return
    if verdict.exists:
        print("EXISTS")
    elif verdict.subset is not None:
        print(f"ABSENT ({verdict.reason}; submatrix {list(verdict.subset)})")
    else:
        print(f"ABSENT ({verdict.reason})")
    if explain:
        for entry in condition_report(M):
            details = f"  {entry['details']}" if entry["details"] else ""
            print(f"{entry['status'].upper():7s} {entry['condition']}{details}")


def cmd_decide(args) -> int:
    if args.batch:
        return _decide_batch(args)
    if args.matrix is None:
        print("decide: a matrix file or --batch is required", file=sys.stderr)
        return EXIT_USAGE
    M = _load_matrix(args.matrix)
    verdict = decide_by_submatrices(M) if args.via_submatrices else decide(M)
    _print_verdict(verdict, args.json, args.explain, M)
    return EXIT_EXISTS if verdict.exists else EXIT_ABSENT


def _decide_batch(args) -> int:
    try:
        names = sorted(
            name
            for name in os.listdir(args.batch)
            if os.path.isfile(os.path.join(args.batch, name))
        )
    except OSError as exc:
        print(f"cannot read batch directory: {exc}", file=sys.stderr)
        return EXIT_USAGE
    any_absent = False
    any_error = False
    results = []
    for name in names:
        try:
            M = _load_matrix(os.path.join(args.batch, name))
            verdict = decide_by_submatrices(M) if args.via_submatrices else decide(M)
        except (ParseError, ShapeError, OSError) as exc:
            any_error = True
            results.append({"file": name, "error": str(exc)})
            if not args.json:
                print(f"{name}: ERROR {exc}")
            continue
        if not verdict.exists:
            any_absent = True
        results.append(
            {
                "file": name,
                "decision": "exists" if verdict.exists else "absent",
                "reason": verdict.reason.to_json() if verdict.reason else None,
            }
        )
        if not args.json:
            word = "EXISTS" if verdict.exists else f"ABSENT ({verdict.reason})"
            print(f"{name}: {word}")
    if args.json:
        print(json.dumps(results, indent=2))
    if any_error:
        return EXIT_USAGE
    return EXIT_ABSENT if any_absent else EXIT_EXISTS


def cmd_report(args) -> int:
    M = _load_matrix(args.matrix)
    entries = condition_report(M)
    if args.json:
        print(json.dumps(entries, indent=2))
    else:
        for entry in entries:
            details = f"  {entry['details']}" if entry["details"] else ""
            print(f"{entry['status'].upper():7s} {entry['condition']}{details}")
    return EXIT_EXISTS if decide(M).exists else EXIT_ABSENT


def cmd_witness(args) -> int:
    M = _load_matrix(args.matrix)
    try:
        C = build_witness(M)
    except Rejected as exc:
        print(f"ABSENT ({exc.verdict.reason})", file=sys.stderr)
        return EXIT_ABSENT
    certificate = build_certificate(C, M, reduce(M)[1])
    text = json.dumps(certificate, indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        print(f"certificate written to {args.out} ({C.morphism_count()} morphisms)")
    else:
        print(text)
    return EXIT_EXISTS


def cmd_verify(args) -> int:
    try:
        data = json.loads(_read_text(args.certificate))
    except json.JSONDecodeError as exc:
        print(f"certificate is not valid JSON: {exc}", file=sys.stderr)
        return EXIT_USAGE
    claimed, C = load_certificate(data)
    M = _load_matrix(args.matrix) if args.matrix else claimed
    report = verify_category(C, M)
    if args.json:
        print(
            json.dumps(
                {
                    "passed": report.passed,
                    "cardinality_mismatches": [list(map(str, e)) for e in report.cardinality_mismatches],
                    "identity_failures": [list(map(str, e)) for e in report.identity_failures],
                    "closure_failures": [list(map(str, e)) for e in report.closure_failures],
                    "associativity_failures": [list(map(str, e)) for e in report.associativity_failures],
                    "triples_checked": report.triples_checked,
                }
            )
        )
    elif report.passed:
        print(
            f"VERIFIED ({C.n} objects, {C.morphism_count()} morphisms, "
            f"{report.triples_checked} triples checked)"
        )
    else:
        print(f"FAILED {report.summary()}")
        for kind, entries in (
            ("cardinality", report.cardinality_mismatches),
            ("identity", report.identity_failures),
            ("closure", report.closure_failures),
            ("associativity", report.associativity_failures),
        ):
            for entry in entries[:4]:
                print(f"  {kind}: {entry}")
    return EXIT_EXISTS if report.passed else EXIT_ABSENT


def cmd_oracle(args) -> int:
    M = _load_matrix(args.matrix)
    result = oracle_decide(M, SearchBudget(args.budget))
    if args.json:
        print(json.dumps({"decision": result.decision, "assignments": result.assignments}))
    elif result.decision == "yes":
        print(f"EXISTS (assignments={result.assignments})")
    elif result.decision == "no":
        print(f"ABSENT (assignments={result.assignments})")
    else:
        print(f"UNKNOWN (budget exhausted after {result.assignments} assignments)")
    if result.decision == "unknown":
        return EXIT_UNKNOWN
    return EXIT_EXISTS if result.exists else EXIT_ABSENT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catmat",
        description="Decide whether a matrix of hom-set sizes is realized by a "
        "finite category; build and verify explicit witnesses.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="decide one matrix file or a directory of them")
    p.add_argument("matrix", nargs="?", help="matrix file (text rows or JSON), - for stdin")
    p.add_argument("--explain", action="store_true", help="also print the condition report")
    p.add_argument(
        "--via-submatrices",
        action="store_true",
        help="decide through principal submatrices of size <= 4",
    )
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--batch", metavar="DIR", help="decide every file in DIR")
    p.set_defaults(fn=cmd_decide)

    p = sub.add_parser("report", help="print the status of every decision condition")
    p.add_argument("matrix", help="matrix file, - for stdin")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_report)

    p = sub.add_parser("witness", help="build a category and emit its certificate")
    p.add_argument("matrix", help="matrix file, - for stdin")
    p.add_argument("--out", metavar="FILE", help="write the certificate here instead of stdout")
    p.add_argument("--json", action="store_true", help="certificates are always JSON; accepted for symmetry")
    p.set_defaults(fn=cmd_witness)

    p = sub.add_parser("verify", help="replay a certificate with the exhaustive verifier")
    p.add_argument("certificate", help="certificate file produced by witness")
    p.add_argument("matrix", nargs="?", help="matrix to verify against (default: the certificate's)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force search independent of the decider")
    p.add_argument("matrix", help="matrix file, - for stdin")
    p.add_argument("--budget", type=int, default=SearchBudget().max_assignments,
                   help="assignment budget before giving up (default %(default)s)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, ShapeError, CertificateError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TripleBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
