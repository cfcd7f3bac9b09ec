"""Command-line front end.

Exit codes: 0 success or valid, 1 invalid or refuted, 2 usage or parse
error, 3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import algebra
from .checker import check_identity_proof
from .decision import decide, decide_inequality
from .derivation import NotDerivable, derive_identity
from .oracle import DEFAULT_MAX_LETTERS, TooManyLetters, find_counterexample
from .proof import load_proofs
from .rho import build_rho
from .selftest import run_selftest
from .terms import ParseError, parse_polynomial
from .witness import build_witness

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _pair(args):
    return parse_polynomial(args.lhs), parse_polynomial(args.rhs)


def cmd_check(args) -> int:
    p, q = _pair(args)
    v = decide_inequality(p, q) if args.le else decide(p, q)
    text = "valid" if v.valid else f"invalid ({v.failed_condition}): {v.detail}"
    _emit(args, v.to_json(), text)
    return EXIT_OK if v.valid else EXIT_INVALID


def cmd_oracle(args) -> int:
    p, q = _pair(args)
    try:
        cex = find_counterexample(p, q, max_letters=args.max_letters, workers=args.workers)
    except TooManyLetters as exc:
        raise UsageError(str(exc)) from None
    payload = {
        "valid": cex is None,
        "failed_condition": None,
        "detail": "" if cex is None else "refuted by an explicit valuation",
    }
    if cex is not None:
        payload["counterexample"] = cex.to_json()
        payload["lhs_value"] = algebra.to_str(algebra.eval_poly(p, cex))
        payload["rhs_value"] = algebra.to_str(algebra.eval_poly(q, cex))
        text = "invalid: " + ", ".join(f"{a}={v}" for a, v in cex.to_json().items())
    else:
        text = "valid"
    _emit(args, payload, text)
    return EXIT_OK if cex is None else EXIT_INVALID


def cmd_witness(args) -> int:
    p, q = _pair(args)
    v = decide(p, q)
    if v.valid:
        print("the identity holds in B2; no witness exists", file=sys.stderr)
        return EXIT_INVALID
    val = build_witness(p, q, v)
    lv, rv = algebra.eval_poly(p, val), algebra.eval_poly(q, val)
    if lv == rv:
        raise AssertionError("witness does not separate the two sides")
    payload = {
        "valuation": val.to_json(),
        "lhs_value": algebra.to_str(lv),
        "rhs_value": algebra.to_str(rv),
        "failed_condition": v.failed_condition.value,
    }
    text = (
        ", ".join(f"{a}={e}" for a, e in val.to_json().items())
        + f"  (lhs={algebra.to_str(lv)}, rhs={algebra.to_str(rv)})"
    )
    _emit(args, payload, text)
    return EXIT_OK


def cmd_rho(args) -> int:
    p = parse_polynomial(args.poly)
    print(json.dumps(build_rho(p).to_json(), indent=None if not args.json else 2))
    return EXIT_OK


def cmd_derive(args) -> int:
    p, q = _pair(args)
    try:
        proofs = derive_identity(p, q)
    except NotDerivable as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INVALID
    data = json.dumps([d.to_json() for d in proofs], indent=2)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(data + "\n")
        summary = {
            "output": args.output,
            "nodes": [len(d) for d in proofs],
            "axioms": [d.axiom_count for d in proofs],
        }
        _emit(args, summary, f"wrote {args.output}: {summary['nodes'][0]} + {summary['nodes'][1]} nodes")
    else:
        print(data)
    return EXIT_OK


def cmd_verify(args) -> int:
    p, q = (parse_polynomial(t) for t in args.against)
    try:
        with open(args.file) as fh:
            proofs = load_proofs(fh.read())
    except (OSError, ValueError, KeyError, TypeError, IndexError) as exc:
        raise UsageError(f"cannot read proof file: {exc}") from None
    report = check_identity_proof(proofs, p, q)
    payload = {"valid": report.ok, "errors": report.lines()}
    text = "proof accepted" if report.ok else "proof rejected\n" + "\n".join(report.lines())
    _emit(args, payload, text)
    return EXIT_OK if report.ok else EXIT_INVALID


def _family(text: str) -> tuple[int, int, int]:
    try:
        a, s, l = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected A,S,L (three integers)") from None
    if min(a, s, l) < 1:
        raise argparse.ArgumentTypeError("family bounds must be positive")
    return a, s, l


def cmd_selftest(args) -> int:
    res = run_selftest(*args.family)
    text = (
        f"family {','.join(map(str, res.family))}: {res.polynomials} polynomials, "
        f"{res.pairs} pairs ({res.valid} valid, {res.invalid} invalid)\n"
        f"oracle disagreements: {len(res.oracle_disagreements)}\n"
        f"witness failures: {len(res.witness_failures)}\n"
        f"proof failures: {len(res.proof_failures)}\n"
        f"max proof nodes: {res.max_proof_nodes}\n"
        f"{'all agreements' if res.ok else 'FAILED'} in {res.seconds:.2f}s"
    )
    _emit(args, res.to_json(), text)
    return EXIT_OK if res.ok else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")

    parser = argparse.ArgumentParser(
        prog="b2semiring",
        description="Decide, refute and prove semiring identities of the Brandt semigroup B2.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, pair=True):
        sp = sub.add_parser(name, help=help, parents=[common])
        if pair:
            sp.add_argument("lhs")
            sp.add_argument("rhs")
        sp.set_defaults(func=func)
        return sp

    sp = add("check", cmd_check, "decide an identity p = q")
    sp.add_argument("--le", action="store_true",
                    help="decide the inequality p <= q, i.e. p + q = q")
    sp = add("oracle", cmd_oracle, "brute-force an identity over all valuations")
    sp.add_argument("--max-letters", type=int, default=DEFAULT_MAX_LETTERS)
    sp.add_argument("--workers", type=int, default=None)
    add("witness", cmd_witness, "print a valuation refuting p = q")
    sp = add("rho", cmd_rho, "print the rho partition of a polynomial", pair=False)
    sp.add_argument("poly")
    sp = add("derive", cmd_derive, "derive p = q from the rook and crossing axioms")
    sp.add_argument("-o", "--output")
    sp = add("verify", cmd_verify, "check a proof file", pair=False)
    sp.add_argument("file")
    sp.add_argument("--against", nargs=2, required=True, metavar=("LHS", "RHS"))
    sp = add("selftest", cmd_selftest, "exhaustive cross-check over a small family", pair=False)
    sp.add_argument("--family", type=_family, default=(2, 2, 3), metavar="A,S,L")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if not hasattr(args, "json"):
        args.json = False
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        if exc.text:
            print(f"  {exc.text}", file=sys.stderr)
            col = len(exc.text.encode("utf-8")[: exc.offset].decode("utf-8", "ignore"))
            print("  " + " " * col + "^", file=sys.stderr)
        return EXIT_USAGE
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
