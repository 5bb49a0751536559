"""Command-line front end.

Subcommands: analyze (one lens space), table (sweep p up to a bound),
verify (recheck a certificate file), oracle (the brute-force cross-checks).
Exit codes: 0 success, 1 verification mismatch, 2 domain error, 3 resource
or integrity error, 64 usage error, 65 certificate parse failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import gcd

from . import oracle
from .errors import DomainError, IntegrityError, ResourceError
from .lens import THREE_SPHERE, LensSpace, SpecialCase, normalize
from .quadform import QuadForm
from .solver import DEFAULT_PRIME_SHIFT_CAP, minimal_planar_boundaries
from .witness import certificate_from_dict, certificate_to_dict, certificate_to_json, verify

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_DOMAIN = 2
EXIT_RESOURCE = 3
EXIT_USAGE = 64
EXIT_PARSE = 65


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits 2, which we reserve
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _witness_line(w) -> str:
    if w.n == 1:
        return f"witness: n=1 a={w.a[0]} t={w.t[0]}"
    pairs = ", ".join(f"l{i + 1}{j + 1}={w.l[i][j]}" for i in range(w.n) for j in range(i + 1, w.n))
    return f"witness: n={w.n} a={w.a} t={w.t} {pairs}"


def _trace_lines(trace) -> list[str]:
    return [
        f"  {name}: {getattr(trace, name)}"
        for name in (
            "branch", "k", "q_prime", "s_prime", "eps", "z", "z_inv",
            "eps_prime", "D", "n_form", "z0", "C0", "w",
        )
    ]


def cmd_analyze(args) -> int:
    result = normalize(args.p, args.q)
    if isinstance(result, SpecialCase):
        if args.json:
            payload = {"p": str(args.p), "q": str(args.q), "special": result.kind}
            print(json.dumps(payload, indent=2))
        elif result.kind == THREE_SPHERE:
            print(f"({args.p},{args.q}) is the 3-sphere: fibered by a disk, one boundary component")
        else:
            print(f"({args.p},{args.q}) is not a lens space with p >= 2; out of scope")
        return EXIT_OK
    count, cert = minimal_planar_boundaries(result, cap=args.cap, mr_rounds=args.mr_rounds)
    if args.json:
        print(certificate_to_json(cert, include_trace=args.trace))
        return EXIT_OK
    print(f"{result}: minimal planar fibered surface has {count} boundary components")
    print(_witness_line(cert.witness))
    print(f"determinant: {cert.det}")
    if args.trace and cert.trace is not None:
        print("construction trace:")
        for line in _trace_lines(cert.trace):
            print(line)
    return EXIT_OK


def cmd_table(args) -> int:
    if args.pmax < 2:
        raise DomainError(f"pmax must be >= 2, got {args.pmax}")
    for p in range(2, args.pmax + 1):
        count2 = count3 = 0
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            lens = LensSpace(p, q)
            count, cert = minimal_planar_boundaries(lens, cap=args.cap, mr_rounds=args.mr_rounds)
            if count == 2:
                count2 += 1
            else:
                count3 += 1
            if args.jsonl:
                row = {"p": str(p), "q": str(q), "boundaries": str(count), "det": str(cert.det)}
                print(json.dumps(row))
            else:
                print(f"{p}\t{q}\t{count}\t{cert.det}")
        if args.summary:
            if args.jsonl:
                print(json.dumps({"summary": {"p": str(p), "count2": str(count2), "count3": str(count3)}}))
            else:
                print(f"# p={p}\tcount2={count2}\tcount3={count3}")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        with open(args.path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        print(f"cannot read {args.path}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except json.JSONDecodeError as exc:
        print(f"not valid JSON: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        if not isinstance(data, dict):
            raise ValueError("certificate JSON must be an object")
        cert = certificate_from_dict(data)
    except DomainError as exc:
        print(f"certificate is semantically invalid: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (KeyError, TypeError, ValueError) as exc:
        print(f"malformed certificate: {exc}", file=sys.stderr)
        return EXIT_PARSE
    recomputed = verify(cert.lens, cert.witness)
    if recomputed.det != cert.det:
        print(
            f"determinant mismatch for {cert.lens}: stored {cert.det}, "
            f"recomputed {recomputed.det}"
        )
        return EXIT_MISMATCH
    if not recomputed.valid or not cert.valid:
        print(f"certificate for {cert.lens} is not a witness: determinant {recomputed.det}")
        return EXIT_MISMATCH
    print(f"ok: {cert.lens} witness verifies with determinant {recomputed.det}")
    return EXIT_OK


def cmd_oracle(args) -> int:
    if args.oracle_cmd == "qr":
        print("true" if oracle.brute_qr(args.a, args.m) else "false")
        return EXIT_OK
    if args.oracle_cmd == "n2":
        lens = LensSpace(args.p, args.q)
        hit = oracle.brute_n2(lens, args.bound)
        print("none" if hit is None else f"a={hit[0]} t={hit[1]}")
        return EXIT_OK
    if args.oracle_cmd == "n3":
        lens = LensSpace(args.p, args.q)
        w = oracle.brute_n3(lens, args.box)
        if w is None:
            print("none")
        else:
            print(f"a={w.a} t={w.t} l12={w.l[0][1]}")
        return EXIT_OK
    if args.oracle_cmd == "form":
        f = QuadForm(args.A, args.B, args.C)
        hit = oracle.brute_form_represents(f, args.n, args.bound)
        print("none" if hit is None else f"x={hit[0]} y={hit[1]}")
        return EXIT_OK
    raise AssertionError(f"unhandled oracle subcommand {args.oracle_cmd}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="lenshf",
        description="Minimal boundary counts of planar homologically fibered "
        "surfaces in lens spaces, with exact integer certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="decide one lens space L(p, q)")
    pa.add_argument("p", type=int)
    pa.add_argument("q", type=int)
    pa.add_argument("--json", action="store_true", help="emit the certificate as JSON")
    pa.add_argument("--trace", action="store_true", help="include the construction trace")
    pa.add_argument("--cap", type=int, default=DEFAULT_PRIME_SHIFT_CAP,
                    help="prime search cap per branch")
    pa.add_argument("--mr-rounds", type=int, default=None,
                    help="Miller-Rabin rounds above the deterministic range")
    pa.set_defaults(func=cmd_analyze)

    pt = sub.add_parser("table", help="sweep all L(p, q) with p up to pmax")
    pt.add_argument("pmax", type=int)
    pt.add_argument("--jsonl", action="store_true", help="JSON-lines rows instead of TSV")
    pt.add_argument("--summary", action="store_true", help="append per-p counts")
    pt.add_argument("--cap", type=int, default=DEFAULT_PRIME_SHIFT_CAP)
    pt.add_argument("--mr-rounds", type=int, default=None)
    pt.set_defaults(func=cmd_table)

    pv = sub.add_parser("verify", help="recheck a certificate JSON file")
    pv.add_argument("path")
    pv.set_defaults(func=cmd_verify)

    po = sub.add_parser("oracle", help="brute-force cross-checks")
    osub = po.add_subparsers(dest="oracle_cmd", required=True)
    oqr = osub.add_parser("qr", help="is a a square mod m (full scan)")
    oqr.add_argument("a", type=int)
    oqr.add_argument("m", type=int)
    on2 = osub.add_parser("n2", help="scan for a one-pair witness")
    on2.add_argument("p", type=int)
    on2.add_argument("q", type=int)
    on2.add_argument("--bound", type=int, default=None)
    on3 = osub.add_parser("n3", help="scan a box for a two-pair witness")
    on3.add_argument("p", type=int)
    on3.add_argument("q", type=int)
    on3.add_argument("box", type=int)
    oform = osub.add_parser("form", help="scan for a primitive representation")
    oform.add_argument("A", type=int)
    oform.add_argument("B", type=int)
    oform.add_argument("C", type=int)
    oform.add_argument("n", type=int)
    oform.add_argument("bound", type=int)
    po.set_defaults(func=cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ResourceError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except IntegrityError as exc:
        print(f"integrity failure: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
