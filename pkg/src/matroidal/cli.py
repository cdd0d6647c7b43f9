"""Command-line surface.

Subcommands: check, analyze, decompose, partition, cert, verify-cert,
enumerate, scan.  Exit codes: 0 success/verified, 1 check failed,
2 inconclusive, 3 usage error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path

from .decomposition import (
    degree2_partition,
    minimal_primes,
    recognize_var_block_product,
    recognize_veronese,
)
from .enumeration import conjecture_scan, enumerate_matroidal
from .ideals import (
    Ideal,
    InvariantViolation,
    has_full_support,
    mono_str,
    parse_ideal,
)
from .matroids import MatroidalIdeal, check_matroidal
from .oracle import parse_poly, verify_radical_cert
from .quotients import analyze
from .svrank import (
    RadicalCertificate,
    certificate_document,
    degree2_cert,
    partition_from_document,
    product_cert,
    search_cert,
    sv_sums,
    variable_cert,
    verify_sv,
    veronese_cert,
)

USAGE_ERROR = 3
INCONCLUSIVE = 2
CHECK_FAILED = 1
OK = 0


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)


def _load_ideal(path: str) -> Ideal:
    try:
        return parse_ideal(Path(path).read_text())
    except (OSError, ValueError) as exc:
        raise _UsageError(f"cannot read ideal from {path}: {exc}") from exc


def _require_matroidal(ideal: Ideal) -> MatroidalIdeal | str:
    try:
        check = check_matroidal(ideal)
    except ValueError as exc:
        return str(exc)
    if not check:
        return f"not matroidal ({check.failure}): {check.witness}"
    return check.matroidal


def _cmd_check(args) -> int:
    ideal = _load_ideal(args.file)
    try:
        check = check_matroidal(ideal)
    except ValueError as exc:
        _emit(args, {"matroidal": False, "error": str(exc)}, [f"error: {exc}"])
        return CHECK_FAILED
    if check:
        mi = check.matroidal
        payload = {
            "matroidal": True,
            "n": ideal.n,
            "d": mi.d,
            "generators": len(ideal.gens),
        }
        _emit(args, payload, [f"matroidal: d={mi.d}, {len(ideal.gens)} generators"])
        return OK
    payload = {
        "matroidal": False,
        "n": ideal.n,
        "failure": check.failure,
        "witness": str(check.witness),
    }
    _emit(args, payload, [f"not matroidal ({check.failure}): {check.witness}"])
    return CHECK_FAILED


def _cmd_analyze(args) -> int:
    ideal = _load_ideal(args.file)
    mi = _require_matroidal(ideal)
    if isinstance(mi, str):
        _emit(args, {"error": mi}, [f"error: {mi}"])
        return CHECK_FAILED
    if not has_full_support(ideal):
        message = "support must be all of x1..xn"
        _emit(args, {"error": message}, [f"error: {message}"])
        return CHECK_FAILED
    report = analyze(mi)
    _emit(args, report, [f"{key}={value}" for key, value in report.items()])
    return OK


def _cmd_decompose(args) -> int:
    ideal = _load_ideal(args.file)
    try:
        decomposition = minimal_primes(ideal)
    except ValueError as exc:
        _emit(args, {"error": str(exc)}, [f"error: {exc}"])
        return CHECK_FAILED
    payload: dict[str, object] = {
        "primes": [sorted(p) for p in decomposition.primes],
        "height": decomposition.height,
        "unmixed": decomposition.unmixed,
    }
    lines = [
        "primes: " + "; ".join(
            "{" + ", ".join(f"x{v}" for v in sorted(p)) + "}"
            for p in decomposition.primes
        ),
        f"height={decomposition.height}",
        f"unmixed={decomposition.unmixed}",
    ]
    mi = _require_matroidal(ideal)
    if isinstance(mi, MatroidalIdeal) and mi.d == 2 and has_full_support(ideal):
        signature = degree2_partition(mi).signature
        payload["signature"] = list(signature)
        lines.append(f"signature={signature}")
    _emit(args, payload, lines)
    return OK


def _cmd_partition(args) -> int:
    ideal = _load_ideal(args.file)
    mi = _require_matroidal(ideal)
    if isinstance(mi, str):
        _emit(args, {"error": mi}, [f"error: {mi}"])
        return CHECK_FAILED
    try:
        partition = degree2_partition(mi)
    except ValueError as exc:
        _emit(args, {"error": str(exc)}, [f"error: {exc}"])
        return CHECK_FAILED
    payload = {
        "parts": [sorted(p) for p in partition.parts],
        "signature": list(partition.signature),
    }
    lines = [
        "parts: " + "; ".join(
            "{" + ", ".join(f"x{v}" for v in sorted(p)) + "}"
            for p in partition.parts
        ),
        f"signature={partition.signature}",
    ]
    _emit(args, payload, lines)
    return OK


def _cmd_cert(args) -> int:
    ideal = _load_ideal(args.file)
    mi = _require_matroidal(ideal)
    if isinstance(mi, str):
        _emit(args, {"error": mi}, [f"error: {mi}"])
        return CHECK_FAILED
    if not has_full_support(ideal):
        message = "support must be all of x1..xn"
        _emit(args, {"error": message}, [f"error: {message}"])
        return CHECK_FAILED
    n, d = ideal.n, mi.d
    choice = args.construction
    cert = None
    construction = None

    def fail(message: str) -> int:
        _emit(args, {"error": message}, [f"error: {message}"])
        return CHECK_FAILED

    if choice == "veronese" or (choice == "auto" and recognize_veronese(ideal)):
        if not recognize_veronese(ideal):
            return fail("not a square-free Veronese ideal")
        cert = veronese_cert(n, d)
        construction = "veronese"
    elif choice in ("auto", "product"):
        blocks = recognize_var_block_product(ideal)
        if blocks is not None:
            cert = product_cert([variable_cert(b, n) for b in blocks])
            construction = "product"
        elif choice == "product":
            return fail("not a variable block product")
    if cert is None and choice in ("auto", "degree2"):
        if d == 2:
            cert = degree2_cert(mi)
            construction = "degree2"
        elif choice == "degree2":
            return fail("degree is not 2")
    if cert is None:
        size = args.size if args.size is not None else n - d + 1
        result = search_cert(mi, size, budget=args.budget)
        construction = "search"
        if result.partition is None:
            status = "exhausted" if result.exhausted else "budget_exceeded"
            payload = {
                "found": False,
                "status": status,
                "nodes": result.nodes,
                "target_size": size,
            }
            _emit(args, payload, [f"no certificate of size {size}: {status}"])
            return INCONCLUSIVE
        cert = result.partition
    document = certificate_document(cert)
    document["construction"] = construction
    size = len(document["sums"])
    _emit(
        args,
        document,
        [f"construction={construction}", f"size={size}",
         f"verified_sv={document['verified_sv']}"],
    )
    return OK


def _cmd_verify_cert(args) -> int:
    ideal = _load_ideal(args.ideal)
    try:
        document = json.loads(Path(args.cert).read_text())
    except (OSError, ValueError) as exc:
        raise _UsageError(f"cannot read certificate from {args.cert}: {exc}") from exc
    payload: dict[str, object] = {"verified_sv": False, "oracle_checked": False}
    try:
        target = document["target_ideal"]
        stated_n = int(target["n"])
    except (KeyError, TypeError, ValueError) as exc:
        raise _UsageError(f"malformed certificate document: {exc}") from exc
    if stated_n != ideal.n:
        _emit(args, {"error": "ambient mismatch"}, ["error: ambient mismatch"])
        return CHECK_FAILED
    if document.get("layers") is not None:
        partition = partition_from_document(document)
        if partition.ideal != ideal:
            message = "certificate target differs from the ideal file"
            _emit(args, {"error": message}, [f"error: {message}"])
            return CHECK_FAILED
        check = verify_sv(partition)
        payload["verified_sv"] = bool(check)
        if not check:
            payload["failure"] = check.failure
            payload["witness"] = str(check.witness)
            _emit(args, payload, [f"sv check failed ({check.failure}): {check.witness}"])
            return CHECK_FAILED
        cert = sv_sums(partition)
    else:
        try:
            polys = tuple(parse_poly(s, ideal.n) for s in document["sums"])
            cert = RadicalCertificate(polys, ideal, "manual")
        except (KeyError, ValueError) as exc:
            _emit(args, {"error": str(exc)}, [f"error: {exc}"])
            return CHECK_FAILED
    lines = [f"verified_sv={payload['verified_sv']}"]
    if args.oracle:
        result = verify_radical_cert(cert, cap=args.cap)
        payload["oracle_checked"] = True
        payload["oracle"] = {
            "verified": result.verified,
            "cap": result.cap,
            "powers": {mono_str(g): p for g, p in result.powers.items()},
            "failures": [mono_str(g) for g in result.failures],
        }
        lines.append(f"oracle verified={result.verified} (cap {result.cap})")
        _emit(args, payload, lines)
        if result.verified:
            return OK
        return INCONCLUSIVE
    _emit(args, payload, lines)
    if payload["verified_sv"]:
        return OK
    return INCONCLUSIVE  # nothing checked beyond parsing


def _cmd_enumerate(args) -> int:
    try:
        ideals = list(enumerate_matroidal(args.n, args.d, up_to_symmetry=args.sym))
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    payload = {
        "n": args.n,
        "d": args.d,
        "up_to_symmetry": args.sym,
        "count": len(ideals),
        "ideals": [
            [mono_str(g) for g in mi.ideal.gens] for mi in ideals
        ],
    }
    lines = [f"count={len(ideals)}"]
    lines.extend(
        ", ".join(mono_str(g) for g in mi.ideal.gens) for mi in ideals
    )
    _emit(args, payload, lines)
    return OK


def _cmd_scan(args) -> int:
    try:
        report = conjecture_scan(
            args.n, args.d, budget=args.budget, up_to_symmetry=args.sym
        )
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    payload = dataclasses.asdict(report)
    lines = [
        f"total={report.total_ideals}",
        f"certified={report.certified}",
        f"inconclusive={report.inconclusive}",
        f"elapsed={report.elapsed_seconds:.2f}s",
    ]
    for name, counts in report.theorem_counts.items():
        lines.append(
            f"{name}: pass={counts['pass']} fail={counts['fail']} skip={counts['skip']}"
        )
    _emit(args, payload, lines)
    return OK


def build_parser() -> _Parser:
    parser = _Parser(prog="matroidal", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.set_defaults(func=func)
        return p

    p = add("check", _cmd_check, help="exchange-condition check")
    p.add_argument("file")

    p = add("analyze", _cmd_analyze, help="q, pd, depth, height, CM")
    p.add_argument("file")

    p = add("decompose", _cmd_decompose, help="minimal primes and height")
    p.add_argument("file")

    p = add("partition", _cmd_partition, help="degree-2 multipartite parts")
    p.add_argument("file")

    p = add("cert", _cmd_cert, help="construct an arithmetical-rank certificate")
    p.add_argument("file")
    p.add_argument(
        "--construction",
        choices=("auto", "veronese", "product", "degree2", "search"),
        default="auto",
    )
    p.add_argument("--size", type=int, default=None, help="search target size")
    p.add_argument("--budget", type=int, default=50000, help="search node budget")

    p = add("verify-cert", _cmd_verify_cert, help="re-verify a certificate file")
    p.add_argument("ideal")
    p.add_argument("cert")
    p.add_argument("--oracle", action="store_true", help="Groebner radical check")
    p.add_argument("--cap", type=int, default=8, help="largest power to try")

    p = add("enumerate", _cmd_enumerate, help="all matroidal ideals for (n, d)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--sym", action="store_true", help="one ideal per relabeling orbit")

    p = add("scan", _cmd_scan, help="theorem battery plus certificate scan")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--budget", type=int, default=20000, help="search node budget")
    p.add_argument(
        "--no-sym",
        dest="sym",
        action="store_false",
        help="scan every labeled ideal instead of orbit representatives",
    )
    p.set_defaults(sym=True)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except InvariantViolation as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
