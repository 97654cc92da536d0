"""Command-line front end.

Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 construction
violation.  With ``--format json`` every path, failures included, prints one
JSON document on stdout.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import fields
from pathlib import Path

from .arith import CrtParams
from .congruences import (CongruenceClaim, check_claim, load_claims,
                          transfer_chain, transfer_crt)
from .errors import ConstructionViolation, InvalidParams, PartitionCrtError
from .identities import (ChainIdentityParams, CrtIdentityParams, IdentityInstance,
                         build_chain, build_crt, build_preset, verify_polynomial)
from .partitions import ORACLE_MAX, count_P, count_Q, partition_p, verify_counts
from .sweep import SweepConfig, run_sweep

log = logging.getLogger("partition_crt")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CONSTRUCTION = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _bound(text: str) -> int | None:
    if text.strip().lower() in ("inf", "infinity"):
        return None
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'inf', got {text!r}")


def _claim(text: str) -> CongruenceClaim:
    vals = _ints(text)
    if len(vals) != 3:
        raise argparse.ArgumentTypeError(f"a claim is m,c,d; got {text!r}")
    try:
        return CongruenceClaim(*vals)
    except InvalidParams as exc:
        raise argparse.ArgumentTypeError(str(exc))


def parse_preset(spec: str) -> tuple[str, tuple]:
    name, _, rest = spec.partition("=")
    args = tuple(_bound(v) for v in rest.split(",")) if rest else ()
    return name.strip().lower(), args


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _read_instance(path: str) -> IdentityInstance:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
        obj = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read instance from {path}: {exc}")
    return IdentityInstance.from_json(obj)


def cmd_gen(args) -> tuple[int, object]:
    if args.family == "crt":
        a = args.a if args.a is not None else (1,) * len(args.m)
        params = CrtIdentityParams(CrtParams(args.m, a), args.k, args.l, args.r)
        inst = build_crt(params)
    elif args.family == "chain":
        inst = build_chain(ChainIdentityParams(args.m, args.r, args.l))
    else:
        try:
            name, pargs = parse_preset(args.name)
        except argparse.ArgumentTypeError as exc:
            raise UsageError(str(exc))
        inst = build_preset(name, *pargs)
    return EXIT_OK, inst.to_json()


def cmd_verify(args) -> tuple[int, object]:
    _check_window(args.n_max, args.oracle_max)
    inst = _read_instance(args.input)
    poly = verify_polynomial(inst, args.n_max)
    counts = verify_counts(inst, args.n_max, args.oracle_max)
    ok = poly and counts.passed
    report = {"pass": ok, "polynomial": poly, "counts": counts.to_json()}
    return (EXIT_OK if ok else EXIT_FAIL), report


def cmd_count(args) -> tuple[int, object]:
    if args.n_max < 0:
        raise UsageError("--n-max must be non-negative")
    if args.mod is not None and args.mod < 1:
        raise UsageError("--mod must be positive")
    if args.kind == "p":
        table = partition_p(args.n_max, args.mod)
    else:
        if args.input is None:
            raise UsageError(f"count {args.kind} needs --in")
        inst = _read_instance(args.input)
        if args.kind == "P":
            table = count_P(inst.A, args.n_max, args.mod)
        else:
            table = count_Q(inst.B, args.n_max, args.mod)
    return EXIT_OK, table


def cmd_congruence(args) -> tuple[int, object]:
    if args.n_max < 0:
        raise UsageError("--n-max must be non-negative")
    claims = list(args.claim or [])
    if args.claims:
        claims += load_claims(args.claims)
    if not claims:
        raise UsageError("give at least one --claim m,c,d or --claims FILE")
    inst = _read_instance(args.input) if args.input else None
    if inst is not None and args.factor is None and not args.chain:
        raise UsageError("with --in, choose --factor I (CRT) or --chain")
    entries = []
    for base in claims:
        entry = {"base": check_claim(base, args.n_max).to_json()}
        if inst is not None:
            if args.chain:
                claim = transfer_chain(inst, base)
            else:
                claim = transfer_crt(inst, args.factor, base)
            entry["transferred"] = check_claim(claim, args.n_max).to_json()
        entries.append(entry)
    ok = all(e[k]["pass"] for e in entries for k in e)
    return (EXIT_OK if ok else EXIT_FAIL), {"pass": ok, "claims": entries}


def cmd_sweep(args) -> tuple[int, object]:
    names = {f.name for f in fields(SweepConfig)}
    try:
        cfg = SweepConfig(**{k: v for k, v in vars(args).items()
                             if k in names and v is not None})
    except ValueError as exc:
        raise UsageError(str(exc))
    summary = run_sweep(cfg, args.workers)
    if not args.full:
        summary["results"] = [r for r in summary["results"] if not r["pass"]]
    return (EXIT_OK if summary["failed"] == 0 else EXIT_FAIL), summary


def _check_window(n_max: int, oracle_max: int) -> None:
    if not 0 <= oracle_max <= n_max:
        raise UsageError("need 0 <= --oracle-max <= --n-max")
    if oracle_max > ORACLE_MAX:
        raise UsageError(f"--oracle-max is capped at {ORACLE_MAX}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="partition-crt",
                description="Build and verify partition identities P(A;n) = Q(B;n).")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="build an identity instance")
    fam = gen.add_subparsers(dest="family", required=True, parser_class=_Parser)
    crt = fam.add_parser("crt")
    crt.add_argument("--m", type=_ints, required=True)
    crt.add_argument("--a", type=_ints)
    crt.add_argument("--k", type=int, default=1)
    crt.add_argument("--l", type=_bound, default=1)
    crt.add_argument("--r", type=_ints)
    chain = fam.add_parser("chain")
    chain.add_argument("--m", type=_ints, required=True)
    chain.add_argument("--r", type=_ints, required=True)
    chain.add_argument("--l", type=_bound, default=1)
    preset = fam.add_parser("preset")
    preset.add_argument("name", help="euler | glaisher=D | macmahon | andrews=R | "
                                     "subbarao=L,R | nm=L,R,A,P  (L may be inf)")
    gen.set_defaults(func=cmd_gen)

    ver = sub.add_parser("verify", help="check an instance by series and brute force")
    ver.add_argument("--in", dest="input", required=True)
    ver.add_argument("--n-max", type=int, default=300)
    ver.add_argument("--oracle-max", type=int, default=40)
    ver.set_defaults(func=cmd_verify)

    cnt = sub.add_parser("count", help="print p(n), P(A;n) or Q(B;n)")
    cnt.add_argument("kind", choices=("p", "P", "Q"))
    cnt.add_argument("--in", dest="input")
    cnt.add_argument("--n-max", type=int, required=True)
    cnt.add_argument("--mod", type=int)
    cnt.set_defaults(func=cmd_count)

    con = sub.add_parser("congruence", help="check and transfer p(n) congruences")
    con.add_argument("--in", dest="input")
    con.add_argument("--factor", type=int)
    con.add_argument("--chain", action="store_true")
    con.add_argument("--claim", type=_claim, action="append")
    con.add_argument("--claims", help="JSON-lines file of {m, c, d}")
    con.add_argument("--n-max", type=int, default=100)
    con.set_defaults(func=cmd_congruence)

    sw = sub.add_parser("sweep", help="seeded batch verification over random parameters")
    for flag in ("s-max", "m-max", "k-max", "l-max", "n-max", "oracle-max",
                 "claim-window", "samples", "seed"):
        sw.add_argument(f"--{flag}", type=int)
    sw.add_argument("--inject-fault", action="store_true", default=None,
                    help="test hook: drop one class from every B")
    sw.add_argument("--workers", type=int)
    sw.add_argument("--full", action="store_true", help="list passing instances too")
    sw.set_defaults(func=cmd_sweep)
    return p


def _emit(payload, fmt: str) -> None:
    if hasattr(payload, "to_csv"):
        sys.stdout.write(payload.to_csv() if fmt == "csv" else _dump(payload.to_json()) + "\n")
    else:
        sys.stdout.write(_dump(payload) + "\n")


def _fail(fmt: str, code: int, exc: BaseException) -> int:
    msg = str(exc)
    if fmt == "json":
        sys.stdout.write(_dump({"error": type(exc).__name__, "message": msg,
                                "exit_code": code}) + "\n")
    else:
        sys.stderr.write(f"error: {msg}\n")
    return code


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    fmt = "csv" if "--format=csv" in argv or _flag_value(argv, "--format") == "csv" else "json"
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return _fail(fmt, EXIT_USAGE, exc)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(asctime)s %(levelname)s %(message)s", stream=sys.stderr)
    try:
        code, payload = args.func(args)
    except UsageError as exc:
        return _fail(args.format, EXIT_USAGE, exc)
    except ConstructionViolation as exc:
        return _fail(args.format, EXIT_CONSTRUCTION, exc)
    except PartitionCrtError as exc:
        # bad parameter values, modulus mismatches, wrong instance shapes
        return _fail(args.format, EXIT_USAGE, exc)
    _emit(payload, args.format)
    log.debug("%s finished with exit code %d", args.command, code)
    return code


def _flag_value(argv: list[str], flag: str) -> str | None:
    if flag in argv:
        i = argv.index(flag)
        if i + 1 < len(argv):
            return argv[i + 1]
    return None


if __name__ == "__main__":
    sys.exit(main())
