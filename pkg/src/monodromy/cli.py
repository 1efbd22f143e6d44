"""Command-line interface.

Exit codes: 0 success / equivalent, 1 failed check / inequivalent,
2 unknown (budget exhausted), 3 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import formats
from .braid import compose_all
from .contexts import BraidGroup
from .formats import InputError, dumps
from .lefschetz import fiber_sum, kas_equivalent, validate
from .mcg import MCGWord, coxeter_element, symplectic_rep, verify_presentation_relators
from .search import hurwitz_equivalent, orbit_enumerate, replay
from .vankampen import fingerprint, presentation, tietze_simplify

EXIT_OK, EXIT_FAIL, EXIT_UNKNOWN, EXIT_USAGE = 0, 1, 2, 3
BUDGET_ENV = "MONODROMY_BUDGET"
DEFAULT_BUDGET = 10_000
_VERDICT_EXIT = {"equivalent": EXIT_OK, "inequivalent": EXIT_FAIL, "unknown": EXIT_UNKNOWN}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    inputs: list[str]
    budget: int = DEFAULT_BUDGET
    conjugation: bool = False
    conjugators: list[str] = field(default_factory=list)
    rotation: bool = False
    threads: int = 1
    output_format: str = "json"

    def __post_init__(self):
        if self.budget <= 0:
            raise UsageError("budget must be positive")
        if self.threads <= 0:
            raise UsageError("--threads must be positive")


def _default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None


def _config(args, inputs) -> RunConfig:
    budget = args.budget if getattr(args, "budget", None) is not None else _default_budget()
    conj = [c.strip() for c in (getattr(args, "conjugators", None) or "").split(",") if c.strip()]
    return RunConfig(
        command=args.command,
        inputs=inputs,
        budget=budget,
        conjugation=getattr(args, "conjugation", False) or bool(conj),
        conjugators=conj,
        rotation=getattr(args, "rotation", False),
        threads=getattr(args, "threads", 1),
        output_format=getattr(args, "format", "json"),
    )


def _emit(out, data) -> None:
    out.write(dumps(data))


def _load(path) -> dict:
    try:
        return formats.read_json(path)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


# ---------------------------------------------------------------- commands


def cmd_verify(args, out) -> int:
    data = _load(args.file)
    where = str(args.file)
    checks: dict[str, bool] = {}
    if args.replay or "moves" in data:
        source, target, moves = formats.load_certificate(data, where)
        try:
            result = replay(source, moves)
            checks["replay"] = result.key == target.key
        except (IndexError, ValueError) as exc:
            raise InputError(f"{where}: certificate does not replay: {exc}") from None
        kind = "certificate"
    elif "genus" in data:
        fib = formats.load_fibration(data, where)
        checks.update(validate(fib).checks)
        kind = "fibration"
    elif "context" in data:
        f, expected = formats.load_factorization(data, where)
        checks["parse"] = True
        if expected is not None:
            checks["expected_product"] = f.context.equal(f.product, expected)
        kind = "factorization"
    elif "degree" in data:
        m, expected = formats.load_monodromy(data, where)
        checks["parse"] = True
        if expected is not None:
            prod = compose_all(m.factors, m.degree)
            checks["expected_product"] = BraidGroup(m.degree).equal(prod, expected)
        kind = "monodromy"
    else:
        raise InputError(f"{where}: unrecognized file kind")
    ok = all(checks.values())
    _emit(out, {"file": where, "kind": kind, "checks": checks, "ok": ok})
    return EXIT_OK if ok else EXIT_FAIL


def _conjugators(cfg: RunConfig, ctx):
    if not cfg.conjugators:
        return None
    return [formats._parse(ctx.parse, c, f"--conjugators[{k}]") for k, c in enumerate(cfg.conjugators)]


def cmd_equiv(args, out) -> int:
    cfg = _config(args, [args.first, args.second])
    da, db = _load(args.first), _load(args.second)
    if args.kas:
        f1 = formats.load_fibration(da, str(args.first))
        f2 = formats.load_fibration(db, str(args.second))
        if (f1.genus, f1.base) != (f2.genus, f2.base):
            raise UsageError("fibrations must share genus and base")
        ctx = f1.context
        verdict = kas_equivalent(
            f1, f2, budget=cfg.budget, conjugators=_conjugators(cfg, ctx), rotation=cfg.rotation, threads=cfg.threads
        )
        source, target = f1.as_factorization(), f2.as_factorization()
    else:
        source, _ = formats.load_factorization(da, str(args.first))
        target, _ = formats.load_factorization(db, str(args.second))
        if source.context != target.context:
            raise UsageError(f"context mismatch: {source.context.name} vs {target.context.name}")
        ctx = source.context
        verdict = hurwitz_equivalent(
            source,
            target,
            conjugation=cfg.conjugation,
            conjugators=_conjugators(cfg, ctx),
            rotation=cfg.rotation,
            budget=cfg.budget,
            threads=cfg.threads,
        )
    report = {"context": ctx.name, "mode": "kas" if args.kas else "hurwitz", **verdict.to_dict(ctx)}
    if verdict.equivalent and args.certificate:
        Path(args.certificate).write_text(dumps(formats.dump_certificate(source, target, verdict.certificate)))
        report["certificate_file"] = str(args.certificate)
    _emit(out, report)
    return _VERDICT_EXIT[verdict.status]


def cmd_orbit(args, out) -> int:
    cfg = _config(args, [args.file])
    f, _ = formats.load_factorization(_load(args.file), str(args.file))
    result = orbit_enumerate(
        f,
        cfg.budget,
        conjugation=cfg.conjugation,
        conjugators=_conjugators(cfg, f.context),
        rotation=cfg.rotation,
        threads=cfg.threads,
    )
    _emit(
        out,
        {
            "context": f.context.name,
            "size": len(result),
            "exhausted": result.exhausted,
            "explored": result.explored,
            "members": [m.format() for m in result.members],
        },
    )
    return EXIT_OK


def cmd_vankampen(args, out) -> int:
    cfg = _config(args, [args.file])
    m, _ = formats.load_monodromy(_load(args.file), str(args.file))
    p = presentation(m)
    if args.simplify:
        p = tietze_simplify(p, args.simplify)
    try:
        ks = [int(k) for k in args.homs.split(",") if k.strip()]
    except ValueError:
        raise UsageError(f"--homs expects comma-separated integers, got {args.homs!r}") from None
    try:
        fp = fingerprint(p, ks, threads=cfg.threads)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if cfg.output_format == "json":
        _emit(out, {"generators": p.ngens, "relators": [r.format() for r in p.relators], "fingerprint": fp.to_dict()})
    else:
        out.write(p.format())
        out.write(json.dumps(fp.to_dict(), sort_keys=True) + "\n")
    return EXIT_OK


def cmd_fibersum(args, out) -> int:
    f1 = formats.load_fibration(_load(args.first), str(args.first))
    f2 = formats.load_fibration(_load(args.second), str(args.second))
    if f1.genus != f2.genus:
        raise UsageError(f"genus mismatch: {f1.genus} vs {f2.genus}")
    if f1.base != f2.base:
        raise UsageError(f"base mismatch: {f1.base} vs {f2.base}")
    psi = formats._parse(lambda s: MCGWord.parse(s, f1.genus), args.psi, "--psi")
    result = fiber_sum(f1, f2, psi)
    text = dumps(formats.dump_fibration(result))
    # re-read the emitted file and recheck it
    again = formats.load_fibration(json.loads(text), "output")
    ctx = again.context
    M = ctx.matrix(again.as_factorization().product)
    P1, P2 = ctx.matrix(f1.as_factorization().product), ctx.matrix(f2.as_factorization().product)
    S = ctx.matrix(psi)
    Sinv = ctx.matrix(psi.inverse())
    contract = bool((M == P1.dot(Sinv).dot(P2).dot(S)).all())
    ok = contract and (validate(again).ok or not (validate(f1).ok and validate(f2).ok))
    if args.output:
        Path(args.output).write_text(text)
    else:
        out.write(text)
    if not ok:
        print("fibersum: output failed the product contract check", file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_coxeter(args, out) -> int:
    try:
        chain = [int(x) for x in args.chain.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--chain expects comma-separated integers, got {args.chain!r}") from None
    try:
        w = coxeter_element(chain, args.genus)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    data = {"genus": args.genus, "chain": chain, "word": w.format(), "length": len(w)}
    if args.matrix:
        data["symplectic"] = np.asarray(symplectic_rep(w)).tolist()
    _emit(out, data)
    return EXIT_OK


def cmd_relators(args, out) -> int:
    if not 1 <= args.genus <= 4:
        raise UsageError("genus must lie in 1..4")
    report = verify_presentation_relators(args.genus)
    _emit(out, report.to_dict())
    return EXIT_OK if report.ok else EXIT_FAIL


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="monodromy", description="Monodromy factorization workbench")
    sub = parser.add_subparsers(dest="command", required=True)

    def search_flags(p):
        p.add_argument("--budget", type=int, default=None, help=f"node expansions (default ${BUDGET_ENV} or {DEFAULT_BUDGET})")
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--conjugation", action="store_true", help="allow simultaneous conjugation")
        p.add_argument("--conjugators", help="comma-separated conjugator words (implies --conjugation)")
        p.add_argument("--rotation", action="store_true", help="allow cyclic rotation of the factors")

    p = sub.add_parser("verify", help="check a factorization, fibration, monodromy or certificate file")
    p.add_argument("file")
    p.add_argument("--replay", action="store_true", help="treat the file as a certificate and replay it")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("equiv", help="Hurwitz (or Kas) equivalence of two files")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--kas", action="store_true", help="inputs are fibration files; conjugation always on")
    p.add_argument("--certificate", help="write a replayable certificate here when equivalent")
    search_flags(p)
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("orbit", help="enumerate the Hurwitz orbit of a factorization")
    p.add_argument("file")
    search_flags(p)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("vankampen", help="complement presentation and fingerprint of a braid monodromy")
    p.add_argument("file")
    p.add_argument("--simplify", type=int, default=0, metavar="BUDGET", help="Tietze simplification budget")
    p.add_argument("--homs", default="2,3", help="symmetric-group degrees for hom counts")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_vankampen)

    p = sub.add_parser("fibersum", help="fiber sum of two fibration files")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--psi", default="e", help="gluing class as an mcg word")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_fibersum)

    p = sub.add_parser("coxeter", help="Coxeter element of a chain of twists")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--chain", required=True, help="comma-separated twist indices")
    p.add_argument("--matrix", action="store_true")
    p.set_defaults(func=cmd_coxeter)

    p = sub.add_parser("relators", help="evaluate the braid / mapping class group relators")
    p.add_argument("--genus", type=int, required=True)
    p.set_defaults(func=cmd_relators)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args, out)
    except (UsageError, InputError) as exc:
        print(f"{args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
