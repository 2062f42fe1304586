"""Command-line frontend.

Exit codes: 0 success, 1 check failure, 2 usage or parse error, 3 mathematical
failure (pole or reconstruction).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, fields, replace
from fractions import Fraction

from .exactfield import PoleError, ReconstructionError
from .superpartition import Superpartition

SCHEMA_VERSION = 1
EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_MATH = 0, 1, 2, 3


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    max_total_degree: int = 12
    max_variables: int = 5
    reconstruction_degree_bound: int | None = None
    output: str = "text"
    brute_norms: bool = False

    def __post_init__(self):
        if self.max_total_degree < 1 or self.max_variables < 1:
            raise UsageError("bounds must be positive")
        if self.output not in ("text", "json"):
            raise UsageError(f"unknown output format {self.output!r}")


def load_config(args) -> RunConfig:
    cfg = RunConfig()
    if args.config:
        with open(args.config) as fh:
            data = json.load(fh)
        known = {f.name for f in fields(RunConfig)}
        unknown = set(data) - known
        if unknown:
            raise UsageError(f"unknown config keys: {sorted(unknown)}")
        cfg = replace(cfg, **data)
    overrides = {}
    if args.output is not None:
        overrides["output"] = args.output
    if args.max_degree is not None:
        overrides["max_total_degree"] = args.max_degree
    if getattr(args, "brute", False):
        overrides["brute_norms"] = True
    return replace(cfg, **overrides)


def emit(payload: dict, text: str, cfg: RunConfig):
    if cfg.output == "json":
        print(json.dumps(dict(payload, schema=SCHEMA_VERSION), sort_keys=False))
    else:
        print(text)


def _parse_spart(text: str) -> Superpartition:
    try:
        return Superpartition.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _parse_alpha(text):
    if text is None:
        return None
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad rational {text!r}") from exc


def _sign(text: str) -> str:
    table = {"+": "+", "plus": "+", "-": "-", "minus": "-"}
    if text not in table:
        raise UsageError(f"sign must be plus or minus, got {text!r}")
    return table[text]


# ----------------------------------------------------------------- commands

def cmd_sjack(args, cfg: RunConfig) -> int:
    from .sjack import jack
    from .superpoly import SymFunc
    lam = _parse_spart(args.spart)
    if lam.n > cfg.max_total_degree:
        raise UsageError(f"degree {lam.n} exceeds --max-degree {cfg.max_total_degree}")
    rec = jack(lam)
    f = rec.monomial() if args.basis == "monomial" else rec.powersum()
    if args.dual:
        f = f.scale(rec.b)
    alpha = _parse_alpha(args.alpha)
    if alpha is not None:
        f = SymFunc(f.basis, {k: v.evaluate(alpha) for k, v in f.coeffs.items()})
    name = ("Q" if args.dual else "P") + str(lam)
    emit({"spart": str(lam), "basis": args.basis, "dual": args.dual,
          "alpha": None if alpha is None else str(alpha), "coeffs": f.to_json()},
         f"{name} = {f}", cfg)
    return EXIT_OK


def _chi_report(args, cfg):
    from .singvec import build_chi, verify_chi
    r, s, sign = args.r, args.s, _sign(args.sign)
    if r * s <= 0:
        raise UsageError("need rs > 0")
    if (sign == "+" and r > s) or (sign == "-" and r < s):
        raise UsageError("sign plus needs r <= s and sign minus needs r >= s")
    if r * s > cfg.max_total_degree:
        raise UsageError(f"rs = {r * s} exceeds --max-degree {cfg.max_total_degree}")
    nvars = r if sign == "+" else s
    if nvars > cfg.max_variables:
        raise UsageError(f"{nvars} variables exceed the configured bound {cfg.max_variables}")
    mode = "brute" if cfg.brute_norms else "formula"
    return verify_chi(build_chi(r, s, sign, norm_mode=mode))


def cmd_chi(args, cfg: RunConfig) -> int:
    rep = _chi_report(args, cfg)
    lines = [f"chi^{rep.sign}_{{{rep.r},{rep.s}}} ({rep.sector}), Gamma = {rep.gamma}",
             "expansion:"]
    lines += [f"  {om}: {c}" for om, c in sorted(rep.expansion.items(),
                                                 key=lambda kv: (kv[0].circledast().parts,
                                                                 kv[0].star().parts), reverse=True)]
    lines.append(f"vector: {rep.fock}")
    lines += [f"  {g}: {'ok' if ok else 'FAILED'}" for g, ok in rep.checks]
    emit(rep.to_json(), "\n".join(lines), cfg)
    return EXIT_OK if rep.passed else EXIT_CHECK


def cmd_verify_chi(args, cfg: RunConfig) -> int:
    rep = _chi_report(args, cfg)
    text = "\n".join(f"{g}: {'ok' if ok else 'FAILED'}" for g, ok in rep.checks)
    emit({"r": rep.r, "s": rep.s, "sign": rep.sign,
          "checks": [{"generator": g, "annihilated": ok} for g, ok in rep.checks]}, text, cfg)
    return EXIT_OK if rep.passed else EXIT_CHECK


def cmd_conjecture_b1(args, cfg: RunConfig) -> int:
    from .clustering import conjecture_b1_verify
    if args.a < args.l or args.l < 1:
        raise UsageError("need a >= l >= 1")
    res = conjecture_b1_verify(args.a, args.l, args.sector)
    lines = [f"B({args.l};t) m_Gamma_bar, a={args.a}, {res.sector}: "
             f"{'holds' if res.holds else 'does not hold'}"
             + ("" if res.asserted else " (reported only)")]
    for k, X in res.rhs.items():
        lines.append(f"  (-t)^{k}: " + " + ".join(f"P{x}" for x in X))
    if res.mismatched_k:
        lines.append(f"  mismatched powers: {res.mismatched_k}")
    emit(res.to_json(), "\n".join(lines), cfg)
    return EXIT_OK if res.holds or not res.asserted else EXIT_CHECK


def cmd_pfaffian(args, cfg: RunConfig) -> int:
    from .clustering import pfaffian_identity_report
    if args.n < 1:
        raise UsageError("n >= 1")
    rep = pfaffian_identity_report(args.n, args.sector)
    state = {1: "holds", -1: "holds up to a global sign", 0: "fails"}[rep.sign]
    emit({"n": rep.n, "sector": rep.sector, "sign": rep.sign, "holds": rep.holds},
         f"pfaffian identity n={rep.n} {rep.sector}: {state}", cfg)
    return EXIT_OK if rep.holds else EXIT_CHECK


def cmd_verify_suite(args, cfg: RunConfig) -> int:
    from .suite import run_suite
    results = run_suite(args.level)
    emit({"level": args.level,
          "results": [{"criterion": r.key, "title": r.title, "passed": r.passed, "detail": r.detail}
                      for r in results]},
         "\n".join(r.line() for r in results), cfg)
    return EXIT_OK if all(r.passed for r in results) else EXIT_CHECK


# ------------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("text", "json"), default=None)
    common.add_argument("--max-degree", type=int, default=None)
    common.add_argument("--config", help="JSON file with RunConfig fields")

    p = argparse.ArgumentParser(prog="superjack", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("sjack", parents=[common], help="print a Jack superpolynomial")
    q.add_argument("spart")
    q.add_argument("--basis", choices=("monomial", "powersum"), default="monomial")
    q.add_argument("--alpha", help="rational value of alpha")
    q.add_argument("--dual", action="store_true", help="print Q = b P instead of P")
    q.set_defaults(func=cmd_sjack)

    for name, fn, hlp in (("chi", cmd_chi, "build and verify a singular vector"),
                          ("verify-chi", cmd_verify_chi, "only the verification checks")):
        q = sub.add_parser(name, parents=[common], help=hlp)
        q.add_argument("r", type=int)
        q.add_argument("s", type=int)
        q.add_argument("--sign", default="plus")
        q.add_argument("--brute", action="store_true", help="norms from constant terms")
        q.set_defaults(func=fn)

    q = sub.add_parser("conjecture-b1", parents=[common], help="B(l;t) m_Gamma_bar in P^(-3)")
    q.add_argument("a", type=int)
    q.add_argument("l", type=int)
    q.add_argument("--sector", choices=("NS", "R"), default="NS")
    q.set_defaults(func=cmd_conjecture_b1)

    q = sub.add_parser("pfaffian-identity", parents=[common], help="pf * Delta = P^(-3)_mu")
    q.add_argument("n", type=int)
    q.add_argument("--sector", choices=("NS", "R"), default="NS")
    q.set_defaults(func=cmd_pfaffian)

    q = sub.add_parser("verify-suite", parents=[common], help="run the verification battery")
    q.add_argument("--level", choices=("quick", "full"), default="quick")
    q.set_defaults(func=cmd_verify_suite)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = load_config(args)
        return args.func(args, cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PoleError, ReconstructionError, ArithmeticError) as exc:
        print(f"mathematical failure: {exc}", file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
