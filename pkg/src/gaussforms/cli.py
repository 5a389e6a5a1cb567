"""Command-line interface: ``gaussforms <command> ...`` (or ``python -m gaussforms``).

Exit status is 0 on success, 1 when a verification finds a failure and 2 on
usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Any, Optional, Sequence

from . import binary, oracle, primes, quaternary, ramanujan
from .gaussian import GaussianInt, GaussianParseError, parse_gaussian

# lets argparse take "-3+4i" or "-2i" as positionals instead of unknown options
_NEGATIVE_LITERAL = re.compile(r"^-(\d+([+-]\d*)?i?|\d*i)$|^-\d*\.\d+$")

SWEEP_DEFAULTS = {
    "universality": 2000,
    "lemma1": 10**4,
    "niven": 30,
    "composition": 10**4,
    "descent": 10**5,
    "class-c": 10**4,
    "nu": 10**4,
    "ramanujan": 10**4,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = _NEGATIVE_LITERAL


def _literal(text: str) -> GaussianInt:
    try:
        return parse_gaussian(text)
    except GaussianParseError as exc:
        raise UsageError(f"invalid Gaussian integer\n{exc.caret()}") from exc


def _integer(text: str) -> int:
    try:
        return int(text)
    except ValueError as exc:
        raise UsageError(f"invalid integer {text!r}") from exc


def _canonical_prime(text: str) -> GaussianInt:
    p = _literal(text)
    if not primes.is_canonical_prime(p):
        hint = ""
        if not p.is_zero() and primes.is_canonical_prime(primes.canonicalize(p)[1]):
            hint = f" (its canonical associate is {primes.canonicalize(p)[1]})"
        raise UsageError(f"{p} is not a canonical Gaussian prime{hint}")
    return p


def _cmd_factor(args) -> tuple[int, dict, str]:
    z = _literal(args.z)
    if z.is_zero():
        raise UsageError("0 has no factorization")
    f = primes.factorize(z)
    return 0, {"input": str(z), "result": f.to_dict()}, str(f)


def _cmd_nu(args):
    z = _literal(args.z)
    if z.is_zero():
        raise UsageError("nu(0) is undefined")
    n = primes.nu(z)
    return 0, {"input": str(z), "result": n}, str(n)


def _cmd_classify(args):
    p = _canonical_prime(args.p)
    cls = primes.classify(p)
    return 0, {"input": str(p), "result": cls.value}, cls.value


def _cmd_represent_binary(args):
    p = _canonical_prime(args.p)
    cls = primes.classify(p)
    if cls is primes.PrimeClass.C:
        wit = binary.represent_class_C(p)
        squares = f"({wit.x})^2 + ({wit.y})^2"
        text = f"{p} = i({squares})" if wit.twisted else f"{p} = {squares}"
        witness = {"x": str(wit.x), "y": str(wit.y), "twisted": wit.twisted}
        form = "i(x^2 + y^2)" if wit.twisted else "x^2 + y^2"
    else:
        x, y = binary.descend(p)
        text = f"{p} = ({x})^2 + i({y})^2"
        witness = {"x": str(x), "y": str(y)}
        form = "x^2 + iy^2"
    return 0, {"input": str(p), "result": {"class": cls.value, "form": form}, "witness": witness}, text


def _cmd_represent(args):
    t = _literal(args.z)
    rep = quaternary.represent(t)
    return 0, {"input": str(t), "result": str(quaternary.evaluate(rep)), "witness": rep.to_dict()}, str(rep)


def _cmd_niven(args):
    a, b = _integer(args.a), _integer(args.b)
    target = GaussianInt(a, 2 * b)
    ok = binary.niven_mordell_representable(a, b)
    payload: dict[str, Any] = {"input": {"a": a, "b": b, "target": str(target)},
                               "result": "representable" if ok else "not representable"}
    if not ok:
        return 0, payload, "not representable"
    x, y = binary.two_squares(target)
    payload["witness"] = {"x": str(x), "y": str(y)}
    return 0, payload, f"representable: {target} = ({x})^2 + ({y})^2"


def _cmd_ramanujan(args):
    if args.bound < 1:
        raise UsageError("--bound must be positive")
    try:
        spec = ramanujan.resolve(args.spec)
        form = ramanujan.restrict(spec)
        origin = f" from {spec}"
    except ValueError as exc:
        try:
            form = ramanujan.parse_form(args.spec)
        except ValueError:
            raise UsageError(str(exc)) from exc
        spec, origin = None, ""
    miss = ramanujan.represents_all_up_to(form, args.bound)
    payload = {
        "input": {"spec": str(spec) if spec else str(form), "bound": args.bound},
        "result": {"form": list(form.coeffs), "first_miss": miss},
    }
    if miss is None:
        return 0, payload, f"{form}{origin}: represents every n in 1..{args.bound}"
    return 1, payload, f"{form}{origin}: first unrepresented n = {miss}"


def _cmd_sweep(args):
    kind = args.kind
    bound = args.bound if args.bound is not None else SWEEP_DEFAULTS[kind]
    seed = args.seed
    w = args.workers
    if bound < 1 or w < 1:
        raise UsageError("--bound and --workers must be positive")
    if kind == "universality":
        report = oracle.universality_sweep(bound, workers=w)
    elif kind == "lemma1":
        report = oracle.lemma1_sweep(max(bound, 2), workers=w)
    elif kind == "composition":
        report = oracle.verify_composition_random(bound, args.range, seed=seed, workers=w)
    elif kind == "niven":
        report = oracle.niven_sweep(bound, workers=w)
    elif kind == "descent":
        report = oracle.descent_sweep(bound, workers=w)
    elif kind == "class-c":
        report = oracle.class_c_sweep(bound, workers=w)
    elif kind == "nu":
        report = oracle.nu_sweep(bound, seed=seed, workers=w)
    else:
        report = oracle.ramanujan_sweep(bound, workers=w)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(report.to_json() + "\n")
    payload = {"input": {"kind": kind, "bound": bound, "seed": seed}, "result":
               "pass" if report.passed else "fail", "report": report.to_dict()}
    return (0 if report.passed else 1), payload, report.summary()


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="structured JSON output")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS,
                        help="print nothing; report through the exit status")

    parser = _Parser(prog="gaussforms", parents=[common],
                     description="Representations by x^2 + iy^2 + z^2 + iw^2 over Z[i].")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    add("factor", _cmd_factor, "canonical factorization").add_argument("z")
    add("nu", _cmd_nu, "total prime multiplicity").add_argument("z")
    add("classify", _cmd_classify, "class A, B or C of a canonical prime").add_argument("p")
    add("represent-binary", _cmd_represent_binary,
        "x^2 + iy^2 witness (or two-square witness for class C)").add_argument("p")
    add("represent", _cmd_represent, "x^2 + iy^2 + z^2 + iw^2 witness").add_argument("z")
    p = add("niven", _cmd_niven, "is a + 2bi a sum of two squares")
    p.add_argument("a")
    p.add_argument("b")
    p = add("ramanujan", _cmd_ramanujan, "restrict to an integer form and sweep it")
    p.add_argument("spec", help="preset (1212, 1218, 1242, 1248) or 'x=t, y=(1-i)t, ...'")
    p.add_argument("--bound", type=int, default=10**4)
    p = add("sweep", _cmd_sweep, "exhaustive verification sweeps")
    p.add_argument("kind", choices=sorted(SWEEP_DEFAULTS))
    p.add_argument("--bound", type=int, default=None,
                   help="norm bound, |a|,|b| bound or trial count depending on kind")
    p.add_argument("--seed", type=int, default=oracle.DEFAULT_SEED)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--range", type=int, default=50, help="component range for composition")
    p.add_argument("--output", help="also write the JSON report to this path")
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    as_json = getattr(args, "json", False)
    quiet = getattr(args, "quiet", False)
    try:
        status, payload, text = args.func(args)
    except UsageError as exc:
        print(f"gaussforms {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if not quiet:
        if as_json:
            print(json.dumps({"command": args.command, **payload}, sort_keys=True))
        else:
            print(text)
    return status


def main() -> None:
    sys.exit(run())
