"""Command-line front end.

    ratinterp coeffs --f EXPR [--x-family SPEC] [--c-family SPEC] [--depth N] [--json]
    ratinterp term   --f EXPR [--x-family SPEC] [--c-family SPEC] --n N [--json]
    ratinterp lemma1 --n N --i I
    ratinterp verify NAME|all [--seed S] [--mode symbolic|points] [--order N] [--n N]
                     [--k K] [--samples M] [--beta B] [--a A] [--x X] [--json]

Exit status: 0 on success, 1 when a verification fails, 2 on usage or parse errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import identities as ids
from .divdiff import DEFAULT_DEPTH_BOUND, lemma1_check
from .errors import RatInterpError
from .expr import parse_expression, parse_family, parse_rational, evaluate
from .families import InterpolationContext
from .interp import X, expansion_term, rational_newton_coeffs
from .poly import C_FAMILY, X_FAMILY

SEED_ENV = "RATINTERP_SEED"
MODES = {"symbolic": ids.MODE_SYMBOLIC, "points": ids.MODE_POINTS}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _rational_or_symbolic(text):
    if text == "symbolic":
        return None
    return parse_rational(text)


def build_parser():
    parser = _Parser(prog="ratinterp", description="Exact rational Newton interpolation and q-series identity checks.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    for name in ("coeffs", "term"):
        p = sub.add_parser(name)
        p.add_argument("--f", required=True, help="rational function of x")
        p.add_argument("--x-family", default="symbolic", help="node family spec")
        p.add_argument("--c-family", default="symbolic", help="pole family spec")
        p.add_argument("--json", action="store_true")
        if name == "coeffs":
            p.add_argument("--depth", type=int, default=3)
        else:
            p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("lemma1")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify")
    p.add_argument("name", choices=sorted(ids.IDENTITIES) + ["all"])
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--mode", choices=sorted(MODES), default=None)
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--beta", default=None, help="p/q or 'symbolic'")
    p.add_argument("--a", default=None, help="p/q")
    p.add_argument("--x", default=None, help="p/q")
    p.add_argument("--json", action="store_true")
    return parser


def _context(args):
    return InterpolationContext(parse_family(args.x_family, X_FAMILY), parse_family(args.c_family, C_FAMILY))


def _function(text):
    return evaluate(parse_expression(text), text)


def cmd_coeffs(args, out):
    if args.depth < 0:
        raise UsageError("--depth must be nonnegative")
    coeffs = rational_newton_coeffs(_function(args.f), _context(args), args.depth, X)
    if args.json:
        out.write(json.dumps({"coefficients": [str(c) for c in coeffs]}) + "\n")
    else:
        for n, c in enumerate(coeffs):
            out.write(f"A{n} = {c}\n")
    return 0


def cmd_term(args, out):
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    ctx = _context(args)
    coeff = rational_newton_coeffs(_function(args.f), ctx, args.n, X)[args.n]
    term = coeff * expansion_term(args.n, ctx, X)
    if args.json:
        out.write(json.dumps({"n": args.n, "coefficient": str(coeff), "term": str(term)}) + "\n")
    else:
        out.write(f"{term}\n")
    return 0


def cmd_lemma1(args, out):
    if not (0 <= args.n <= DEFAULT_DEPTH_BOUND and 0 <= args.i <= DEFAULT_DEPTH_BOUND):
        raise UsageError(f"--n and --i must lie in 0..{DEFAULT_DEPTH_BOUND}")
    value = lemma1_check(args.n, args.i)
    if args.json:
        out.write(json.dumps({"n": args.n, "i": args.i, "value": str(value)}) + "\n")
    else:
        out.write(f"{value}\n")
    return 0


# which flags each identity understands, and the keyword they map to
_VERIFY_FLAGS = {
    "andrews": {"n": "N", "mode": "mode", "samples": "samples", "seed": "seed"},
    "gasper": {"k": "k_max"},
    "gosper": {"n": "n", "samples": "samples", "seed": "seed"},
    "jackson": {"order": "order", "beta": "beta", "a": "a", "x": "x"},
    "lemma_main": {"k": "k"},
    "liu": {"n": "n_max"},
    "proposition": {"k": "k"},
    "q_vandermonde": {"n": "n", "mode": "mode", "samples": "samples", "seed": "seed"},
    "sears": {"n": "n", "samples": "samples", "seed": "seed"},
    "sylvester": {"order": "order", "beta": "beta"},
}


def _verify_kwargs(name, args, seed):
    allowed = _VERIFY_FLAGS[name]
    given = {
        "order": args.order,
        "n": args.n,
        "k": args.k,
        "samples": args.samples,
        "mode": args.mode,
        "beta": args.beta,
        "a": args.a,
        "x": args.x,
    }
    kwargs = {}
    for flag, value in given.items():
        if value is None:
            continue
        if flag not in allowed:
            raise UsageError(f"verify {name} does not take --{flag}")
        if flag in ("order", "n", "k", "samples") and value < 0:
            raise UsageError(f"--{flag} must be nonnegative")
        if flag == "mode":
            value = MODES[value]
        elif flag == "beta":
            value = _rational_or_symbolic(value)
        elif flag in ("a", "x"):
            value = parse_rational(value)
        kwargs[allowed[flag]] = value
    if "seed" in allowed:
        kwargs["seed"] = seed
    return kwargs


def _default_seed():
    text = os.environ.get(SEED_ENV)
    if text is None:
        return ids.DEFAULT_SEED
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"{SEED_ENV} must be an integer, got {text!r}") from None


def cmd_verify(args, out):
    seed = args.seed if args.seed is not None else _default_seed()
    if args.name == "all":
        extra = [f for f in ("order", "n", "k", "samples", "mode", "beta", "a", "x") if getattr(args, f) is not None]
        if extra:
            raise UsageError("verify all only takes --seed and --json")
        reports = ids.verify_all(seed)
    else:
        reports = [ids.IDENTITIES[args.name](**_verify_kwargs(args.name, args, seed))]
    if args.json:
        payload = [r.to_dict() for r in reports] if args.name == "all" else reports[0].to_dict()
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        for r in reports:
            out.write(r.summary() + "\n")
    return 0 if all(r.verified for r in reports) else 1


COMMANDS = {"coeffs": cmd_coeffs, "term": cmd_term, "lemma1": cmd_lemma1, "verify": cmd_verify}


def run_command(argv, out=None, err=None):
    """Run one command; returns the exit status."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return 2
    except SystemExit as exc:  # --help
        return 0 if exc.code in (0, None) else 2
    except ids.SamplingExhausted as exc:
        err.write(f"error: {exc}\n")
        return 1
    except (RatInterpError, ZeroDivisionError) as exc:
        err.write(f"error: {exc}\n")
        return 2


def main(argv=None):
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
