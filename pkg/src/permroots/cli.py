"""Command-line surface: probability tables, oracle verification, asymptotic
reports, and envelope certification demos.

Exit codes: 0 success, 1 verification failure, 2 usage error.  Data goes to
stdout, diagnostics to stderr.  Exact rationals are serialized as "num/den"
decimal strings so nothing is lost on the wire; float renderings ride along
as advisory fields only.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

from . import asymptotics, envelope, oracle, rootgf
from .series import TruncatedSeries, exp_series


def _rational_arg(text: str) -> Fraction:
    try:
        if "/" in text:
            num, den = text.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational literal: {text!r}") from exc


def _root_degree(text: str) -> int:
    n = int(text)
    if n < 2:
        raise argparse.ArgumentTypeError(f"root degree must be >= 2, got {n}")
    return n


def _nonnegative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {v}")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _decay_exponent(text: str) -> int:
    v = int(text)
    if v < 2:
        raise argparse.ArgumentTypeError(f"decay exponent must be >= 2, got {v}")
    return v


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _interval_json(iv: asymptotics.Interval) -> dict:
    return {"lo": iv.lo, "hi": iv.hi}


def cmd_probs(args: argparse.Namespace) -> int:
    rows = rootgf.probability_table(rootgf.RootProblem(args.n, args.order))
    records = [
        {
            "k": k,
            "count": str(count),
            "p_num": str(p.numerator),
            "p_den": str(p.denominator),
            "p_float": float(p),
        }
        for k, count, p in rows
    ]
    if args.format == "json":
        doc = {"n": args.n, "order": args.order, "records": records}
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["k", "count", "p_num", "p_den", "p_float"])
        for rec in records:
            writer.writerow(
                [rec["k"], rec["count"], rec["p_num"], rec["p_den"], repr(rec["p_float"])]
            )
        sys.stdout.write(buf.getvalue())
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    n, max_k = args.n, args.max_k
    p = rootgf.build_p(rootgf.RootProblem(n, max_k))
    gf_counts = []
    fact = 1
    for k in range(max_k + 1):
        if k:
            fact *= k
        count = p[k] * fact
        if count.denominator != 1:
            sys.stdout.write(f"FAIL k={k}: p_k * k! is not an integer ({count})\n")
            return 1
        gf_counts.append(count.numerator)

    if args.mode in ("cycletype", "both"):
        for k in range(max_k + 1):
            got = oracle.count_by_cycle_types(k, n)
            if got != gf_counts[k]:
                sys.stdout.write(
                    f"FAIL k={k}: cycle-type count {got} != series count {gf_counts[k]}\n"
                )
                return 1
        sys.stdout.write(f"ok cycletype: k <= {max_k} agree for n={n}\n")

    if args.mode in ("image", "both"):
        top = min(max_k, oracle.IMAGE_ENUMERATION_CAP)
        for k in range(top + 1):
            got = oracle.nth_power_image_count(k, n)
            if got != gf_counts[k]:
                sys.stdout.write(
                    f"FAIL k={k}: image count {got} != series count {gf_counts[k]}\n"
                )
                return 1
        sys.stdout.write(f"ok image: k <= {top} agree for n={n}\n")

    sys.stdout.write("PASS\n")
    return 0


def cmd_asym(args: argparse.Namespace) -> int:
    rep = asymptotics.final_constant(args.n, args.order)
    doc = {
        "n": rep.n,
        "order": rep.order,
        "exponent": _frac_str(rep.exponent),
        "darboux_constant": _interval_json(rep.darboux_constant),
        "b_at_one": _interval_json(rep.b_at_1),
        "final_constant": _interval_json(rep.final_constant),
        "fit_slope": rep.fit_slope,
        "ratios": [[m, r] for m, r in rep.ratios],
    }
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    return 0


def cmd_envelope(args: argparse.Namespace) -> int:
    c, k, order = args.c, args.k, args.order
    if c < 0:
        sys.stderr.write("envelope constant must be >= 0\n")
        return 2
    coeffs = [Fraction(0)] + [c / Fraction(m**k) for m in range(1, order + 1)]
    observed = exp_series(TruncatedSeries(coeffs))
    observed_max = max(
        (observed[m] * m**k for m in range(1, order + 1)), default=Fraction(0)
    )
    certified = envelope.exp_envelope(
        envelope.Envelope(c, k),
        zeta_cutoff=args.zeta_cutoff,
        exp_terms=args.exp_terms,
    ).C
    ok = observed_max <= certified
    doc = {
        "c": _frac_str(c),
        "k": k,
        "order": order,
        "zeta_cutoff": args.zeta_cutoff,
        "exp_terms": args.exp_terms,
        "certified_constant": _frac_str(certified),
        "certified_float": float(certified) if certified < 10**300 else math.inf,
        "observed_max": _frac_str(observed_max),
        "observed_float": float(observed_max),
        "certified": ok,
    }
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permroots",
        description="Exact tables, verification, and asymptotics for the "
        "probability that a random permutation has an n-th root.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_probs = sub.add_parser("probs", help="table of counts and probabilities p_k")
    p_probs.add_argument("--n", type=_root_degree, required=True, help="root degree (>= 2)")
    p_probs.add_argument("--order", type=_nonnegative, required=True, help="largest k")
    p_probs.add_argument("--format", choices=("csv", "json"), default="csv")
    p_probs.set_defaults(func=cmd_probs)

    p_verify = sub.add_parser("verify", help="cross-check the series against brute-force counts")
    p_verify.add_argument("--n", type=_root_degree, required=True)
    p_verify.add_argument("--max-k", type=_nonnegative, required=True)
    p_verify.add_argument("--mode", choices=("image", "cycletype", "both"), default="both")
    p_verify.set_defaults(func=cmd_verify)

    p_asym = sub.add_parser("asym", help="asymptotic exponent, constant interval, diagnostics")
    p_asym.add_argument("--n", type=_root_degree, required=True)
    p_asym.add_argument("--order", type=_nonnegative, required=True)
    p_asym.set_defaults(func=cmd_asym)

    p_env = sub.add_parser("envelope", help="certify exp of a quadratic-decay series")
    p_env.add_argument("--c", type=_rational_arg, required=True, help="envelope constant, e.g. 1 or 3/2")
    p_env.add_argument("--k", type=_decay_exponent, required=True, help="decay exponent (>= 2)")
    p_env.add_argument("--order", type=_nonnegative, required=True)
    p_env.add_argument("--zeta-cutoff", type=_positive, default=envelope.DEFAULT_ZETA_CUTOFF)
    p_env.add_argument("--exp-terms", type=_positive, default=None)
    p_env.set_defaults(func=cmd_envelope)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
