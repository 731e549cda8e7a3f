"""Command-line surface: matrix computation, fall distributions, and the
exact verification suite.

Subcommands
-----------
rho WORD --n N --max-balls N     transition matrix of a word
cabled WORD --n N --cable K      cabled transition matrix
fall --cable K --a A --b B       fall distribution at one cabled crossing
check SUITE [size flags]         run verification checks; exit 0 iff all pass

Exit codes: 0 pass, 1 check failure, 2 usage error.  Output is byte
deterministic for fixed inputs: entries are sorted by (column, row) and all
polynomials are canonical.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import cabled as cabledmod
from . import multiball
from .braid import parse_word
from .qpoly import QPoly, fraction_to_json
from .report import CheckReport

MAX_DIM = 100_000
SUITES = ("braid", "hecke", "specht", "cabled", "stochastic", "all")


def _value_json(v, eval_q: Fraction | None):
    if eval_q is None:
        return v.to_json()
    return fraction_to_json(v)


def _matrix_json(m, meta: dict, eval_q: Fraction | None) -> dict:
    if eval_q is not None:
        m = m.eval_at(eval_q)
    out = dict(meta)
    out["dim"] = m.dim
    out["entries"] = [
        [row, col, _value_json(v, eval_q)] for row, col, v in m.entries_sorted()
    ]
    return out


def _matrix_pretty(m, meta: dict, eval_q: Fraction | None, states) -> str:
    if eval_q is not None:
        m = m.eval_at(eval_q)
    head = " ".join(f"{k}={v}" for k, v in meta.items())
    lines = [f"{head} dim={m.dim}"]
    for row, col, v in m.entries_sorted():
        u = list(states(col))
        w = list(states(row))
        lines.append(f"  u={u} -> v={w}: {v}")
    return "\n".join(lines)


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _parse_eval_q(text: str | None) -> Fraction | None:
    if text is None:
        return None
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"bad rational {text!r}; expected p/q or an integer") from None


def cmd_rho(args) -> int:
    word = parse_word(args.word, args.n)
    N = args.max_balls
    if N < 1:
        raise ValueError("--max-balls must be >= 1")
    if (N + 1) ** args.n > MAX_DIM:
        raise ValueError(f"state space (N+1)^n exceeds desk-scale cap {MAX_DIM}")
    eval_q = _parse_eval_q(args.eval_q)
    m = multiball.rho_matrix(word, N)
    meta = {"n": args.n, "N": N}
    if args.format == "json":
        _emit(json.dumps(_matrix_json(m, meta, eval_q)), args.out)
    else:
        states = lambda idx: multiball.index_state(idx, args.n, N)
        _emit(_matrix_pretty(m, {**meta, "word": f"'{word}'"}, eval_q, states), args.out)
    return 0


def cmd_cabled(args) -> int:
    word = parse_word(args.word, args.n)
    K = args.cable
    if K < 1:
        raise ValueError("--cable must be >= 1")
    if (K + 1) ** args.n > MAX_DIM:
        raise ValueError(f"state space (K+1)^n exceeds desk-scale cap {MAX_DIM}")
    eval_q = _parse_eval_q(args.eval_q)
    m = cabledmod.rho_cabled_matrix(word, K)
    meta = {"n": args.n, "K": K}
    if args.format == "json":
        _emit(json.dumps(_matrix_json(m, meta, eval_q)), args.out)
    else:
        states = lambda idx: cabledmod.index_cable(idx, args.n, K)
        _emit(_matrix_pretty(m, {**meta, "word": f"'{word}'"}, eval_q, states), args.out)
    return 0


def cmd_fall(args) -> int:
    K, a, b = args.cable, args.a, args.b
    dist = cabledmod.fall_distribution(K, a, b)
    eval_q = _parse_eval_q(args.eval_q)
    if args.format == "json":
        payload = {
            "K": K,
            "a": a,
            "b": b,
            "dist": {str(c): _value_json(p if eval_q is None else p.eval_at(eval_q), eval_q)
                     for c, p in dist.items()},
        }
        _emit(json.dumps(payload), args.out)
    else:
        lines = [f"K={K} a={a} b={b}"]
        for c, p in dist.items():
            shown = p if eval_q is None else p.eval_at(eval_q)
            lines.append(f"  c={c}: {shown}")
        _emit("\n".join(lines), args.out)
    return 0


def _specht_cases(n: int, N: int, k: int | None):
    """Admissible kernel checks at or below the requested size."""
    for Nw in range(1, min(N, n - 2) + 1):
        if k is not None and 1 <= k <= n - Nw - 1:
            yield n, Nw, k
        else:
            for kw in range(1, n - Nw):
                yield n, Nw, kw


def _run_suite(args) -> list[CheckReport]:
    n, N, K = args.n, args.max_balls, args.cable
    suite = args.suite
    reports: list[CheckReport] = []
    if suite in ("braid", "all"):
        if n >= 3:
            reports.append(multiball.check_braid_relation(n, N))
        if n >= 4:
            reports.append(multiball.check_far_commutativity(n, N))
        if n < 3:
            raise ValueError("braid relation checks need --n >= 3")
    if suite in ("hecke", "all"):
        reports.append(multiball.check_hecke(n, N, corrupt=args.corrupt_generator))
    if suite in ("specht", "all"):
        if suite == "specht":
            k = args.k if args.k is not None else 1
            reports.append(multiball.check_specht(n, N, k))
        else:
            for case in _specht_cases(n, N, args.k):
                reports.append(multiball.check_specht(*case))
    if suite in ("cabled", "all"):
        reports.append(cabledmod.check_cabled_braid_relation(max(n, 3), K))
        reports.append(cabledmod.check_cabled_formula(K))
        for a in range(K + 1):
            for b in range(K + 1):
                reports.append(cabledmod.check_oracle_placement_invariance(K, a, b))
    if suite in ("stochastic", "all"):
        reports.append(multiball.check_stochastic(n, N))
    if suite == "all":
        for x in (Fraction(1, 2), Fraction(2), Fraction(-1)):
            reports.append(multiball.check_inverse(n, N, x))
    return reports


def cmd_check(args) -> int:
    if args.n < 2:
        raise ValueError("--n must be >= 2")
    if args.max_balls < 1:
        raise ValueError("--max-balls must be >= 1")
    if not 1 <= args.cable <= 4:
        raise ValueError("--cable must be in 1..4 (oracle enumeration is desk-scale)")
    if (args.max_balls + 1) ** args.n > MAX_DIM or (args.cable + 1) ** args.n > MAX_DIM:
        raise ValueError(f"state space exceeds desk-scale cap {MAX_DIM}")
    reports = _run_suite(args)
    passed = all(r.passed for r in reports)
    if args.format == "json":
        print(json.dumps({"passed": passed, "reports": [r.to_json() for r in reports]}))
    else:
        for r in reports:
            print(r.summary())
        print("ALL CHECKS PASSED" if passed else "CHECK FAILURES")
    return 0 if passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidbowl",
        description="Exact bowling-alley transition matrices for positive braids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rho = sub.add_parser("rho", help="transition matrix of a word")
    p_rho.add_argument("word", help="whitespace-separated generator indices, e.g. '1 2 1'")
    p_rho.add_argument("--n", type=int, required=True, help="number of strands")
    p_rho.add_argument("--max-balls", type=int, required=True, help="per-lane ball cap N")
    p_rho.add_argument("--eval-q", help="evaluate entries at rational q (p/q or integer)")
    p_rho.add_argument("--out", help="write output to a file instead of stdout")
    p_rho.add_argument("--format", choices=("json", "pretty"), default="json")
    p_rho.set_defaults(handler=cmd_rho)

    p_cab = sub.add_parser("cabled", help="cabled transition matrix of a word")
    p_cab.add_argument("word")
    p_cab.add_argument("--n", type=int, required=True)
    p_cab.add_argument("--cable", type=int, required=True, help="parallel lanes per group K")
    p_cab.add_argument("--eval-q")
    p_cab.add_argument("--out")
    p_cab.add_argument("--format", choices=("json", "pretty"), default="json")
    p_cab.set_defaults(handler=cmd_cabled)

    p_fall = sub.add_parser("fall", help="fall distribution at one cabled crossing")
    p_fall.add_argument("--cable", type=int, required=True)
    p_fall.add_argument("--a", type=int, required=True, help="balls entering the over group")
    p_fall.add_argument("--b", type=int, required=True, help="balls entering the under group")
    p_fall.add_argument("--eval-q")
    p_fall.add_argument("--out")
    p_fall.add_argument("--format", choices=("json", "pretty"), default="json")
    p_fall.set_defaults(handler=cmd_fall)

    p_chk = sub.add_parser("check", help="run exact verification checks")
    p_chk.add_argument("suite", choices=SUITES)
    p_chk.add_argument("--n", type=int, default=3)
    p_chk.add_argument("--max-balls", type=int, default=2)
    p_chk.add_argument("--cable", type=int, default=2)
    p_chk.add_argument("--k", type=int, default=None, help="window start for specht")
    p_chk.add_argument("--format", choices=("json", "pretty"), default="pretty")
    # Test-only negative control: perturb a generator so hecke must fail.
    p_chk.add_argument("--corrupt-generator", action="store_true", help=argparse.SUPPRESS)
    p_chk.set_defaults(handler=cmd_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
