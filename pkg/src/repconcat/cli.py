"""Command-line interface.

    repconcat solve --n 18 --base 3 --a 2 --m 208 [--trace] [--enumerate N] [--json]
    repconcat oracle --n 18 --base 3 --a 2 --m 208 --kmax 500
    repconcat oracle --random 100 --seed 7
    repconcat vpal check 1818
    repconcat vpal family --n 18 --kmax 6
    repconcat vpal theorem --rho 1001

Exit codes: 0 success, 1 oracle mismatch, 2 usage error, 3 capacity error.
"""
from __future__ import annotations

import argparse
import json
import sys

from .concat import digit_reverse
from .modmath import CapacityError, DomainError
from .oracle import cross_check, default_kmax, random_problems
from .sets import enumerate_members
from .solver import CongruenceProblem, TraceLog, solve
from .vpalindrome import concat_family_check, is_v_palindrome, theorem_51_number, v

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3

SYMBOLS = {
    "alpha1": "α₁",
    "alpha2": "α₂",
    "alpha": "α",
    "beta": "β",
    "delta": "δ",
    "epsilon": "ε",
    "a1": "a₁",
    "a2": "a₂",
    "a2_signed": "a₂ (signed)",
    "mu1": "μ₁",
    "mu2": "μ₂",
    "nu1": "ν₁",
    "nu2": "ν₂",
    "nu2_over_f": "ν₂/f",
    "ind_b": "ind b",
    "ind_a2": "ind a₂",
    "k_min": "k ≥",
}


def render_trace(trace: TraceLog) -> list[str]:
    lines = []
    for step in trace.steps:
        label = "CRT" if step.label == "CRT" else f"({step.label})"
        body = ", ".join(f"{SYMBOLS.get(k, k)}={val}" for k, val in step.bindings.items())
        if step.note:
            body = f"{body}; {step.note}" if body else step.note
        lines.append(f"{label:>7} {body}")
    return lines


def _base(text: str) -> int:
    b = int(text)
    if not 2 <= b <= 36:
        raise argparse.ArgumentTypeError("base must be in [2, 36]")
    return b


def _positive(text: str) -> int:
    x = int(text)
    if x < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return x


def _add_problem_args(p: argparse.ArgumentParser, required: bool) -> None:
    p.add_argument("--n", type=_positive, required=required)
    p.add_argument("--base", type=_base, required=required)
    p.add_argument("--a", type=int, required=required)
    p.add_argument("--m", type=_positive, required=required)
    p.add_argument("--json", action="store_true", help="emit a single JSON document")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="repconcat",
        description="Which repeated concatenations n(k)_b lie in a residue class a + mZ.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ps = sub.add_parser("solve", help="solve n(k)_b = a (mod m) for k >= 1")
    _add_problem_args(ps, required=True)
    ps.add_argument("--trace", action="store_true", help="print the algorithm steps")
    ps.add_argument("--enumerate", type=_positive, metavar="COUNT", help="list the first COUNT members")

    po = sub.add_parser("oracle", help="cross-check the solver against brute force")
    _add_problem_args(po, required=False)
    po.add_argument("--kmax", type=_positive)
    po.add_argument("--random", type=_positive, metavar="COUNT", help="check COUNT random problems")
    po.add_argument("--seed", type=int, default=0)

    pv = sub.add_parser("vpal", help="v-palindrome tools (decimal)")
    vsub = pv.add_subparsers(dest="vcommand", required=True)
    pc = vsub.add_parser("check", help="is N a v-palindrome?")
    pc.add_argument("N", type=_positive)
    pc.add_argument("--json", action="store_true")
    pf = vsub.add_parser("family", help="v-palindromy of n(k)_10 for k = 1..kmax")
    pf.add_argument("--n", type=_positive, required=True)
    pf.add_argument("--kmax", type=_positive, required=True)
    pf.add_argument("--json", action="store_true")
    pt = vsub.add_parser("theorem", help="18*rho for a 0/1 palindrome rho")
    pt.add_argument("--rho", type=_positive, required=True)
    pt.add_argument("--json", action="store_true")
    return parser


def _emit(doc: dict) -> None:
    print(json.dumps(doc, indent=2, ensure_ascii=False))


def cmd_solve(args: argparse.Namespace) -> int:
    problem = CongruenceProblem(args.n, args.base, args.a, args.m)
    solution, trace = solve(problem)
    members = enumerate_members(solution, args.enumerate) if args.enumerate else None
    if args.json:
        doc = {"problem": problem.to_dict(), "solution": solution.to_dict()}
        if members is not None:
            doc["members"] = [str(k) for k in members]
        if args.trace:
            doc["trace"] = trace.to_list()
        _emit(doc)
        return EXIT_OK
    print(solution)
    if members is not None:
        print(" ".join(map(str, members)))
    if args.trace:
        print("\n".join(render_trace(trace)))
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.random:
        problems = random_problems(args.random, args.seed)
    else:
        missing = [f"--{k}" for k in ("n", "base", "a", "m") if getattr(args, k) is None]
        if missing:
            parser.error("oracle needs " + ", ".join(missing) + " or --random")
        problems = [CongruenceProblem(args.n, args.base, args.a, args.m)]

    reports = []
    for problem in problems:
        solution, _ = solve(problem)
        kmax = args.kmax or default_kmax(solution)
        reports.append(cross_check(problem, kmax, solution))
    passed = all(r.passed for r in reports)

    if args.json:
        doc = {"passed": passed, "count": str(len(reports))}
        if args.random:
            doc["seed"] = str(args.seed)
            doc["failures"] = [r.to_dict() for r in reports if not r.passed]
        else:
            doc.update(reports[0].to_dict())
        _emit(doc)
    else:
        for r in reports:
            if not r.passed:
                p = r.problem
                print(f"FAIL n={p.n} b={p.b} a={p.a} m={p.m}")
                for k, o, s in r.mismatches[:20]:
                    print(f"  k={k}: oracle={o} solver={s}")
        print(f"{'PASS' if passed else 'FAIL'} ({len(reports)} problem{'s' if len(reports) != 1 else ''})")
    return EXIT_OK if passed else EXIT_MISMATCH


def cmd_vpal(args: argparse.Namespace) -> int:
    if args.vcommand == "check":
        n = args.N
        r = digit_reverse(n, 10)
        result = is_v_palindrome(n)
        vn, vr = v(n), v(r)
        if args.json:
            _emit({"n": str(n), "r": str(r), "v_n": str(vn), "v_r": str(vr), "v_palindrome": result})
        else:
            print("true" if result else "false")
            print(f"v({n}) = {vn}")
            print(f"v({r}) = {vr}")
    elif args.vcommand == "family":
        rows = concat_family_check(args.n, args.kmax)
        if args.json:
            _emit({"n": str(args.n), "rows": [{"k": str(k), "v_palindrome": ok} for k, ok in rows]})
        else:
            for k, ok in rows:
                print(f"{k}\t{'true' if ok else 'false'}")
    else:
        number = theorem_51_number(args.rho)
        result = is_v_palindrome(number)
        if args.json:
            _emit({"rho": str(args.rho), "number": str(number), "v_palindrome": result})
        else:
            print(f"{number} — v-palindrome: {'true' if result else 'false'}")
        if not result:
            return EXIT_MISMATCH
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "solve":
            return cmd_solve(args)
        if args.command == "oracle":
            return cmd_oracle(args, parser)
        return cmd_vpal(args)
    except CapacityError as exc:
        print(f"repconcat: capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except DomainError as exc:
        print(f"repconcat: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
