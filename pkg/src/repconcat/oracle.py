"""Brute-force ground truth for the solver.

Nothing here goes through the reduction chain or the closed form: the oracle
appends one copy of ``n`` at a time and reduces modulo ``m``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .sets import Progression, contains
from .solver import CongruenceProblem, solve

DEFAULT_KMAX = 2000


def _shift(n: int, b: int) -> int:
    """``b`` raised to the number of base-``b`` digits of ``n``."""
    shift = 1
    while n:
        n //= b
        shift *= b
    return shift


def residues(problem: CongruenceProblem, kmax: int):
    """Yield ``(k, n(k)_b mod m)`` for ``k = 1..kmax``."""
    n, m = problem.n, problem.m
    shift = _shift(n, problem.b) % m
    r = 0
    for k in range(1, kmax + 1):
        r = (r * shift + n) % m
        yield k, r


def brute_force_solve(problem: CongruenceProblem, kmax: int) -> list[int]:
    """Every ``k`` in ``[1, kmax]`` with ``n(k)_b = a (mod m)``."""
    target = problem.a % problem.m
    return [k for k, r in residues(problem, kmax) if r == target]


@dataclass
class CrossCheckReport:
    problem: CongruenceProblem
    kmax: int
    mismatches: list[tuple[int, bool, bool]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "problem": self.problem.to_dict(),
            "kmax": str(self.kmax),
            "passed": self.passed,
            "mismatches": [
                {"k": str(k), "oracle": o, "solver": s} for k, o, s in self.mismatches
            ],
        }


def default_kmax(solution) -> int:
    """Large enough that at least four members of a progression fall in range."""
    if isinstance(solution, Progression):
        return max(DEFAULT_KMAX, solution.min + 4 * solution.modulus)
    return DEFAULT_KMAX


def cross_check(problem: CongruenceProblem, kmax: int, solution=None) -> CrossCheckReport:
    """Compare oracle membership with the solver's set on ``[1, kmax]``.

    ``solution`` may be passed in when the caller already ran the solver.
    """
    if solution is None:
        solution, _ = solve(problem)
    hits = set(brute_force_solve(problem, kmax))
    report = CrossCheckReport(problem, kmax)
    for k in range(1, kmax + 1):
        expected = k in hits
        got = contains(solution, k)
        if expected != got:
            report.mismatches.append((k, expected, got))
    return report


# -- random problems ---------------------------------------------------------

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13)


def random_problem(rng: random.Random, max_n: int = 10**6, max_m: int = 10**5) -> CongruenceProblem:
    """Draw a problem from a mix of families that reach every branch.

    Uniform draws almost never land on a solvable congruence modulo a high
    power of a prime dividing the base, so part of the mix picks prime-power
    moduli and residues that some small ``k`` actually attains.
    """
    b = rng.randint(2, 16)
    family = rng.random()
    if family < 0.35:
        m = rng.randint(1, max_m)
    elif family < 0.75:
        divisors = [p for p in _SMALL_PRIMES if b % p == 0]
        p = rng.choice(divisors if divisors and rng.random() < 0.6 else _SMALL_PRIMES)
        top = 1
        while p ** (top + 1) <= max_m:
            top += 1
        m = p ** rng.randint(1, top)
    else:
        m = rng.choice(_SMALL_PRIMES) ** rng.randint(1, 3) * rng.randint(1, 50)
        m = min(m, max_m)
    # short n keeps b^(Lk) off zero modulo high powers of primes dividing b
    n = rng.randint(1, max_n) if rng.random() < 0.7 else rng.randint(1, 300)
    if rng.random() < 0.3:
        # multiples of a prime power make gcd(n, p^alpha) non-trivial
        n = min(max_n, n - n % (rng.choice(_SMALL_PRIMES) ** rng.randint(1, 4)) or 1)
    if rng.random() < 0.5:
        probe = CongruenceProblem(n, b, 0, m)
        k0 = rng.randint(1, 3) if rng.random() < 0.5 else rng.randint(1, 12)
        a = dict(residues(probe, k0))[k0]
        a += m * rng.randint(-1, 1)
    else:
        a = rng.randint(-m, m)
    return CongruenceProblem(n, b, a, m)


def random_problems(count: int, seed: int) -> list[CongruenceProblem]:
    rng = random.Random(seed)
    return [random_problem(rng) for _ in range(count)]
