"""Solve ``n(k)_b = a (mod m)`` for the repetition count ``k >= 1``.

`solve_prime_power` handles ``m = p^alpha`` by reducing to ``b^(Lk) = a2
(mod p^alpha2)`` and then splitting on whether the unit group modulo
``p^alpha2`` is cyclic. `solve` factors a general modulus and intersects the
prime-power answers.

The prime-power routine is written as a state machine whose states carry the
step numerals I-XIV, so a `TraceLog` lines up with a hand computation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .concat import digit_length
from .modmath import (
    MAX_MODULUS,
    CapacityError,
    DomainError,
    discrete_log,
    euler_phi_prime_power,
    factorize,
    is_prime,
    mod_inverse,
    primitive_root,
    two_adic_decompose,
    val,
)
from .sets import (
    EMPTY,
    NATURALS,
    SolutionSet,
    contains,
    enumerate_members,
    finite,
    intersect,
    progression,
)

__all__ = [
    "CongruenceProblem",
    "TraceStep",
    "TraceLog",
    "solve_prime_power",
    "solve",
    "intersect",
    "contains",
    "enumerate_members",
    "STEP_LABELS",
    "NEXT_STEPS",
]

STEP_LABELS = ("I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X", "XI", "XII", "XIII", "XIV")

# Control-flow edges of the prime-power algorithm; None marks termination.
NEXT_STEPS: dict[str, frozenset] = {
    "I": frozenset({"II", None}),
    "II": frozenset({"III", "XII", None}),
    "III": frozenset({"IV", "VII", None}),
    "IV": frozenset({"V", None}),
    "V": frozenset({"VI", None}),
    "VI": frozenset({None}),
    "VII": frozenset({"VIII", None}),
    "VIII": frozenset({"IX", "X", None}),
    "IX": frozenset({None}),
    "X": frozenset({"XI", None}),
    "XI": frozenset({"IX", None}),
    "XII": frozenset({"IV", "XIII", None}),
    "XIII": frozenset({"XIV", None}),
    "XIV": frozenset({None}),
}


@dataclass(frozen=True)
class CongruenceProblem:
    """``n(k)_b = a (mod m)``."""

    n: int
    b: int
    a: int
    m: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainError(f"n must be >= 1, got {self.n}")
        if self.b < 2:
            raise DomainError(f"base must be >= 2, got {self.b}")
        if self.m < 1:
            raise DomainError(f"modulus must be >= 1, got {self.m}")

    def to_dict(self) -> dict:
        return {k: str(v) for k, v in vars(self).items()}


@dataclass
class TraceStep:
    label: str
    bindings: dict[str, int] = field(default_factory=dict)
    note: str = ""


@dataclass
class TraceLog:
    steps: list[TraceStep] = field(default_factory=list)

    def record(self, label: str, note: str = "", **bindings: int) -> TraceStep:
        step = TraceStep(label, dict(bindings), note)
        self.steps.append(step)
        return step

    def labels(self) -> list[str]:
        return [s.label for s in self.steps]

    def extend(self, other: "TraceLog") -> None:
        self.steps.extend(other.steps)

    def find(self, label: str) -> TraceStep:
        return next(s for s in self.steps if s.label == label)

    def to_list(self) -> list[dict]:
        return [
            {"label": s.label, "bindings": {k: str(v) for k, v in s.bindings.items()}, "note": s.note}
            for s in self.steps
        ]


def _signed(x: int, m: int) -> int:
    """Least-magnitude representative of ``x`` modulo ``m``."""
    x %= m
    return x - m if x > m - x else x


def _threshold(alpha2: int, delta: int, L: int) -> int:
    return -(-alpha2 // (delta * L))


def solve_prime_power(n: int, b: int, a: int, p: int, alpha: int) -> tuple[SolutionSet, TraceLog]:
    """All ``k >= 1`` with ``n(k)_b = a (mod p^alpha)``, plus the steps taken.

    Raises:
        DomainError: ``p`` is not prime, or ``n``, ``b``, ``alpha`` out of range.
        CapacityError: ``p^alpha`` exceeds 2^62.
    """
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if alpha < 1 or n < 1 or b < 2:
        raise DomainError("need alpha >= 1, n >= 1, b >= 2")
    pa = p**alpha
    if pa > MAX_MODULUS:
        raise CapacityError(f"{p}^{alpha} exceeds 2^62")

    trace = TraceLog()
    # values bound by earlier steps and read by later ones
    L = alpha2 = a2 = m2 = delta = f = mu1 = mu2 = nu1 = nu2 = 0
    step = "I"
    while True:
        if step == "I":
            d = math.gcd(n, pa)
            ok = a % d == 0
            trace.record("I", p=p, alpha=alpha, d=d)
            if not ok:
                return EMPTY, trace
            step = "II"

        elif step == "II":
            L = digit_length(n, b)
            alpha1 = alpha - val(d, p)
            c = 1 - b**L
            beta = val(c, p)
            alpha2 = alpha1 + beta
            m1 = p**alpha1
            m2 = p**alpha2
            a1 = (a // d) * mod_inverse(n // d, m1) % m1
            a2 = (1 - a1 * c) % m2
            bind = dict(L=L, alpha1=alpha1, beta=beta, alpha2=alpha2, a1=a1, a2=a2)
            if m2 > 1 and abs(_signed(a2, m2)) < a2:
                bind["a2_signed"] = _signed(a2, m2)
            trace.record("II", **bind)
            if alpha2 == 0:
                return NATURALS, trace
            step = "XII" if p != 2 or alpha2 < 3 else "III"

        elif step == "III":
            trace.record("III", b_mod_2=b % 2, a2_mod_2=a2 % 2)
            if b % 2 != a2 % 2:
                return EMPTY, trace
            step = "VII" if b % 2 == 1 else "IV"

        elif step == "IV":
            delta = val(b, p)
            trace.record("IV", delta=delta)
            if a2 == 0:
                t = _threshold(alpha2, delta, L)
                trace.steps[-1].bindings["k_min"] = t
                return progression(0, 1, t), trace
            step = "V"

        elif step == "V":
            eps = val(a2, p)
            trace.record("V", epsilon=eps)
            if eps % (delta * L):
                return EMPTY, trace
            step = "VI"

        elif step == "VI":
            k = eps // (delta * L)
            holds = pow(b, eps // delta, m2) == a2
            trace.record("VI", k=k, holds=int(holds))
            return (finite([k]) if holds else EMPTY), trace

        elif step == "VII":
            db = two_adic_decompose(b, alpha2)
            da = two_adic_decompose(a2, alpha2)
            mu1, nu1, mu2, nu2 = db.mu, db.nu, da.mu, da.nu
            trace.record("VII", mu1=mu1, nu1=nu1, mu2=mu2, nu2=nu2)
            if (mu1 * L) % 2 == 0 and mu2 % 2 == 1:
                return EMPTY, trace
            step = "VIII"

        elif step == "VIII":
            f = math.gcd(nu1 * L, 1 << (alpha2 - 2))
            trace.record("VIII", f=f)
            if nu2 % f:
                return EMPTY, trace
            step = "X" if (mu1 * L) % 2 == 1 else "IX"

        elif step == "IX":
            mod = (1 << (alpha2 - 2)) // f
            r = (nu2 // f) * mod_inverse(nu1 * L // f, mod) % mod
            trace.record("IX", residue=r, modulus=mod)
            return progression(r, mod), trace

        elif step == "X":
            whole = f == 1 << (alpha2 - 2)
            trace.record("X", f=f, bound=1 << (alpha2 - 2))
            if whole:
                return progression(mu2, 2), trace
            step = "XI"

        elif step == "XI":
            trace.record("XI", mu2=mu2, nu2_over_f=nu2 // f)
            if mu2 % 2 != (nu2 // f) % 2:
                return EMPTY, trace
            step = "IX"

        elif step == "XII":
            pb, pa2 = int(b % p == 0), int(a2 % p == 0)
            trace.record("XII", p_divides_b=pb, p_divides_a2=pa2)
            if pb != pa2:
                return EMPTY, trace
            step = "IV" if pb else "XIII"

        elif step == "XIII":
            order = euler_phi_prime_power(p, alpha2)
            if order == 1:
                # unit group mod 2 is trivial: every odd power matches
                trace.record("XIII", g=1, ind_b=0, ind_a2=0, f=1, order=1)
                return NATURALS, trace
            g = primitive_root(p, alpha2)
            ind_b = discrete_log(g, b, p, alpha2)
            ind_a2 = discrete_log(g, a2, p, alpha2)
            f = math.gcd(L * ind_b, order)
            trace.record("XIII", g=g, ind_b=ind_b, ind_a2=ind_a2, f=f, order=order)
            if ind_a2 % f:
                return EMPTY, trace
            step = "XIV"

        elif step == "XIV":
            mod = order // f
            r = (ind_a2 // f) * mod_inverse(L * ind_b // f, mod) % mod
            trace.record("XIV", residue=r, modulus=mod)
            return progression(r, mod), trace

        else:  # pragma: no cover
            raise AssertionError(f"unknown step {step}")


def solve(problem: CongruenceProblem) -> tuple[SolutionSet, TraceLog]:
    """All ``k >= 1`` with ``n(k)_b = a (mod m)`` for any modulus ``m >= 1``.

    Prime-power parts are solved independently and intersected in increasing
    order of the prime.
    """
    n, b, a, m = problem.n, problem.b, problem.a, problem.m
    trace = TraceLog()
    if m == 1:
        trace.record("CRT", note="m = 1", m=1)
        return NATURALS, trace
    result: SolutionSet = NATURALS
    for p, e in factorize(m):
        part, sub = solve_prime_power(n, b, a, p, e)
        trace.extend(sub)
        result = intersect(result, part)
    rec = trace.record("CRT", note=str(result), m=m)
    if hasattr(result, "modulus"):
        rec.bindings.update(residue=result.residue, modulus=result.modulus, min=result.min)
    return result, trace
