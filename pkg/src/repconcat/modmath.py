"""Exact modular arithmetic: valuations, inverses, factorization, primitive
roots, discrete logarithms and the (-1)^mu * 5^nu structure of odd residues
modulo powers of two.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

MAX_MODULUS = 1 << 62
TRIAL_BOUND = 10**6
RHO_SEED = 0x5EED
RHO_BUDGET = 1 << 20
EXHAUSTIVE_ORDER = 1 << 20


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class NotInvertibleError(DomainError):
    """The element shares a factor with the modulus."""


class NoPrimitiveRootError(DomainError):
    """The unit group modulo 2^alpha is not cyclic for alpha >= 3."""


class CapacityError(ArithmeticError):
    """The input is too large for the exact methods used here."""


# -- primality ---------------------------------------------------------------

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Miller-Rabin with the first 13 prime bases.

    Deterministic for n < 3.3 * 10^24, which covers every modulus accepted by
    this package.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=1)
def _small_primes(limit: int = TRIAL_BOUND) -> tuple[int, ...]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, limit + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


@lru_cache(maxsize=4096)
def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")


# -- valuation, inverse ------------------------------------------------------


def val(c: int, p: int) -> int:
    """Return the exponent of the exact power of ``p`` dividing ``c``.

    The sign of ``c`` is ignored.

    Raises:
        DomainError: ``c`` is zero or ``p`` is not prime.
    """
    if c == 0:
        raise DomainError("valuation of 0 is undefined")
    _check_prime(p)
    c = abs(c)
    gamma = 0
    while c % p == 0:
        c //= p
        gamma += 1
    return gamma


def mod_inverse(x: int, m: int) -> int:
    """Return ``y`` in ``[0, m)`` with ``x*y = 1 (mod m)``; 0 when ``m == 1``."""
    if m < 1:
        raise DomainError(f"modulus must be >= 1, got {m}")
    if m == 1:
        return 0
    if math.gcd(x, m) != 1:
        raise NotInvertibleError(f"{x} is not invertible modulo {m}")
    return pow(x % m, -1, m)


# -- factorization -----------------------------------------------------------


@dataclass(frozen=True)
class Factorization:
    """Canonical factorization: primes strictly increasing, exponents >= 1."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)):
            raise DomainError("primes must be strictly increasing")
        for p, e in self.factors:
            if e < 1 or not is_prime(p):
                raise DomainError(f"bad factor {p}^{e}")

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def value(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out

    def prime_powers(self) -> list[int]:
        return [p**e for p, e in self.factors]


def _pollard_brent(n: int, rng: random.Random) -> int:
    """Return a nontrivial factor of the odd composite ``n``."""
    steps = 0
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        batch = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(batch, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += batch
            r *= 2
            steps += r
            if steps > RHO_BUDGET:
                raise CapacityError(f"rho budget exhausted factoring {n}")
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _split(n: int, rng: random.Random, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    r = math.isqrt(n)
    if r * r == n:
        _split(r, rng, out)
        _split(r, rng, out)
        return
    d = _pollard_brent(n, rng)
    _split(d, rng, out)
    _split(n // d, rng, out)


def factorize(m: int) -> Factorization:
    """Factor ``m >= 2`` by trial division up to 10^6, then Brent's rho.

    The rho stage uses a fixed seed so results and timings are reproducible.

    Raises:
        DomainError: ``m < 2``.
        CapacityError: the rho iteration budget ran out.
    """
    if m < 2:
        raise DomainError(f"cannot factor {m}")
    found: dict[int, int] = {}
    rest = m
    for i, p in enumerate(_small_primes()):
        if p * p > rest:
            break
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            found[p] = e
        # a large prime cofactor would otherwise cost the full sieve walk
        if (i & 1023) == 1023 and is_prime(rest):
            break
    if rest > 1:
        _split(rest, random.Random(RHO_SEED), found)
    return Factorization(tuple(sorted(found.items())))


def euler_phi_prime_power(p: int, alpha: int) -> int:
    return p ** (alpha - 1) * (p - 1)


# -- primitive roots ---------------------------------------------------------


@lru_cache(maxsize=256)
def _order_primes(p: int, alpha: int) -> tuple[int, ...]:
    qs = {q for q, _ in factorize(p - 1)} if p > 2 else set()
    if alpha > 1:
        qs.add(p)
    return tuple(sorted(qs))


def _generates(g: int, p: int, alpha: int) -> bool:
    m = p**alpha
    if g % p == 0:
        return False
    phi = euler_phi_prime_power(p, alpha)
    return all(pow(g, phi // q, m) != 1 for q in _order_primes(p, alpha))


@lru_cache(maxsize=256)
def primitive_root(p: int, alpha: int) -> int:
    """Smallest primitive root modulo ``p**alpha``.

    Raises:
        NoPrimitiveRootError: ``p == 2`` and ``alpha >= 3``.
    """
    _check_prime(p)
    if alpha < 1:
        raise DomainError("alpha must be >= 1")
    if p == 2:
        if alpha >= 3:
            raise NoPrimitiveRootError("no primitive root modulo 2^alpha for alpha >= 3")
        return 1 if alpha == 1 else 3
    return next(g for g in range(2, p**alpha) if _generates(g, p, alpha))


@lru_cache(maxsize=256)
def _is_generator(g: int, p: int, alpha: int) -> bool:
    if p == 2 and alpha == 1:
        return g % 2 == 1
    return _generates(g, p, alpha)


# -- discrete logarithm ------------------------------------------------------


@lru_cache(maxsize=64)
def _log_table(g: int, m: int, order: int) -> dict[int, int]:
    table = {}
    x = 1
    for i in range(order):
        table[x] = i
        x = x * g % m
    return table


def _bsgs(g: int, h: int, m: int, order: int) -> int:
    """Solve ``g^x = h (mod m)`` for ``0 <= x < order``, ``g`` of that order."""
    step = math.isqrt(order - 1) + 1
    baby = {}
    x = 1
    for j in range(step):
        baby.setdefault(x, j)
        x = x * g % m
    giant = pow(g, -step, m)
    y = h
    for i in range(step):
        j = baby.get(y)
        if j is not None:
            return i * step + j
        y = y * giant % m
    raise DomainError(f"{h} is not a power of {g} modulo {m}")


def _pohlig_hellman(g: int, h: int, m: int, order: int) -> int:
    residues, moduli = [], []
    for q, e in factorize(order) if order > 1 else ():
        qe = q**e
        cofactor = order // qe
        gq = pow(g, cofactor, m)
        hq = pow(h, cofactor, m)
        gamma = pow(gq, q ** (e - 1), m)  # order q
        x = 0
        for k in range(e):
            hk = pow(pow(gq, -x, m) * hq % m, q ** (e - 1 - k), m)
            x += _bsgs(gamma, hk, m, q) * q**k
        residues.append(x)
        moduli.append(qe)
    x, _ = crt_pair_list(residues, moduli)
    return x


def discrete_log(g: int, x: int, p: int, alpha: int) -> int:
    """Index of ``x`` to the base ``g`` modulo ``p**alpha``.

    Groups of order up to 2^20 use a cached exhaustive table; larger groups go
    through Pohlig-Hellman with baby-step giant-step on each prime order.

    Raises:
        DomainError: ``p`` divides ``x`` or ``g`` is not a primitive root.
    """
    _check_prime(p)
    m = p**alpha
    if m > MAX_MODULUS:
        raise CapacityError(f"modulus {p}^{alpha} exceeds 2^62")
    if x % p == 0:
        raise DomainError(f"{x} is not a unit modulo {p}^{alpha}")
    g %= m
    if not _is_generator(g, p, alpha):
        raise DomainError(f"{g} is not a primitive root modulo {p}^{alpha}")
    order = euler_phi_prime_power(p, alpha)
    x %= m
    if order <= EXHAUSTIVE_ORDER:
        return _log_table(g, m, order)[x]
    return _pohlig_hellman(g, x, m, order)


# -- CRT helper --------------------------------------------------------------


def crt_pair(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int] | None:
    """Combine ``x = r1 (mod m1)`` and ``x = r2 (mod m2)`` for any moduli.

    Returns ``(r, lcm)`` or ``None`` when the classes are disjoint.
    """
    g = math.gcd(m1, m2)
    if (r2 - r1) % g:
        return None
    lcm = m1 // g * m2
    t = (r2 - r1) // g * mod_inverse(m1 // g, m2 // g) % (m2 // g)
    return (r1 + m1 * t) % lcm, lcm


def crt_pair_list(residues: list[int], moduli: list[int]) -> tuple[int, int]:
    r, m = 0, 1
    for ri, mi in zip(residues, moduli):
        combined = crt_pair(r, m, ri, mi)
        if combined is None:
            raise DomainError("inconsistent congruences")
        r, m = combined
    return r, m


# -- 2-adic structure --------------------------------------------------------


@dataclass(frozen=True)
class TwoAdicDecomposition:
    """``x = (-1)^mu * 5^nu (mod 2^alpha)`` with ``mu`` in {0, 1}."""

    mu: int
    nu: int
    alpha: int

    def recompose(self) -> int:
        m = 1 << self.alpha
        return (-1) ** self.mu * pow(5, self.nu, m) % m


def two_adic_decompose(x: int, alpha: int) -> TwoAdicDecomposition:
    """Write the odd residue ``x`` as ``(-1)^mu * 5^nu`` modulo ``2^alpha``.

    ``nu`` is recovered one bit at a time, using that ``5^(2^i)`` is
    ``1 + 2^(i+2)`` modulo ``2^(i+3)``.
    """
    if x % 2 == 0:
        raise DomainError(f"{x} is even")
    if alpha < 3:
        raise DomainError("alpha must be >= 3")
    m = 1 << alpha
    mu = 0 if x % 4 == 1 else 1
    y = (-x if mu else x) % m
    nu = 0
    inv5 = pow(5, -1, m)
    for i in range(alpha - 2):
        t = y * pow(inv5, nu, m) % m
        if t % (1 << (i + 3)) != 1:
            nu |= 1 << i
    return TwoAdicDecomposition(mu, nu, alpha)
