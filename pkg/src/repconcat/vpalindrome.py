"""The additive function v and v-palindromes (decimal only).

v(p) = p and v(p^e) = p + e for e >= 2, extended additively over coprime
factors. n is a v-palindrome when 10 does not divide n, n differs from its
decimal reversal r(n), and v(n) = v(r(n)).
"""
from __future__ import annotations

from dataclasses import dataclass

from .concat import digit_reverse, digits, repeated_concat
from .modmath import MAX_MODULUS, CapacityError, DomainError, Factorization, factorize


@dataclass(frozen=True)
class VValue:
    value: int
    factorization: Factorization


def _capacity(n: int) -> None:
    if n > MAX_MODULUS:
        raise CapacityError(f"{n} exceeds the factorization capacity 2^62")


def v_value(n: int) -> VValue:
    if n < 1:
        raise DomainError(f"v is defined for n >= 1, got {n}")
    _capacity(n)
    fac = factorize(n) if n > 1 else Factorization(())
    return VValue(sum(p + (e if e >= 2 else 0) for p, e in fac), fac)


def v(n: int) -> int:
    """v(n); v(1) = 0.

    Raises:
        CapacityError: ``n`` exceeds 2^62 or factoring stalls.
    """
    return v_value(n).value


def is_v_palindrome(n: int) -> bool:
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if n % 10 == 0:
        return False
    r = digit_reverse(n, 10)
    if r == n:
        return False
    return v(n) == v(r)


def is_binary_digit_palindrome(rho: int) -> bool:
    """True for decimal palindromes whose digits are all 0 or 1."""
    if rho < 1:
        return False
    ds = digits(rho, 10)
    return set(ds) <= {0, 1} and ds == ds[::-1]


def theorem_51_number(rho: int) -> int:
    """18 * rho for a 0/1 decimal palindrome ``rho``; always a v-palindrome."""
    if not is_binary_digit_palindrome(rho):
        raise DomainError(f"{rho} is not a decimal palindrome of 0s and 1s")
    return 18 * rho


def binary_digit_palindromes(max_digits: int):
    """All 0/1 decimal palindromes with at most ``max_digits`` digits, ascending."""
    for length in range(1, max_digits + 1):
        half = (length + 1) // 2
        # the outer digit is 1, the remaining half - 1 free digits are 0/1
        for bits in range(1 << (half - 1)):
            head = "1" + format(bits, f"0{half - 1}b") if half > 1 else "1"
            tail = head[: length // 2][::-1]
            yield int(head + tail)


def concat_family_check(n: int, kmax: int) -> list[tuple[int, bool]]:
    """``(k, is_v_palindrome(n(k)_10))`` for ``k = 1..kmax``."""
    return [(k, is_v_palindrome(repeated_concat(n, k, 10))) for k in range(1, kmax + 1)]
