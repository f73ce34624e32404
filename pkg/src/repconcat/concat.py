"""Base-b digit manipulation: lengths, repeated and zero-padded concatenation,
digit reversal.
"""
from __future__ import annotations

from .modmath import DomainError


def _check(n: int, b: int) -> None:
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if b < 2:
        raise DomainError(f"base must be >= 2, got {b}")


def digits(n: int, b: int) -> list[int]:
    """Base-``b`` digits of ``n``, most significant first."""
    _check(n, b)
    out = []
    while n:
        n, r = divmod(n, b)
        out.append(r)
    return out[::-1]


def from_digits(ds: list[int], b: int) -> int:
    value = 0
    for d in ds:
        value = value * b + d
    return value


def digit_length(n: int, b: int) -> int:
    """The ``L`` with ``b^(L-1) <= n < b^L``."""
    _check(n, b)
    length, power = 1, b
    while power <= n:
        power *= b
        length += 1
    return length


def repeated_concat(n: int, k: int, b: int) -> int:
    """``n(k)_b``: the number written as ``k`` copies of ``n``'s base-``b`` digits."""
    _check(n, b)
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    shift = b ** digit_length(n, b)
    # geometric sum n * (1 + B + ... + B^(k-1)) by doubling, B = b^L
    total, block, block_shift = 0, n, shift
    while k:
        if k & 1:
            total = total * block_shift + block
        k >>= 1
        if k:
            block = block * block_shift + block
            block_shift *= block_shift
    return total


def repeated_concat_mod(n: int, k: int, b: int, m: int) -> int:
    """``n(k)_b mod m`` in ``O(log k)`` multiplications, never forming ``n(k)_b``."""
    _check(n, b)
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if m < 1:
        raise DomainError(f"modulus must be >= 1, got {m}")
    shift = pow(b, digit_length(n, b), m)
    total, block, block_shift = 0, n % m, shift
    while k:
        if k & 1:
            total = (total * block_shift + block) % m
        k >>= 1
        if k:
            block = (block * block_shift + block) % m
            block_shift = block_shift * block_shift % m
    return total


def zero_padded_concat(n: int, k: int, b: int) -> int:
    """``n[k]_b``: ``n``, then ``k`` zeros, then ``n`` again (base ``b``)."""
    _check(n, b)
    if k < 0:
        raise DomainError(f"k must be >= 0, got {k}")
    return n * b ** (k + digit_length(n, b)) + n


def digit_reverse(n: int, b: int = 10) -> int:
    """Reverse the base-``b`` digits of ``n``; trailing zeros of ``n`` are dropped."""
    return from_digits(digits(n, b)[::-1], b)
