"""Solution sets of repetition counts: empty, finite, or a bounded residue class.

Every set is a subset of {1, 2, 3, ...}. Constructors normalize to a
canonical form so equal sets compare equal.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .modmath import DomainError, crt_pair


@dataclass(frozen=True)
class Empty:
    def __str__(self) -> str:
        return "none"

    def to_dict(self) -> dict:
        return {"kind": "empty"}


@dataclass(frozen=True)
class Finite:
    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.elements:
            raise DomainError("use Empty for the empty set")
        if list(self.elements) != sorted(set(self.elements)) or self.elements[0] < 1:
            raise DomainError("elements must be distinct, sorted and positive")

    def __str__(self) -> str:
        return "k ∈ {" + ", ".join(map(str, self.elements)) + "}"

    def to_dict(self) -> dict:
        return {"kind": "finite", "elements": [str(e) for e in self.elements]}


@dataclass(frozen=True)
class Progression:
    """``{k >= min : k = residue (mod modulus)}`` with ``min`` a member."""

    residue: int
    modulus: int
    min: int

    def __post_init__(self) -> None:
        if self.modulus < 1 or not 0 <= self.residue < self.modulus:
            raise DomainError(f"bad residue class {self.residue} mod {self.modulus}")
        if self.min < 1 or self.min % self.modulus != self.residue:
            raise DomainError(f"min {self.min} is not a member of the class")

    def __str__(self) -> str:
        if self.modulus == 1:
            return "all k ≥ 1" if self.min == 1 else f"k ≥ {self.min}"
        text = f"k ≡ {self.residue} (mod {self.modulus})"
        if self.min != least_member(self.residue, self.modulus, 1):
            text += f", k ≥ {self.min}"
        return text

    def to_dict(self) -> dict:
        return {
            "kind": "progression",
            "residue": str(self.residue),
            "modulus": str(self.modulus),
            "min": str(self.min),
        }


SolutionSet = Union[Empty, Finite, Progression]

EMPTY = Empty()
NATURALS = Progression(0, 1, 1)


def least_member(residue: int, modulus: int, lower: int) -> int:
    """Smallest ``k >= lower`` with ``k = residue (mod modulus)``."""
    return lower + (residue - lower) % modulus


def progression(residue: int, modulus: int, lower: int = 1) -> Progression:
    """Canonical ``{k >= lower : k = residue (mod modulus)}``."""
    residue %= modulus
    return Progression(residue, modulus, least_member(residue, modulus, max(lower, 1)))


def finite(elements) -> SolutionSet:
    elements = tuple(sorted(set(elements)))
    return Finite(elements) if elements else EMPTY


def contains(s: SolutionSet, k: int) -> bool:
    if isinstance(s, Progression):
        return k >= s.min and k % s.modulus == s.residue
    if isinstance(s, Finite):
        return k in s.elements
    return False


def enumerate_members(s: SolutionSet, count: int) -> list[int]:
    """The ``count`` smallest members in increasing order (fewer if finite)."""
    if isinstance(s, Progression):
        return [s.min + i * s.modulus for i in range(count)]
    if isinstance(s, Finite):
        return list(s.elements[:count])
    return []


def intersect(s1: SolutionSet, s2: SolutionSet) -> SolutionSet:
    """Exact intersection; residue classes are combined by the CRT."""
    if isinstance(s1, Empty) or isinstance(s2, Empty):
        return EMPTY
    if isinstance(s1, Finite):
        return finite(k for k in s1.elements if contains(s2, k))
    if isinstance(s2, Finite):
        return finite(k for k in s2.elements if contains(s1, k))
    combined = crt_pair(s1.residue, s1.modulus, s2.residue, s2.modulus)
    if combined is None:
        return EMPTY
    residue, modulus = combined
    return progression(residue, modulus, max(s1.min, s2.min))


def from_dict(d: dict) -> SolutionSet:
    kind = d["kind"]
    if kind == "empty":
        return EMPTY
    if kind == "finite":
        return Finite(tuple(int(e) for e in d["elements"]))
    if kind == "progression":
        return Progression(int(d["residue"]), int(d["modulus"]), int(d["min"]))
    raise DomainError(f"unknown solution kind {kind!r}")
