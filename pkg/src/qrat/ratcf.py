"""Rationals r/s > 1 and their even-length continued fractions."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import DomainError


@dataclass(frozen=True)
class ReducedRational:
    r: int
    s: int

    def __post_init__(self):
        if self.s < 1 or self.r < 1:
            raise DomainError(f"need positive r and s, got {self.r}/{self.s}")
        if math.gcd(self.r, self.s) != 1:
            raise DomainError(f"{self.r}/{self.s} is not in lowest terms")
        if self.r <= self.s:
            raise DomainError(f"only r/s > 1 is supported, got {self.r}/{self.s}")

    @classmethod
    def normalized(cls, r: int, s: int) -> ReducedRational:
        if r < 1 or s < 1:
            raise DomainError(f"need positive r and s, got {r}/{s}")
        g = math.gcd(r, s)
        return cls(r // g, s // g)

    def as_fraction(self) -> Fraction:
        return Fraction(self.r, self.s)

    def __str__(self) -> str:
        return f"{self.r}/{self.s}"


_RATIONAL_RE = re.compile(r"([1-9][0-9]*)/([1-9][0-9]*)")


def parse_rational(text: str) -> ReducedRational:
    """Parse ``"R/S"``; no whitespace, no sign, no leading zeros."""
    m = _RATIONAL_RE.fullmatch(text)
    if m is None:
        raise DomainError(f"expected R/S with positive integers and no leading zeros, got {text!r}")
    return ReducedRational.normalized(int(m.group(1)), int(m.group(2)))


@dataclass(frozen=True)
class EvenContinuedFraction:
    terms: tuple[int, ...]

    def __init__(self, terms: Sequence[int]):
        t = tuple(int(a) for a in terms)
        if len(t) < 2 or len(t) % 2:
            raise DomainError(f"continued fraction must have even length >= 2, got {list(t)}")
        if any(a < 1 for a in t):
            raise DomainError(f"continued fraction terms must be positive, got {list(t)}")
        object.__setattr__(self, "terms", t)

    @property
    def m(self) -> int:
        return len(self.terms) // 2

    @property
    def odd_terms(self) -> tuple[int, ...]:
        """a_1, a_3, ... (1-indexed odd positions)."""
        return self.terms[0::2]

    @property
    def even_terms(self) -> tuple[int, ...]:
        """a_2, a_4, ..."""
        return self.terms[1::2]

    def __iter__(self) -> Iterator[int]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, i):
        return self.terms[i]

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.terms)) + "]"


def euclid_terms(r: int, s: int) -> list[int]:
    """Plain continued fraction of r/s from the Euclidean algorithm."""
    out = []
    while s:
        a, rem = divmod(r, s)
        out.append(a)
        r, s = s, rem
    return out


def cf_expand(x: ReducedRational) -> EvenContinuedFraction:
    terms = euclid_terms(x.r, x.s)
    if len(terms) % 2:
        # last term is >= 2 here (or the whole thing is an integer >= 2)
        terms[-1:] = [terms[-1] - 1, 1]
    return EvenContinuedFraction(terms)


def cf_value(cf: EvenContinuedFraction) -> ReducedRational:
    value = Fraction(cf.terms[-1])
    for a in reversed(cf.terms[:-1]):
        value = a + 1 / value
    return ReducedRational(value.numerator, value.denominator)


def cf_grassmannian_params(cf: EvenContinuedFraction) -> tuple[int, int]:
    """(k, n) with n the sum of all terms and k the sum of a_2, a_4, ..."""
    return sum(cf.even_terms), sum(cf.terms)


def coprime_pairs(max_r: int, min_r: int = 2) -> Iterator[ReducedRational]:
    """All reduced r/s with s < r, min_r <= r <= max_r, ordered by (r, s)."""
    for r in range(max(min_r, 2), max_r + 1):
        for s in range(1, r):
            if math.gcd(r, s) == 1:
                yield ReducedRational(r, s)
