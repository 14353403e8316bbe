"""q-deformed rationals [r/s]_q = R(q)/S(q).

Two independent routes produce the same normalized value:

* ``qrat_from_cf`` evaluates the alternating continued-fraction tower, with
  [a]_q and q^a on odd levels and [a]_{q^-1} and q^-a on even levels;
* ``qrat_via_matrices`` starts from 1 and applies the Moebius maps
  A_q x = 1 + q x and B_q x = q x / (1 + q x) along the generator word.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ConsistencyError
from .qpoly import (
    ONE,
    ZERO,
    IntPolynomial,
    LaurentFraction,
    q_integer,
    q_integer_inverse,
)
from .ratcf import EvenContinuedFraction, ReducedRational, cf_expand, cf_value


@dataclass(frozen=True)
class QRationalValue:
    numerator: IntPolynomial
    denominator: IntPolynomial
    source: ReducedRational

    @property
    def r(self) -> int:
        return self.source.r

    @property
    def s(self) -> int:
        return self.source.s

    def as_fraction(self) -> LaurentFraction:
        return LaurentFraction(self.numerator, self.denominator)

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "s": self.s,
            "cf": list(cf_expand(self.source).terms),
            "numerator": list(self.numerator.coeffs),
            "denominator": list(self.denominator.coeffs),
        }


def normalize(value: LaurentFraction, source: ReducedRational) -> QRationalValue:
    """Reduce to coprime primitive form and check R(0) = S(0) = 1."""
    num, den = value.as_polynomials()
    if num[0] != 1 or den[0] != 1:
        raise ConsistencyError(
            f"[{source}]_q normalized to ({num})/({den}); expected constant terms 1"
        )
    return QRationalValue(num, den, source)


def tower_value(cf: EvenContinuedFraction) -> LaurentFraction:
    terms = cf.terms
    v = q_integer_inverse(terms[-1])
    for i in range(len(terms) - 2, -1, -1):
        a = terms[i]
        if i % 2 == 0:  # a_1, a_3, ... in 1-indexed terms
            v = LaurentFraction(q_integer(a)) + LaurentFraction.monomial(a) / v
        else:
            v = q_integer_inverse(a) + LaurentFraction.monomial(-a) / v
    return v


def qrat_from_cf(cf: EvenContinuedFraction) -> QRationalValue:
    return normalize(tower_value(cf), cf_value(cf))


def qmatrix_word(cf: EvenContinuedFraction) -> list[tuple[str, int]]:
    """Generator word A^a1 B^a2 ... A^a(2m-1) B^(a2m - 1), zero powers dropped.

    The rightmost factor acts first.
    """
    word = []
    last = len(cf.terms) - 1
    for i, a in enumerate(cf.terms):
        power = a - 1 if i == last else a
        if power:
            word.append(("A" if i % 2 == 0 else "B", power))
    return word


def format_word(word: Sequence[tuple[str, int]]) -> str:
    return "".join(g if e == 1 else f"{g}^{e}" for g, e in word) or "1"


def apply_word_classical(word: Sequence[tuple[str, int]], x=Fraction(1)) -> Fraction:
    x = Fraction(x)
    for g, e in reversed(word):
        for _ in range(e):
            x = x + 1 if g == "A" else x / (x + 1)
    return x


_Q = LaurentFraction(IntPolynomial((0, 1)))


def apply_A(x: LaurentFraction) -> LaurentFraction:
    return 1 + _Q * x


def apply_B(x: LaurentFraction) -> LaurentFraction:
    qx = _Q * x
    return qx / (1 + qx)


def apply_word_q(word: Sequence[tuple[str, int]], x: LaurentFraction | None = None) -> LaurentFraction:
    # act on a column vector (P, Q) with x = P/Q so denominators never compound
    x = LaurentFraction(ONE) if x is None else x
    p, d = x.num, x.den
    if x.shift >= 0:
        p = p.shift(x.shift)
    else:
        d = d.shift(-x.shift)
    q = IntPolynomial((0, 1))
    for g, e in reversed(word):
        for _ in range(e):
            if g == "A":
                p = d + q * p
            else:
                p, d = q * p, d + q * p
    return LaurentFraction(p, d)


def qrat_via_matrices(cf: EvenContinuedFraction) -> QRationalValue:
    return normalize(apply_word_q(qmatrix_word(cf)), cf_value(cf))


def qrat_classical_check(v: QRationalValue) -> ReducedRational:
    r, s = v.numerator(1), v.denominator(1)
    got = ReducedRational.normalized(r, s)
    if got != v.source or (r, s) != (v.r, v.s):
        raise ConsistencyError(f"q=1 specialization gives {r}/{s}, expected {v.source}")
    return got


def qrational(x: ReducedRational) -> QRationalValue:
    return qrat_from_cf(cf_expand(x))


@dataclass(frozen=True)
class QMatrix:
    """2x2 matrix over Z[q, q^-1], compared modulo +-q^e scaling."""

    a: LaurentFraction
    b: LaurentFraction
    c: LaurentFraction
    d: LaurentFraction

    def __post_init__(self):
        for e in self.entries():
            if e.den != ONE:
                raise ValueError("QMatrix entries must be Laurent polynomials")

    @classmethod
    def of(cls, a, b, c, d) -> QMatrix:
        return cls(*(LaurentFraction.of(x) for x in (a, b, c, d)))

    def entries(self) -> tuple[LaurentFraction, ...]:
        return (self.a, self.b, self.c, self.d)

    def __matmul__(self, o: QMatrix) -> QMatrix:
        return QMatrix(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def det(self) -> LaurentFraction:
        return self.a * self.d + LaurentFraction.of(-1) * self.b * self.c

    def act(self, x: LaurentFraction) -> LaurentFraction:
        return (self.a * x + self.b) / (self.c * x + self.d)

    def _normal_form(self):
        polys = []
        for e in self.entries():
            # den is 1, so the value is num * q^shift
            if e.num:
                polys.append((e.num, e.shift + e.num.low_degree()))
            else:
                polys.append((ZERO, None))
        vals = [v for _, v in polys if v is not None]
        if not vals:
            return ((),) * 4
        low = min(vals)
        out = []
        for p, v in polys:
            if v is None:
                out.append(())
            else:
                lead_zeros = p.low_degree()
                out.append((v - low,) + p.coeffs[lead_zeros:])
        sign = 1
        for t in out:
            if t:
                sign = 1 if t[1] > 0 else -1
                break
        return tuple(t if not t else (t[0],) + tuple(sign * c for c in t[1:]) for t in out)

    def projectively_equal(self, other: QMatrix) -> bool:
        return self._normal_form() == other._normal_form()

    def is_monomial_det(self) -> bool:
        d = self.det()
        n = d.num
        return bool(n) and sum(1 for c in n.coeffs if c) == 1 and abs(n.leading) == 1


A_q = QMatrix.of(IntPolynomial((0, 1)), 1, 0, 1)
B_q = QMatrix.of(IntPolynomial((0, 1)), 0, IntPolynomial((0, 1)), 1)
IDENTITY = QMatrix.of(1, 0, 0, 1)


def qmatrix_of_word(word: Sequence[tuple[str, int]]) -> QMatrix:
    m = IDENTITY
    for g, e in word:
        gen = A_q if g == "A" else B_q
        for _ in range(e):
            m = m @ gen
    return m
