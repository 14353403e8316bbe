"""Dense integer polynomials in q, Laurent fractions, and the classical q-analogues.

Polynomials are immutable and stored as a tuple of coefficients in ascending
degree with trailing zeros stripped, so ``IntPolynomial(())`` is zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True, init=False)
class IntPolynomial:
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _strip(int(x) for x in coeffs)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> IntPolynomial:
        if degree < 0:
            raise ValueError("monomial degree must be nonnegative")
        return cls((0,) * degree + (c,))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for zero."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __add__(self, other) -> IntPolynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> IntPolynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return poly_add(self, -other)

    def __rsub__(self, other) -> IntPolynomial:
        return (-self) + other

    def __mul__(self, other) -> IntPolynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPolynomial:
        if e < 0:
            raise ValueError("negative exponent")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: IntPolynomial):
        return poly_divmod(self, other)

    def __floordiv__(self, other: IntPolynomial) -> IntPolynomial:
        return exact_div(self, other)

    def __call__(self, x):
        return poly_eval_int(self, x)

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by q**k (k >= 0)."""
        if k < 0:
            raise ValueError("use LaurentFraction for negative shifts")
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def low_degree(self) -> int:
        """Exponent of the largest power of q dividing self (0 for zero)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return 0

    def content(self) -> int:
        return reduce(math.gcd, self.coeffs, 0)

    def primitive(self) -> IntPolynomial:
        """Divide by the content and make the leading coefficient positive."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.leading < 0:
            g = -g
        return IntPolynomial(c // g for c in self.coeffs)

    def evaluate(self, x):
        return poly_eval_int(self, x)

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"


def _coerce(x):
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial((x,))
    return NotImplemented


ZERO = IntPolynomial(())
ONE = IntPolynomial((1,))
Q = IntPolynomial((0, 1))


def poly_add(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    if len(a) < len(b):
        a, b = b, a
    out = list(a.coeffs)
    for i, c in enumerate(b.coeffs):
        out[i] += c
    return IntPolynomial(out)


def poly_mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    if not a or not b:
        return ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for j, y in enumerate(b.coeffs):
            out[i + j] += x * y
    return IntPolynomial(out)


def poly_divmod(a: IntPolynomial, b: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
    """Division with remainder in Z[q].

    Only valid when every step divides exactly, which holds whenever b is
    monic or b divides a; raises ArithmeticError otherwise.
    """
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    db, lb = b.degree, b.leading
    quot = [0] * max(len(rem) - db, 0)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        if c % lb:
            raise ArithmeticError("non-integral quotient in Z[q]")
        f = c // lb
        quot[i - db] = f
        for j, bc in enumerate(b.coeffs):
            rem[i - db + j] -= f * bc
    return IntPolynomial(quot), IntPolynomial(rem)


def exact_div(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    quot, rem = poly_divmod(a, b)
    if rem:
        raise ArithmeticError(f"{b} does not divide {a}")
    return quot


def _pseudo_rem(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    rem = list(a.coeffs)
    db, lb = b.degree, b.leading
    while len(rem) - 1 >= db and any(rem):
        d = len(rem) - 1
        lc = rem[-1]
        rem = [lb * c for c in rem]
        for j, bc in enumerate(b.coeffs):
            rem[d - db + j] -= lc * bc
        rem = list(_strip(rem))
    return IntPolynomial(rem)


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd over Q[q] with positive leading coefficient."""
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    a, b = a.primitive(), b.primitive()
    while b:
        a, b = b, _pseudo_rem(a, b).primitive()
    return a.primitive()


def poly_eval_int(p: IntPolynomial, x):
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def q_integer(n: int) -> IntPolynomial:
    if n < 1:
        raise ValueError(f"q-integer needs n >= 1, got {n}")
    return IntPolynomial((1,) * n)


def q_factorial(n: int) -> IntPolynomial:
    if n < 0:
        raise ValueError(f"q-factorial needs n >= 0, got {n}")
    out = ONE
    for i in range(2, n + 1):
        out = out * q_integer(i)
    return out


def q_binomial(n: int, k: int) -> IntPolynomial:
    if n < 0 or not 0 <= k <= n:
        raise ValueError(f"q-binomial needs 0 <= k <= n, got n={n}, k={k}")
    return exact_div(q_factorial(n), q_factorial(k) * q_factorial(n - k))


def render(p: IntPolynomial, var: str = "q") -> str:
    """Ascending-degree text form, e.g. ``1 + 2*q + q^3``."""
    if not p:
        return "0"
    parts = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        if i == 0:
            body = str(abs(c))
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


@dataclass(frozen=True)
class LaurentFraction:
    """The value q**shift * num / den with num, den in Z[q]."""

    num: IntPolynomial
    den: IntPolynomial = ONE
    shift: int = 0

    def __post_init__(self):
        if not self.den:
            raise ZeroDivisionError("LaurentFraction with zero denominator")

    @classmethod
    def of(cls, x) -> LaurentFraction:
        if isinstance(x, LaurentFraction):
            return x
        if isinstance(x, IntPolynomial):
            return cls(x)
        if isinstance(x, int):
            return cls(IntPolynomial((x,)))
        raise TypeError(f"cannot make a LaurentFraction from {x!r}")

    @classmethod
    def monomial(cls, e: int) -> LaurentFraction:
        return cls(ONE, ONE, e)

    def __add__(self, other) -> LaurentFraction:
        other = LaurentFraction.of(other)
        low = min(self.shift, other.shift)
        if self.den == other.den:
            # common denominator: no need to multiply it out
            num = self.num.shift(self.shift - low) + other.num.shift(other.shift - low)
            return LaurentFraction(num, self.den, low)
        num = (self.num * other.den).shift(self.shift - low) + (other.num * self.den).shift(
            other.shift - low
        )
        return LaurentFraction(num, self.den * other.den, low)

    __radd__ = __add__

    def __mul__(self, other) -> LaurentFraction:
        other = LaurentFraction.of(other)
        return LaurentFraction(self.num * other.num, self.den * other.den, self.shift + other.shift)

    __rmul__ = __mul__

    def inverse(self) -> LaurentFraction:
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return LaurentFraction(self.den, self.num, -self.shift)

    def __truediv__(self, other) -> LaurentFraction:
        return self * LaurentFraction.of(other).inverse()

    def __rtruediv__(self, other) -> LaurentFraction:
        return LaurentFraction.of(other) * self.inverse()

    def __eq__(self, other) -> bool:
        if not isinstance(other, (LaurentFraction, IntPolynomial, int)):
            return NotImplemented
        other = LaurentFraction.of(other)
        low = min(self.shift, other.shift)
        lhs = (self.num * other.den).shift(self.shift - low)
        rhs = (other.num * self.den).shift(other.shift - low)
        return lhs == rhs

    def __hash__(self):
        n, d = self.as_polynomials()
        return hash((n, d))

    def equal_up_to_monomial(self, other) -> bool:
        """Equality modulo multiplication by q**e for some integer e."""
        a, b = self.as_polynomials()
        c, d = LaurentFraction.of(other).as_polynomials()
        x, y = a * d, c * b
        if not x or not y:
            return not x and not y
        e = x.low_degree() - y.low_degree()
        if e >= 0:
            return x == y.shift(e)
        return x.shift(-e) == y

    def as_polynomials(self) -> tuple[IntPolynomial, IntPolynomial]:
        """Clear the monomial shift and reduce to coprime primitive form.

        The sign is fixed so the denominator has positive leading coefficient.
        """
        num, den = self.num, self.den
        if self.shift >= 0:
            num = num.shift(self.shift)
        else:
            den = den.shift(-self.shift)
        if not num:
            return ZERO, ONE
        g = poly_gcd(num, den)
        num, den = exact_div(num, g), exact_div(den, g)
        c = math.gcd(num.content(), den.content())
        if den.leading < 0:
            c = -c
        return IntPolynomial(x // c for x in num), IntPolynomial(x // c for x in den)


def q_integer_inverse(n: int) -> LaurentFraction:
    """[n] evaluated at q**-1, i.e. 1 + q^-1 + ... + q^-(n-1)."""
    return LaurentFraction(q_integer(n), ONE, -(n - 1))
