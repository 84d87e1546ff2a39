"""Univariate Laurent polynomials in ``q`` with exact rational coefficients,
and the q-analogs ``[k]``, ``[k]!`` and the q-binomial.

>>> str(q_integer(3))
'1 + q + q^2'
>>> str(exact_divide(q_factorial(3), q_factorial(2)))
'1 + q + q^2'
>>> str(LaurentPoly.q() ** -1 + 2 + LaurentPoly.q())
'q^-1 + 2 + q'
"""
from __future__ import annotations

from fractions import Fraction
from math import comb


class InexactDivisionError(ArithmeticError):
    """Raised by :func:`exact_divide` when the divisor leaves a remainder."""


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _trim(low, coeffs):
    start = 0
    while start < len(coeffs) and not coeffs[start]:
        start += 1
    end = len(coeffs)
    while end > start and not coeffs[end - 1]:
        end -= 1
    if start == end:
        return 0, ()
    return low + start, tuple(_norm(c) for c in coeffs[start:end])


class LaurentPoly:
    """Laurent polynomial ``sum_i coeffs[i] * q**(low + i)``.

    Stored trimmed: the first and last coefficients are nonzero, and the zero
    polynomial has no coefficients.  Coefficients are ints where possible and
    :class:`fractions.Fraction` otherwise.
    """

    __slots__ = ("low", "coeffs")

    def __init__(self, coeffs=(), low=0):
        self.low, self.coeffs = _trim(low, list(coeffs))

    @classmethod
    def q(cls):
        return cls((1,), 1)

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, c, k):
        return cls((c,), k)

    @property
    def ring_tag(self):
        """``'ZZ'`` if every coefficient is an integer, else ``'QQ'``."""
        return "ZZ" if all(isinstance(c, int) for c in self.coeffs) else "QQ"

    @property
    def high(self):
        """Largest exponent (``low - 1`` for zero)."""
        return self.low + len(self.coeffs) - 1

    @property
    def span(self):
        """``high - low``; the Euclidean size used for division."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_unit(self):
        return len(self.coeffs) == 1

    def coefficient(self, k):
        i = k - self.low
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def as_dict(self):
        return {self.low + i: c for i, c in enumerate(self.coeffs) if c}

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        low = min(self.low, other.low)
        high = max(self.high, other.high)
        out = [0] * (high - low + 1)
        for i, c in enumerate(self.coeffs):
            out[self.low - low + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.low - low + i] += c
        return LaurentPoly(out, low)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly([-c for c in self.coeffs], self.low)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return LaurentPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return LaurentPoly(out, self.low + other.low)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            if not self.is_unit():
                raise ArithmeticError("only monomials have negative powers")
            return LaurentPoly((1 / Fraction(self.coeffs[0]) ** -k,), self.low * k)
        out = LaurentPoly((1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.low == other.low and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.low, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __call__(self, x):
        """Exact evaluation at a rational ``x`` (``x != 0`` if negative powers occur)."""
        if self.is_zero():
            return 0
        x = Fraction(x)
        if x == 0 and self.low < 0:
            raise ZeroDivisionError("negative powers of q at q = 0")
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return _norm(acc * x ** self.low)

    evaluate = __call__

    def shift(self, k):
        """Multiply by ``q**k``."""
        return LaurentPoly(self.coeffs, self.low + k)

    def normalized(self):
        """Canonical associate: lowest exponent 0 and leading coefficient 1."""
        if self.is_zero():
            return self
        lead = Fraction(self.coeffs[-1])
        return LaurentPoly([Fraction(c) / lead for c in self.coeffs], 0)

    def unit_part(self):
        """The unit ``c*q^k`` with ``self == unit_part() * normalized()``."""
        return LaurentPoly((self.coeffs[-1],), self.low)

    def __divmod__(self, other):
        """Euclidean division in Q[q, q^-1] with respect to :attr:`span`.

        Both operands are shifted to ordinary polynomials with nonzero constant
        term; the remainder has strictly smaller span than ``other``.
        """
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero():
            return LaurentPoly(), LaurentPoly()
        rem = list(self.coeffs)
        den = other.coeffs
        dlead = Fraction(den[-1])
        dd = len(den) - 1
        quot = [0] * max(len(rem) - dd, 1)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if not c:
                continue
            f = _norm(Fraction(c) / dlead)
            quot[k - dd] = f
            for i, d in enumerate(den):
                rem[k - dd + i] -= f * d
        q_ = LaurentPoly(quot, self.low - other.low)
        r_ = LaurentPoly(rem[:dd], self.low)
        return q_, r_

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"


def _render_monomial(k, var):
    if k == 0:
        return ""
    if k == 1:
        return var
    return f"{var}^{k}"


def render(p, var="q"):
    """Canonical text, ascending exponents: ``'q^-1 + 2 + q'``."""
    if p.is_zero():
        return "0"
    parts = []
    for i, c in enumerate(p.coeffs):
        if not c:
            continue
        k = p.low + i
        mono = _render_monomial(k, var)
        mag = abs(c)
        if mono:
            if mag == 1:
                body = mono
            elif isinstance(mag, Fraction):
                body = f"({mag}){mono}"
            else:
                body = f"{mag}{mono}"
        else:
            body = str(mag)
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


def parse_laurent(text, var="q"):
    """Inverse of :func:`render` (also accepts ``*`` between coefficient and variable)."""
    import re

    s = text.replace(" ", "")
    if s == "0":
        return LaurentPoly()
    terms = re.findall(r"[+-]?[^+-]+(?:\^-?\d+)?", s.replace("^-", "^~"))
    out = LaurentPoly()
    for t in terms:
        t = t.replace("^~", "^-")
        sign = -1 if t.startswith("-") else 1
        t = t.lstrip("+-")
        if var in t:
            coef, _, power = t.partition(var)
            coef = coef.strip("()*") or "1"
            k = int(power[1:]) if power.startswith("^") else 1
        else:
            coef, k = t, 0
        out = out + LaurentPoly.monomial(sign * Fraction(coef), k)
    return out


def exact_divide(a, b):
    """Quotient ``a / b``, raising :class:`InexactDivisionError` on a remainder."""
    quot, rem = divmod(a, b)
    if not rem.is_zero():
        raise InexactDivisionError(f"({a}) is not divisible by ({b})")
    return quot


def laurent_gcd(a, b):
    """Monic gcd (lowest exponent 0) in Q[q, q^-1]; ``gcd(0, 0) == 0``."""
    while not b.is_zero():
        a, b = b, a % b
    return a.normalized()


def q_integer(k):
    """``[k] = 1 + q + ... + q^(k-1)`` for ``k >= 1``."""
    if k < 1:
        raise ValueError(f"q-integer [k] needs k >= 1, got {k}")
    return LaurentPoly([1] * k)


def q_factorial(k):
    """``[k]! = [1][2]...[k]``, with ``[0]! = 1``."""
    if k < 0:
        raise ValueError(f"q-factorial needs k >= 0, got {k}")
    out = LaurentPoly((1,))
    for i in range(1, k + 1):
        out = out * q_integer(i)
    return out


def q_binomial(k, h):
    """Gaussian binomial ``[k]! / ([h]! [k-h]!)``."""
    if not 0 <= h <= k:
        raise ValueError(f"q-binomial needs 0 <= h <= k, got k={k}, h={h}")
    out = exact_divide(q_factorial(k), q_factorial(h) * q_factorial(k - h))
    assert out(1) == comb(k, h)
    return out
