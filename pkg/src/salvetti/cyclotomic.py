"""Exact arithmetic in the cyclotomic field Q(zeta_L), power basis mod Phi_L."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

import sympy


@lru_cache(maxsize=None)
def cyclotomic_coeffs(level):
    """Integer coefficients of Phi_level, constant term first."""
    x = sympy.Symbol("x")
    poly = sympy.Poly(sympy.cyclotomic_poly(level, x), x)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _reduce(level, coeffs):
    """Reduce a dense coefficient list modulo the (monic) Phi_level."""
    phi = cyclotomic_coeffs(level)
    deg = len(phi) - 1
    c = list(coeffs)
    for k in range(len(c) - 1, deg - 1, -1):
        lead = c[k]
        if lead:
            shift = k - deg
            for i in range(deg):
                c[shift + i] -= lead * phi[i]
        c[k] = 0
    c = c[:deg] + [0] * max(0, deg - len(c))
    return tuple(_norm(x) for x in c)


class CyclotomicNumber:
    """Element of Q(zeta_L) as a coefficient vector in the basis 1, zeta, ..., zeta^(phi(L)-1)."""

    __slots__ = ("level", "coeffs")

    def __init__(self, level, coeffs):
        self.level = level
        self.coeffs = _reduce(level, coeffs)

    @classmethod
    def from_int(cls, level, value):
        return cls(level, [value])

    @classmethod
    def zeta_power(cls, level, k):
        k %= level
        return cls(level, [0] * k + [1])

    @classmethod
    def two_cos_pi_over(cls, m, level):
        """Exact ``2 cos(pi/m)`` as ``zeta_2m + zeta_2m^-1``; requires ``2m | level``."""
        if level % (2 * m):
            raise ValueError(f"level {level} is not a multiple of {2 * m}")
        step = level // (2 * m)
        return cls.zeta_power(level, step) + cls.zeta_power(level, -step)

    @property
    def degree(self):
        return len(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.level != self.level:
                raise ValueError("cyclotomic levels differ")
            return other
        return CyclotomicNumber(self.level, [other])

    def __add__(self, other):
        other = self._coerce(other)
        return CyclotomicNumber(self.level, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.level, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out = [0] * (2 * self.degree)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return CyclotomicNumber(self.level, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicNumber(self.level, [other])
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        return self.level == other.level and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.level, self.coeffs))

    def is_zero(self):
        return not any(self.coeffs)

    def is_integral(self):
        return all(isinstance(c, int) for c in self.coeffs)

    def conjugate(self):
        """Image under zeta -> zeta^-1 (complex conjugation)."""
        out = CyclotomicNumber(self.level, [0])
        for k, c in enumerate(self.coeffs):
            if c:
                out = out + CyclotomicNumber.zeta_power(self.level, -k) * c
        return out

    def is_real(self):
        return self == self.conjugate()

    def __complex__(self):
        import cmath
        z = cmath.exp(2j * cmath.pi / self.level)
        return sum(complex(c) * z ** k for k, c in enumerate(self.coeffs))

    def __repr__(self):
        return f"CyclotomicNumber({self.level}, {list(self.coeffs)})"


def common_level(labels):
    """lcm of ``2m`` over finite labels; at least 2."""
    level = 2
    for m in labels:
        level = level * 2 * m // gcd(level, 2 * m)
    return level


def multiplication_matrix(x):
    """Integer matrix of ``v -> x*v`` on coefficient vectors (column convention)."""
    d = x.degree
    cols = []
    for k in range(d):
        basis = CyclotomicNumber(x.level, [0] * k + [1])
        cols.append((x * basis).coeffs)
    return [[cols[k][i] for k in range(d)] for i in range(d)]
