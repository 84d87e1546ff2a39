"""Smith normal form over a PID and homology of chain complexes.

Three coefficient rings are supported: the integers :data:`ZZ`, the rationals
:data:`QQ` and the rational Laurent ring :data:`LAURENT` = Q[q, q^-1].

Boundary matrices follow the column convention: ``boundaries[k]`` maps
``C_k -> C_{k-1}`` and has ``len(bases[k-1])`` rows and ``len(bases[k])``
columns.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .laurent import LaurentPoly, laurent_gcd, render


class ChainComplexError(ValueError):
    """Shape mismatch or nonzero composite of consecutive boundaries."""


class _Integers:
    name = "ZZ"
    zero, one = 0, 1

    def coerce(self, x):
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError(f"{x} is not an integer")
            return int(x)
        return int(x)

    def size(self, x):
        return abs(x)

    def divmod(self, a, b):
        quo, rem = divmod(a, b)
        # symmetric remainder keeps entries small
        if 2 * abs(rem) > abs(b):
            rem -= b
            quo += 1
        return quo, rem

    def normalize(self, x):
        return abs(x)

    def is_unit(self, x):
        return abs(x) == 1

    def gcd(self, a, b):
        return gcd(a, b)

    def render(self, x):
        return str(x)

    def module(self, d):
        return f"Z/{d}"

    free = "Z"


class _Rationals:
    name = "QQ"
    zero, one = 0, 1

    def coerce(self, x):
        x = Fraction(x)
        return int(x) if x.denominator == 1 else x

    def size(self, x):
        return 0

    def divmod(self, a, b):
        return Fraction(a) / b, 0

    def normalize(self, x):
        return 1 if x else 0

    def is_unit(self, x):
        return x != 0

    def gcd(self, a, b):
        return 1 if (a or b) else 0

    def render(self, x):
        return str(x)

    def module(self, d):
        return "0"

    free = "Q"


class _Laurent:
    name = "LAURENT"
    zero, one = LaurentPoly(), LaurentPoly((1,))

    def coerce(self, x):
        return x if isinstance(x, LaurentPoly) else LaurentPoly((x,))

    def size(self, x):
        return x.span

    def divmod(self, a, b):
        return divmod(a, b)

    def normalize(self, x):
        return x.normalized()

    def is_unit(self, x):
        return x.is_unit()

    def gcd(self, a, b):
        return laurent_gcd(a, b)

    def render(self, x):
        return render(x)

    def module(self, d):
        return f"R/({render(d)})"

    free = "R"


ZZ = _Integers()
QQ = _Rationals()
LAURENT = _Laurent()
RINGS = {"ZZ": ZZ, "QQ": QQ, "LAURENT": LAURENT}


def _is_zero(x):
    return not x


def _diagonalize(A, ring):
    """Row/column reduce ``A`` in place to a diagonal; returns the diagonal."""
    m = len(A)
    n = len(A[0]) if m else 0
    diag = []
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                x = row[j]
                if not _is_zero(x):
                    sz = ring.size(x)
                    if best is None or sz < best[0]:
                        best = (sz, i, j)
                        if sz == 0:
                            break
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        _, i, j = best
        A[t], A[i] = A[i], A[t]
        if j != t:
            for row in A:
                row[t], row[j] = row[j], row[t]
        while True:
            piv = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                x = A[i][t]
                if _is_zero(x):
                    continue
                quo, rem = ring.divmod(x, piv)
                ri, rt = A[i], A[t]
                for j in range(t, n):
                    if not _is_zero(rt[j]):
                        ri[j] = ri[j] - quo * rt[j]
                if not _is_zero(rem):
                    dirty = True
            for j in range(t + 1, n):
                x = A[t][j]
                if _is_zero(x):
                    continue
                quo, rem = ring.divmod(x, piv)
                for row in A[t:]:
                    if not _is_zero(row[t]):
                        row[j] = row[j] - quo * row[t]
                if not _is_zero(rem):
                    dirty = True
            if not dirty:
                break
            # a remainder survived: move the smallest entry of row/column t to the pivot
            cand = [(ring.size(A[i][t]), i, t) for i in range(t, m) if not _is_zero(A[i][t])]
            cand += [(ring.size(A[t][j]), t, j) for j in range(t, n) if not _is_zero(A[t][j])]
            _, i, j = min(cand, key=lambda c: c[0])
            A[t], A[i] = A[i], A[t]
            if j != t:
                for row in A:
                    row[t], row[j] = row[j], row[t]
        diag.append(A[t][t])
        t += 1
    return diag


def smith_normal_form(M, ring):
    """Invariant factors and rank of ``M`` over ``ring``.

    Returns ``(factors, rank)`` where ``factors`` are the nonzero diagonal
    entries ``d_1 | d_2 | ... | d_rank`` in canonical form: positive integers
    over :data:`ZZ`, 1 over :data:`QQ`, monic with lowest exponent 0 over
    :data:`LAURENT`.  Pivots are chosen by minimal Euclidean size.
    """
    A = [[ring.coerce(x) for x in row] for row in M]
    diag = [ring.normalize(d) for d in _diagonalize(A, ring)]
    # enforce the divisibility chain: (a, b) -> (gcd, lcm)
    r = len(diag)
    for i in range(r):
        for j in range(i + 1, r):
            a, b = diag[i], diag[j]
            g = ring.gcd(a, b)
            if g != a:
                diag[i] = g
                diag[j] = ring.normalize(ring.divmod(a * b, g)[0])
    return diag, r


def rank(M, ring):
    return smith_normal_form(M, ring)[1]


@dataclass
class HomologyModule:
    """``H_k = ring^free_rank + sum ring/(d)`` over the invariant factors ``d``.

    Only non-unit factors are listed, in divisibility order.
    """

    degree: int
    free_rank: int
    invariant_factors: list = field(default_factory=list)
    ring: str = "ZZ"

    def is_zero(self):
        return self.free_rank == 0 and not self.invariant_factors

    def __str__(self):
        R = RINGS[self.ring]
        parts = []
        if self.free_rank:
            parts.append(R.free if self.free_rank == 1 else f"{R.free}^{self.free_rank}")
        parts += [R.module(d) for d in self.invariant_factors]
        return " + ".join(parts) if parts else "0"

    def to_json(self):
        R = RINGS[self.ring]
        return {
            "degree": self.degree,
            "free_rank": self.free_rank,
            "invariant_factors": [R.render(d) for d in self.invariant_factors],
            "text": str(self),
        }


@dataclass
class ChainComplex:
    """Graded bases and boundary matrices over one of :data:`RINGS`.

    ``bases[k]`` lists the basis labels of ``C_k`` for ``k = 0..top``;
    ``boundaries[k]`` (for ``k = 1..top``) is the matrix of ``C_k -> C_{k-1}``
    as a list of rows.
    """

    bases: list
    boundaries: dict
    ring: str = "ZZ"

    @property
    def top(self):
        return len(self.bases) - 1

    def dims(self):
        return [len(b) for b in self.bases]

    def boundary(self, k):
        """Matrix of ``C_k -> C_{k-1}``; empty shapes outside the stored range."""
        if k in self.boundaries:
            return self.boundaries[k]
        rows = len(self.bases[k - 1]) if 0 <= k - 1 <= self.top else 0
        cols = len(self.bases[k]) if 0 <= k <= self.top else 0
        return [[RINGS[self.ring].zero] * cols for _ in range(rows)]

    def check_shapes(self):
        for k, M in self.boundaries.items():
            rows, cols = len(self.bases[k - 1]), len(self.bases[k])
            if len(M) != rows or any(len(r) != cols for r in M):
                raise ChainComplexError(f"boundary {k} has wrong shape")

    def check_d_squared(self):
        """Raise :class:`ChainComplexError` unless every ``d_{k-1} d_k`` vanishes."""
        self.check_shapes()
        for k in range(2, self.top + 1):
            P = matmul(self.boundary(k - 1), self.boundary(k))
            if any(x for row in P for x in row):
                raise ChainComplexError(f"d_{k - 1} d_{k} != 0")

    def map_entries(self, fn, ring):
        return ChainComplex(
            [list(b) for b in self.bases],
            {k: [[fn(x) for x in row] for row in M] for k, M in self.boundaries.items()},
            ring,
        )


def matmul(A, B):
    if not A or not B:
        cols = len(B[0]) if B else 0
        return [[0] * cols for _ in A]
    n = len(B[0])
    out = []
    for row in A:
        acc = [0] * n
        for a, brow in zip(row, B):
            if a:
                for j, b in enumerate(brow):
                    if b:
                        acc[j] = acc[j] + a * b
        out.append(acc)
    return out


def homology(complex_, degrees=None, check=True):
    """Homology modules ``H_k`` of a chain complex.

    ``free_rank = dim C_k - rank d_k - rank d_{k+1}`` and the torsion is given
    by the non-unit invariant factors of ``d_{k+1}``.  ``degrees`` defaults to
    every degree of the complex; degree ``top`` assumes ``C_{top+1} = 0``.
    """
    if check:
        complex_.check_d_squared()
    R = RINGS[complex_.ring]
    degrees = range(complex_.top + 1) if degrees is None else degrees
    snf = {}

    def get(k):
        if k not in snf:
            M = complex_.boundary(k)
            snf[k] = smith_normal_form(M, R) if M and M[0] else ([], 0)
        return snf[k]

    out = []
    for k in degrees:
        dim = len(complex_.bases[k])
        _, r_out = get(k) if k >= 1 else ([], 0)
        factors, r_in = get(k + 1)
        torsion = [d for d in factors if not R.is_unit(d)]
        out.append(HomologyModule(k, dim - r_out - r_in, torsion, complex_.ring))
    return out
