"""Finite (parabolic) Coxeter groups enumerated through the reflection
representation over a cyclotomic field.

Every element of ``W_J`` is stored as an exact matrix acting on the span of
the simple roots of ``J``.  Breadth-first search from the identity gives the
length function, right multiplication table and one reduced word per element.

>>> from salvetti.coxeter import parse_coxeter_spec
>>> t = group_table(parse_coxeter_spec("A2"), (0, 1))
>>> t.order, max(t.length)
(6, 3)
>>> str(poincare_poly(t))
'1 + 2q + 2q^2 + q^3'
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache

import numpy as np

from .coxeter import INF, classify_finite, subset
from .cyclotomic import CyclotomicNumber, common_level, multiplication_matrix
from .laurent import LaurentPoly, q_integer

DEFAULT_BUDGET = 200_000


class BudgetExceeded(RuntimeError):
    """Enumeration found more elements than allowed (infinite or too large group)."""


class InfiniteLabelError(ValueError):
    """A pair inside the requested parabolic has label infinity."""


def _check_finite_labels(matrix, J):
    for a in J:
        for b in J:
            if matrix.label(a, b) is INF:
                raise InfiniteLabelError(
                    f"generators {a + 1} and {b + 1} have infinite bond; W_J is infinite")


def _level(matrix, J):
    return common_level(matrix.label(a, b) for a in J for b in J)


def generator_matrices(matrix, J):
    """Reflection matrices of the generators in ``J``.

    ``sigma_s`` sends ``alpha_s`` to ``-alpha_s`` and ``alpha_t`` to
    ``alpha_t + 2cos(pi/m(s,t)) alpha_s``; column ``t`` of a matrix is the
    image of ``alpha_t``.  Entries are :class:`CyclotomicNumber` of a common
    level.
    """
    J = subset(J)
    _check_finite_labels(matrix, J)
    level = _level(matrix, J)
    n = len(J)
    zero = CyclotomicNumber.from_int(level, 0)
    one = CyclotomicNumber.from_int(level, 1)
    mats = []
    for i, s in enumerate(J):
        rows = [[one if r == c else zero for c in range(n)] for r in range(n)]
        for c, t in enumerate(J):
            if c == i:
                rows[i][c] = -one
            else:
                rows[i][c] = CyclotomicNumber.two_cos_pi_over(matrix.label(s, t), level)
        mats.append(rows)
    return mats


def matmul(a, b):
    """Product of two square matrices of :class:`CyclotomicNumber`."""
    n = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(1, n)), a[i][0] * b[0][j])
             for j in range(n)] for i in range(n)]


class GroupTable:
    """Complete multiplication data for a finite parabolic ``W_J``.

    Attributes
    ----------
    matrix, J
        The Coxeter system and the (sorted) generator subset enumerated.
    level
        Level of the cyclotomic field carrying the matrix entries.
    length : list of int
        ``length[w]``; index 0 is the identity.
    right_mult : list of tuple
        ``right_mult[w][p]`` is the index of ``w * J[p]``.
    reduced_word : list of tuple
        One reduced word per element, as global generator indices.
    """

    def __init__(self, matrix, J, level, arrays, length, right_mult, reduced_word):
        self.matrix = matrix
        self.J = J
        self.level = level
        self._arrays = arrays
        self.length = length
        self.right_mult = right_mult
        self.reduced_word = reduced_word
        self.position = {s: p for p, s in enumerate(J)}
        self.index = {a.tobytes(): i for i, a in enumerate(arrays)}
        self.generator_index = {s: right_mult[0][p] for p, s in enumerate(J)}
        self.inverse = [self.word_to_index(reversed(w)) for w in reduced_word]

    @property
    def order(self):
        return len(self.length)

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"<GroupTable J={self.J} order={self.order}>"

    def element_matrix(self, w):
        """Matrix of element ``w`` with :class:`CyclotomicNumber` entries."""
        a = self._arrays[w]
        n = a.shape[0]
        return [[CyclotomicNumber(self.level, [int(x) for x in a[i, j]]) for j in range(n)]
                for i in range(n)]

    def mult_gen(self, w, s):
        """Index of ``w * s`` for a global generator ``s`` in ``J``."""
        return self.right_mult[w][self.position[s]]

    def word_to_index(self, word):
        w = 0
        for s in word:
            w = self.right_mult[w][self.position[s]]
        return w

    def multiply(self, x, y):
        w = x
        for s in self.reduced_word[y]:
            w = self.right_mult[w][self.position[s]]
        return w

    def left_mult_gen(self, s, w):
        """Index of ``s * w``."""
        return self.inverse[self.mult_gen(self.inverse[w], s)]

    def right_descents(self, w):
        lw = self.length[w]
        return tuple(s for p, s in enumerate(self.J) if self.length[self.right_mult[w][p]] < lw)

    def left_descents(self, w):
        return self.right_descents(self.inverse[w])

    def longest(self):
        top = max(self.length)
        return self.length.index(top)

    def normal_form(self, w):
        """Lexicographically smallest reduced word of ``w`` (intrinsic to W)."""
        word = []
        while w:
            s = min(self.left_descents(w))
            word.append(s)
            w = self.left_mult_gen(s, w)
        return tuple(word)

    def support(self, w):
        """Generators occurring in (every) reduced word of ``w``."""
        return subset(self.reduced_word[w])

    def embed(self, other, w):
        """Index in ``other`` (a table of a larger parabolic) of element ``w``."""
        return other.word_to_index(self.reduced_word[w])

    def is_generator(self, w):
        return self.length[w] == 1


def enumerate_group(matrix, J, budget=DEFAULT_BUDGET, generator_order=None):
    """Enumerate ``W_J`` breadth-first from the identity.

    Parameters
    ----------
    matrix : CoxeterMatrix
    J : iterable of int
        Generators spanning the parabolic subgroup.
    budget : int
        Maximum number of elements; exceeding it raises :class:`BudgetExceeded`.
    generator_order : sequence of int, optional
        Order in which generators are tried during the search.  The element
        set and length function do not depend on it; the stored reduced
        words and element indices do.
    """
    J = subset(J)
    _check_finite_labels(matrix, J)
    level = _level(matrix, J)
    n = len(J)
    mats = generator_matrices(matrix, J)
    dim = len(mats[0][0][0].coeffs) if n else 1
    # right multiplication by sigma_s only changes columns via row s of sigma_s
    cmul = {}
    for i in range(n):
        for c in range(n):
            if c != i:
                cmul[i, c] = np.array(multiplication_matrix(mats[i][i][c]), dtype=np.int64)

    ident = np.zeros((n, n, dim), dtype=np.int64)
    for i in range(n):
        ident[i, i, 0] = 1
    order = list(range(n)) if generator_order is None else [J.index(s) for s in generator_order]
    if sorted(order) != list(range(n)):
        raise ValueError("generator_order must be a permutation of J")

    arrays = [ident]
    index = {ident.tobytes(): 0}
    length = [0]
    words = [()]
    right = [[None] * n]
    frontier = [0]
    while frontier:
        nxt = []
        for w in frontier:
            a = arrays[w]
            for p in order:
                if right[w][p] is not None:
                    continue
                b = a.copy()
                col = a[:, p, :]
                for c in range(n):
                    if c != p:
                        b[:, c, :] += col @ cmul[p, c].T
                b[:, p, :] = -col
                key = b.tobytes()
                v = index.get(key)
                if v is None:
                    v = len(arrays)
                    if v >= budget:
                        raise BudgetExceeded(
                            f"W_J for J={tuple(s + 1 for s in J)} exceeds budget {budget}")
                    index[key] = v
                    arrays.append(b)
                    length.append(length[w] + 1)
                    words.append(words[w] + (J[p],))
                    right.append([None] * n)
                    nxt.append(v)
                right[w][p] = v
                right[v][p] = w
        frontier = nxt
    bound = max((int(np.abs(a).max()) for a in arrays if a.size), default=0)
    if bound > 2 ** 40:
        raise OverflowError("reflection matrix entries too large for int64 carrier")
    return GroupTable(matrix, J, level, arrays, length,
                      [tuple(r) for r in right], words)


@lru_cache(maxsize=512)
def group_table(matrix, J, budget=DEFAULT_BUDGET):
    """Cached :func:`enumerate_group` for a finite-type ``J``."""
    return enumerate_group(matrix, subset(J), budget)


def _check_sub(table, I):
    I = subset(I)
    if not set(I) <= set(table.J):
        raise ValueError(f"{I} is not a subset of {table.J}")
    return I


def minimal_coset_reps(table, I):
    """Minimal length representatives of the cosets ``w W_I`` in ``W_J``."""
    I = _check_sub(table, I)
    cols = [table.position[s] for s in I]
    L = table.length
    return [w for w in range(table.order)
            if all(L[table.right_mult[w][p]] > L[w] for p in cols)]


def minimal_left_reps(table, I):
    """Minimal length representatives of the cosets ``W_I w`` in ``W_J``."""
    I = _check_sub(table, I)
    cols = [table.position[s] for s in I]
    L = table.length
    inv = table.inverse
    return [w for w in range(table.order)
            if all(L[table.right_mult[inv[w]][p]] > L[w] for p in cols)]


def length_poly(table, elements=None):
    """``sum q^length(w)`` over the given elements (default: all of ``W_J``)."""
    elements = range(table.order) if elements is None else elements
    counts = Counter(table.length[w] for w in elements)
    top = max(counts) if counts else -1
    return LaurentPoly([counts.get(k, 0) for k in range(top + 1)])


def poincare_poly(table):
    """Poincare polynomial ``W_J(q) = sum_w q^length(w)``."""
    return length_poly(table)


def poincare_poly_closed_form(labels):
    """Product over components of ``[d_1]...[d_r]`` over the degrees of the type."""
    out = LaurentPoly((1,))
    for lab in labels:
        for d in lab.degrees:
            out = out * q_integer(d)
    return out


def poincare(matrix, J):
    """Poincare polynomial of ``W_J`` from its classification (``None`` if infinite)."""
    labels = classify_finite(matrix, J)
    if labels is None:
        return None
    return poincare_poly_closed_form(labels)


def closed_form_text(labels):
    """Factored display: ``[3]! [4]! [2]!`` for type A, degree brackets otherwise."""
    parts = []
    for lab in labels:
        if lab.family == "A":
            parts.append(f"[{lab.rank + 1}]!")
        else:
            parts.append("".join(f"[{d}]" for d in lab.degrees))
    return " ".join(parts) if parts else "1"


def section_psi(table, w):
    """Artin word ``g_{s1} ... g_{sk}`` for the stored reduced word of ``w``.

    Returned as a tuple of generator indices; its length is ``length[w]``.
    """
    return tuple(table.reduced_word[w])


def conjugation_map(table, beta, K):
    """``{t: u}`` with ``beta^-1 t beta = u`` a generator, or ``None`` if some ``t`` fails."""
    inv = table.inverse[beta]
    out = {}
    for t in subset(K):
        x = table.multiply(table.mult_gen(inv, t), beta)
        if not table.is_generator(x):
            return None
        out[t] = table.reduced_word[x][0]
    return out


def conjugate_subset(table, beta, K):
    """``beta^-1 K beta`` as a generator subset when it lies in ``J``, else ``None``."""
    mp = conjugation_map(table, beta, K)
    if mp is None:
        return None
    return subset(mp.values())
