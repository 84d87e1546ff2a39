"""Integral group ring elements of finite parabolic subgroups."""
from __future__ import annotations

from .laurent import LaurentPoly


class GroupRingElement:
    """Finite sum ``sum c_w w`` in ``Z[W_J]`` for the table of a finite ``W_J``.

    Zero coefficients are never stored.  Products with an element of a
    smaller parabolic embed it into the larger table first.
    """

    __slots__ = ("table", "terms")

    def __init__(self, table, terms=None):
        self.table = table
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def basis(cls, table, w, coeff=1):
        return cls(table, {w: coeff})

    @classmethod
    def one(cls, table):
        return cls(table, {0: 1})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def embed(self, table):
        """Same element viewed in the table of a parabolic containing this one."""
        if table is self.table:
            return self
        if not set(self.table.J) <= set(table.J):
            raise ValueError(f"cannot embed W_{self.table.J} into W_{table.J}")
        out = {}
        for w, c in self.terms.items():
            v = self.table.embed(table, w)
            out[v] = out.get(v, 0) + c
        return GroupRingElement(table, out)

    def _common(self, other):
        if other.table is self.table:
            return self, other
        if set(other.table.J) <= set(self.table.J):
            return self, other.embed(self.table)
        return self.embed(other.table), other

    def __add__(self, other):
        a, b = self._common(other)
        out = dict(a.terms)
        for w, c in b.terms.items():
            out[w] = out.get(w, 0) + c
        return GroupRingElement(a.table, out)

    def __neg__(self):
        return GroupRingElement(self.table, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k):
        return GroupRingElement(self.table, {w: k * c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        a, b = self._common(other)
        t = a.table
        out = {}
        for x, cx in a.terms.items():
            for y, cy in b.terms.items():
                v = t.multiply(x, y)
                out[v] = out.get(v, 0) + cx * cy
        return GroupRingElement(t, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        a, b = self._common(other)
        return a.terms == b.terms

    def left_mul(self, w):
        """``w * self`` for an element index ``w`` of the same table."""
        t = self.table
        out = {}
        for x, c in self.terms.items():
            v = t.multiply(w, x)
            out[v] = out.get(v, 0) + c
        return GroupRingElement(t, out)

    def augmentation(self):
        """Image under ``w -> 1``."""
        return sum(self.terms.values())

    def q_image(self):
        """Image of the Artin lift under ``g_s -> -q``: ``sum c_w (-q)^length(w)``."""
        out = LaurentPoly()
        for w, c in self.terms.items():
            ell = self.table.length[w]
            out = out + LaurentPoly.monomial(c * (-1) ** ell, ell)
        return out

    def words(self):
        """``[(normal form word, coeff)]`` sorted by (length, word)."""
        t = self.table
        return sorted(((t.normal_form(w), c) for w, c in self.terms.items()),
                      key=lambda wc: (len(wc[0]), wc[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for word, c in self.words():
            name = "".join(f"s{s + 1}" for s in word) or "1"
            if c == 1:
                term = name
            elif c == -1:
                term = "-" + name
            else:
                term = f"{c}*{name}"
            parts.append(term)
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"GroupRingElement({self})"
