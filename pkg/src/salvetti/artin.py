"""The algebraic Salvetti complex of an Artin group.

The complex has one free generator ``e_J`` per subset ``J`` with ``W_J``
finite, in degree ``|J|``.  Its boundary is

    d(e_J) = sum over I = J - {tau} of [I:J] * T(J, I) * e_I,
    T(J, I) = sum over minimal coset representatives b of W_J / W_I
              of (-1)^length(b) * g_b,

where ``g_b`` is the Artin lift of a reduced word of ``b``.  Artin group
elements are never multiplied: coefficients are stored through their image in
``Z[W_J]`` (see :func:`boundary_group_ring`) and through the rank one local
system ``g_s -> -q`` (see :func:`boundary_q`), whose coefficient is the
quotient of Poincare polynomials ``W_J(q) / W_I(q)``.  With this reading the
trivial local system is the specialization ``q = -1``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .coxeter import finite_parabolics, is_finite_type, subset
from .grouprings import GroupRingElement
from .groups import group_table, length_poly, minimal_coset_reps, poincare
from .homology import LAURENT, QQ, ZZ, ChainComplex, homology
from .laurent import exact_divide


def incidence_sign(I, J):
    """``(-1)^p`` where ``p`` is the 0-based position of ``J - I`` in ``J``."""
    I, J = subset(I), subset(J)
    extra = set(J) - set(I)
    if len(J) != len(I) + 1 or len(extra) != 1 or not set(I) <= set(J):
        raise ValueError(f"{I} is not a codimension one subset of {J}")
    return -1 if J.index(extra.pop()) % 2 else 1


def _faces(J):
    return [J[:p] + J[p + 1:] for p in range(len(J))]


def boundary_group_ring(matrix, J):
    """Boundary of ``e_J`` with coefficients in ``Z[W_J]``.

    Returns ``[(I, coeff)]`` over the codimension one faces ``I`` of ``J``,
    in the order the generator is removed.
    """
    J = subset(J)
    if not J:
        return []
    table = group_table(matrix, J)
    out = []
    for I in _faces(J):
        sign = incidence_sign(I, J)
        terms = {}
        for b in minimal_coset_reps(table, I):
            terms[b] = sign * (-1) ** table.length[b]
        out.append((I, GroupRingElement(table, terms)))
    return out


def boundary_q(matrix, J):
    """Boundary of ``e_J`` in the local system ``g_s -> -q``.

    The coefficient of ``e_I`` is ``[I:J] * W_J(q) / W_I(q)``.
    """
    J = subset(J)
    top = poincare(matrix, J)
    if top is None:
        raise ValueError(f"W_J is infinite for J={J}")
    return [(I, incidence_sign(I, J) * exact_divide(top, poincare(matrix, I)))
            for I in _faces(J)]


def boundary_q_from_reps(matrix, J):
    """Same as :func:`boundary_q` but summed over minimal coset representatives."""
    J = subset(J)
    if not J:
        return []
    table = group_table(matrix, J)
    return [(I, incidence_sign(I, J) * length_poly(table, minimal_coset_reps(table, I)))
            for I in _faces(J)]


def artin_basis(matrix):
    """Basis labels by degree: ``bases[k]`` lists the finite-type ``J`` with ``|J| = k``."""
    cells = finite_parabolics(matrix)
    top = max(len(J) for J in cells)
    return [[J for J in cells if len(J) == k] for k in range(top + 1)]


def _assemble(matrix, bases, coeff_fn, zero, threads=None):
    jobs = [J for k in range(1, len(bases)) for J in bases[k]]
    if threads and threads > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(threads) as pool:
            results = dict(zip(jobs, pool.map(lambda J: coeff_fn(matrix, J), jobs)))
    else:
        results = {J: coeff_fn(matrix, J) for J in jobs}
    boundaries = {}
    for k in range(1, len(bases)):
        row_of = {I: r for r, I in enumerate(bases[k - 1])}
        M = [[zero] * len(bases[k]) for _ in bases[k - 1]]
        for c, J in enumerate(bases[k]):
            for I, coeff in results[J]:
                M[row_of[I]][c] = coeff
        boundaries[k] = M
    return boundaries


def build_complex_q(matrix, threads=None, check=True):
    """Salvetti complex with coefficients in ``Q[q, q^-1]``; ``d^2 = 0`` is asserted."""
    bases = artin_basis(matrix)
    cx = ChainComplex(bases, _assemble(matrix, bases, boundary_q, LAURENT.zero, threads),
                      "LAURENT")
    if check:
        cx.check_d_squared()
    return cx


def specialize(complex_, q0, ring="QQ"):
    """Evaluate every entry at ``q = q0``.

    ``ring`` is ``"QQ"`` or ``"ZZ"``; the latter needs an integer ``q0`` (the
    boundary polynomials have integer coefficients).  ``q0 = -1`` gives the
    trivial local system.
    """
    q0 = Fraction(q0)
    if q0 == 0:
        raise ValueError("cannot specialize at q = 0")
    if ring == "ZZ" and q0.denominator != 1:
        raise ValueError("integer specialization needs an integer q")
    R = {"QQ": QQ, "ZZ": ZZ}[ring]
    return complex_.map_entries(lambda p: R.coerce(p(q0)), ring)


def homology_artin_q(matrix, threads=None):
    """``H_*`` of the Artin group with coefficients in ``Q[q, q^-1]`` via ``g_s -> -q``."""
    return homology(build_complex_q(matrix, threads))


def homology_artin_specialized(matrix, q0, ring="QQ", threads=None):
    return homology(specialize(build_complex_q(matrix, threads), q0, ring))


def euler_characteristic(matrix):
    return sum((-1) ** len(J) for J in finite_parabolics(matrix))


def d_squared_group_ring(matrix, J):
    """``d(d(e_J))`` computed in ``Z[W_J]``, as ``{K: coeff}`` (all zero when correct)."""
    J = subset(J)
    table = group_table(matrix, J)
    total = {}
    for I, c_I in boundary_group_ring(matrix, J):
        for K, c_K in boundary_group_ring(matrix, I):
            prod_ = c_I * c_K.embed(table)
            total[K] = total[K] + prod_ if K in total else prod_
    return total


def check_d_squared_group_ring(matrix):
    """Raise ``AssertionError`` unless ``d^2 e_J = 0`` in ``Z[W_J]`` for every finite ``J``."""
    for J in finite_parabolics(matrix):
        for K, c in d_squared_group_ring(matrix, J).items():
            if c:
                raise AssertionError(f"d^2 e_{J} has coefficient {c} on e_{K}")


# ---------------------------------------------------------------------------
# Face poset of the polyhedron Q and cells of X_W

@dataclass(frozen=True, order=True)
class QCell:
    """Face ``w W_gamma`` of ``Q``; ``word`` is the lex-smallest reduced word of
    the minimal representative ``w``."""

    gamma: tuple
    word: tuple

    @property
    def dim(self):
        return len(self.gamma)

    def __str__(self):
        w = "".join(f"s{s + 1}" for s in self.word) or "1"
        g = ",".join(str(s + 1) for s in self.gamma)
        return f"{w}.W{{{g}}}"


@dataclass
class FacePoset:
    """Faces of ``Q`` with covering relations and the identifications giving ``X_W``.

    ``pieces`` maps each maximal finite-type ``Gamma`` to the faces of the
    polyhedron ``Q_Gamma``; for finite ``W`` there is one piece.  ``orbits``
    groups faces by type ``gamma``; each orbit becomes one cell of ``X_W``,
    and a face is glued to the orbit cell along its minimal representative.
    """

    cells: list
    covers: list
    pieces: dict = field(default_factory=dict)

    def by_dim(self, k):
        return [c for c in self.cells if c.dim == k]

    def counts(self):
        top = max(c.dim for c in self.cells)
        return [len(self.by_dim(k)) for k in range(top + 1)]

    @property
    def orbits(self):
        out = {}
        for c in self.cells:
            out.setdefault(c.gamma, []).append(c)
        return dict(sorted(out.items(), key=lambda kv: (len(kv[0]), kv[0])))

    def quotient_cells(self):
        """Cells of ``X_W``: one per orbit, i.e. per finite-type ``gamma``."""
        return list(self.orbits)

    def faces_of(self, cell):
        return [a for a, b in self.covers if b == cell]


def maximal_finite_parabolics(matrix):
    fin = finite_parabolics(matrix)
    return [J for J in fin if not any(len(K) > len(J) and set(J) < set(K) for K in fin)]


def face_poset_Q(matrix):
    """Face poset of ``Q`` (the union of the ``Q_Gamma`` for finite-type ``Gamma``).

    Faces shared by several pieces are identified: a coset ``w W_L`` is the
    same face in every piece containing it, since its minimal element does
    not depend on the piece.
    """
    cells = set()
    covers = set()
    pieces = {}
    for M in maximal_finite_parabolics(matrix):
        T = group_table(matrix, M)
        mine = []
        for k in range(len(M) + 1):
            for L in _subsets(M, k):
                sub = group_table(matrix, L) if L else None
                for w in minimal_coset_reps(T, L):
                    cell = QCell(L, T.normal_form(w))
                    mine.append(cell)
                    for p, tau in enumerate(L):
                        K = L[:p] + L[p + 1:]
                        for b in minimal_coset_reps(sub, K):
                            v = T.multiply(w, sub.embed(T, b))
                            covers.add((QCell(K, T.normal_form(v)), cell))
        cells.update(mine)
        pieces[M] = sorted(mine, key=_cell_key)
    return FacePoset(sorted(cells, key=_cell_key), sorted(covers, key=lambda ab: (
        _cell_key(ab[1]), _cell_key(ab[0]))), pieces)


def _cell_key(c):
    return (c.dim, c.gamma, len(c.word), c.word)


def _subsets(M, k):
    from itertools import combinations
    return [tuple(c) for c in combinations(M, k)]


def xw_cells(matrix):
    """Cells of ``X_W`` by dimension (one per finite-type subset)."""
    return artin_basis(matrix)


def is_artin_cell(matrix, J):
    return is_finite_type(matrix, J)
