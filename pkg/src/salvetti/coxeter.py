"""Coxeter systems: input parsing, validation, diagram classification and
Artin presentations.

A Coxeter system is stored as a :class:`CoxeterMatrix`.  Generator subsets
are plain sorted tuples of 0-based generator indices, ordered by the input
order of the generators.

>>> m = parse_coxeter_spec("A3")
>>> m.rank
3
>>> classify_finite(m, (0, 1, 2))
[TypeLabel(family='A', rank=3, bond=None)]
>>> parse_coxeter_spec("~A1").label(0, 1)
inf
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import total_ordering
from math import prod


class CoxeterSyntaxError(ValueError):
    """Malformed Coxeter system text."""


class CoxeterValidationError(ValueError):
    """Well-formed input that does not describe a Coxeter matrix."""


@total_ordering
class _Infinity:
    """The bond label for a pair of generators whose product has infinite order."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"

    __str__ = __repr__

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("coxeter-infinity")

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


def _label_ok(x):
    return x is INF or (isinstance(x, int) and not isinstance(x, bool))


@dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric matrix of bond labels ``m(s, t)``.

    Labels are positive ints or :data:`INF`.  Construction validates the
    Coxeter conditions; instances are immutable and hashable.
    """

    m: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.m)
        object.__setattr__(self, "m", rows)
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise CoxeterValidationError("Coxeter matrix must be square")
            for j, x in enumerate(row):
                if not _label_ok(x):
                    raise CoxeterValidationError(f"bad label {x!r} at ({i + 1}, {j + 1})")
        for i in range(n):
            if rows[i][i] != 1:
                raise CoxeterValidationError(f"diagonal entry m({i + 1},{i + 1}) must be 1")
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise CoxeterValidationError(
                        f"matrix is not symmetric at ({i + 1}, {j + 1})")
                if rows[i][j] is not INF and rows[i][j] < 2:
                    raise CoxeterValidationError(
                        f"off-diagonal label m({i + 1},{j + 1}) must be >= 2")

    @property
    def rank(self):
        return len(self.m)

    @property
    def generators(self):
        return tuple(range(self.rank))

    def label(self, s, t):
        return self.m[s][t]

    def relabel(self, perm):
        """Matrix of the same system with generator ``i`` renamed ``perm[i]``."""
        n = self.rank
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        return CoxeterMatrix(tuple(tuple(self.m[inv[a]][inv[b]] for b in range(n))
                                   for a in range(n)))

    def restrict(self, J):
        return CoxeterMatrix(tuple(tuple(self.m[a][b] for b in J) for a in J))

    def __str__(self):
        return "\n".join(" ".join(f"{str(x):>3}" for x in row) for row in self.m)


def subset(members):
    """Normalize an iterable of generator indices to a sorted tuple."""
    out = tuple(sorted(set(members)))
    return out


# ---------------------------------------------------------------------------
# Named families

def _path(n, bonds=None):
    """Matrix of a path diagram on ``n`` nodes with the given edge labels."""
    bonds = list(bonds) if bonds is not None else [3] * (n - 1)
    rows = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for i, b in enumerate(bonds):
        rows[i][i + 1] = rows[i + 1][i] = b
    return rows


def _from_edges(n, edges):
    rows = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for a, b, lab in edges:
        rows[a][b] = rows[b][a] = lab
    return rows


def _star(arms):
    """Tree with one centre (node 0) and arms of the given lengths, all bonds 3."""
    edges = []
    nxt = 1
    for length in arms:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt, 3))
            prev = nxt
            nxt += 1
    return _from_edges(nxt, edges)


def _finite_family(family, n, bond=None):
    if family == "A":
        if n < 1:
            raise CoxeterValidationError("A_n needs n >= 1")
        return _path(n)
    if family in ("B", "C"):
        if n < 2:
            raise CoxeterValidationError(f"{family}_n needs n >= 2")
        return _path(n, [4] + [3] * (n - 2))
    if family == "D":
        if n < 4:
            raise CoxeterValidationError("D_n needs n >= 4")
        # nodes 0, 1 are the fork leaves attached to node 2
        return _from_edges(n, [(0, 2, 3), (1, 2, 3)] + [(i, i + 1, 3) for i in range(2, n - 1)])
    if family == "E":
        if n not in (6, 7, 8):
            raise CoxeterValidationError("E_n needs n in {6, 7, 8}")
        # Bourbaki numbering: 1-3-4-5-..., 2 attached to 4
        edges = [(0, 2, 3), (1, 3, 3)] + [(i, i + 1, 3) for i in range(2, n - 1)]
        return _from_edges(n, edges)
    if family == "F":
        if n != 4:
            raise CoxeterValidationError("F_n needs n = 4")
        return _path(4, [3, 4, 3])
    if family == "G":
        if n != 2:
            raise CoxeterValidationError("G_n needs n = 2")
        return _path(2, [6])
    if family == "H":
        if n not in (2, 3, 4):
            raise CoxeterValidationError("H_n needs n in {2, 3, 4}")
        return _path(n, [5] + [3] * (n - 2))
    if family == "I":
        if n != 2 or bond is None:
            raise CoxeterValidationError("dihedral type is written I2(m)")
        if bond < 2:
            raise CoxeterValidationError("I2(m) needs m >= 2")
        return _path(2, [bond])
    raise CoxeterSyntaxError(f"unknown family {family!r}")


def _affine_family(family, n):
    """Standard affine diagram ~X_n on n+1 nodes."""
    if family == "A":
        if n < 1:
            raise CoxeterValidationError("~A_n needs n >= 1")
        if n == 1:
            return _path(2, [INF])
        return _from_edges(n + 1, [(i, (i + 1) % (n + 1), 3) for i in range(n + 1)])
    if family == "B":
        if n < 3:
            raise CoxeterValidationError("~B_n needs n >= 3")
        edges = [(0, 2, 3), (1, 2, 3)] + [(i, i + 1, 3) for i in range(2, n - 1)]
        edges.append((n - 1, n, 4))
        return _from_edges(n + 1, edges)
    if family == "C":
        if n < 2:
            raise CoxeterValidationError("~C_n needs n >= 2")
        return _path(n + 1, [4] + [3] * (n - 2) + [4])
    if family == "D":
        if n < 4:
            raise CoxeterValidationError("~D_n needs n >= 4")
        edges = [(0, 2, 3), (1, 2, 3)] + [(i, i + 1, 3) for i in range(2, n - 2)]
        edges += [(n - 2, n - 1, 3), (n - 2, n, 3)]
        return _from_edges(n + 1, edges)
    if family == "E":
        arms = {6: (2, 2, 2), 7: (1, 3, 3), 8: (1, 2, 5)}
        if n not in arms:
            raise CoxeterValidationError("~E_n needs n in {6, 7, 8}")
        return _star(arms[n])
    if family == "F":
        if n != 4:
            raise CoxeterValidationError("~F_n needs n = 4")
        return _path(5, [3, 3, 4, 3])
    if family == "G":
        if n != 2:
            raise CoxeterValidationError("~G_n needs n = 2")
        return _path(3, [3, 6])
    raise CoxeterSyntaxError(f"unknown affine family {family!r}")


_NAME_RE = re.compile(r"^(~?)([A-Z])(\d+)(?:\((\d+)\))?$")


def _block_sum(blocks):
    n = sum(len(b) for b in blocks)
    rows = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                rows[off + i][off + j] = x
        off += len(b)
    return rows


def _parse_name(token):
    mt = _NAME_RE.match(token)
    if not mt:
        raise CoxeterSyntaxError(f"cannot parse Coxeter type {token!r}")
    affine, family, n, bond = mt.groups()
    n = int(n)
    bond = int(bond) if bond is not None else None
    if affine:
        if bond is not None:
            raise CoxeterSyntaxError(f"affine type {token!r} takes no bond")
        return _affine_family(family, n)
    if family != "I" and bond is not None:
        raise CoxeterSyntaxError(f"only I2(m) takes a bond, got {token!r}")
    return _finite_family(family, n, bond)


def _parse_label(tok):
    if tok.lower() in ("inf", "infinity", "oo", "∞"):
        return INF
    try:
        return int(tok)
    except ValueError:
        raise CoxeterSyntaxError(f"bad label {tok!r}") from None


def _parse_block(text):
    lines = [ln.strip() for ln in re.split(r"[;\n]", text)]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    head = lines[0].split()
    if len(head) != 2 or head[0] != "rank":
        raise CoxeterSyntaxError("explicit block must start with 'rank <n>'")
    try:
        n = int(head[1])
    except ValueError:
        raise CoxeterSyntaxError(f"bad rank {head[1]!r}") from None
    if n < 0:
        raise CoxeterValidationError("rank must be nonnegative")
    rows = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    seen = {}
    for ln in lines[1:]:
        mt = re.match(r"^m\s+(\d+)\s+(\d+)\s*=\s*(\S+)$", ln)
        if not mt:
            raise CoxeterSyntaxError(f"cannot parse line {ln!r}")
        i, j = int(mt.group(1)) - 1, int(mt.group(2)) - 1
        lab = _parse_label(mt.group(3))
        if not (0 <= i < n and 0 <= j < n):
            raise CoxeterValidationError(f"index out of range in {ln!r}")
        key = (min(i, j), max(i, j))
        if key in seen and seen[key] != lab:
            raise CoxeterValidationError(f"conflicting labels for pair {key[0] + 1},{key[1] + 1}")
        seen[key] = lab
        rows[i][j] = lab
        rows[j][i] = lab
    return rows


def parse_coxeter_spec(text):
    """Parse a Coxeter system from text.

    Accepted forms are a type name (``A3``, ``B4``, ``I2(7)``, ``~A2``,
    ``~G2``), a product of names joined by ``x`` (``A2xB3``), or an explicit
    block::

        rank 3
        m 1 2 = 3
        m 2 3 = inf

    Lines may also be separated by ``;``.  Indices are 1-based and pairs that
    are not mentioned commute (label 2).

    Raises
    ------
    CoxeterSyntaxError
        Text that matches neither form.
    CoxeterValidationError
        Text that parses but violates the Coxeter matrix conditions.
    """
    text = text.strip()
    if not text:
        raise CoxeterSyntaxError("empty Coxeter specification")
    if text.startswith("rank"):
        return CoxeterMatrix(_parse_block(text))
    parts = [p.strip() for p in re.split(r"\s*[x×*]\s*", text)]
    if any(not p for p in parts):
        raise CoxeterSyntaxError(f"cannot parse Coxeter type {text!r}")
    return CoxeterMatrix(_block_sum([_parse_name(p) for p in parts]))


def format_coxeter_spec(matrix):
    """Explicit-block text for ``matrix`` (round-trips through the parser)."""
    lines = [f"rank {matrix.rank}"]
    for i, j in itertools.combinations(range(matrix.rank), 2):
        lab = matrix.label(i, j)
        if lab != 2:
            lines.append(f"m {i + 1} {j + 1} = {lab}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Diagram structure

def components(matrix, J):
    """Connected components of the Coxeter diagram restricted to ``J``.

    Edges join generators with label at least 3 (including infinity).  The
    result is sorted by smallest member.
    """
    J = subset(J)
    left = set(J)
    out = []
    for start in J:
        if start not in left:
            continue
        comp = {start}
        stack = [start]
        left.discard(start)
        while stack:
            a = stack.pop()
            for b in list(left):
                if matrix.label(a, b) != 2:
                    left.discard(b)
                    comp.add(b)
                    stack.append(b)
        out.append(tuple(sorted(comp)))
    return out


@dataclass(frozen=True, order=True)
class TypeLabel:
    """Isomorphism type of a connected finite Coxeter diagram.

    ``family`` is one of ``A B D E6 E7 E8 F4 H3 H4 I2``; ``bond`` is only set
    for ``I2``.  Rank-2 diagrams with bond 3 and 4 are named ``A2`` and
    ``B2``; bond 6 stays ``I2(6)``.
    """

    family: str
    rank: int
    bond: int = None

    def __str__(self):
        if self.family == "I2":
            return f"I2({self.bond})"
        if self.family in ("A", "B", "D"):
            return f"{self.family}{self.rank}"
        return self.family

    @property
    def degrees(self):
        """Degrees of the basic invariants; their product is the group order."""
        n = self.rank
        if self.family == "A":
            return tuple(range(2, n + 2))
        if self.family == "B":
            return tuple(range(2, 2 * n + 1, 2))
        if self.family == "D":
            return tuple(sorted(tuple(range(2, 2 * n - 1, 2)) + (n,)))
        if self.family == "I2":
            return tuple(sorted((2, self.bond)))
        return _EXCEPTIONAL_DEGREES[self.family]

    @property
    def order(self):
        return prod(self.degrees)


_EXCEPTIONAL_DEGREES = {
    "E6": (2, 5, 6, 8, 9, 12),
    "E7": (2, 6, 8, 10, 12, 14, 18),
    "E8": (2, 8, 12, 14, 18, 20, 24, 30),
    "F4": (2, 6, 8, 12),
    "H3": (2, 6, 10),
    "H4": (2, 12, 20, 30),
}


def _classify_component(matrix, comp):
    n = len(comp)
    if n == 1:
        return TypeLabel("A", 1)
    adj = {a: [] for a in comp}
    edges = []
    for a, b in itertools.combinations(comp, 2):
        lab = matrix.label(a, b)
        if lab is INF:
            return None
        if lab >= 3:
            adj[a].append(b)
            adj[b].append(a)
            edges.append(lab)
    if len(edges) != n - 1:
        return None  # contains a cycle
    if n == 2:
        m = edges[0]
        if m == 3:
            return TypeLabel("A", 2)
        if m == 4:
            return TypeLabel("B", 2)
        return TypeLabel("I2", 2, m)
    degs = {a: len(adj[a]) for a in comp}
    branch = [a for a in comp if degs[a] >= 3]
    if not branch:
        # walk the path from an end
        start = next(a for a in comp if degs[a] == 1)
        order = [start]
        prev = None
        while len(order) < n:
            cur = order[-1]
            nxt = next(b for b in adj[cur] if b != prev)
            prev = cur
            order.append(nxt)
        bonds = [matrix.label(order[i], order[i + 1]) for i in range(n - 1)]
        big = [i for i, b in enumerate(bonds) if b != 3]
        if not big:
            return TypeLabel("A", n)
        if len(big) > 1:
            return None
        pos, lab = big[0], bonds[big[0]]
        at_end = pos in (0, n - 2)
        if lab == 4 and at_end:
            return TypeLabel("B", n)
        if lab == 4 and n == 4 and pos == 1:
            return TypeLabel("F4", 4)
        if lab == 5 and at_end and n in (3, 4):
            return TypeLabel(f"H{n}", n)
        return None
    if len(branch) > 1 or degs[branch[0]] > 3 or any(lab != 3 for lab in edges):
        return None
    centre = branch[0]
    arms = []
    for b in adj[centre]:
        length, prev, cur = 1, centre, b
        while degs[cur] == 2:
            nxt = next(x for x in adj[cur] if x != prev)
            prev, cur = cur, nxt
            length += 1
        arms.append(length)
    arms = tuple(sorted(arms))
    if arms[:2] == (1, 1):
        return TypeLabel("D", n)
    if arms == (1, 2, 2):
        return TypeLabel("E6", 6)
    if arms == (1, 2, 3):
        return TypeLabel("E7", 7)
    if arms == (1, 2, 4):
        return TypeLabel("E8", 8)
    return None


def classify_finite(matrix, J):
    """Type labels of the components of ``J`` if ``W_J`` is finite, else ``None``.

    Finiteness is decided by matching each component against the list of
    connected finite Coxeter diagrams, so no real arithmetic is involved.
    """
    out = []
    for comp in components(matrix, J):
        lab = _classify_component(matrix, comp)
        if lab is None:
            return None
        out.append(lab)
    return out


def is_finite_type(matrix, J):
    return classify_finite(matrix, J) is not None


def finite_parabolics(matrix):
    """All ``J`` with ``W_J`` finite, ordered by size and then lexicographically."""
    out = []
    for k in range(matrix.rank + 1):
        for J in itertools.combinations(range(matrix.rank), k):
            if is_finite_type(matrix, J):
                out.append(J)
    return out


def group_order(matrix, J=None):
    """Order of ``W_J`` from its classification, or ``None`` when infinite."""
    J = matrix.generators if J is None else J
    labels = classify_finite(matrix, J)
    if labels is None:
        return None
    return prod(lab.order for lab in labels)


# ---------------------------------------------------------------------------
# Artin presentation

@dataclass(frozen=True)
class ArtinPresentation:
    """Generators ``g1..gn`` and braid relations as pairs of words.

    Words are tuples of 0-based generator indices.
    """

    generators: tuple
    relations: tuple

    def __str__(self):
        def word(w):
            return " ".join(self.generators[i] for i in w)
        lines = [f"generators: {', '.join(self.generators)}"]
        if not self.relations:
            lines.append("relations: none")
        for left, right in self.relations:
            lines.append(f"  {word(left)} = {word(right)}")
        return "\n".join(lines)


def _alternating(a, b, m):
    return tuple(a if i % 2 == 0 else b for i in range(m))


def artin_presentation(matrix):
    """Presentation of the Artin group: one braid relation per finite label."""
    gens = tuple(f"g{i + 1}" for i in range(matrix.rank))
    rels = []
    for s, t in itertools.combinations(range(matrix.rank), 2):
        m = matrix.label(s, t)
        if m is INF:
            continue
        rels.append((_alternating(s, t, m), _alternating(t, s, m)))
    return ArtinPresentation(gens, tuple(rels))


def abelianization_rank(presentation):
    """Free rank of the abelianization, computed from the relator exponent sums."""
    from .homology import ZZ, smith_normal_form

    n = len(presentation.generators)
    rows = []
    for left, right in presentation.relations:
        vec = [0] * n
        for g in left:
            vec[g] += 1
        for g in right:
            vec[g] -= 1
        rows.append(vec)
    if not rows:
        return n
    _, r = smith_normal_form(rows, ZZ)
    return n - r


def odd_components(matrix):
    """Components of the graph joining generators with odd finite label."""
    parent = list(range(matrix.rank))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for s, t in itertools.combinations(range(matrix.rank), 2):
        m = matrix.label(s, t)
        if m is not INF and m % 2 == 1:
            parent[find(s)] = find(t)
    return len({find(a) for a in range(matrix.rank)})
