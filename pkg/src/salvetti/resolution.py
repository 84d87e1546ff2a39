"""Flag-indexed free resolution of the trivial ``Z[W]``-module ``Z``.

A generator ``e(G)`` of degree ``k`` is a flag ``G = (G_1, ..., G_r)`` of
nonempty generator subsets with ``G_1 >= G_2 >= ... >= G_r`` (containment is
not required to be strict), ``W_{G_1}`` finite and ``|G_1| + ... + |G_r| = k``.
The boundary is

    d e(G) = sum_i sum_{tau in G_i} sum_b (-1)^alpha(G, i, tau, b) b e(G')

over the positions ``i`` with ``|G_i| > |G_{i+1}|``, where ``b`` runs over the
minimal length representatives of the cosets ``b W_{G_i - tau}`` in
``W_{G_i}`` (``length(b s) > length(b)`` for every ``s`` in ``G_i - tau``)
such that ``b^-1 G_{i+1} b`` is contained in ``G_i - tau``, and

    G' = (G_1, ..., G_{i-1}, G_i - tau, b^-1 G_{i+1} b, ..., b^-1 G_r b).

The sign exponent is

    alpha = i*length(b) + |G_1| + ... + |G_{i-1}| + mu(G_i, tau)
            + sigma(b, G_{i+1}) + ... + sigma(b, G_r),

with ``mu`` the 1-based position of ``tau`` in ``G_i`` and ``sigma`` the
number of inversions of the conjugation map ``a -> b^-1 a b`` on ``G_j``.
Generators are ordered by their input index.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .coxeter import finite_parabolics, is_finite_type, subset
from .grouprings import GroupRingElement
from .groups import conjugation_map, group_table, minimal_coset_reps, minimal_left_reps
from .homology import ZZ, ChainComplex, homology

DEFAULT_KMAX = 8


def _nonempty_subsets(G):
    return [tuple(c) for k in range(len(G), 0, -1) for c in combinations(G, k)]


def _flags_below(top, k, depth):
    """Flags (tuples of parts) with first part contained in ``top``."""
    if k == 0:
        yield ()
        return
    if depth == 0:
        return
    for G in _nonempty_subsets(top):
        if len(G) <= k:
            for rest in _flags_below(G, k - len(G), None if depth is None else depth - 1):
                yield (G,) + rest


def enumerate_flags(matrix, k, d=None):
    """All flags of degree ``k`` and depth at most ``d`` (``None`` for no limit).

    The first part must generate a finite parabolic.  Flags are sorted
    lexicographically by their parts.
    """
    if k < 0:
        raise ValueError("degree must be nonnegative")
    if k == 0:
        return [()]
    out = set()
    tops = [J for J in finite_parabolics(matrix) if J]
    for G in tops:
        if len(G) > k:
            continue
        for rest in _flags_below(G, k - len(G), None if d is None else d - 1):
            out.add((G,) + rest)
    return sorted(out)


def flag_degree(flag):
    return sum(len(G) for G in flag)


def is_flag(matrix, flag):
    if not flag:
        return True
    if any(not G or tuple(G) != subset(G) for G in flag):
        return False
    if any(not set(b) <= set(a) for a, b in zip(flag, flag[1:])):
        return False
    return is_finite_type(matrix, flag[0])


def mu(gamma, tau):
    """Number of generators of ``gamma`` that are ``<= tau``."""
    if tau not in gamma:
        raise ValueError(f"{tau} not in {gamma}")
    return sum(1 for j in gamma if j <= tau)


def sigma_inversions(table, beta, gamma_j):
    """Inversions of ``a -> beta^-1 a beta`` on the ordered set ``gamma_j``.

    The map and its inverse have the same number of inversions, so this also
    counts inversions of ``u -> beta u beta^-1`` on the conjugated set.
    """
    mp = conjugation_map(table, beta, gamma_j)
    if mp is None:
        raise ValueError(f"conjugation by element {beta} does not preserve generators {gamma_j}")
    g = subset(gamma_j)
    return sum(1 for a, b in combinations(g, 2) if mp[a] > mp[b])


def alpha(flag, i, tau, beta, table):
    """Sign exponent of the term ``(i, tau, beta)`` in the boundary of ``e(flag)``.

    ``i`` is 1-based; ``beta`` is an element index of ``table``, which must
    contain ``W_{flag[i-1]}``.
    """
    G = flag[i - 1]
    out = i * table.length[beta] + sum(len(flag[j]) for j in range(i - 1)) + mu(G, tau)
    for Gj in flag[i:]:
        out += sigma_inversions(table, beta, Gj)
    return out


_REPS = {"left": minimal_left_reps, "right": minimal_coset_reps}


def boundary_flag(matrix, flag, coset_side="right"):
    """Boundary of ``e(flag)`` as ``[(flag', coeff)]`` with ``coeff`` in ``Z[W_{G_1}]``.

    ``coset_side`` selects the representatives ``b``: ``"right"`` (minimal in
    ``b W_{G_i - tau}``, the default) or ``"left"`` (minimal in
    ``W_{G_i - tau} b``).  Only the default gives ``d^2 = 0``; the other is
    kept so the failure can be reproduced.
    """
    flag = tuple(subset(G) for G in flag)
    if not flag:
        return []
    reps_fn = _REPS[coset_side]
    ambient = group_table(matrix, flag[0])
    r = len(flag)
    acc = {}
    for i in range(1, r + 1):
        G = flag[i - 1]
        nxt = flag[i] if i < r else ()
        if len(G) <= len(nxt):
            continue
        table = group_table(matrix, G)
        for p, tau in enumerate(G):
            K = G[:p] + G[p + 1:]
            Kset = set(K)
            for b in reps_fn(table, K):
                mp = conjugation_map(table, b, nxt)
                if mp is None or not set(mp.values()) <= Kset:
                    continue
                tail = []
                for Gj in flag[i:]:
                    mj = conjugation_map(table, b, Gj)
                    tail.append(subset(mj.values()))
                new = flag[:i - 1] + ((K,) if K else ()) + tuple(tail)
                sign = -1 if alpha(flag, i, tau, b, table) % 2 else 1
                v = table.embed(ambient, b)
                acc.setdefault(new, {})
                acc[new][v] = acc[new].get(v, 0) + sign
    out = []
    for new in sorted(acc):
        c = GroupRingElement(ambient, acc[new])
        if c:
            out.append((new, c))
    return out


def d_squared_flag(matrix, flag, coset_side="right"):
    """``d(d(e(flag)))`` in ``Z[W_{G_1}]`` as ``{flag'': coeff}``."""
    total = {}
    for f1, c1 in boundary_flag(matrix, flag, coset_side):
        for f2, c2 in boundary_flag(matrix, f1, coset_side):
            term = c1 * c2
            total[f2] = total[f2] + term if f2 in total else term
    return {f: c for f, c in total.items() if c}


def check_d_squared(matrix, k_max, d=None, coset_side="right"):
    """Raise ``AssertionError`` if ``d^2 e(G) != 0`` for some flag of degree ``<= k_max``."""
    for k in range(2, k_max + 1):
        for flag in enumerate_flags(matrix, k, d):
            bad = d_squared_flag(matrix, flag, coset_side)
            if bad:
                f, c = next(iter(bad.items()))
                raise AssertionError(f"d^2 e{flag} has coefficient {c} on e{f}")


@lru_cache(maxsize=64)
def _bases(matrix, k_max, d):
    return tuple(tuple(enumerate_flags(matrix, k, d)) for k in range(k_max + 1))


def coxeter_complex(matrix, k_max=DEFAULT_KMAX, d=None, threads=None):
    """``C_* (x)_{Z[W]} Z`` in degrees ``0..k_max`` as an integer chain complex.

    Each group ring coefficient is replaced by its augmentation.
    """
    bases = [list(b) for b in _bases(matrix, k_max, d)]
    jobs = [f for k in range(1, k_max + 1) for f in bases[k]]
    if threads and threads > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(threads) as pool:
            terms = dict(zip(jobs, pool.map(lambda f: boundary_flag(matrix, f), jobs)))
    else:
        terms = {f: boundary_flag(matrix, f) for f in jobs}
    boundaries = {}
    for k in range(1, k_max + 1):
        row_of = {f: i for i, f in enumerate(bases[k - 1])}
        M = [[0] * len(bases[k]) for _ in bases[k - 1]]
        for c, f in enumerate(bases[k]):
            for g, coeff in terms[f]:
                M[row_of[g]][c] += coeff.augmentation()
        boundaries[k] = M
    return ChainComplex(bases, boundaries, "ZZ")


def homology_coxeter(matrix, k_max=DEFAULT_KMAX, d=None, threads=None):
    """Integral homology ``H_0 .. H_{k_max - 1}`` of ``W`` (or of the depth-``d`` truncation).

    Degree ``k_max`` is not reported: it would need the boundary out of
    degree ``k_max + 1``.
    """
    cx = coxeter_complex(matrix, k_max, d, threads)
    return homology(cx, degrees=range(k_max))


def regular_complex(matrix, k_max, d=None):
    """The resolution as a complex of free abelian groups, augmented to ``Z``.

    Requires finite ``W``.  Basis of degree ``k`` is ``(flag, w)`` for flags of
    degree ``k`` and ``w`` in ``W``; degree ``-1`` is ``Z`` (stored as
    degree 0 of the returned complex, so all degrees shift by one).
    """
    full = group_table(matrix, matrix.generators)
    n = full.order
    flag_bases = [enumerate_flags(matrix, k, d) for k in range(k_max + 1)]
    bases = [[("aug",)]] + [[(f, w) for f in fl for w in range(n)] for fl in flag_bases]
    boundaries = {1: [[1] * n]}
    for k in range(1, k_max + 1):
        row_of = {lab: i for i, lab in enumerate(bases[k])}
        M = [[0] * len(bases[k + 1]) for _ in bases[k]]
        for fi, f in enumerate(flag_bases[k]):
            for g, coeff in boundary_flag(matrix, f):
                c = coeff.embed(full)
                for w in range(n):
                    for x, a in c.left_mul(w).terms.items():
                        M[row_of[(g, x)]][fi * n + w] += a
        boundaries[k + 1] = M
    return ChainComplex(bases, boundaries, "ZZ")
