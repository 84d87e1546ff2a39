"""JSON documents for complexes, face posets and homology.

Key order is fixed by construction so that serialized output is
byte-identical across runs.  Generator indices are 1-based in every
document.  The layouts are described by the JSON schemas in ``schemas/``.
"""
from __future__ import annotations

import json

from .coxeter import INF
from .homology import RINGS

RING_NAMES = {"ZZ": "Z", "QQ": "Q", "LAURENT": "Q[q,q^-1]"}


def fmt_subset(J):
    return "{" + ",".join(str(s + 1) for s in J) + "}"


def fmt_flag(flag):
    return "(" + " >= ".join(fmt_subset(G) for G in flag) + ")"


def fmt_word(word, letter="g"):
    """``g1g2g1`` for Artin words; pass ``letter="s"`` for Coxeter group elements."""
    return "".join(f"{letter}{s + 1}" for s in word) or "1"


def system_json(matrix):
    return {
        "rank": matrix.rank,
        "matrix": [[("inf" if x is INF else x) for x in row] for row in matrix.m],
    }


def complex_json(complex_, matrix, kind, label=fmt_subset):
    """Chain complex as a JSON-ready dict; entries are rendered ring elements."""
    R = RINGS[complex_.ring]
    bases = [[label(b) for b in basis] for basis in complex_.bases]
    boundaries = []
    for k in sorted(complex_.boundaries):
        M = complex_.boundaries[k]
        boundaries.append({
            "degree": k,
            "rows": bases[k - 1],
            "cols": bases[k],
            "entries": [[R.render(x) for x in row] for row in M],
        })
    return {
        "schema": "salvetti/complex/v1",
        "kind": kind,
        "system": system_json(matrix),
        "ring": RING_NAMES[complex_.ring],
        "bases": bases,
        "boundaries": boundaries,
    }


def artin_group_ring_json(matrix):
    """Salvetti complex with coefficients as signed Artin words (the psi lifts)."""
    from .artin import artin_basis, boundary_group_ring

    bases = artin_basis(matrix)
    cells = []
    for k in range(1, len(bases)):
        for J in bases[k]:
            faces = []
            for I, coeff in boundary_group_ring(matrix, J):
                t = coeff.table
                terms = sorted(((t.reduced_word[w], c) for w, c in coeff.terms.items()),
                               key=lambda wc: (len(wc[0]), wc[0]))
                faces.append({
                    "face": fmt_subset(I),
                    "terms": [{"coeff": c, "word": [s + 1 for s in w]} for w, c in terms],
                })
            cells.append({"cell": fmt_subset(J), "boundary": faces})
    return {
        "schema": "salvetti/artin-group-ring/v1",
        "system": system_json(matrix),
        "bases": [[fmt_subset(J) for J in b] for b in bases],
        "cells": cells,
    }


def face_poset_json(poset, matrix):
    def cid(c):
        return str(c)

    return {
        "schema": "salvetti/face-poset/v1",
        "system": system_json(matrix),
        "counts": poset.counts(),
        "cells": [{"id": cid(c), "dim": c.dim, "gamma": [s + 1 for s in c.gamma],
                   "beta": [s + 1 for s in c.word]} for c in poset.cells],
        "covers": [[cid(a), cid(b)] for a, b in poset.covers],
        "orbits": [{"gamma": [s + 1 for s in g], "cells": [cid(c) for c in cs]}
                   for g, cs in poset.orbits.items()],
        "pieces": [{"gamma": [s + 1 for s in g], "cells": [cid(c) for c in cs]}
                   for g, cs in poset.pieces.items()],
    }


def homology_json(modules, matrix, ring):
    return {
        "schema": "salvetti/homology/v1",
        "system": system_json(matrix),
        "ring": RING_NAMES[ring],
        "modules": [m.to_json() for m in modules],
    }


def dumps(doc):
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
