"""Command line front end: ``salvetti <command> SYSTEM [options]``.

SYSTEM is a type name (``A3``, ``~A2``, ``I2(7)``), an explicit block
(``"rank 3; m 1 2 = 3; m 2 3 = inf"``), a path to a file holding either, or
``-`` for standard input.

Exit status: 0 on success, 1 for usage errors (bad options or unparsable
input), 2 for computation errors (budget overflow, failed verification).
"""
from __future__ import annotations

import argparse
import csv
import io
import os
import sys
from fractions import Fraction

from . import artin, coxeter, export, groups, resolution
from .homology import ChainComplexError

COMMANDS = ("classify", "presentation", "enumerate", "poincare", "cells",
            "artin-homology", "coxeter-homology", "export")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser():
    p = _Parser(prog="salvetti", description="Salvetti complexes and Coxeter resolutions.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("system", help="type name, explicit block, file path, or '-'")
        sp.add_argument("--format", choices=("text", "json", "csv"), default="text")
        sp.add_argument("--output", "-o", help="write the result to this file")
        sp.add_argument("--budget", type=int, default=groups.DEFAULT_BUDGET,
                        help="maximum group order enumerated (default %(default)s)")
        sp.add_argument("--threads", type=int, default=None,
                        help="worker threads for complex assembly (env SALVETTI_THREADS)")
        sp.add_argument("--verify", action="store_true",
                        help="run the d^2 = 0 checks before reporting")
        return sp

    add("classify", "finite-type classification of S (or --subset)").add_argument(
        "--subset", help="comma separated 1-based generators")
    add("presentation", "Artin group presentation")
    add("enumerate", "enumerate W_J by breadth-first search").add_argument(
        "--subset", help="comma separated 1-based generators")
    add("poincare", "Poincare polynomial W_J(q)").add_argument(
        "--subset", help="comma separated 1-based generators")
    add("cells", "cells of X_W and face counts of Q")
    sp = add("artin-homology", "homology of the Salvetti complex")
    sp.add_argument("--coeff", choices=("laurent", "rational", "integer"), default="laurent",
                    help="Q[q,q^-1] (default), Q at --q, or Z at integer --q")
    sp.add_argument("--q", default="-1", help="specialization value (default -1: trivial)")
    sp = add("coxeter-homology", "integral homology of W from the flag resolution")
    sp.add_argument("--kmax", type=int, default=resolution.DEFAULT_KMAX,
                    help="build degrees 0..kmax, report H_0..H_{kmax-1}")
    sp.add_argument("--depth", type=int, default=None, help="truncate flags to this depth")
    sp.add_argument("--max-rank", type=int, default=4, help="refuse larger rank (default 4)")
    sp = add("export", "write a complex or face poset as JSON")
    sp.add_argument("--what", choices=("artin-complex", "artin-group-ring", "face-poset",
                                       "coxeter-complex"), default="artin-complex")
    sp.add_argument("--kmax", type=int, default=resolution.DEFAULT_KMAX)
    sp.add_argument("--depth", type=int, default=None)
    return p


def read_system(arg):
    if arg == "-":
        text = sys.stdin.read()
    elif os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = arg
    try:
        return coxeter.parse_coxeter_spec(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def parse_subset(matrix, text):
    if text is None:
        return matrix.generators
    try:
        members = [int(x) - 1 for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad subset {text!r}") from None
    if any(not 0 <= s < matrix.rank for s in members):
        raise UsageError(f"subset {text!r} out of range 1..{matrix.rank}")
    return coxeter.subset(members)


def _threads(args):
    if args.threads is not None:
        return args.threads
    env = os.environ.get("SALVETTI_THREADS")
    return int(env) if env else None


def _table(rows, header):
    widths = [max(len(str(r[i])) for r in [header] + rows) for i in range(len(header))]
    lines = ["  ".join(str(c).ljust(w) for c, w in zip(header, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for r in rows:
        lines.append("  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"


def _csv(rows, header):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _emit(args, doc, rows, header, preamble=""):
    if args.format == "json":
        return export.dumps(doc)
    if args.format == "csv":
        return _csv(rows, header)
    return preamble + _table(rows, header)


def _homology_rows(modules):
    return [[m.degree, m.free_rank, "; ".join(m.to_json()["invariant_factors"]), str(m)]
            for m in modules]


def cmd_classify(args, matrix):
    J = parse_subset(matrix, getattr(args, "subset", None))
    labels = coxeter.classify_finite(matrix, J)
    comps = coxeter.components(matrix, J)
    rows = []
    for comp in comps:
        lab = coxeter._classify_component(matrix, comp)
        rows.append([export.fmt_subset(comp), str(lab) if lab else "infinite",
                     lab.order if lab else "inf"])
    doc = {
        "system": export.system_json(matrix),
        "subset": [s + 1 for s in J],
        "finite": labels is not None,
        "components": [{"generators": [s + 1 for s in c], "type": r[1], "order": r[2]}
                       for c, r in zip(comps, rows)],
        "finite_parabolics": [[s + 1 for s in K] for K in coxeter.finite_parabolics(matrix)],
    }
    status = "finite" if labels is not None else "infinite"
    pre = f"W_J for J={export.fmt_subset(J)}: {status}\n"
    return _emit(args, doc, rows, ["component", "type", "order"], pre)


def cmd_presentation(args, matrix):
    pres = coxeter.artin_presentation(matrix)
    rows = [[" ".join(pres.generators[g] for g in a), " ".join(pres.generators[g] for g in b)]
            for a, b in pres.relations]
    doc = {
        "system": export.system_json(matrix),
        "generators": list(pres.generators),
        "relations": [[[g + 1 for g in a], [g + 1 for g in b]] for a, b in pres.relations],
    }
    pre = (f"generators: {', '.join(pres.generators)}\n"
           f"relations: {len(pres.relations)}\n")
    if not rows:
        return export.dumps(doc) if args.format == "json" else (
            _csv([], ["left", "right"]) if args.format == "csv" else pre)
    return _emit(args, doc, rows, ["left", "right"], pre)


def cmd_enumerate(args, matrix):
    J = parse_subset(matrix, args.subset)
    if coxeter.classify_finite(matrix, J) is None:
        raise ArithmeticError(f"W_J is infinite for J={export.fmt_subset(J)}")
    table = groups.enumerate_group(matrix, J, budget=args.budget)
    counts = {}
    for ell in table.length:
        counts[ell] = counts.get(ell, 0) + 1
    rows = [[k, counts[k]] for k in sorted(counts)]
    w0 = table.longest()
    doc = {
        "system": export.system_json(matrix),
        "subset": [s + 1 for s in J],
        "order": table.order,
        "lengths": [{"length": k, "count": counts[k]} for k in sorted(counts)],
        "longest_word": [s + 1 for s in table.normal_form(w0)],
    }
    pre = (f"order: {table.order}\n"
           f"longest element: {export.fmt_word(table.normal_form(w0), 's')}\n")
    return _emit(args, doc, rows, ["length", "count"], pre)


def cmd_poincare(args, matrix):
    J = parse_subset(matrix, args.subset)
    labels = coxeter.classify_finite(matrix, J)
    if labels is None:
        raise ArithmeticError(f"W_J is infinite for J={export.fmt_subset(J)}")
    poly = groups.poincare_poly_closed_form(labels)
    if args.verify:
        table = groups.enumerate_group(matrix, J, budget=args.budget)
        if groups.poincare_poly(table) != poly:
            raise ArithmeticError("enumerated Poincare polynomial disagrees with closed form")
    factored = groups.closed_form_text(labels)
    doc = {
        "system": export.system_json(matrix),
        "subset": [s + 1 for s in J],
        "types": [str(lab) for lab in labels],
        "factored": factored,
        "polynomial": str(poly),
        "order": poly(1),
    }
    rows = [[factored, str(poly), poly(1)]]
    if args.format == "text":
        return f"W_J(q) = {factored}\n       = {poly}\n|W_J| = {poly(1)}\n"
    return _emit(args, doc, rows, ["factored", "polynomial", "order"])


def _check_budget(matrix, J, budget):
    order = coxeter.group_order(matrix, J)
    if order is not None and order > budget:
        raise groups.BudgetExceeded(f"|W_J| = {order} exceeds budget {budget}")


def cmd_cells(args, matrix):
    for M in artin.maximal_finite_parabolics(matrix):
        _check_budget(matrix, M, args.budget)
    cells = artin.xw_cells(matrix)
    poset = artin.face_poset_Q(matrix)
    counts = poset.counts()
    rows = []
    for k in range(max(len(cells), len(counts))):
        xk = cells[k] if k < len(cells) else []
        rows.append([k, len(xk), counts[k] if k < len(counts) else 0,
                     " ".join(export.fmt_subset(J) for J in xk)])
    doc = {
        "system": export.system_json(matrix),
        "xw_cells": [[export.fmt_subset(J) for J in b] for b in cells],
        "q_face_counts": counts,
        "q_pieces": [export.fmt_subset(M) for M in poset.pieces],
        "euler_characteristic": artin.euler_characteristic(matrix),
    }
    pre = f"euler characteristic of X_W: {artin.euler_characteristic(matrix)}\n"
    return _emit(args, doc, rows, ["dim", "X_W cells", "Q faces", "subsets"], pre)


def cmd_artin_homology(args, matrix):
    threads = _threads(args)
    cx = artin.build_complex_q(matrix, threads=threads, check=args.verify)
    if args.verify:
        for J in coxeter.finite_parabolics(matrix):
            _check_budget(matrix, J, args.budget)
        artin.check_d_squared_group_ring(matrix)
    if args.coeff == "laurent":
        ring = "LAURENT"
    else:
        try:
            q0 = Fraction(args.q)
        except ValueError:
            raise UsageError(f"bad --q value {args.q!r}") from None
        ring = "QQ" if args.coeff == "rational" else "ZZ"
        try:
            cx = artin.specialize(cx, q0, ring)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    from .homology import homology
    mods = homology(cx, check=args.verify)
    doc = export.homology_json(mods, matrix, ring)
    pre = f"coefficients: {export.RING_NAMES[ring]}"
    pre += f" at q = {args.q}\n" if ring != "LAURENT" else " (g_s -> -q)\n"
    return _emit(args, doc, _homology_rows(mods), ["degree", "free_rank", "torsion", "H"], pre)


def cmd_coxeter_homology(args, matrix):
    if matrix.rank > args.max_rank:
        raise UsageError(f"rank {matrix.rank} exceeds --max-rank {args.max_rank}")
    if args.kmax < 1:
        raise UsageError("--kmax must be at least 1")
    for J in coxeter.finite_parabolics(matrix):
        _check_budget(matrix, J, args.budget)
    if args.verify:
        resolution.check_d_squared(matrix, args.kmax, args.depth)
    mods = resolution.homology_coxeter(matrix, args.kmax, args.depth, _threads(args))
    doc = export.homology_json(mods, matrix, "ZZ")
    doc["reported_degrees"] = [0, args.kmax - 1]
    pre = f"H_k(W; Z) for k = 0..{args.kmax - 1}"
    pre += f" (flags of depth <= {args.depth})\n" if args.depth else "\n"
    return _emit(args, doc, _homology_rows(mods), ["degree", "free_rank", "torsion", "H"], pre)


def cmd_export(args, matrix):
    if args.format == "csv":
        raise UsageError("export writes JSON only")
    if args.what == "artin-complex":
        cx = artin.build_complex_q(matrix, threads=_threads(args))
        doc = export.complex_json(cx, matrix, "artin-q")
    elif args.what == "artin-group-ring":
        for J in coxeter.finite_parabolics(matrix):
            _check_budget(matrix, J, args.budget)
        doc = export.artin_group_ring_json(matrix)
    elif args.what == "face-poset":
        for M in artin.maximal_finite_parabolics(matrix):
            _check_budget(matrix, M, args.budget)
        doc = export.face_poset_json(artin.face_poset_Q(matrix), matrix)
    else:
        cx = resolution.coxeter_complex(matrix, args.kmax, args.depth, _threads(args))
        doc = export.complex_json(cx, matrix, "coxeter-resolution", label=export.fmt_flag)
    if args.verify:
        artin.check_d_squared_group_ring(matrix)
    return export.dumps(doc)


HANDLERS = {
    "classify": cmd_classify,
    "presentation": cmd_presentation,
    "enumerate": cmd_enumerate,
    "poincare": cmd_poincare,
    "cells": cmd_cells,
    "artin-homology": cmd_artin_homology,
    "coxeter-homology": cmd_coxeter_homology,
    "export": cmd_export,
}


def run(argv=None, stdout=None, stderr=None):
    """Run one command; returns the exit status."""
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        matrix = read_system(args.system)
        out = HANDLERS[args.command](args, matrix)
    except UsageError as exc:
        print(f"salvetti: error: {exc}", file=stderr)
        return 1
    except (ArithmeticError, RuntimeError, ValueError, AssertionError,
            ChainComplexError) as exc:
        print(f"salvetti: computation error: {exc}", file=stderr)
        return 2
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(out)
    else:
        stdout.write(out)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
