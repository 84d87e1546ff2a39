"""Coxeter systems: parsing, classification and Artin presentations.

Run with ``python demos/01_coxeter_systems.py``.
"""
from salvetti.coxeter import (
    abelianization_rank,
    artin_presentation,
    classify_finite,
    finite_parabolics,
    group_order,
    odd_components,
    parse_coxeter_spec,
)

# A system can be named by type or written out label by label.
b3 = parse_coxeter_spec("B3")
print(b3, "\n")
custom = parse_coxeter_spec("rank 3; m 1 2 = 3; m 2 3 = inf")
print(custom, "\n")

# Finiteness is read off the diagram, never by enumeration.
for name in ["A4", "D4", "H4", "F4", "A2xB2", "~A2", "~G2"]:
    m = parse_coxeter_spec(name)
    labels = classify_finite(m, m.generators)
    kind = " x ".join(str(t) for t in labels) if labels else "infinite"
    print(f"{name:6} rank {m.rank}  {kind:10} |W| = {group_order(m)}")

# For affine ~A2 every proper subset is finite; these index the cells of X_W.
print("\nfinite parabolics of ~A2:", finite_parabolics(parse_coxeter_spec("~A2")))

# The Artin group keeps the braid relations and drops s^2 = 1.
print()
print(artin_presentation(parse_coxeter_spec("B3")))

# H_1 of the Artin group is free on the odd-label components of the diagram.
for name in ["A3", "B3", "F4", "~A1", "I2(6)"]:
    m = parse_coxeter_spec(name)
    print(name, abelianization_rank(artin_presentation(m)), odd_components(m))
