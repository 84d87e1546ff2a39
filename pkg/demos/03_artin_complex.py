"""The Salvetti complex of an Artin group with the local system g_s -> -q."""
from salvetti.artin import (
    boundary_group_ring,
    boundary_q,
    build_complex_q,
    homology_artin_q,
    homology_artin_specialized,
)
from salvetti.coxeter import parse_coxeter_spec

a2 = parse_coxeter_spec("A2")

# In Z[W_J] the boundary coefficient is an alternating sum of minimal coset representatives.
for I, c in boundary_group_ring(a2, (0, 1)):
    print(f"d e_{{1,2}} -> e_{I}: {c}")

# The local system turns each coefficient into W_J(q) / W_I(q).
for I, c in boundary_q(a2, (0, 1)):
    print(f"               e_{I}: {c}")

print("\nA2 over Q[q,q^-1]:", [str(h) for h in homology_artin_q(a2)])

# q = -1 makes every generator act by 1: integral homology of the braid groups.
for n in range(1, 5):
    hs = homology_artin_specialized(parse_coxeter_spec(f"A{n}"), -1, "ZZ")
    print(f"Br_{n + 1}:", [str(h) for h in hs])

# Affine types give infinite Artin groups; ~A1 is free of rank two.
for name in ["~A1", "~A2", "~C2", "~G2"]:
    m = parse_coxeter_spec(name)
    cx = build_complex_q(m)
    print(f"{name}: dims {cx.dims()}", [str(h) for h in homology_artin_q(m)])
