"""Integral homology of Coxeter groups from the flag resolution."""
from math import comb

from salvetti.coxeter import parse_coxeter_spec
from salvetti.resolution import boundary_flag, check_d_squared, enumerate_flags, homology_coxeter

a2 = parse_coxeter_spec("A2")

# Flags are weakly decreasing chains; for finite W of rank n there are C(n+k-1, k) in degree k.
for k in range(5):
    print(k, len(enumerate_flags(a2, k)), comb(1 + k, k))

# One boundary, written in Z[W_{G_1}].
for flag, c in boundary_flag(a2, ((0, 1), (0,))):
    print(flag, "<-", c)

# The sign rule is only consistent with the right-coset representatives.
check_d_squared(a2, 6)
try:
    check_d_squared(a2, 3, coset_side="left")
except AssertionError as exc:
    print("left cosets:", exc)

for name, kmax in [("A1", 7), ("A2", 6), ("B2", 5), ("I2(5)", 5), ("A3", 5), ("~A1", 5), ("~A2", 5)]:
    hs = homology_coxeter(parse_coxeter_spec(name), kmax)
    print(f"{name:6}", ", ".join(str(h) for h in hs))
