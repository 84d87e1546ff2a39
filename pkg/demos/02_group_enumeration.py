"""Enumerating finite parabolic subgroups through the reflection representation."""
import time

from salvetti.coxeter import classify_finite, parse_coxeter_spec
from salvetti.groups import (
    closed_form_text,
    group_table,
    length_poly,
    minimal_coset_reps,
    poincare,
    poincare_poly,
)

# Matrix entries live in Q(zeta_L); H3 needs 2cos(pi/5), so L = lcm(4, 6, 10) = 60.
h3 = parse_coxeter_spec("H3")
t = group_table(h3, h3.generators)
print(t, "level", t.level)
w0 = t.longest()
print("longest element has length", t.length[w0], "word", t.normal_form(w0))

# Length generating function against the product of q-integers over the degrees.
print("W(q) =", poincare_poly(t))
print("     =", closed_form_text(classify_finite(h3, h3.generators)))
assert poincare_poly(t) == poincare(h3, h3.generators)

# W = W^I . W_I with lengths adding: the quotient of Poincare polynomials.
I = (0, 1)
reps = minimal_coset_reps(t, I)
print(f"\n{len(reps)} minimal representatives of W/W_I for I = {I}")
print("sum q^l(b) =", length_poly(t, reps))

# Larger groups stay cheap because BFS touches each element once per generator.
for name in ["F4", "H4", "E6"]:
    m = parse_coxeter_spec(name)
    start = time.perf_counter()
    tab = group_table(m, m.generators)
    print(f"{name}: {tab.order} elements in {time.perf_counter() - start:.2f} s")

# A parabolic of A9 with components of sizes 2, 3 and 1.
a9 = parse_coxeter_spec("A9")
J = (0, 1, 3, 4, 5, 7)
print("\nA9, J =", J, ":", closed_form_text(classify_finite(a9, J)), "=", poincare(a9, J))
