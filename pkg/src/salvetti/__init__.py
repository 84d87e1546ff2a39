"""Salvetti complexes of Artin groups and flag resolutions of Coxeter groups.

Exact arithmetic throughout: cyclotomic fields for the reflection
representation, rational Laurent polynomials for the ``g_s -> -q`` local
system, and Smith normal form over Z and Q[q, q^-1] for homology.
"""
from .artin import (
    boundary_group_ring,
    boundary_q,
    build_complex_q,
    euler_characteristic,
    face_poset_Q,
    homology_artin_q,
    incidence_sign,
    specialize,
)
from .coxeter import (
    INF,
    ArtinPresentation,
    CoxeterMatrix,
    CoxeterSyntaxError,
    CoxeterValidationError,
    TypeLabel,
    artin_presentation,
    classify_finite,
    components,
    finite_parabolics,
    parse_coxeter_spec,
)
from .groups import (
    BudgetExceeded,
    GroupTable,
    conjugate_subset,
    enumerate_group,
    generator_matrices,
    group_table,
    minimal_coset_reps,
    minimal_left_reps,
    poincare_poly,
    poincare_poly_closed_form,
    section_psi,
)
from .homology import LAURENT, QQ, ZZ, ChainComplex, HomologyModule, homology, smith_normal_form
from .laurent import LaurentPoly, exact_divide, q_binomial, q_factorial, q_integer
from .resolution import (
    alpha,
    boundary_flag,
    enumerate_flags,
    homology_coxeter,
    mu,
    sigma_inversions,
)

__version__ = "0.1.0"
