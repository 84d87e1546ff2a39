import cmath
import math

from hypothesis import given
from hypothesis import strategies as st

from salvetti.cyclotomic import CyclotomicNumber, common_level, cyclotomic_coeffs, multiplication_matrix


def test_cyclotomic_polynomials():
    assert cyclotomic_coeffs(1) == (-1, 1)
    assert cyclotomic_coeffs(4) == (1, 0, 1)
    assert cyclotomic_coeffs(6) == (1, -1, 1)
    assert len(cyclotomic_coeffs(60)) - 1 == 16


def test_two_cos_values():
    for m in [2, 3, 4, 5, 6, 7, 8, 12]:
        level = common_level([m])
        x = CyclotomicNumber.two_cos_pi_over(m, level)
        assert x.is_real()
        assert abs(complex(x) - 2 * math.cos(math.pi / m)) < 1e-12
    # golden ratio relation at m = 5
    phi = CyclotomicNumber.two_cos_pi_over(5, 10)
    assert phi * phi == phi + 1


levels = st.sampled_from([3, 4, 5, 8, 10, 12, 14])


@given(levels, st.data())
def test_field_arithmetic_matches_complex(level, data):
    deg = len(cyclotomic_coeffs(level)) - 1
    vec = st.lists(st.integers(-4, 4), min_size=deg, max_size=deg)
    a = CyclotomicNumber(level, data.draw(vec))
    b = CyclotomicNumber(level, data.draw(vec))
    assert cmath.isclose(complex(a * b), complex(a) * complex(b), abs_tol=1e-9)
    assert cmath.isclose(complex(a + b), complex(a) + complex(b), abs_tol=1e-9)
    assert cmath.isclose(complex(a.conjugate()), complex(a).conjugate(), abs_tol=1e-9)
    M = multiplication_matrix(a)
    prod = [sum(M[i][j] * b.coeffs[j] for j in range(deg)) for i in range(deg)]
    assert CyclotomicNumber(level, prod) == a * b


def test_zeta_power_wraps():
    z = CyclotomicNumber.zeta_power(12, 1)
    acc = CyclotomicNumber.from_int(12, 1)
    for _ in range(12):
        acc = acc * z
    assert acc == CyclotomicNumber.from_int(12, 1)
    assert CyclotomicNumber.zeta_power(12, 13) == z
