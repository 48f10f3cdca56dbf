from fractions import Fraction
from math import comb

from cliquetopo.complexes import clique_complex, cycle_complement_complex, path_complement_complex
from cliquetopo.graphs import dihedral_complement
from cliquetopo.polynomials import (Polynomial, dihedral_f_function, f_polynomial, integrate_minus_one_zero,
                                    integrate_product, jacobsthal_cycle, jacobsthal_cycle_binomial,
                                    jacobsthal_path)


def test_cycle_f_function_is_jacobsthal():
    for n in range(4, 20):
        assert f_polynomial(cycle_complement_complex(n)) == jacobsthal_cycle(n)


def test_path_f_function_is_jacobsthal():
    for n in range(1, 20):
        assert f_polynomial(path_complement_complex(n)) == jacobsthal_path(n)


def test_binomial_form():
    for n in range(4, 25):
        assert jacobsthal_cycle_binomial(n) == jacobsthal_cycle(n)


def test_closed_form_at_rationals():
    # f_n(t) = ((1 + u)^n + (1 - u)^n) / 2^n with u = sqrt(1 + 4t); use t = 2, u = 3
    for n in range(4, 20):
        assert jacobsthal_cycle(n)(2) == Fraction(4 ** n + (-2) ** n, 2 ** n)


def test_recursion():
    t = Polynomial.t()
    for n in range(6, 20):
        assert jacobsthal_cycle(n) == jacobsthal_cycle(n - 1) + t * jacobsthal_cycle(n - 2)


def test_euler_characteristic_is_one_minus_f_at_minus_one():
    for n in range(4, 20):
        cx = cycle_complement_complex(n)
        assert 1 - f_polynomial(cx)(-1) == cx.euler_characteristic


def test_integration():
    p = Polynomial([1, 2, 3])
    assert p.integrate(-1, 0) == Fraction(1) - 1 + 1
    assert integrate_minus_one_zero([1, 2, 3]) == p.integrate(-1, 0)
    assert integrate_product([1, 1], [1, 1]) == Polynomial([1, 2, 1]).integrate(-1, 0)


def test_polynomial_json_roundtrip():
    p = Polynomial([Fraction(1, 3), 0, -2])
    assert Polynomial.from_json(p.to_json()) == p


def test_coefficients_are_binomial():
    n = 12
    coeffs = jacobsthal_cycle(n).coeffs
    for j, c in enumerate(coeffs):
        assert c == (Fraction(n, n - j) * comb(n - j, j) if j < n else 0)


def test_dihedral_f_function():
    for n in range(3, 13):
        assert dihedral_f_function(n) == f_polynomial(clique_complex(dihedral_complement(n)))
