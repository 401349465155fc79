import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schubspec.errors import (
    InexactDivisionError,
    NotCoprimeError,
    NotPerfectSquareError,
    NotRationalIntegerError,
)
from schubspec.rings import (
    CyclotomicInteger,
    IntPolynomial,
    catalan,
    cyclotomic_polynomial,
    eval_at_root,
    euler_phi,
    exact_sqrt,
    geometric_factor,
    squared_modulus,
    squared_modulus_element,
)

CATALAN_PREFIX = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]


def test_catalan_formula():
    for k, value in enumerate(CATALAN_PREFIX):
        assert catalan(k) == value
        assert catalan(k) == math.factorial(2 * k) // (
            math.factorial(k) * math.factorial(k + 1)
        )


def test_exact_sqrt():
    assert exact_sqrt(16) == 4
    assert exact_sqrt(0) == 0
    with pytest.raises(NotPerfectSquareError):
        exact_sqrt(2)
    with pytest.raises(NotPerfectSquareError):
        exact_sqrt(-4)


class TestIntPolynomial:
    def test_canonical_trim(self):
        assert IntPolynomial((1, 2, 0, 0)).coeffs == (1, 2)
        assert IntPolynomial((0, 0)).coeffs == ()
        assert IntPolynomial().degree == -1

    def test_arithmetic(self):
        p = IntPolynomial((1, 1))
        q = IntPolynomial((1, -1))
        assert (p * q).coeffs == (1, 0, -1)
        assert (p + q).coeffs == (2,)
        assert (p - p).is_zero()
        assert (2 * p).coeffs == (2, 2)

    def test_exact_division_simple(self):
        num = geometric_factor(2)  # 1 - q^2
        den = geometric_factor(1)
        assert num.exact_div(den).coeffs == (1, 1)

    def test_division_by_one(self):
        p = IntPolynomial((3, 0, 7))
        assert p.exact_div(IntPolynomial((1,))) == p

    def test_exact_division_composite(self):
        # (1-q^3)(1-q^2) / (1-q)^2 == (1+q+q^2)(1+q), expanded independently
        num = geometric_factor(3) * geometric_factor(2)
        den = geometric_factor(1) * geometric_factor(1)
        expected = IntPolynomial((1, 1, 1)) * IntPolynomial((1, 1))
        assert num.exact_div(den) == expected

    def test_inexact_division_raises(self):
        with pytest.raises(InexactDivisionError):
            IntPolynomial((1, 0, 1)).exact_div(IntPolynomial((1, 1)))

    def test_evaluate(self):
        p = IntPolynomial((1, 2, 3))
        assert p(1) == 6
        assert p(-1) == 2
        assert p(10) == 321

    def test_serialize(self):
        assert IntPolynomial((1, 0, -2)).serialize() == ["1", "0", "-2"]


class TestCyclotomicPolynomial:
    def test_small_orders(self):
        assert cyclotomic_polynomial(1).coeffs == (-1, 1)
        assert cyclotomic_polynomial(2).coeffs == (1, 1)
        assert cyclotomic_polynomial(3).coeffs == (1, 1, 1)
        assert cyclotomic_polynomial(4).coeffs == (1, 0, 1)

    def test_order_six_by_division_oracle(self):
        # divide q^6 - 1 by the product of the proper cyclotomic factors
        num = IntPolynomial.monomial(6) - IntPolynomial((1,))
        for d in (1, 2, 3):
            num = num.exact_div(cyclotomic_polynomial(d))
        assert num.coeffs == (1, -1, 1)
        assert cyclotomic_polynomial(6).coeffs == (1, -1, 1)

    def test_degree_is_euler_phi(self):
        phi = [None, 1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]
        for k in range(1, 13):
            assert euler_phi(k) == phi[k]

    def test_product_over_divisors(self):
        for k in (6, 8, 12):
            product = IntPolynomial((1,))
            for d in range(1, k + 1):
                if k % d == 0:
                    product = product * cyclotomic_polynomial(d)
            assert product == IntPolynomial.monomial(k) - IntPolynomial((1,))


class TestEvalAtRoot:
    def test_one_plus_q_at_minus_one(self):
        assert eval_at_root(IntPolynomial((1, 1)), 2, 1).is_zero()

    def test_q_to_the_k_is_one(self):
        for k in (1, 2, 3, 5, 6):
            z = eval_at_root(IntPolynomial.monomial(k), k, 1)
            assert z == CyclotomicInteger.from_int(k, 1)

    def test_vanishing_of_phi3(self):
        assert eval_at_root(IntPolynomial((1, 1, 1)), 3, 1).is_zero()

    def test_not_coprime(self):
        with pytest.raises(NotCoprimeError):
            eval_at_root(IntPolynomial((1,)), 4, 2)


class TestSquaredModulus:
    def test_zero(self):
        assert squared_modulus(CyclotomicInteger.from_int(5, 0)) == 0

    def test_embedded_integer(self):
        for k in (2, 3, 4):
            assert squared_modulus(CyclotomicInteger.from_int(k, -7)) == 49

    def test_root_of_unity_has_modulus_one(self):
        for k in (3, 4, 5, 6, 8):
            for e in range(k):
                assert squared_modulus(CyclotomicInteger.root_power(k, e)) == 1

    def test_irrational_square_raises(self):
        # 1 + zeta_5 has |z|^2 = 2 + golden ratio, not a rational integer
        z = CyclotomicInteger(5, (1, 1))
        with pytest.raises(NotRationalIntegerError):
            squared_modulus(z)
        product = squared_modulus_element(z)
        assert not product.is_rational()

    def test_matches_float_embedding(self):
        import random

        rng = random.Random(7)
        for _ in range(120):
            k = rng.choice([2, 3, 4, 6])
            z = CyclotomicInteger(k, [rng.randint(-5, 5) for _ in range(euler_phi(k))])
            exact = squared_modulus(z)
            numeric = abs(z.embed()) ** 2
            assert abs(exact - numeric) <= 1e-9 * max(1.0, abs(numeric))


# hypothesis strategies over a handful of cyclotomic orders
_orders = st.sampled_from([1, 2, 3, 4, 5, 6, 8, 12])
_coeff = st.integers(min_value=-30, max_value=30)


@st.composite
def _pairs(draw):
    k = draw(_orders)
    size = euler_phi(k)
    a = CyclotomicInteger(k, draw(st.lists(_coeff, min_size=size, max_size=size)))
    b = CyclotomicInteger(k, draw(st.lists(_coeff, min_size=size, max_size=size)))
    c = CyclotomicInteger(k, draw(st.lists(_coeff, min_size=size, max_size=size)))
    return a, b, c


@given(_pairs())
@settings(max_examples=120, deadline=None)
def test_ring_axioms(triple):
    a, b, c = triple
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == CyclotomicInteger.from_int(a.k, 0)


@given(_pairs())
@settings(max_examples=120, deadline=None)
def test_conjugation_is_a_ring_homomorphism(triple):
    a, b, _ = triple
    assert (a + b).conjugate() == a.conjugate() + b.conjugate()
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert a.conjugate().conjugate() == a


@given(_pairs())
@settings(max_examples=100, deadline=None)
def test_exact_division_inverts_multiplication(triple):
    a, b, _ = triple
    if not b.is_zero():
        assert (a * b) // b == a


@st.composite
def _poly_pair(draw):
    coeffs1 = draw(st.lists(st.integers(-9, 9), min_size=0, max_size=8))
    coeffs2 = draw(st.lists(st.integers(-9, 9), min_size=0, max_size=8))
    k = draw(_orders)
    j = draw(st.sampled_from([jj for jj in range(1, k + 1) if math.gcd(jj, k) == 1]))
    return IntPolynomial(coeffs1), IntPolynomial(coeffs2), k, j


@given(_poly_pair())
@settings(max_examples=120, deadline=None)
def test_eval_at_root_is_multiplicative(args):
    p, r, k, j = args
    assert eval_at_root(p * r, k, j) == eval_at_root(p, k, j) * eval_at_root(r, k, j)


@given(_poly_pair())
@settings(max_examples=60, deadline=None)
def test_eval_at_root_matches_numeric(args):
    p, _, k, j = args
    z = eval_at_root(p, k, j)
    zeta = cmath.exp(2j * cmath.pi * j / k)
    direct = sum(c * zeta**e for e, c in enumerate(p.coeffs))
    assert abs(z.embed() - direct) <= 1e-7 * max(1.0, abs(direct))
