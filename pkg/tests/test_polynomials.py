import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from narayana.polynomials import (
    IntPolynomial,
    is_log_concave,
    is_real_rooted,
    is_unimodal,
    newton_inequalities_hold,
    poly_gcd,
    square_free_part,
    sturm_real_root_count,
)


def P(*coeffs):
    return IntPolynomial(coeffs)


def test_normalization_strips_trailing_zeros():
    assert P(1, 2, 0, 0).coefficients == (1, 2)
    assert P(0, 0).coefficients == ()
    assert P(1, 2) == IntPolynomial([1, 2, 0])


def test_zero_polynomial():
    zero = IntPolynomial()
    assert zero.is_zero
    assert zero.degree == -1
    assert zero.leading_coefficient == 0
    assert not zero
    assert zero == 0


def test_rejects_non_integer_coefficients():
    with pytest.raises(TypeError):
        IntPolynomial([1.5])
    with pytest.raises(TypeError):
        IntPolynomial([Fraction(1, 2)])


def test_arithmetic_examples():
    one_plus_t = P(1, 1)
    assert one_plus_t * one_plus_t == P(1, 2, 1)
    assert P(1, 3, 1).derivative() == P(3, 2)
    assert P(1, 3, 1)(1) == 5
    assert P(1, 3, 1) + P(0, -3) == P(1, 0, 1)
    assert P(1, 1) - P(1, 1) == IntPolynomial()
    assert 2 * P(1, 1) == P(2, 2)
    assert P(1, 1) * 0 == 0


def test_shift_and_monomial():
    assert P(1, 3, 1).shift(2) == P(0, 0, 1, 3, 1)
    assert IntPolynomial().shift(3).is_zero
    assert IntPolynomial.monomial(3, 5) == P(0, 0, 0, 5)
    with pytest.raises(ValueError):
        P(1).shift(-1)


def test_evaluate_at_rational():
    assert P(1, 3, 1)(Fraction(1, 2)) == Fraction(11, 4)
    assert P(1, 3, 1)(-1) == -1
    with pytest.raises(TypeError):
        P(1, 1)(0.5)


def test_coefficient_access():
    p = P(1, 3, 1)
    assert [p.coefficient(k) for k in range(5)] == [1, 3, 1, 0, 0]
    assert p.coefficient(-1) == 0


def test_content_and_primitive():
    assert P(2, 4, 6).content() == 2
    assert P(2, 4, 6).primitive() == P(1, 2, 3)
    assert P(-2, -4).primitive() == P(1, 2)
    assert IntPolynomial().primitive().is_zero


def test_poly_gcd():
    one_plus_t = P(1, 1)
    assert poly_gcd(one_plus_t * one_plus_t, one_plus_t * P(1, 2)) == one_plus_t
    assert poly_gcd(P(2, 2), P(4)) == P(2)
    assert poly_gcd(P(0), P(0)).is_zero
    assert poly_gcd(P(0), P(-3, -3)) == P(3, 3)
    assert poly_gcd(P(-1, -1), P(1, 1)) == P(1, 1)


def test_square_free_part_examples():
    assert square_free_part(P(1, 2, 1)) == P(1, 1)
    assert square_free_part(P(0, 0, 1, 1)) == P(0, 1, 1)
    assert square_free_part(P(1, 3, 1)) == P(1, 3, 1)
    assert square_free_part(P(-2, -2)) == P(1, 1)
    assert square_free_part(P(7)) == P(1)
    with pytest.raises(ValueError):
        square_free_part(IntPolynomial())


def test_sturm_examples():
    assert sturm_real_root_count(P(-2, 0, 1)) == 2
    assert sturm_real_root_count(P(1, 3, 1), None, 0) == 2
    assert sturm_real_root_count(P(1, 1, 1)) == 0
    assert sturm_real_root_count(P(1, 1)) == 1
    assert sturm_real_root_count(P(5)) == 0


def test_sturm_half_open_convention():
    t = P(0, 1)
    assert sturm_real_root_count(t, -1, 0) == 1
    assert sturm_real_root_count(t, 0, 1) == 0
    assert sturm_real_root_count(P(-1, 0, 1), Fraction(-3, 2), 1) == 2


def test_sturm_rejects_bad_input():
    with pytest.raises(ValueError):
        sturm_real_root_count(P(1, 2, 1))
    with pytest.raises(ValueError):
        sturm_real_root_count(IntPolynomial())
    with pytest.raises(ValueError):
        sturm_real_root_count(P(1, 1), 2, 1)
    with pytest.raises(TypeError):
        sturm_real_root_count(P(1, 1), 0.0, None)


def test_real_rooted_examples():
    assert is_real_rooted(P(1, 3, 1))
    assert not is_real_rooted(P(1, 1, 1))
    assert is_real_rooted(P(5))
    assert is_real_rooted(P(0, 1))
    with pytest.raises(ValueError):
        is_real_rooted(IntPolynomial())


def test_real_rooted_ignores_multiplicity():
    cube = P(1, 1) * P(1, 1) * P(1, 1)
    certificate = is_real_rooted(cube)
    assert certificate.real_rooted
    assert certificate.square_free_degree == 1
    assert certificate.distinct_real_roots == 1
    assert is_real_rooted(P(0, 0, 1, 1))
    mixed = P(1, 1, 1) * P(1, 1, 1)
    assert not is_real_rooted(mixed)


def test_real_rooted_certificate_fields():
    certificate = is_real_rooted(P(1, 3, 1))
    assert certificate.variations_at_negative_infinity == 2
    assert certificate.variations_at_positive_infinity == 0
    assert bool(certificate) is True


def _quadratic_real_rooted(a, b, c):
    return b * b - 4 * a * c >= 0


def _cubic_real_rooted(a, b, c, d):
    disc = (
        18 * a * b * c * d
        - 4 * b**3 * d
        + b**2 * c**2
        - 4 * a * c**3
        - 27 * a**2 * d**2
    )
    return disc >= 0


def test_real_rooted_matches_discriminant_on_small_box():
    span = range(-4, 5)
    for a in span:
        if a == 0:
            continue
        for b in span:
            for c in span:
                expected = _quadratic_real_rooted(a, b, c)
                assert bool(is_real_rooted(P(c, b, a))) == expected, (a, b, c)


def test_log_concave_and_unimodal_examples():
    assert is_log_concave(P(1, 3, 1))
    assert is_unimodal(P(1, 3, 1))
    assert not is_log_concave(P(1, 1, 2, 1))
    assert is_unimodal(P(1, 1, 2, 1))
    assert is_log_concave(P(7))
    assert is_unimodal(P(7))
    assert not is_log_concave(P(1, 0, 1))
    assert not is_unimodal(P(1, 0, 1))
    assert is_unimodal(P(1, 2, 2, 1))
    assert is_unimodal(P(3, 2, 1))


def test_negative_coefficients_warn():
    with pytest.warns(UserWarning):
        is_log_concave(P(-1, 2))
    with pytest.warns(UserWarning):
        is_unimodal(P(1, -2, 1))
    with pytest.warns(UserWarning):
        newton_inequalities_hold(P(1, -2, 1))


def test_newton_examples():
    assert newton_inequalities_hold(P(1, 3, 1))
    assert newton_inequalities_hold(P(1, 1))
    assert newton_inequalities_hold(P(5))
    # log-concave witness that misses the strengthened bound
    witness = P(1, 2, 2, 1)
    assert is_log_concave(witness)
    assert not newton_inequalities_hold(witness)
    assert not is_real_rooted(witness)


@st.composite
def polynomials(draw, max_degree=5, bound=20):
    coeffs = draw(
        st.lists(
            st.integers(min_value=-bound, max_value=bound),
            min_size=1,
            max_size=max_degree + 1,
        )
    )
    return IntPolynomial(coeffs)


@given(polynomials(), polynomials(), st.fractions())
def test_evaluation_is_a_ring_homomorphism(p, q, x):
    assert (p + q)(x) == p(x) + q(x)
    assert (p * q)(x) == p(x) * q(x)


@given(polynomials())
def test_derivative_of_product(p):
    q = IntPolynomial([2, 0, 1])
    left = (p * q).derivative()
    right = p.derivative() * q + p * q.derivative()
    assert left == right


@given(st.lists(st.tuples(st.integers(1, 4), st.integers(0, 6)), min_size=1, max_size=5))
def test_real_rooted_products_pass_the_whole_chain(factors):
    poly = IntPolynomial.one()
    for slope, root in factors:
        poly = poly * IntPolynomial([root, slope])
    certificate = is_real_rooted(poly)
    assert certificate.real_rooted
    assert newton_inequalities_hold(poly)
    assert is_log_concave(poly)
    assert is_unimodal(poly)


@settings(max_examples=60)
@given(polynomials(max_degree=6, bound=15), st.integers(-8, 8), st.integers(-8, 8))
def test_sturm_count_is_additive_over_splits(p, a, b):
    if p.is_zero or p.degree < 1:
        return
    q = square_free_part(p)
    if q.degree < 1:
        return
    lo, hi = min(a, b), max(a, b)
    total = sturm_real_root_count(q)
    split = (
        sturm_real_root_count(q, None, lo)
        + sturm_real_root_count(q, lo, hi)
        + sturm_real_root_count(q, hi, None)
    )
    assert total == split


def test_sturm_additivity_deterministic_sample():
    rng = random.Random(402)
    for _ in range(200):
        degree = rng.randint(1, 6)
        coeffs = [rng.randint(-30, 30) for _ in range(degree)] + [rng.randint(1, 30)]
        q = square_free_part(IntPolynomial(coeffs))
        if q.degree < 1:
            continue
        cuts = sorted(rng.sample(range(-50, 51), 3))
        pieces = [
            sturm_real_root_count(q, None, cuts[0]),
            sturm_real_root_count(q, cuts[0], cuts[1]),
            sturm_real_root_count(q, cuts[1], cuts[2]),
            sturm_real_root_count(q, cuts[2], None),
        ]
        assert sum(pieces) == sturm_real_root_count(q)
