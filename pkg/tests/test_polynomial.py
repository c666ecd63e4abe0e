import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from incpoly.polynomial import (
    NEG_INF,
    ONE,
    ZERO,
    NotDivisible,
    Polynomial,
    PolynomialSyntaxError,
    binomial,
    derivative,
    divide_exact,
    eval_int,
    format_poly,
    from_json,
    parse,
    to_json,
)

P = Polynomial
coeff = st.integers(min_value=-(2**70), max_value=2**70)
polys = st.lists(coeff, max_size=8).map(P)
small_polys = st.lists(st.integers(-50, 50), max_size=6).map(P)


def test_canonical_zero():
    assert P([0, 0, 0]).coeffs == ()
    assert P().degree == NEG_INF
    assert NEG_INF < -10**9
    assert P([1, 2, 0]).coeffs == (1, 2)
    assert P([5]).degree == 0


def test_rejects_non_integer_coefficients():
    with pytest.raises(TypeError):
        P([1.5])


def test_add_examples():
    x = parse("x")
    assert x + (-x) == ZERO
    assert P([1, 0, 1]) + P([0, 2]) == P([1, 2, 1])
    h = x
    assert (h**2) + (h**2 + 1) == P([1, 0, 2])


def test_mul_examples():
    p = P([3, -1, 4])
    assert p * ZERO == ZERO
    assert p * ONE == p
    # (x^2+4)(2x^2+1), schoolbook: 2x^4 + x^2 + 8x^2 + 4
    assert P([4, 0, 1]) * P([1, 0, 2]) == P([4, 0, 9, 0, 2])


def test_pow_examples():
    x = parse("x")
    assert x**3 == P([0, 0, 0, 1])
    assert ZERO**0 == ONE
    assert P([1, 0, 1]) ** 2 == P([1, 0, 2, 0, 1])
    with pytest.raises(ValueError):
        x ** -1


def test_derivative_examples():
    assert derivative(P([7])) == ZERO
    assert derivative(P([0, 0, 3, 0, 1])) == P([0, 6, 0, 4])
    assert derivative(parse("x")) == ONE


def test_divide_exact_examples():
    assert divide_exact(P([4, 0, 9, 0, 2]), P([4, 0, 1])) == P([1, 0, 2])
    p = P([3, 1, 4, 1, 5])
    assert divide_exact(p, ONE) == p
    with pytest.raises(NotDivisible):
        divide_exact(P([1, 0, 1]), parse("x"))
    with pytest.raises(NotDivisible):
        divide_exact(P([1, 0, 1]), P([0, 0, 2]))  # content fails
    with pytest.raises(ZeroDivisionError):
        divide_exact(p, ZERO)
    assert divide_exact(ZERO, p) == ZERO


def test_eval_examples():
    assert eval_int(P([0, 0, 6, 0, 5, 0, 1]), 1) == 12
    assert eval_int(ZERO, 17) == 0
    assert eval_int(P([2, 0, 1]), 2) == 6


def test_binomial_examples():
    assert binomial(4, 2) == 6
    assert binomial(5, -1) == 0
    assert binomial(0, 0) == 1
    assert binomial(3, 4) == 0
    assert binomial(-1, 0) == 0


@given(st.integers(1, 60), st.integers(-3, 63))
def test_binomial_pascal(n, k):
    assert binomial(n, k) == binomial(n - 1, k) + binomial(n - 1, k - 1)


@pytest.mark.parametrize(
    "text, coeffs",
    [
        ("3*x^2+1", [1, 0, 3]),
        ("x^2 - x^2", []),
        ("2", [2]),
        ("-x^3 + x", [0, 1, 0, -1]),
        ("  x ^ 2 + -3 * x  ", [0, -3, 1]),
        ("-7", [-7]),
        ("x + x + 1", [1, 2]),
        ("5*x", [0, 5]),
    ],
)
def test_parse(text, coeffs):
    assert parse(text) == P(coeffs)


@pytest.mark.parametrize("text, pos", [("x^^2", 2), ("3*", 2), ("2 + ", 4), ("y", 0), ("x 2", 2), ("", 0)])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(PolynomialSyntaxError) as err:
        parse(text)
    assert err.value.pos == pos


def test_format():
    assert format_poly(ZERO) == "0"
    assert format_poly(P([1, 0, 3])) == "3*x^2 + 1"
    assert format_poly(P([-1, 1, -1])) == "-x^2 + x - 1"
    assert format_poly(P([0, 2])) == "2*x"
    assert format_poly(P([0, 4, 0, 1]), var="h", times="") == "h^3 + 4h"


@settings(max_examples=200)
@given(polys)
def test_parse_format_round_trip(p):
    assert parse(format_poly(p)) == p


@given(polys)
def test_json_round_trip(p):
    doc = to_json(p)
    assert all(isinstance(c, str) for c in doc["coeffs"])
    assert from_json(doc) == p


@given(small_polys, small_polys, small_polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert P(a.coeffs) == a


@given(polys, polys)
def test_degree_of_product(a, b):
    if a and b:
        assert (a * b).degree == a.degree + b.degree


@given(small_polys, small_polys)
def test_product_rule(a, b):
    assert derivative(a * b) == derivative(a) * b + a * derivative(b)


@given(polys, small_polys)
def test_divide_exact_inverts_mul(a, b):
    if b:
        assert divide_exact(a * b, b) == a


@given(polys, polys, st.integers(-1000, 1000))
def test_eval_is_homomorphism(a, b, v):
    assert eval_int(a * b, v) == eval_int(a, v) * eval_int(b, v)
    assert eval_int(a + b, v) == eval_int(a, v) + eval_int(b, v)


def test_immutable_and_hashable():
    p = P([1, 2])
    with pytest.raises(AttributeError):
        p.coeffs = (3,)
    assert len({P([1, 2]), P([1, 2, 0]), P([2])}) == 2
    assert P([3]) == 3
