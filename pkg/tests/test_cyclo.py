from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import embed
from qsheets.cyclo import (
    ConductorError,
    CycNumber,
    RootExtractionError,
    conductor_cap,
    cyclotomic_polynomial,
    mobius,
    nth_roots,
    parse,
    principal_root,
    q_binomial,
    q_int,
    root_of_unity,
    totient,
    zeta,
)

CONDUCTORS = [1, 3, 4, 5, 7, 8, 9, 12, 15, 20]


@st.composite
def cyc(draw, conductors=CONDUCTORS):
    k = draw(st.sampled_from(conductors))
    n = totient(k)
    coeffs = draw(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4),
                           min_size=n, max_size=n))
    return CycNumber(k, coeffs)


def close(a: complex, b: complex) -> bool:
    return abs(a - b) < 1e-8 * (1 + abs(a) + abs(b))


def test_minimal_polynomial_of_cube_root():
    z = zeta(3)
    assert z ** 2 + z + 1 == 0


def test_fifth_root_times_its_fourth_power():
    assert zeta(5) * zeta(5) ** 4 == 1


def test_inverse_of_one_plus_zeta3():
    x = 1 + zeta(3)
    assert x.inverse() * x == 1
    assert (1 / x) * x == 1


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        zeta(5) / CycNumber(5)
    with pytest.raises(ZeroDivisionError):
        CycNumber(7).inverse()


def test_conductor_cap_is_enforced():
    with conductor_cap(10):
        with pytest.raises(ConductorError):
            zeta(7) * zeta(3)
    # restored afterwards
    assert (zeta(7) * zeta(3)).conductor == 21


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 18, 30, 42])
def test_zeta_has_exact_order(k):
    z = zeta(k)
    assert z ** k == 1
    assert all(z ** j != 1 for j in range(1, k))
    assert z.order() == k


def test_arithmetic_helpers():
    assert totient(12) == 4
    assert mobius(30) == -1 and mobius(12) == 0
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(5) == (1, 1, 1, 1, 1)


def test_conductor_twice_odd_is_folded():
    # zeta_6 = -zeta_3^2 lives in Q(zeta_3)
    assert zeta(6).conductor == 3
    assert zeta(6) == -zeta(3) ** 2


def test_equality_is_canonical_across_conductors():
    a = zeta(4) ** 2
    assert a == -1
    assert a.simplify().conductor == 1
    assert hash(zeta(12) ** 4) == hash(zeta(3))


@pytest.mark.parametrize("ell", [3, 5, 7])
def test_q_int_one_and_ell(ell):
    eps = zeta(ell)
    assert q_int(1, eps) == 1
    assert q_int(ell, eps) == 0


def test_q_int_two_at_ell_three_is_minus_one():
    # [2] = eps + eps^-1 = zeta_3 + zeta_3^2 = -1
    assert q_int(2, zeta(3)) == -1


def test_q_binomial_pascal_rule():
    eps = zeta(7)
    for n in range(1, 7):
        for k in range(1, n):
            lhs = q_binomial(n, k, eps)
            rhs = eps ** k * q_binomial(n - 1, k, eps) + eps ** (k - n) * q_binomial(n - 1, k - 1, eps)
            assert lhs == rhs


def test_q_int_rejects_wrong_order():
    with pytest.raises(ValueError):
        q_int(2, zeta(5), ell=3)
    with pytest.raises(ValueError):
        q_int(2, zeta(4))
    with pytest.raises(ValueError):
        q_int(2, CycNumber.rational(2))


def test_text_round_trip_and_format():
    x = 1 + Fraction(-2, 3) * zeta(7) + zeta(7) ** 3
    assert str(x) == "1 + -2/3*z + 1*z^3 @ conductor 7"
    assert parse(str(x)) == x
    assert parse("5/2") == Fraction(5, 2)
    assert parse("0 @ conductor 9") == 0


def test_principal_root_convention():
    assert principal_root(parse("4"), 2) == 2
    # sqrt(-1): the root of least argument is i
    assert principal_root(CycNumber.rational(-1), 2) == zeta(4)
    roots = nth_roots(CycNumber.rational(8), 3)
    assert len(roots) == 3 and all(r ** 3 == 8 for r in roots)
    assert roots[0] == 2


def test_root_extraction_failure():
    with pytest.raises(RootExtractionError):
        principal_root(CycNumber.rational(2), 3)


@given(cyc(), cyc(), cyc())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == 0
    if a:
        assert a * a.inverse() == 1


@given(cyc(), cyc())
def test_arithmetic_matches_complex_embedding(a, b):
    assert close(embed(a + b), embed(a) + embed(b))
    assert close(embed(a * b), embed(a) * embed(b))
    if b:
        assert close(embed(a / b), embed(a) / embed(b))


@given(cyc(conductors=[3, 5, 4]), cyc(conductors=[3, 5, 4]), st.sampled_from([2, 3, 4]))
def test_lifting_commutes_with_arithmetic(a, b, t):
    m = a.conductor * b.conductor * t
    assert a.lift(m) * b.lift(m) == (a * b).lift(m)
    assert a.lift(m) + b.lift(m) == (a + b).lift(m)
    assert (a * b).lift(m).simplify() == (a * b).simplify()


@given(cyc())
def test_parse_inverts_str(a):
    assert parse(str(a)) == a


@given(cyc(conductors=[5, 7, 9]), st.integers(min_value=1, max_value=8))
def test_galois_is_a_field_automorphism(a, t):
    k = a.conductor
    if t % k == 0 or any(t % p == 0 for p in (3, 5, 7) if k % p == 0):
        return
    b = a * root_of_unity(k, 1) + 1
    assert (a * b).galois(t) == a.galois(t) * b.galois(t)


def test_cyc_values_are_immutable():
    with pytest.raises(AttributeError):
        zeta(3).k = 5
