import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from qsheets import linalg
from qsheets.cyclo import CycNumber, zeta
from qsheets.reps import sl2_baby_verma
from qsheets.uqe import (
    CentralCharacter,
    GroupPoint,
    build_algebra,
    char_from_point,
    chevalley_f,
    levi_factorization_holds,
    pi_map,
    random_lower_point,
    restrict_char,
    z0_check,
)


def random_element(p, rng, terms=2, degree=2):
    """Sum of a few PBW monomials of bounded total degree."""
    out = p.monomial(coeff=CycNumber.rational(0))
    for _ in range(terms):
        a, b = [0] * p.N, [0] * p.N
        for _ in range(rng.randint(0, degree)):
            (a if rng.random() < 0.5 else b)[rng.randrange(p.N)] += 1
        c = tuple(rng.randint(-1, 1) for _ in range(p.rank))
        coeff = CycNumber.rational(rng.randint(-3, 3)) + zeta(3) * rng.randint(-2, 2)
        out = out + p.monomial(tuple(a), c, tuple(b), coeff)
    return out


def test_rank_one_commutator():
    p = build_algebra(1, 3)
    assert p.normal_form([("E", 0), ("F", 0)]) == p.normal_form([("F", 0), ("E", 0)]) + p.cartan_term(0)


@pytest.mark.parametrize("rank,ell", [(1, 3), (1, 5), (2, 3), (2, 5), (3, 3)])
def test_defining_relations_vanish(rank, ell):
    p = build_algebra(rank, ell)
    bad = [name for name, r in p.defining_relations() if r]
    assert bad == []


def test_quantum_serre_rank_two():
    p = build_algebra(2, 3)
    eps = p.eps
    rel = (p.normal_form([("E", 0), ("E", 0), ("E", 1)])
           - p.normal_form([("E", 0), ("E", 1), ("E", 0)]) * (eps + eps.inverse())
           + p.normal_form([("E", 1), ("E", 0), ("E", 0)]))
    assert rel.is_zero()


def test_out_of_order_f_product_mixes_root_vectors():
    p = build_algebra(2, 3)
    # convex order (a1, a1+a2, a2): F_a2 F_a1 is already normal, F_a1 F_a2 is not
    assert p.normal_form([("F", 1), ("F", 0)]).terms.keys() == {((1, 0, 1), (0, 0), (0, 0, 0))}
    x = p.normal_form([("F", 0), ("F", 1)])
    assert set(a for a, _, _ in x.terms) == {(1, 0, 1), (0, 1, 0)}
    assert all(x.terms.values())


def test_cartan_reordering():
    p = build_algebra(2, 5)
    for j in range(2):
        for i in range(2):
            lhs = p.normal_form([("K", j), ("E", i)])
            rhs = p.normal_form([("E", i), ("K", j)]) * p.epow(1 if i == j else 0)
            assert lhs == rhs


def test_root_vectors():
    p = build_algebra(2, 3)
    e = [p.E_root(r) for r in range(3)]
    assert e[0] == p.E(0) and e[2] == p.E(1)
    # E_{a1+a2} = E1 E2 - eps^-1 E2 E1 for the implemented braid operators
    combo = p.normal_form([("E", 0), ("E", 1)]) - p.normal_form([("E", 1), ("E", 0)]) * p.eps.inverse()
    assert e[1] == combo
    assert e[1].omega() == p.F_root(1)


@pytest.mark.parametrize("rank,ell,count", [(1, 3, 1000), (1, 5, 300), (2, 3, 1000), (3, 3, 1000)])
def test_associativity_on_random_triples(rank, ell, count):
    p = build_algebra(rank, ell)
    rng = random.Random(1000 * rank + ell)
    terms = 2 if rank < 3 else 1
    for _ in range(count):
        x, y, z = (random_element(p, rng, terms=terms) for _ in range(3))
        assert (x * y) * z == x * (y * z)


@given(st.randoms(use_true_random=False))
def test_normal_form_is_idempotent_and_linear(rnd):
    p = build_algebra(2, 3)
    x, y = random_element(p, rnd), random_element(p, rnd)
    one = p.one()
    assert one * x == x and x * one == x
    word = [(rnd.choice("EF"), rnd.randrange(2)) for _ in range(rnd.randint(1, 4))]
    w = p.normal_form(word)
    assert w * one == w
    assert (x + y) * w == x * w + y * w
    two = CycNumber.rational(2)
    assert (x * two) * w == (x * w) * two


def test_e_f_squared_against_matrix_model():
    p = build_algebra(1, 3)
    x = p.normal_form([("E", 0), ("F", 0), ("F", 0)])
    m = sl2_baby_verma(3, zeta(3), 1)
    expected = linalg.matmul(linalg.matmul(m.E[0], m.F[0]), m.F[0])
    assert linalg.mat_equal(m.evaluate(x), expected)
    # [E, F^2] = [2] F (eps^-1 K_a - eps K_a^-1) / (eps - eps^-1)
    assert len(x.terms) == 3


@pytest.mark.parametrize("rank", [1, 2, 3])
def test_frobenius_center_is_central(rank):
    p = build_algebra(rank, 3)
    report = z0_check(p)
    assert len(report) == 2 * p.N + 2 * p.rank
    assert all(r["status"] == "PASS" for r in report)


def test_specific_central_elements():
    p = build_algebra(1, 3)
    e3 = p.monomial(b=(3,))
    assert p.right_mul(e3, ("F", 0)) == p.left_mul(("F", 0), e3)
    q = build_algebra(2, 3)
    f3 = q.monomial(a=(0, 3, 0))
    assert q.right_mul(f3, ("E", 0)) == q.left_mul(("E", 0), f3)


def test_lower_powers_are_not_central():
    p = build_algebra(2, 3)
    for r in range(p.N):
        e2 = p.monomial(b=tuple(2 if s == r else 0 for s in range(p.N)))
        assert any(p.right_mul(e2, ("F", i)) != p.left_mul(("F", i), e2) for i in range(2))


def test_build_algebra_validation():
    with pytest.raises(ValueError):
        build_algebra(1, 4)
    with pytest.raises(ValueError):
        build_algebra(4, 3)


def test_pi_of_trivial_character_is_identity():
    for rank in (1, 2, 3):
        p = build_algebra(rank, 3)
        g = pi_map(p, CentralCharacter.trivial(p))
        assert linalg.mat_equal(g.matrix, linalg.identity(rank + 1))


def test_pi_rank_one_closed_form():
    p = build_algebra(1, 3)
    c, k = CycNumber.rational(5), CycNumber.rational(2)
    g = pi_map(p, CentralCharacter.for_presentation(p, f_values=[c], k_values=[k])).matrix
    cp = c * (p.eps - p.eps.inverse()) ** 3
    f = chevalley_f(p)[0]
    assert f[1, 0] == 1
    expected = linalg.as_matrix([[k ** 2, 0], [cp * k ** 2, k ** -2]])
    assert linalg.mat_equal(g, expected)


def test_char_from_point_examples():
    p = build_algebra(1, 3)
    chi = char_from_point(p, linalg.identity(2))
    assert chi == CentralCharacter.trivial(p)
    c = CycNumber.rational(7)
    chi = char_from_point(p, linalg.as_matrix([[1, 0], [c, 1]]))
    assert chi.f_values[0] == c / (p.eps - p.eps.inverse()) ** 3
    assert chi.k_values == (1,)


def test_char_from_point_sl3_exponential_product():
    p = build_algebra(2, 3)
    fs = chevalley_f(p)
    n = 3
    # u = (1 + f_{b3}) (1 + f_{b1}) is exp(f_a2) exp(f_a1)
    u = linalg.matmul(linalg.add(linalg.identity(n), fs[2]), linalg.add(linalg.identity(n), fs[0]))
    chi = char_from_point(p, u)
    scale = (p.eps - p.eps.inverse()) ** 3
    assert [x * scale for x in chi.f_values] == [1, 0, 1]
    assert linalg.mat_equal(pi_map(p, chi).matrix, u)


@pytest.mark.parametrize("rank", [1, 2])
def test_round_trip_on_random_lower_points(rank):
    p = build_algebra(rank, 3)
    rng = random.Random(rank)
    for _ in range(25):
        g = random_lower_point(p, rng)
        chi = char_from_point(p, g)
        assert chi.plus_zero
        assert linalg.mat_equal(pi_map(p, chi).matrix, g.matrix)


@given(st.lists(st.integers(-3, 3), min_size=6, max_size=6), st.integers(0, 2))
def test_plus_part_vanishes_iff_lower_borel(vals, j):
    p = build_algebra(2, 3)
    f, e = vals[:3], vals[3:]
    chi = CentralCharacter.for_presentation(p, f_values=f, e_values=e, k_values=[zeta(3) ** j, 2])
    m = pi_map(p, chi).matrix
    lower = all(not m[i, k] for i in range(3) for k in range(i + 1, 3))
    assert chi.plus_zero == lower


def test_restriction_to_g_and_t():
    p = build_algebra(2, 3)
    chi = CentralCharacter.for_presentation(p, f_values=[1, 2, 3], k_values=[2, 5])
    assert restrict_char(p, chi, {0, 1}) == chi
    t = restrict_char(p, chi, ())
    assert t.f_values == () and t.k_values == chi.k_values


def test_levi_factorization_in_sl3():
    p = build_algebra(2, 3, levi_simple=[0])
    for f in ([1, 2, 3], [0, 1, 0], [4, 0, -1]):
        chi = CentralCharacter.for_presentation(p, f_values=f, k_values=[3, 1])
        assert levi_factorization_holds(p, chi, {0})


def test_restriction_needs_levi_prefix():
    p = build_algebra(2, 3)
    chi = CentralCharacter.trivial(p)
    with pytest.raises(ValueError):
        restrict_char(p, chi, {1})


def test_group_point_validation():
    with pytest.raises(ValueError):
        GroupPoint(linalg.identity(2), (CycNumber.rational(2), CycNumber.rational(1)), linalg.identity(2))
    with pytest.raises(ValueError):
        GroupPoint(linalg.as_matrix([[1, 1], [0, 1]]), (CycNumber.rational(1),) * 2, linalg.identity(2))


def test_central_character_rejects_zero_k():
    p = build_algebra(1, 3)
    with pytest.raises(ValueError):
        CentralCharacter.for_presentation(p, k_values=[0])


def test_dtype_is_object():
    p = build_algebra(1, 3)
    assert pi_map(p, CentralCharacter.trivial(p)).matrix.dtype == np.dtype(object)
