from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qsheets import linalg
from qsheets.classes import central_class, class_dim, is_regular, unipotent_class
from qsheets.cyclo import CycNumber, nth_roots, zeta
from qsheets.reps import (
    MatrixModule,
    ModuleError,
    are_isomorphic,
    cartan_twist,
    class_of_character,
    conjecture_gio_probe,
    dckp_check,
    degree_slices,
    derived_character,
    direct_sum,
    graded_top,
    intertwiners,
    is_absolutely_irreducible,
    jordan_bijection,
    levi_baby_verma,
    one_dim_module,
    parabolic_induce,
    sl2_baby_verma,
    spanning_rank,
    tensor_one_dim,
    torus_module,
    trivial_module,
    verify_module,
)
from qsheets.uqe import CentralCharacter, build_algebra


def sl3_levi_module(f_values=(1, 2, 3), mu=(2, 1), a=1):
    p = build_algebra(2, 3, levi_simple=[0])
    w = levi_baby_verma(p, 0, list(mu), a)
    chi = CentralCharacter.for_presentation(p, f_values=list(f_values), k_values=w.character().k_values)
    return p, w, chi


def test_trivial_module_passes_with_trivial_character():
    p = build_algebra(2, 3)
    rep = verify_module(trivial_module(p))
    assert rep["passed"] and rep["dim"] == 1
    assert rep["character"] == CentralCharacter.trivial(p)


@pytest.mark.parametrize("lam,a", [(1, 0), (zeta(3), 1), (4, 1), (-1, 3)])
def test_sl2_baby_verma_satisfies_relations(lam, a):
    m = sl2_baby_verma(3, lam, a)
    assert m.dim == 3
    assert verify_module(m)["passed"]


def test_corrupted_module_fails_with_named_relation():
    m = sl2_baby_verma(3, zeta(3), 1)
    E = m.E[0].copy()
    E[0, 1] = E[0, 1] + 1
    bad = MatrixModule(m.p, {0: E}, dict(m.F), m.K, m.Kinv)
    rep = verify_module(bad)
    assert not rep["passed"]
    assert any("E1" in name for name in rep["failures"])


def test_baby_verma_at_lambda_one():
    m = sl2_baby_verma(3, 1, 0)
    chi = derived_character(m)
    assert chi.f_values == (0,) and chi.e_values == (0,)
    assert m.E[0][0, 1] == 0  # E m_1 = [1](lam - lam^-1)/(eps - eps^-1) m_0 = 0
    cls = class_of_character(m.p, chi)
    assert cls.semisimple.tags == (1,)


def test_baby_verma_at_lambda_eps():
    m = sl2_baby_verma(3, zeta(3), 1)
    assert derived_character(m).f_values == (1,)
    assert m.dim == 3 and is_absolutely_irreducible(m)


def test_one_dim_module_at_identity_is_trivial():
    p = build_algebra(2, 3, levi_simple=[0])
    v = one_dim_module(p, {0}, [1, 1, 1])
    assert all(k[0, 0] == 1 for k in v.K)
    assert verify_module(v)["passed"]


def test_cartan_twist_sl3():
    p = build_algebra(2, 3, levi_simple=[0])
    z = zeta(3)
    entries = [z, z, z ** -2]
    sigma = cartan_twist(p, {0}, entries)
    # K_{alpha_1} = K_{omega_1}^2 K_{omega_2}^-1 acts by sigma(alpha_1) = 1
    s_alpha = CycNumber.rational(1)
    for j, e in enumerate(p.alpha_k[0]):
        s_alpha = s_alpha * sigma[j] ** e
    assert s_alpha == 1
    assert sigma[0] ** 6 == entries[0]
    assert sigma[1] ** 6 == entries[0] * entries[1]


def test_cartan_twist_rejects_non_central_points():
    p = build_algebra(2, 3, levi_simple=[0])
    with pytest.raises(ValueError):
        cartan_twist(p, {0}, [2, 1, Fraction(1, 2)])
    with pytest.raises(ValueError):
        cartan_twist(p, {0}, [2, 2, 2])


def test_induction_from_torus_matches_baby_verma():
    p = build_algebra(1, 3)
    w = torus_module(p, [zeta(3)])
    chi = CentralCharacter.for_presentation(p, f_values=[1], k_values=[1])
    v = parabolic_induce(w, [], chi)
    assert v.dim == 3 and verify_module(v)["passed"]
    bv = levi_baby_verma(p, 0, [zeta(3)], 1)
    assert derived_character(bv) == derived_character(v) == chi
    assert is_absolutely_irreducible(v) and is_absolutely_irreducible(bv)
    assert are_isomorphic(v, bv)


def test_sl3_induction_from_rank_one_levi():
    p, w, chi = sl3_levi_module()
    v = parabolic_induce(w, {0}, chi)
    idx = v.provenance["index"]
    assert idx.size == idx.expected_size == 27 == v.dim
    rep = verify_module(v)
    assert rep["passed"] and rep["character"] == chi
    assert sorted(degree_slices(v)) == [0, 1, 2, 3, 4]


def test_induction_rejects_wrong_character():
    p, w, chi = sl3_levi_module()
    other = CentralCharacter.for_presentation(p, f_values=[5, 2, 3], k_values=chi.k_values)
    with pytest.raises(ModuleError):
        parabolic_induce(w, {0}, other)
    plus = CentralCharacter.for_presentation(p, f_values=[1, 2, 3], e_values=[0, 1, 0], k_values=chi.k_values)
    with pytest.raises(ModuleError):
        parabolic_induce(w, {0}, plus)


def test_graded_top_recovers_the_inducing_module():
    p, w, chi = sl3_levi_module(mu=(zeta(3), 2))
    v = parabolic_induce(w, {0}, chi)
    top = graded_top(v)
    assert all(linalg.mat_equal(x, y) for (_, x), (_, y) in zip(top.generators(), w.generators()))
    q = build_algebra(1, 3)
    t = torus_module(q, [2])
    v1 = parabolic_induce(t, [], CentralCharacter.for_presentation(q, f_values=[3], k_values=[8]))
    assert linalg.mat_equal(graded_top(v1).K[0], t.K[0])


def test_graded_top_needs_provenance():
    with pytest.raises(ModuleError):
        graded_top(sl2_baby_verma(3, 1, 1))


def test_irreducibility_examples():
    p = build_algebra(1, 3)
    assert is_absolutely_irreducible(trivial_module(p))
    assert is_absolutely_irreducible(sl2_baby_verma(3, zeta(3), 1))
    assert not is_absolutely_irreducible(direct_sum([trivial_module(p), trivial_module(p)]))
    # lam = 1, a = 0 has the trivial module as a quotient
    assert not is_absolutely_irreducible(sl2_baby_verma(3, 1, 0))


def test_schur_lemma_on_intertwiners():
    m = sl2_baby_verma(3, zeta(3), 1)
    assert len(intertwiners(m, m)) == 1
    n = sl2_baby_verma(3, 4, 1)
    assert len(intertwiners(m, n)) == 0 and not are_isomorphic(m, n)


def test_bijection_at_identity_is_the_identity():
    p, w, chi = sl3_levi_module()
    v = parabolic_induce(w, {0}, chi)
    (rec,) = jordan_bijection(chi, [1, 1, 1], [v])
    assert rec["identical"] and rec["top_recovered"]
    assert rec["character"] == chi


def test_bijection_with_nontrivial_twist():
    p, w, chi = sl3_levi_module()
    v = parabolic_induce(w, {0}, chi)
    z = zeta(3)
    (rec,) = jordan_bijection(chi, [z, z, z ** -2], [v])
    assert rec["dim_preserved"] and rec["relations_pass"] and rec["character_matches"]
    assert not rec["identical"]


def test_bijection_in_sl2():
    p = build_algebra(1, 3)
    chi = CentralCharacter.for_presentation(p, f_values=[2], k_values=[8])
    mods = [parabolic_induce(torus_module(p, [mu]), [], chi) for mu in nth_roots(CycNumber.rational(8), 3)]
    recs = jordan_bijection(chi, [64, Fraction(1, 64)], mods)
    assert all(r["dim_preserved"] and r["relations_pass"] and r["character_matches"] for r in recs)
    assert len({str(r["character"].k_values) for r in recs}) == 1


@given(st.sampled_from([64, 729, -1, Fraction(1, 64)]), st.integers(0, 2))
def test_twisting_preserves_absolute_irreducibility(x, j):
    p = build_algebra(2, 3, levi_simple=[0])
    w = levi_baby_verma(p, 0, [zeta(3), 1], 1)
    # twists need sixth powers: V_lambda uses 2l-th roots of z
    x = CycNumber.rational(1) * x * zeta(3) ** j
    v = one_dim_module(p, {0}, [x, x, (x * x).inverse()])
    t = tensor_one_dim(w, v)
    assert verify_module(t)["passed"]
    assert is_absolutely_irreducible(t) == is_absolutely_irreducible(w) is True


def test_dckp_examples():
    m = sl2_baby_verma(3, 4, 1)
    cls = class_of_character(m.p, derived_character(m))
    assert is_regular(cls) and class_dim(cls) == 2 and dckp_check(m, cls)
    p = build_algebra(1, 3)
    assert dckp_check(trivial_module(p), central_class(2))
    _, w, chi = sl3_levi_module()
    v = parabolic_induce(w, {0}, chi)
    assert class_dim(unipotent_class((3,))) == 6 and dckp_check(v, unipotent_class((3,)))
    assert not dckp_check(trivial_module(p), unipotent_class((2,)))


def test_gio_probe_regular_character():
    p = build_algebra(1, 3)
    rep = conjecture_gio_probe(p, CentralCharacter.for_presentation(p, f_values=[1], k_values=[1]))
    assert rep["induced_from_torus"] and not rep["violations"]
    assert [m["dim"] for m in rep["modules"]] == [3, 3, 3]
    assert all(m["status"] == "INDUCED" for m in rep["modules"])


def test_gio_probe_regular_semisimple_character():
    p = build_algebra(1, 3)
    rep = conjecture_gio_probe(p, CentralCharacter.for_presentation(p, f_values=[0], k_values=[8]))
    assert rep["induced_from_torus"] and not rep["violations"]
    assert all(m["dim"] == 3 and m["absolutely_irreducible"] for m in rep["modules"])


def test_gio_probe_central_character_is_vacuous():
    p = build_algebra(1, 3)
    rep = conjecture_gio_probe(p, CentralCharacter.trivial(p))
    assert not rep["induced_from_torus"] and not rep["violations"]
    assert {m["status"] for m in rep["modules"]} == {"VACUOUS"}
    assert sorted(m["dim"] for m in rep["modules"]) == [1, 2, 3]


def test_spanning_count():
    p = build_algebra(1, 3)
    rep = spanning_rank(p, CentralCharacter.for_presentation(p, f_values=[1], k_values=[8]))
    assert rep == {"monomials": 27, "rank": 27, "model_dim": 9}
