from functools import reduce
from math import gcd

import pytest
import sympy
from hypothesis import given, strategies as st

from qsheets import linalg
from qsheets.classes import (
    ClassDatum,
    Evidence,
    LeviComposition,
    SemisimpleDatum,
    central_class,
    class_dim,
    class_of_matrix,
    conjecture_ledger,
    enumerate_jordan_classes,
    enumerate_sheets,
    enumerate_unipotent_classes,
    induction_presentations,
    is_isolated,
    is_rigid,
    jordan_class,
    levi_envelope,
    ls_induce,
    parse_class,
    partitions,
    pattern_class,
    regular_semisimple,
    sheet_of,
    sheet_of_jordan,
    transpose,
    trivial_levi_class,
    unipotent_class,
)
from qsheets.cyclo import root_of_unity, zeta
from qsheets.suite import compositions


def jordan_matrix(c: ClassDatum) -> sympy.Matrix:
    """A representative with distinct integer eigenvalues per tag."""
    blocks = []
    for value, (_, p) in enumerate(c.items(), start=1):
        for size in p:
            blocks.append(sympy.Matrix(size, size, lambda i, j: value if i == j else (1 if j == i + 1 else 0)))
    return sympy.diag(*blocks)


def commutant_class_dim(c: ClassDatum) -> int:
    g = jordan_matrix(c)
    n = g.shape[0]
    eye = sympy.eye(n)
    op = sympy.kronecker_product(eye, g) - sympy.kronecker_product(g.T, eye)
    commutant = n * n - op.rank()
    # SL centralizer is one smaller than GL, and so is the group
    return (n * n - 1) - (commutant - 1)


def all_patterns(n):
    seen = set()
    for j in enumerate_jordan_classes(n):
        if j.pattern not in seen:
            seen.add(j.pattern)
            yield pattern_class([p for _, p in j.pattern])


def test_class_dim_examples():
    assert class_dim(unipotent_class((3,))) == 6
    assert class_dim(unipotent_class((2, 1))) == 4
    assert class_dim(central_class(3)) == 0


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_class_dim_matches_commutant_oracle(n):
    for c in all_patterns(n):
        assert class_dim(c) == commutant_class_dim(c), str(c)


@given(st.integers(min_value=2, max_value=7).flatmap(
    lambda n: st.lists(st.sampled_from(partitions(n)), min_size=1, max_size=3)))
def test_class_dimensions_are_even(parts):
    assert class_dim(pattern_class(parts)) % 2 == 0


def test_levi_envelopes():
    assert levi_envelope(central_class(4)).parts == (4,)
    assert levi_envelope(regular_semisimple(4)).parts == (1, 1, 1, 1)
    ss = SemisimpleDatum((("a", 2), ("b", 1)))
    assert levi_envelope(ss).parts == (2, 1)


def test_jordan_class_dimensions():
    assert jordan_class(regular_semisimple(2)).dim == 3
    assert jordan_class(unipotent_class((2,))).dim == 2
    assert jordan_class(central_class(3)).dim == 0


def test_jordan_component_of_concrete_tags():
    z = zeta(3)
    c = ClassDatum.from_blocks([(z, (1, 1, 1))])
    assert jordan_class(c).component == 1
    assert jordan_class(central_class(3)).component == 0
    assert jordan_class(pattern_class([(1, 1), (1, 1)])).component is None


def test_semisimple_datum_validation():
    with pytest.raises(ValueError):
        SemisimpleDatum(((2, 1), (2, 1)))
    with pytest.raises(ValueError):
        SemisimpleDatum(((2, 1),))  # determinant 2
    with pytest.raises(ValueError):
        ClassDatum.from_blocks([(1, (1, 2))])


def test_induction_examples():
    assert ls_induce(LeviComposition((2, 1)), trivial_levi_class(LeviComposition((2, 1)))).unipotent == ((2, 1),)
    for n in range(2, 7):
        torus = LeviComposition((1,) * n)
        assert ls_induce(torus, trivial_levi_class(torus)).unipotent == ((n,),)
    assert ls_induce(LeviComposition((2, 2)), trivial_levi_class(LeviComposition((2, 2)))).unipotent == ((2, 2),)


def _levi_unipotent_classes(levi):
    choices = [partitions(x) for x in levi.parts]
    out = [()]
    for ch in choices:
        out = [acc + (((1, p),),) for acc in out for p in ch]
    return out


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_dimension_formula_on_every_levi(n):
    count = 0
    for comp in compositions(n):
        levi = LeviComposition(comp)
        for lc in _levi_unipotent_classes(levi):
            c = ls_induce(levi, lc)
            l_class = sum(x * x - sum(y * y for y in transpose(b[0][1])) for x, b in zip(comp, lc))
            assert class_dim(c) == (n * n - 1) - levi.dim + l_class
            count += 1
    assert count > 0


def _refinements(comp):
    """Compositions refining ``comp`` block by block."""
    out = [()]
    for m in comp:
        out = [acc + (sub,) for acc in out for sub in compositions(m)]
    return out


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_induction_is_transitive(n):
    for outer in compositions(n):
        for inner in _refinements(outer):
            flat = LeviComposition(tuple(x for sub in inner for x in sub))
            for lc in _levi_unipotent_classes(flat):
                direct = ls_induce(flat, lc)
                # induce inside each block of the middle Levi first
                middle, pos = [], 0
                for sub in inner:
                    piece = lc[pos:pos + len(sub)]
                    pos += len(sub)
                    mid = ls_induce(LeviComposition(sub), piece)
                    middle.append(tuple(mid.items()))
                two_step = ls_induce(LeviComposition(outer), tuple(middle))
                assert two_step.canonical() == direct.canonical()


def test_rigidity_and_isolation_examples():
    z = zeta(3)
    assert is_rigid(ClassDatum.from_blocks([(z, (1, 1, 1))]))
    assert not is_rigid(unipotent_class((3,)))
    assert not is_isolated(regular_semisimple(2))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_rigid_iff_only_trivial_presentation_iff_point_sheet(n):
    for c in all_patterns(n):
        proper = [lv for lv, _ in induction_presentations(c) if lv.parts != (n,)]
        assert is_rigid(c) == (not proper) == (sheet_of(c).dim == 0), str(c)


def test_presentation_examples():
    pres = induction_presentations(unipotent_class((2, 1)))
    assert any(lv.parts == (2, 1) and all(p == (1,) * len(p) for b in lc for _, p in b) for lv, lc in pres)
    assert [lv.parts for lv, _ in induction_presentations(central_class(3))] == [(3,)]
    rs = induction_presentations(regular_semisimple(2))
    assert sorted(lv.parts for lv, _ in rs) == [(1, 1), (2,)]


def test_sheets_of_sl2_and_sl3():
    s2 = enumerate_sheets(2)
    assert len(s2) == 3
    assert sorted(s.dim for s in s2) == [0, 0, 3]
    s3 = enumerate_sheets(3)
    assert len(s3) == 5
    assert sorted(s.dim for s in s3) == [0, 0, 0, 5, 8]
    assert {s.levi.parts for s in s3 if s.dim == 5} == {(2, 1)}


def test_regular_unipotent_sheet():
    s = sheet_of(unipotent_class((2,)))
    assert s.levi.parts == (1, 1) and s.dim == 3


def test_sheet_of_central_element_uses_its_component():
    c = ClassDatum.from_blocks([(-1, (1, 1))])
    s = sheet_of(c)
    assert s.levi.parts == (2,) and s.component == 1
    assert s.anchor() == root_of_unity(2, 1)


@pytest.mark.parametrize("n,expected", [(2, 3), (3, 5), (4, 9), (5, 11), (6, 20)])
def test_sheet_count_is_sum_of_gcds(n, expected):
    count = sum(reduce(gcd, p) for p in partitions(n))
    assert len(enumerate_sheets(n)) == count == expected


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_jordan_classes_partition_and_each_sheet_has_one_dense_class(n):
    jcs = enumerate_jordan_classes(n)
    assert len(jcs) == len(set(jcs))
    sheets = enumerate_sheets(n)
    for s in sheets:
        dense = [j for j in jcs if sheet_of_jordan(j) == s and j.dim == s.dim]
        assert dense == [s.dense]
    for j in jcs:
        s = sheet_of_jordan(j)
        assert s in sheets and j.dim <= s.dim
    for c in all_patterns(n):
        j = jordan_class(c)
        assert any(x.pattern == j.pattern and x.levi == j.levi for x in jcs)


def test_every_unipotent_class_lies_in_a_sheet():
    for n in range(1, 7):
        for c in enumerate_unipotent_classes(n):
            assert sheet_of(c) in enumerate_sheets(n)


def test_ledger_examples():
    assert conjecture_ledger(pattern_class([(1, 1, 1), (1, 1)])) is Evidence.LEVI_A1A2_COR
    assert conjecture_ledger(unipotent_class((4,))) is Evidence.REGULAR_PROVED
    assert conjecture_ledger(regular_semisimple(5)) is Evidence.REGULAR_PROVED
    assert conjecture_ledger(unipotent_class((2, 2))) is Evidence.OPEN
    assert conjecture_ledger(unipotent_class((3, 1))) is Evidence.SUBREGULAR_TYPEA
    assert conjecture_ledger(central_class(4)) is Evidence.DENSE_JORDAN_THM4


def test_class_of_lower_triangular_matrix():
    g = linalg.as_matrix([[1, 0, 0], [1, 1, 0], [0, 0, 1]])
    assert class_of_matrix(g).unipotent == ((2, 1),)
    z = zeta(3)
    h = linalg.as_matrix([[z, 0, 0], [0, z, 0], [0, 1, z]])
    c = class_of_matrix(h)
    assert c.unipotent == ((2, 1),) and c.semisimple.tags == (z,)
    with pytest.raises(ValueError):
        class_of_matrix(linalg.as_matrix([[1, 1], [1, 2]]))


@pytest.mark.parametrize("text", ["1:21", "a:1 b:1 c:1", "a:111;b:11", "-1:11"])
def test_parse_class_round_trip(text):
    c = parse_class(text)
    assert parse_class(str(c)).canonical() == c.canonical()


def test_parse_class_rejects_garbage():
    with pytest.raises(ValueError):
        parse_class("")
    with pytest.raises(ValueError):
        parse_class("a-21")
