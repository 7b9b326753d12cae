import pytest
from hypothesis import given, strategies as st

from qsheets.roots import (
    WeylWord,
    all_levis,
    beta_sequence,
    build_root_system,
    is_reduced,
    length,
    levi,
    longest_word_with_prefix,
    reduced_words_of_longest,
    reflect,
    weyl_act,
)

KNOWN_COUNTS = {("A", 1): 1, ("A", 2): 3, ("A", 3): 6, ("A", 5): 15, ("B", 2): 4,
                ("B", 3): 9, ("C", 3): 9, ("D", 4): 12, ("G", 2): 6}


@pytest.mark.parametrize("kind,rank", sorted(KNOWN_COUNTS))
def test_positive_root_counts(kind, rank):
    rs = build_root_system(kind, rank)
    assert rs.N == KNOWN_COUNTS[(kind, rank)]
    assert all(min(r) >= 0 and any(r) for r in rs.positive_roots)


def test_rank_one_data():
    rs = build_root_system("A", 1)
    assert rs.N == 1
    assert rs.cartan == ((2,),)


def test_a2_positive_roots():
    rs = build_root_system("A", 2)
    assert set(rs.positive_roots) == {(1, 0), (0, 1), (1, 1)}


def test_unsupported_type():
    with pytest.raises(ValueError):
        build_root_system("H", 3)


def test_reflections():
    rs = build_root_system("A", 2)
    assert reflect(rs, 0, (1, 0)) == (-1, 0)
    assert reflect(rs, 0, (0, 1)) == (1, 1)
    assert weyl_act(rs, WeylWord(()), (0, 1)) == (0, 1)


def test_a2_levi_prefixed_word():
    rs = build_root_system("A", 2)
    w = longest_word_with_prefix(rs, levi(rs, {0}))
    assert w.letters == (0, 1, 0)
    assert longest_word_with_prefix(rs).letters == (0, 1, 0)


def test_a3_levi_prefixed_word():
    rs = build_root_system("A", 3)
    lv = levi(rs, {0, 1})
    w = longest_word_with_prefix(rs, lv)
    assert len(w) == 6 and is_reduced(rs, w)
    sub = build_root_system("A", 2)
    assert is_reduced(sub, w.prefix(3)) and length(sub, w.prefix(3)) == sub.N


def test_beta_sequence_a2():
    rs = build_root_system("A", 2)
    assert beta_sequence(rs, WeylWord((0, 1, 0))) == [(1, 0), (1, 1), (0, 1)]
    assert beta_sequence(build_root_system("A", 1), WeylWord((0,))) == [(1,)]


def test_beta_sequence_rejects_non_reduced():
    rs = build_root_system("A", 2)
    with pytest.raises(ValueError):
        beta_sequence(rs, WeylWord((0, 0, 1)))


@pytest.mark.parametrize("kind,rank", [("A", 2), ("A", 3), ("B", 2), ("C", 3), ("G", 2)])
def test_every_reduced_word_gives_a_convex_order(kind, rank):
    rs = build_root_system(kind, rank)
    words = reduced_words_of_longest(rs)
    assert words
    for w in words:
        betas = beta_sequence(rs, w)
        assert len(betas) == len(set(betas)) == rs.N
        assert set(betas) == set(rs.positive_roots)


@pytest.mark.parametrize("kind,rank", [("A", 1), ("A", 2), ("A", 3), ("B", 3), ("C", 2), ("G", 2)])
def test_levi_prefix_property_exhaustive(kind, rank):
    rs = build_root_system(kind, rank)
    for lv in all_levis(rs):
        w = longest_word_with_prefix(rs, lv)
        betas = beta_sequence(rs, w)
        assert all(lv.contains_root(b) for b in betas[:lv.N_L])
        assert not any(lv.contains_root(b) for b in betas[lv.N_L:])
        assert lv.N_L <= rs.N
        assert (lv.N_L == rs.N) == (lv.simple == frozenset(range(rank)))


def test_levi_dimension():
    rs = build_root_system("A", 3)
    assert levi(rs, {0, 2}).dim == 2 * 2 + 3
    assert levi(rs, ()).dim == 3
    with pytest.raises(ValueError):
        levi(rs, {5})


@given(st.lists(st.integers(min_value=0, max_value=2), max_size=8))
def test_length_is_bounded_and_reflection_preserves_roots(letters):
    rs = build_root_system("A", 3)
    w = WeylWord(tuple(letters))
    assert length(rs, w) <= len(w)
    assert length(rs, w) % 2 == len(w) % 2
    for r in rs.positive_roots:
        assert rs.is_root(weyl_act(rs, w, r))
