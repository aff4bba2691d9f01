import math

import pytest

from resfin import commutator_word, law_word, power_law, render, word_from_text
from resfin.laws import POWER_LAW_MAX


def test_power_law_values():
    assert power_law(1) == word_from_text("x", rank=2)
    assert len(power_law(4).letters) == 24
    assert len(power_law(6).letters) == math.factorial(6)


def test_power_law_bounds():
    with pytest.raises(ValueError):
        power_law(0)
    with pytest.raises(ValueError):
        power_law(POWER_LAW_MAX + 1)


def test_law_word_base_cases():
    assert law_word(1).word == word_from_text("x", rank=2)
    v2 = law_word(2)
    assert v2.exponents == (2, 1)
    # [x^2, (x)^y] in reduced form
    assert render(v2.word, max_run=99) == "XXYXyxxYxy"
    assert len(v2.word.letters) == 10


def test_law_word_lengths_within_bound():
    for n in range(1, 20):
        r = law_word(n)
        assert not r.word.is_identity()
        assert len(r.word.letters) <= r.length_bound == 4 * n * n * (n + 1)


def test_commutator_word_validates_exponents():
    with pytest.raises(ValueError):
        commutator_word([])
    with pytest.raises(ValueError):
        commutator_word([2, 2])  # not strictly decreasing
    with pytest.raises(ValueError):
        commutator_word([3, 1, 2])
    with pytest.raises(ValueError):
        commutator_word([2, 0])  # exponents must stay positive


def test_top_split_partitions_exponents():
    r = law_word(9)
    left, right = r.top_split()
    assert sorted(left + right) == list(range(1, 10))
    assert len(left) == 5 and len(right) == 4
    with pytest.raises(ValueError):
        law_word(1).top_split()


def test_subtree_exponents_cover_all_leaves():
    r = law_word(5)
    assert sorted(r.subtree_exponents()) == [1, 2, 3, 4, 5]


def test_divisibility_split_property():
    # every divisor of an exponent list entry lands in both halves for small ell
    r = law_word(9)
    left, right = r.top_split()
    for ell in (1, 2, 3):
        assert any(e % ell == 0 for e in left)
        assert any(e % ell == 0 for e in right)


def test_single_generator_words_commute_with_recipe():
    r = commutator_word([3, 2, 1])
    assert r.exponents == (3, 2, 1)
    assert not r.word.is_identity()
    assert r.word.rank == 2
