import numpy as np
import pytest
from hypothesis import given, strategies as st

from resfin import (
    Word,
    commutator,
    conjugate,
    exponent_sums,
    generator,
    invert,
    multiply,
    power,
    reduce,
    render,
    word_from_text,
)
from resfin.words import (
    _letter_transforms,
    canonical_cyclic_words,
    canonical_rep,
    is_cyclically_reduced,
    letter_sort_key,
    random_reduced_word,
    reduced_letter_seqs,
    symmetry_orbit,
)

letters = st.lists(st.integers(min_value=-3, max_value=3).filter(lambda c: c != 0), max_size=30)


def test_reduce_cancels_adjacent_inverses():
    assert list(reduce([1, -1]).letters) == []
    assert list(reduce([1, 2, -2, -1]).letters) == []
    assert list(reduce([1, 2, -2, 1]).letters) == [1, 1]
    assert reduce([]).is_identity()


def test_reduce_cascades_through_new_adjacencies():
    assert list(reduce([1, 2, -2, -1, 3]).letters) == [3]


def test_reduce_rejects_bad_letters():
    with pytest.raises(ValueError):
        reduce([1, 0, 2])
    with pytest.raises(ValueError):
        reduce([1.5])


@given(letters)
def test_reduce_is_idempotent(raw):
    once = reduce(raw)
    assert reduce(once.letters, once.rank) == once
    # letterwise, without carrying rank: reducing reduced letters changes nothing
    assert list(reduce(once.letters).letters) == list(once.letters)


@given(letters)
def test_reduced_word_has_no_adjacent_cancellation(raw):
    w = reduce(raw).letters
    assert all(int(a) != -int(b) for a, b in zip(w, w[1:]))


@given(letters, letters)
def test_multiply_matches_concatenate_then_reduce(a, b):
    assert multiply(reduce(a), reduce(b)) == reduce(list(a) + list(b))


@given(letters)
def test_inverse_cancels(raw):
    w = reduce(raw)
    assert multiply(w, invert(w)).is_identity()
    assert multiply(invert(w), w).is_identity()


def test_word_equality_and_hash():
    assert word_from_text("xyx") == reduce([1, 2, -1, 1, 1])
    assert hash(word_from_text("xy")) == hash(reduce([1, 2]))
    assert word_from_text("xy") != word_from_text("yx")


def test_generator_and_power():
    x = generator(1)
    assert list(x.letters) == [1]
    assert list(power(x, 3).letters) == [1, 1, 1]
    assert list(power(x, -2).letters) == [-1, -1]
    assert power(x, 0).is_identity()
    with pytest.raises(ValueError):
        generator(0)


def test_conjugate_and_commutator_shapes():
    x, y = generator(1, rank=2), generator(2, rank=2)
    assert list(conjugate(x, y).letters) == [-2, 1, 2]
    assert list(commutator(x, y).letters) == [-1, -2, 1, 2]
    assert render(commutator(x, y)) == "XYxy"


def test_render_uses_exponents_for_long_runs():
    assert render(power(generator(1), 5)) == "x^5"
    assert render(power(generator(1), 4)) == "xxxx"
    assert render(power(generator(1), -5)) == "X^5"
    assert render(Word()) == "1"
    assert word_from_text("1").is_identity()


def test_render_round_trips_through_parser():
    w = word_from_text("xY^3zX")
    assert word_from_text(render(w), rank=w.rank) == w


def test_exponent_sums():
    assert exponent_sums(word_from_text("xYxy", rank=2)) == (2, 0)
    assert exponent_sums(word_from_text("z", rank=3)) == (0, 0, 1)


def test_rank_widening():
    w = word_from_text("xy")
    assert w.rank == 2
    assert w.with_rank(4).rank == 4
    with pytest.raises(ValueError):
        w.with_rank(1)


def test_letter_sort_key_prefers_positive_low_generators():
    order = sorted([(-1,), (1,), (-2,), (2,)], key=letter_sort_key)
    assert order == [(1,), (-1,), (2,), (-2,)]
    assert letter_sort_key((1,)) < letter_sort_key((1, 1))


def test_reduced_letter_seqs_count():
    # 2k(2k-1)^(L-1) reduced words of length L in rank k
    assert sum(1 for _ in reduced_letter_seqs(2, 3)) == 4 * 3 * 3
    assert sum(1 for _ in reduced_letter_seqs(1, 4)) == 2


def test_is_cyclically_reduced():
    assert is_cyclically_reduced((1, 2, -1)) is False
    assert is_cyclically_reduced((1, 2)) is True
    assert is_cyclically_reduced(()) is True


def test_symmetry_orbit_contains_expected_moves():
    transforms = _letter_transforms(2)
    orbit = set(symmetry_orbit((1, 2), transforms))
    assert (2, 1) in orbit
    assert (-2, -1) in orbit
    assert (-1, -2) in orbit


def test_canonical_rep_is_orbit_minimum():
    transforms = _letter_transforms(2)
    for seq in [(1, 2), (-2, -1), (2, 1)]:
        assert canonical_rep(seq, transforms) == (1, 2)
    assert canonical_rep((-1, -1), transforms) == (1, 1)


def test_canonical_cyclic_words_small_counts():
    assert [render(w) for w in canonical_cyclic_words(2, 1)] == ["x"]
    assert [render(w) for w in canonical_cyclic_words(2, 2)] == ["xx", "xy"]
    reps4 = canonical_cyclic_words(2, 4)
    assert word_from_text("XYxy", rank=2) not in reps4  # canonical form is xyXY
    assert word_from_text("xyXY", rank=2) in reps4


def test_canonical_cyclic_words_excludes_non_cyclically_reduced():
    for w in canonical_cyclic_words(2, 3):
        assert is_cyclically_reduced(tuple(w.letters))


@given(st.integers(min_value=1, max_value=20), st.integers(min_value=0, max_value=2**32 - 1))
def test_random_reduced_word_is_reduced_with_exact_length(length, seed):
    w = random_reduced_word(np.random.default_rng(seed), length)
    assert len(w.letters) == length
    assert reduce(w.letters, rank=w.rank) == w
