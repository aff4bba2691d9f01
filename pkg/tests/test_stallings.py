import itertools

import numpy as np
import pytest

from resfin import (
    SubgroupGraph,
    buskin_check,
    divisibility,
    invert,
    multiply,
    random_reduced_word,
    word_from_text,
)
from resfin.stallings import MAX_DIVISIBILITY_INDEX


def W(text, rank=2):
    return word_from_text(text, rank=rank)


# --- folding and membership ----------------------------------------------------

def test_single_loop_membership():
    g = SubgroupGraph.from_words([W("x", rank=1)])
    assert g.num_vertices == 1
    assert g.contains(W("x^5", rank=1))
    assert g.contains(W("X", rank=1))


def test_squares_subgroup_membership():
    g = SubgroupGraph.from_words([W("xx"), W("y")])
    assert g.contains(W("xx"))
    assert g.contains(W("y"))
    assert g.contains(W("xxy"))
    assert g.contains(W("XXy^3x^4"))
    assert not g.contains(W("x"))
    assert not g.contains(W("xy"))
    assert not g.contains(W("Xy^3XX"))  # leading x^-1 leaves the y-loop vertex


def test_conjugate_generator_membership():
    g = SubgroupGraph.from_words([W("x^y")])  # Yxy
    assert g.contains(W("Yxy"))
    assert g.contains(W("Yx^7y"))
    assert not g.contains(W("x"))
    assert not g.contains(W("y"))
    assert g.contains(W("1"))


def test_empty_generating_set_is_trivial_subgroup():
    g = SubgroupGraph.from_words([], rank=2)
    assert g.num_vertices == 1
    assert g.contains(W("1"))
    assert not g.contains(W("x"))


def test_whole_group_collapses_to_a_point():
    g = SubgroupGraph.from_words([W("x"), W("y")])
    assert g.num_vertices == 1
    assert g.contains(W("xYxxy"))


def test_membership_is_closed_under_products_and_inverses():
    gens = [W("xxY"), W("yy")]
    g = SubgroupGraph.from_words(gens)
    rng = np.random.default_rng(0)
    word = W("1")
    for _ in range(30):
        pick = gens[int(rng.integers(len(gens)))]
        if rng.integers(2):
            pick = invert(pick)
        word = multiply(word, pick)
        assert g.contains(word)


def test_fold_confluence_over_input_order_and_seed():
    gens = [W("xyX"), W("yxy"), W("xxx"), W("Yxyy")]
    reference = SubgroupGraph.from_words(gens)
    for perm in itertools.permutations(range(4)):
        assert SubgroupGraph.from_words([gens[i] for i in perm]) == reference
    for seed in range(20):
        assert SubgroupGraph.from_words(gens, seed=seed) == reference


def test_fold_confluence_on_random_inputs():
    rng = np.random.default_rng(14)
    for _ in range(20):
        gens = [random_reduced_word(rng, int(rng.integers(1, 9))) for _ in range(3)]
        reference = SubgroupGraph.from_words(gens, rank=2)
        for seed in (1, 2, 3):
            shuffled = [gens[i] for i in rng.permutation(3)]
            assert SubgroupGraph.from_words(shuffled, rank=2, seed=seed) == reference


def test_graph_vertex_counts():
    # <x^3> folds to a 3-cycle of x-edges
    g = SubgroupGraph.from_words([W("xxx", rank=1)])
    assert g.num_vertices == 3
    assert g.contains(W("x^6", rank=1))
    assert not g.contains(W("x^2", rank=1))


def test_from_words_requires_rank():
    with pytest.raises(ValueError):
        SubgroupGraph.from_words([])


# --- divisibility ----------------------------------------------------------------

def _divisibility_oracle(word, max_degree=4):
    """Smallest m <= max_degree admitting generator images in Sym(m) that move
    the basepoint under the word; any non-transitive tuple restricts to its
    basepoint orbit, so plain existence is exact."""
    rank = word.rank
    for m in range(2, max_degree + 1):
        perms = list(itertools.permutations(range(m)))
        inverse = {p: tuple(sorted(range(m), key=p.__getitem__)) for p in perms}
        for images in itertools.product(perms, repeat=rank):
            pt = 0
            for c in word.letters:
                p = images[abs(int(c)) - 1]
                pt = p[pt] if c > 0 else inverse[p][pt]
            if pt != 0:
                return m
    return None


def test_divisibility_pinned_values():
    assert divisibility(W("x")) == 2
    assert divisibility(W("xx")) == 3
    assert divisibility(W("[x,y]")) == 3
    assert divisibility(W("x^6")) == 4


def test_divisibility_matches_oracle_on_random_words():
    rng = np.random.default_rng(5)
    for _ in range(60):
        w = random_reduced_word(rng, int(rng.integers(1, 9)))
        got = divisibility(w)
        assert got == _divisibility_oracle(w) or (got is not None and got > 4)


def test_divisibility_respects_explicit_cap():
    assert divisibility(W("xx"), max_index=2) is None
    assert divisibility(W("xx"), max_index=3) == 3


def test_divisibility_rejects_bad_input():
    with pytest.raises(ValueError):
        divisibility(W("1"))
    with pytest.raises(ValueError):
        divisibility(W("x"), max_index=MAX_DIVISIBILITY_INDEX + 1)


def test_buskin_check_short_words():
    for text in ["x", "xx", "xy", "[x,y]", "xxyXY", "x^10"]:
        assert buskin_check(W(text))
