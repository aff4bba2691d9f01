import pytest

from resfin import flatten, parse, render, word_from_text
from resfin.parser import Commutator, Conjugate, Gen, Power, Product


def test_flatten_nested_expression():
    # [x^2, (x)^y] = X^2 Y X y x^2 Y x y after reduction
    w = word_from_text("[x^2,(x)^y]")
    assert render(w, max_run=99) == "XXYXyxxYxy"
    assert len(w.letters) == 10


def test_parse_tree_shapes():
    assert parse("x") == Gen("x")
    assert parse("xy") == Product((Gen("x"), Gen("y")))
    assert parse("x^3") == Power(Gen("x"), 3)
    assert parse("x^-2") == Power(Gen("x"), -2)
    assert parse("x^y") == Conjugate(Gen("x"), Gen("y"))
    assert parse("[x,y]") == Commutator(Gen("x"), Gen("y"))


def test_uppercase_is_inverse():
    assert word_from_text("xX").is_identity()
    assert list(word_from_text("X").letters) == [-1]


def test_generator_names_map_to_indices():
    assert list(word_from_text("xyzw").letters) == [1, 2, 3, 4]
    g1 = word_from_text("g1")
    assert list(g1.letters) == [5]
    assert render(g1) == "g1"
    assert list(word_from_text("G2").letters) == [-6]
    assert word_from_text("g1G1").is_identity()
    with pytest.raises(ValueError):
        word_from_text("q")


def test_conjugation_convention():
    # u^v = v^-1 u v
    assert render(word_from_text("x^y")) == "Yxy"


def test_commutator_convention():
    # [u,v] = u^-1 v^-1 u v
    assert render(word_from_text("[x,y]")) == "XYxy"


def test_power_binds_tighter_than_product():
    assert word_from_text("xy^2") == word_from_text("x(y^2)")
    assert word_from_text("xy^2") != word_from_text("(xy)^2")


def test_chained_carets_associate_left():
    assert word_from_text("x^y^z") == word_from_text("(x^y)^z")
    assert word_from_text("x^2^y") == word_from_text("(x^2)^y")


def test_whitespace_ignored():
    assert word_from_text(" [ x , y ] ") == word_from_text("[x,y]")


def test_rank_inference_and_override():
    assert word_from_text("xy").rank == 2
    assert word_from_text("z").rank == 3
    assert word_from_text("x", rank=5).rank == 5
    with pytest.raises(ValueError):
        word_from_text("z", rank=2)


def test_one_is_the_empty_word():
    assert word_from_text("1").is_identity()
    assert word_from_text("x1y") == word_from_text("xy")


def test_parse_errors():
    for bad in ["", "(", "(x", "[x,y", "[x]", "x^", "x^+", "x)", "2x", "x*y"]:
        with pytest.raises(ValueError):
            parse(bad)


def test_flatten_rejects_non_expr():
    with pytest.raises(TypeError):
        flatten("xy")


def test_big_exponents():
    w = word_from_text("x^100")
    assert len(w.letters) == 100
    assert render(w) == "x^100"
