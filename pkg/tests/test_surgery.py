import random
from fractions import Fraction

import pytest

from openbook.homology import h1_of_open_book
from openbook.mcg import TwistWord, equal_classes, evaluate
from openbook.surface import load_builtin
from openbook.surgery import (
    OpenBook,
    admissible_surgery,
    default_n,
    inadmissible_surgery,
    neg_continued_fraction,
    parse_rational,
    surgery,
)


def trefoil_book():
    spec, catalog = load_builtin("sigma11")
    return OpenBook.standard(spec, TwistWord.parse(spec, catalog, "a b"))


def test_parse_rational():
    assert parse_rational("5") == Fraction(5)
    assert parse_rational("-7/2") == Fraction(-7, 2)
    assert parse_rational("3/4") == Fraction(3, 4)
    for bad in ("", "abc", "1/0", "--3", "1/2/3"):
        with pytest.raises(ValueError, match="bad surgery coefficient"):
            parse_rational(bad)


def test_continued_fraction_goldens():
    cf = neg_continued_fraction(Fraction(-5, 4))
    assert cf.entries == (-2, -2, -2, -2)
    assert cf.display() == "[-3+1, -2, -2, -2]^-"
    assert cf.value() == Fraction(-5, 4)
    assert neg_continued_fraction(Fraction(-2)).display() == "[-3+1]^-"
    assert neg_continued_fraction(Fraction(-7, 2)).entries == (-4, -2)


def test_continued_fraction_round_trip():
    # every admissible coefficient reconstructs from its expansion
    for p in range(-60, -1):
        for q in range(1, 15):
            r = Fraction(p, q)
            if r >= -1:
                continue
            cf = neg_continued_fraction(r)
            assert all(c <= -2 for c in cf.entries)
            assert cf.value() == r


def test_continued_fraction_rejects_shallow_slopes():
    for r in (Fraction(-1), Fraction(0), Fraction(-1, 2), Fraction(3)):
        with pytest.raises(ValueError, match="needs r < -1"):
            neg_continued_fraction(r)


def test_default_n():
    assert default_n(Fraction(5)) == 1
    assert default_n(Fraction(7, 3)) == 1
    assert default_n(Fraction(1, 2)) == 3
    assert default_n(Fraction(1)) == 2


def test_open_book_validation():
    spec, catalog = load_builtin("sigma12")
    word = TwistWord.parse(spec, catalog, "a")
    ob = OpenBook(spec, word, ("K", "L"))
    assert ob.binding_index("K") == 1 and ob.binding_index("L") == 2
    with pytest.raises(ValueError, match="no binding labelled"):
        ob.binding_index("M")
    with pytest.raises(ValueError, match="one binding label per boundary"):
        OpenBook(spec, word, ("K",))
    with pytest.raises(ValueError, match="distinct"):
        OpenBook(spec, word, ("K", "K"))
    assert OpenBook.standard(spec, word).bindings == ("1", "2")


def test_admissible_traces():
    ob = trefoil_book()
    res = surgery(ob, "1", Fraction(-2))
    assert str(res.word) == "a b d1 d2"
    assert res.bindings == ("2", "1")
    assert res.surface.boundary == 2

    res = surgery(ob, "1", Fraction(-3))
    assert str(res.word) == "a b d1 d3 d2"
    assert res.bindings == ("2", "1", "3")

    res = surgery(ob, "1", Fraction(-7, 2))
    assert str(res.word) == "a b d1 d3 d4 d2^2"
    assert res.bindings == ("2", "1", "3", "4")

    res = surgery(ob, "1", Fraction(-5, 4))
    assert str(res.word) == "a b d1 d2^4"
    assert res.bindings == ("2", "1")

    # the dispatcher and the direct entry point agree
    direct = admissible_surgery(ob, "1", Fraction(-2))
    assert direct.word == surgery(ob, "1", Fraction(-2)).word


def test_inadmissible_traces():
    ob = trefoil_book()
    res = surgery(ob, "1", Fraction(2), n=1)
    assert str(res.word) == "a b g^-1 d1 d2"
    assert res.bindings == ("2", "1")

    res = surgery(ob, "1", Fraction(5), n=1)
    assert str(res.word) == "a b g^-1 d1 d2^4"
    assert res.bindings == ("2", "1")
    # n defaults to the least valid twist count
    assert surgery(ob, "1", Fraction(5)).word == res.word

    direct = inadmissible_surgery(ob, "1", Fraction(5), n=1)
    assert direct.word == res.word


def test_surgery_errors():
    ob = trefoil_book()
    with pytest.raises(ValueError, match="is in \\[-1, 0\\]"):
        surgery(ob, "1", Fraction(-1, 2))
    with pytest.raises(ValueError, match="no binding labelled"):
        surgery(ob, "2", Fraction(-2))
    with pytest.raises(ValueError, match="1/n < r"):
        inadmissible_surgery(ob, "1", Fraction(5), n=0)
    with pytest.raises(ValueError, match="none exists when p divides q"):
        inadmissible_surgery(ob, "1", Fraction(5), n=2)
    # p | q: the window q/p < n < q/p + 1 is empty
    with pytest.raises(ValueError, match="none exists when p divides q"):
        surgery(ob, "1", Fraction(1, 2))
    with pytest.raises(ValueError, match="admissible"):
        inadmissible_surgery(ob, "1", Fraction(-3))


def test_integral_surgery_homology_orders():
    # p-surgery on a knot in the three-sphere has first homology Z/p,
    # whatever the knot: only the framing matrix survives abelianisation
    ob = trefoil_book()
    for p in range(2, 16):
        res = surgery(ob, "1", Fraction(p), n=1)
        group = h1_of_open_book(res)
        assert group.order == p, (p, str(group))
    for p, q in ((7, 2), (9, 4), (11, 3)):
        res = surgery(ob, "1", Fraction(p, q))
        assert h1_of_open_book(res).order == p


def test_negative_surgeries_match_inverse_slopes():
    # -p surgery: same drill, mirrored framing; order is still p
    ob = trefoil_book()
    rng = random.Random(5)
    for _ in range(20):
        p = rng.randint(2, 40)
        q = rng.randint(1, p - 1)
        r = Fraction(-p, q)
        if r >= -1:
            continue
        res = surgery(ob, "1", r)
        assert h1_of_open_book(res).order == abs(r.numerator)


def test_surgery_keeps_page_class_away_from_binding():
    # drilling keeps the original monodromy acting identically on the
    # old page: restricting the new class to the old generators returns it
    ob = trefoil_book()
    res = surgery(ob, "1", Fraction(-2))
    cls = evaluate(res.word)
    old = evaluate(ob.word)
    # x, y images of the stabilised class abelianise like the old ones
    for row_new, row_old in zip(cls.M[:2], old.M):
        assert row_new[:2] == row_old
