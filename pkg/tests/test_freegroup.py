import random

import pytest

from openbook.freegroup import (
    FreeAutomorphism,
    FreeWord,
    apply_images,
    are_conjugate,
    compose,
    concat,
    cyclic_reduce,
    det,
    exponent_sums,
    invert_letters,
    reduce_letters,
)

RANDOM_ROUNDS = 300


def random_letters(rng, rank, max_len=12):
    return tuple(
        rng.choice([k for k in range(-rank, rank + 1) if k])
        for _ in range(rng.randint(0, max_len))
    )


def test_reduce_letters():
    assert reduce_letters((1, -1)) == ()
    assert reduce_letters((1, 2, -2, -1, 3)) == (3,)
    assert reduce_letters((1, 2, 3)) == (1, 2, 3)
    assert reduce_letters(()) == ()
    # rank screening
    with pytest.raises(ValueError):
        reduce_letters((1, 4), rank=3)
    with pytest.raises(ValueError):
        reduce_letters((0,))


def test_invert_concat():
    w = (1, 2, -3)
    assert invert_letters(w) == (3, -2, -1)
    assert reduce_letters(concat(w, invert_letters(w))) == ()
    assert concat((1,), (-1, 2), (3,)) == (2, 3)


def test_apply_images_is_substitution():
    # x -> xy, y -> y on F_2
    images = ((1, 2), (2,))
    assert apply_images(images, (1,)) == (1, 2)
    assert apply_images(images, (-1,)) == (-2, -1)
    # x y^-1 x^-1 -> (xy) y^-1 (xy)^-1, which reduces back to the input
    assert apply_images(images, (1, -2, -1)) == (1, -2, -1)
    assert apply_images(images, (2, 1)) == (2, 1, 2)


def test_exponent_sums_and_cyclic():
    assert exponent_sums((1, 1, -2, 3, 1), 3) == (3, -1, 1)
    assert cyclic_reduce((1, 2, -1)) == (2,)
    assert cyclic_reduce((1, -1)) == ()
    assert are_conjugate((1, 2), (2, 1))
    assert not are_conjugate((1,), (2,))
    assert are_conjugate((-1, 2, 1), (2,))


def test_det():
    assert det(((1, 0), (0, 1))) == 1
    assert det(((2, 1), (1, 1))) == 1
    assert det(((0, 1), (1, 0))) == -1
    assert det(((2, 0), (0, 2))) == 4


def test_free_word_algebra():
    w = FreeWord.make(2, (1, 2))
    v = FreeWord.make(2, (-2,))
    assert (w * v).letters == (1,)
    assert w.inverse().letters == (-2, -1)
    assert (w ** 0).is_identity()
    assert (w ** -2) == (w.inverse() * w.inverse())
    # conjugation convention: w^v = v^-1 w v
    assert w.conjugate_by(v) == v.inverse() * w * v
    assert w.exponent_sums() == (1, 1)
    assert str(FreeWord.identity(2)) == "1"
    assert FreeWord.make(2, (1, -2)).to_str(("a", "b")) == "a b^-1"
    with pytest.raises(ValueError):
        FreeWord.make(2, (3,))


def test_automorphism_validation():
    # x -> xy needs inverse x -> xy^-1
    aut = FreeAutomorphism.from_images(2, ((1, 2), (2,)), ((1, -2), (2,)))
    assert aut.apply((1,)) == (1, 2)
    assert aut.apply_inverse((1,)) == (1, -2)
    with pytest.raises(ValueError):
        FreeAutomorphism.from_images(2, ((1, 2), (2,)), ((1,), (2,)))
    # an endomorphism that kills a generator is rejected even as its own inverse
    with pytest.raises(ValueError):
        FreeAutomorphism.from_images(2, ((1,), (1,)), ((1,), (1,)))


def test_inner_automorphism():
    inner = FreeAutomorphism.inner(2, (1, 2))
    # u -> w^-1 u w
    assert inner.apply((1,)) == reduce_letters((-2, -1, 1, 1, 2))
    assert inner.abelianize() == ((1, 0), (0, 1))
    assert compose(inner, inner.inverse()).is_identity()


def test_compose_order():
    # compose(f, g) applies g first
    f = FreeAutomorphism.from_images(2, ((1, 2), (2,)), ((1, -2), (2,)))
    g = FreeAutomorphism.from_images(2, ((1,), (2, 1)), ((1,), (2, -1)))
    fg = compose(f, g)
    assert fg.apply((1,)) == f.apply(g.apply((1,)))
    assert fg.apply((2,)) == f.apply(g.apply((2,)))


def test_compose_properties_random():
    rng = random.Random(2024)
    basis = [
        FreeAutomorphism.from_images(3, ((1, 2), (2,), (3,)), ((1, -2), (2,), (3,))),
        FreeAutomorphism.from_images(3, ((1,), (2, 3), (3,)), ((1,), (2, -3), (3,))),
        FreeAutomorphism.inner(3, (1, 2, -3)),
        FreeAutomorphism.from_images(3, ((2,), (1,), (3,)), ((2,), (1,), (3,))),
    ]
    for _ in range(RANDOM_ROUNDS):
        f, g, h = (rng.choice(basis) ** rng.randint(-2, 2) for _ in range(3))
        assert compose(compose(f, g), h) == compose(f, compose(g, h))
        assert compose(f, f.inverse()).is_identity()
        w = random_letters(rng, 3)
        # automorphisms respect multiplication and inversion
        assert f.apply(invert_letters(w)) == invert_letters(f.apply(w))
        assert f.apply_inverse(f.apply(w)) == reduce_letters(w)


def test_abelianize_matches_exponent_action():
    rng = random.Random(5)
    f = compose(
        FreeAutomorphism.from_images(2, ((1, 2), (2,)), ((1, -2), (2,))),
        FreeAutomorphism.inner(2, (2, 1)),
    )
    m = f.abelianize()
    assert det(m) in (1, -1)
    for _ in range(50):
        w = random_letters(rng, 2)
        e = exponent_sums(w, 2)
        image_e = exponent_sums(f.apply(w), 2)
        assert image_e == tuple(
            sum(m[i][j] * e[j] for j in range(2)) for i in range(2)
        )


def test_pow():
    f = FreeAutomorphism.from_images(2, ((1, 2), (2,)), ((1, -2), (2,)))
    assert (f ** 3).apply((1,)) == (1, 2, 2, 2)
    assert (f ** -1) == f.inverse()
    assert (f ** 0).is_identity()
