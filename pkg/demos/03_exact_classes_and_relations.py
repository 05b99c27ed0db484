"""
Deciding equality of mapping classes
====================================

A Dehn-twist word acts on the fundamental group of the page (a free
group) and on a linear record of twisting along the boundary.  The pair
is a complete invariant: two words are the same mapping class exactly
when both parts agree.
"""

from openbook import (
    TwistWord,
    boundary_exponent_delta,
    equal_classes,
    evaluate,
    load_builtin,
    validate_catalog,
)
from openbook.mcg import applicable_moves, apply_relation

# Each builtin page ships with a curve catalog; the validator re-derives
# every frozen fact (twist data, automorphisms, relation tables).
spec, catalog = load_builtin("sigma12")
report = validate_catalog(spec, catalog)
print("catalog checks:", "all pass" if report.ok else "FAILED")

# The braid relation, checked on the nose: the two words induce the same
# free-group automorphism and the same linear data.
word = TwistWord.parse(spec, catalog, "a b a")
other = TwistWord.parse(spec, catalog, "b a b")
print("a b a == b a b :", equal_classes(evaluate(word), evaluate(other)))

# The lantern relation on the two-holed torus.
lantern = TwistWord.parse(spec, catalog, "d1 d2 e^2")
stars = TwistWord.parse(spec, catalog, "s1 s2 s3")
print("d1 d2 e^2 == s1 s2 s3 :", equal_classes(evaluate(lantern), evaluate(stars)))

# The exact automorphism alone is NOT enough: boundary-parallel twists
# act trivially on the fundamental group but twist the binding.
one = evaluate(TwistWord.parse(spec, catalog, "a b g^-1 d1 d2^4"))
two = evaluate(TwistWord.parse(spec, catalog, "a b g^-1 d1 d2^5"))
print("\nsame automorphism:", one.exact == two.exact)
print("same class:       ", equal_classes(one, two))

# The difference is caught by the boundary exponent: the net amount of
# d2- over d1-twisting, invariant under every relation move.
word = TwistWord.parse(spec, catalog, "a b g^-1 d1 d2^4")
print("boundary exponent delta(2,1):", boundary_exponent_delta(word, 2, 1))

# Every relation move available on the lantern word rewrites it without
# leaving the mapping class.
for move, position, direction in applicable_moves(lantern):
    moved = apply_relation(lantern, move, position, direction)
    print(
        f"{move:8s} at {position}: {lantern} -> {moved};",
        "class preserved:", equal_classes(evaluate(lantern), evaluate(moved)),
    )
