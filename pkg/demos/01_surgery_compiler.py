"""
From surgery coefficients to monodromy words
============================================

Transverse surgery on a binding component of an open book compiles to a
sequence of stabilisations and boundary twists.  The recipe is driven by
the negative continued fraction of the (residual) coefficient.
"""

from fractions import Fraction

from openbook import OpenBook, TwistWord, load_builtin, neg_continued_fraction, surgery

# Every coefficient r < -1 has a unique expansion [c1, c2, ...]^- with all
# entries <= -2.  The leading entry is displayed split as (c1 - 1) + 1
# because the first twist block starts from the unstabilised page.
for r in (Fraction(-5, 4), Fraction(-2), Fraction(-7, 2)):
    cf = neg_continued_fraction(r)
    print(f"{r} = {cf.display()}")

# The standard page for the trefoil: a one-holed torus with monodromy
# tau_a tau_b.  Its binding is a single transverse knot.
spec, catalog = load_builtin("sigma11")
trefoil = OpenBook.standard(spec, TwistWord.parse(spec, catalog, "a b"))
print("\nstart:", trefoil.surface.name, "monodromy", trefoil.word)

# Admissible surgery (r < -1) only stabilises and adds positive twists.
out = surgery(trefoil, "1", Fraction(-7, 2))
print("r = -7/2 :", out.surface.name, "monodromy", out.word)

# Inadmissible surgery (r > 0) first spends n negative boundary twists,
# then hands the remaining coefficient to the admissible compiler.
for nhat in range(4):
    out = surgery(trefoil, "1", Fraction(5 + nhat), n=1)
    print(f"r = {5 + nhat} :", out.surface.name, "monodromy", out.word)

# The n = 1 choice is forced here: any larger n leaves a residual
# coefficient in [-1, 0], where no expansion exists.
try:
    surgery(trefoil, "1", Fraction(5), n=2)
except ValueError as exc:
    print("\nn = 2 fails:", exc)
