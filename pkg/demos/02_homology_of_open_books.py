"""
First homology of the closed manifold
=====================================

An open book (page, monodromy) determines a closed 3-manifold.  Its first
homology is the cokernel of the linear twisting data D of the monodromy,
computed exactly over the integers by Smith normal form.
"""

from fractions import Fraction

from openbook import (
    FramedLinkPresentation,
    OpenBook,
    TwistWord,
    h1_of_link,
    h1_of_open_book,
    load_builtin,
    surgery,
)

spec, catalog = load_builtin("sigma11")
trefoil = OpenBook.standard(spec, TwistWord.parse(spec, catalog, "a b"))

# The trefoil's open book supports the three-sphere: trivial H1.
print("(sigma11, a b) :", h1_of_open_book(trefoil))

# Surgery with coefficient 5 + n yields the lens space L(5 + n, 1); the
# compiled monodromy words differ only in the exponent of the d2 twist.
for nhat in range(4):
    out = surgery(trefoil, "1", Fraction(5 + nhat), n=1)
    print(f"r = {5 + nhat} : {out.word}  ->  H1 = {h1_of_open_book(out)}")

# Cross-check against the framed-link picture: surgery on a knot in the
# three-sphere with coefficient p/q has H1 of order |p|, whatever the knot.
for r in (Fraction(5), Fraction(7, 2), Fraction(-9, 4)):
    link = FramedLinkPresentation(("K",), (r,))
    print(f"single component [{r}] :", h1_of_link(link))
