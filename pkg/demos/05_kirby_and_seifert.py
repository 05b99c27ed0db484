"""
Framed links, blow-downs, and Seifert invariants
================================================

Surgery descriptions double as framed-link presentations of the first
homology.  Blowing down a (+1)- or (-1)-framed component and expanding a
rational framing into a chain of integer ones are both homology-neutral,
which makes them cheap consistency checks.
"""

from fractions import Fraction

from openbook import (
    FramedLinkPresentation,
    SeifertData,
    blow_down,
    h1_of_link,
    presentation_matrix,
    rational_to_chain,
    seifert_presentation,
)

# A small Seifert fibred space: central curve e0 = -1 with three
# exceptional fibres 1/2, 1/3, 1/4 (the Poincare-style star diagram).
data = SeifertData(-1, (Fraction(1, 2), Fraction(1, 3), Fraction(1, 4)))
link = seifert_presentation(data)
print("components:  ", " ".join(link.labels))
print("coefficients:", " ".join(str(c) for c in link.coefficients))
for row in presentation_matrix(link):
    print("   ", " ".join(f"{v:3d}" for v in row))
print("H1 =", h1_of_link(link))

# Blow down a (-1)-framed meridian: the framing of everything it links
# shifts, but the manifold -- and so H1 -- is unchanged.
hopf = FramedLinkPresentation(
    ("1", "2"), (Fraction(2), Fraction(-1)), {("1", "2"): 3}
)
after = blow_down(hopf, "2")
print("\nbefore blow-down:", h1_of_link(hopf))
print("after blow-down: ", h1_of_link(after), "with framing", after.coefficients[0])

# A rational framing expands into a chain of integer-framed components
# with the same homology: the continued-fraction picture again.
r = Fraction(-5, 4)
chain = rational_to_chain(r)
print(f"\n[{r}] as a chain:", " ".join(str(c) for c in chain.coefficients))
print("H1 matches:", h1_of_link(chain) == h1_of_link(FramedLinkPresentation(("K",), (r,))))
