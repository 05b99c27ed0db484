"""Framed-link presentations: first homology, blow-downs, and the
standard Seifert and chain pictures.

The presentation matrix of a rationally framed link has rows indexed by
components: the diagonal entry for component i is the numerator p_i of
its coefficient p_i/q_i, and the off-diagonal (i, j) entry is
q_i * lk(i, j).  Its cokernel is H_1 of the surgered manifold.  Note
the matrix is not symmetric unless every framing is an integer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .homology import AbelianGroup, Matrix, cokernel
from .surgery import neg_continued_fraction


def _pair(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class FramedLinkPresentation:
    """Link components with rational framings and pairwise linking
    numbers (absent pairs link zero)."""

    labels: tuple[str, ...]
    coefficients: tuple[Fraction, ...]
    linking: Mapping[tuple[str, str], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if len(self.labels) != len(self.coefficients):
            raise ValueError("need one coefficient per component")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("component labels must be distinct")
        known = set(self.labels)
        for (a, b), lk in self.linking.items():
            if a == b:
                raise ValueError(f"self-linking of {a!r} is not a link invariant")
            if (a, b) != _pair(a, b):
                raise ValueError(f"store linking under sorted pairs, not ({a}, {b})")
            if a not in known or b not in known:
                raise ValueError(f"linking pair ({a}, {b}) names unknown components")
            if not isinstance(lk, int):
                raise ValueError("linking numbers are integers")

    def lk(self, a: str, b: str) -> int:
        if a == b:
            return 0
        return self.linking.get(_pair(a, b), 0)


def presentation_matrix(link: FramedLinkPresentation) -> Matrix:
    rows = []
    for i, a in enumerate(link.labels):
        p, q = link.coefficients[i].numerator, link.coefficients[i].denominator
        rows.append(
            tuple(
                p if a == b else q * link.lk(a, b) for b in link.labels
            )
        )
    return tuple(rows)


def h1_of_link(link: FramedLinkPresentation) -> AbelianGroup:
    return cokernel(presentation_matrix(link))


def blow_down(link: FramedLinkPresentation, label: str) -> FramedLinkPresentation:
    """Remove a (+-1)-framed unknotted component, absorbing it into the
    framings and linkings of the rest."""
    if label not in link.labels:
        raise ValueError(f"no component labelled {label!r}")
    eps = link.coefficients[link.labels.index(label)]
    if eps not in (1, -1):
        raise ValueError(f"blow-down needs framing +1 or -1, got {eps}")
    eps = int(eps)
    rest = tuple(a for a in link.labels if a != label)
    coeffs = tuple(
        link.coefficients[link.labels.index(a)] - eps * link.lk(a, label) ** 2
        for a in rest
    )
    linking = {}
    for i, a in enumerate(rest):
        for b in rest[i + 1:]:
            lk = link.lk(a, b) - eps * link.lk(a, label) * link.lk(b, label)
            if lk:
                linking[_pair(a, b)] = lk
    return FramedLinkPresentation(rest, coeffs, linking)


@dataclass(frozen=True)
class SeifertData:
    """Small Seifert invariants (e0; r1, r2, r3), each r in (0, 1]."""

    e0: int
    rs: tuple[Fraction, Fraction, Fraction]

    def __post_init__(self) -> None:
        if len(self.rs) != 3 or any(not 0 < r <= 1 for r in self.rs):
            raise ValueError("need three rationals in (0, 1]")


def seifert_presentation(data: SeifertData) -> FramedLinkPresentation:
    """The surgery picture of a small Seifert fibration: an e0-framed
    central unknot and three meridians framed -1/r_i, each linking the
    centre once.

    The meridian framing sign is forced: with r_i = q_i/p_i the first
    homology of M(e0; r1, r2, r3) has order |e0*p1*p2*p3 + sum_i q_i *
    prod_{j!=i} p_j| (so M(-1; 1/2, 1/3, 1/4) gives Z/2), and the
    star-shaped presentation matrix realises that determinant only with
    meridian numerators -p_i; +1/r_i framings would give the order with
    the cross terms subtracted instead (50 in the example).
    """
    labels = ("c0", "c1", "c2", "c3")
    coeffs = (Fraction(data.e0),) + tuple(-1 / r for r in data.rs)
    linking = {_pair("c0", l): 1 for l in labels[1:]}
    return FramedLinkPresentation(labels, coeffs, linking)


def rational_to_chain(r: Fraction) -> FramedLinkPresentation:
    """The integer chain replacing one r-framed component, r < -1: the
    entries of the negative continued fraction, consecutively linked."""
    entries = neg_continued_fraction(r).entries
    labels = tuple(f"c{i}" for i in range(1, len(entries) + 1))
    coeffs = tuple(Fraction(c) for c in entries)
    linking = {
        _pair(labels[i], labels[i + 1]): 1 for i in range(len(labels) - 1)
    }
    return FramedLinkPresentation(labels, coeffs, linking)
