"""Transverse surgery on binding components of an open book.

Admissible surgery (coefficient r < -1) is realised by a sequence of
positive stabilisations followed by positive boundary-parallel twists,
one block per entry of the negative continued fraction of r.
Inadmissible surgery (r > 0) first inserts n negative boundary-parallel
twists, converting the problem to an admissible one with coefficient
p/(q - n*p).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .mcg import TwistWord, rename_word
from .surface import SurfaceSpec, boundary_parallel_curve, stabilize

Rational = Fraction


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" into an exact rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"bad surgery coefficient {text!r}") from None


@dataclass(frozen=True)
class NegCF:
    """Negative continued fraction r = c1 - 1/(c2 - 1/(... - 1/ck)),
    every entry at most -2."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.entries or any(c > -2 for c in self.entries):
            raise ValueError("entries of a negative continued fraction are <= -2")

    def value(self) -> Fraction:
        # back-substitute acc = c - 1/acc over integers; every intermediate
        # n/d is already in lowest terms, so no reduction is ever needed
        n, d = self.entries[-1], 1
        for c in reversed(self.entries[:-1]):
            n, d = c * n - d, n
        return Fraction(n, d)

    def display_entries(self) -> tuple[int, ...]:
        """Entries in surgery-instruction form: the leading entry is
        split as (c1 - 1) + 1, reflecting that the first twist block
        starts from the unstabilised page."""
        return (self.entries[0] - 1,) + self.entries[1:]

    def display(self) -> str:
        first, *rest = self.display_entries()
        return "[" + ", ".join([f"{first}+1"] + [str(c) for c in rest]) + "]^-"


def neg_continued_fraction(r: Fraction) -> NegCF:
    """Greedy expansion of r < -1 with all entries <= -2."""
    if r >= -1:
        raise ValueError(f"negative continued fraction needs r < -1, got {r}")
    p, q = r.numerator, r.denominator
    entries = []
    while True:
        c = p // q  # floor
        entries.append(c)
        rem = c * q - p  # c - r scaled by q, lies in (-q, 0]
        if rem == 0:
            break
        p, q = -q, -rem  # r <- 1/(c - r), still in lowest terms
    return NegCF(tuple(entries))


def default_n(r: Fraction) -> int:
    """Smallest number of negative boundary twists with 1/n < r."""
    if r <= 0:
        raise ValueError("only positive coefficients need inadmissible twists")
    return r.denominator // r.numerator + 1


@dataclass(frozen=True)
class OpenBook:
    """A page, a monodromy word, and one label per binding component."""

    surface: SurfaceSpec
    word: TwistWord
    bindings: tuple[str, ...]

    def __post_init__(self) -> None:
        if self.word.surface != self.surface:
            raise ValueError("monodromy word lives on a different surface")
        if len(self.bindings) != self.surface.boundary:
            raise ValueError("need one binding label per boundary component")
        if len(set(self.bindings)) != len(self.bindings):
            raise ValueError("binding labels must be distinct")

    @classmethod
    def standard(cls, surface: SurfaceSpec, word: TwistWord) -> "OpenBook":
        labels = tuple(str(i) for i in range(1, surface.boundary + 1))
        return cls(surface, word, labels)

    def binding_index(self, label: str) -> int:
        """1-based boundary position of a binding label."""
        try:
            return self.bindings.index(label) + 1
        except ValueError:
            raise ValueError(f"no binding labelled {label!r}") from None


def _fresh_label(bindings: tuple[str, ...]) -> str:
    i = 1
    while str(i) in bindings:
        i += 1
    return str(i)


def _stabilize_book(
    ob: OpenBook, position: int
) -> tuple[OpenBook, int]:
    """One positive stabilisation at a boundary position.  Appends the
    stabilisation twist to the monodromy and rethreads binding labels;
    returns the new book and the position where the surgered binding
    continues."""
    res = stabilize(ob.surface, ob.word.catalog, position)
    word = rename_word(ob.word, res.surface, res.catalog, res.renames)
    word = word.append(res.stab_curve, 1)
    fresh = _fresh_label(ob.bindings)
    old = ob.bindings
    if position == 1:
        # the old first binding continues at the far end; the fresh
        # boundary takes its place
        labels = (fresh,) + old[1:] + (old[0],)
    else:
        labels = old + (fresh,)
    return OpenBook(res.surface, word, labels), res.k_index


def admissible_surgery(ob: OpenBook, binding: str, r: Fraction) -> OpenBook:
    """Admissible transverse surgery with coefficient r < -1 on the
    named binding component."""
    if r >= -1:
        raise ValueError(
            f"admissible surgery needs r < -1, got {r}; "
            "positive coefficients go through inadmissible_surgery"
        )
    position = ob.binding_index(binding)
    for entry in neg_continued_fraction(r).display_entries():
        for _ in range(abs(entry + 2)):
            ob, position = _stabilize_book(ob, position)
        curve = boundary_parallel_curve(ob.word.catalog, position)
        ob = OpenBook(ob.surface, ob.word.append(curve, 1), ob.bindings)
    return ob


def inadmissible_surgery(
    ob: OpenBook, binding: str, r: Fraction, n: int | None = None
) -> OpenBook:
    """Inadmissible transverse surgery with coefficient r > 0: insert n
    negative boundary-parallel twists and continue admissibly with
    coefficient p/(q - n*p)."""
    if r <= 0:
        raise ValueError(f"inadmissible surgery needs r > 0, got {r}")
    if n is None:
        n = default_n(r)
    if n < 1 or Fraction(1, n) >= r:
        raise ValueError(f"need a twist count n with 1/n < r; got n={n} for r={r}")
    p, q = r.numerator, r.denominator
    residual = Fraction(p, q - n * p)
    if residual >= -1:
        raise ValueError(
            f"n={n} leaves coefficient {residual}, not < -1 as admissible "
            f"surgery needs; valid n satisfy {q}/{p} < n < {q}/{p} + 1, "
            "and none exists when p divides q"
        )
    position = ob.binding_index(binding)
    curve = boundary_parallel_curve(ob.word.catalog, position)
    twisted = OpenBook(ob.surface, ob.word.append(curve, -n), ob.bindings)
    return admissible_surgery(twisted, binding, residual)


def surgery(
    ob: OpenBook, binding: str, r: Fraction, n: int | None = None
) -> OpenBook:
    """Dispatch on the coefficient: r < -1 admissible, r > 0
    inadmissible; coefficients in [-1, 0] are not realised by either
    construction."""
    if r < -1:
        return admissible_surgery(ob, binding, r)
    if r > 0:
        return inadmissible_surgery(ob, binding, r, n)
    raise ValueError(
        f"coefficient {r} is in [-1, 0]; no surgery description is available"
    )
