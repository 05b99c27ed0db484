"""Exact words and automorphisms of finitely generated free groups.

Words are kept freely reduced at all times, so word equality is plain
tuple equality.  Letters are signed 1-based generator indices: +k is the
generator x_k, -k its inverse.

Automorphisms store images of the generators together with images under
the inverse map, and both directions are checked against each other at
construction time.  That is deliberately paranoid: the curve tables built
on top of this module were derived by hand, and a wrong inverse shows up
here immediately instead of as a subtly wrong twist three modules later.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

Letters = tuple[int, ...]


def reduce_letters(raw: Iterable[int], rank: int | None = None) -> Letters:
    """Freely reduce a sequence of signed generator indices.

    Adjacent inverse pairs are cancelled (iteratively, via a stack) until
    none remain; the result is the unique reduced word equal to the input
    in the free group.  If ``rank`` is given, letters outside
    ``1..rank`` are rejected.
    """
    out: list[int] = []
    for letter in raw:
        if letter == 0:
            raise ValueError("0 is not a valid letter")
        if rank is not None and not 1 <= abs(letter) <= rank:
            raise ValueError(f"letter {letter} out of range for rank {rank}")
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def invert_letters(letters: Sequence[int]) -> Letters:
    return tuple(-x for x in reversed(letters))


def concat(*parts: Sequence[int]) -> Letters:
    """Concatenate already-reduced words, reducing across the seams."""
    out: list[int] = []
    for part in parts:
        for letter in part:
            if out and out[-1] == -letter:
                out.pop()
            else:
                out.append(letter)
    return tuple(out)


def apply_images(images: Sequence[Sequence[int]], letters: Sequence[int]) -> Letters:
    """Substitute ``x_k -> images[k-1]`` into a word and reduce.

    ``images`` need not come from an automorphism; this is plain
    substitution, usable for arbitrary endomorphisms (the convention
    solver in tools/ builds twist candidates this way before they are
    promoted to validated automorphisms).
    """
    out: list[int] = []
    for letter in letters:
        image = images[abs(letter) - 1]
        seq = image if letter > 0 else invert_letters(image)
        for x in seq:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
    return tuple(out)


def exponent_sums(letters: Sequence[int], rank: int) -> tuple[int, ...]:
    """Total signed exponent of each generator (the abelianised word)."""
    sums = [0] * rank
    for letter in letters:
        sums[abs(letter) - 1] += 1 if letter > 0 else -1
    return tuple(sums)


def cyclic_reduce(letters: Sequence[int]) -> Letters:
    word = reduce_letters(letters)
    lo, hi = 0, len(word)
    while hi - lo >= 2 and word[lo] == -word[hi - 1]:
        lo += 1
        hi -= 1
    return tuple(word[lo:hi])


def are_conjugate(a: Sequence[int], b: Sequence[int]) -> bool:
    """Conjugacy test for free-group elements via cyclic words."""
    ra, rb = cyclic_reduce(a), cyclic_reduce(b)
    if len(ra) != len(rb):
        return False
    if not ra:
        return True
    doubled = ra + ra
    return any(doubled[i:i + len(rb)] == rb for i in range(len(ra)))


def det(matrix: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant (fraction-free Bareiss elimination)."""
    n = len(matrix)
    m = [list(row) for row in matrix]
    if any(len(row) != n for row in m):
        raise ValueError("determinant requires a square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


@dataclass(frozen=True)
class FreeWord:
    """A freely reduced word in F_rank."""

    rank: int
    letters: Letters

    def __post_init__(self) -> None:
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        reduced = reduce_letters(self.letters, self.rank)
        if reduced != tuple(self.letters):
            raise ValueError(f"word {self.letters} is not freely reduced")
        object.__setattr__(self, "letters", reduced)

    @classmethod
    def make(cls, rank: int, raw: Iterable[int]) -> "FreeWord":
        return cls(rank, reduce_letters(raw, rank))

    @classmethod
    def identity(cls, rank: int) -> "FreeWord":
        return cls(rank, ())

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        return FreeWord(self.rank, concat(self.letters, other.letters))

    def inverse(self) -> "FreeWord":
        return FreeWord(self.rank, invert_letters(self.letters))

    def __pow__(self, n: int) -> "FreeWord":
        base = self.letters if n >= 0 else invert_letters(self.letters)
        return FreeWord(self.rank, concat(*([base] * abs(n))))

    def conjugate_by(self, w: "FreeWord") -> "FreeWord":
        """w^-1 * self * w."""
        return w.inverse() * self * w

    def exponent_sums(self) -> tuple[int, ...]:
        return exponent_sums(self.letters, self.rank)

    def is_identity(self) -> bool:
        return not self.letters

    def to_str(self, names: Sequence[str] | None = None) -> str:
        if not self.letters:
            return "1"
        parts = []
        for letter in self.letters:
            name = names[abs(letter) - 1] if names else f"x{abs(letter)}"
            parts.append(name if letter > 0 else name + "^-1")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_str()


@dataclass(frozen=True)
class FreeAutomorphism:
    """An automorphism of F_rank with an explicit inverse.

    ``images[k-1]`` is the reduced image of x_k, ``inverse_images[k-1]``
    the reduced image of x_k under the inverse automorphism.  Validation
    checks that the two substitution maps are mutually inverse on every
    generator and that the abelianisation is unimodular.
    """

    rank: int
    images: tuple[Letters, ...]
    inverse_images: tuple[Letters, ...]

    def __post_init__(self) -> None:
        if len(self.images) != self.rank or len(self.inverse_images) != self.rank:
            raise ValueError("need exactly one image per generator, both ways")
        images = tuple(reduce_letters(w, self.rank) for w in self.images)
        inverse_images = tuple(reduce_letters(w, self.rank) for w in self.inverse_images)
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "inverse_images", inverse_images)
        for k in range(self.rank):
            gen = (k + 1,)
            if apply_images(images, inverse_images[k]) != gen:
                raise ValueError(f"images do not invert inverse_images at x{k + 1}")
            if apply_images(inverse_images, images[k]) != gen:
                raise ValueError(f"inverse_images do not invert images at x{k + 1}")
        if abs(det(self.abelianize())) != 1:
            # unreachable once the two-way check passes, but cheap and kept
            # as a sanity net for direct constructions in tests
            raise ValueError("abelianisation is not unimodular")

    @classmethod
    def identity(cls, rank: int) -> "FreeAutomorphism":
        gens = tuple((k + 1,) for k in range(rank))
        return cls(rank, gens, gens)

    @classmethod
    def from_images(
        cls,
        rank: int,
        images: Sequence[Sequence[int]],
        inverse_images: Sequence[Sequence[int]],
    ) -> "FreeAutomorphism":
        return cls(
            rank,
            tuple(reduce_letters(w, rank) for w in images),
            tuple(reduce_letters(w, rank) for w in inverse_images),
        )

    @classmethod
    def inner(cls, rank: int, w: Sequence[int]) -> "FreeAutomorphism":
        """Conjugation u -> w^-1 u w."""
        word = reduce_letters(w, rank)
        wi = invert_letters(word)
        images = tuple(concat(wi, (k + 1,), word) for k in range(rank))
        inverse_images = tuple(concat(word, (k + 1,), wi) for k in range(rank))
        return cls(rank, images, inverse_images)

    def apply(self, letters: Sequence[int]) -> Letters:
        return apply_images(self.images, letters)

    def apply_inverse(self, letters: Sequence[int]) -> Letters:
        return apply_images(self.inverse_images, letters)

    def apply_word(self, word: FreeWord) -> FreeWord:
        if word.rank != self.rank:
            raise ValueError("rank mismatch")
        return FreeWord(self.rank, self.apply(word.letters))

    def inverse(self) -> "FreeAutomorphism":
        return FreeAutomorphism(self.rank, self.inverse_images, self.images)

    def is_identity(self) -> bool:
        return all(self.images[k] == (k + 1,) for k in range(self.rank))

    def abelianize(self) -> tuple[tuple[int, ...], ...]:
        """Integer matrix with column j the exponent sums of images[j]."""
        cols = [exponent_sums(w, self.rank) for w in self.images]
        return tuple(
            tuple(cols[j][i] for j in range(self.rank)) for i in range(self.rank)
        )

    def __pow__(self, n: int) -> "FreeAutomorphism":
        result = FreeAutomorphism.identity(self.rank)
        base = self if n >= 0 else self.inverse()
        for _ in range(abs(n)):
            result = compose(base, result)
        return result


def compose(f: FreeAutomorphism, g: FreeAutomorphism) -> FreeAutomorphism:
    """The automorphism f o g (g acts first)."""
    if f.rank != g.rank:
        raise ValueError(f"rank mismatch: {f.rank} vs {g.rank}")
    images = tuple(f.apply(w) for w in g.images)
    inverse_images = tuple(g.apply_inverse(w) for w in f.inverse_images)
    return FreeAutomorphism(f.rank, images, inverse_images)
