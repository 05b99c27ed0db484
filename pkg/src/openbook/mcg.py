"""Twist words and their mapping classes.

A twist word is a finite product of (powers of) Dehn twists about
catalog curves; the rightmost letter acts first, matching functional
composition.  Evaluating a word yields both the exact automorphism of
pi_1 induced on the page (when every curve in the word carries one) and
the linear (M, R, D) data, which always exists.

Equality of mapping classes is decided on the pair (exact
automorphism, deviation matrix D).  The automorphism alone is not
faithful on a page with several boundary components: a twist about a
curve parallel to a non-basepoint boundary component acts trivially on
pi_1 (its based representative can be pushed off every generator), yet
is a nontrivial mapping class.  D separates exactly those twists - its
arc columns record them - so the pair is a complete invariant for the
boundary-fixing mapping class group.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .freegroup import FreeAutomorphism, compose
from .homology import (
    LinearTwistData,
    compose_linear,
    identity_linear,
    invert_linear,
    twist_data,
)
from .surface import CurveConfig, SurfaceSpec, relation_tables

_TOKEN = re.compile(r"^([A-Za-z][A-Za-z0-9]*)(?:\^(-?\d+))?$")

Entries = tuple[tuple[str, int], ...]


def _normalize(entries: Iterable[tuple[str, int]]) -> Entries:
    out: list[tuple[str, int]] = []
    for name, exp in entries:
        if exp == 0:
            continue
        if out and out[-1][0] == name:
            merged = out[-1][1] + exp
            out.pop()
            if merged:
                out.append((name, merged))
        else:
            out.append((name, exp))
    return tuple(out)


@dataclass(frozen=True)
class TwistWord:
    """A normalized word in the twists of a surface catalog."""

    surface: SurfaceSpec
    catalog: Mapping[str, CurveConfig]
    entries: Entries

    def __post_init__(self) -> None:
        entries = _normalize(self.entries)
        for name, exp in entries:
            if name not in self.catalog:
                raise ValueError(f"unknown curve {name!r} in word")
            if not isinstance(exp, int):
                raise ValueError(f"exponent of {name} must be an integer")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def parse(
        cls,
        surface: SurfaceSpec,
        catalog: Mapping[str, CurveConfig],
        text: str,
    ) -> "TwistWord":
        """Parse the word grammar: TOKEN := NAME | NAME^INT, whitespace
        separated; e.g. "a b g^-1 d1 d2^4"."""
        entries = []
        for token in text.split():
            match = _TOKEN.match(token)
            if match is None:
                raise ValueError(f"bad token {token!r} in word")
            name, exp = match.group(1), match.group(2)
            entries.append((name, int(exp) if exp is not None else 1))
        return cls(surface, catalog, tuple(entries))

    def render(self) -> str:
        parts = [
            name if exp == 1 else f"{name}^{exp}" for name, exp in self.entries
        ]
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def expanded(self) -> Entries:
        """The word as single-exponent letters (name, +-1)."""
        out: list[tuple[str, int]] = []
        for name, exp in self.entries:
            sign = 1 if exp > 0 else -1
            out.extend((name, sign) for _ in range(abs(exp)))
        return tuple(out)

    @property
    def length(self) -> int:
        return sum(abs(e) for _, e in self.entries)

    def is_positive(self) -> bool:
        return all(e > 0 for _, e in self.entries)

    def append(self, name: str, exp: int) -> "TwistWord":
        return TwistWord(self.surface, self.catalog, self.entries + ((name, exp),))

    def __mul__(self, other: "TwistWord") -> "TwistWord":
        if self.surface != other.surface:
            raise ValueError("words live on different surfaces")
        return TwistWord(self.surface, self.catalog, self.entries + other.entries)

    def inverse(self) -> "TwistWord":
        return TwistWord(
            self.surface,
            self.catalog,
            tuple((n, -e) for n, e in reversed(self.entries)),
        )


@dataclass(frozen=True)
class MappingClass:
    """The result of evaluating a twist word.

    ``exact`` is None when some curve in the word had no automorphism;
    the linear data alone is then a necessary invariant only, and
    equality tests refuse to run on it.
    """

    surface: SurfaceSpec
    exact: FreeAutomorphism | None
    linear: LinearTwistData

    @property
    def M(self):
        return self.linear.M

    @property
    def R(self):
        return self.linear.R

    @property
    def D(self):
        return self.linear.D

    @property
    def linear_only(self) -> bool:
        return self.exact is None


def identity_class(surface: SurfaceSpec) -> MappingClass:
    return MappingClass(
        surface,
        FreeAutomorphism.identity(surface.rank),
        identity_linear(surface.rank),
    )


def evaluate(word: TwistWord) -> MappingClass:
    """Compose the twists of a word, rightmost letter acting first."""
    surface = word.surface
    exact: FreeAutomorphism | None = FreeAutomorphism.identity(surface.rank)
    linear = identity_linear(surface.rank)
    for name, exp in word.entries:
        cfg = word.catalog[name]
        item = twist_data(cfg.h, cfg.q, cfg.p, surface.genus, exp)
        linear = compose_linear([linear, item])
        if exact is not None:
            exact = compose(exact, cfg.aut ** exp) if cfg.aut else None
    return MappingClass(surface, exact, linear)


def compose_classes(a: MappingClass, b: MappingClass) -> MappingClass:
    """The class of the concatenated word (b's word acting first)."""
    if a.surface != b.surface:
        raise ValueError("classes live on different surfaces")
    exact = None
    if a.exact is not None and b.exact is not None:
        exact = compose(a.exact, b.exact)
    return MappingClass(a.surface, exact, compose_linear([a.linear, b.linear]))


def invert_class(a: MappingClass) -> MappingClass:
    exact = a.exact.inverse() if a.exact is not None else None
    return MappingClass(a.surface, exact, invert_linear(a.linear))


def equal_classes(a: MappingClass, b: MappingClass) -> bool:
    """Exact equality of mapping classes.

    Compares the pi_1 automorphism together with the deviation matrix
    D; see the module docstring for why both are needed.
    """
    if a.surface != b.surface:
        raise ValueError("cannot compare classes on different surfaces")
    if a.linear_only or b.linear_only:
        raise ValueError(
            "equality undecidable from linear data alone; "
            "the word involves a curve without an exact automorphism"
        )
    return a.exact == b.exact and a.D == b.D


def _boundary_parallel_names(
    catalog: Mapping[str, CurveConfig], i: int
) -> tuple[str, ...]:
    names = tuple(
        name for name, cfg in catalog.items() if cfg.boundary_parallel_to == i
    )
    if not names:
        raise ValueError(f"no boundary-parallel curve for component {i} in catalog")
    return names


def boundary_exponent_delta(word: TwistWord, i: int, j: int) -> int:
    """Total signed exponent of twists parallel to boundary i minus the
    same count for boundary j.

    For words equal as mapping classes this difference agrees; it is the
    obstruction invariant that drives the positive-factorisation bound.
    """
    names_i = set(_boundary_parallel_names(word.catalog, i))
    names_j = set(_boundary_parallel_names(word.catalog, j))
    count_i = sum(e for n, e in word.entries if n in names_i)
    count_j = sum(e for n, e in word.entries if n in names_j)
    return count_i - count_j


_MOVES = ("braid", "commute", "chain", "lantern", "insert_cancel")


def apply_relation(
    word: TwistWord,
    move: str,
    position: int,
    direction: str = "forward",
    curve: str | None = None,
) -> TwistWord:
    """Rewrite a word by one relation move at a position.

    Positions index the exponent-expanded letter sequence.  Patterns
    come from the relation tables of the word's surface; the rewritten
    word evaluates to the same mapping class.

    ``insert_cancel`` inserts a cancelling twist pair (the ``curve``
    argument names it).  Because words are kept normalized, the pair
    merges away immediately; the move exists for completeness of the
    relation set and always returns a word equal to the input.
    """
    if move not in _MOVES:
        raise ValueError(f"unknown move {move!r}")
    if direction not in ("forward", "backward"):
        raise ValueError(f"unknown direction {direction!r}")
    tables = relation_tables(word.surface.name)
    exp = list(word.expanded())

    def fail() -> ValueError:
        return ValueError(f"{move} pattern does not match at position {position}")

    if move == "insert_cancel":
        if direction == "forward":
            if curve is None or curve not in word.catalog:
                raise ValueError("insert_cancel needs a catalog curve name")
            if not 0 <= position <= len(exp):
                raise fail()
            exp[position:position] = [(curve, 1), (curve, -1)]
        else:
            if not (
                0 <= position <= len(exp) - 2
                and exp[position][0] == exp[position + 1][0]
                and exp[position][1] == -exp[position + 1][1]
            ):
                raise fail()
            del exp[position:position + 2]
        return TwistWord(word.surface, word.catalog, tuple(exp))

    if move == "braid":
        if not 0 <= position <= len(exp) - 3:
            raise fail()
        (u, eu), (v, ev), (u2, eu2) = exp[position:position + 3]
        if not (
            u == u2 and eu == ev == eu2 == 1 and u != v and tables.braids(u, v)
        ):
            raise fail()
        exp[position:position + 3] = [(v, 1), (u, 1), (v, 1)]
        return TwistWord(word.surface, word.catalog, tuple(exp))

    if move == "commute":
        if not 0 <= position <= len(exp) - 2:
            raise fail()
        (u, eu), (v, ev) = exp[position:position + 2]
        if u == v or not tables.commutes(u, v):
            raise fail()
        exp[position:position + 2] = [(v, ev), (u, eu)]
        return TwistWord(word.surface, word.catalog, tuple(exp))

    # chain and lantern: replace one side of the stored identity by the other
    pattern = tables.chain if move == "chain" else tables.lantern
    if pattern is None:
        raise ValueError(f"surface {word.surface.name} has no {move} relation")
    lhs, rhs = pattern
    src, dst = (lhs, rhs) if direction == "forward" else (rhs, lhs)
    src_letters = [(n, 1) for n in src]
    if not (
        0 <= position <= len(exp) - len(src_letters)
        and exp[position:position + len(src_letters)] == src_letters
    ):
        raise fail()
    exp[position:position + len(src_letters)] = [(n, 1) for n in dst]
    return TwistWord(word.surface, word.catalog, tuple(exp))


def applicable_moves(word: TwistWord) -> tuple[tuple[str, int, str], ...]:
    """All (move, position, direction) triples that apply_relation would
    accept on this word, in deterministic order.  insert_cancel is
    omitted (it applies everywhere and rewrites nothing)."""
    tables = relation_tables(word.surface.name)
    exp = word.expanded()
    found: list[tuple[str, int, str]] = []
    for i in range(len(exp) - 2):
        (u, eu), (v, ev), (u2, eu2) = exp[i:i + 3]
        if u == u2 and u != v and eu == ev == eu2 == 1 and tables.braids(u, v):
            found.append(("braid", i, "forward"))
    for i in range(len(exp) - 1):
        (u, _), (v, _) = exp[i:i + 2]
        if u != v and tables.commutes(u, v):
            found.append(("commute", i, "forward"))
    for move, pattern in (("chain", tables.chain), ("lantern", tables.lantern)):
        if pattern is None:
            continue
        lhs, rhs = pattern
        for direction, src in (("forward", lhs), ("backward", rhs)):
            src_letters = tuple((n, 1) for n in src)
            for i in range(len(exp) - len(src_letters) + 1):
                if exp[i:i + len(src_letters)] == src_letters:
                    found.append((move, i, direction))
    return tuple(found)


def rename_word(
    word: TwistWord,
    surface: SurfaceSpec,
    catalog: Mapping[str, CurveConfig],
    renames: Mapping[str, str],
) -> TwistWord:
    """Carry a word onto a stabilised surface, applying curve renames."""
    entries = tuple((renames.get(n, n), e) for n, e in word.entries)
    return TwistWord(surface, catalog, entries)
