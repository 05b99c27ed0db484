"""Surfaces with boundary, named twist-curve catalogs, and stabilisation.

Conventions, fixed once and locked by the homology outputs downstream:

* A page Sigma_{g,n} has basepoint p on the first boundary component.
  pi_1(Sigma, p) is free of rank m = 2g + n - 1 on x_1, y_1, ..., x_g,
  y_g (genus loops) and z_2, ..., z_n (one loop around each boundary
  component other than the first; the class of the first is determined,
  z_1 = -(z_2 + ... + z_n)).
* The basepoint boundary word is b_1 = [x_1,y_1]...[x_g,y_g]
  z_2^-1 ... z_n^-1 and b_i = z_i for i >= 2.
* The relative H_1(Sigma, boundary) basis is j(x_1), ..., j(y_g)
  followed by arcs A_2, ..., A_n from boundary 1 to boundary i; the
  vector slot of A_i coincides with the slot of z_i.
* A CurveConfig stores the class h = [c] and the two pairing vectors
  q_k = <basis_k, c> (absolute) and p_k = <relative basis_k, c>, plus
  optionally the exact automorphism of the positive twist about c.

The builtin catalogs cover the one- and two-boundary genus-1 pages.  The
two partition-curve automorphisms of the two-boundary page (s2, s3) and
every handedness choice were derived, not guessed: see
tools/derive_lantern_twists.py, whose output is frozen verbatim below
and re-checked by validate_catalog.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping, Sequence

from .freegroup import (
    FreeAutomorphism,
    FreeWord,
    Letters,
    apply_images,
    are_conjugate,
    compose,
    concat,
    det,
    exponent_sums,
    invert_letters,
    reduce_letters,
)
from .homology import (
    compose_linear,
    dot,
    identity_matrix,
    mat_add,
    outer,
    twist_data,
)

Vector = tuple[int, ...]


@dataclass(frozen=True)
class SurfaceSpec:
    """Signature and fixed bases of a compact surface with boundary."""

    genus: int
    boundary: int
    gen_labels: tuple[str, ...]
    rel_labels: tuple[str, ...]
    boundary_words: tuple[Letters, ...]

    def __post_init__(self) -> None:
        if self.genus < 0 or self.boundary < 1:
            raise ValueError("need genus >= 0 and at least one boundary component")
        m = self.rank
        if len(self.gen_labels) != m or len(self.rel_labels) != m:
            raise ValueError(f"expected {m} basis labels in both bases")
        if len(self.boundary_words) != self.boundary:
            raise ValueError("need one boundary word per boundary component")
        words = tuple(reduce_letters(w, m) for w in self.boundary_words)
        object.__setattr__(self, "boundary_words", words)
        total = [0] * m
        for w in words:
            for i, e in enumerate(exponent_sums(w, m)):
                total[i] += e
        if any(total):
            raise ValueError("boundary words do not abelianise to zero")

    @property
    def rank(self) -> int:
        return 2 * self.genus + self.boundary - 1

    @property
    def name(self) -> str:
        return f"sigma{self.genus}{self.boundary}"

    @classmethod
    def standard(cls, genus: int, boundary: int) -> "SurfaceSpec":
        """The spec with canonical labels and boundary words."""
        if genus == 1:
            gen = ["x", "y"]
            rel = ["jx", "jy"]
        else:
            gen = [f"{s}{k}" for k in range(1, genus + 1) for s in ("x", "y")]
            rel = [f"j{s}{k}" for k in range(1, genus + 1) for s in ("x", "y")]
        gen += [f"z{i}" for i in range(2, boundary + 1)]
        rel += [f"A{i}" for i in range(2, boundary + 1)]
        commutators = []
        for k in range(genus):
            x, y = 2 * k + 1, 2 * k + 2
            commutators += [x, y, -x, -y]
        b1 = tuple(commutators) + tuple(
            -(2 * genus + i - 1) for i in range(2, boundary + 1)
        )
        words = (b1,) + tuple(
            (2 * genus + i - 1,) for i in range(2, boundary + 1)
        )
        return cls(genus, boundary, tuple(gen), tuple(rel), words)

    def z_letter(self, i: int) -> int:
        """Generator index of the loop around boundary component i >= 2."""
        if not 2 <= i <= self.boundary:
            raise ValueError(f"no z generator for boundary component {i}")
        return 2 * self.genus + i - 1

    def boundary_free_words(self) -> tuple[FreeWord, ...]:
        return tuple(FreeWord(self.rank, w) for w in self.boundary_words)


@dataclass(frozen=True)
class CurveConfig:
    """A named simple closed curve with pairing data and, optionally,
    the exact automorphism of its positive twist."""

    name: str
    h: Vector
    q: Vector
    p: Vector
    boundary_parallel_to: int | None = None
    aut: FreeAutomorphism | None = None

    def __post_init__(self) -> None:
        if not (len(self.h) == len(self.q) == len(self.p)):
            raise ValueError(f"curve {self.name}: h, q, p lengths differ")
        if self.aut is not None and self.aut.rank != len(self.h):
            raise ValueError(f"curve {self.name}: automorphism rank mismatch")

    @property
    def rank(self) -> int:
        return len(self.h)


Catalog = dict[str, CurveConfig]


def _conjugating_aut(
    rank: int, word: Letters, moved: Sequence[int]
) -> FreeAutomorphism:
    """Conjugate the listed generators by ``word`` (u -> word^-1 u word),
    fix the rest."""
    wi = invert_letters(word)
    images = []
    inverse_images = []
    for u in range(1, rank + 1):
        if u in moved:
            images.append(concat(wi, (u,), word))
            inverse_images.append(concat(word, (u,), wi))
        else:
            images.append((u,))
            inverse_images.append((u,))
    return FreeAutomorphism(rank, tuple(images), tuple(inverse_images))


def _sigma11() -> tuple[SurfaceSpec, Catalog]:
    spec = SurfaceSpec.standard(1, 1)
    b1 = spec.boundary_words[0]
    catalog = {
        "a": CurveConfig(
            "a", (1, 0), (0, 1), (0, 1),
            aut=FreeAutomorphism.from_images(
                2, [(1,), (2, 1)], [(1,), (2, -1)]
            ),
        ),
        "b": CurveConfig(
            "b", (0, 1), (-1, 0), (-1, 0),
            aut=FreeAutomorphism.from_images(
                2, [(1, -2), (2,)], [(1, 2), (2,)]
            ),
        ),
        "d": CurveConfig(
            "d", (0, 0), (0, 0), (0, 0),
            boundary_parallel_to=1,
            aut=FreeAutomorphism.inner(2, b1),
        ),
    }
    return spec, catalog


# Frozen output of tools/derive_lantern_twists.py: the two partition
# curves of the four-holed sphere cut out by e, in the lexicographically
# least surviving convention (handedness +1, relation order g, u, w).
_S2_IMAGES = ((3, 1, -3), (3, -1, -3, 1, 2, 1, -3), (3, -1, 3, 1, -3))
_S2_INVERSE = ((1, -3, 1, 3, -1), (1, -3, -1, 3, 2, 3, -1), (1, 3, -1))
_S3_IMAGES = ((1,), (3, 2, 1), (3, 2, 1, -2, 3, 2, -1, -2, -3))
_S3_INVERSE = ((1,), (2, -1, -2, -3, 2), (2, -1, -2, 3, 2, 1, -2))


def _sigma12() -> tuple[SurfaceSpec, Catalog]:
    spec = SurfaceSpec.standard(1, 2)
    b1 = spec.boundary_words[0]          # (1, 2, -1, -2, -3)
    g_word = (1, 2, -1, -2)              # separating curve around the genus
    aut_a = FreeAutomorphism.from_images(
        3, [(1,), (2, 1), (3,)], [(1,), (2, -1), (3,)]
    )
    aut_g = _conjugating_aut(3, g_word, (1, 2))
    catalog = {
        "a": CurveConfig("a", (1, 0, 0), (0, 1, 0), (0, 1, 0), aut=aut_a),
        "b": CurveConfig(
            "b", (0, 1, 0), (-1, 0, 0), (-1, 0, 0),
            aut=FreeAutomorphism.from_images(
                3, [(1, -2), (2,), (3,)], [(1, 2), (2,), (3,)]
            ),
        ),
        "g": CurveConfig("g", (0, 0, 0), (0, 0, 0), (0, 0, 0), aut=aut_g),
        "d1": CurveConfig(
            "d1", (0, 0, -1), (0, 0, 0), (0, 0, -1),
            boundary_parallel_to=1,
            aut=FreeAutomorphism.inner(3, b1),
        ),
        "d2": CurveConfig(
            "d2", (0, 0, 1), (0, 0, 0), (0, 0, 1),
            boundary_parallel_to=2,
            aut=FreeAutomorphism.identity(3),
        ),
        # e is a parallel copy of a on the other side of the handle;
        # same class, same pairings, same action
        "e": CurveConfig("e", (1, 0, 0), (0, 1, 0), (0, 1, 0), aut=aut_a),
        # s1 is parallel to the separating curve g
        "s1": CurveConfig("s1", (0, 0, 0), (0, 0, 0), (0, 0, 0), aut=aut_g),
        "s2": CurveConfig(
            "s2", (1, 0, -1), (0, 1, 0), (0, 1, -1),
            aut=FreeAutomorphism.from_images(3, _S2_IMAGES, _S2_INVERSE),
        ),
        "s3": CurveConfig(
            "s3", (1, 0, 1), (0, 1, 0), (0, 1, 1),
            aut=FreeAutomorphism.from_images(3, _S3_IMAGES, _S3_INVERSE),
        ),
    }
    return spec, catalog


def load_builtin(name: str) -> tuple[SurfaceSpec, Catalog]:
    """The builtin surface configurations.

    ``sigma11`` is the one-holed torus with curves a, b (dual
    non-separating curves) and d (boundary-parallel).  ``sigma12`` is
    the twice-holed torus with a, b, the separating curve g, the
    boundary-parallel d1 and d2, the second non-separating curve e, and
    the lantern interior curves s1, s2, s3.
    """
    if name == "sigma11":
        return _sigma11()
    if name == "sigma12":
        return _sigma12()
    raise ValueError(f"unknown builtin surface {name!r}")


@dataclass(frozen=True)
class RelationTables:
    """Relation patterns usable as rewriting moves on a builtin catalog.

    Pairs and words refer to catalog names; all patterns were verified
    both on exact automorphisms and on linear twist data (a move must
    preserve the full mapping class, variation matrix included).
    """

    braid_pairs: tuple[tuple[str, str], ...]
    commute_pairs: tuple[tuple[str, str], ...]
    chain: tuple[tuple[str, ...], tuple[str, ...]] | None = None
    lantern: tuple[tuple[str, ...], tuple[str, ...]] | None = None

    def braids(self, u: str, v: str) -> bool:
        return (u, v) in self.braid_pairs or (v, u) in self.braid_pairs

    def commutes(self, u: str, v: str) -> bool:
        return (u, v) in self.commute_pairs or (v, u) in self.commute_pairs


_TABLES = {
    "sigma11": RelationTables(
        braid_pairs=(("a", "b"),),
        commute_pairs=(("a", "d"), ("b", "d")),
        chain=(("a", "b") * 6, ("d",)),
    ),
    "sigma12": RelationTables(
        braid_pairs=(("a", "b"), ("b", "e"), ("b", "s2"), ("b", "s3")),
        commute_pairs=(
            ("a", "g"), ("a", "d1"), ("a", "d2"), ("a", "e"),
            ("a", "s1"), ("a", "s2"), ("a", "s3"),
            ("b", "g"), ("b", "d1"), ("b", "d2"), ("b", "s1"),
            ("g", "d1"), ("g", "d2"), ("g", "e"), ("g", "s1"),
            ("d1", "d2"), ("d1", "e"), ("d1", "s1"), ("d1", "s2"),
            ("d1", "s3"),
            ("d2", "e"), ("d2", "s1"), ("d2", "s2"), ("d2", "s3"),
            ("e", "s1"), ("e", "s2"), ("e", "s3"),
        ),
        chain=(("a", "b") * 6, ("g",)),
        lantern=(("d1", "d2", "e", "e"), ("s1", "s2", "s3")),
    ),
}


def has_relation_tables(surface_name: str) -> bool:
    return surface_name in _TABLES


def relation_tables(surface_name: str) -> RelationTables:
    try:
        return _TABLES[surface_name]
    except KeyError:
        raise ValueError(
            f"no relation tables for surface {surface_name!r}; "
            "rewriting moves are configured for builtin catalogs only"
        ) from None


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failing(self) -> tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def __str__(self) -> str:
        lines = []
        for c in self.checks:
            status = "PASS" if c.passed else f"FAIL ({c.detail})"
            lines.append(f"{c.name}: {status}")
        return "\n".join(lines)


def _word_aut(catalog: Mapping[str, CurveConfig], names: Sequence[str]) -> FreeAutomorphism:
    acc = None
    for name in names:
        cfg = catalog[name]
        if cfg.aut is None:
            raise ValueError(f"missing automorphism for curve {name!r}")
        acc = cfg.aut if acc is None else compose(acc, cfg.aut)
    if acc is None:
        raise ValueError("empty relation word")
    return acc


def _word_linear(surface: SurfaceSpec, catalog, names: Sequence[str]):
    return compose_linear(
        [twist_data(catalog[n].h, catalog[n].q, catalog[n].p, surface.genus)
         for n in names]
    )


def validate_catalog(surface: SurfaceSpec, catalog: Mapping[str, CurveConfig]) -> ValidationReport:
    """Run every structural and relation check on a catalog.

    Structural checks apply to any catalog; the relation checks (braid,
    commute, chain, lantern) run against the shipped tables when the
    surface has them and are vacuous otherwise.  Raises if a curve
    referenced by a relation table has no exact automorphism.

    Boundary-word behaviour: every twist must fix the basepoint
    boundary word b_1 on the nose; for the other components only the
    free homotopy class is defined, so their words are checked up to
    conjugacy (a twist about a curve crossing the arc to boundary i
    genuinely conjugates b_i).
    """
    m = surface.rank
    checks: list[CheckResult] = []

    def add(name: str, failures: list[str]) -> None:
        checks.append(
            CheckResult(name, not failures, "; ".join(failures))
        )

    failures = []
    for key, cfg in catalog.items():
        if cfg.name != key:
            failures.append(f"catalog key {key!r} holds curve named {cfg.name!r}")
            continue
        if cfg.rank != m:
            failures.append(f"curve {key}: vectors have length {cfg.rank}, want {m}")
            continue
        if dot(cfg.q, cfg.h) != 0:
            failures.append(f"curve {key}: q . h != 0")
        jh = tuple(cfg.h[i] if i < 2 * surface.genus else 0 for i in range(m))
        if dot(cfg.p, jh) != 0:
            failures.append(f"curve {key}: p . Jh != 0")
        if cfg.boundary_parallel_to is not None and not (
            1 <= cfg.boundary_parallel_to <= surface.boundary
        ):
            failures.append(f"curve {key}: bad boundary index")
    add("structure", failures)
    if failures:
        return ValidationReport(tuple(checks))

    failures = []
    for key, cfg in catalog.items():
        if cfg.aut is None:
            continue
        expected = mat_add(identity_matrix(m), outer(cfg.h, cfg.q))
        if cfg.aut.abelianize() != expected:
            failures.append(f"curve {key}: abelianisation is not I + h q^T")
    add("transvection", failures)

    failures = []
    for key, cfg in catalog.items():
        if cfg.aut is not None and abs(det(cfg.aut.abelianize())) != 1:
            failures.append(f"curve {key}: automorphism not unimodular")
    add("unimodular", failures)

    failures = []
    for key, cfg in catalog.items():
        if all(x == 0 for x in cfg.h) and any(x != 0 for x in cfg.q):
            failures.append(f"curve {key}: null-homologous curve with q != 0")
    add("separating_q", failures)

    failures = []
    g2 = 2 * surface.genus
    for key, cfg in catalog.items():
        i = cfg.boundary_parallel_to
        if i is None:
            continue
        if i == 1:
            want_h = (0,) * g2 + (-1,) * (surface.boundary - 1)
        else:
            want_h = tuple(
                1 if j == g2 + i - 2 else 0 for j in range(m)
            )
        if cfg.h != want_h or cfg.p != want_h or any(cfg.q):
            failures.append(
                f"curve {key}: data does not match a curve parallel to boundary {i}"
            )
    add("boundary_parallel_data", failures)

    failures = []
    b1 = surface.boundary_words[0]
    for key, cfg in catalog.items():
        if cfg.aut is None:
            continue
        if cfg.aut.apply(b1) != b1:
            failures.append(f"curve {key}: does not fix the basepoint boundary word")
        for i in range(1, surface.boundary):
            bi = surface.boundary_words[i]
            if not are_conjugate(cfg.aut.apply(bi), bi):
                failures.append(
                    f"curve {key}: moves boundary word {i + 1} off its conjugacy class"
                )
    add("boundary_words", failures)

    tables = _TABLES.get(surface.name)
    braid_failures: list[str] = []
    commute_failures: list[str] = []
    chain_failures: list[str] = []
    lantern_failures: list[str] = []
    if tables is not None:
        for u, v in tables.braid_pairs:
            if abs(dot(catalog[u].q, catalog[v].h)) != 1:
                braid_failures.append(f"({u},{v}): pairing is not +-1")
                continue
            if _word_aut(catalog, (u, v, u)) != _word_aut(catalog, (v, u, v)):
                braid_failures.append(f"({u},{v}): automorphism braid identity fails")
            if _word_linear(surface, catalog, (u, v, u)) != _word_linear(
                surface, catalog, (v, u, v)
            ):
                braid_failures.append(f"({u},{v}): linear braid identity fails")
        for u, v in tables.commute_pairs:
            if dot(catalog[u].q, catalog[v].h) != 0:
                commute_failures.append(f"({u},{v}): pairing is nonzero")
                continue
            if _word_aut(catalog, (u, v)) != _word_aut(catalog, (v, u)):
                commute_failures.append(f"({u},{v}): automorphisms do not commute")
            if _word_linear(surface, catalog, (u, v)) != _word_linear(
                surface, catalog, (v, u)
            ):
                commute_failures.append(f"({u},{v}): linear data does not commute")
        if tables.chain is not None:
            lhs, rhs = tables.chain
            if _word_aut(catalog, lhs) != _word_aut(catalog, rhs):
                chain_failures.append("chain relation fails on automorphisms")
            if _word_linear(surface, catalog, lhs) != _word_linear(surface, catalog, rhs):
                chain_failures.append("chain relation fails on linear data")
        if tables.lantern is not None:
            lhs, rhs = tables.lantern
            if _word_aut(catalog, lhs) != _word_aut(catalog, rhs):
                lantern_failures.append("lantern relation fails on automorphisms")
            if _word_linear(surface, catalog, lhs) != _word_linear(surface, catalog, rhs):
                lantern_failures.append("lantern relation fails on linear data")
    add("braid", braid_failures)
    add("commute", commute_failures)
    add("chain", chain_failures)
    add("lantern", lantern_failures)

    return ValidationReport(tuple(checks))


@dataclass(frozen=True)
class StabResult:
    """Everything produced by one stabilisation.

    ``renames`` maps old curve names to new ones (curves whose
    boundary-parallel status the new handle destroyed); ``stab_curve``
    names the boundary-parallel curve whose positive twist the
    stabilisation appends; ``k_curve`` names the curve parallel to the
    boundary component that now carries the stabilised binding, which
    sits at boundary index ``k_index``.
    """

    surface: SurfaceSpec
    catalog: Catalog
    renames: dict[str, str]
    stab_curve: str
    k_curve: str
    k_index: int


def _zext_aut(aut: FreeAutomorphism, new_rank: int) -> FreeAutomorphism:
    t = new_rank
    images = tuple(aut.images) + ((t,),)
    inverse_images = tuple(aut.inverse_images) + ((t,),)
    return FreeAutomorphism(new_rank, images, inverse_images)


def _substituted_aut(
    aut: FreeAutomorphism, new_rank: int, zk: int
) -> FreeAutomorphism:
    """Rewrite an automorphism through the basis change z_K -> z_K t.

    The old loop around boundary K encircles, after the handle is
    added, both the continuation hole and the fresh one: old z_K equals
    new z_K . t.  The twist in the new basis is S o (aut * fix t) o
    S^-1 for the substitution S: z_K -> z_K t.
    """
    t = new_rank
    sub = [(u,) for u in range(1, new_rank + 1)]
    sub[zk - 1] = (zk, t)
    unsub = [(u,) for u in range(1, new_rank + 1)]
    unsub[zk - 1] = (zk, -t)
    ext_images = list(aut.images) + [(t,)]
    ext_inverse = list(aut.inverse_images) + [(t,)]

    def transport(table):
        return tuple(
            apply_images(sub, apply_images(table, apply_images(unsub, (u,))))
            for u in range(1, new_rank + 1)
        )

    return FreeAutomorphism(new_rank, transport(ext_images), transport(ext_inverse))


def stabilize(
    surface: SurfaceSpec, catalog: Mapping[str, CurveConfig], K: int
) -> StabResult:
    """Add a 1-handle across boundary component K (genus unchanged,
    one more boundary component) and return the new configuration.

    Boundary K splits in two.  For K = 1 the basepoint stays on the
    new first boundary and the binding moves to the fresh component;
    the old boundary-parallel curve survives as the curve around both
    new holes (renamed g<n+1>, or g when that lands on the builtin
    two-boundary page).  For K >= 2 the binding keeps its index, the
    fresh component carries the stabilisation curve, and retained
    automorphisms are rewritten through the basis change old z_K =
    z_K t.  Every h/q/p vector is zero-extended, with the z_K/A_K
    weight copied into the fresh slot where the splitting demands it.

    Interior curves whose class or relative pairing meets boundary K
    keep only their (corrected) linear data: their loops run through
    the modified region and no exact automorphism is derived for them.
    """
    g, n, m = surface.genus, surface.boundary, surface.rank
    if not 1 <= K <= n:
        raise ValueError(f"invalid boundary index {K} for {surface.name}")
    new_n, new_m = n + 1, m + 1
    t = new_m
    g2 = 2 * g

    def zext(v: Vector) -> Vector:
        return tuple(v) + (0,)

    def fixed_up(v: Vector, pos: int | None) -> Vector:
        out = list(v) + [0]
        if pos is not None:
            out[new_m - 1] = v[pos]
        return tuple(out)

    rename_target = "g" if new_n == 2 else f"g{new_n}"
    new_catalog: Catalog = {}
    renames: dict[str, str] = {}

    def insert(name: str, cfg: CurveConfig) -> None:
        if name in new_catalog:
            raise ValueError(f"curve name collision during stabilisation: {name!r}")
        new_catalog[name] = cfg

    if K == 1:
        old_b1 = surface.boundary_words[0]
        new_b1 = concat(old_b1, (-t,))
        new_words = (new_b1,) + surface.boundary_words[1:] + ((t,),)
        for name, cfg in catalog.items():
            if cfg.boundary_parallel_to == 1:
                renames[name] = rename_target
                aut = None
                if cfg.aut is not None:
                    # the renamed curve now bounds the piece holding the
                    # new basepoint boundary, the handle, and the fresh
                    # hole; its based word is the old b_1
                    aut = _conjugating_aut(new_m, old_b1, range(1, m + 1))
                insert(
                    rename_target,
                    CurveConfig(
                        rename_target, zext(cfg.h), zext(cfg.q), zext(cfg.p),
                        aut=aut,
                    ),
                )
            else:
                aut = _zext_aut(cfg.aut, new_m) if cfg.aut is not None else None
                insert(
                    name,
                    CurveConfig(
                        name, zext(cfg.h), zext(cfg.q), zext(cfg.p),
                        cfg.boundary_parallel_to, aut,
                    ),
                )
        para = (0,) * g2 + (-1,) * (new_n - 1)
        insert(
            "d1",
            CurveConfig(
                "d1", para, (0,) * new_m, para,
                boundary_parallel_to=1,
                aut=FreeAutomorphism.inner(new_m, new_b1),
            ),
        )
        fresh = tuple(1 if i == new_m - 1 else 0 for i in range(new_m))
        k_name = f"d{new_n}"
        insert(
            k_name,
            CurveConfig(
                k_name, fresh, (0,) * new_m, fresh,
                boundary_parallel_to=new_n,
                aut=FreeAutomorphism.identity(new_m),
            ),
        )
        stab_curve, k_curve, k_index = "d1", k_name, new_n
    else:
        zk = surface.z_letter(K)
        pos = zk - 1
        sub = [(u,) for u in range(1, new_m + 1)]
        sub[pos] = (zk, t)
        new_b1 = apply_images(sub, surface.boundary_words[0])
        new_words = (
            (new_b1,) + surface.boundary_words[1:] + ((t,),)
        )
        for name, cfg in catalog.items():
            bpt = cfg.boundary_parallel_to
            if bpt == K:
                renames[name] = rename_target
                # now the curve around the continuation hole and the
                # fresh hole; its based word is old z_K = z_K t
                aut = None
                if cfg.aut is not None:
                    aut = _conjugating_aut(new_m, (zk, t), (zk, t))
                insert(
                    rename_target,
                    CurveConfig(
                        rename_target,
                        fixed_up(cfg.h, pos), zext(cfg.q), fixed_up(cfg.p, pos),
                        aut=aut,
                    ),
                )
            elif bpt == 1:
                aut = None
                if cfg.aut is not None:
                    aut = FreeAutomorphism.inner(new_m, new_b1)
                insert(
                    name,
                    CurveConfig(
                        name,
                        fixed_up(cfg.h, pos), zext(cfg.q), fixed_up(cfg.p, pos),
                        boundary_parallel_to=1, aut=aut,
                    ),
                )
            elif bpt is not None:
                aut = _zext_aut(cfg.aut, new_m) if cfg.aut is not None else None
                insert(
                    name,
                    CurveConfig(
                        name, zext(cfg.h), zext(cfg.q), zext(cfg.p), bpt, aut
                    ),
                )
            else:
                aut = None
                if cfg.aut is not None and cfg.h[pos] == 0 and cfg.p[pos] == 0:
                    aut = _substituted_aut(cfg.aut, new_m, zk)
                insert(
                    name,
                    CurveConfig(
                        name,
                        fixed_up(cfg.h, pos), zext(cfg.q), fixed_up(cfg.p, pos),
                        aut=aut,
                    ),
                )
        cont = tuple(1 if i == pos else 0 for i in range(new_m))
        k_curve = f"d{K}"
        insert(
            k_curve,
            CurveConfig(
                k_curve, cont, (0,) * new_m, cont,
                boundary_parallel_to=K,
                aut=FreeAutomorphism.identity(new_m),
            ),
        )
        fresh = tuple(1 if i == new_m - 1 else 0 for i in range(new_m))
        stab_curve = f"d{new_n}"
        insert(
            stab_curve,
            CurveConfig(
                stab_curve, fresh, (0,) * new_m, fresh,
                boundary_parallel_to=new_n,
                aut=FreeAutomorphism.identity(new_m),
            ),
        )
        k_index = K

    new_surface = SurfaceSpec(
        g, new_n,
        surface.gen_labels + (f"z{new_n}",),
        surface.rel_labels + (f"A{new_n}",),
        new_words,
    )

    # stabilising the builtin one-holed torus reproduces the builtin
    # two-holed page; hand back its full nine-curve catalog
    if surface.name == "sigma11" and K == 1:
        spec12, cat12 = load_builtin("sigma12")
        if new_surface == spec12 and all(
            new_catalog[k] == cat12[k] for k in new_catalog
        ):
            for extra in ("e", "s1", "s2", "s3"):
                new_catalog[extra] = cat12[extra]
            new_catalog = {k: new_catalog[k] for k in cat12}

    return StabResult(
        surface=new_surface,
        catalog=new_catalog,
        renames=renames,
        stab_curve=stab_curve,
        k_curve=k_curve,
        k_index=k_index,
    )


def boundary_parallel_curve(
    catalog: Mapping[str, CurveConfig], position: int
) -> str:
    """The unique catalog curve parallel to boundary component
    ``position``; raises if there is none or more than one."""
    names = [n for n, c in catalog.items() if c.boundary_parallel_to == position]
    if len(names) != 1:
        raise ValueError(
            f"need exactly one boundary-parallel curve for component {position}"
        )
    return names[0]


def catalog_to_json(surface: SurfaceSpec, catalog: Mapping[str, CurveConfig]) -> str:
    """Serialize a surface and catalog to the documented JSON schema."""
    curves = []
    for cfg in catalog.values():
        entry: dict = {
            "name": cfg.name,
            "h": list(cfg.h),
            "q": list(cfg.q),
            "p": list(cfg.p),
        }
        if cfg.boundary_parallel_to is not None:
            entry["boundary_parallel_to"] = cfg.boundary_parallel_to
        if cfg.aut is not None:
            entry["aut"] = {
                "images": [list(w) for w in cfg.aut.images],
                "inverse_images": [list(w) for w in cfg.aut.inverse_images],
            }
        curves.append(entry)
    obj = {
        "genus": surface.genus,
        "boundary": surface.boundary,
        "boundary_words": [list(w) for w in surface.boundary_words],
        "curves": curves,
    }
    return json.dumps(obj, indent=2)


def catalog_from_json(text: str) -> tuple[SurfaceSpec, Catalog]:
    """Parse the JSON schema back into a surface and catalog.

    ``boundary_words`` may be omitted, in which case the canonical
    words of the signature are used.
    """
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(
            f"parse error at line {e.lineno}, column {e.colno}: {e.msg}"
        ) from None
    try:
        genus = int(obj["genus"])
        boundary = int(obj["boundary"])
    except (KeyError, TypeError) as e:
        raise ValueError(f"config needs integer genus and boundary: {e}") from None
    standard = SurfaceSpec.standard(genus, boundary)
    if "boundary_words" in obj:
        words = tuple(tuple(int(x) for x in w) for w in obj["boundary_words"])
        surface = SurfaceSpec(
            genus, boundary, standard.gen_labels, standard.rel_labels, words
        )
    else:
        surface = standard
    catalog: Catalog = {}
    for entry in obj.get("curves", []):
        try:
            name = entry["name"]
            h = tuple(int(x) for x in entry["h"])
            q = tuple(int(x) for x in entry["q"])
            p = tuple(int(x) for x in entry["p"])
        except (KeyError, TypeError) as e:
            raise ValueError(f"malformed curve entry: {e}") from None
        aut = None
        if "aut" in entry:
            spec = entry["aut"]
            try:
                aut = FreeAutomorphism.from_images(
                    surface.rank,
                    [tuple(int(x) for x in w) for w in spec["images"]],
                    [tuple(int(x) for x in w) for w in spec["inverse_images"]],
                )
            except (KeyError, ValueError) as e:
                raise ValueError(f"curve {name!r}: bad automorphism: {e}") from None
        if name in catalog:
            raise ValueError(f"duplicate curve name {name!r}")
        catalog[name] = CurveConfig(
            name, h, q, p, entry.get("boundary_parallel_to"), aut
        )
    return surface, catalog
