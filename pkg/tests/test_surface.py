import dataclasses
import json

import pytest

from openbook.surface import (
    boundary_parallel_curve,
    catalog_from_json,
    catalog_to_json,
    has_relation_tables,
    load_builtin,
    relation_tables,
    stabilize,
    validate_catalog,
)


def test_builtin_catalogs_validate():
    for name in ("sigma11", "sigma12"):
        spec, catalog = load_builtin(name)
        report = validate_catalog(spec, catalog)
        assert report.ok, [c.detail for c in report.checks if not c.passed]
        assert [c.name for c in report.checks] == [
            "structure",
            "transvection",
            "unimodular",
            "separating_q",
            "boundary_parallel_data",
            "boundary_words",
            "braid",
            "commute",
            "chain",
            "lantern",
        ]


def test_builtin_structure():
    spec, catalog = load_builtin("sigma11")
    assert spec.genus == 1 and spec.boundary == 1
    assert spec.gen_labels == ("x", "y")
    assert spec.boundary_words == ((1, 2, -1, -2),)
    assert sorted(catalog) == ["a", "b", "d"]

    spec, catalog = load_builtin("sigma12")
    assert spec.genus == 1 and spec.boundary == 2
    assert spec.gen_labels == ("x", "y", "z2")
    assert spec.boundary_words == ((1, 2, -1, -2, -3), (3,))
    assert sorted(catalog) == ["a", "b", "d1", "d2", "e", "g", "s1", "s2", "s3"]
    # e is a second handle over the same homology class as a
    assert catalog["e"].h == catalog["a"].h
    assert catalog["e"].aut == catalog["a"].aut

    with pytest.raises(ValueError):
        load_builtin("sigma21")


def test_validate_catches_corruption():
    spec, catalog = load_builtin("sigma12")
    bad = dict(catalog)
    bad["a"] = dataclasses.replace(catalog["a"], q=(9, 9, 9))
    report = validate_catalog(spec, bad)
    assert not report.ok
    failing = [c.name for c in report.checks if not c.passed]
    assert "structure" in failing

    bad = dict(catalog)
    # q of a separating curve must pair trivially with every h in the catalog
    bad["s1"] = dataclasses.replace(catalog["s1"], h=(1, 0, 0))
    assert not validate_catalog(spec, bad).ok


def test_relation_tables():
    tables = relation_tables("sigma12")
    assert tables.braid_pairs == (("a", "b"), ("b", "e"), ("b", "s2"), ("b", "s3"))
    assert tables.braids("a", "b") and tables.braids("b", "a")
    assert tables.braids("b", "e")
    assert not tables.braids("a", "e")
    assert tables.commutes("a", "d1") and tables.commutes("d1", "a")
    assert not tables.commutes("a", "b")
    assert tables.chain == (("a", "b") * 6, ("g",))
    assert tables.lantern == (("d1", "d2", "e", "e"), ("s1", "s2", "s3"))

    tables = relation_tables("sigma11")
    assert tables.braids("a", "b")
    assert tables.commutes("a", "d") and tables.commutes("b", "d")
    assert tables.chain == (("a", "b") * 6, ("d",))
    assert tables.lantern is None

    assert has_relation_tables("sigma11") and has_relation_tables("sigma12")
    assert not has_relation_tables("sigma13")
    with pytest.raises(ValueError):
        relation_tables("sigma13")


def test_boundary_parallel_curve():
    _, catalog = load_builtin("sigma12")
    assert boundary_parallel_curve(catalog, 1) == "d1"
    assert boundary_parallel_curve(catalog, 2) == "d2"
    with pytest.raises(ValueError):
        boundary_parallel_curve(catalog, 3)


def test_json_round_trip():
    for name in ("sigma11", "sigma12"):
        spec, catalog = load_builtin(name)
        text = catalog_to_json(spec, catalog)
        spec2, catalog2 = catalog_from_json(text)
        assert spec2 == spec and catalog2 == catalog
        assert catalog_to_json(spec2, catalog2) == text


def test_json_error_reporting():
    with pytest.raises(ValueError, match="line 1, column 13"):
        catalog_from_json('{"genus": 1,,}')

    spec, catalog = load_builtin("sigma11")
    obj = json.loads(catalog_to_json(spec, catalog))

    dup = json.loads(json.dumps(obj))
    dup["curves"].append(dict(dup["curves"][0]))
    with pytest.raises(ValueError, match="duplicate curve name 'a'"):
        catalog_from_json(json.dumps(dup))

    bad = json.loads(json.dumps(obj))
    for curve in bad["curves"]:
        if curve["name"] == "b":
            curve["aut"]["inverse_images"] = [[1, -2], [2]]
    with pytest.raises(ValueError, match="curve 'b'"):
        catalog_from_json(json.dumps(bad))

    missing = json.loads(json.dumps(obj))
    del missing["curves"][0]["q"]
    with pytest.raises(ValueError, match="malformed curve entry"):
        catalog_from_json(json.dumps(missing))


def test_stabilize_matches_builtin():
    # plumbing onto the single boundary component of sigma11 must reproduce
    # the hand-built sigma12 catalog exactly, including the frozen twist data
    spec, catalog = load_builtin("sigma11")
    result = stabilize(spec, catalog, 1)
    spec12, catalog12 = load_builtin("sigma12")
    assert result.surface == spec12
    assert result.catalog == catalog12
    assert result.renames == {"d": "g"}
    assert result.k_index == 2


def test_stabilize_second_component():
    spec, catalog = load_builtin("sigma12")
    result = stabilize(spec, catalog, 2)
    assert result.surface.genus == 1 and result.surface.boundary == 3
    assert result.surface.gen_labels == ("x", "y", "z2", "z3")
    assert result.surface.boundary_words == ((1, 2, -1, -2, -4, -3), (3,), (4,))
    assert result.renames == {"d2": "g3"}
    assert result.k_index == 2
    assert sorted(result.catalog) == [
        "a", "b", "d1", "d2", "d3", "e", "g", "g3", "s1", "s2", "s3",
    ]
    parallel = {
        n: c.boundary_parallel_to
        for n, c in result.catalog.items()
        if c.boundary_parallel_to
    }
    assert parallel == {"d1": 1, "d2": 2, "d3": 3}
    # the separating-curve automorphisms do not extend across the new handle
    assert result.catalog["s2"].aut is None
    assert result.catalog["s3"].aut is None
    assert result.catalog["a"].aut is not None
    assert validate_catalog(result.surface, result.catalog).ok


def test_stabilize_errors():
    spec, catalog = load_builtin("sigma12")
    with pytest.raises(ValueError):
        stabilize(spec, catalog, 3)
    with pytest.raises(ValueError):
        stabilize(spec, catalog, 0)
    collide = dict(catalog)
    collide["d3"] = dataclasses.replace(catalog["e"], name="d3")
    with pytest.raises(ValueError, match="collision"):
        stabilize(spec, collide, 2)
