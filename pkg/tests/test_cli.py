import json
import subprocess
import sys

import pytest

from openbook.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cf(capsys):
    code, out, err = run(capsys, "cf", "-5/4")
    assert (code, out, err) == (0, "[-3+1, -2, -2, -2]^-\n", "")
    code, out, _ = run(capsys, "cf", "-5/4", "--json")
    assert code == 0
    assert json.loads(out) == {
        "entries": [-2, -2, -2, -2],
        "display": "[-3+1, -2, -2, -2]^-",
    }
    code, _, err = run(capsys, "cf", "-1/2")
    assert code == 1 and err.startswith("error: ")
    code, _, err = run(capsys, "cf", "nope")
    assert code == 1 and "bad surgery coefficient" in err
    code, _, err = run(capsys, "cf")
    assert code == 1 and "positional" in err


def test_surgery(capsys):
    code, out, err = run(
        capsys,
        "surgery", "--surface", "sigma11", "--word", "a b",
        "--K", "1", "--r", "5", "--n", "1",
    )
    assert code == 0 and err == ""
    assert out == "surface: sigma12\nword: a b g^-1 d1 d2^4\n"

    code, out, _ = run(
        capsys,
        "surgery", "--surface", "sigma11", "--word", "a b",
        "--K", "1", "--r", "-7/2", "--json",
    )
    assert code == 0
    assert json.loads(out) == {
        "surface": "sigma14",
        "word": "a b d1 d3 d4 d2^2",
        "bindings": ["2", "1", "3", "4"],
    }

    code, _, err = run(capsys, "surgery", "--surface", "sigma11", "--word", "a b", "--r", "5")
    assert code == 1 and "surgery needs --K and --r" in err
    code, _, err = run(
        capsys,
        "surgery", "--surface", "sigma11", "--word", "a b", "--K", "1", "--r", "-1/2",
    )
    assert code == 1 and "is in [-1, 0]" in err


def test_h1(capsys):
    code, out, _ = run(capsys, "h1", "--surface", "sigma12", "--word", "a b g^-1 d1 d2^4")
    assert (code, out) == (0, "H1: Z/5\n")
    code, out, _ = run(capsys, "h1", "--surface", "sigma11", "--word", "a b")
    assert (code, out) == (0, "H1: 0\n")
    code, out, _ = run(capsys, "h1", "--surface", "sigma11", "--word", "", "--json")
    assert code == 0 and json.loads(out) == {"h1": "Z + Z"}


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "--surface", "sigma11", "--word", "a b")
    assert code == 0
    assert out == "x -> y^-1\ny -> y x\nD:\n-1 1\n-1 0\n"
    code, out, _ = run(capsys, "eval", "--surface", "sigma11", "--word", "a b", "--json")
    payload = json.loads(out)
    assert payload == {
        "linear_only": False,
        "images": [[-2], [2, 1]],
        "M": [[0, 1], [-1, 1]],
        "D": [[-1, 1], [-1, 0]],
    }


def test_equal(capsys):
    code, out, _ = run(
        capsys, "equal", "--surface", "sigma11", "--word1", "a b a", "--word2", "b a b"
    )
    assert (code, out) == (0, "equal: true\n")
    code, out, _ = run(
        capsys,
        "equal", "--surface", "sigma12",
        "--word1", "a b g^-1 d1 d2^4", "--word2", "a b g^-1 d1 d2^5",
    )
    assert (code, out) == (0, "equal: false\n")
    code, out, _ = run(
        capsys, "equal", "--surface", "sigma11", "--word1", "", "--word2", "", "--json"
    )
    assert code == 0 and json.loads(out) == {"equal": True}


def test_search_found(capsys):
    code, out, _ = run(
        capsys,
        "search", "--surface", "sigma12", "--target", "d1 d2 e^2",
        "--alphabet", "s1,s2,s3", "--max-length", "3",
    )
    assert (code, out) == (0, "found: s1 s2 s3\n")


def test_search_exhausted(capsys):
    code, out, _ = run(
        capsys,
        "search", "--surface", "sigma11", "--target", "d",
        "--alphabet", "a,b", "--max-length", "3",
    )
    assert code == 2
    assert out.splitlines() == [
        "exhausted: no positive factorisation up to length 3",
        "alphabet: a b",
        "nodes: 22",
        "pruned mandatory: 0",
        "pruned homology: 2",
        "pruned memo: 0",
        "pruned canonical: 0",
        "pruned infeasible: 0",
        "mode: iddfs",
    ]
    code, out, _ = run(
        capsys,
        "search", "--surface", "sigma11", "--target", "d",
        "--alphabet", "a,b", "--max-length", "3", "--json",
    )
    assert code == 2
    payload = json.loads(out)
    assert payload["exhausted"] is True
    assert payload["nodes"] == 22
    assert payload["prunes"]["homology"] == 2
    # switching the pruning off still exhausts, over strictly more nodes
    code, out, _ = run(
        capsys,
        "search", "--surface", "sigma11", "--target", "d",
        "--alphabet", "a,b", "--max-length", "3", "--json", "--no-prune",
    )
    assert code == 2
    assert json.loads(out)["nodes"] > payload["nodes"]


def test_search_peel(capsys):
    code, out, _ = run(
        capsys,
        "search", "--surface", "sigma12", "--target", "a b g^-1 d1 d2^4",
        "--alphabet", "s1,s2,s3", "--max-length", "2", "--peel",
    )
    assert code == 2
    lines = out.splitlines()
    assert lines[0] == "mandatory d2: 3"
    assert lines[1] == "exhausted: no positive factorisation up to length 2"
    assert "nodes: 0" in lines
    assert "pruned infeasible: 1" in lines


def test_seifert(capsys):
    code, out, _ = run(capsys, "seifert", "--e0", "-1", "--rs", "1/2,1/3,1/4")
    assert code == 0
    assert out == (
        "components: c0 c1 c2 c3\n"
        "coefficients: -1 -2 -3 -4\n"
        "linking: c0-c1:1 c0-c2:1 c0-c3:1\n"
        "H1: Z/2\n"
    )
    code, _, err = run(capsys, "seifert", "--e0", "-1")
    assert code == 1 and "needs --e0 and --rs" in err


def test_kirby(capsys):
    code, out, _ = run(
        capsys, "kirby", "--coefficients", "2,-1", "--link", "1-2:3", "--blow-down", "2"
    )
    assert code == 0
    assert out == "components: 1\ncoefficients: 11\nH1: Z/11\n"
    code, out, _ = run(
        capsys, "kirby", "--coefficients", "2,-1", "--link", "1-2:3", "--json"
    )
    assert code == 0
    assert json.loads(out) == {
        "components": ["1", "2"],
        "coefficients": ["2", "-1"],
        "linking": {"1-2": 3},
        "h1": "Z/11",
    }
    code, _, err = run(capsys, "kirby", "--coefficients", "2,x")
    assert code == 1 and "bad surgery coefficient" in err


def test_validate(capsys):
    code, out, _ = run(capsys, "validate", "--surface", "sigma12")
    assert code == 0
    assert all(line.endswith(": PASS") for line in out.splitlines())
    assert len(out.splitlines()) == 10


def test_config_files(tmp_path, capsys):
    code, out, _ = run(capsys, "validate", "--surface", "sigma11", "--json")
    # regenerate the same catalog through a config file
    from openbook.surface import catalog_to_json, load_builtin

    spec, catalog = load_builtin("sigma11")
    path = tmp_path / "surface.json"
    path.write_text(catalog_to_json(spec, catalog))
    code, out, _ = run(capsys, "h1", "--config", str(path), "--word", "a b")
    assert (code, out) == (0, "H1: 0\n")

    path.write_text('{"genus": 1,,}')
    code, _, err = run(capsys, "h1", "--config", str(path), "--word", "a b")
    assert code == 1 and "line 1, column 13" in err

    code, _, err = run(capsys, "h1", "--word", "a b")
    assert code == 1 and "exactly one of --surface and --config" in err
    code, _, err = run(
        capsys, "h1", "--surface", "sigma11", "--config", str(path), "--word", "a"
    )
    assert code == 1 and "exactly one of --surface and --config" in err


def test_help_and_unknown(capsys):
    code, _, err = run(capsys)
    assert code == 1 and "Subcommands:" in err
    code, _, err = run(capsys, "-h")
    assert code == 0 and "Exit codes:" in err
    code, _, err = run(capsys, "bogus")
    assert code == 1 and err == "error: unknown subcommand 'bogus'\n"
    code, _, err = run(capsys, "cf", "-5/4", "--frobnicate")
    assert code == 1 and "unknown flag" in err


def test_installed_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "openbook.cli", "cf", "-5/4"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "[-3+1, -2, -2, -2]^-\n"
