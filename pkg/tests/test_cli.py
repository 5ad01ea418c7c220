# -*- coding: utf-8 -*-

import json

import pytest

from discriminantal_arrangement.constants import DEFAULT_SEED
from discriminantal_arrangement.arrangement import Arrangement
from discriminantal_arrangement.paths import path_two_quadrilaterals
from discriminantal_arrangement.cli import (
    resolve_input,
    parse_chart,
    make_parser,
    run,
)

SIGMA_3 = "(1 6)(2 5)(3 4)"


@pytest.fixture(autouse=True)
def isolated_cwd(tmp_path, monkeypatch):
    # keep Config.find() away from any discrim.toml of the caller
    monkeypatch.chdir(tmp_path)


def invoke(capsys, *argv: str) -> tuple[int, dict]:
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out else {}


def test_helpers():
    assert resolve_input("@two_quadrilaterals") == path_two_quadrilaterals
    assert str(resolve_input("a.json")) == "a.json"
    assert parse_chart(None) is None
    assert parse_chart("0, 0, 2").to_list() == ["0", "0", "1"]
    try:
        parse_chart("1,2")
        assert False, "Should have raised ValueError"
    except ValueError:
        pass


def test_parser():
    args = make_parser().parse_args(["lattice", "@two_quadrilaterals", "--max-rank", "2", "--seed", "3"])
    assert args.command == "lattice"
    assert args.max_rank == 2
    assert args.seed == 3
    assert args.verbose is None

    with pytest.raises(SystemExit):
        make_parser().parse_args(["--version"])
    with pytest.raises(SystemExit):
        make_parser().parse_args(["no-such-verb", "x"])


def test_check_generic(capsys, tmp_path):
    code, report = invoke(capsys, "check-generic", "@two_quadrilaterals")
    assert code == 0
    assert report["command"] == "check-generic"
    assert report["seed"] == DEFAULT_SEED
    assert report["result"] == {"generic": True, "n": 6, "k": 2}
    assert report["input_sha256"] == Arrangement.load(path_two_quadrilaterals).canonical_hash()

    parallel = tmp_path / "parallel.json"
    Arrangement.new(normals=[(1, 0), (2, 0), (1, 1)], offsets=[0, 1, 2]).dump(parallel)
    code, error = invoke(capsys, "check-generic", str(parallel))
    assert code == 2
    assert error["error"] == "not-generic"
    assert error["details"]["K"] == [1, 2]


def test_internal_error(capsys):
    code = run(["build", "does_not_exist.json"])
    captured = capsys.readouterr()
    assert code == 1
    assert captured.out == ""
    assert "FileNotFoundError" in captured.err


def test_build_and_lattice(capsys):
    code, report = invoke(capsys, "build", "@two_quadrilaterals")
    assert code == 0
    assert report["result"]["rank"] == 4
    assert len(report["result"]["hyperplanes"]) == 20

    code, report = invoke(capsys, "lattice", "@two_quadrilaterals", "--max-rank", "2")
    assert code == 0
    assert report["result"]["ranks"]["2"]["census"] == {"2": 100, "4": 15}
    assert "3" not in report["result"]["ranks"]


def test_very_generic_and_qsets(capsys):
    code, report = invoke(capsys, "very-generic", "@four_quadrilaterals", "--max-rank", "3")
    assert code == 0
    assert report["result"]["very_generic_up_to_r_max"] is False
    assert len(report["result"]["witnesses"]) == 4

    code, report = invoke(capsys, "qsets", "@two_quadrilaterals", "--seed", "5")
    assert code == 0
    assert report["seed"] == 5
    assert report["result"]["count"] == 2
    for q in report["result"]["quadrilateral_sets"]:
        assert q["stats"]["t"] == {"2": 3, "3": 4}


def test_out_is_deterministic(capsys, tmp_path):
    first = tmp_path / "out" / "a.json"
    second = tmp_path / "out" / "b.json"
    assert run(["qsets", "@two_quadrilaterals", "--out", str(first)]) == 0
    assert run(["qsets", "@two_quadrilaterals", "--out", str(second)]) == 0
    assert capsys.readouterr().out == ""
    assert first.read_bytes() == second.read_bytes()


def test_config_file(capsys, tmp_path):
    path = tmp_path / "custom.toml"
    path.write_text("[tool.discrim]\nseed = 42\n", encoding="utf-8")
    code, report = invoke(capsys, "check-generic", "@two_quadrilaterals", "--config", str(path))
    assert code == 0
    assert report["seed"] == 42


def test_orchard(capsys, tmp_path):
    code, report = invoke(capsys, "orchard", "@two_quadrilaterals")
    assert code == 0
    assert report["result"]["m_max"] == 4
    assert len(report["result"]["witnesses"]) == 2

    path = tmp_path / "small.toml"
    path.write_text("[tool.discrim]\norchard_max_n = 6\n", encoding="utf-8")
    code, error = invoke(capsys, "orchard", "@seven_lines_six_triples", "--config", str(path))
    assert code == 2
    assert error["error"] == "precondition"
    assert error["details"] == {"n": 7, "max_n": 6}


def test_sigma_complete_and_certify(capsys, tmp_path):
    code, report = invoke(capsys, "sigma-complete", "@pappus_four_collinearities")
    assert code == 0
    assert report["result"]["strong_involutions"] == [SIGMA_3]

    path = tmp_path / "completion.json"
    code = run(["sigma-complete", "@pappus_four_collinearities", "--sigma", SIGMA_3, "--out", str(path)])
    assert code == 0
    assert json.loads(path.read_text())["result"]["sigma"] == [[1, 6], [2, 5], [3, 4]]

    code, report = invoke(
        capsys, "certify-union", "@pappus_four_collinearities", "--completion", str(path)
    )
    assert code == 0
    assert report["result"]["min_ordinary"] is True
    assert report["result"]["completion_central"] is True

    code, report = invoke(capsys, "certify-union", "@pappus_four_collinearities", "--sigma", SIGMA_3)
    assert code == 0
    assert report["result"]["min_ordinary"] is True
    assert report["result"]["stats"]["t"] == {"2": 6, "3": 15, "6": 1}

    code, error = invoke(capsys, "sigma-complete", "@pappus_four_collinearities", "--sigma", "(1 2)(3 5)(4 6)")
    assert code == 2
    assert error["error"] == "not-strong"


def test_bad_sigma(capsys):
    for text in ["(1 7)", "garbage", "(1 2)(2 3)"]:
        code, error = invoke(capsys, "certify-union", "@pappus_four_collinearities", "--sigma", text)
        assert code == 2
        assert error["error"] == "bad-involution"

    code, error = invoke(capsys, "certify-union", "@pappus_four_collinearities", "--sigma", "(1 7)")
    assert error["details"] == {"transposition": [1, 7], "n": 6}

    code, error = invoke(capsys, "conjecture", "@pappus_concurrent", "--sigma", "garbage")
    assert code == 2
    assert error["details"] == {"text": "garbage"}

    code, error = invoke(capsys, "certify-union", "@pappus_four_collinearities")
    assert code == 2
    assert error["error"] == "precondition"
    assert error["details"] == {"option": "--sigma"}


def test_conjecture(capsys):
    code, report = invoke(capsys, "conjecture", "@pappus_concurrent")
    assert code == 0
    reports = report["result"]["reports"]
    assert len(reports) == 3
    for item in reports:
        assert item["clause_1"]["agree"] is True
        assert item["clause_2"]["agree"] is True

    code, report = invoke(capsys, "conjecture", "@pappus_four_collinearities", "--sigma", "(1 2)(3 5)(4 6)")
    assert code == 0
    assert report["result"]["reports"][0]["completion_error"] == "not-strong"


def test_pappus(capsys):
    code, report = invoke(capsys, "pappus", "--make", "pc")
    assert code == 0
    runs = report["result"]["runs"]
    assert [r["sigma"] for r in runs] == [SIGMA_3]
    assert runs[0]["certificate"]["min_ordinary"] is True

    code, report = invoke(capsys, "pappus", "@pappus_concurrent", "--sigma", SIGMA_3)
    assert code == 0
    assert report["result"]["params"]["b"] == ["1", "-1", "-1/2"]
    assert report["result"]["runs"][0]["certificate"]["max_triple"] is True

    code, report = invoke(capsys, "pappus", "--make", "p", "--tune", "b3")
    assert code == 0
    assert report["result"]["params"]["b"][2] == "-1/2"

    # neither an input nor --make
    code, error = invoke(capsys, "pappus")
    assert code == 2
    assert error["error"] == "precondition"
    assert error["details"] == {"option": "--make"}

    code, error = invoke(capsys, "pappus", "@two_quadrilaterals")
    assert code == 2
    assert error["error"] == "precondition"
    assert error["details"] == {"input": "@two_quadrilaterals"}


def test_stats_and_render(capsys, tmp_path):
    code, report = invoke(capsys, "stats", "@pappus_skew")
    assert code == 0
    assert report["result"]["t"] == {"2": 15}
    assert len(report["result"]["collinearities"]) == 3

    code, report = invoke(capsys, "stats", "@pappus_skew", "--chart", "1,7,13")
    assert code == 0
    assert report["result"]["t"] == {"2": 15}
    assert len(report["result"]["collinearities"]) == 3

    svg = tmp_path / "skew.svg"
    code, report = invoke(capsys, "render", "@pappus_skew", "--svg", str(svg))
    assert code == 0
    assert svg.exists()
    assert report["result"]["svg"] == str(svg)

    code, error = invoke(capsys, "render", "@pappus_skew")
    assert code == 2
    assert error["details"] == {"option": "--svg"}

    # l3 of two_quadrilaterals is 6 y = 3
    code, error = invoke(capsys, "stats", "@two_quadrilaterals", "--chart", "0,6,-3")
    assert code == 2
    assert error["error"] == "precondition"
    assert error["details"] == {"chart": ["0", "2", "-1"]}

    code, error = invoke(capsys, "stats", "@pappus_skew", "--chart", "1,7")
    assert code == 2
    assert error["details"] == {"chart": "1,7"}


if __name__ == "__main__":
    from discriminantal_arrangement.tests import run_cov_test

    run_cov_test(
        __file__,
        "discriminantal_arrangement.cli",
        preview=False,
    )
