# -*- coding: utf-8 -*-

from discriminantal_arrangement.constants import DEFAULT_SEED, ORCHARD_MAX_N
from discriminantal_arrangement.config import Config


def test_defaults():
    config = Config()
    assert config.seed == DEFAULT_SEED
    assert config.max_rank is None
    assert config.orchard_max_n == ORCHARD_MAX_N
    assert config.verbose is False


def test_from_toml_dict():
    config = Config.from_toml_dict({"tool": {"discrim": {"seed": 7, "max_rank": 3}}})
    assert config.seed == 7
    assert config.max_rank == 3

    # other tables are ignored
    assert Config.from_toml_dict({"project": {"name": "x"}}) == Config()

    try:
        Config.from_toml_dict({"tool": {"discrim": {"sed": 7}}})
        assert False, "Should have raised ValueError"
    except ValueError as e:
        assert "sed" in str(e)


def test_load_and_find(tmp_path):
    assert Config.find(tmp_path) == Config()

    (tmp_path / "pyproject.toml").write_text(
        '[project]\nname = "x"\n\n[tool.discrim]\nseed = 11\n',
        encoding="utf-8",
    )
    assert Config.find(tmp_path).seed == 11

    # discrim.toml wins over pyproject.toml
    (tmp_path / "discrim.toml").write_text(
        "[tool.discrim]\nseed = 5\nverbose = true\n",
        encoding="utf-8",
    )
    config = Config.find(tmp_path)
    assert config.seed == 5
    assert config.verbose is True
    assert Config.load(tmp_path / "pyproject.toml").seed == 11


def test_override():
    config = Config(seed=5)
    assert config.override(seed=None, max_rank=2) == Config(seed=5, max_rank=2)
    assert config.override(seed=9).seed == 9
    assert config.override() == config


if __name__ == "__main__":
    from discriminantal_arrangement.tests import run_cov_test

    run_cov_test(
        __file__,
        "discriminantal_arrangement.config",
        preview=False,
    )
