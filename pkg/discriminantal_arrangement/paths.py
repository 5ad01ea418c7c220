# -*- coding: utf-8 -*-

from pathlib import Path

dir_here = Path(__file__).absolute().parent
dir_package = dir_here
PACKAGE_NAME = dir_package.name

dir_project_root = dir_package.parent

# ------------------------------------------------------------------------------
# Virtual Environment Related
# ------------------------------------------------------------------------------
dir_venv = dir_project_root / ".venv"
dir_venv_bin = dir_venv / "bin"

# virtualenv executable paths
bin_pytest = dir_venv_bin / "pytest"

# ------------------------------------------------------------------------------
# Test Related
# ------------------------------------------------------------------------------
dir_htmlcov = dir_project_root / "htmlcov"
path_cov_index_html = dir_htmlcov / "index.html"
dir_unit_test = dir_project_root / "tests"

# ------------------------------------------------------------------------------
# Doc Related
# ------------------------------------------------------------------------------
dir_docs_source = dir_project_root / "docs" / "source"
dir_docs_build_html = dir_project_root / "docs" / "build" / "html"

# ------------------------------------------------------------------------------
# Shipped Data Sets
# ------------------------------------------------------------------------------
dir_data = dir_package / "data"

path_two_quadrilaterals = dir_data / "two_quadrilaterals.json"
"""
Six lines whose discriminantal arrangement has exactly two quadrilateral
sets among its simple rank-3 flats.
"""

path_four_quadrilaterals = dir_data / "four_quadrilaterals.json"
"""
Six lines with four quadrilateral sets.
"""

path_eight_quadrilaterals_sqrt3 = dir_data / "eight_quadrilaterals_sqrt3.json"
"""
Six lines over ``Q(sqrt(3))`` with eight quadrilateral sets.
"""

path_seven_lines_six_triples = dir_data / "seven_lines_six_triples.json"
"""
Seven lines admitting a translate with six triple points.
"""

path_pappus_concurrent = dir_data / "pappus_concurrent.json"
path_pappus_four_collinearities = dir_data / "pappus_four_collinearities.json"
path_pappus_skew = dir_data / "pappus_skew.json"


def find_data_set(name: str) -> Path:
    """
    Resolve the ``@name`` shorthand of the command line to a shipped file.
    """
    path = dir_data / f"{name}.json"
    if path.exists() is False:
        names = sorted(p.stem for p in dir_data.glob("*.json"))
        raise FileNotFoundError(f"unknown data set {name!r}, choose from {names}")
    return path
