# -*- coding: utf-8 -*-

"""
Run one test script (or the whole test folder) from its ``__main__`` block,
optionally with a coverage report scoped to the module under test.
"""

import subprocess
from pathlib import Path

import pytest

from ..paths import dir_project_root, dir_htmlcov


def run_unit_test(
    script: str,
):
    pytest.main(["-s", "--tb=native", script])


def run_cov_test(
    script: str,
    module: str,
    preview: bool = False,
    is_folder: bool = False,
):
    """
    :param script: the test file, usually ``__file__``
    :param module: dotted name of the code under test
    :param preview: open the html report when done
    :param is_folder: test the folder of ``script`` instead of the file
    """
    target = Path(script).parent if is_folder else Path(script)
    args = [
        "-s",
        "--tb=native",
        f"--rootdir={dir_project_root}",
        f"--cov={module}",
        "--cov-report",
        "term-missing",
        "--cov-report",
        f"html:{dir_htmlcov}",
        f"{target}",
    ]
    pytest.main(args)
    if preview:  # pragma: no cover
        subprocess.run(["open", f"{dir_htmlcov / 'index.html'}"])
