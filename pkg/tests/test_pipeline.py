# -*- coding: utf-8 -*-

from discriminantal_arrangement.constants import PappusKindEnum
from discriminantal_arrangement.completion.involution import Involution
from discriminantal_arrangement.completion.pappus import PAPPUS_INSTANCES, PappusParams
from discriminantal_arrangement.completion.pipeline import PappusPipeline


def test_pipeline_concurrent():
    lines = []
    report = PappusPipeline(
        params=PAPPUS_INSTANCES[PappusKindEnum.p].replace("b3", 7),
        tune=("b3",),
        verbose=True,
        printer=lines.append,
    ).run()
    assert report.params == PAPPUS_INSTANCES[PappusKindEnum.p]
    assert [c.name for c in report.collinearities] == ["12 34 56", "13 25 46", "16 24 35"]
    assert len(report.runs) == 3
    for run in report.runs:
        assert run.error is None
        assert run.certificate.stats.t == {2: 9, 3: 19}
        assert run.certificate.max_triple is True
    for step in range(1, 7):
        assert any(line.startswith(f"--- Step {step} - ") for line in lines)
    data = report.to_dict()
    assert data["params"]["b"] == ["1", "-1", "-1/2"]
    assert len(data["runs"]) == 3


def test_pipeline_four_collinearities():
    report = PappusPipeline(
        params=PappusParams(a=(1, 5, "-1/2"), b=(1, 3, 7)),
        tune=("a2", "b3"),
    ).run()
    assert report.params == PAPPUS_INSTANCES[PappusKindEnum.pc]
    assert len(report.collinearities) == 4
    assert [str(run.sigma) for run in report.runs] == ["(1 6)(2 5)(3 4)"]
    certificate = report.runs[0].certificate
    assert certificate.stats.t == {2: 6, 3: 15, 6: 1}
    assert certificate.min_ordinary is True
    assert certificate.completion_central is True


def test_pipeline_with_given_sigma():
    # sigma is not strong here: the run records the error instead of failing
    report = PappusPipeline(
        params=PAPPUS_INSTANCES[PappusKindEnum.pc],
        sigma=Involution.parse("(1 2)(3 5)(4 6)", 6),
    ).run()
    assert len(report.runs) == 1
    run = report.runs[0]
    assert run.error == "not-strong"
    assert run.completion is None
    assert run.to_dict()["certificate"] is None


def test_pipeline_skew_without_tuning():
    report = PappusPipeline(params=PAPPUS_INSTANCES[PappusKindEnum.skew]).run()
    assert len(report.runs) == 3
    runs = {str(run.sigma): run for run in report.runs}
    assert runs["(1 2)(3 5)(4 6)"].certificate.stats.t == {2: 21, 3: 15}
    for run in report.runs:
        if run.certificate is not None:
            # every double point is a triple point of the union
            assert run.certificate.stats.count(3) >= 15


def test_pipeline_rejects_three_names():
    try:
        PappusPipeline(
            params=PAPPUS_INSTANCES[PappusKindEnum.p],
            tune=("a1", "a2", "a3"),
        ).run()
        assert False, "Should have raised ValueError"
    except ValueError:
        pass


if __name__ == "__main__":
    from discriminantal_arrangement.tests import run_cov_test

    run_cov_test(
        __file__,
        "discriminantal_arrangement.completion.pipeline",
        preview=False,
    )
