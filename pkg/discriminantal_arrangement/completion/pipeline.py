# -*- coding: utf-8 -*-

"""
End to end Pappus construction: tune the parameters, build the six lines,
read off their collinearities and strong involutions, complete with every
strong involution and certify each union.
"""

import typing as T
import dataclasses

from func_args.api import REQ

from ..arrangement import Arrangement
from ..planar import Collinearity, collinearity_conditions
from ..foundation import BaseLogger
from ..exc import PatternError, DiscrimError, PreconditionError
from .involution import Involution, strong_involutions
from .sigma import CompletionResult, sigma_completion
from .certify import UnionCertificate, union_certify
from .pappus import (
    PappusParams,
    pappus_generator,
    concurrency_tune,
    four_collinearity_tune,
)


@dataclasses.dataclass(frozen=True)
class PappusRun:
    """
    Outcome of one strong involution: either a completion with its
    certificate, or the code of the error that stopped the completion.
    """

    sigma: Involution
    completion: CompletionResult | None = None
    certificate: UnionCertificate | None = None
    error: str | None = None

    def to_dict(self) -> dict[str, T.Any]:
        return {
            "sigma": str(self.sigma),
            "completion": None if self.completion is None else self.completion.to_dict(),
            "certificate": None if self.certificate is None else self.certificate.to_dict(),
            "error": self.error,
        }


@dataclasses.dataclass(frozen=True)
class PappusReport:
    params: PappusParams
    arrangement: Arrangement
    collinearities: tuple[Collinearity, ...]
    runs: tuple[PappusRun, ...]

    def to_dict(self) -> dict[str, T.Any]:
        return {
            "params": self.params.to_dict(),
            "arrangement": self.arrangement.to_dict(),
            "collinearities": [c.to_dict() for c in self.collinearities],
            "runs": [run.to_dict() for run in self.runs],
        }


@dataclasses.dataclass(frozen=True)
class PappusPipeline(BaseLogger):
    """
    :param params: starting parameters
    :param tune: parameter names to solve for. One name runs
        :func:`concurrency_tune`, two names run :func:`four_collinearity_tune`,
        none keeps ``params`` as given.
    :param sigma: complete with this involution only, instead of every strong
        involution
    """

    params: PappusParams = dataclasses.field(default=REQ)
    tune: tuple[str, ...] = dataclasses.field(default=())
    sigma: Involution | None = dataclasses.field(default=None)

    def run(self) -> PappusReport:
        params = self.step_1_tune()
        arrangement = self.step_2_generate(params)
        collinearities = self.step_3_collinearities(arrangement)
        involutions = self.step_4_strong_involutions(arrangement)
        runs = []
        for sigma in involutions:
            completion, error = self.step_5_complete(arrangement, sigma)
            certificate = None
            if completion is not None:
                certificate = self.step_6_certify(arrangement, completion)
            runs.append(
                PappusRun(sigma=sigma, completion=completion, certificate=certificate, error=error)
            )
        return PappusReport(
            params=params,
            arrangement=arrangement,
            collinearities=tuple(collinearities),
            runs=tuple(runs),
        )

    def step_1_tune(self) -> PappusParams:
        self.log("--- Step 1 - Tune parameters")
        if len(self.tune) == 0:
            params = self.params
        elif len(self.tune) == 1:
            params = concurrency_tune(self.params, self.tune[0])
        elif len(self.tune) == 2:
            params = four_collinearity_tune(self.params, (self.tune[0], self.tune[1]))
        else:
            raise PreconditionError(f"can tune one or two parameters, got {list(self.tune)}")
        self.log(f"params = {params.to_dict()}")
        return params

    def step_2_generate(self, params: PappusParams) -> Arrangement:
        self.log("--- Step 2 - Generate the six lines")
        return pappus_generator(params)

    def step_3_collinearities(self, arrangement: Arrangement) -> list[Collinearity]:
        self.log("--- Step 3 - Find collinearities")
        collinearities = collinearity_conditions(arrangement)
        for c in collinearities:
            if len(c.points) > 3:
                raise PatternError(
                    f"collinearity {c.name} has {len(c.points)} points, expected 3",
                    points=[list(p) for p in c.points],
                )
        self.log(f"collinearities = {[c.name for c in collinearities]}")
        return collinearities

    def step_4_strong_involutions(self, arrangement: Arrangement) -> list[Involution]:
        self.log("--- Step 4 - Find strong involutions")
        if self.sigma is not None:
            involutions = [self.sigma]
        else:
            involutions = strong_involutions(arrangement)
        self.log(f"involutions = {[str(s) for s in involutions]}")
        return involutions

    def step_5_complete(
        self,
        arrangement: Arrangement,
        sigma: Involution,
    ) -> tuple[CompletionResult | None, str | None]:
        self.log(f"--- Step 5 - Complete with {sigma}")
        try:
            completion = sigma_completion(arrangement, sigma)
        except DiscrimError as e:
            self.log(f"completion failed: {e.code}: {e.message}")
            return None, e.code
        return completion, None

    def step_6_certify(
        self,
        arrangement: Arrangement,
        completion: CompletionResult,
    ) -> UnionCertificate:
        self.log("--- Step 6 - Certify the union")
        certificate = union_certify(arrangement, completion)
        self.log(f"census = {certificate.stats.t}")
        return certificate
