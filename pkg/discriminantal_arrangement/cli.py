# -*- coding: utf-8 -*-

"""
``discrim`` command line.

Every verb reads an arrangement (a JSON file, or ``@name`` for a shipped
data set), computes one report and writes it as JSON to standard output or
``--out``::

    {"command": ..., "input_sha256": ..., "seed": ..., "result": {...}}

Exit codes: 0 on success, 2 when the input violates a precondition (the
JSON diagnostic of the :class:`~discriminantal_arrangement.exc.DiscrimError`
is printed instead of the report), 1 on any other failure.
"""

import typing as T
import sys
import json
import random
import argparse
import traceback
from pathlib import Path

from ._version import __version__
from .constants import CommandEnum, ExitCodeEnum, PappusKindEnum, PappusCarrierEnum
from .config import Config
from .paths import find_data_set
from .exactfield import parse_scalar
from .arrangement import Arrangement, ProjectiveFlat, ensure_generic
from .discriminantal import build
from .lattice import flats_up_to_rank, very_generic_report
from .planar import (
    incidence_stats,
    collinearity_conditions,
    affine_chart,
    quadrilateral_translates,
)
from .render import render_svg
from .orchard import OrchardSearch
from .completion.involution import Involution, strong_involutions
from .completion.sigma import CompletionResult, sigma_completion
from .completion.certify import union_certify, conjecture_report
from .completion.pappus import PAPPUS_INSTANCES, PappusParams
from .completion.pipeline import PappusPipeline
from .foundation import stderr_printer
from .exc import DiscrimError, PreconditionError
from .utils import to_report_json, write_bytes

T_RESULT = tuple[Arrangement, T.Any]
"""
The arrangement a report is about (its hash goes into the report) and the
``result`` payload.
"""


# ------------------------------------------------------------------------------
# Inputs
# ------------------------------------------------------------------------------
def resolve_input(ref: str) -> Path:
    if ref.startswith("@"):
        return find_data_set(ref[1:])
    return Path(ref)


def read_document(ref: str) -> tuple[Arrangement, dict[str, T.Any]]:
    """
    The arrangement in ``ref`` and the raw JSON document it came from, which
    may carry extra keys such as ``"pappus"``.
    """
    text = resolve_input(ref).read_text(encoding="utf-8")
    arrangement = Arrangement.loads(text)
    return arrangement, json.loads(text)


def parse_chart(text: str | None) -> ProjectiveFlat | None:
    """
    ``"a,b,c"`` to the projective line ``a x + b y + c z = 0``.
    """
    if text is None:
        return None
    parts = text.split(",")
    if len(parts) != 3:
        raise PreconditionError(
            f"a chart needs three coefficients 'a,b,c', got {text!r}",
            chart=text,
        )
    return ProjectiveFlat.of([parse_scalar(p.strip()) for p in parts])


def charted(arrangement: Arrangement, chart: ProjectiveFlat | None) -> Arrangement:
    if chart is None:
        return arrangement
    view = affine_chart(arrangement, chart=chart, labels=arrangement.labels)
    if view is None:
        raise PreconditionError(
            f"one of the lines is the chart line {chart}",
            chart=chart.to_list(),
        )
    return view.arrangement


def _sigma(args: argparse.Namespace, n: int) -> Involution:
    if args.sigma is None:
        raise PreconditionError(
            "--sigma is required, e.g. --sigma '(1 6)(2 5)(3 4)'",
            option="--sigma",
        )
    return Involution.parse(args.sigma, n)


# ------------------------------------------------------------------------------
# Verbs
# ------------------------------------------------------------------------------
def cmd_check_generic(args, config: Config, printer) -> T_RESULT:
    arrangement, _ = read_document(args.input)
    ensure_generic(arrangement)
    return arrangement, {"generic": True, "n": arrangement.n, "k": arrangement.dimension}


def cmd_build(args, config: Config, printer) -> T_RESULT:
    arrangement, _ = read_document(args.input)
    return arrangement, build(arrangement).to_dict()


def cmd_lattice(args, config: Config, printer) -> T_RESULT:
    arrangement, _ = read_document(args.input)
    lattice = flats_up_to_rank(
        build(arrangement),
        config.max_rank,
        verbose=config.verbose,
        printer=printer,
    )
    return arrangement, lattice.to_dict()


def cmd_very_generic(args, config: Config, printer) -> T_RESULT:
    arrangement, _ = read_document(args.input)
    discriminantal = build(arrangement)
    lattice = flats_up_to_rank(
        discriminantal,
        config.max_rank,
        verbose=config.verbose,
        printer=printer,
    )
    return arrangement, very_generic_report(discriminantal, lattice=lattice).to_dict()


def cmd_qsets(args, config: Config, printer) -> T_RESULT:
    arrangement, _ = read_document(args.input)
    translates = quadrilateral_translates(arrangement, rng=random.Random(config.seed))
    return arrangement, {
        "count": len(translates),
        "quadrilateral_sets": [q.to_dict() for q in translates],
    }


def cmd_orchard(args, config: Config, printer) -> T_RESULT:
    arrangement, _ = read_document(args.input)
    result = OrchardSearch(
        arrangement=arrangement,
        seed=config.seed,
        sample_bound=config.sample_bound,
        max_sample_rounds=config.max_sample_rounds,
        max_n=config.orchard_max_n,
        verbose=config.verbose,
        printer=printer,
    ).run()
    return arrangement, result.to_dict()


def cmd_pappus(args, config: Config, printer) -> T_RESULT:
    if args.make is not None:
        params = PAPPUS_INSTANCES[PappusKindEnum(args.make)]
    elif args.input is not None:
        _, document = read_document(args.input)
        if "pappus" not in document:
            raise PreconditionError(f"{args.input} has no 'pappus' parameters", input=args.input)
        params = PappusParams.from_dict(document["pappus"])
    else:
        raise PreconditionError("give an input file or --make {p,pc,skew}", option="--make")
    if args.carriers is not None:
        params = PappusParams(a=params.a, b=params.b, carriers=args.carriers)
    tune = tuple(p.strip() for p in args.tune.split(",")) if args.tune else ()
    sigma = Involution.parse(args.sigma, 6) if args.sigma else None
    report = PappusPipeline(
        params=params,
        tune=tune,
        sigma=sigma,
        verbose=config.verbose,
        printer=printer,
    ).run()
    return report.arrangement, report.to_dict()


def cmd_sigma_complete(args, config: Config, printer) -> T_RESULT:
    arrangement, _ = read_document(args.input)
    if args.sigma is None:
        return arrangement, {
            "strong_involutions": [str(s) for s in strong_involutions(arrangement)],
        }
    completion = sigma_completion(arrangement, _sigma(args, arrangement.n))
    return arrangement, completion.to_dict()


def cmd_certify_union(args, config: Config, printer) -> T_RESULT:
    arrangement, _ = read_document(args.input)
    if args.completion is not None:
        data = json.loads(Path(args.completion).read_text(encoding="utf-8"))
        # accept a full sigma-complete report as well as its result
        data = data.get("result", data)
        completion = CompletionResult.from_dict(data, arrangement.n)
    else:
        completion = sigma_completion(arrangement, _sigma(args, arrangement.n))
    return arrangement, union_certify(arrangement, completion).to_dict()


def cmd_conjecture(args, config: Config, printer) -> T_RESULT:
    arrangement, _ = read_document(args.input)
    if args.sigma is None:
        involutions = strong_involutions(arrangement)
    else:
        involutions = [_sigma(args, arrangement.n)]
    reports = [conjecture_report(arrangement, sigma).to_dict() for sigma in involutions]
    return arrangement, {"reports": reports}


def cmd_stats(args, config: Config, printer) -> T_RESULT:
    arrangement, _ = read_document(args.input)
    view = charted(arrangement, parse_chart(args.chart))
    stats = incidence_stats(view)
    result = stats.to_dict(include_points=True)
    if not any(p.multiplicity >= 3 for p in stats.points):
        result["collinearities"] = [c.to_dict() for c in collinearity_conditions(view)]
    return arrangement, result


def cmd_render(args, config: Config, printer) -> T_RESULT:
    arrangement, _ = read_document(args.input)
    if args.svg is None:
        raise PreconditionError("render needs --svg PATH", option="--svg")
    view = charted(arrangement, parse_chart(args.chart))
    render_svg(view, Path(args.svg))
    return arrangement, {"svg": str(args.svg), "stats": incidence_stats(view).to_dict()}


COMMANDS: dict[CommandEnum, T.Callable[..., T_RESULT]] = {
    CommandEnum.check_generic: cmd_check_generic,
    CommandEnum.build: cmd_build,
    CommandEnum.lattice: cmd_lattice,
    CommandEnum.very_generic: cmd_very_generic,
    CommandEnum.qsets: cmd_qsets,
    CommandEnum.orchard: cmd_orchard,
    CommandEnum.pappus: cmd_pappus,
    CommandEnum.sigma_complete: cmd_sigma_complete,
    CommandEnum.certify_union: cmd_certify_union,
    CommandEnum.conjecture: cmd_conjecture,
    CommandEnum.stats: cmd_stats,
    CommandEnum.render: cmd_render,
}


# ------------------------------------------------------------------------------
# Parser
# ------------------------------------------------------------------------------
def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the JSON report here instead of stdout")
    common.add_argument("--seed", type=int, help="seed of every random choice")
    common.add_argument("--config", help="TOML file with a [tool.discrim] table")
    common.add_argument("--verbose", action="store_true", default=None, help="log progress to stderr")
    common.add_argument("--max-rank", type=int, dest="max_rank", help="deepest lattice rank")

    parser = argparse.ArgumentParser(
        prog="discrim",
        description="Discriminantal arrangements and planar line configurations.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    for command in CommandEnum:
        sub = subparsers.add_parser(command.value, parents=[common])
        nargs = "?" if command == CommandEnum.pappus else None
        sub.add_argument("input", nargs=nargs, help="arrangement JSON file or @data_set")
        if command in (
            CommandEnum.sigma_complete,
            CommandEnum.certify_union,
            CommandEnum.conjecture,
            CommandEnum.pappus,
        ):
            sub.add_argument("--sigma", help="involution, e.g. '(1 6)(2 5)(3 4)'")
        if command in (CommandEnum.stats, CommandEnum.render):
            sub.add_argument("--chart", help="line sent to infinity, as 'a,b,c'")
        if command == CommandEnum.render:
            sub.add_argument("--svg", help="output SVG file")
        if command == CommandEnum.certify_union:
            sub.add_argument("--completion", help="JSON written by sigma-complete")
        if command == CommandEnum.pappus:
            sub.add_argument("--make", choices=[k.value for k in PappusKindEnum])
            sub.add_argument("--carriers", choices=[c.value for c in PappusCarrierEnum])
            sub.add_argument("--tune", help="parameters to solve for, e.g. 'b3' or 'a2,b3'")
    return parser


def load_config(args: argparse.Namespace) -> Config:
    if args.config is not None:
        config = Config.load(Path(args.config))
    else:
        config = Config.find()
    return config.override(seed=args.seed, max_rank=args.max_rank, verbose=args.verbose)


def emit(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
    else:
        write_bytes(path=Path(out), content=text.encode("utf-8"))


def run(argv: T.Sequence[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    printer = stderr_printer()
    try:
        config = load_config(args)
        command = CommandEnum(args.command)
        arrangement, result = COMMANDS[command](args, config, printer)
        report = {
            "command": command.value,
            "input_sha256": arrangement.canonical_hash(),
            "seed": config.seed,
            "result": result,
        }
        emit(to_report_json(report), args.out)
        return ExitCodeEnum.success.value
    except DiscrimError as e:
        sys.stdout.write(to_report_json(e.to_dict()))
        return ExitCodeEnum.precondition.value
    except Exception:
        printer(traceback.format_exc())
        return ExitCodeEnum.internal_error.value


def main():  # pragma: no cover
    sys.exit(run())
