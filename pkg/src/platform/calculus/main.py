#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Post-Lie Calculus

Command-line entry point with three subcommands:

- expand: series of a named map to a given order, as JSON or text,
- verify: the invariant suites at a given degree,
- geom: a geometry experiment against a connection model file.

Exit codes: 0 success, 1 failed invariant or experiment, 2 usage error,
3 model error.
"""

import argparse
import json
import os
import sys
from typing import Any, Dict, List, Optional
from pydantic import ValidationError
from src.lib.package.postlie.algebra import OrderError, SeriesExpansion, VerificationSuite
from src.lib.package.postlie.geometry import GeometryExperiment, ModelError, load_model
from src.lib.package.postlie.system import Config, Logger, TemplateEngine


PATH = os.path.dirname(os.path.abspath(__file__))
SETTINGS = Config(os.path.join(PATH, 'config.yaml'))

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_MODEL = 3

MAPS = ["chi", "theta", "alpha", "lambda", "z", "k", "kinv", "beta", "betainv", "qstar", "bch"]
EXPERIMENTS = ["bianchi", "kernel", "curvature-element", "special-tensors", "double-exp"]

logger = Logger().configure(SETTINGS.section("logger")).get_logger()


def power(t: int, s: int) -> str:
    """Monomial label such as 't^2 s' or '1'."""
    parts = []
    for name, exponent in (("t", t), ("s", s)):
        if exponent == 1:
            parts.append(name)
        elif exponent > 1:
            parts.append(f"{name}^{exponent}")
    return " ".join(parts) or "1"


def step_list(text: str) -> List[float]:
    """Comma-separated positive step sizes."""
    try:
        values = [float(item) for item in text.split(",") if item.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"invalid step list {text!r}") from e
    if len(values) < 2 or any(value <= 0 for value in values):
        raise argparse.ArgumentTypeError("need at least two positive step sizes")
    return values


def build_parser() -> argparse.ArgumentParser:
    """
    Create the argument parser.

    :return: Parser with the expand, verify and geom subcommands.
    """
    parser = argparse.ArgumentParser(
        prog="postlie", description="Symbolic and numeric post-Lie calculus.")
    parser.add_argument("--log-level", default=None, help="Override the configured log level.")
    commands = parser.add_subparsers(dest="command", required=True)

    expand = commands.add_parser("expand", help="Expand a named map.")
    expand.add_argument("--map", required=True, choices=MAPS)
    expand.add_argument("--order", type=int, default=None)
    expand.add_argument("--alphabet", default=None)
    expand.add_argument("--word", default=None)
    expand.add_argument("--format", choices=["json", "text"], default=None)
    expand.add_argument("--out", default=None)

    verify = commands.add_parser("verify", help="Run the invariant suites.")
    verify.add_argument("--suite", default="all", choices=VerificationSuite.names() + ["all"])
    verify.add_argument("--max-degree", type=int, default=None)
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--alphabet", default=None)
    verify.add_argument("--format", choices=["json", "text"], default="text")
    verify.add_argument("--out", default=None)

    geom = commands.add_parser("geom", help="Run a geometry experiment.")
    geom.add_argument("--model", required=True)
    geom.add_argument("--experiment", required=True, choices=EXPERIMENTS)
    geom.add_argument("--h", type=step_list, default=None)
    geom.add_argument("--order", type=int, default=None)
    geom.add_argument("--seed", type=int, default=None)
    geom.add_argument("--format", choices=["json", "text"], default="text")
    geom.add_argument("--out", default=None)
    return parser


def _overrides(**values: Any) -> Dict[str, Any]:
    return {key: value for key, value in values.items() if value is not None}


def _emit(text: str, out: Optional[str]):
    if out:
        with open(out, 'w', encoding='utf-8') as file:
            file.write(text)
        logger.info(f"Output written to {out}")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _render(name: str, **params: Any) -> str:
    templates = SETTINGS.section("templates")
    environment = os.path.join(PATH, templates.get("environment", "templates"))
    engine = TemplateEngine(filters={"power": power})
    return engine.load(environment, templates.get(name, f"{name}.txt.j2"), **params)


def run_expand(args: argparse.Namespace) -> int:
    """
    Expand a named map.

    :param args: Parsed arguments.
    :return: Exit code.
    """
    settings = SETTINGS.section("expand")
    output_format = args.format or settings.pop("format", "json")
    settings.pop("format", None)
    config = {**settings, **_overrides(
        map=args.map, order=args.order, alphabet=args.alphabet, word=args.word)}
    try:
        result = SeriesExpansion(config).run()
    except (OrderError, ValidationError, ValueError) as e:
        logger.error(f"expand failed: {e}")
        return EXIT_USAGE
    if output_format == "json":
        _emit(json.dumps(result.model_dump(), indent=2), args.out)
    else:
        _emit(_render("expand", result=result), args.out)
    return EXIT_OK


def run_verify(args: argparse.Namespace) -> int:
    """
    Run one or all invariant suites.

    :param args: Parsed arguments.
    :return: Exit code, 1 when an invariant fails.
    """
    settings = SETTINGS.section("verify")
    names = settings.pop("suites", None) or VerificationSuite.names()
    if args.suite != "all":
        names = [args.suite]
    common = {**settings, **_overrides(
        max_degree=args.max_degree, seed=args.seed, alphabet=args.alphabet)}
    reports = []
    try:
        for name in names:
            suite = VerificationSuite.create({**common, "type": name})
            reports.append(suite.run())
    except (ValidationError, ValueError) as e:
        logger.error(f"verify failed: {e}")
        return EXIT_USAGE
    passed = all(report.status == "success" and report.passed for report in reports)
    if args.format == "json":
        payload = {"passed": passed, "suites": [report.model_dump() for report in reports]}
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        _emit(_render("verify", suites=reports, passed=passed), args.out)
    return EXIT_OK if passed else EXIT_FAILED


def resolve_model_path(name: str) -> str:
    """
    A model file path, or the bundled model of that name.

    :param name: Path or bundled model name such as 'sphere'.
    :return: Path to load.
    """
    if os.path.isfile(name):
        return name
    models = os.path.join(PATH, SETTINGS.section("geom").get("models", "models"))
    bundled = os.path.join(models, name if name.endswith(".json") else f"{name}.json")
    return bundled if os.path.isfile(bundled) else name


def run_geom(args: argparse.Namespace) -> int:
    """
    Run a geometry experiment.

    :param args: Parsed arguments.
    :return: Exit code, 3 for model errors.
    """
    settings = SETTINGS.section("geom")
    try:
        connection = load_model(resolve_model_path(args.model))
    except ModelError as e:
        logger.error(f"geom failed: {e}")
        return EXIT_MODEL
    config = {
        "seed": settings.get("seed", 0),
        **settings.get("experiments", {}).get(args.experiment, {}),
        **_overrides(h_list=args.h, order=args.order, seed=args.seed),
        "type": args.experiment,
    }
    try:
        experiment = GeometryExperiment.create(config)
    except (ValidationError, ValueError) as e:
        logger.error(f"geom failed: {e}")
        return EXIT_USAGE
    result = experiment.run(connection)
    if args.format == "json":
        _emit(json.dumps(result.model_dump(), indent=2), args.out)
    else:
        _emit(_render("geom", result=result), args.out)
    if result.status != "success":
        return EXIT_MODEL if result.error_type == "ModelError" else EXIT_FAILED
    return EXIT_OK if result.passed else EXIT_FAILED


COMMANDS = {
    "expand": run_expand,
    "verify": run_verify,
    "geom": run_geom,
}


def main(argv: Optional[List[str]] = None) -> int:
    """
    Parse the command line and dispatch.

    :param argv: Arguments, defaults to sys.argv.
    :return: Exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    if args.log_level:
        Logger().set_level(args.log_level)
    logger.info(f"Running {args.command} with {vars(args)}")
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
