# cli/__init__.py
# Copyright (C) 2024 - 2028 the permprod authors and contributors
# <see AUTHORS file>
#
# This module is part of permprod and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Command-line interface for permprod.

Every command prints an envelope with the result and a verification summary recomputed
at emit time. Exit codes: 0 verified success, 2 usage error, 3 internal verification
failure, 4 oracle budget exceeded.
"""

from __future__ import annotations

import logging
import time
from typing import Callable, Optional, Tuple

import click
from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler
from rich.panel import Panel

from permprod.config import config
from permprod.exceptions import (
    BudgetExceededError,
    ConfigurationError,
    DegreeMismatchError,
    FixedPointFreeInvolutionsError,
    InvalidArityError,
    InvalidPermutationError,
    NoSuchPrimeError,
    NotationError,
    OutOfRangeError,
    ParityViolationError,
    PermProdError,
    ProductNotIdentityError,
    SupportOverlapError,
    TypeMismatchError,
)
from permprod.exporters import (
    JSONExporter,
    OutputEnvelope,
    TextExporter,
    TupleShape,
    independent_check,
)

console = Console()
err_console = Console(stderr=True)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DEFECT = 3
EXIT_BUDGET = 4

USAGE_ERRORS = (
    ConfigurationError,
    DegreeMismatchError,
    FixedPointFreeInvolutionsError,
    InvalidArityError,
    InvalidPermutationError,
    NoSuchPrimeError,
    NotationError,
    OutOfRangeError,
    ParityViolationError,
    ProductNotIdentityError,
    SupportOverlapError,
    TypeMismatchError,
)

Order = click.IntRange(min=2)


def exit_code(error: Exception) -> int:
    """
    The exit status for an error raised by a command.

    Args:
        error (Exception): The error.

    Returns:
        int: 4 for an exhausted oracle budget, 2 for invalid input, 3 otherwise.
    """
    if isinstance(error, BudgetExceededError):
        return EXIT_BUDGET
    if isinstance(error, (ValidationError, *USAGE_ERRORS)):
        return EXIT_USAGE
    return EXIT_DEFECT


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level="DEBUG" if verbose else config.logging["level"],
        format=config.logging["format"],
        datefmt="[%X]",
        handlers=[RichHandler(console=err_console, show_path=False)],
        force=True,
    )


def _parts(ctx, param, value: Optional[str]) -> Optional[Tuple[int, ...]]:
    # pylint: disable=unused-argument
    if value is None:
        return None
    try:
        parts = tuple(int(p) for p in value.split(",") if p.strip())
    except ValueError as e:
        raise click.BadParameter(f"'{value}' is not a comma separated list of lengths") from e
    if not parts or any(p < 1 for p in parts):
        raise click.BadParameter(f"'{value}' needs positive cycle lengths")
    return parts


OUTPUT_OPTIONS = (
    click.option("--json", "as_json", is_flag=True, help="Print the envelope as JSON"),
    click.option(
        "--seed",
        type=click.IntRange(0, 2**64 - 1),
        envvar=config.cli["seed_env"],
        default=None,
        help=f"Base seed, defaults to ${config.cli['seed_env']} or {config.cli['default_seed']}",
    ),
    click.option("--timing", is_flag=True, help="Include wall clock timings"),
    click.option("--verbose", "-v", is_flag=True, help="Log search progress to stderr"),
)


def output_options(function: Callable) -> Callable:
    """Adds the --json, --seed, --timing and --verbose options to a command."""
    for option in reversed(OUTPUT_OPTIONS):
        function = option(function)
    return function


def _emit(
    command: str,
    arguments: dict,
    options: dict,
    build: Callable[[int], Tuple[dict, dict, Optional[str]]],
) -> None:
    _configure_logging(options["verbose"])
    seed = options["seed"]
    seed = config.cli["default_seed"] if seed is None else seed
    ctx = click.get_current_context()

    started = time.perf_counter()
    try:
        config.configure_solver(seed)
        result, verification, text = build(seed)
    except (PermProdError, ValidationError) as e:
        err_console.print(f"[bold red]✗[/] {e}")
        ctx.exit(exit_code(e))
    elapsed = time.perf_counter() - started

    envelope = OutputEnvelope(
        command=command,
        arguments=arguments,
        seed=seed,
        result=result,
        verification=verification,
        timing={"seconds": elapsed} if options["timing"] else None,
    )
    if options["as_json"]:
        click.echo(JSONExporter(envelope).render())
    else:
        console.print(Panel(text or TextExporter(envelope).render(), title=command))
        if options["timing"]:
            console.print(f"Elapsed: {elapsed:.3f}s")
    if not envelope.verified:
        err_console.print(f"[bold red]✗[/] Verification failed: {verification}")
        ctx.exit(EXIT_DEFECT)


@click.group()
@click.version_option(version="1.0.0", prog_name="permprod")
def main():
    """permprod - product one permutation tuples with prescribed orders."""


@main.command("solve")
@click.argument("a", type=Order)
@click.argument("b", type=Order)
@click.argument("c", type=Order)
@output_options
def solve_command(a: int, b: int, c: int, **options):
    """Find x, y, z of orders A, B, C with x y z = 1 in degree at most max + 2."""
    from permprod.solvers.triple_solver import (  # pylint: disable=import-outside-toplevel
        restore_slots,
        solve,
    )

    def build(seed):
        orders = (a, b, c)
        result = solve(*sorted(orders))
        payload = result.to_dict()
        x, y, z = restore_slots(result, orders)
        if result.orders != orders:
            payload["arranged"] = {
                "x": str(x),
                "y": str(y),
                "z": str(z),
                "orders": list(orders),
            }
        verification = independent_check(
            [x.images, y.images, z.images], orders, TupleShape.TRIPLE
        )
        return payload, verification, None

    _emit("solve", {"orders": [a, b, c]}, options, build)


@main.command("extend")
@click.argument("orders", nargs=-1, required=True, type=Order)
@output_options
def extend_command(orders: Tuple[int, ...], **options):
    """Find x_1, ..., x_r of the given orders with x_1 ... x_r = 1 in S_(max + 2)."""
    from permprod.solvers.chain_builder import extend  # pylint: disable=import-outside-toplevel

    def build(seed):
        chain = extend(orders)
        images = [e.images for e in chain.elements]
        return chain.to_dict(), independent_check(images, orders, TupleShape.CHAIN), None

    _emit("extend", {"orders": list(orders)}, options, build)


@main.command("survey")
@click.option("--max-n", "max_n", type=click.IntRange(min=4), required=True)
@click.option("--jobs", type=click.IntRange(min=1), default=None, help="Worker processes")
@output_options
def survey_command(max_n: int, jobs: Optional[int], **options):
    """Confirm every order triple 1 < a, b, c <= n - 2 in S_n for n <= MAX_N."""
    from permprod.reports.survey_report import (  # pylint: disable=import-outside-toplevel
        SurveyReport,
    )

    def build(seed):
        report = SurveyReport(max_n, jobs)
        verification = {"ok": report.ok, "failures": len(report.failures)}
        return report.to_dict(timing=options["timing"]), verification, str(report)

    _emit("survey", {"max_n": max_n}, options, build)


@main.command("genus")
@click.argument("elements", nargs=-1, required=True)
@output_options
def genus_command(elements: Tuple[str, ...], **options):
    """Genus of each component for a product one tuple in cycle notation, e.g. '(1,2)@2'."""
    # pylint: disable=import-outside-toplevel
    from permprod.models.permutation import Permutation, embed
    from permprod.reports.hurwitz import genus, index_sum

    def build(seed):
        perms = [Permutation.parse(e) for e in elements]
        degree = max(p.degree for p in perms)
        perms = [embed(p, degree) for p in perms]
        components = genus(perms)
        payload = {
            "elements": [str(p) for p in perms],
            "degree": degree,
            "index_sum": index_sum(perms),
            "components": [{"orbit": sorted(o), "genus": g} for o, g in components],
        }
        return payload, independent_check([p.images for p in perms]), None

    _emit("genus", {"elements": list(elements)}, options, build)


@main.command("mindegree")
@click.argument("a", type=Order)
@click.argument("b", type=Order)
@click.argument("c", type=Order)
@click.option("--max-degree", type=click.IntRange(min=1), default=None)
@output_options
def mindegree_command(a: int, b: int, c: int, max_degree: Optional[int], **options):
    """The least n such that S_n has x, y, z of orders A, B, C with x y z = 1."""
    # pylint: disable=import-outside-toplevel
    from permprod.solvers.oracle import SearchBudget, exhaustive_triple_search, min_degree

    def build(seed):
        limits = dict(config.oracle)
        if max_degree is not None:
            limits["max_degree"] = max_degree
        budget = SearchBudget(**limits)
        degree = min_degree(a, b, c, budget)
        witness = exhaustive_triple_search(degree, a, b, c, budget)
        payload = {
            "orders": [a, b, c],
            "min_degree": degree,
            "witness": [str(p) for p in witness],
        }
        return payload, independent_check([p.images for p in witness], (a, b, c)), None

    _emit("mindegree", {"orders": [a, b, c], "max_degree": max_degree}, options, build)


@main.command("cover")
@click.argument("orders", nargs=-1, required=True, type=Order)
@click.option("--labels", default=None, help="Comma separated branch point labels")
@output_options
def cover_command(orders: Tuple[int, ...], labels: Optional[str], **options):
    """Branch data of a covering of the sphere with the given ramification orders."""
    # pylint: disable=import-outside-toplevel
    from permprod.reports.cover_report import BranchSpec, branch_data_report

    def build(seed):
        spec = BranchSpec.of(orders, labels.split(",") if labels else None)
        report = branch_data_report(spec)
        images = [e.images for e in report.chain.elements]
        verification = independent_check(images, orders, TupleShape.CHAIN)
        return report.to_dict(), verification, str(report)

    _emit("cover", {"orders": list(orders), "labels": labels}, options, build)


@main.command("classify")
@click.argument("a", type=Order)
@click.argument("b", type=Order)
@click.argument("c", type=Order)
@output_options
def classify_command(a: int, b: int, c: int, **options):
    """The construction the triple solver uses for orders A, B, C."""
    from permprod.solvers.triple_solver import classify  # pylint: disable=import-outside-toplevel

    def build(seed):
        orders = sorted((a, b, c))
        return {"orders": orders, **classify(*orders).to_dict()}, {}, None

    _emit("classify", {"orders": [a, b, c]}, options, build)


@main.command("realize")
@click.option("--degree", "-n", type=click.IntRange(min=1), required=True)
@click.option("--c1", callback=_parts, required=True, help="Cycle lengths of alpha, e.g. 3,3")
@click.option("--c2", callback=_parts, required=True, help="Cycle lengths of beta, e.g. 2")
@click.option("--near", is_flag=True, help="Ask for a transitive (n-1)-cycle product")
@click.option("--retry-cap", type=click.IntRange(min=1), default=None)
@output_options
def realize_command(
    degree: int, c1: tuple, c2: tuple, near: bool, retry_cap: Optional[int], **options
):
    """Find alpha, beta in two classes of S_n whose product is a long cycle."""
    # pylint: disable=import-outside-toplevel
    from permprod.models.cycle_types import ClassSpec
    from permprod.models.realization import RealizationRequest, Variant
    from permprod.solvers.class_realizer import realize

    def build(seed):
        request = RealizationRequest(
            c1=ClassSpec.of(c1, degree),
            c2=ClassSpec.of(c2, degree),
            variant=Variant.NEAR_CYCLE if near else Variant.FULL_CYCLE,
            seed=seed,
            retry_cap=retry_cap,
        )
        witness = realize(request)
        payload = {**witness.to_dict(), "fixed_point": witness.fixed_point}
        triple = [witness.alpha, witness.beta, witness.product.inverse()]
        verification = independent_check([p.images for p in triple])
        types = verification.get("cycle_types", [])
        shape = [degree - 1, 1] if near else [degree]
        verification["class_match"] = types[:2] == [
            list(request.c1.cycle_type.parts),
            list(request.c2.cycle_type.parts),
        ]
        verification["product_shape"] = types[2:] == [shape]
        verification["ok"] = (
            verification["ok"] and verification["class_match"] and verification["product_shape"]
        )
        return payload, verification, None

    _emit(
        "realize",
        {"degree": degree, "c1": list(c1), "c2": list(c2), "near": near},
        options,
        build,
    )
