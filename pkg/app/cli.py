# Copyright 2026 The desc2gpd Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""The `desc2` command line.

Exit status: 0 pass, 1 semantic failure, 2 parse failure, 3 budget exhausted.
"""

import functools
import logging
from collections.abc import Callable
from pathlib import Path
from typing import Any

import click
from dotenv import load_dotenv
from pydantic import ValidationError

from app.app_utils.budget import DEFAULT_BUDGET
from app.app_utils.documents import load, load_cosimplicial, load_levelwise_map, write_report
from app.app_utils.errors import BudgetExceededError, Desc2Error, DocumentError
from app.app_utils.telemetry import setup_telemetry
from app.app_utils.typing import RunConfig
from app.tools.cech import abelian_cohomology_oracle
from app.tools.cosimplicial import validate_cosimplicial
from app.tools.descent import check_invariance, enumerate_descent_data, gauge_classes, validate_descent_data
from app.tools.nerve import two_nerve
from app.tools.simplicial_set import describe, kan_check, validate_sset
from app.tools.totalization import compare_nerve_tot
from app.tools.two_groupoid import TableTwoFunctor, ValidationReport, validate_two_functor, validate_two_groupoid

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAILURE = 1
EXIT_PARSE = 2
EXIT_RESOURCE = 3


def _parse_dims(ctx: click.Context, param: click.Parameter, value: str) -> list[int]:
    try:
        return [int(part) for part in value.split(",") if part.strip()]
    except ValueError as e:
        raise click.BadParameter(f"expected a comma-separated list such as 0,1,2, got {value!r}") from e


def budget_option(func: Callable[..., Any]) -> Callable[..., Any]:
    return click.option(
        "--budget",
        type=int,
        default=DEFAULT_BUDGET,
        envvar="DESC2_BUDGET",
        show_default=True,
        help="Enumeration node budget (env DESC2_BUDGET).",
    )(func)


def output_options(func: Callable[..., Any]) -> Callable[..., Any]:
    func = click.option("--out", type=click.Path(dir_okay=False, path_type=Path), help="Write the report here.")(func)
    return click.option(
        "--format", "output_format", type=click.Choice(["text", "doc"]), default="text", show_default=True
    )(func)


def reported(func: Callable[..., int]) -> Callable[..., None]:
    """Maps library errors to exit codes; the wrapped command returns its own status."""

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> None:
        ctx = click.get_current_context()
        try:
            status = func(*args, **kwargs)
        except ValidationError as e:
            click.echo(f"invalid options: {e.errors()[0]['msg']}", err=True)
            ctx.exit(EXIT_PARSE)
        except DocumentError as e:
            click.echo(f"parse error: {e}", err=True)
            ctx.exit(EXIT_PARSE)
        except BudgetExceededError as e:
            click.echo(f"resource error: {e}", err=True)
            ctx.exit(EXIT_RESOURCE)
        except Desc2Error as e:
            click.echo(f"error: {e}", err=True)
            ctx.exit(EXIT_FAILURE)
        else:
            ctx.exit(status)

    return wrapper


def emit(config: RunConfig, text: str, document: dict[str, Any]) -> None:
    """Prints the text report, or the document report in doc mode."""
    if config.output_format == "doc":
        payload = write_report(document, config.out)
        if config.out is None:
            click.echo(payload, nl=False)
        return
    if config.out is not None:
        config.out.write_text(text + "\n", encoding="utf-8")
    click.echo(text)


@click.group()
@click.option("-v", "--verbose", count=True, help="-v for INFO, -vv for DEBUG logging.")
def cli(verbose: int) -> None:
    """Finite strict 2-groupoids, descent data and restricted totalization."""
    setup_telemetry(verbose)


# ---------------------------------------------------------------------------
# validate
# ---------------------------------------------------------------------------


def _validation_document(report: ValidationReport) -> dict[str, Any]:
    return {
        "kind": "validation_report",
        "subject": report.subject,
        "valid": report.is_valid,
        "violations": [{"family": v.family, "detail": v.detail} for v in report.violations],
    }


@cli.command("validate")
@click.argument("path", type=click.Path(path_type=Path))
@budget_option
@output_options
@reported
def validate_command(path: Path, budget: int, output_format: str, out: Path | None) -> int:
    """Runs the validator matching the document kind."""
    config = RunConfig(inputs=[path], subcommand="validate", budget=budget, output_format=output_format, out=out)
    document = load(path)
    if document.kind == "two_groupoid":
        report = validate_two_groupoid(document.value, config.budget)
    elif document.kind == "sset":
        report = validate_sset(document.value, config.budget)
    elif document.kind == "cosimplicial_2gpd":
        report = validate_cosimplicial(document.value, config.budget)
    elif document.kind == "cover":
        report = ValidationReport(f"{document.value.name} f-vector {document.value.f_vector()}")
    else:
        levelwise = load_levelwise_map(path)
        levelwise.check_compatibility(config.budget)
        report = ValidationReport(levelwise.name)
        for component in levelwise.components:
            if isinstance(component, TableTwoFunctor):
                report.extend(validate_two_functor(component, config.budget))
    emit(config, report.summary(), _validation_document(report))
    return EXIT_PASS if report.is_valid else EXIT_FAILURE


# ---------------------------------------------------------------------------
# nerve
# ---------------------------------------------------------------------------


@cli.command("nerve")
@click.argument("path", type=click.Path(path_type=Path))
@click.option("--tables", is_flag=True, help="List every simplex with its faces.")
@click.option("--kan", "kan_dim", type=click.IntRange(1, 4), default=None, help="Also check horns up to this dimension.")
@budget_option
@output_options
@reported
def nerve_command(
    path: Path, tables: bool, kan_dim: int | None, budget: int, output_format: str, out: Path | None
) -> int:
    """Level counts of the 2-nerve of a two_groupoid document."""
    config = RunConfig(inputs=[path], subcommand="nerve", budget=budget, output_format=output_format, out=out)
    document = load(path)
    if document.kind != "two_groupoid":
        raise DocumentError(str(path), f"nerve needs a two_groupoid document, got {document.kind}")
    nerve = two_nerve(document.value)
    lines = [describe(nerve, tables=tables)]
    payload: dict[str, Any] = {"kind": "nerve_report", "name": nerve.name, "levels": list(nerve.level_counts())}
    status = EXIT_PASS
    if kan_dim is not None:
        kan = kan_check(nerve, kan_dim, config.budget)
        lines.append(kan.summary())
        payload["horns_checked"] = kan.horns_checked
        payload["unfillable"] = len(kan.unfillable)
        status = EXIT_PASS if kan.is_kan else EXIT_FAILURE
    emit(config, "\n".join(lines), payload)
    return status


# ---------------------------------------------------------------------------
# desc
# ---------------------------------------------------------------------------


@cli.group("desc")
def desc_group() -> None:
    """Descent data, gauge classes and their comparisons."""


@desc_group.command("enumerate")
@click.argument("path", type=click.Path(path_type=Path))
@budget_option
@output_options
@reported
def desc_enumerate_command(path: Path, budget: int, output_format: str, out: Path | None) -> int:
    """Lists every descent datum and re-checks the cocycle equation on each."""
    config = RunConfig(inputs=[path], subcommand="desc enumerate", budget=budget, output_format=output_format, out=out)
    C = load_cosimplicial(path)
    data = enumerate_descent_data(C, config.budget)
    report = validate_descent_data(C, data)
    text = "\n".join([f"{C.name}: {len(data)} descent data"] + [f"  {d!r}" for d in data])
    emit(config, text, {"kind": "descent_data", "name": C.name, "data": data})
    return EXIT_PASS if report.is_valid else EXIT_FAILURE


@desc_group.command("classes")
@click.argument("path", type=click.Path(path_type=Path))
@click.option("--exhaustive", is_flag=True, help="Search every pair of data for a gauge witness.")
@budget_option
@output_options
@reported
def desc_classes_command(path: Path, exhaustive: bool, budget: int, output_format: str, out: Path | None) -> int:
    """Descent-datum count, gauge-class count and class representatives."""
    config = RunConfig(inputs=[path], subcommand="desc classes", budget=budget, output_format=output_format, out=out)
    C = load_cosimplicial(path)
    classification = gauge_classes(C, config.budget, exhaustive=exhaustive)
    lines = [classification.summary()]
    lines += [
        f"  class {position}: {len(members)} data, representative {members[0]!r}"
        for position, members in enumerate(classification.classes)
    ]
    payload = {
        "kind": "descent_classes",
        "name": C.name,
        "data": len(classification.data),
        "classes": classification.classes,
    }
    emit(config, "\n".join(lines), payload)
    return EXIT_PASS


@desc_group.command("compare")
@click.argument("path", type=click.Path(path_type=Path))
@click.option("--dims", default="0,1", callback=_parse_dims, show_default=True, help="Simplex dimensions to compare.")
@click.option("--full", is_flag=True, help="Enumerate every Tot_r simplex, not only the normal ones.")
@budget_option
@output_options
@reported
def desc_compare_command(
    path: Path, dims: list[int], full: bool, budget: int, output_format: str, out: Path | None
) -> int:
    """Compares N(Desc) with Tot_r of the level-wise nerves."""
    config = RunConfig(
        inputs=[path], subcommand="desc compare", budget=budget, dims=dims, output_format=output_format, out=out, full=full
    )
    C = load_cosimplicial(path)
    report = compare_nerve_tot(C, config.dims, config.budget, full=config.full)
    payload = {
        "kind": "comparison_report",
        "name": report.name,
        "passed": report.passed,
        "rows": [
            {"k": r.k, "nerve": r.nerve_count, "tot": r.tot_count, "normal": r.normal_count, "passed": r.passed}
            for r in report.rows
        ],
    }
    emit(config, report.summary(), payload)
    return EXIT_PASS if report.passed else EXIT_FAILURE


@desc_group.command("invariance")
@click.argument("source", type=click.Path(path_type=Path))
@click.argument("target", type=click.Path(path_type=Path))
@click.argument("mapping", type=click.Path(path_type=Path))
@click.option("--full", is_flag=True, help="Also test the induced map of descent 2-groupoids.")
@budget_option
@output_options
@reported
def desc_invariance_command(
    source: Path, target: Path, mapping: Path, full: bool, budget: int, output_format: str, out: Path | None
) -> int:
    """Gauge classes through a level-wise map, once it is shown to be a weak equivalence."""
    config = RunConfig(
        inputs=[source, target, mapping],
        subcommand="desc invariance",
        budget=budget,
        output_format=output_format,
        out=out,
        full=full,
    )
    levelwise = load_levelwise_map(mapping, source, target)
    report = check_invariance(levelwise, config.budget, full=config.full)
    payload = {
        "kind": "invariance_report",
        "name": report.name,
        "asserted": report.asserted,
        "source_classes": report.source_classes,
        "target_classes": report.target_classes,
        "bijective": report.bijective,
        "passed": report.passed,
    }
    emit(config, report.summary(), payload)
    return EXIT_PASS if report.passed else EXIT_FAILURE


# ---------------------------------------------------------------------------
# oracle
# ---------------------------------------------------------------------------


@cli.command("oracle")
@click.argument("path", type=click.Path(path_type=Path))
@click.option("--check", is_flag=True, help="Compare the predicted class count with gauge_classes.")
@budget_option
@output_options
@reported
def oracle_command(path: Path, check: bool, budget: int, output_format: str, out: Path | None) -> int:
    """Cohomology orders of an abelian coefficient cosimplicial object."""
    config = RunConfig(inputs=[path], subcommand="oracle", budget=budget, output_format=output_format, out=out)
    C = load_cosimplicial(path)
    report = abelian_cohomology_oracle(C, config.budget)
    lines = [report.summary(), f"predicted gauge classes: {report.descent_class_count}"]
    payload: dict[str, Any] = {
        "kind": "oracle_report",
        "name": report.name,
        "mode": report.mode,
        "modulus": report.modulus,
        "ranks": report.ranks,
        "orders": report.orders,
        "predicted_classes": report.descent_class_count,
    }
    status = EXIT_PASS
    if check:
        observed = len(gauge_classes(C, config.budget).classes)
        lines.append(f"gauge classes: {observed} ({'match' if observed == report.descent_class_count else 'MISMATCH'})")
        payload["observed_classes"] = observed
        status = EXIT_PASS if observed == report.descent_class_count else EXIT_FAILURE
    emit(config, "\n".join(lines), payload)
    return status


def main() -> None:
    # .env is read before click resolves DESC2_BUDGET
    load_dotenv()
    cli()


if __name__ == "__main__":
    main()
