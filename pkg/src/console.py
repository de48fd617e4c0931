import logging
import logging.config
from collections.abc import Awaitable, Callable
from dataclasses import dataclass
from functools import wraps
from pathlib import Path
from typing import Any, TypeAlias

import asyncclick as click
import yaml

from container import build_container
from di import Container
from service.codim import CodimensionService
from service.core.errors import (
    CapExceededError,
    ConstructionError,
    DimensionMismatchError,
    PolyParseError,
    SizeGuardError,
    SpecParseError,
    UnsupportedError,
    VerificationError,
)
from service.freealg import FreeAlgebraService
from service.idcheck import IdentityService
from service.reptheory import RepresentationService
from service.verification import VerificationService
from settings import get_settings
from utils import ExceptionConfiguration, ExceptionHandler, Output

logger = logging.getLogger("console")

exception_map = [
    ExceptionConfiguration(exception=SpecParseError, exit_code=2, app_code="SPEC_PARSE"),
    ExceptionConfiguration(exception=PolyParseError, exit_code=2, app_code="POLY_PARSE"),
    ExceptionConfiguration(exception=UnsupportedError, exit_code=2, app_code="UNSUPPORTED"),
    ExceptionConfiguration(exception=SizeGuardError, exit_code=2, app_code="SIZE_GUARD"),
    ExceptionConfiguration(exception=DimensionMismatchError, exit_code=2, app_code="DIMENSION_MISMATCH"),
    ExceptionConfiguration(exception=ConstructionError, exit_code=2, app_code="CONSTRUCTION"),
    ExceptionConfiguration(exception=CapExceededError, exit_code=1, app_code="CAP_EXCEEDED"),
    ExceptionConfiguration(exception=VerificationError, exit_code=1, app_code="VERIFICATION_FAILED"),
]


def configure_logging(path: Path) -> None:
    with path.open() as f:
        logging.config.dictConfig(yaml.safe_load(f))
    logger.debug(f"Logging configured from {path}")


@dataclass
class Invocation:
    output: Output
    container: Container


Command: TypeAlias = Callable[..., Awaitable[int]]


def engine_command(command: Command) -> Callable[..., Awaitable[None]]:
    """
    Adds the shared flags, builds the services and maps engine errors to exit codes.

    The wrapped command receives an :class:`Invocation` first and returns its exit code.
    """

    @click.option("--json", "as_json", is_flag=True, help="Machine readable JSON output")
    @click.option("--csv", "as_csv", is_flag=True, help="CSV rows where the command has a table")
    @click.option("--threads", type=click.IntRange(min=1), default=None, help="Worker processes")
    @click.option("--seed", type=click.IntRange(min=0), default=None, help="Seed for randomized corpora")
    @click.option("--max-dim", type=click.IntRange(min=1), default=None, help="Override of the materialized dimension guard")
    @wraps(command)
    async def wrapper(as_json: bool, as_csv: bool, threads: int | None, seed: int | None, max_dim: int | None, **kwargs: Any) -> None:
        if as_json and as_csv:
            raise click.UsageError("--json and --csv are mutually exclusive")
        output = Output("json" if as_json else "csv" if as_csv else "text")
        invocation = Invocation(output, build_container(max_dim=max_dim, threads=threads, seed=seed))
        code = await ExceptionHandler(exception_map).dispatch(lambda: command(invocation, **kwargs), output)
        await click.get_current_context().aexit(code)

    return wrapper


@click.group()
async def console() -> None:
    configure_logging(get_settings().LOGGING_CONFIG)


@console.command("min-index")
@click.option("--algebra", required=True, help="Spec such as E2*E2 or E*E3")
@click.option("--cap", type=click.IntRange(min=3), default=None, help="Largest index tried")
@engine_command
async def min_index(invocation: Invocation, algebra: str, cap: int | None) -> int:
    entity = await invocation.container.get(IdentityService).min_index(algebra, cap)
    invocation.output.emit(entity, text=str(entity.index))
    return 0


@console.command("check-identity")
@click.option("--algebra", required=True)
@click.option("--poly", required=True, help="Polynomial literal, e.g. [x1,x2]*[x3,x4]")
@click.option("--method", type=click.Choice(["auto", "parity", "brute"]), default="auto")
@engine_command
async def check_identity(invocation: Invocation, algebra: str, poly: str, method: str) -> int:
    entity = await invocation.container.get(IdentityService).check_identity(algebra, poly, method)  # type: ignore[arg-type]
    lines = [f"{poly} on {algebra}: {'IDENTITY' if entity.is_identity else 'NOT AN IDENTITY'}"]
    if entity.witness is not None:
        lines += [f"  arguments: {', '.join(entity.witness.arguments)}", f"  value: {entity.witness.value}"]
    invocation.output.emit(entity, text=lines)
    return 0


@console.command("witness")
@click.option("--recipe", required=True, type=click.Choice(["lie-equal", "grassmann-chain", "square-commutator", "g-family"]))
@click.option("--k", type=int, default=None)
@click.option("--p", type=int, default=None)
@click.option("--i", type=int, default=None)
@click.option("--degree", type=int, default=None)
@engine_command
async def witness(invocation: Invocation, recipe: str, **params: int | None) -> int:
    given = {name: value for name, value in params.items() if value is not None}
    entity = await invocation.container.get(IdentityService).witness(recipe, **given)  # type: ignore[arg-type]
    invocation.output.emit(entity, text=[f"{entity.recipe} on {entity.algebra}", *(f"  x{i} = {arg}" for i, arg in enumerate(entity.arguments, 1)), f"  value: {entity.value}"])
    return 0


@console.command("gamma-dim")
@click.option("--n", type=click.IntRange(min=0), required=True)
@click.option("--p", type=click.IntRange(min=2), default=None, help="Compute c_n and gamma_n of N_p")
@click.option("--algebra", default=None, help="Compute gamma_n of this algebra instead")
@click.option("--method", type=click.Choice(["parity", "direct"]), default="parity")
@engine_command
async def gamma_dim(invocation: Invocation, n: int, p: int | None, algebra: str | None, method: str) -> int:
    if (p is None) == (algebra is None):
        raise UnsupportedError("give exactly one of --p and --algebra")
    if algebra is not None:
        gamma = await invocation.container.get(IdentityService).gamma(algebra, n, method)  # type: ignore[arg-type]
        invocation.output.emit(gamma, text=f"gamma_{n}({gamma.algebra}) = {gamma.gamma}")
    else:
        dims = await invocation.container.get(FreeAlgebraService).quotient_dims(n, p)  # type: ignore[arg-type]
        invocation.output.emit(dims, text=f"c_{n}(N_{p}) = {dims.c}, gamma_{n}(N_{p}) = {dims.gamma}")
    return 0


@console.command("codim")
@click.option("--k", type=click.IntRange(min=2), default=None, help="Bound for N_2k")
@click.option("--parity", type=click.Choice(["odd", "even"]), default="odd", help="A_k (odd) or B_k (even) tail")
@click.option("--l", "l_", type=click.IntRange(min=1), default=None, help="Codimensions of E*E_2l instead")
@click.option("--n-max", type=click.IntRange(min=0), default=12)
@engine_command
async def codim(invocation: Invocation, k: int | None, parity: str, l_: int | None, n_max: int) -> int:
    service = invocation.container.get(CodimensionService)
    if (k is None) == (l_ is None):
        raise UnsupportedError("give exactly one of --k and --l")
    entity = await (service.did_codim(l_, n_max) if l_ is not None else service.codim(k, parity, n_max))  # type: ignore[arg-type]
    lines = [f"{entity.label}: gamma_n = {entity.tail} for n >= {entity.threshold}", f"r = {entity.closed_form.r}", f"s = {entity.closed_form.s}"]
    lines += [f"{row.n:>3}  {row.lower_bound:>24}  {row.closed_form:>24}" for row in entity.rows]
    invocation.output.emit(entity, text=lines, rows=entity.rows)
    return 0


@console.command("decompose")
@click.option("--n", type=click.IntRange(min=0), required=True)
@click.option("--p", type=click.IntRange(min=2), required=True)
@engine_command
async def decompose(invocation: Invocation, n: int, p: int) -> int:
    entity = await invocation.container.get(RepresentationService).decompose(n, p)
    lines = [f"{entity.label}: dimension {entity.dimension}", *(f"  {c.multiplicity} x M{c.partition} (dim {c.dim})" for c in entity.components)]
    invocation.output.emit(entity, text=lines, rows=entity.components)
    return 0


@console.command("did")
@click.option("--n", type=click.IntRange(min=2), required=True)
@click.option("--l", "l_", type=click.IntRange(min=1), required=True)
@click.option("--m", type=click.IntRange(min=1), default=None)
@engine_command
async def did(invocation: Invocation, n: int, l_: int, m: int | None) -> int:
    entity = await invocation.container.get(RepresentationService).did(n, l_, m)
    lines = [f"{entity.label}: dimension {entity.dimension}", *(f"  M{c.partition} (dim {c.dim})" for c in entity.components)]
    invocation.output.emit(entity, text=lines, rows=entity.components)
    return 0


@console.command("bounds")
@click.option("--k", type=click.IntRange(min=2), required=True)
@engine_command
async def bounds(invocation: Invocation, k: int) -> int:
    entity = await invocation.container.get(CodimensionService).bounds(k)
    lines = [f"A_{k} lead: {entity.a_lead}", f"B_{k} lead: {entity.b_lead}", f"r lead: {entity.r_lead}"]
    if entity.gamma_lead is not None:
        lines += [f"combined gamma lead: {entity.gamma_lead}", f"combined codimension lead: {entity.codim_lead}"]
    invocation.output.emit(entity, text=lines)
    return 0


@console.command("inclusions")
@click.option("--m", type=click.IntRange(min=2), required=True)
@click.option("--n", "q", type=click.IntRange(min=2), default=None, help="Second factor of the product I_m·I_n")
@click.option("--degree", type=click.IntRange(min=2), required=True)
@click.option("--target", type=click.IntRange(min=2), default=None)
@click.option("--bracket", is_flag=True, help="Check [I_m, x, y] ⊂ I_target instead of a product")
@engine_command
async def inclusions(invocation: Invocation, m: int, q: int | None, degree: int, target: int | None, bracket: bool) -> int:
    freealg = invocation.container.get(FreeAlgebraService)
    if bracket:
        report = await freealg.lemma(m, degree, target)
    elif q is None:
        raise UnsupportedError("--n is required unless --bracket is given")
    else:
        report = await freealg.inclusion(m, q, degree, target)
    invocation.output.emit(report, text=f"{report.statement}: {'VERIFIED' if report.holds else 'FAILED'}")
    return 0 if report.holds else 1


@console.command("verify-suite")
@click.option("--only", default=None, help="Run the claims whose name contains this text")
@engine_command
async def verify_suite(invocation: Invocation, only: str | None) -> int:
    report = await invocation.container.get(VerificationService).run(only)
    lines = [f"{claim.name}: {'VERIFIED' if claim.verified else 'FAILED'} ({claim.detail})" for claim in report.claims]
    invocation.output.emit(report, text=lines, rows=list(report.claims))
    return 0 if report.all_verified else 1


if __name__ == "__main__":
    console()
