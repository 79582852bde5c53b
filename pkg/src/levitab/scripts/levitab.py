from __future__ import annotations

import contextlib
import enum
import json
import logging
from collections.abc import Iterator
from typing import Optional

import typer
import typing_extensions

from ..lib_doubled import character_bcd, enumerate_doubled
from ..lib_monoid import (
    dim_invariants_tableaux,
    primitive_basis,
    table_row,
)
from ..lib_oracle import OracleMethod, dim_invariants_oracle, weight_multiplicities, weyl_dim
from ..lib_verify import RunConfig, VerifyScope, classify as do_classify, run_verify
from ..lib_young_a import character_a, enumerate_fillings_a
from ..util_baseclasses import (
    BudgetExceededException,
    LevitabException,
    ParseException,
    PreconditionException,
)
from ..util_constants import (
    BOX_BUDGET_A,
    BOX_BUDGET_BCD,
    DEFAULT_JOBS,
    DIM_BUDGET,
    WEIGHT_BOUND,
)
from ..util_lie_types import Family, LieType, ThetaSet
from ..util_logging import init_logging
from ..util_output import OutputFormat, Record, render_records
from ..util_real_forms import RealForm, theta_of
from ..util_weight import Weight
from ..util_young_a import YoungDiagram

# 'typer' does not work correctly with typing.Annotated
# Required is: typing_extensions.Annotated
TyperAnnotated = typing_extensions.Annotated

# mypy: disable-error-code="valid-type"

logger = logging.getLogger(__file__)

app = typer.Typer(no_args_is_help=True)


class ExitCode(int, enum.Enum):
    SUCCESS = 0
    VERIFICATION_FAILED = 1
    USAGE = 2
    BUDGET_EXCEEDED = 3


class InvariantMethod(str, enum.Enum):
    TABLEAUX = "tableaux"
    ORACLE = "oracle"
    BOTH = "both"


@contextlib.contextmanager
def _exit_on_error() -> Iterator[None]:
    """
    Maps the domain exceptions onto the exit codes.
    """
    try:
        yield
    except (ParseException, PreconditionException) as e:
        logger.error(f"[COLOR_ERROR]{e}")
        raise typer.Exit(ExitCode.USAGE.value) from e
    except BudgetExceededException as e:
        logger.error(f"[COLOR_ERROR]{e}")
        raise typer.Exit(ExitCode.BUDGET_EXCEEDED.value) from e
    except LevitabException as e:
        logger.exception(f"[COLOR_ERROR]{e}")
        raise typer.Exit(ExitCode.VERIFICATION_FAILED.value) from e


def _emit(records: list[Record], output_format: OutputFormat) -> None:
    print(render_records(records, output_format), end="")


def _lie_type(type_text: str, n: int | None) -> LieType:
    """
    "A" with --n gives A_{n-1}, otherwise the text names the type.
    """
    if type_text.strip() == "A":
        if n is None:
            raise ParseException("Type A needs --n", type_text)
        return LieType(Family.A, n - 1)
    lie_type = LieType.factory(type_text)
    if n is not None and lie_type.family is Family.A and n != lie_type.rank + 1:
        raise PreconditionException(f"--n {n} contradicts {lie_type}!")
    return lie_type


@app.callback()
def main(
    verbose: TyperAnnotated[bool, typer.Option(help="DEBUG logging on stderr.")] = False,
) -> None:
    init_logging(verbose=verbose)


@app.command(help="Decides whether V_λ has nonzero l-invariants for a real form.")
def classify(
    form: str,
    weight: TyperAnnotated[str, typer.Argument(metavar="LAMBDA")],
    oracle: TyperAnnotated[bool, typer.Option(help="Adds the Freudenthal count.")] = False,
    table1: TyperAnnotated[bool, typer.Option(help="Adds the evaluated table row.")] = False,
    budget: TyperAnnotated[Optional[int], typer.Option()] = None,  # noqa: UP007
    output_format: TyperAnnotated[OutputFormat, typer.Option("--format")] = OutputFormat.JSON,
) -> None:
    with _exit_on_error():
        real_form = RealForm.factory(form)
        lam = Weight.factory(weight)
        config = RunConfig(box_budget=budget)
        record = do_classify(real_form, lam, config, with_oracle=oracle)
        if table1:
            record["table1"] = table_row(real_form)
        _emit([record], output_format)


@app.command(name="enumerate", help="Streams the tableaux of a shape, one JSON tableau per line.")
def enumerate_command(
    lie_type_text: TyperAnnotated[str, typer.Option("--type")],
    shape: TyperAnnotated[str, typer.Option(help="Row lengths, e.g. 2,2,2.")],
    n: TyperAnnotated[Optional[int], typer.Option(help="Order of type A.")] = None,  # noqa: UP007
    null: TyperAnnotated[bool, typer.Option()] = False,
    balanced: TyperAnnotated[bool, typer.Option()] = False,
    theta: TyperAnnotated[Optional[str], typer.Option(help="Θ-codominant filter.")] = None,  # noqa: UP007
    sign: TyperAnnotated[
        Optional[int],  # noqa: UP007
        typer.Option(help="Sign filter -1, 0 or 1, types B, C and D only."),
    ] = None,
    budget: TyperAnnotated[Optional[int], typer.Option()] = None,  # noqa: UP007
) -> None:
    with _exit_on_error():
        lie_type = _lie_type(lie_type_text, n)
        codominant = None if theta is None else ThetaSet.factory(theta).validate(lie_type)
        if sign is not None:
            if lie_type.family is Family.A:
                raise PreconditionException("--sign applies to doubled tableaux only!")
            if sign not in (-1, 0, 1):
                raise PreconditionException(f"--sign must be -1, 0 or 1, got {sign}!")
        if lie_type.family is Family.A:
            order = lie_type.rank + 1
            P = YoungDiagram.factory(shape, order=order)
            tableaux_a = enumerate_fillings_a(
                P,
                order,
                balanced=balanced or null,
                codominant=codominant,
                box_budget=budget or BOX_BUDGET_A,
            )
            for T in tableaux_a:
                print(json.dumps(T.to_json()))
            return
        if not lie_type.is_bcd:
            raise PreconditionException(f"No tableaux for {lie_type}!")
        P = YoungDiagram.factory(shape, order=lie_type.rank)
        tableaux = enumerate_doubled(
            P,
            lie_type,
            null=null,
            sign=sign,
            codominant=codominant,
            box_budget=budget or BOX_BUDGET_BCD,
        )
        for T in tableaux:
            print(json.dumps(T.to_json()))


@app.command(help="The character of V_λ: Freudenthal, or the tableau multiset.")
def character(
    lie_type_text: TyperAnnotated[str, typer.Argument(metavar="TYPE")],
    weight: TyperAnnotated[str, typer.Argument(metavar="LAMBDA")],
    tableaux: TyperAnnotated[bool, typer.Option()] = False,
    budget: TyperAnnotated[Optional[int], typer.Option()] = None,  # noqa: UP007
    dim_budget: TyperAnnotated[int, typer.Option()] = DIM_BUDGET,
    output_format: TyperAnnotated[OutputFormat, typer.Option("--format")] = OutputFormat.JSON,
) -> None:
    with _exit_on_error():
        lie_type = LieType.factory(lie_type_text)
        lam = Weight.factory(weight)
        if not tableaux:
            table = weight_multiplicities(lam, lie_type, dim_budget)
            _emit(table.to_json(), output_format)
            return
        if lie_type.family is Family.A:
            counter = character_a(lam, lie_type.rank + 1, box_budget=budget or BOX_BUDGET_A)
        elif lie_type.is_bcd:
            counter = character_bcd(lam, lie_type, box_budget=budget or BOX_BUDGET_BCD)
        else:
            raise PreconditionException(f"No tableaux for {lie_type}!")
        records = [{"weight": w.text, "multiplicity": m} for w, m in sorted(counter.items())]
        _emit(records, output_format)


@app.command(help="dim V_λ^l by tableau count and/or Freudenthal.")
def invariant_dim(
    form: str,
    weight: TyperAnnotated[str, typer.Argument(metavar="LAMBDA")],
    method: TyperAnnotated[InvariantMethod, typer.Option()] = InvariantMethod.BOTH,
    oracle_method: TyperAnnotated[OracleMethod, typer.Option()] = OracleMethod.AUTO,
    budget: TyperAnnotated[Optional[int], typer.Option()] = None,  # noqa: UP007
    dim_budget: TyperAnnotated[int, typer.Option()] = DIM_BUDGET,
    output_format: TyperAnnotated[OutputFormat, typer.Option("--format")] = OutputFormat.JSON,
) -> None:
    with _exit_on_error():
        real_form = RealForm.factory(form)
        lam = Weight.factory(weight)
        record: Record = {"form": real_form.name, "lambda": lam.text}
        has_tableaux = real_form.lie_type.is_classical and not real_form.is_complex
        if method is InvariantMethod.TABLEAUX or (method is InvariantMethod.BOTH and has_tableaux):
            record["dim_tableaux"] = dim_invariants_tableaux(real_form, lam, budget)
        if method in (InvariantMethod.ORACLE, InvariantMethod.BOTH):
            record["dim_oracle"] = dim_invariants_oracle(
                lam,
                real_form.lie_type,
                theta_of(real_form),
                method=oracle_method,
                dim_budget=dim_budget,
            )
        _emit([record], output_format)


@app.command(name="primitive-basis", help="The primitive elements of the monoid Q ∩ h^+.")
def primitive_basis_command(
    lie_type_text: TyperAnnotated[str, typer.Argument(metavar="TYPE")],
    output_format: TyperAnnotated[OutputFormat, typer.Option("--format")] = OutputFormat.JSON,
) -> None:
    with _exit_on_error():
        lie_type = LieType.factory(lie_type_text)
        basis = primitive_basis(lie_type)
        records = [
            {
                "type": lie_type.name,
                "fundamental": list(labels),
                "lambda": element.text,
                "dim": weyl_dim(element, lie_type),
            }
            for labels, element in zip(basis.fundamental(), basis.elements)
        ]
        _emit(records, output_format)


@app.command(help="Runs a verification sweep, exit 0 iff every check passes.")
def verify(
    scope: VerifyScope,
    lie_type_text: TyperAnnotated[
        Optional[list[str]],  # noqa: UP007
        typer.Option("--type", help="Restricts the sweep, repeatable."),
    ] = None,
    rank_bound: TyperAnnotated[int, typer.Option()] = 3,
    weight_bound: TyperAnnotated[int, typer.Option("--weight-bound", "--lmax")] = WEIGHT_BOUND,
    kmax: TyperAnnotated[int, typer.Option()] = 4,
    tuple_length: TyperAnnotated[int, typer.Option()] = 2,
    budget: TyperAnnotated[Optional[int], typer.Option()] = None,  # noqa: UP007
    dim_budget: TyperAnnotated[int, typer.Option()] = DIM_BUDGET,
    oracle_method: TyperAnnotated[OracleMethod, typer.Option()] = OracleMethod.AUTO,
    jobs: TyperAnnotated[int, typer.Option()] = DEFAULT_JOBS,
    output_format: TyperAnnotated[OutputFormat, typer.Option("--format")] = OutputFormat.JSON,
) -> None:
    with _exit_on_error():
        config = RunConfig(
            rank_bound=rank_bound,
            weight_bound=weight_bound,
            box_budget=budget,
            dim_budget=dim_budget,
            output_format=output_format,
            jobs=jobs,
            kmax=kmax,
            tuple_length=tuple_length,
            oracle_method=oracle_method,
            lie_types=tuple(LieType.factory(text) for text in lie_type_text or ()),
        )
        report = run_verify(scope, config)
        _emit(report.records(), config.output_format)
    if report.exit_code != ExitCode.SUCCESS.value:
        raise typer.Exit(report.exit_code)


if __name__ == "__main__":
    app()
