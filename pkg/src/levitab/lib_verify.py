"""
Verification sweeps behind `levitab verify` and the classify record.

Every scope is split into groups (a form, a type, a family spec).
The groups run in a worker pool, each returns its CheckResults and the
report sorts them before they are rendered.
"""

import collections
import dataclasses
import enum
import itertools
import logging
import multiprocessing
from collections.abc import Callable, Sequence

from .lib_doubled import character_bcd, evaluate_tableau
from .lib_families import (
    FamilySpec,
    expected_syndrome,
    family_tableau,
    iter_family_specs,
    primitive_filling,
    standard_types,
)
from .lib_monoid import (
    decompose,
    dim_invariants_tableaux,
    dominant_weights_in_box,
    m_table_membership,
    m_table_primitives,
    primitive_basis,
    weights_in_box,
)
from .lib_oracle import (
    OracleMethod,
    bruhat_tuple_oracle,
    dim_invariants_oracle,
    weight_multiplicities,
    weyl_dim,
)
from .lib_young_a import character_a
from .util_baseclasses import BudgetExceededException, PreconditionException
from .util_columns import (
    Column,
    admissible_oracle,
    admissible_pair,
    all_columns,
    column_weight,
    hasse_cover,
    young_leq,
)
from .util_constants import (
    ADMISSIBLE_RANK_BOUND,
    DEFAULT_JOBS,
    DIM_BUDGET,
    WEIGHT_BOUND,
    WEYL_RANK_BOUND,
)
from .util_exceptional_data import primitive_rows
from .util_lie_types import Family, LieType
from .util_output import OutputFormat, Record
from .util_real_forms import FormKind, RealForm, real_forms_of, theta_of
from .util_root_data import dominant_representative
from .util_weight import Weight

logger = logging.getLogger(__file__)


class VerifyScope(str, enum.Enum):
    FORM_SWEEP = "form-sweep"
    CHARACTER = "character"
    ADMISSIBLE = "admissible"
    FAMILIES = "families"
    PRIMITIVE_BASIS = "primitive-basis"
    BRUHAT = "bruhat"
    HASSE = "hasse"
    FILLINGS = "fillings"


class CheckStatus(str, enum.Enum):
    PASSED = "passed"
    FAILED = "failed"
    SKIPPED = "skipped"
    """
    Budget exceeded: neither passed nor failed.
    """


@dataclasses.dataclass(frozen=True, repr=True)
class RunConfig:
    rank_bound: int = 3
    weight_bound: int = WEIGHT_BOUND
    """
    Bound on λ_1; type A: on Σ|λ_i| / 2; character scope: on Σ x_i.
    """
    box_budget: int | None = None
    """
    None: BOX_BUDGET_A for type A, BOX_BUDGET_BCD for B, C, D.
    """
    dim_budget: int = DIM_BUDGET
    output_format: OutputFormat = OutputFormat.JSON
    jobs: int = DEFAULT_JOBS
    kmax: int = 4
    tuple_length: int = 2
    oracle_method: OracleMethod = OracleMethod.AUTO
    lie_types: tuple[LieType, ...] = ()
    """
    Restricts the scope to these types; empty: every type up to rank_bound.
    """

    def __post_init__(self) -> None:
        assert isinstance(self.output_format, OutputFormat)
        assert isinstance(self.oracle_method, OracleMethod)
        assert isinstance(self.lie_types, tuple)
        for name in ("rank_bound", "weight_bound", "dim_budget", "jobs", "kmax", "tuple_length"):
            value = getattr(self, name)
            assert isinstance(value, int), name
            if value < 1:
                raise PreconditionException(f"{name} must be positive, got {value}!")
        if self.box_budget is not None and self.box_budget < 1:
            raise PreconditionException(f"box_budget must be positive, got {self.box_budget}!")


@dataclasses.dataclass(frozen=True, repr=True, order=True)
class CheckResult:
    group: str
    item: str
    status: CheckStatus
    detail: str = ""

    def to_record(self) -> Record:
        return {
            "group": self.group,
            "item": self.item,
            "status": self.status.value,
            "detail": self.detail,
        }


@dataclasses.dataclass
class VerifyReport:
    scope: VerifyScope
    results: list[CheckResult] = dataclasses.field(default_factory=list)

    def count(self, status: CheckStatus) -> int:
        return sum(1 for result in self.results if result.status is status)

    @property
    def success(self) -> bool:
        return self.count(CheckStatus.FAILED) == 0 and self.count(CheckStatus.SKIPPED) == 0

    @property
    def exit_code(self) -> int:
        if self.count(CheckStatus.FAILED) > 0:
            return 1
        if self.count(CheckStatus.SKIPPED) > 0:
            return 3
        return 0

    def records(self) -> list[Record]:
        """
        One summary per group, then every result that did not pass.
        """
        by_group: dict[str, collections.Counter[CheckStatus]] = collections.defaultdict(
            collections.Counter
        )
        for result in self.results:
            by_group[result.group][result.status] += 1
        records: list[Record] = [
            {
                "scope": self.scope.value,
                "group": group,
                "passed": counter[CheckStatus.PASSED],
                "failed": counter[CheckStatus.FAILED],
                "skipped": counter[CheckStatus.SKIPPED],
            }
            for group, counter in sorted(by_group.items())
        ]
        records.extend(
            result.to_record()
            for result in sorted(self.results)
            if result.status is not CheckStatus.PASSED
        )
        return records


def _check(group: str, item: str, check: Callable[[], str | None]) -> CheckResult:
    """
    check() returns None when it passes, else the counterexample.
    """
    try:
        detail = check()
    except BudgetExceededException as e:
        logger.debug(f"{group} {item}: skipped, {e}")
        return CheckResult(group, item, CheckStatus.SKIPPED, str(e))
    except PreconditionException as e:
        detail = str(e)
    if detail is None:
        logger.debug(f"{group} {item}: passed")
        return CheckResult(group, item, CheckStatus.PASSED)
    logger.debug(f"{group} {item}: FAILED {detail}")
    return CheckResult(group, item, CheckStatus.FAILED, detail)


def _classical_types(config: RunConfig, families: str, rank_bound: int | None = None) -> list[LieType]:
    """
    The explicitly requested types are only capped by the hard rank_bound of the scope.
    """
    if config.lie_types:
        return [
            t
            for t in config.lie_types
            if t.family.value in families and (rank_bound is None or t.rank <= rank_bound)
        ]
    bound = config.rank_bound if rank_bound is None else min(rank_bound, config.rank_bound)
    min_rank = {"A": 1, "B": 2, "C": 2, "D": 3}
    return [
        LieType.classical(family, r)
        for family in families
        for r in range(min_rank[family], bound + 1)
    ]


def classify(
    form: RealForm, lam: Weight, config: RunConfig, with_oracle: bool = False
) -> Record:
    """
    The verdict record {form, lambda, in_table, failed_condition, dim_tableaux, dim_oracle}.
    dim_tableaux is None for exceptional and complex forms and above the box budget.
    """
    verdict = m_table_membership(form, lam)
    record: Record = {"form": form.name, "lambda": lam.text, **verdict.to_json()}
    record["dim_tableaux"] = None
    if form.lie_type.is_classical and not form.is_complex:
        try:
            record["dim_tableaux"] = dim_invariants_tableaux(form, lam, config.box_budget)
        except BudgetExceededException as e:
            logger.info(f"dim_tableaux skipped: {e}")
    if with_oracle:
        if form.is_complex:
            raise PreconditionException(f"No oracle for the complex form {form}!")
        record["dim_oracle"] = dim_invariants_oracle(
            lam,
            form.lie_type,
            theta_of(form),
            method=config.oracle_method,
            dim_budget=config.dim_budget,
        )
    return record


def _group_form_sweep(form_text: str, config: RunConfig) -> list[CheckResult]:
    form = RealForm.factory(form_text)
    lie_type = form.lie_type
    theta = theta_of(form)

    def check(lam: Weight) -> str | None:
        verdict = m_table_membership(form, lam)
        count = dim_invariants_tableaux(form, lam, config.box_budget)
        oracle = dim_invariants_oracle(
            lam, lie_type, theta, method=config.oracle_method, dim_budget=config.dim_budget
        )
        if verdict.reformulation_agrees is False:
            return "the p < (p+q)/4 reformulation disagrees"
        if count != oracle or verdict.in_table != (count > 0):
            return f"in_table={verdict.in_table} dim_tableaux={count} dim_oracle={oracle}"
        return None

    return [
        _check(form.name, lam.text, lambda lam=lam: check(lam))
        for lam in weights_in_box(lie_type, config.weight_bound)
    ]


def _group_character(type_text: str, config: RunConfig) -> list[CheckResult]:
    lie_type = LieType.factory(type_text)

    def check(lam: Weight) -> str | None:
        expected = weight_multiplicities(lam, lie_type, config.dim_budget).counter()
        kwargs = {} if config.box_budget is None else {"box_budget": config.box_budget}
        if lie_type.family is Family.A:
            found = character_a(lam, lie_type.rank + 1, **kwargs)
        else:
            found = character_bcd(lam, lie_type, **kwargs)
        if found != expected:
            return f"tableaux give {found.total()} weights, Freudenthal {expected.total()}"
        return None

    return [
        _check(lie_type.name, lam.text, lambda lam=lam: check(lam))
        for lam in dominant_weights_in_box(lie_type, config.weight_bound)
    ]


def _group_admissible(type_text: str, config: RunConfig) -> list[CheckResult]:
    lie_type = LieType.factory(type_text)
    columns = all_columns(lie_type.rank)

    def check(C: Column) -> str | None:
        for C2 in columns:
            if C2.height != C.height:
                continue
            closed = admissible_pair(C, C2, lie_type)
            if closed != admissible_oracle(C, C2, lie_type):
                return f"({C.text}, {C2.text}): closed form says {closed}"
        return None

    return [_check(lie_type.name, C.text, lambda C=C: check(C)) for C in columns]


def _group_families(spec_text: str, config: RunConfig) -> list[CheckResult]:
    spec = FamilySpec.factory(spec_text)

    def check(lie_type: LieType) -> str | None:
        T = family_tableau(spec, lie_type)
        report = evaluate_tableau(T)
        if not report.g_standard:
            return f"not {lie_type}-standard"
        if not report.null:
            return f"weight {report.weight}"
        if T.heights != spec.heights:
            return f"column heights {T.heights}"
        expected = expected_syndrome(spec, lie_type)
        if report.syndrome != expected:
            return f"syndrome {report.syndrome}, expected {expected}"
        return None

    results = []
    for family in "BCD":
        for r in range(spec.K, spec.K + 3):
            if family == "D" and r < 3:
                continue
            lie_type = LieType.classical(family, r)
            if config.lie_types and lie_type not in config.lie_types:
                continue
            if standard_types(spec, lie_type):
                results.append(
                    _check(spec.text, lie_type.name, lambda lie_type=lie_type: check(lie_type))
                )
    return results


def _group_primitive_basis(type_text: str, config: RunConfig) -> list[CheckResult]:
    lie_type = LieType.factory(type_text)
    group = lie_type.name
    results: list[CheckResult] = []
    try:
        basis = primitive_basis(lie_type)
    except BudgetExceededException as e:
        return [CheckResult(group, "basis", CheckStatus.SKIPPED, str(e))]
    labels = basis.fundamental()

    def check_minimal() -> str | None:
        for a, b in itertools.permutations(labels, 2):
            if all(x >= y for x, y in zip(a, b)):
                return f"{a} is not primitive, it dominates {b}"
        return None

    def check_generates(lam: Weight) -> str | None:
        total = Weight.zero(lie_type.ambient_dim)
        for part in decompose(lam, basis):
            total = total + part
        return None if total == lam else f"decomposition sums to {total}"

    results.append(_check(group, "minimal", check_minimal))
    results.extend(
        _check(group, f"generates {lam.text}", lambda lam=lam: check_generates(lam))
        for lam in weights_in_box(lie_type, config.weight_bound)
    )
    rows = primitive_rows(lie_type)
    if rows:

        def check_rows() -> str | None:
            expected = {row.fundamental for row in rows}
            if set(labels) != expected:
                return f"basis {sorted(labels)}, table {sorted(expected)}"
            for row in rows:
                dim = weyl_dim(row.weight, lie_type)
                if dim != row.dimension:
                    return f"dim V_({row.text}) = {dim}, table {row.dimension}"
            return None

        results.append(_check(group, "table", check_rows))
    return results


def young_side(columns: Sequence[Column], lie_type: LieType) -> bool:
    """
    The columns are nondecreasing for the Young order (with parity for D).
    """
    return all(young_leq(a, b, lie_type) for a, b in itertools.pairwise(columns))


def bruhat_side(columns: Sequence[Column], lie_type: LieType) -> bool:
    """
    Heights nonincreasing, for D all height r columns in one W-orbit,
    and the column weights Bruhat-nondecreasing.
    """
    r = lie_type.rank
    heights = [C.height for C in columns]
    if any(a < b for a, b in itertools.pairwise(heights)):
        return False
    weights = [column_weight(C, r) for C in columns]
    if lie_type.family is Family.D:
        top = {dominant_representative(lie_type, nu) for nu, h in zip(weights, heights) if h == r}
        if len(top) > 1:
            return False
    return bruhat_tuple_oracle(lie_type, weights)


def _group_bruhat(type_text: str, config: RunConfig) -> list[CheckResult]:
    lie_type = LieType.factory(type_text)
    columns = all_columns(lie_type.rank)

    def check(first: Column) -> str | None:
        for rest in itertools.product(columns, repeat=config.tuple_length - 1):
            sequence = (first, *rest)
            young = young_side(sequence, lie_type)
            if young != bruhat_side(sequence, lie_type):
                return f"{' '.join(C.text for C in sequence)}: Young order says {young}"
        return None

    return [_check(lie_type.name, C.text, lambda C=C: check(C)) for C in columns]


def _group_hasse(type_text: str, config: RunConfig) -> list[CheckResult]:
    lie_type = LieType.factory(type_text)
    columns = all_columns(lie_type.rank)
    above = {
        a: [b for b in columns if b != a and young_leq(a, b, lie_type)] for a in columns
    }

    def check(a: Column) -> str | None:
        for b in columns:
            covers = b in above[a] and not any(b in above[x] for x in above[a] if x != b)
            if hasse_cover(a, b, lie_type) != covers:
                return f"({a.text}, {b.text}): transitive reduction says {covers}"
        return None

    return [_check(lie_type.name, a.text, lambda a=a: check(a)) for a in columns]


def _group_fillings(form_text: str, config: RunConfig) -> list[CheckResult]:
    form = RealForm.factory(form_text)
    lie_type = form.lie_type
    theta = theta_of(form)
    forbidden = theta.union(theta.sigma(lie_type))

    def check(lam: Weight) -> str | None:
        filling = primitive_filling(form, lam)
        report = evaluate_tableau(filling.tableau, forbidden)
        if not (report.g_standard and report.null and report.codominant):
            return f"{filling.label}: g_standard={report.g_standard} null={report.null} syndrome={report.syndrome}"
        if report.syndrome != filling.expected_syndrome:
            return f"{filling.label}: syndrome {report.syndrome}, expected {filling.expected_syndrome}"
        return None

    return [
        _check(form.name, lam.text, lambda lam=lam: check(lam))
        for lam in m_table_primitives(form, config.weight_bound)
    ]


Task = tuple[Callable[[str, RunConfig], list[CheckResult]], str]


def _tasks(scope: VerifyScope, config: RunConfig) -> list[Task]:
    match scope:
        case VerifyScope.FORM_SWEEP:
            return [
                (_group_form_sweep, form.name)
                for lie_type in _classical_types(config, "ABCD")
                for form in real_forms_of(lie_type)
            ]
        case VerifyScope.CHARACTER:
            return [(_group_character, t.name) for t in _classical_types(config, "ABCD")]
        case VerifyScope.ADMISSIBLE:
            return [
                (_group_admissible, t.name)
                for t in _classical_types(config, "BCD", ADMISSIBLE_RANK_BOUND)
            ]
        case VerifyScope.FAMILIES:
            return [(_group_families, spec.text) for spec in iter_family_specs(config.kmax)]
        case VerifyScope.PRIMITIVE_BASIS:
            types = _classical_types(config, "ABCD")
            if config.lie_types:
                types += [t for t in config.lie_types if not t.is_classical]
            else:
                types += [LieType.factory(text) for text in ("G2", "F4", "E6", "E7", "E8")]
            return [(_group_primitive_basis, t.name) for t in types]
        case VerifyScope.BRUHAT:
            return [(_group_bruhat, t.name) for t in _classical_types(config, "BCD", WEYL_RANK_BOUND)]
        case VerifyScope.HASSE:
            return [(_group_hasse, t.name) for t in _classical_types(config, "BCD")]
        case VerifyScope.FILLINGS:
            return [
                (_group_fillings, form.name)
                for lie_type in _classical_types(config, "BCD")
                for form in real_forms_of(lie_type)
                if form.kind in (FormKind.SO, FormKind.SP2, FormKind.SO_STAR)
            ]
    raise PreconditionException(f"Unknown scope {scope}!")


def _run_task(task: Task, config: RunConfig) -> list[CheckResult]:
    function, argument = task
    return function(argument, config)


def run_verify(scope: VerifyScope, config: RunConfig) -> VerifyReport:
    tasks = _tasks(scope, config)
    logger.info(f"verify {scope.value}: {len(tasks)} groups, {config.jobs} jobs")
    report = VerifyReport(scope)
    if config.jobs == 1:
        for task in tasks:
            report.results.extend(_run_task(task, config))
    else:
        with multiprocessing.Pool(config.jobs) as pool:
            pending = [pool.apply_async(_run_task, (task, config)) for task in tasks]
            pool.close()
            pool.join()
            for result in pending:
                report.results.extend(result.get())

    for group, results in itertools.groupby(sorted(report.results), key=lambda r: r.group):
        statuses = collections.Counter(r.status for r in results)
        if statuses[CheckStatus.FAILED] > 0:
            logger.info(f"[COLOR_FAILED]{group}: {statuses[CheckStatus.FAILED]} checks failed")
        elif statuses[CheckStatus.SKIPPED] > 0:
            logger.info(f"[COLOR_INFO]{group}: {statuses[CheckStatus.SKIPPED]} checks skipped")
        else:
            logger.info(f"[COLOR_SUCCESS]{group}: {statuses[CheckStatus.PASSED]} checks passed")
    return report
