"""The acceptance suite: every exact identity the toolkit promises, run as numbered criteria."""

import asyncio
import time
from collections.abc import Callable
from math import comb

from loguru import logger

from specht_sym import fixtures
from specht_sym.combinatorics import Partition
from specht_sym.config import Settings
from specht_sym.models import AcceptanceResult, AcceptanceSummary, ModuleKind
from specht_sym.repring import (
    dimension,
    kostka_positivity_report,
    sym_D_formula,
    sym_M_formula,
    sym_S_formula,
    to_young_basis,
    young_expansion,
    young_expansion_hook2,
)
from specht_sym.spechtmod import natural_module, specht_n11, sym_D_module, sym_M_block_decomposition, sym_S_module
from specht_sym.splitters import (
    Split,
    gamma,
    no_retraction_certificate,
    split_chain_M,
    split_chain_S,
    trivial_split_r1,
)
from specht_sym.symalg import SymContext, commutator_scalars, lift_identity_scalar_check
from specht_sym.vertexcalc import lemma_vs_theorem_crosscheck, sd_vertex_report, small_r_dimension_control

# A criterion returns (passed, detail).
Outcome = tuple[bool, str]


def section_chains() -> Outcome:
    built = []
    for n, p in fixtures.SECTION_CASES:
        splits = split_chain_M(n, p)
        if [s.r for s in splits] != list(range(2, p)):
            return False, f"(n={n}, p={p}) produced sections for r={[s.r for s in splits]}"
        built.append(f"({n},{p}): {len(splits)}")
    return True, "sections " + ", ".join(built)


def gamma_retractions() -> Outcome:
    for n, p in fixtures.GAMMA_CASES:
        specht, _ = specht_n11(n, p)
        assert len(specht.gens) == n - 1, f"S^({n - 1},1) carries {len(specht.gens)} generators"
        gamma(n, p, SymContext(specht, cap=3))
    return True, f"gamma equivariant and retracts X_2 for {list(fixtures.GAMMA_CASES)}"


def retraction_chains() -> Outcome:
    for n, p in fixtures.RETRACTION_CASES:
        splits = split_chain_S(n, p)
        if [s.r for s in splits] != list(range(3, p)):
            return False, f"(n={n}, p={p}) produced retractions for r={[s.r for s in splits]}"
    return True, f"retractions of X_2, X_3 for {list(fixtures.RETRACTION_CASES)}"


def _scalars_match(ctx: SymContext, splits: list[Split]) -> str | None:
    p = ctx.p
    degrees = list(range(1, p + 1))
    for split in splits:
        scalars = commutator_scalars(ctx, split.hom, split.r, degrees, split.case)
        for d, scalar in scalars.items():
            if scalar != comb(d, split.r - 1) % p:
                return f"{split.case.value} r={split.r} on degree {d}: {scalar} != C({d},{split.r - 1})"
    return None


def commutator_identities() -> Outcome:
    checked = 0
    for n, p in fixtures.SECTION_CASES:
        ctx = SymContext(natural_module(n, p), cap=p + 1)
        failure = _scalars_match(ctx, split_chain_M(n, p, ctx))
        if failure:
            return False, f"(n={n}, p={p}) {failure}"
        checked += p - 2
    for n, p in fixtures.RETRACTION_CASES:
        specht, _ = specht_n11(n, p)
        ctx = SymContext(specht, cap=p + 1)
        failure = _scalars_match(ctx, split_chain_S(n, p, ctx))
        if failure:
            return False, f"(n={n}, p={p}) {failure}"
        checked += p - 3
    n, p = fixtures.DIMENSION_CASES[0]
    ctx = SymContext(natural_module(n, p), cap=p)
    for a in range(5):
        for d in range(a, p + 1):
            if lift_identity_scalar_check(ctx, a, d) != comb(d, a) % p:
                return False, f"Psi(id_{a}) on degree {d} is not C({d},{a})"
    return True, f"{checked} splits scalar on degrees <= p; Psi(id_a) = C(d, a) for a <= 4"


def decompositions() -> Outcome:
    n, p = 10, 5
    for r, expected in fixtures.table_one(n).items():
        blocks = [block.partition for block in sym_M_block_decomposition(n, p, r)]
        if len(blocks) != len(set(blocks)) or set(blocks) != expected:
            return False, f"Sym^{r} M blocks are {[str(lam) for lam in blocks]}"
        coefficients = {t.partition: t.coefficient for t in sym_M_formula(n, r).terms}
        if coefficients != dict.fromkeys(expected, 1):
            return False, f"y_{r} coefficients are {coefficients}"
    for r, formula in fixtures.sym_S_examples(n).items():
        if sym_S_formula(n, r, p).to_text() != formula.to_text():
            return False, f"[Sym^{r} S] = {sym_S_formula(n, r, p)}"
    for r, formula in fixtures.sym_D_examples(n).items():
        if sym_D_formula(n, r, p).to_text() != formula.to_text():
            return False, f"[Sym^{r} D] = {sym_D_formula(n, r, p)}"
    return True, "block partitions and five mixed formulas reproduced"


def dimension_identities() -> Outcome:
    for n, p in fixtures.DIMENSION_CASES:
        for r in range(5):
            s_dim, d_dim = sym_S_module(n, p, r).dim, sym_D_module(n, p, r).dim
            if s_dim != comb(n + r - 2, r) or d_dim != comb(n + r - 3, r):
                return False, f"n={n}, r={r}: dim Sym^r S = {s_dim}, dim Sym^r D = {d_dim}"
    return True, f"kernel and cokernel ranks match for {list(fixtures.DIMENSION_CASES)}, r <= 4"


def young_expansions() -> Outcome:
    for n, p in fixtures.YOUNG_CASES:
        for lam, expected in fixtures.two_row_expansions(n, p).items():
            if young_expansion(lam, p) != expected:
                return False, f"M^({lam}) over GF({p}) = {young_expansion(lam, p)}"
        hook = young_expansion_hook2(n, p)
        if hook != young_expansion(Partition.of(n - 2, 1, 1), p) or len(hook.terms) != 3:  # noqa: PLR2004
            return False, f"M^({n - 2},1,1) over GF({p}) = {hook}"
    converted, remainder = to_young_basis(sym_D_formula(10, 3, 5), 5)
    expected = fixtures.sym_D_young_expected()
    if converted != expected or not remainder.is_zero() or dimension(converted, 5) != 120:  # noqa: PLR2004
        return False, f"[Sym^3 D^(9,1)] = {converted} with remainder {remainder}"
    return True, f"two-row and hook expansions for {list(fixtures.YOUNG_CASES)}; [Sym^3 D^(9,1)] = {converted}"


def kostka_certificates() -> Outcome:
    counts = {}
    for (n, p), count in fixtures.KOSTKA_CASES.items():
        report = kostka_positivity_report(n, p)
        if report.equation != fixtures.sym4_D_young_equation(n, p).to_text():
            return False, f"(n={n}, p={p}) equation {report.equation}"
        if len(report.certificates) != count:
            return False, f"(n={n}, p={p}) gave {len(report.certificates)} certificates"
        if any(c.expected is not None and c.expected != c.lower_bound for c in report.certificates):
            return False, f"(n={n}, p={p}) a certificate exceeds its cut-rule value"
        counts[n, p] = count
    return True, f"certificates {counts}"


def vertices() -> Outcome:
    n, p = 10, 5
    cases = [(ModuleKind.S, r) for r in (2, 3, 4)] + [(ModuleKind.D, r) for r in (3, 4)]
    for kind, r in cases:
        report = sd_vertex_report(n, p, kind, r)
        stray = [e.mu for e in report.entries if e.vertex_m not in {n - p, n - 2 * p} or not e.certified]
        if stray:
            return False, f"Sym^{r} {kind}: unexpected vertices for {stray}"
    checked, failures = lemma_vs_theorem_crosscheck(20, p)
    if failures:
        return False, f"vertex rules disagree on {failures[:3]}"
    control = small_r_dimension_control(n, p)
    if not all(control.values()):
        return False, f"small-r dimensions divisible by p: {control}"
    return True, f"{len(cases)} reports, {checked} partitions cross-checked, small-r control holds"


def negative_controls() -> Outcome:
    if not no_retraction_certificate(5, 5):
        return False, "a retraction of X_1 on S^(4,1) over GF(5) was found"
    if trivial_split_r1(5, 5) or not trivial_split_r1(6, 5):
        return False, "K -> M^(n-1,1) splits for the wrong n"
    return True, "no retraction of X_1 over GF(5); K splits off M^(n-1,1) iff p does not divide n"


CRITERIA: dict[int, tuple[str, Callable[[], Outcome]]] = {
    1: ("Sections of d_r on M^(n-1,1)", section_chains),
    2: ("gamma retracts X_2", gamma_retractions),
    3: ("Retractions of X_(r-1) on Sym S", retraction_chains),
    4: ("Commutator scalars", commutator_identities),
    5: ("Block decompositions and formulas", decompositions),
    6: ("Kernel and cokernel dimensions", dimension_identities),
    7: ("Young expansions", young_expansions),
    8: ("Kostka positivity", kostka_certificates),
    9: ("Vertices", vertices),
    10: ("Negative controls", negative_controls),
}


def run_criterion(criterion: int) -> AcceptanceResult:
    """Run one criterion; any exception counts as a failure with its message."""
    title, check = CRITERIA[criterion]
    logger.info(f"Criterion {criterion}: {title}")
    start = time.time()
    try:
        passed, detail = check()
    except Exception as e:  # noqa: BLE001
        logger.error(f"Criterion {criterion} raised {type(e).__name__}: {e}")
        passed, detail = False, f"{type(e).__name__}: {e}"
    elapsed = time.time() - start
    if passed:
        logger.success(f"Criterion {criterion} passed ({elapsed:.2f}s)")
    return AcceptanceResult(criterion=criterion, title=title, passed=passed, detail=detail, elapsed=elapsed)


async def run_acceptance(settings: Settings, criteria: list[int] | None = None) -> AcceptanceSummary:
    """Run the criteria in worker threads, at most settings.threads at a time."""
    selected = criteria if criteria is not None else sorted(CRITERIA)
    unknown = [c for c in selected if c not in CRITERIA]
    if unknown:
        err = ValueError(f"Unknown acceptance criteria: {unknown}")
        err.add_note(f"Valid criteria are {min(CRITERIA)}..{max(CRITERIA)}")
        raise err
    semaphore = asyncio.Semaphore(settings.threads)

    async def guarded(criterion: int) -> AcceptanceResult:
        async with semaphore:
            return await asyncio.to_thread(run_criterion, criterion)

    logger.debug(f"Running {len(selected)} criteria on {settings.threads} threads")
    results = await asyncio.gather(*(guarded(c) for c in selected))
    return AcceptanceSummary(results=sorted(results, key=lambda result: result.criterion))


if __name__ == "__main__":
    summary = asyncio.run(run_acceptance(Settings(), criteria=[5, 7, 8]))
    for result in summary.results:
        print(f"{result.criterion:>2} {'PASS' if result.passed else 'FAIL'} {result.title}: {result.detail}")
