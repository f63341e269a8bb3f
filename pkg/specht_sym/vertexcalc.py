"""Vertices of the Young modules in Sym^r S^(n-1,1) and Sym^r D^(n-1,1)."""

from collections.abc import Callable
from enum import StrEnum
from math import comb

from loguru import logger

from specht_sym.combinatorics import (
    Partition,
    dominates,
    p_adic_expansion_partition,
    partitions_of,
    y_coefficient,
)
from specht_sym.gf import check_prime
from specht_sym.models import ModuleKind, VertexEntry, VertexReport
from specht_sym.repring import Basis, sym_D_formula, sym_S_formula, to_young_basis


class VertexCase(StrEnum):
    """The two possible vertices: Sylow p-subgroups of S_(n-p) or S_(n-2p)."""

    N_MINUS_P = "n-p"
    N_MINUS_2P = "n-2p"

    def order(self, n: int, p: int) -> int:
        return n - p if self is VertexCase.N_MINUS_P else n - 2 * p


class SupportMode(StrEnum):
    Y = "y"
    S_DIFF = "S-diff"
    D_DIFF = "D-diff"


def vertex_partition(mu: Partition, p: int) -> Partition:
    """rho with |mu(j)| parts equal to p^j for each p-adic layer mu(j).

    Y^mu has a Sylow p-subgroup of S_rho as a vertex; parts equal to 1
    contribute nothing to it.
    """
    layers = p_adic_expansion_partition(mu, p)
    parts = [p**j for j, layer in enumerate(layers) for _ in range(layer.size)]
    return Partition.from_sequence(sorted(parts, reverse=True))


def vertex_order(mu: Partition, p: int) -> int:
    """m such that the vertex of Y^mu sits in S_m: the sum of the parts of rho above 1."""
    return sum(part for part in vertex_partition(mu, p).parts if part > 1)


def sylow_order_exponent(m: int, p: int) -> int:
    """The exponent of p in m!."""
    check_prime(p)
    exponent, power = 0, p
    while power <= m:
        exponent += m // power
        power *= p
    return exponent


def _vertex_exponent(mu: Partition, p: int) -> int:
    return sum(sylow_order_exponent(part, p) for part in vertex_partition(mu, p).parts)


def vertex_case(mu: Partition, n: int, p: int) -> VertexCase:
    """S_(n-p) if mu_2 + n - p <= mu_1, else S_(n-2p)."""
    check_prime(p)
    if n % p or mu.size != n or not n - p < mu.part(1) < n:
        err = ValueError(f"The two-case vertex rule needs p | n and n - p < mu_1 < n, got mu=({mu}), n={n}, p={p}")
        err.add_note(f"Admissible first rows are {n - p + 1}..{n - 1}")
        raise err
    if mu.part(2) + n - p <= mu.part(1):
        return VertexCase.N_MINUS_P
    return VertexCase.N_MINUS_2P


def is_certified(mu: Partition, n: int, p: int) -> bool:
    """The two-case rule and the p-adic rule give Sylow subgroups of the same S_m."""
    m = vertex_case(mu, n, p).order(n, p)
    return vertex_order(mu, p) == m and _vertex_exponent(mu, p) == sylow_order_exponent(m, p)


def _support_coefficient(mode: SupportMode, r: int) -> Callable[[Partition], int]:
    if mode is SupportMode.Y:
        return lambda lam: y_coefficient(lam, r)
    if mode is SupportMode.S_DIFF:
        return lambda lam: y_coefficient(lam, r) - y_coefficient(lam, r - 1)
    return lambda lam: y_coefficient(lam, r) + y_coefficient(lam, r - 2) - 2 * y_coefficient(lam, r - 1)


def coefficient_support_check(n: int, r: int, mode: SupportMode) -> bool:
    """Every lambda with a non-zero coefficient has n - r <= lambda_1 < n."""
    least = {SupportMode.Y: 1, SupportMode.S_DIFF: 2, SupportMode.D_DIFF: 3}[mode]
    if not least <= r < n:
        err = ValueError(f"Support check in mode {mode} needs {least} <= r < n, got r={r}, n={n}")
        err.add_note("Below this range the trivial partition (n) has a non-zero coefficient")
        raise err
    coefficient = _support_coefficient(mode, r)
    outside = [lam for lam in partitions_of(n) if coefficient(lam) and not n - r <= lam.part(1) < n]
    for lam in outside:
        logger.warning(f"({lam}) has a non-zero {mode} coefficient outside the first-row window")
    return not outside


def _entry(mu: Partition, n: int, p: int, status: str) -> VertexEntry:
    case = vertex_case(mu, n, p)
    return VertexEntry(
        mu=str(mu),
        vertex_m=case.order(n, p),
        case=str(case),
        certified=is_certified(mu, n, p),
        status=status,
    )


def _check_report_input(n: int, p: int, kind: ModuleKind, r: int) -> None:
    least = {ModuleKind.S: 2, ModuleKind.D: 3}.get(kind)
    if least is None or n < 3 or n % p or not least <= r <= p - 1:  # noqa: PLR2004
        err = ValueError(f"Vertex reports need p | n, n >= 3 and r in range, got n={n}, p={p}, {kind}, r={r}")
        err.add_note("Sym^r S needs 2 <= r <= p-1; Sym^r D needs 3 <= r <= p-1")
        raise err


def sd_vertex_report(n: int, p: int, kind: ModuleKind, r: int) -> VertexReport:
    """Vertices of the Young summands of Sym^r S or Sym^r D.

    Positive Young terms are summands. Terms left in the M basis
    contribute every dominating mu with n - p < mu_1 < n as a candidate.
    """
    check_prime(p)
    _check_report_input(n, p, kind, r)
    formula = sym_S_formula(n, r, p) if kind is ModuleKind.S else sym_D_formula(n, r, p)
    converted, remainder = to_young_basis(formula, p)
    summands = [t.partition for t in converted.terms if t.coefficient > 0]
    candidates: list[Partition] = []
    for term in remainder.restrict(Basis.M).terms:
        for mu in partitions_of(n):
            if n - p < mu.part(1) < n and dominates(mu, term.partition) and mu not in summands + candidates:
                candidates.append(mu)
    entries = [_entry(mu, n, p, "summand") for mu in summands]
    entries += [_entry(mu, n, p, "candidate") for mu in sorted(candidates, key=lambda mu: mu.parts, reverse=True)]
    sylow_n = sylow_order_exponent(n, p)
    for entry in entries:
        assert entry.vertex_m in {n - p, n - 2 * p}, f"Y^({entry.mu}) has vertex outside S_(n-p), S_(n-2p)"
        assert sylow_order_exponent(entry.vertex_m, p) < sylow_n, f"Y^({entry.mu}) has a full Sylow vertex"
    logger.info(f"Sym^{r} {kind}: {len(summands)} summands, {len(candidates)} candidates")
    return VertexReport(n=n, p=p, kind=kind, r=r, entries=entries)


def small_r_dimension_control(n: int, p: int) -> dict[str, bool]:
    """Whether dim Sym^r S (r <= 1) and dim Sym^r D (r <= 2) are prime to p."""
    check_prime(p)
    if n % p:
        err = ValueError(f"The small-r control is stated for p | n, got n={n}, p={p}")
        err.add_note("D^(n-1,1) is defined as a proper quotient only when p divides n")
        raise err
    dims = {
        "Sym^0 S": 1,
        "Sym^1 S": n - 1,
        "Sym^0 D": 1,
        "Sym^1 D": n - 2,
        "Sym^2 D": comb(n - 1, 2),
    }
    return {label: dim % p != 0 for label, dim in dims.items()}


def lemma_vs_theorem_crosscheck(n_max: int, p: int) -> tuple[int, list[str]]:
    """Compare both vertex rules on every admissible mu with p | n <= n_max.

    Returns the number of partitions checked and the labels that disagree.
    """
    check_prime(p)
    checked, failures = 0, []
    for n in range(p, n_max + 1, p):
        for mu in partitions_of(n):
            if n - p < mu.part(1) < n:
                checked += 1
                if not is_certified(mu, n, p):
                    failures.append(f"n={n} mu=({mu})")
    logger.info(f"Checked {checked} partitions up to n={n_max} for p={p}: {len(failures)} disagreements")
    return checked, failures


if __name__ == "__main__":
    for mu in (Partition.of(8, 2), Partition.of(7, 3), Partition.of(10)):
        print(f"Y^({mu}) over GF(5): rho = ({vertex_partition(mu, 5)})")
    print(sd_vertex_report(10, 5, ModuleKind.D, 4).model_dump_json(indent=2))
