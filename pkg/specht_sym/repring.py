"""Representation-ring arithmetic on [M^lambda] and [Y^mu] classes."""

from collections import defaultdict
from collections.abc import Callable
from enum import StrEnum
from functools import cache
from typing import Self

from loguru import logger
from pydantic import BaseModel, ConfigDict, field_validator

from specht_sym.combinatorics import (
    Partition,
    hook_two,
    multinomial_dimension,
    p_contained,
    partitions_of,
    sym_power_dimension,
    two_row_partition,
    y_coefficient,
)
from specht_sym.gf import check_prime
from specht_sym.models import FiltrationReport, KostkaCertificate, KostkaReport, ModuleKind


class Basis(StrEnum):
    M = "M"
    Y = "Y"


class Term(BaseModel):
    model_config = ConfigDict(frozen=True)

    basis: Basis
    partition: Partition
    coefficient: int


def _sort_key(term: Term) -> tuple:
    sign = 0 if term.coefficient > 0 else 1
    basis = 0 if term.basis is Basis.M else 1
    return (sign, basis, tuple(-part for part in term.partition.parts))


class RepRingElement(BaseModel):
    """A finite integer combination of labelled classes, kept in canonical order."""

    model_config = ConfigDict(frozen=True)

    terms: tuple[Term, ...] = ()

    @field_validator("terms")
    @classmethod
    def _normalise(cls, terms: tuple[Term, ...]) -> tuple[Term, ...]:
        totals: dict[tuple[Basis, Partition], int] = defaultdict(int)
        for term in terms:
            totals[term.basis, term.partition] += term.coefficient
        combined = [Term(basis=b, partition=lam, coefficient=c) for (b, lam), c in totals.items() if c]
        return tuple(sorted(combined, key=_sort_key))

    @classmethod
    def of(cls, basis: Basis, partition: Partition, coefficient: int = 1) -> Self:
        return cls(terms=(Term(basis=basis, partition=partition, coefficient=coefficient),))

    @classmethod
    def M(cls, *parts: int) -> Self:
        return cls.of(Basis.M, Partition.of(*parts))

    @classmethod
    def Y(cls, *parts: int) -> Self:
        return cls.of(Basis.Y, Partition.of(*parts))

    def __add__(self, other: "RepRingElement") -> "RepRingElement":
        return RepRingElement(terms=self.terms + other.terms)

    def __neg__(self) -> "RepRingElement":
        return self.scale(-1)

    def __sub__(self, other: "RepRingElement") -> "RepRingElement":
        return self + (-other)

    def scale(self, c: int) -> "RepRingElement":
        return RepRingElement(
            terms=tuple(term.model_copy(update={"coefficient": c * term.coefficient}) for term in self.terms)
        )

    def __rmul__(self, c: int) -> "RepRingElement":
        return self.scale(c)

    def coefficient(self, basis: Basis, partition: Partition) -> int:
        return sum(t.coefficient for t in self.terms if t.basis is basis and t.partition == partition)

    def restrict(self, basis: Basis) -> "RepRingElement":
        return RepRingElement(terms=tuple(t for t in self.terms if t.basis is basis))

    def is_zero(self) -> bool:
        return not self.terms

    def to_text(self) -> str:
        """Signed sum such as "[M 8,1,1] + [M 7,3] - 2[M 8,2]"; "0" when empty."""
        if not self.terms:
            return "0"
        pieces = []
        for k, term in enumerate(self.terms):
            magnitude = abs(term.coefficient)
            label = f"{'' if magnitude == 1 else magnitude}[{term.basis} {term.partition}]"
            if k == 0:
                pieces.append(label if term.coefficient > 0 else f"-{label}")
            else:
                pieces.append(f"{'+' if term.coefficient > 0 else '-'} {label}")
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.to_text()


def _check_range(r: int, low: int, high: int, what: str) -> None:
    if not low <= r <= high:
        err = ValueError(f"{what} needs {low} <= r <= {high}, got r={r}")
        err.add_note(f"Received r={r}")
        raise err


def _check_divides(n: int, p: int, what: str) -> None:
    if n % p:
        err = ValueError(f"{what} requires p | n, got n={n}, p={p}")
        err.add_note("The D and hook formulas hold only when p divides n")
        raise err


def _m_combination(n: int, coefficient: Callable[[Partition], int]) -> RepRingElement:
    return RepRingElement(
        terms=tuple(Term(basis=Basis.M, partition=lam, coefficient=coefficient(lam)) for lam in partitions_of(n))
    )


def sym_M_formula(n: int, r: int) -> RepRingElement:
    """[Sym^r M^(n-1,1)] = sum y_r^lambda [M^lambda]."""
    return _m_combination(n, lambda lam: y_coefficient(lam, r))


def sym_S_formula(n: int, r: int, p: int) -> RepRingElement:
    """[Sym^r S^(n-1,1)] = sum (y_r - y_(r-1)) [M^lambda] for 2 <= r <= p-1."""
    check_prime(p)
    _check_range(r, 2, p - 1, "The Sym^r S formula")
    return _m_combination(n, lambda lam: y_coefficient(lam, r) - y_coefficient(lam, r - 1))


def sym_D_formula(n: int, r: int, p: int) -> RepRingElement:
    """[Sym^r D^(n-1,1)] = sum (y_r + y_(r-2) - 2 y_(r-1)) [M^lambda] for 3 <= r <= p-1, p | n."""
    check_prime(p)
    _check_divides(n, p, "The Sym^r D formula")
    _check_range(r, 3, p - 1, "The Sym^r D formula")
    return _m_combination(
        n, lambda lam: y_coefficient(lam, r) + y_coefficient(lam, r - 2) - 2 * y_coefficient(lam, r - 1)
    )


def is_two_row(lam: Partition) -> bool:
    return lam.length <= 2  # noqa: PLR2004


def young_expansion_two_row(lam: Partition, p: int) -> RepRingElement:
    """M^(n-s,s) = sum of Y^(n-r,r) over r <= s with s - r p-contained in n - 2r."""
    check_prime(p)
    if not is_two_row(lam):
        err = ValueError(f"({lam}) has more than two rows")
        err.add_note("Two-row expansions apply to (n-s, s) and (n) only")
        raise err
    n, s = lam.size, lam.part(2)
    return RepRingElement(
        terms=tuple(
            Term(basis=Basis.Y, partition=two_row_partition(n, r), coefficient=1)
            for r in range(s + 1)
            if p_contained(s - r, n - 2 * r, p)
        )
    )


def young_expansion_hook2(n: int, p: int) -> RepRingElement:
    """M^(n-2,1,1) = Y^(n-1,1) + Y^(n-2,2) + Y^(n-2,1,1) when p | n."""
    check_prime(p)
    _check_divides(n, p, "The (n-2,1,1) expansion")
    if n < 4:  # noqa: PLR2004
        err = ValueError(f"(n-2,2) is not a partition for n={n}")
        err.add_note("The hook expansion needs n >= 4")
        raise err
    return RepRingElement.Y(n - 1, 1) + RepRingElement.Y(n - 2, 2) + RepRingElement.Y(n - 2, 1, 1)


def young_expansion(lam: Partition, p: int) -> RepRingElement | None:
    """The Young expansion of M^lambda when a rule for it is known."""
    if is_two_row(lam):
        return young_expansion_two_row(lam, p)
    if lam == hook_two(lam.size) and lam.size % p == 0:
        return young_expansion_hook2(lam.size, p)
    return None


def to_young_basis(element: RepRingElement, p: int) -> tuple[RepRingElement, RepRingElement]:
    """Replace every [M^lambda] with a known expansion; return (converted, remainder)."""
    converted = element.restrict(Basis.Y)
    remainder = RepRingElement()
    for term in element.restrict(Basis.M).terms:
        expansion = young_expansion(term.partition, p)
        if expansion is None:
            logger.debug(f"No Young expansion known for M^({term.partition}); keeping it")
            remainder = remainder + RepRingElement(terms=(term,))
        else:
            converted = converted + expansion.scale(term.coefficient)
    return converted, remainder


@cache
def young_dimension(mu: Partition, p: int) -> int:
    """dim Y^mu, read off the expansion of M^mu by subtracting the other summands."""
    expansion = young_expansion(mu, p)
    if expansion is None or expansion.coefficient(Basis.Y, mu) != 1:
        err = ValueError(f"dim Y^({mu}) over GF({p}) is not determined here")
        err.add_note("Known for two-row mu and for (n-2,1,1) with p | n")
        raise err
    others = expansion - RepRingElement.of(Basis.Y, mu)
    return multinomial_dimension(mu) - sum(t.coefficient * young_dimension(t.partition, p) for t in others.terms)


def dimension(element: RepRingElement, p: int) -> int:
    """The dimension homomorphism."""
    total = 0
    for term in element.terms:
        size = multinomial_dimension(term.partition) if term.basis is Basis.M else young_dimension(term.partition, p)
        total += term.coefficient * size
    return total


def expected_dimension(kind: ModuleKind, n: int, r: int) -> int:
    """dim Sym^r of M^(n-1,1), S^(n-1,1) or D^(n-1,1)."""
    offset = {ModuleKind.M: 0, ModuleKind.S: 1, ModuleKind.D: 2}[kind]
    return sym_power_dimension(n - offset, r)


def cut_formula_constants() -> dict[str, int]:
    """Exact p-Kostka values for (n-3,2,1) given by the row and column cut rules."""
    return {"[M n-3,2,1 : Y n-3,3]": 1, "[M n-3,2,1 : Y n-2,1,1]": 1}


def _check_kostka_input(n: int, p: int) -> None:
    check_prime(p)
    if p <= 3:  # noqa: PLR2004
        err = ValueError(f"The Sym^4 D derivation needs p > 3, got p={p}")
        err.add_note("Sym^4 lies in the split range 3 <= r <= p-1 only for p >= 5")
        raise err
    _check_divides(n, p, "The Sym^4 D derivation")
    if n < 8:  # noqa: PLR2004
        err = ValueError(f"The Sym^4 D derivation needs n >= 8, got n={n}")
        err.add_note("(n-4,4) must be a partition")
        raise err


def kostka_positivity_report(n: int, p: int) -> KostkaReport:
    """Certify positive p-Kostka numbers [M^(n-3,2,1) : Y^mu].

    [Sym^4 D] is a sum of Young modules, so after converting everything
    but [M^(n-3,2,1)], each negative Young coefficient -c forces
    [M^(n-3,2,1) : Y^mu] >= c.
    """
    _check_kostka_input(n, p)
    converted, remainder = to_young_basis(sym_D_formula(n, 4, p), p)
    lam = Partition.of(n - 3, 2, 1)
    assert remainder == RepRingElement.of(Basis.M, lam), f"unexpected remainder {remainder}"
    assert dimension(converted, p) + multinomial_dimension(lam) == expected_dimension(ModuleKind.D, n, 4), (
        "Sym^4 D equation fails the dimension check"
    )
    exact = {Partition.of(n - 3, 3): 1, Partition.of(n - 2, 1, 1): 1}
    certificates = [
        KostkaCertificate(lam=str(lam), mu=str(t.partition), lower_bound=-t.coefficient, expected=exact.get(t.partition))
        for t in converted.terms
        if t.coefficient < 0
    ]
    logger.success(f"{len(certificates)} positive {p}-Kostka numbers for M^({lam})")
    return KostkaReport(n=n, p=p, equation=(remainder + converted).to_text(), certificates=certificates)


def specht_filtration_report(n: int, p: int, kind: ModuleKind, r: int) -> FiltrationReport:
    """Which modules Sym^r S or Sym^r D is assembled from; no filtration is built."""
    if kind is ModuleKind.M:
        err = ValueError("Filtration reports cover S and D only")
        err.add_note("Sym^r M^(n-1,1) is itself a sum of permutation modules")
        raise err
    if r == 0:
        return FiltrationReport(n=n, p=p, kind=kind, r=r, status="specht", summands=[f"S^({n})"])
    if r == 1:
        if kind is ModuleKind.S:
            return FiltrationReport(n=n, p=p, kind=kind, r=r, status="specht", summands=[f"S^({n - 1},1)"])
        return FiltrationReport(n=n, p=p, kind=kind, r=r, status="not-claimed")
    if kind is ModuleKind.D and r == 2:  # noqa: PLR2004
        _check_divides(n, p, "Sym^2 D")
        return FiltrationReport(n=n, p=p, kind=kind, r=r, status="specht", summands=[f"S^({n})", f"S^({n - 2},2)"])
    formula = sym_S_formula(n, r, p) if kind is ModuleKind.S else sym_D_formula(n, r, p)
    converted, remainder = to_young_basis(formula, p)
    summands = [RepRingElement(terms=(t,)).to_text() for t in (converted + remainder).terms]
    return FiltrationReport(n=n, p=p, kind=kind, r=r, status="young-sum", summands=summands)


if __name__ == "__main__":
    formula = sym_D_formula(10, 3, 5)
    converted, remainder = to_young_basis(formula, 5)
    print(f"[Sym^3 D^(9,1)] = {formula}")
    print(f"               = {converted} (remainder {remainder})")
    print(f"dimension {dimension(formula, 5)} = {expected_dimension(ModuleKind.D, 10, 3)}")
    for certificate in kostka_positivity_report(10, 5).certificates:
        print(f"[M {certificate.lam} : Y {certificate.mu}] >= {certificate.lower_bound}")
