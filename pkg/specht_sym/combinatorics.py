"""Partitions, compositions and their p-adic structure."""

from collections import Counter
from functools import cache
from itertools import accumulate, zip_longest
from math import comb, factorial, prod
from typing import Self

from loguru import logger
from pydantic import BaseModel, ConfigDict, field_validator
from sympy.ntheory.digits import digits
from sympy.utilities.iterables import multiset_permutations, partitions

from specht_sym.gf import check_prime

# A composition of length t is a plain tuple of t non-negative integers.
# Its degree is the sum of the entries.
type Composition = tuple[int, ...]


class Partition(BaseModel):
    """A weakly decreasing sequence of positive integers."""

    model_config = ConfigDict(frozen=True)

    parts: tuple[int, ...] = ()

    @field_validator("parts")
    @classmethod
    def _check_parts(cls, parts: tuple[int, ...]) -> tuple[int, ...]:
        if any(part <= 0 for part in parts):
            err = ValueError(f"Partition parts must be positive: {parts}")
            err.add_note("Drop trailing zeros before constructing a Partition")
            raise err
        if any(a < b for a, b in zip(parts, parts[1:], strict=False)):
            err = ValueError(f"Partition parts must be non-increasing: {parts}")
            err.add_note("Sort the parts in decreasing order first")
            raise err
        return parts

    @classmethod
    def of(cls, *parts: int) -> Self:
        return cls(parts=tuple(parts))

    @classmethod
    def from_sequence(cls, values: list[int] | tuple[int, ...]) -> Self:
        """Build from a non-increasing sequence that may end in zeros."""
        return cls(parts=tuple(v for v in values if v != 0))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """The i-th part, 1-based, with the convention that it is 0 past the end."""
        return self.parts[i - 1] if 1 <= i <= self.length else 0

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) if self.parts else "()"


def parse_partition(text: str) -> Partition:
    """Parse a comma list such as "8,1,1"; "()" or "" is the empty partition."""
    stripped = text.strip()
    if stripped in {"", "()"}:
        return Partition()
    try:
        parts = tuple(int(chunk) for chunk in stripped.split(","))
    except ValueError as e:
        err = ValueError(f"Invalid partition: '{text}'")
        err.add_note("Expected comma-separated positive integers, e.g. 8,1,1")
        raise err from e
    return Partition(parts=parts)


@cache
def compositions(t: int, d: int) -> tuple[Composition, ...]:
    """All length-t compositions of d in lexicographic order."""
    if t < 1:
        err = ValueError(f"Composition length must be positive, got {t}")
        err.add_note("Compositions index monomials in t >= 1 variables")
        raise err
    if t == 1:
        return ((d,),)
    return tuple(
        (first, *rest) for first in range(d + 1) for rest in compositions(t - 1, d - first)
    )


def compositions_below(beta: Composition, a: int) -> list[Composition]:
    """Compositions alpha of a with alpha <= beta entrywise, in lexicographic order."""
    found: list[Composition] = []

    def extend(prefix: list[int], index: int, remaining: int) -> None:
        if index == len(beta):
            if remaining == 0:
                found.append(tuple(prefix))
            return
        # The tail can absorb at most sum(beta[index + 1:]) more.
        room = sum(beta[index + 1 :])
        for value in range(max(0, remaining - room), min(beta[index], remaining) + 1):
            prefix.append(value)
            extend(prefix, index + 1, remaining - value)
            prefix.pop()

    extend([], 0, a)
    return found


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n, largest first in lexicographic order."""
    found = [
        Partition(parts=tuple(sorted(Counter(block).elements(), reverse=True)))
        for block in partitions(n)
    ]
    return sorted(found, key=lambda lam: lam.parts, reverse=True)


def _check_same_size(lam: Partition, mu: Partition) -> None:
    if lam.size != mu.size:
        err = ValueError(f"Partitions {lam} and {mu} have different sizes")
        err.add_note(f"|lambda| = {lam.size}, |mu| = {mu.size}")
        raise err


def dominates(lam: Partition, mu: Partition) -> bool:
    """True iff every partial sum of lam is at least that of mu."""
    _check_same_size(lam, mu)
    padded = list(zip_longest(lam.parts, mu.parts, fillvalue=0))
    lam_sums = accumulate(a for a, _ in padded)
    mu_sums = accumulate(b for _, b in padded)
    return all(a >= b for a, b in zip(lam_sums, mu_sums, strict=True))


def is_p_restricted(lam: Partition, p: int) -> bool:
    """True iff consecutive parts, and the last part, differ by less than p; () is restricted."""
    tail = (*lam.parts[1:], 0)[: lam.length]
    return all(a - b <= p - 1 for a, b in zip(lam.parts, tail, strict=True))


def is_p_regular(lam: Partition, p: int) -> bool:
    return all(count < p for count in Counter(lam.parts).values())


def p_adic_expansion_int(n: int, p: int) -> list[int]:
    """Base-p digits of n, least significant first; [] for n = 0."""
    check_prime(p)
    if n == 0:
        return []
    return digits(n, p)[1:][::-1]


def p_adic_expansion_partition(lam: Partition, p: int) -> list[Partition]:
    """The p-restricted layers (lam(0), lam(1), ...) with lam_i = sum_j lam(j)_i p^j.

    Layer j takes, for each row, the sum of the residues mod p of the
    differences of consecutive parts from that row down; the remainder is
    divisible by p and is expanded recursively.
    """
    check_prime(p)
    layers: list[Partition] = []
    current = list(lam.parts)
    while any(current):
        diffs = [(a - b) % p for a, b in zip(current, [*current[1:], 0], strict=True)]
        layer = list(accumulate(reversed(diffs)))[::-1]
        layers.append(Partition.from_sequence(layer))
        current = [(a - b) // p for a, b in zip(current, layer, strict=True)]
    assert all(is_p_restricted(layer, p) for layer in layers), (
        f"p-adic layers of {lam} are not {p}-restricted: {layers}"
    )
    return layers


def p_contained(m: int, n: int, p: int) -> bool:
    """True iff each base-p digit of m is at most the matching digit of n."""
    pairs = zip_longest(p_adic_expansion_int(m, p), p_adic_expansion_int(n, p), fillvalue=0)
    return all(a <= b for a, b in pairs)


@cache
def y_coefficient(lam: Partition, r: int) -> int:
    """Number of sequences (d_0, d_1, ...) whose non-zero entries are the parts
    of lam and whose weighted sum sum_i i*d_i equals r."""
    slots = r + 1
    if lam.length > slots:
        return 0
    padded = [*lam.parts, *([0] * (slots - lam.length))]
    return sum(
        1
        for sequence in multiset_permutations(padded)
        if sum(i * d for i, d in enumerate(sequence)) == r
    )


def multinomial_dimension(lam: Partition) -> int:
    """dim M^lam = n! / (lam_1! lam_2! ...)."""
    return factorial(lam.size) // prod(factorial(part) for part in lam.parts)


def two_row_partition(n: int, s: int) -> Partition:
    """(n - s, s), which is (n) when s = 0."""
    if not 0 <= 2 * s <= n:
        err = ValueError(f"(n - s, s) with n={n}, s={s} is not a partition")
        err.add_note("Need 0 <= 2s <= n")
        raise err
    return Partition.from_sequence([n - s, s])


def hook_two(n: int) -> Partition:
    """(n - 2, 1, 1)."""
    return Partition.from_sequence([n - 2, 1, 1])


def sym_power_dimension(t: int, r: int) -> int:
    """dim Sym^r of a t-dimensional space, C(r + t - 1, t - 1)."""
    if r < 0 or t < 0:
        return 0
    if t == 0:
        return 1 if r == 0 else 0
    return comb(r + t - 1, t - 1)


if __name__ == "__main__":
    lam = Partition.of(9, 1)
    logger.debug(f"Expanding {lam} 5-adically")
    print(f"5-adic expansion of ({lam}): {[str(layer) for layer in p_adic_expansion_partition(lam, 5)]}")
    for r in range(5):
        support = [str(mu) for mu in partitions_of(10) if y_coefficient(mu, r)]
        print(f"r={r}: y_r^lambda = 1 for {support}")
