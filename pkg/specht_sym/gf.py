"""Exact arithmetic in GF(p) and dense matrix operations over it.

Matrices are numpy int64 arrays whose entries are kept reduced into [0, p).
Field elements are plain Python ints in the same range.
"""

from dataclasses import dataclass
from functools import cache

import numpy as np
import numpy.typing as npt
from loguru import logger
from sympy import isprime

type Matrix = npt.NDArray[np.int64]
type Vector = npt.NDArray[np.int64]
type FieldElement = int

# Largest integer a float64 represents exactly.
_FLOAT_EXACT = 2**53


class ShapeError(ValueError):
    """Matrix shapes do not fit together."""


@cache
def check_prime(p: int) -> int:
    """Return p unchanged, or raise if it is not a prime."""
    if not isprime(p):
        err = ValueError(f"Modulus must be prime, got {p}")
        err.add_note("Only prime fields GF(p) are supported")
        raise err
    return p


@dataclass(frozen=True)
class PrimeField:
    """The field GF(p); construction rejects non-primes."""

    p: int

    def __post_init__(self) -> None:
        check_prime(self.p)

    def element(self, value: int) -> FieldElement:
        return value % self.p

    def inverse(self, value: int) -> FieldElement:
        return inverse_mod_p(value, self.p)

    def zeros(self, rows: int, cols: int) -> Matrix:
        return np.zeros((rows, cols), dtype=np.int64)

    def identity(self, size: int) -> Matrix:
        return np.eye(size, dtype=np.int64)


def as_matrix(values: object, p: int) -> Matrix:
    """Convert nested integer data to a reduced int64 matrix."""
    return np.asarray(np.asarray(values, dtype=np.int64) % p, dtype=np.int64)


def inverse_mod_p(a: int, p: int) -> FieldElement:
    """Multiplicative inverse of a modulo p."""
    a %= p
    if a == 0:
        err = ZeroDivisionError(f"0 has no inverse modulo {p}")
        err.add_note("The scalar being inverted is divisible by the characteristic")
        raise err
    return pow(a, p - 2, p)


def binom_mod_p(d: int, a: int, p: int) -> FieldElement:
    """C(d, a) mod p by Lucas' theorem, with C(d, a) = 0 for a > d."""
    check_prime(p)
    if a < 0 or d < 0 or a > d:
        return 0
    result = 1
    while d or a:
        d, d_digit = divmod(d, p)
        a, a_digit = divmod(a, p)
        if a_digit > d_digit:
            return 0
        result = result * _small_binomial(d_digit, a_digit, p) % p
    return result


@cache
def _small_binomial(d: int, a: int, p: int) -> int:
    """C(d, a) mod p for digits 0 <= a <= d < p via Pascal's rule."""
    row = [1]
    for _ in range(d):
        row = [1, *((row[i] + row[i + 1]) % p for i in range(len(row) - 1)), 1]
    return row[a]


def matmul(a: Matrix, b: Matrix, p: int) -> Matrix:
    """Exact product a @ b reduced mod p.

    Uses float64 BLAS when every accumulated sum stays below 2**53,
    and exact object arithmetic otherwise.
    """
    if a.shape[-1] != b.shape[0]:
        err = ShapeError(f"Cannot multiply {a.shape} by {b.shape}")
        err.add_note("Inner dimensions must agree")
        raise err
    inner = max(a.shape[-1], 1)
    if (p - 1) ** 2 * inner < _FLOAT_EXACT:
        product = np.rint(a.astype(np.float64) @ b.astype(np.float64))
        return np.asarray(product.astype(np.int64) % p, dtype=np.int64)
    logger.debug(f"Falling back to exact object product for inner size {inner}")
    product = a.astype(object) @ b.astype(object)
    return np.asarray(product % p, dtype=np.int64)


@dataclass(frozen=True)
class RowReduction:
    """Reduced row echelon form of a matrix over GF(p)."""

    matrix: Matrix
    rank: int
    pivots: tuple[int, ...]


def row_reduce(a: Matrix, p: int) -> RowReduction:
    """Reduced row echelon form over GF(p); deterministic pivot choice."""
    work = np.array(a, dtype=np.int64) % p
    rows, cols = work.shape
    pivots: list[int] = []
    row = 0
    for col in range(cols):
        if row == rows:
            break
        candidates = np.flatnonzero(work[row:, col])
        if candidates.size == 0:
            continue
        pivot = row + int(candidates[0])
        if pivot != row:
            work[[row, pivot]] = work[[pivot, row]]
        work[row, col:] = work[row, col:] * inverse_mod_p(int(work[row, col]), p) % p
        factors = work[:, col].copy()
        factors[row] = 0
        targets = np.flatnonzero(factors)
        if targets.size:
            work[targets, col:] = (
                work[targets, col:] - np.outer(factors[targets], work[row, col:])
            ) % p
        pivots.append(col)
        row += 1
    return RowReduction(matrix=work, rank=row, pivots=tuple(pivots))


def rank(a: Matrix, p: int) -> int:
    """Rank of a over GF(p)."""
    return row_reduce(a, p).rank


def free_columns(reduction: RowReduction, cols: int) -> list[int]:
    pivot_set = set(reduction.pivots)
    return [c for c in range(cols) if c not in pivot_set]


def kernel_basis(a: Matrix, p: int) -> Matrix:
    """Right null space of a; columns of the result form the basis.

    Each basis vector has a 1 in its own free column and 0 in the other
    free columns, so the output is fixed by the echelon form.
    """
    cols = a.shape[1]
    reduction = row_reduce(a, p)
    free = free_columns(reduction, cols)
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for k, f in enumerate(free):
        basis[f, k] = 1
        for i, pivot in enumerate(reduction.pivots):
            basis[pivot, k] = -reduction.matrix[i, f] % p
    return basis


def solve(a: Matrix, b: Vector, p: int) -> Vector | None:
    """One solution x of a @ x = b with free variables set to 0, or None."""
    rows, cols = a.shape
    if b.shape != (rows,):
        err = ShapeError(f"Right-hand side of shape {b.shape} does not fit {a.shape}")
        err.add_note(f"Expected a vector of length {rows}")
        raise err
    augmented = np.concatenate([a % p, (b % p).reshape(-1, 1)], axis=1)
    reduction = row_reduce(augmented, p)
    if cols in reduction.pivots:
        logger.debug("Linear system is inconsistent over GF(p)")
        return None
    x = np.zeros(cols, dtype=np.int64)
    for i, pivot in enumerate(reduction.pivots):
        x[pivot] = reduction.matrix[i, cols]
    return x


def is_scalar_matrix(a: Matrix, p: int) -> FieldElement | None:
    """Return c when a == c * I (square a), else None."""
    size = a.shape[0]
    if a.shape != (size, size):
        return None
    if size == 0:
        return 0
    c = int(a[0, 0]) % p
    if np.array_equal(a % p, c * np.eye(size, dtype=np.int64)):
        return c
    return None


def is_identity(a: Matrix, p: int) -> bool:
    if a.shape[0] != a.shape[1]:
        return False
    return np.array_equal(a % p, np.eye(a.shape[0], dtype=np.int64))


if __name__ == "__main__":
    field = PrimeField(5)
    print(f"2^-1 in GF(5) = {field.inverse(2)}")
    print(f"C(4,2) mod 5 = {binom_mod_p(4, 2, 5)}")
    print(f"C(5,1) mod 5 = {binom_mod_p(5, 1, 5)}")
    sample = as_matrix([[1, 1, 1, 1, 1]], 5)
    print(f"rank of the all-ones row: {rank(sample, 5)}")
    print(f"kernel basis:\n{kernel_basis(sample, 5)}")
