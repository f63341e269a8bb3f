"""Concrete models of M^lambda, S^(n-1,1), D^(n-1,1) and their symmetric powers."""

from dataclasses import dataclass
from math import comb

import numpy as np
from loguru import logger
from sympy.utilities.iterables import multiset_permutations

from specht_sym import gf
from specht_sym.combinatorics import Partition, partitions_of
from specht_sym.gf import Matrix
from specht_sym.modact import (
    GModule,
    ModuleHom,
    kernel_module,
    quotient_module,
    require_equivariant,
    trivial_module,
)
from specht_sym.symalg import SymContext, boundary, mul_map


def _check_n(n: int, least: int, what: str) -> None:
    if n < least:
        err = ValueError(f"{what} needs n >= {least}, got n={n}")
        err.add_note(f"Received n={n}")
        raise err


def _check_divides(n: int, p: int, what: str) -> None:
    if n % p:
        err = ValueError(f"{what} requires p | n, got n={n}, p={p}")
        err.add_note("D^(n-1,1) is a proper quotient of S^(n-1,1) only when p divides n")
        raise err


def _permutation_generators(labels: list[tuple[int, ...]], n: int) -> tuple[Matrix, ...]:
    """Matrices of s_m acting on position-labelled basis vectors by swapping positions m, m+1."""
    lookup = {label: k for k, label in enumerate(labels)}
    gens = []
    for m in range(n - 1):
        g = np.zeros((len(labels), len(labels)), dtype=np.int64)
        for k, label in enumerate(labels):
            swapped = list(label)
            swapped[m], swapped[m + 1] = swapped[m + 1], swapped[m]
            g[lookup[tuple(swapped)], k] = 1
        gens.append(g)
    return tuple(gens)


def natural_module(n: int, p: int) -> GModule:
    """M^(n-1,1) with its permutation basis x_1, ..., x_n."""
    _check_n(n, 2, "The natural module")
    gens = []
    for m in range(n - 1):
        g = np.eye(n, dtype=np.int64)
        g[[m, m + 1]] = g[[m + 1, m]]
        gens.append(g)
    return GModule(n=n, p=p, gens=tuple(gens), dim=n, name=f"M^({n - 1},1)")


def specht_n11(n: int, p: int) -> tuple[GModule, ModuleHom]:
    """S^(n-1,1) on the basis e_i = x_i - x_n, i < n, with its inclusion into M^(n-1,1)."""
    _check_n(n, 3, "S^(n-1,1)")
    last = n - 2
    gens = []
    for m in range(n - 2):
        g = np.eye(n - 1, dtype=np.int64)
        g[[m, m + 1]] = g[[m + 1, m]]
        gens.append(g)
    # s_(n-1) sends e_i to e_i - e_(n-1) and e_(n-1) to -e_(n-1).
    g = np.eye(n - 1, dtype=np.int64)
    g[last, :] = p - 1
    g[last, last] = p - 1
    gens.append(g)
    specht = GModule(n=n, p=p, gens=tuple(gens), dim=n - 1, name=f"S^({n - 1},1)")
    inclusion = np.zeros((n, n - 1), dtype=np.int64)
    inclusion[: n - 1, :] = np.eye(n - 1, dtype=np.int64)
    inclusion[n - 1, :] = p - 1
    hom = ModuleHom(specht, natural_module(n, p), inclusion)
    require_equivariant(hom, "The inclusion S^(n-1,1) -> M^(n-1,1)")
    return specht, hom


def young_permutation_labels(lam: Partition) -> list[tuple[int, ...]]:
    """Exponent vectors of the monomials spanning M^lambda.

    Block k of lambda carries the exponent value k, so the basis is every
    arrangement of lambda_1 zeros, lambda_2 ones, and so on.
    """
    exponents = [k for k, part in enumerate(lam.parts) for _ in range(part)]
    return [tuple(label) for label in multiset_permutations(exponents)]


def young_permutation_module(lam: Partition, p: int) -> GModule:
    labels = young_permutation_labels(lam)
    gens = _permutation_generators(labels, lam.size)
    return GModule(n=lam.size, p=p, gens=gens, dim=len(labels), name=f"M^({lam})")


@dataclass(frozen=True, eq=False)
class Block:
    """Monomials of Sym^r M^(n-1,1) sharing one exponent multiset.

    d_sequence[j] counts the variables raised to the power j.
    """

    d_sequence: tuple[int, ...]
    partition: Partition
    indices: tuple[int, ...]
    module: GModule
    witness: ModuleHom


def _relabel(d_sequence: tuple[int, ...]) -> dict[int, int]:
    """Exponent value -> block label of lambda; larger blocks first, ties by exponent."""
    values = sorted((j for j, count in enumerate(d_sequence) if count), key=lambda j: (-d_sequence[j], j))
    return {j: k for k, j in enumerate(values)}


def _block(ctx: SymContext, r: int, d_sequence: tuple[int, ...], indices: list[int]) -> Block:
    p = ctx.p
    lam = Partition.from_sequence(sorted(d_sequence, reverse=True))
    action = ctx.action(r)
    module = GModule(
        n=ctx.base.n,
        p=p,
        gens=tuple(g[np.ix_(indices, indices)] for g in action),
        dim=len(indices),
        name=f"block{d_sequence}",
        verify=False,
    )
    target = young_permutation_module(lam, p)
    lookup = {label: k for k, label in enumerate(young_permutation_labels(lam))}
    relabel = _relabel(d_sequence)
    witness = np.zeros((target.dim, module.dim), dtype=np.int64)
    for column, position in enumerate(indices):
        beta = ctx.monomials(r)[position]
        witness[lookup[tuple(relabel[b] for b in beta)], column] = 1
    hom = ModuleHom(module, target, witness)
    require_equivariant(hom, f"The relabelling of block {d_sequence}")
    assert gf.rank(witness, p) == module.dim == target.dim, f"Relabelling of {d_sequence} is not bijective"
    return Block(d_sequence=d_sequence, partition=lam, indices=tuple(indices), module=module, witness=hom)


def sym_M_block_decomposition(n: int, p: int, r: int, ctx: SymContext | None = None) -> list[Block]:
    """Split the monomial basis of Sym^r M^(n-1,1) by exponent multiset.

    Each block is a permutation module isomorphic to M^lambda, with lambda
    the sorted non-zero entries of its d-sequence.
    """
    ctx = ctx if ctx is not None else SymContext(natural_module(n, p), cap=max(r, 1))
    groups: dict[tuple[int, ...], list[int]] = {}
    for position, beta in enumerate(ctx.monomials(r)):
        d_sequence = tuple(beta.count(j) for j in range(r + 1))
        groups.setdefault(d_sequence, []).append(position)
    blocks = [_block(ctx, r, d_sequence, indices) for d_sequence, indices in sorted(groups.items(), reverse=True)]
    assert sum(block.module.dim for block in blocks) == ctx.dim(r), "blocks do not cover the monomial basis"
    logger.info(f"Sym^{r} M^({n - 1},1) splits into {len(blocks)} permutation blocks")
    return blocks


def sym_S_module(n: int, p: int, r: int, ctx: SymContext | None = None) -> GModule:
    """Sym^r S^(n-1,1) realised as the kernel of the boundary map on Sym^r M^(n-1,1)."""
    if r == 0:
        return trivial_module(n, p)
    ctx = ctx if ctx is not None else SymContext(natural_module(n, p), cap=r)
    partial = boundary(ctx)
    kernel, _ = kernel_module(partial.restrict(r), name=f"Sym^{r} S^({n - 1},1)")
    return kernel


def sym_D_module(n: int, p: int, r: int, ctx: SymContext | None = None) -> GModule:
    """Sym^r D^(n-1,1) as the cokernel of X_(r-1): Sym^(r-1) S -> Sym^r S."""
    _check_n(n, 3, "D^(n-1,1)")
    _check_divides(n, p, "D^(n-1,1)")
    if r == 0:
        return trivial_module(n, p)
    if ctx is None:
        specht, _ = specht_n11(n, p)
        ctx = SymContext(specht, cap=r)
    x = mul_map(ctx)
    quotient, _ = quotient_module(x.restrict(r - 1), name=f"Sym^{r} D^({n - 1},1)")
    return quotient


def specht_two_row_dimension(n: int, s: int) -> int:
    """dim S^(n-s,s) = C(n, s) - C(n, s-1)."""
    if not 0 <= 2 * s <= n:
        err = ValueError(f"(n - s, s) with n={n}, s={s} is not a partition")
        err.add_note("Need 0 <= 2s <= n")
        raise err
    return comb(n, s) - (comb(n, s - 1) if s else 0)


@dataclass(frozen=True)
class TraceRow:
    cycle_type: Partition
    sym2_specht: int
    permutation: int


def _cycle_type_word(cycle_type: Partition) -> list[int]:
    """Generator indices whose product has the given cycle type."""
    word: list[int] = []
    start = 0
    for part in cycle_type.parts:
        word.extend(range(start, start + part - 1))
        start += part
    return word


def _word_matrix(module: GModule, word: list[int]) -> Matrix:
    result = module.identity
    for m in word:
        result = gf.matmul(result, module.gens[m], module.p)
    return result


def sym2_S_vs_M_check(n: int, p: int) -> list[TraceRow]:
    """Traces of a representative of every cycle type on Sym^2 S^(n-1,1) and on M^(n-2,2)."""
    specht, _ = specht_n11(n, p)
    sym2 = SymContext(specht, cap=2).module(2)
    two_row = young_permutation_module(Partition.of(n - 2, 2), p)
    assert sym2.dim == two_row.dim == comb(n, 2), "Sym^2 S^(n-1,1) and M^(n-2,2) differ in dimension"
    rows = []
    for cycle_type in partitions_of(n):
        word = _cycle_type_word(cycle_type)
        rows.append(
            TraceRow(
                cycle_type=cycle_type,
                sym2_specht=int(np.trace(_word_matrix(sym2, word))) % p,
                permutation=int(np.trace(_word_matrix(two_row, word))) % p,
            )
        )
    return rows


if __name__ == "__main__":
    for block in sym_M_block_decomposition(5, 5, 2):
        print(f"d-sequence {block.d_sequence}: M^({block.partition}) of dimension {block.module.dim}")
    print(f"dim Sym^3 D^(9,1) over GF(5): {sym_D_module(10, 5, 3).dim}")
