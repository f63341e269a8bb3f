"""Explicit splitting maps of the boundary and multiplication sequences.

Sections of the boundary map d_r come from zeta and the upward recursion;
retractions of X_(r-1) on Sym S^(n-1,1) come from gamma and the downward
recursion. Every map is checked for equivariance and for its defining
identity before it is returned.
"""

import time
from dataclasses import dataclass

import numpy as np
from loguru import logger

from specht_sym import gf
from specht_sym.gf import Matrix
from specht_sym.modact import (
    GModule,
    ModuleHom,
    check_equivariance,
    equivariant_solution,
    trivial_module,
    trivial_summand_splits,
)
from specht_sym.spechtmod import natural_module, specht_n11
from specht_sym.symalg import CommutatorCase, SymContext, boundary, lift, mul_map


class SplittingError(Exception):
    """A split fails its identity or is not a module homomorphism."""


@dataclass(frozen=True, eq=False)
class Split:
    """A verified split: a section of d_r or a retraction of X_(r-1)."""

    r: int
    case: CommutatorCase
    hom: ModuleHom


def _check_odd(p: int, what: str) -> None:
    if p == 2:  # noqa: PLR2004
        err = ValueError(f"{what} divides by 2 and needs an odd prime, got p=2")
        err.add_note("Use p >= 3")
        raise err


def _check_recursion_degree(r: int, p: int) -> None:
    if r < 1 or r % p in {0, p - 1}:
        err = ValueError(f"The recursion needs r and r + 1 invertible mod p, got r={r}, p={p}")
        err.add_note(f"Valid r are 1 <= r with r mod {p} not in {{0, {p - 1}}}")
        raise err


def _require_split(ctx: SymContext, hom: ModuleHom, product: Matrix, what: str) -> None:
    if not gf.is_identity(product, ctx.p):
        logger.error(f"{what} fails its identity on {ctx.base.label}")
        err = SplittingError(f"{what} does not compose to the identity")
        err.add_note(f"Base module {ctx.base.label} over GF({ctx.p})")
        raise err
    if not check_equivariance(hom):
        logger.error(f"{what} is not equivariant on {ctx.base.label}")
        err = SplittingError(f"{what} does not commute with the S_{ctx.base.n} action")
        err.add_note(f"Base module {ctx.base.label} over GF({ctx.p})")
        raise err
    logger.success(f"{what} verified on {ctx.base.label} over GF({ctx.p})")


def _is_permutation_basis(module: GModule) -> bool:
    return all(
        np.all((g == 0) | (g == 1)) and np.all(g.sum(axis=0) == 1) and np.all(g.sum(axis=1) == 1)
        for g in module.gens
    )


def zeta(ctx: SymContext) -> ModuleHom:
    """x_i -> x_i^2 / 2, a section of d_2 on a permutation module."""
    p = ctx.p
    _check_odd(p, "zeta")
    if not _is_permutation_basis(ctx.base):
        err = ValueError(f"zeta needs a basis permuted by S_n, {ctx.base.label} has none")
        err.add_note("Generators must be permutation matrices")
        raise err
    half = gf.inverse_mod_p(2, p)
    matrix = np.zeros((ctx.dim(2), ctx.t), dtype=np.int64)
    for i in range(ctx.t):
        square = tuple(2 if k == i else 0 for k in range(ctx.t))
        matrix[ctx.index(square), ctx.index(ctx.unit(i))] = half
    hom = ctx.hom(1, 2, matrix)
    _require_split(ctx, hom, gf.matmul(boundary(ctx).component(2), matrix, p), "zeta")
    return hom


def _check_gamma_input(n: int, p: int) -> None:
    _check_odd(p, "gamma")
    if n < 3 or n % p:  # noqa: PLR2004
        err = ValueError(f"gamma needs p | n and n >= 3, got n={n}, p={p}")
        err.add_note("X_2 on Sym S^(n-1,1) only has this retraction when p divides n")
        raise err


def _gamma_image(ctx: SymContext, beta: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """gamma on one cubic monomial in the e-basis, with halves and quarters in GF(p)."""
    p, t = ctx.p, ctx.t
    half, quarter = gf.inverse_mod_p(2, p), gf.inverse_mod_p(4, p)

    def mono(*variables: int) -> tuple[int, ...]:
        exponents = [0] * t
        for v in variables:
            exponents[v] += 1
        return tuple(exponents)

    image: dict[tuple[int, ...], int] = {}

    def add(key: tuple[int, ...], c: int) -> None:
        image[key] = (image.get(key, 0) + c) % p

    support = [i for i, b in enumerate(beta) if b]
    if len(support) == 1:
        (i,) = support
        for v in range(t):
            add(mono(i, v), -half)
    elif len(support) == 2:  # noqa: PLR2004
        i, j = support if beta[support[0]] == 2 else support[::-1]  # noqa: PLR2004
        add(mono(i, j), half)
        add(mono(i, i), -half)
        add(mono(j, j), -half)
        for v in range(t):
            add(mono(v, v), -quarter)
    else:
        for v in support:
            add(mono(v, v), -quarter)
        for v in range(t):
            add(mono(v, v), -quarter)
    return image


def gamma(n: int, p: int, ctx: SymContext | None = None) -> ModuleHom:
    """The retraction Sym^3 S^(n-1,1) -> Sym^2 S^(n-1,1) of X_2."""
    _check_gamma_input(n, p)
    if ctx is None:
        specht, _ = specht_n11(n, p)
        ctx = SymContext(specht, cap=3)
    matrix = np.zeros((ctx.dim(2), ctx.dim(3)), dtype=np.int64)
    for column, beta in enumerate(ctx.monomials(3)):
        for key, c in _gamma_image(ctx, beta).items():
            matrix[ctx.index(key), column] = c
    hom = ctx.hom(3, 2, matrix)
    _require_split(ctx, hom, gf.matmul(matrix, mul_map(ctx).component(2), p), "gamma")
    return hom


def theta_up(ctx: SymContext, phi: ModuleHom, r: int) -> ModuleHom:
    """From a section of d_r build a section of d_(r+1).

    theta = r^-1 (Psi(phi) - (r+1)^-1 Psi(phi) Psi(phi) d) on Sym^r.
    """
    p = ctx.p
    _check_recursion_degree(r, p)
    partial = boundary(ctx)
    _require_split(ctx, phi, gf.matmul(partial.component(r), phi.matrix, p), f"input section of d_{r}")
    start = time.time()
    psi = lift(ctx, phi, r - 1, r)
    upper = psi.component(r)
    correction = gf.matmul(gf.matmul(upper, phi.matrix, p), partial.component(r), p)
    theta = gf.inverse_mod_p(r, p) * (upper - gf.inverse_mod_p(r + 1, p) * correction) % p
    logger.debug(f"theta_up for r={r} built ({time.time() - start:.2f}s)")
    hom = ctx.hom(r, r + 1, theta)
    _require_split(ctx, hom, gf.matmul(partial.component(r + 1), theta, p), f"section of d_{r + 1}")
    return hom


def theta_down(ctx: SymContext, phi: ModuleHom, r: int) -> ModuleHom:
    """From a retraction of X_(r-1) build a retraction of X_r.

    theta = r^-1 (Psi(phi) - (r+1)^-1 X Psi(phi) Psi(phi)) on Sym^(r+1).
    """
    p = ctx.p
    _check_recursion_degree(r, p)
    x = mul_map(ctx)
    _require_split(ctx, phi, gf.matmul(phi.matrix, x.component(r - 1), p), f"input retraction of X_{r - 1}")
    start = time.time()
    psi = lift(ctx, phi, r, r - 1)
    upper = psi.component(r + 1)
    correction = gf.matmul(x.component(r - 1), gf.matmul(phi.matrix, upper, p), p)
    theta = gf.inverse_mod_p(r, p) * (upper - gf.inverse_mod_p(r + 1, p) * correction) % p
    logger.debug(f"theta_down for r={r} built ({time.time() - start:.2f}s)")
    hom = ctx.hom(r + 1, r, theta)
    _require_split(ctx, hom, gf.matmul(theta, x.component(r), p), f"retraction of X_{r}")
    return hom


def split_chain_permutation(module: GModule, ctx: SymContext | None = None) -> list[Split]:
    """Sections of d_r for 2 <= r <= p-1 on any permutation module."""
    p = module.p
    _check_odd(p, "The section chain")
    ctx = ctx if ctx is not None else SymContext(module, cap=p - 1)
    logger.info(f"Building sections of d_r on {module.label} for 2 <= r <= {p - 1}")
    splits = [Split(r=2, case=CommutatorCase.SECTION, hom=zeta(ctx))]
    for r in range(2, p - 1):
        splits.append(Split(r=r + 1, case=CommutatorCase.SECTION, hom=theta_up(ctx, splits[-1].hom, r)))
    return splits


def split_chain_M(n: int, p: int, ctx: SymContext | None = None) -> list[Split]:
    return split_chain_permutation(natural_module(n, p), ctx)


def split_chain_S(n: int, p: int, ctx: SymContext | None = None) -> list[Split]:
    """Retractions of X_(r-1) on Sym S^(n-1,1) for 3 <= r <= p-1."""
    if p < 5 or n % p:  # noqa: PLR2004
        err = ValueError(f"The retraction chain needs p >= 5 and p | n, got n={n}, p={p}")
        err.add_note("For p = 3 the range 3 <= r <= p-1 is empty")
        raise err
    if ctx is None:
        specht, _ = specht_n11(n, p)
        ctx = SymContext(specht, cap=p - 1)
    logger.info(f"Building retractions of X_(r-1) on {ctx.base.label} for 3 <= r <= {p - 1}")
    splits = [Split(r=3, case=CommutatorCase.RETRACTION, hom=gamma(n, p, ctx))]
    for r in range(3, p - 1):
        splits.append(Split(r=r + 1, case=CommutatorCase.RETRACTION, hom=theta_down(ctx, splits[-1].hom, r)))
    return splits


def no_retraction_certificate(n: int, p: int, r: int = 2) -> bool:
    """True iff no equivariant retraction of X_(r-1): Sym^(r-1) S -> Sym^r S exists.

    The equivariance and retraction conditions form one linear system in
    the entries of the candidate; infeasibility is certified by its
    echelon form.
    """
    specht, _ = specht_n11(n, p)
    ctx = SymContext(specht, cap=r)
    x = mul_map(ctx).component(r - 1)
    solution = equivariant_solution(
        ctx.module(r),
        ctx.module(r - 1),
        constraint=x,
        right_hand_side=np.eye(ctx.dim(r - 1), dtype=np.int64),
    )
    if solution is None:
        logger.info(f"No retraction of X_{r - 1} on {specht.label} over GF({p})")
        return True
    return False


def trivial_split_r1(n: int, p: int) -> bool:
    """Whether K -> M^(n-1,1) splits, read off from epsilon after iota."""
    natural = natural_module(n, p)
    splits = trivial_summand_splits(natural)
    if not splits:
        retraction = equivariant_solution(
            natural,
            trivial_module(n, p),
            constraint=np.ones((n, 1), dtype=np.int64),
            right_hand_side=np.ones((1, 1), dtype=np.int64),
        )
        assert retraction is None, "epsilon o iota = 0 yet a retraction of iota was found"
    return splits


if __name__ == "__main__":
    for split in split_chain_M(5, 5):
        print(f"section of d_{split.r} on M^(4,1): {split.hom.matrix.shape}")
    for split in split_chain_S(10, 5):
        print(f"retraction of X_{split.r - 1} on S^(9,1): {split.hom.matrix.shape}")
    print(f"X_1 on S^(4,1) has no retraction over GF(5): {no_retraction_certificate(5, 5)}")
