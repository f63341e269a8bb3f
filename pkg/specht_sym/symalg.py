"""The graded symmetric algebra on a based module, up to a degree cap.

Degree-d monomials x^beta are indexed by compositions beta of d with
length t = dim V, in lexicographic order. The basis vector v_i of V is the
monomial x_i, which sits at position t - 1 - i of degree 1, so base-ordered
matrices are conjugated on the way in. Every operator is stored as one dense
matrix per source degree.
"""

import time
from collections.abc import Callable
from dataclasses import dataclass
from enum import Enum
from math import comb

import numpy as np
from loguru import logger

from specht_sym import gf
from specht_sym.combinatorics import Composition, compositions, sym_power_dimension
from specht_sym.gf import FieldElement, Matrix, Vector
from specht_sym.modact import GModule, ModuleError, ModuleHom, check_equivariance, trivial_module


class DegreeError(ValueError):
    """A degree lies outside [0, cap] of a SymContext."""


class NotScalarError(ArithmeticError):
    """An operator expected to act as a scalar does not."""


class SymContext:
    """Sym^0 V, ..., Sym^cap V for a module V with a fixed ordered basis."""

    def __init__(self, base: GModule, cap: int) -> None:
        if cap < 0:
            err = DegreeError(f"Degree cap must be non-negative, got {cap}")
            err.add_note("Use cap >= the largest degree any construction touches")
            raise err
        self.base = base
        self.cap = cap
        self.t = base.dim
        self.p = base.p
        self._exponents: dict[int, np.ndarray] = {}
        self._actions: dict[int, tuple[Matrix, ...]] = {}
        self._modules: dict[int, GModule] = {}
        self._shifts: dict[tuple[int, Composition], np.ndarray] = {}
        # Integer C(x, y) for ranking, and C(x, y) mod p for exponents up to cap + 1.
        self._comb = np.array(
            [[comb(x, y) for y in range(self.t + 1)] for x in range(cap + self.t + 2)], dtype=np.int64
        )
        size = cap + 2
        self._binom_p = np.array(
            [[gf.binom_mod_p(x, y, self.p) for y in range(size)] for x in range(size)], dtype=np.int64
        )
        # Degree-1 position of x_i, the monomial of the base vector v_i.
        self.linear_positions = self.rank_of(np.eye(self.t, dtype=np.int64), 1)

    def __repr__(self) -> str:
        return f"SymContext({self.base.label}, cap={self.cap})"

    def check_degree(self, d: int) -> None:
        if d > self.cap:
            err = DegreeError(f"Degree {d} exceeds the cap {self.cap}")
            err.add_note(f"Build the SymContext for {self.base.label} with cap >= {d}")
            raise err

    def dim(self, d: int) -> int:
        return sym_power_dimension(self.t, d)

    def monomials(self, d: int) -> tuple[Composition, ...]:
        if d < 0:
            return ()
        self.check_degree(d)
        return compositions(self.t, d)

    def exponents(self, d: int) -> np.ndarray:
        """Exponent vectors of the degree-d monomials as rows."""
        if d not in self._exponents:
            self._exponents[d] = np.array(self.monomials(d), dtype=np.int64).reshape(-1, self.t)
        return self._exponents[d]

    def rank_of(self, exponents: np.ndarray, d: int) -> np.ndarray:
        """Positions of exponent rows of degree d in the lexicographic order.

        Entry i contributes the number of compositions that agree before i
        and are smaller at i, a hockey-stick sum of binomials.
        """
        exponents = exponents.reshape(-1, self.t)
        before = np.cumsum(exponents, axis=1) - exponents
        remaining = d - before
        positions = np.zeros(exponents.shape[0], dtype=np.int64)
        for i in range(self.t - 1):
            tail = self.t - 1 - i
            positions += self._binomial(remaining[:, i] + tail, tail)
            positions -= self._binomial(remaining[:, i] - exponents[:, i] + tail, tail)
        return positions

    def _binomial(self, top: np.ndarray, bottom: int) -> np.ndarray:
        if top.size and int(top.max()) < self._comb.shape[0] and bottom < self._comb.shape[1]:
            return self._comb[top, bottom]
        return np.array([comb(int(x), bottom) for x in top], dtype=np.int64)

    def index(self, beta: Composition) -> int:
        if len(beta) != self.t:
            err = ValueError(f"Composition {beta} has length {len(beta)}, expected {self.t}")
            err.add_note("Monomials use one exponent per basis vector of the base module")
            raise err
        d = sum(beta)
        self.check_degree(d)
        return int(self.rank_of(np.array(beta, dtype=np.int64), d)[0])

    def shift_index(self, k: int, gamma: Composition) -> np.ndarray:
        """Positions of x^delta * x^gamma, delta of degree k, in degree k + |gamma|."""
        key = (k, gamma)
        if key not in self._shifts:
            shifted = self.exponents(k) + np.array(gamma, dtype=np.int64)
            self._shifts[key] = self.rank_of(shifted, k + sum(gamma))
        return self._shifts[key]

    def binomial_weights(self, beta: np.ndarray, alpha: np.ndarray) -> np.ndarray:
        """prod_i C(beta_i, alpha_i) mod p, row by row; zero unless alpha <= beta."""
        fits = alpha <= beta
        clipped = np.where(fits, alpha, 0)
        values = np.ones(np.broadcast_shapes(beta.shape, alpha.shape)[:-1], dtype=np.int64)
        for i in range(self.t):
            values = values * self._binom_p[beta[..., i], clipped[..., i]] % self.p
        return np.where(np.all(fits, axis=-1), values, 0)

    def unit(self, j: int) -> Composition:
        """The exponent vector of x_j."""
        return tuple(1 if i == j else 0 for i in range(self.t))

    def conjugate_linear(self, g: Matrix) -> Matrix:
        """A matrix on V in the base order, rewritten on the degree-1 monomials."""
        out = np.zeros_like(g)
        out[np.ix_(self.linear_positions, self.linear_positions)] = g
        return out

    def action(self, d: int) -> tuple[Matrix, ...]:
        """Generator matrices on Sym^d V, built from degree d - 1.

        The column of x^beta is g(x_i) * g(x^(beta - e_i)) with i the first
        variable occurring in beta.
        """
        self.check_degree(d)
        if d in self._actions:
            return self._actions[d]
        if d == 0:
            gens = tuple(np.ones((1, 1), dtype=np.int64) for _ in self.base.gens)
        elif d == 1:
            gens = tuple(self.conjugate_linear(g) for g in self.base.gens)
        else:
            logger.debug(f"Building degree-{d} action matrices for {self.base.label}")
            start = time.time()
            previous = self.action(d - 1)
            exponents = self.exponents(d)
            first = np.argmax(exponents > 0, axis=1)
            gens = tuple(self._extend_generator(g, prev, exponents, first, d) for g, prev in zip(self.base.gens, previous, strict=True))
            logger.debug(f"Degree-{d} action ready, dim {self.dim(d)} ({time.time() - start:.2f}s)")
        self._actions[d] = gens
        return gens

    def _extend_generator(
        self, g: Matrix, previous: Matrix, exponents: np.ndarray, first: np.ndarray, d: int
    ) -> Matrix:
        out = np.zeros((self.dim(d), self.dim(d)), dtype=np.int64)
        for i in range(self.t):
            columns = np.flatnonzero(first == i)
            if columns.size == 0:
                continue
            lowered = exponents[columns].copy()
            lowered[:, i] -= 1
            block = previous[:, self.rank_of(lowered, d - 1)]
            for j in np.flatnonzero(g[:, i]):
                rows = self.shift_index(d - 1, self.unit(int(j)))
                out[np.ix_(rows, columns)] += int(g[j, i]) * block
            out %= self.p
        return out

    def module(self, d: int) -> GModule:
        """Sym^d V as a module; Sym^0 V is the trivial module K."""
        self.check_degree(d)
        if d not in self._modules:
            if d == 0:
                self._modules[d] = trivial_module(self.base.n, self.p)
            else:
                # The multiplicative extension of a representation is a representation.
                self._modules[d] = GModule(
                    n=self.base.n,
                    p=self.p,
                    gens=self.action(d),
                    dim=self.dim(d),
                    name=f"Sym^{d} {self.base.label}",
                    verify=False,
                )
        return self._modules[d]

    def hom(self, a: int, b: int, matrix: Matrix) -> ModuleHom:
        """Wrap a Sym^a -> Sym^b matrix as a candidate homomorphism."""
        return ModuleHom(self.module(a), self.module(b), np.asarray(matrix, dtype=np.int64) % self.p)


def sym_power(ctx: SymContext, r: int) -> GModule:
    if r < 0:
        err = DegreeError(f"Symmetric power degree must be non-negative, got {r}")
        err.add_note(f"Valid degrees are 0..{ctx.cap}")
        raise err
    return ctx.module(r)


@dataclass(frozen=True, eq=False)
class SymElement:
    """A homogeneous element: coefficients on the degree-d monomial basis."""

    degree: int
    coeffs: Vector

    def to_terms(self, ctx: SymContext) -> dict[Composition, int]:
        return {beta: int(c) for beta, c in zip(ctx.monomials(self.degree), self.coeffs, strict=True) if c}


def monomial(ctx: SymContext, beta: Composition, coefficient: int = 1) -> SymElement:
    return from_terms(ctx, {beta: coefficient}, sum(beta))


def from_terms(ctx: SymContext, terms: dict[Composition, int], degree: int) -> SymElement:
    coeffs = np.zeros(ctx.dim(degree), dtype=np.int64)
    ctx.check_degree(degree)
    for beta, c in terms.items():
        if sum(beta) != degree:
            err = DegreeError(f"Monomial {beta} does not have degree {degree}")
            err.add_note("Elements are homogeneous")
            raise err
        coeffs[ctx.index(beta)] = (coeffs[ctx.index(beta)] + c) % ctx.p
    return SymElement(degree=degree, coeffs=coeffs)


def multiply(ctx: SymContext, f: SymElement, g: SymElement) -> SymElement:
    """Bilinear extension of x^alpha * x^beta = x^(alpha + beta)."""
    degree = f.degree + g.degree
    ctx.check_degree(degree)
    out = np.zeros(ctx.dim(degree), dtype=np.int64)
    for position in np.flatnonzero(f.coeffs):
        alpha = ctx.monomials(f.degree)[position]
        out[ctx.shift_index(g.degree, alpha)] += int(f.coeffs[position]) * g.coeffs
        out %= ctx.p
    return SymElement(degree=degree, coeffs=out)


def comultiply_a(ctx: SymContext, a: int, f: SymElement) -> dict[tuple[Composition, Composition], int]:
    """Delta_a(f) as {(alpha, beta - alpha): coefficient} in Sym^a (x) Sym^(d-a)."""
    if f.degree < a or a < 0:
        return {}
    result: dict[tuple[Composition, Composition], int] = {}
    alphas = ctx.exponents(a)
    for position in np.flatnonzero(f.coeffs):
        beta = ctx.exponents(f.degree)[position]
        coefficients = ctx.binomial_weights(beta[None, :], alphas) * int(f.coeffs[position]) % ctx.p
        for alpha, c in zip(alphas, coefficients, strict=True):
            if c:
                key = (tuple(int(v) for v in alpha), tuple(int(v) for v in beta - alpha))
                result[key] = (result.get(key, 0) + int(c)) % ctx.p
    return {key: c for key, c in result.items() if c}


def divided_diff(ctx: SymContext, alpha: Composition, f: SymElement) -> SymElement:
    """x^beta -> prod_i C(beta_i, alpha_i) x^(beta - alpha); alpha! is never formed."""
    a = sum(alpha)
    degree = f.degree - a
    if degree < 0:
        return SymElement(degree=degree, coeffs=np.zeros(0, dtype=np.int64))
    alpha_row = np.array(alpha, dtype=np.int64)
    betas = ctx.exponents(f.degree)
    coefficients = ctx.binomial_weights(betas, alpha_row[None, :])
    out = np.zeros(ctx.dim(degree), dtype=np.int64)
    keep = np.flatnonzero(coefficients * f.coeffs % ctx.p)
    if keep.size:
        targets = ctx.rank_of(betas[keep] - alpha_row, degree)
        np.add.at(out, targets, coefficients[keep] * f.coeffs[keep])
    return SymElement(degree=degree, coeffs=out % ctx.p)


class GradedEndo:
    """A degree-shifting operator on Sym V, one matrix per source degree.

    Components are computed on first use and cached.
    """

    def __init__(self, ctx: SymContext, shift: int, build: Callable[[int], Matrix], name: str = "") -> None:
        self.ctx = ctx
        self.shift = shift
        self.name = name
        self._build = build
        self._components: dict[int, Matrix] = {}

    def __repr__(self) -> str:
        return f"GradedEndo({self.name or '?'}, shift={self.shift})"

    def component(self, d: int) -> Matrix:
        """The matrix Sym^d V -> Sym^(d + shift) V."""
        self.ctx.check_degree(d)
        self.ctx.check_degree(d + self.shift)
        if d not in self._components:
            rows, cols = self.ctx.dim(d + self.shift), self.ctx.dim(d)
            if d < 0 or d + self.shift < 0:
                matrix = np.zeros((rows, cols), dtype=np.int64)
            else:
                matrix = self._build(d)
            assert matrix.shape == (rows, cols), f"{self.name} component {d} has shape {matrix.shape}"
            self._components[d] = matrix % self.ctx.p
        return self._components[d]

    def restrict(self, d: int) -> ModuleHom:
        return self.ctx.hom(d, d + self.shift, self.component(d))

    def is_equivariant(self, d: int) -> bool:
        return check_equivariance(self.restrict(d))

    def compose(self, inner: "GradedEndo") -> "GradedEndo":
        """self after inner."""
        return GradedEndo(
            self.ctx,
            self.shift + inner.shift,
            lambda d: gf.matmul(self.component(d + inner.shift), inner.component(d), self.ctx.p),
            name=f"{self.name}*{inner.name}",
        )

    def _check_same_shift(self, other: "GradedEndo") -> None:
        if self.shift != other.shift:
            err = DegreeError(f"Cannot add operators of shifts {self.shift} and {other.shift}")
            err.add_note(f"{self.name} and {other.name} map between different degrees")
            raise err

    def add(self, other: "GradedEndo") -> "GradedEndo":
        self._check_same_shift(other)
        return GradedEndo(self.ctx, self.shift, lambda d: self.component(d) + other.component(d), name=f"{self.name}+{other.name}")

    def sub(self, other: "GradedEndo") -> "GradedEndo":
        self._check_same_shift(other)
        return GradedEndo(self.ctx, self.shift, lambda d: self.component(d) - other.component(d), name=f"{self.name}-{other.name}")

    def scale(self, c: int) -> "GradedEndo":
        return GradedEndo(self.ctx, self.shift, lambda d: c * self.component(d), name=f"{c}{self.name}")


def commutator(first: GradedEndo, second: GradedEndo) -> GradedEndo:
    """[first, second] = first second - second first."""
    return first.compose(second).sub(second.compose(first))


def lift(ctx: SymContext, phi: ModuleHom, a: int, b: int) -> GradedEndo:
    """The degree-less lift Psi(phi) of phi: Sym^a V -> Sym^b V.

    On x^beta it is the sum over alpha <= beta with |alpha| = a of
    prod_i C(beta_i, alpha_i) * x^(beta - alpha) * phi(x^alpha).
    """
    if a < 0 or b < 0 or phi.matrix.shape != (ctx.dim(b), ctx.dim(a)):
        err = DegreeError(f"A {phi.matrix.shape} matrix is not a map Sym^{a} -> Sym^{b} of {ctx.base.label}")
        err.add_note(f"Expected shape {(ctx.dim(b), ctx.dim(a))}")
        raise err
    ctx.check_degree(max(a, b))
    source = phi.matrix % ctx.p
    alphas = ctx.exponents(a)

    def build(d: int) -> Matrix:
        out = np.zeros((ctx.dim(d + b - a), ctx.dim(d)), dtype=np.int64)
        if d < a:
            return out
        start = time.time()
        for gamma in ctx.monomials(d - a):
            gamma_row = np.array(gamma, dtype=np.int64)
            weights = ctx.binomial_weights(alphas + gamma_row, alphas)
            rows = ctx.shift_index(b, gamma)
            cols = ctx.shift_index(a, gamma)
            out[np.ix_(rows, cols)] += source * weights[None, :]
        logger.debug(f"Lift component Sym^{d} -> Sym^{d + b - a} ready ({time.time() - start:.2f}s)")
        return out % ctx.p

    return GradedEndo(ctx, b - a, build, name=f"Psi[{a}->{b}]")


def _permutation_basis_check(ctx: SymContext, hom: ModuleHom, what: str) -> None:
    if not check_equivariance(hom):
        err = ModuleError(f"{what} is not equivariant on {ctx.base.label}")
        err.add_note("The base basis must be permuted by S_n (or p | n for S^(n-1,1))")
        raise err


def epsilon(ctx: SymContext) -> ModuleHom:
    """The all-ones map V -> K."""
    hom = ctx.hom(1, 0, np.ones((1, ctx.t), dtype=np.int64))
    _permutation_basis_check(ctx, hom, "epsilon")
    return hom


def iota(ctx: SymContext) -> ModuleHom:
    """K -> V, 1 -> sum of the basis vectors."""
    hom = ctx.hom(0, 1, np.ones((ctx.t, 1), dtype=np.int64))
    _permutation_basis_check(ctx, hom, "iota")
    return hom


def boundary(ctx: SymContext, eps: ModuleHom | None = None) -> GradedEndo:
    """Psi(epsilon) = sum_i d/dx_i; its degree-r component is the boundary map of degree r."""
    eps = eps if eps is not None else epsilon(ctx)
    if not np.all(eps.matrix % ctx.p == 1):
        err = ValueError("The boundary needs epsilon(x_i) = 1 for every basis vector")
        err.add_note(f"Received epsilon = {eps.matrix.tolist()}")
        raise err
    endo = lift(ctx, eps, 1, 0)
    endo.name = "d"
    return endo


def mul_map(ctx: SymContext, inclusion: ModuleHom | None = None) -> GradedEndo:
    """Psi(iota): multiplication by iota(1)."""
    inclusion = inclusion if inclusion is not None else iota(ctx)
    endo = lift(ctx, inclusion, 0, 1)
    endo.name = "X"
    return endo


class CommutatorCase(Enum):
    """Which identity a split satisfies."""

    SECTION = "section"  # boundary_r after phi = id, phi: Sym^(r-1) -> Sym^r
    RETRACTION = "retraction"  # phi after X_(r-1) = id, phi: Sym^r -> Sym^(r-1)


def _require_scalar(matrix: Matrix, p: int, what: str) -> FieldElement:
    scalar = gf.is_scalar_matrix(matrix, p)
    if scalar is None:
        logger.error(f"{what} does not act as a scalar")
        err = NotScalarError(f"{what} does not act as a scalar")
        err.add_note("The split whose lift was taken does not satisfy its defining identity")
        raise err
    return scalar


def commutator_scalars(
    ctx: SymContext, phi: ModuleHom, r: int, degrees: list[int], case: CommutatorCase
) -> dict[int, FieldElement]:
    """Scalars by which [d, Psi(phi)] (sections) or [Psi(phi), X] (retractions) act."""
    p = ctx.p
    if case is CommutatorCase.SECTION:
        partial = boundary(ctx)
        identity = gf.matmul(partial.component(r), phi.matrix, p)
        psi = lift(ctx, phi, r - 1, r)
        operator = commutator(partial, psi)
    else:
        x = mul_map(ctx)
        identity = gf.matmul(phi.matrix, x.component(r - 1), p)
        psi = lift(ctx, phi, r, r - 1)
        operator = commutator(psi, x)
    if not gf.is_identity(identity, p):
        err = ValueError(f"phi is not a {case.value} in degree {r}")
        err.add_note("The defining identity must hold before commutators are taken")
        raise err
    scalars = {}
    for d in degrees:
        scalars[d] = _require_scalar(operator.component(d), p, f"{operator.name} on degree {d}")
        logger.debug(f"{case.value} r={r}: commutator on degree {d} is {scalars[d]}")
    return scalars


def commutator_scalar_check(ctx: SymContext, phi: ModuleHom, r: int, d: int, case: CommutatorCase) -> FieldElement:
    return commutator_scalars(ctx, phi, r, [d], case)[d]


def lift_identity_scalar_check(ctx: SymContext, a: int, d: int) -> FieldElement:
    """The scalar by which Psi(id on Sym^a) acts on Sym^d, expected C(d, a) mod p."""
    identity = ctx.hom(a, a, np.eye(ctx.dim(a), dtype=np.int64))
    return _require_scalar(lift(ctx, identity, a, a).component(d), ctx.p, f"Psi(id_{a}) on degree {d}")


def boundary_mul_scalar(ctx: SymContext, d: int) -> FieldElement:
    """[d, X] on Sym^d, which is epsilon(iota(1)) = t mod p."""
    return _require_scalar(commutator(boundary(ctx), mul_map(ctx)).component(d), ctx.p, f"[d, X] on degree {d}")


if __name__ == "__main__":
    from specht_sym.spechtmod import natural_module

    ctx = SymContext(natural_module(5, 5), cap=4)
    partial = boundary(ctx)
    for r in range(1, 5):
        print(f"rank of d_{r} on Sym^{r} M^(4,1) over GF(5): {gf.rank(partial.component(r), 5)}")
    for a in range(3):
        print(f"Psi(id_{a}) on degree 4 is {lift_identity_scalar_check(ctx, a, 4)}")
