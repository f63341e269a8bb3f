"""Tests for the symmetric algebra, lifts and the commutator scalars."""

from math import comb

import numpy as np
import pytest

from specht_sym import gf
from specht_sym.modact import GModule, check_coxeter_relations, check_equivariance
from specht_sym.spechtmod import natural_module, specht_n11
from specht_sym.splitters import zeta
from specht_sym.symalg import (
    CommutatorCase,
    DegreeError,
    GradedEndo,
    SymContext,
    SymElement,
    boundary,
    boundary_mul_scalar,
    commutator_scalar_check,
    commutator_scalars,
    comultiply_a,
    divided_diff,
    from_terms,
    lift,
    lift_identity_scalar_check,
    monomial,
    mul_map,
    multiply,
    sym_power,
)

P = 5


@pytest.fixture
def ctx3() -> SymContext:
    """Sym of M^(2,1) over GF(5) up to degree 4."""
    return SymContext(natural_module(3, P), cap=4)


def test_monomial_order_and_index(ctx3: SymContext) -> None:
    """Monomials are listed lexicographically and index inverts the listing."""
    monomials = ctx3.monomials(2)
    assert monomials[0] == (0, 0, 2)
    assert monomials[-1] == (2, 0, 0)
    assert len(monomials) == ctx3.dim(2) == 6  # noqa: PLR2004
    for position, beta in enumerate(monomials):
        assert ctx3.index(beta) == position


def test_degree_one_matches_the_base_basis(ctx3: SymContext) -> None:
    """x_i sits at position t - 1 - i, and action(1) moves x_i the way g moves v_i."""
    units = [ctx3.unit(i) for i in range(ctx3.t)]
    assert [ctx3.index(u) for u in units] == [2, 1, 0]
    for g, h in zip(ctx3.base.gens, ctx3.action(1), strict=True):
        for i, u in enumerate(units):
            expected = from_terms(ctx3, {units[j]: int(g[j, i]) for j in range(ctx3.t)}, 1)
            assert np.array_equal(h[:, ctx3.index(u)] % ctx3.p, expected.coeffs)


@pytest.mark.parametrize(("n", "p", "cap"), [(3, 5, 4), (5, 5, 4), (10, 5, 3)])
def test_sym_powers_of_the_natural_module_satisfy_the_relations(n: int, p: int, cap: int) -> None:
    """Every Sym^d M^(n-1,1) up to the cap is a representation."""
    ctx = SymContext(natural_module(n, p), cap=cap)
    for d in range(cap + 1):
        check_coxeter_relations(ctx.module(d))


@pytest.mark.parametrize(("n", "p"), [(5, 5), (10, 5)])
def test_sym_powers_of_the_specht_module_satisfy_the_relations(n: int, p: int) -> None:
    """Sym^d S^(n-1,1), a non-permutation basis, is a representation for d <= 3."""
    specht, _ = specht_n11(n, p)
    ctx = SymContext(specht, cap=3)
    for d in range(4):
        check_coxeter_relations(ctx.module(d))


def test_monomial_action_permutes_monomials(ctx3: SymContext) -> None:
    """s_1 swaps x_1 and x_2, so it sends x_1^2 x_3 to x_2^2 x_3."""
    s1 = ctx3.action(3)[0]
    image = gf.matmul(s1, monomial(ctx3, (2, 0, 1)).coeffs.reshape(-1, 1), P).ravel()
    assert np.array_equal(image, monomial(ctx3, (0, 2, 1)).coeffs)


def test_degree_cap_is_enforced(ctx3: SymContext) -> None:
    """Degrees above the cap raise DegreeError with a note."""
    with pytest.raises(DegreeError, match="exceeds the cap") as info:
        ctx3.module(5)
    assert "cap >= 5" in info.value.__notes__[0]
    with pytest.raises(DegreeError, match="non-negative"):
        sym_power(ctx3, -1)


def test_symmetric_powers_are_representations() -> None:
    """Sym^3 of S^(3,1) satisfies the Coxeter relations."""
    specht, _ = specht_n11(4, 3)
    ctx = SymContext(specht, cap=3)
    module = ctx.module(3)
    checked = GModule(n=module.n, p=module.p, gens=module.gens, dim=module.dim, name="checked")
    assert checked.dim == comb(5, 3)


def test_multiply_and_divided_difference(ctx3: SymContext) -> None:
    """x1 * x1 x2 = x1^2 x2, and d/dx1 of it is 2 x1 x2."""
    x1 = monomial(ctx3, (1, 0, 0))
    x1x2 = monomial(ctx3, (1, 1, 0))
    product = multiply(ctx3, x1, x1x2)
    assert product.to_terms(ctx3) == {(2, 1, 0): 1}
    assert divided_diff(ctx3, (1, 0, 0), product).to_terms(ctx3) == {(1, 1, 0): 2}
    assert divided_diff(ctx3, (2, 0, 0), product).to_terms(ctx3) == {(0, 1, 0): 1}


def test_comultiply(ctx3: SymContext) -> None:
    """Delta_1(x1^2 x2) = 2 x1 (x) x1 x2 + x2 (x) x1^2."""
    f = monomial(ctx3, (2, 1, 0))
    assert comultiply_a(ctx3, 1, f) == {
        ((1, 0, 0), (1, 1, 0)): 2,
        ((0, 1, 0), (2, 0, 0)): 1,
    }
    assert comultiply_a(ctx3, 4, f) == {}


def test_from_terms_rejects_mixed_degrees(ctx3: SymContext) -> None:
    """Elements are homogeneous."""
    with pytest.raises(DegreeError, match="does not have degree"):
        from_terms(ctx3, {(1, 0, 0): 1, (1, 1, 0): 1}, 1)


def test_boundary_is_sum_of_partials(ctx3: SymContext) -> None:
    """d(x1^2 x2) = 2 x1 x2 + x1^2, and d is equivariant."""
    f = monomial(ctx3, (2, 1, 0))
    image = gf.matmul(boundary(ctx3).component(3), f.coeffs.reshape(-1, 1), P).ravel()
    expected = from_terms(ctx3, {(1, 1, 0): 2, (2, 0, 0): 1}, 2)
    assert np.array_equal(image, expected.coeffs)
    assert boundary(ctx3).is_equivariant(3)


def test_mul_map_multiplies_by_the_diagonal(ctx3: SymContext) -> None:
    """X(x1) = x1 (x1 + x2 + x3)."""
    image = gf.matmul(mul_map(ctx3).component(1), monomial(ctx3, (1, 0, 0)).coeffs.reshape(-1, 1), P).ravel()
    expected = from_terms(ctx3, {(2, 0, 0): 1, (1, 1, 0): 1, (1, 0, 1): 1}, 2)
    assert np.array_equal(image, expected.coeffs)


def test_lift_needs_matching_shape(ctx3: SymContext) -> None:
    """Psi refuses a matrix that is not a map Sym^a -> Sym^b."""
    wrong = ctx3.hom(1, 1, np.eye(3, dtype=np.int64))
    with pytest.raises(DegreeError, match="is not a map"):
        lift(ctx3, wrong, 1, 2)


@pytest.mark.parametrize("a", [0, 1, 2, 3, 4])
def test_lift_of_identity_is_binomial(ctx3: SymContext, a: int) -> None:
    """Psi(id on Sym^a) acts on Sym^d as C(d, a) mod p."""
    for d in range(a, 5):
        assert lift_identity_scalar_check(ctx3, a, d) == comb(d, a) % P


@pytest.mark.parametrize(("n", "expected"), [(5, 0), (6, 1), (3, 3)])
def test_boundary_mul_commutator_is_n(n: int, expected: int) -> None:
    """[d, X] acts on every degree as n mod p."""
    ctx = SymContext(natural_module(n, P), cap=3)
    for d in range(3):
        assert boundary_mul_scalar(ctx, d) == expected


def test_section_commutator_scalars() -> None:
    """[d, Psi(zeta)] acts on Sym^d as C(d, 1) = d mod p."""
    ctx = SymContext(natural_module(4, P), cap=P + 1)
    scalars = commutator_scalars(ctx, zeta(ctx), 2, list(range(1, P + 1)), CommutatorCase.SECTION)
    assert scalars == {d: d % P for d in range(1, P + 1)}
    assert commutator_scalar_check(ctx, zeta(ctx), 2, 3, CommutatorCase.SECTION) == 3  # noqa: PLR2004


def test_commutator_needs_a_split(ctx3: SymContext) -> None:
    """A map that is not a section is refused before any commutator is formed."""
    not_a_section = ctx3.hom(1, 2, np.zeros((6, 3), dtype=np.int64))
    with pytest.raises(ValueError, match="not a section"):
        commutator_scalars(ctx3, not_a_section, 2, [1], CommutatorCase.SECTION)


def test_lift_components_are_equivariant() -> None:
    """Psi of an equivariant map is equivariant on every degree."""
    ctx = SymContext(natural_module(4, P), cap=4)
    psi = lift(ctx, zeta(ctx), 1, 2)
    assert all(check_equivariance(psi.restrict(d)) for d in range(1, 4))


def _random_element(ctx: SymContext, degree: int, rng: np.random.Generator) -> SymElement:
    return SymElement(degree=degree, coeffs=rng.integers(0, ctx.p, ctx.dim(degree)))


def _apply(ctx: SymContext, endo: GradedEndo, f: SymElement) -> SymElement:
    image = gf.matmul(endo.component(f.degree), f.coeffs.reshape(-1, 1), ctx.p).ravel()
    return SymElement(degree=f.degree + endo.shift, coeffs=image)


@pytest.mark.parametrize("degrees", [(1, 1, 1), (1, 2, 1), (2, 1, 1), (0, 1, 3)])
def test_multiply_is_associative(ctx3: SymContext, degrees: tuple[int, int, int]) -> None:
    """(fg)h = f(gh) on random samples."""
    rng = np.random.default_rng(sum(degrees))
    f, g, h = (_random_element(ctx3, d, rng) for d in degrees)
    left = multiply(ctx3, multiply(ctx3, f, g), h)
    right = multiply(ctx3, f, multiply(ctx3, g, h))
    assert np.array_equal(left.coeffs, right.coeffs)


def test_comultiply_is_coassociative(ctx3: SymContext) -> None:
    """Splitting off degree 3 then 1 agrees with splitting off 1 then 2."""
    rng = np.random.default_rng(7)
    f = _random_element(ctx3, 4, rng)
    left: dict[tuple, int] = {}
    for (alpha, rest), c in comultiply_a(ctx3, 3, f).items():
        for (first, second), c2 in comultiply_a(ctx3, 1, monomial(ctx3, alpha)).items():
            key = (first, second, rest)
            left[key] = (left.get(key, 0) + c * c2) % P
    right: dict[tuple, int] = {}
    for (first, rest), c in comultiply_a(ctx3, 1, f).items():
        for (second, third), c2 in comultiply_a(ctx3, 2, monomial(ctx3, rest)).items():
            key = (first, second, third)
            right[key] = (right.get(key, 0) + c * c2) % P
    assert {k: v for k, v in left.items() if v} == {k: v for k, v in right.items() if v}
    assert left


@pytest.mark.parametrize("degrees", [(1, 1), (1, 2), (2, 2), (1, 3)])
def test_boundary_is_a_derivation(ctx3: SymContext, degrees: tuple[int, int]) -> None:
    """d(fg) = d(f) g + f d(g)."""
    rng = np.random.default_rng(10 * degrees[0] + degrees[1])
    f, g = (_random_element(ctx3, d, rng) for d in degrees)
    partial = boundary(ctx3)
    left = _apply(ctx3, partial, multiply(ctx3, f, g))
    right = (
        multiply(ctx3, _apply(ctx3, partial, f), g).coeffs + multiply(ctx3, f, _apply(ctx3, partial, g)).coeffs
    ) % P
    assert np.array_equal(left.coeffs, right)
