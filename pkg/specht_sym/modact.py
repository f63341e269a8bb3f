"""Matrix models of KS_n-modules over GF(p) and the maps between them.

A module is given by one matrix per Coxeter generator s_m = (m, m+1),
m = 1..n-1, acting on column vectors. Equivariance is checked on these
generators only, which suffices since they generate S_n.
"""

import time
from dataclasses import dataclass, field

import numpy as np
from loguru import logger

from specht_sym import gf
from specht_sym.gf import Matrix, Vector


class ModuleError(Exception):
    """A module or homomorphism fails a structural requirement."""


@dataclass(frozen=True, eq=False)
class GModule:
    """A representation of S_n over GF(p) given by its generator matrices."""

    n: int
    p: int
    gens: tuple[Matrix, ...]
    dim: int
    name: str = ""
    # Skip the relation check only for modules derived from an already
    # verified one by a construction that preserves the relations.
    verify: bool = field(default=True, repr=False)

    def __post_init__(self) -> None:
        gf.check_prime(self.p)
        if len(self.gens) != max(self.n - 1, 0):
            err = ModuleError(f"Expected {self.n - 1} generators for S_{self.n}, got {len(self.gens)}")
            err.add_note("Supply one matrix per Coxeter transposition (m, m+1)")
            raise err
        for m, g in enumerate(self.gens, start=1):
            if g.shape != (self.dim, self.dim):
                err = ModuleError(f"Generator s_{m} has shape {g.shape}, expected {(self.dim, self.dim)}")
                err.add_note(f"Module {self.label} has dimension {self.dim}")
                raise err
        if self.verify:
            check_coxeter_relations(self)

    @property
    def label(self) -> str:
        return self.name or f"<{self.dim}-dim module of S_{self.n}>"

    @property
    def identity(self) -> Matrix:
        return np.eye(self.dim, dtype=np.int64)


def check_coxeter_relations(module: GModule) -> None:
    """Raise ModuleError unless s_m^2 = 1, braid and commutation relations hold."""
    logger.debug(f"Checking Coxeter relations on {module.label}")
    start = time.time()
    p, gens = module.p, module.gens
    squares = [gf.matmul(g, g, p) for g in gens]
    for m, square in enumerate(squares, start=1):
        if not gf.is_identity(square, p):
            err = ModuleError(f"s_{m}^2 is not the identity on {module.label}")
            err.add_note("Every generator must be an involution")
            raise err
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            gi, gj = gens[i], gens[j]
            gij = gf.matmul(gi, gj, p)
            if j == i + 1:
                left = gf.matmul(gij, gi, p)
                right = gf.matmul(gj, gf.matmul(gi, gj, p), p)
                relation = "braid"
            else:
                left = gij
                right = gf.matmul(gj, gi, p)
                relation = "commutation"
            if not np.array_equal(left, right):
                err = ModuleError(f"{relation} relation fails for s_{i + 1}, s_{j + 1} on {module.label}")
                err.add_note("The matrices do not define a representation of S_n")
                raise err
    logger.debug(f"Coxeter relations hold on {module.label} ({time.time() - start:.2f}s)")


def trivial_module(n: int, p: int) -> GModule:
    """The trivial module K: dimension 1, identity generators."""
    one = np.ones((1, 1), dtype=np.int64)
    return GModule(n=n, p=p, gens=tuple(one for _ in range(n - 1)), dim=1, name="K")


def direct_sum(first: GModule, second: GModule) -> GModule:
    _check_same_group(first, second)
    gens = []
    for g, h in zip(first.gens, second.gens, strict=True):
        block = np.zeros((first.dim + second.dim,) * 2, dtype=np.int64)
        block[: first.dim, : first.dim] = g
        block[first.dim :, first.dim :] = h
        gens.append(block)
    return GModule(
        n=first.n,
        p=first.p,
        gens=tuple(gens),
        dim=first.dim + second.dim,
        name=f"{first.label} + {second.label}",
        verify=False,
    )


def _check_same_group(source: GModule, target: GModule) -> None:
    if (source.n, source.p) != (target.n, target.p):
        err = ModuleError(
            f"Modules live over different groups or fields: "
            f"S_{source.n}/GF({source.p}) vs S_{target.n}/GF({target.p})"
        )
        err.add_note("Homomorphisms need a common n and p")
        raise err


@dataclass(frozen=True, eq=False)
class ModuleHom:
    """A candidate homomorphism: a target.dim x source.dim matrix."""

    source: GModule
    target: GModule
    matrix: Matrix

    def __post_init__(self) -> None:
        _check_same_group(self.source, self.target)
        if self.matrix.shape != (self.target.dim, self.source.dim):
            err = gf.ShapeError(
                f"Map matrix has shape {self.matrix.shape}, "
                f"expected {(self.target.dim, self.source.dim)}"
            )
            err.add_note(f"{self.source.label} -> {self.target.label}")
            raise err

    @property
    def p(self) -> int:
        return self.source.p

    def __call__(self, vector: Vector) -> Vector:
        return gf.matmul(self.matrix, vector.reshape(-1, 1), self.p).reshape(-1)


def identity_hom(module: GModule) -> ModuleHom:
    return ModuleHom(module, module, module.identity)


def zero_hom(source: GModule, target: GModule) -> ModuleHom:
    return ModuleHom(source, target, np.zeros((target.dim, source.dim), dtype=np.int64))


def compose(outer: ModuleHom, inner: ModuleHom) -> ModuleHom:
    """outer after inner."""
    if inner.target.dim != outer.source.dim:
        err = gf.ShapeError(f"Cannot compose {outer.source.label} <- {inner.target.label}")
        err.add_note(f"Dimensions {outer.source.dim} and {inner.target.dim} differ")
        raise err
    return ModuleHom(inner.source, outer.target, gf.matmul(outer.matrix, inner.matrix, inner.p))


def check_equivariance(hom: ModuleHom) -> bool:
    """True iff the map commutes with every generator exactly."""
    p = hom.p
    for m, (g_source, g_target) in enumerate(
        zip(hom.source.gens, hom.target.gens, strict=True), start=1
    ):
        left = gf.matmul(hom.matrix, g_source, p)
        right = gf.matmul(g_target, hom.matrix, p)
        if not np.array_equal(left, right):
            logger.debug(f"Equivariance fails at s_{m} for {hom.source.label} -> {hom.target.label}")
            return False
    return True


def require_equivariant(hom: ModuleHom, what: str) -> None:
    if not check_equivariance(hom):
        logger.error(f"{what} is not a module homomorphism")
        err = ModuleError(f"{what} does not commute with the S_{hom.source.n} action")
        err.add_note(f"{hom.source.label} -> {hom.target.label}")
        raise err


def _restricted_action(module: GModule, basis: Matrix, coordinates: list[int]) -> tuple[Matrix, ...]:
    """Action on the span of basis columns, read off at rows where basis is the identity."""
    p = module.p
    gens = []
    for m, g in enumerate(module.gens, start=1):
        image = gf.matmul(g, basis, p)
        restricted = image[coordinates, :]
        if not np.array_equal(gf.matmul(basis, restricted, p), image):
            err = ModuleError(f"s_{m} does not preserve the subspace of {module.label}")
            err.add_note("The map whose kernel was taken is not equivariant")
            raise err
        gens.append(restricted)
    return tuple(gens)


def kernel_module(hom: ModuleHom, name: str = "") -> tuple[GModule, ModuleHom]:
    """The kernel of hom as a module together with its inclusion."""
    source, p = hom.source, hom.p
    logger.debug(f"Computing kernel of a {hom.matrix.shape} map over GF({p})")
    reduction = gf.row_reduce(hom.matrix, p)
    basis = gf.kernel_basis(hom.matrix, p)
    free = gf.free_columns(reduction, source.dim)
    gens = _restricted_action(source, basis, free)
    kernel = GModule(
        n=source.n,
        p=p,
        gens=gens,
        dim=basis.shape[1],
        name=name or f"ker({source.label})",
        verify=False,
    )
    inclusion = ModuleHom(kernel, source, basis)
    assert not np.any(gf.matmul(hom.matrix, basis, p)), "kernel basis is not killed by the map"
    logger.info(f"Kernel has dimension {kernel.dim} = {source.dim} - {reduction.rank}")
    return kernel, inclusion


def quotient_module(hom: ModuleHom, name: str = "") -> tuple[GModule, ModuleHom]:
    """The cokernel of an injective hom with its projection.

    The quotient basis is the set of standard basis vectors of the target
    at the non-pivot coordinates of the image's row echelon form.
    """
    target, p = hom.target, hom.p
    reduction = gf.row_reduce(hom.matrix.T, p)
    if reduction.rank != hom.source.dim:
        err = ModuleError(f"Cannot form a quotient: map has rank {reduction.rank} < {hom.source.dim}")
        err.add_note("quotient_module expects an injective map")
        raise err
    pivots = list(reduction.pivots)
    complement = gf.free_columns(reduction, target.dim)
    reduced_rows = reduction.matrix[: reduction.rank]
    projection = np.zeros((len(complement), target.dim), dtype=np.int64)
    projection[:, complement] = np.eye(len(complement), dtype=np.int64)
    projection[:, pivots] = -reduced_rows[:, complement].T % p
    gens = []
    for m, g in enumerate(target.gens, start=1):
        acted = gf.matmul(projection, g, p)
        quotient_gen = acted[:, complement]
        if not np.array_equal(gf.matmul(quotient_gen, projection, p), acted):
            err = ModuleError(f"s_{m} does not preserve the image in {target.label}")
            err.add_note("The map whose cokernel was taken is not equivariant")
            raise err
        gens.append(quotient_gen)
    quotient = GModule(
        n=target.n,
        p=p,
        gens=tuple(gens),
        dim=len(complement),
        name=name or f"coker({target.label})",
        verify=False,
    )
    logger.info(f"Quotient has dimension {quotient.dim} = {target.dim} - {hom.source.dim}")
    return quotient, ModuleHom(target, quotient, projection)


def verify_split(first: ModuleHom, second: ModuleHom) -> bool:
    """True iff first after second is the identity.

    With first a surjection this checks that second is a section; with
    second an injection it checks that first is a retraction.
    """
    if second.target.dim != first.source.dim or first.target.dim != second.source.dim:
        logger.debug("Split candidates do not compose to an endomorphism")
        return False
    return gf.is_identity(gf.matmul(first.matrix, second.matrix, first.p), first.p)


def equivariant_solution(
    source: GModule,
    target: GModule,
    constraint: Matrix | None = None,
    right_hand_side: Matrix | None = None,
) -> Matrix | None:
    """A matrix H: source -> target commuting with all generators and with
    H @ constraint == right_hand_side, or None if no such H exists.

    H is flattened row-major, so (H G)_ij and (G H)_ij become Kronecker
    products acting on vec(H).
    """
    _check_same_group(source, target)
    p = source.p
    blocks: list[Matrix] = []
    values: list[Vector] = []
    eye_source = np.eye(source.dim, dtype=np.int64)
    eye_target = np.eye(target.dim, dtype=np.int64)
    for g_source, g_target in zip(source.gens, target.gens, strict=True):
        blocks.append((np.kron(eye_target, g_source.T) - np.kron(g_target, eye_source)) % p)
        values.append(np.zeros(source.dim * target.dim, dtype=np.int64))
    if constraint is not None:
        assert right_hand_side is not None, "constraint needs a right-hand side"
        blocks.append(np.kron(eye_target, constraint.T) % p)
        values.append(right_hand_side.reshape(-1) % p)
    if not blocks:
        return np.zeros((target.dim, source.dim), dtype=np.int64)
    system = np.concatenate(blocks, axis=0)
    logger.debug(f"Solving an equivariance system with {system.shape[0]} equations in {system.shape[1]} unknowns")
    solution = gf.solve(system, np.concatenate(values), p)
    if solution is None:
        return None
    return solution.reshape(target.dim, source.dim)


def trivial_summand_splits(module: GModule) -> bool:
    """For a permutation module: K is a summand iff eps o iota != 0, i.e. p does not divide dim."""
    trivial = trivial_module(module.n, module.p)
    epsilon = ModuleHom(module, trivial, np.ones((1, module.dim), dtype=np.int64))
    iota = ModuleHom(trivial, module, np.ones((module.dim, 1), dtype=np.int64))
    require_equivariant(epsilon, "epsilon")
    require_equivariant(iota, "iota")
    return bool(compose(epsilon, iota).matrix[0, 0] % module.p)


if __name__ == "__main__":
    from specht_sym.spechtmod import natural_module

    natural = natural_module(5, 5)
    k = trivial_module(5, 5)
    epsilon = ModuleHom(natural, k, np.ones((1, 5), dtype=np.int64))
    kernel, _ = kernel_module(epsilon, name="S^(4,1)")
    print(f"ker(eps) on M^(4,1) has dimension {kernel.dim}")
    print(f"K splits off M^(4,1) over GF(5): {trivial_summand_splits(natural)}")
