"""Canonical inputs and expected values used by tests, demos and the acceptance suite."""

from specht_sym.combinatorics import Partition
from specht_sym.repring import RepRingElement

# (n, p) pairs for the section chain, gamma and the retraction chain.
SECTION_CASES = ((5, 5), (10, 5), (6, 3))
GAMMA_CASES = ((5, 5), (10, 5))
RETRACTION_CASES = ((10, 5),)
DIMENSION_CASES = ((5, 5), (10, 5))
YOUNG_CASES = ((10, 5), (20, 5), (14, 7), (21, 7))


def table_one(n: int) -> dict[int, set[Partition]]:
    """The lambda with y_r^lambda = 1, r = 1..4; every other coefficient is 0 for n >= 8."""
    return {
        1: {Partition.of(n - 1, 1)},
        2: {Partition.of(n - 1, 1), Partition.of(n - 2, 2)},
        3: {Partition.of(n - 1, 1), Partition.of(n - 2, 1, 1), Partition.of(n - 3, 3)},
        4: {
            Partition.of(n - 1, 1),
            Partition.of(n - 2, 2),
            Partition.of(n - 2, 1, 1),
            Partition.of(n - 3, 2, 1),
            Partition.of(n - 4, 4),
        },
    }


def _m(*parts: int) -> RepRingElement:
    return RepRingElement.M(*parts)


def _y(*parts: int) -> RepRingElement:
    return RepRingElement.Y(*parts)


def sym_S_examples(n: int) -> dict[int, RepRingElement]:
    """[Sym^r S^(n-1,1)] for r = 2, 3, 4."""
    return {
        2: _m(n - 2, 2),
        3: _m(n - 2, 1, 1) + _m(n - 3, 3) - _m(n - 2, 2),
        4: _m(n - 2, 2) + _m(n - 3, 2, 1) + _m(n - 4, 4) - _m(n - 3, 3),
    }


def sym_D_examples(n: int) -> dict[int, RepRingElement]:
    """[Sym^r D^(n-1,1)] for r = 3, 4 when p | n."""
    return {
        3: _m(n - 2, 1, 1) + _m(n - 3, 3) - 2 * _m(n - 2, 2),
        4: 2 * _m(n - 2, 2) + _m(n - 3, 2, 1) + _m(n - 4, 4) - _m(n - 2, 1, 1) - 2 * _m(n - 3, 3),
    }


def two_row_expansions(n: int, p: int) -> dict[Partition, RepRingElement]:
    """Young expansions of M^(n-2,2), M^(n-3,3), M^(n-4,4) for p > 3 dividing n."""
    four = _y(n - 4, 4) + _y(n - 3, 3) + _y(n - 1, 1)
    if p > 5:  # noqa: PLR2004
        four = four + _y(n - 2, 2)
    return {
        Partition.of(n - 2, 2): _y(n - 2, 2) + _y(n - 1, 1),
        Partition.of(n - 3, 3): _y(n - 3, 3) + _y(n - 2, 2) + _y(n - 1, 1),
        Partition.of(n - 4, 4): four,
    }


def sym4_D_young_equation(n: int, p: int) -> RepRingElement:
    """[Sym^4 D] in mixed basis, with the extra -[Y^(n-2,2)] when p = 5."""
    equation = _m(n - 3, 2, 1) + _y(n - 4, 4) - _y(n - 3, 3) - _y(n - 2, 1, 1)
    if p == 5:  # noqa: PLR2004
        equation = equation - _y(n - 2, 2)
    return equation


def sym_D_young_expected() -> RepRingElement:
    """[Sym^3 D^(9,1)] over GF(5), fully in the Young basis."""
    return _y(8, 1, 1) + _y(7, 3)


# Number of positive p-Kostka certificates from [Sym^4 D].
KOSTKA_CASES = {(10, 5): 3, (14, 7): 2}
