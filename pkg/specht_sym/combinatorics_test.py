"""Tests for partitions, compositions and p-adic structure."""

import pytest

from specht_sym.combinatorics import (
    Partition,
    compositions,
    compositions_below,
    dominates,
    is_p_regular,
    is_p_restricted,
    multinomial_dimension,
    p_adic_expansion_int,
    p_adic_expansion_partition,
    p_contained,
    parse_partition,
    partitions_of,
    sym_power_dimension,
    two_row_partition,
    y_coefficient,
)

# Number of partitions of 10.
PARTITIONS_OF_TEN = 42


def test_partition_validation() -> None:
    """Increasing or non-positive parts are rejected."""
    with pytest.raises(ValueError, match="non-increasing"):
        Partition.of(1, 2)
    with pytest.raises(ValueError, match="positive"):
        Partition.of(3, 0)
    assert Partition.from_sequence([3, 1, 0, 0]) == Partition.of(3, 1)


def test_partition_text_round_trip() -> None:
    """Comma lists parse and print back; the empty partition is '()'."""
    lam = parse_partition("8,1,1")
    assert lam == Partition.of(8, 1, 1)
    assert str(lam) == "8,1,1"
    assert str(parse_partition("()")) == "()"
    with pytest.raises(ValueError, match="Invalid partition"):
        parse_partition("8;2")


def test_part_is_one_based_and_padded() -> None:
    """part(i) counts from 1 and is 0 past the last row."""
    lam = Partition.of(7, 3)
    assert lam.part(1) == 7  # noqa: PLR2004
    assert lam.part(2) == 3  # noqa: PLR2004
    assert lam.part(3) == 0


def test_compositions_are_lexicographic() -> None:
    """Length-2 compositions of 2 come out as (0,2), (1,1), (2,0)."""
    assert compositions(2, 2) == ((0, 2), (1, 1), (2, 0))
    assert len(compositions(4, 3)) == sym_power_dimension(4, 3)


def test_compositions_below() -> None:
    """Compositions of 2 under (2, 1, 0) in lexicographic order."""
    assert compositions_below((2, 1, 0), 2) == [(1, 1, 0), (2, 0, 0)]
    assert compositions_below((1, 0), 2) == []


def test_partitions_of_ten() -> None:
    """There are 42 partitions of 10, listed from (10) down to (1^10)."""
    found = partitions_of(10)
    assert len(found) == PARTITIONS_OF_TEN
    assert found[0] == Partition.of(10)
    assert found[-1] == Partition.of(*[1] * 10)


def test_dominance() -> None:
    """(8,2) dominates (7,3) and (8,1,1); (7,3) and (8,1,1) are incomparable."""
    assert dominates(Partition.of(8, 2), Partition.of(7, 3))
    assert dominates(Partition.of(8, 2), Partition.of(8, 1, 1))
    assert not dominates(Partition.of(7, 3), Partition.of(8, 1, 1))
    assert not dominates(Partition.of(8, 1, 1), Partition.of(7, 3))
    with pytest.raises(ValueError, match="different sizes"):
        dominates(Partition.of(3), Partition.of(2))


def test_restricted_and_regular() -> None:
    """(4,1) is 5-restricted but not 3-restricted; (1,1,1) is 3-singular."""
    assert is_p_restricted(Partition.of(4, 1), 5)
    assert not is_p_restricted(Partition.of(4, 1), 3)
    assert not is_p_regular(Partition.of(1, 1, 1), 3)
    assert is_p_regular(Partition.of(1, 1, 1), 5)


def test_p_adic_digits() -> None:
    """Digits are least significant first."""
    assert p_adic_expansion_int(13, 5) == [3, 2]
    assert p_adic_expansion_int(0, 5) == []


def test_p_adic_expansion_of_partition() -> None:
    """(9,1) = (4,1) + 5*(1) in base 5."""
    layers = p_adic_expansion_partition(Partition.of(9, 1), 5)
    assert layers == [Partition.of(4, 1), Partition.of(1)]


def test_empty_layers() -> None:
    """Layers may be empty: (10) = 5*(2) over GF(5) and (10,1,1) skips the 3^1 layer."""
    assert is_p_restricted(Partition(), 5)
    assert p_adic_expansion_partition(Partition.of(10), 5) == [Partition(), Partition.of(2)]
    assert p_adic_expansion_partition(Partition.of(10, 1, 1), 3) == [Partition.of(1, 1, 1), Partition(), Partition.of(1)]


def test_p_adic_layers_recombine() -> None:
    """Summing p^j times each layer returns the original parts."""
    p = 3
    for lam in partitions_of(12):
        layers = p_adic_expansion_partition(lam, p)
        rebuilt = [sum(layer.part(i) * p**j for j, layer in enumerate(layers)) for i in range(1, lam.length + 1)]
        assert tuple(rebuilt) == lam.parts


def test_p_contained() -> None:
    """Base-5 digits of m must sit under those of n: 2 is not contained in 6 = (1,1)."""
    assert not p_contained(2, 6, 5)
    assert p_contained(1, 6, 5)
    assert p_contained(0, 10, 5)
    assert p_contained(5, 10, 5)


@pytest.mark.parametrize(
    ("r", "expected"),
    [
        (1, {(9, 1)}),
        (2, {(9, 1), (8, 2)}),
        (3, {(9, 1), (8, 1, 1), (7, 3)}),
        (4, {(9, 1), (8, 2), (8, 1, 1), (7, 2, 1), (6, 4)}),
    ],
)
def test_y_coefficient_support(r: int, expected: set[tuple[int, ...]]) -> None:
    """For n = 10 the non-zero y_r coefficients are all 1, on the listed partitions."""
    support = {lam.parts: y_coefficient(lam, r) for lam in partitions_of(10) if y_coefficient(lam, r)}
    assert set(support) == expected
    assert set(support.values()) == {1}


def test_dimensions() -> None:
    """dim M^(8,2) = 45, dim Sym^3 of a 9-dimensional space = 165."""
    assert multinomial_dimension(Partition.of(8, 2)) == 45  # noqa: PLR2004
    assert sym_power_dimension(9, 3) == 165  # noqa: PLR2004
    assert sym_power_dimension(3, -1) == 0
    assert two_row_partition(6, 0) == Partition.of(6)
