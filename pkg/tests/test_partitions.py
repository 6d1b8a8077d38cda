import itertools

import pytest

from symfn.partitions import (
    EMPTY,
    Partition,
    dominance_geq,
    dominance_gt,
    lambda_plus,
    partition_index,
    partitions_of,
    sort_to_partition,
    union,
    z_lambda,
)


def partition_count(n: int) -> int:
    """Independent oracle: Euler's pentagonal-number recurrence."""
    table = [1]
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m and g2 > m:
                break
            sign = 1 if k % 2 else -1
            if g1 <= m:
                total += sign * table[m - g1]
            if g2 <= m:
                total += sign * table[m - g2]
            k += 1
        table.append(total)
    return table[n]


def test_construction_validates():
    assert Partition((3, 2, 2)) == (3, 2, 2)
    with pytest.raises(ValueError):
        Partition((2, 3))
    with pytest.raises(ValueError):
        Partition((3, 0))
    with pytest.raises(ValueError):
        Partition((3, -1))


def test_weight_length_multiplicities():
    lam = Partition((4, 2, 2, 1))
    assert lam.weight == 9
    assert lam.length == 4
    assert lam.multiplicities() == {4: 1, 2: 2, 1: 1}
    assert lam.multiplicity(2) == 2
    assert lam.multiplicity(7) == 0


def test_sort_to_partition():
    assert sort_to_partition([1, 3, 2]) == Partition((3, 2, 1))
    assert sort_to_partition([2, 0, 2]) == Partition((2, 2))
    assert sort_to_partition([]) == EMPTY
    with pytest.raises(ValueError):
        sort_to_partition([1, -1])


def test_z_lambda():
    assert z_lambda(EMPTY) == 1
    assert z_lambda(Partition((2, 1))) == 2
    assert z_lambda(Partition((1, 1, 1))) == 6
    # direct-evaluation cross-check on every partition of 6
    import math

    for lam in partitions_of(6):
        expect = 1
        for i, m in lam.multiplicities().items():
            expect *= i**m * math.factorial(m)
        assert z_lambda(lam) == expect


def test_dominance_examples():
    assert dominance_geq(Partition((2, 1)), Partition((1, 1, 1)))
    assert not dominance_geq(Partition((2, 2)), Partition((3, 1)))
    lam = Partition((3, 2))
    assert dominance_geq(lam, lam)
    with pytest.raises(ValueError, match="incomparable weights"):
        dominance_geq(Partition((2,)), Partition((1,)))


@pytest.mark.parametrize("n", range(10))
def test_dominance_is_a_partial_order(n):
    ps = partitions_of(n)
    for lam in ps:
        assert dominance_geq(lam, lam)
    for lam, mu in itertools.combinations(ps, 2):
        if dominance_geq(lam, mu) and dominance_geq(mu, lam):
            assert lam == mu
    geq = {(lam, mu) for lam in ps for mu in ps if dominance_geq(lam, mu)}
    for lam, mu in geq:
        for nu in ps:
            if (mu, nu) in geq:
                assert (lam, nu) in geq


def test_union_examples():
    assert union(Partition((2, 1)), Partition((2,))) == Partition((2, 2, 1))
    assert union(Partition((3,)), EMPTY) == Partition((3,))
    assert union(Partition((1, 1)), Partition((1,))) == Partition((1, 1, 1))


def test_union_monotone_in_dominance():
    for n in range(1, 7):
        ps = partitions_of(n)
        for lam, mu in itertools.product(ps, ps):
            if not dominance_geq(mu, lam):
                continue
            for wn in range(5):
                for nu in partitions_of(wn):
                    assert dominance_geq(union(mu, nu), union(lam, nu))


def test_lambda_plus():
    assert lambda_plus(Partition((2, 2))) == Partition((3, 1))
    assert lambda_plus(Partition((3, 1, 1))) == Partition((3, 2))
    assert lambda_plus(Partition((2, 1))) == Partition((3,))
    with pytest.raises(ValueError):
        lambda_plus(Partition((4,)))


def test_lambda_plus_strictly_dominates():
    for n in range(2, 10):
        for lam in partitions_of(n):
            if len(lam) >= 2:
                assert dominance_gt(lambda_plus(lam), lam)


def test_enumeration_order_and_counts():
    assert partitions_of(0) == (EMPTY,)
    assert partitions_of(3) == (Partition((3,)), Partition((2, 1)), Partition((1, 1, 1)))
    ps4 = partitions_of(4)
    assert len(ps4) == 5
    assert ps4[0] == Partition((4,))
    assert ps4[-1] == Partition((1, 1, 1, 1))
    for n in range(21):
        assert len(partitions_of(n)) == partition_count(n)
    # determinism
    assert partitions_of(9) == partitions_of(9)


def test_enumeration_refines_dominance():
    for n in range(1, 10):
        idx = partition_index(n)
        ps = partitions_of(n)
        for lam, mu in itertools.combinations(ps, 2):
            if dominance_gt(lam, mu):
                assert idx[lam] < idx[mu]
            if dominance_gt(mu, lam):
                assert idx[mu] < idx[lam]


def test_text_and_json_forms():
    lam = Partition((3, 2, 1))
    assert lam.text() == "3,2,1"
    assert Partition.from_text("3,2,1") == lam
    assert Partition.from_text("") == EMPTY
    assert Partition.from_text("3,2,0") == Partition((3, 2))
    assert lam.to_json() == [3, 2, 1]
    assert EMPTY.text() == ""
    with pytest.raises(ValueError, match="malformed"):
        Partition.from_text("2,3")
    with pytest.raises(ValueError, match="malformed"):
        Partition.from_text("a,b")
    with pytest.raises(ValueError, match="malformed"):
        Partition.from_text("3,-1")
