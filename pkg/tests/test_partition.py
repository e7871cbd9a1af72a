import csv

import pytest

from src.baselines import dump_partition, partition_slots


def test_three_users_three_sets():
    partition = partition_slots(3, 3)

    assert partition.stia_sets == ((1, 5, 9), (4, 8, 12), (7, 11, 15))
    assert partition.zf_set == (2, 3, 6, 14)
    assert partition.tdma_set == (10, 13)
    assert partition.total_slots == 15
    assert partition.validate() == []


@pytest.mark.parametrize("K", [3, 4, 5])
@pytest.mark.parametrize("n", [1, 2, 5])
def test_partition_invariants(K, n):
    partition = partition_slots(K, n)

    assert partition.validate() == []
    assert len(partition.stia_sets) == n
    assert len(partition.zf_set) == (K - 1) ** 2
    assert len(partition.tdma_set) == K - 1
    assert len(partition.delayed_slots) == n + K - 1
    assert len(partition.current_slots) == (K - 1) * (n + K - 1)


def test_assignment_labels():
    labels = partition_slots(3, 3).assignments()

    assert labels[1] == labels[5] == labels[9] == "STIA:1"
    assert labels[15] == "STIA:3"
    assert labels[2] == "ZF"
    assert labels[13] == "TDMA"
    assert list(labels) == list(range(1, 16))


def test_dump_partition(tmp_path):
    path = dump_partition(partition_slots(3, 1), tmp_path / "partition.csv")
    with path.open() as handle:
        rows = list(csv.reader(handle))

    assert rows[0] == ["slot", "assignment"]
    assert len(rows) == 1 + 9
    assert rows[1] == ["1", "STIA:1"]


@pytest.mark.parametrize("args", [(2, 3), (3, 0)])
def test_invalid_arguments(args):
    with pytest.raises(ValueError):
        partition_slots(*args)
