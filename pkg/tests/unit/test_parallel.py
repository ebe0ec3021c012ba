"""Tests for cell fan-out and seeded hash streams."""

import pytest

from cantor_besicovitch.parallel import run_cells
from cantor_besicovitch.utils.hash import SeededStream, hash_file


def square(x: int) -> int:
    return x * x


class TestRunCells:
    def test_serial_keeps_order(self):
        assert run_cells(square, [3, 1, 2]) == [9, 1, 4]

    def test_empty(self):
        assert run_cells(square, [], jobs=4) == []

    def test_invalid_jobs(self):
        with pytest.raises(ValueError, match="jobs"):
            run_cells(square, [1], jobs=0)

    @pytest.mark.slow
    def test_workers_keep_order(self):
        cells = list(range(20))
        assert run_cells(square, cells, jobs=3) == [x * x for x in cells]


class TestSeededStream:
    def test_same_key_same_stream(self):
        first, second = SeededStream("omega|1"), SeededStream("omega|1")
        assert [first.next_u64() for _ in range(5)] == [second.next_u64() for _ in range(5)]

    def test_keys_differ(self):
        assert SeededStream("a").next_u64() != SeededStream("b").next_u64()

    def test_ranges(self):
        stream = SeededStream("ranges")
        assert all(0 <= stream.uniform() < 1 for _ in range(200))
        assert all(0 <= stream.below(7) < 7 for _ in range(200))
        with pytest.raises(ValueError):
            stream.below(0)

    def test_shuffle_is_permutation(self):
        items = list(range(10))
        shuffled = SeededStream("perm").shuffled(items)
        assert sorted(shuffled) == items
        assert items == list(range(10))


class TestHashFile:
    def test_known_digest(self, tmp_path):
        path = tmp_path / "abc.txt"
        path.write_bytes(b"abc")
        assert hash_file(path) == (
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        )
        assert hash_file(path, chunk_size=1) == hash_file(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            hash_file(tmp_path / "missing")
