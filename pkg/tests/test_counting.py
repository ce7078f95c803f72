import io

import pytest

from ordtrees import build_tables, count, load_tables, save_tables
from ordtrees.counting import dumps_tables, loads_tables, table_entries
from ordtrees.errors import CapacityExceeded, ChecksumMismatch, FormatMismatch, IoFailure, OutOfRange

from conftest import oracle_words


def catalan(k):
    c = [1]
    for i in range(1, k + 1):
        c.append(sum(c[j] * c[i - 1 - j] for j in range(i)))
    return c[k]


def test_single_node_table():
    t = build_tables(1, 4)
    assert t.R[1] == [1] * 5
    assert count(t, 1) == 1


def test_small_counts():
    assert count(build_tables(4, 2), 4) == 4
    assert [count(build_tables(6, 2), n) for n in range(1, 7)] == [1, 1, 2, 4, 9, 21]
    assert count(build_tables(4, 3), 4) == 5
    assert count(build_tables(5, 4), 5) == 14


@pytest.mark.parametrize("delta", [1, 2, 3, 4])
def test_counts_match_oracle(delta, tables):
    t = tables(10, delta)
    for n in range(1, 11):
        assert count(t, n) == len(oracle_words(n, delta))


def test_delta_one_is_path_only():
    t = build_tables(40, 1)
    assert all(count(t, n) == 1 for n in range(1, 41))


def test_saturation_is_catalan():
    for n in range(1, 16):
        assert count(build_tables(n, max(1, n - 1)), n) == catalan(n - 1)


def test_monotone_in_delta():
    prev = build_tables(20, 1)
    for delta in range(2, 7):
        cur = build_tables(20, delta)
        assert all(count(prev, n) <= count(cur, n) for n in range(1, 21))
        prev = cur


def test_table_invariants():
    delta = 4
    t = build_tables(25, delta)
    for d in range(delta + 1):
        assert t.rooted(1, d) == 1
        for m in range(0, 30):
            assert t.prefix(1, m, d) == (1 if m >= 1 else 0)
    for n in range(2, 26):
        assert t.rooted(n, 0) == 0
        for d in range(delta + 1):
            assert t.prefix(n, 0, d) == 0
            assert t.prefix(n, n - 1, d) == t.prefix(n, n, d) == t.rooted(n, d)
            col = [t.prefix(n, m, d) for m in range(n + 1)]
            assert col == sorted(col)
            if d:
                assert all(t.prefix(n, m, d - 1) <= t.prefix(n, m, d) for m in range(n + 1))
            for m in range(1, n):
                s = t.exact(n, m, d)
                assert s == t.prefix(n, m, d) - t.prefix(n, m - 1, d)
                expected = count(t, m) * t.rooted(n - m, d - 1) if d else 0
                assert s == expected


def test_big_counts_exceed_64_bits():
    t = build_tables(60, 4)
    assert count(t, 60) > 2**64


def test_out_of_range():
    t = build_tables(5, 2)
    with pytest.raises(OutOfRange):
        count(t, 6)
    with pytest.raises(OutOfRange):
        count(t, 0)


def test_capacity_exceeded():
    with pytest.raises(CapacityExceeded):
        build_tables(100, 4, memory_budget=1000)


def test_entry_count_matches_formula():
    t = build_tables(30, 3)
    assert t.entry_count == table_entries(30, 3)


def test_save_load_round_trip(tmp_path):
    t = build_tables(12, 4)
    path = tmp_path / "t.bin"
    save_tables(t, path)
    assert load_tables(path) == t
    buf = io.BytesIO()
    save_tables(t, buf)
    buf.seek(0)
    assert load_tables(buf, delta=4, n_max=10) == t


def test_truncated_file():
    data = dumps_tables(build_tables(12, 4))
    with pytest.raises(ChecksumMismatch):
        loads_tables(data[:-20])
    with pytest.raises(ChecksumMismatch):
        loads_tables(data[:5])


def test_corrupted_byte():
    data = bytearray(dumps_tables(build_tables(6, 2)))
    data[20] ^= 0xFF
    with pytest.raises(ChecksumMismatch):
        loads_tables(bytes(data))


def test_delta_mismatch():
    data = dumps_tables(build_tables(12, 3))
    with pytest.raises(FormatMismatch):
        loads_tables(data, delta=4)
    with pytest.raises(FormatMismatch):
        loads_tables(data, n_max=13)


def test_missing_file(tmp_path):
    with pytest.raises(IoFailure):
        load_tables(tmp_path / "nope.bin")
