"""Exact count tables for ordered trees with at most ``delta`` children per node.

Three quantities are tabulated, for ``1 <= n <= n_max`` and ``0 <= d <= delta``:

``R(n, d)``
    trees with ``n`` nodes whose root has at most ``d`` children (all other
    nodes at most ``delta``).  ``count(n) = R(n, delta)``.
``S(n, m, d)``
    those among them whose first subtree has exactly ``m`` nodes;
    ``S(n, m, d) = count(m) * R(n - m, d - 1)``.
``D(n, m, d)``
    those whose first subtree has at most ``m`` nodes (prefix sums of ``S``).

Base conventions: ``R(1, d) = 1`` for every ``d``, ``R(n, 0) = 0`` for
``n >= 2``, ``D(1, m, d) = 1`` for ``m >= 1`` and ``D(n, 0, d) = 0``.

``D`` rows are stored up to ``m = n`` only, since ``D(n, m, d)`` is constant
for ``m >= n - 1``; lookups beyond the row are clamped.
"""

import hashlib
import io
import os
import struct

from .errors import (
    CapacityExceeded,
    ChecksumMismatch,
    FormatMismatch,
    IoFailure,
    OutOfRange,
)
from .model import check_delta

DEFAULT_MEMORY_BUDGET = 2 * 1024**3

MAGIC = b"ODTB"
FORMAT_VERSION = 1
_HEADER = struct.Struct(">4sHII")
_LEN = struct.Struct(">I")


def estimate_bytes(n_max, delta):
    """Rough memory footprint of a table: Python int overhead plus ~2 bits
    per node of magnitude, since counts grow like 4**n."""
    entries = table_entries(n_max, delta)
    return entries * (32 + (2 * n_max) // 8)


def table_entries(n_max, delta):
    rows = (delta + 1) * n_max
    d_entries = (delta + 1) * sum(n + 1 for n in range(1, n_max + 1))
    return rows + d_entries


class CountTable:
    """Immutable R/D tables for a fixed ``(n_max, delta)``.

    ``R[n][d]`` and ``D[n][d][m]`` are plain nested lists (index 0 of the
    ``n`` axis is unused).
    """

    def __init__(self, n_max, delta, R, D):
        self.n_max = n_max
        self.delta = delta
        self.R = R
        self.D = D

    @property
    def entry_count(self):
        return sum(len(row) for row in self.R[1:]) + sum(
            len(col) for row in self.D[1:] for col in row
        )

    def rooted(self, n, d):
        """``R(n, d)``."""
        return self.R[n][d]

    def prefix(self, n, m, d):
        """``D(n, m, d)``."""
        if m <= 0:
            return 0
        col = self.D[n][d]
        return col[m] if m < len(col) else col[-1]

    def exact(self, n, m, d):
        """``S(n, m, d)``."""
        if m < 1 or m >= n or d < 1:
            return 0
        return self.prefix(n, m, d) - self.prefix(n, m - 1, d)

    def count(self, n):
        return count(self, n)

    def __eq__(self, other):
        if not isinstance(other, CountTable):
            return NotImplemented
        return (
            self.n_max == other.n_max
            and self.delta == other.delta
            and self.R == other.R
            and self.D == other.D
        )

    def __repr__(self):
        return f"CountTable(n_max={self.n_max}, delta={self.delta})"


def build_tables(n_max, delta, memory_budget=DEFAULT_MEMORY_BUDGET):
    if not isinstance(n_max, int) or n_max < 1:
        raise ValueError(f"n_max must be a positive integer, got {n_max!r}")
    check_delta(delta)
    if estimate_bytes(n_max, delta) > memory_budget:
        raise CapacityExceeded(
            f"tables for n_max={n_max}, delta={delta} exceed the memory budget "
            f"of {memory_budget} bytes"
        )
    R = [None, [1] * (delta + 1)]
    D = [None, [[0, 1] for _ in range(delta + 1)]]
    counts = [0, 1]
    for n in range(2, n_max + 1):
        r_row = [0] * (delta + 1)
        d_rows = [[0] * (n + 1)]  # d = 0: no children allowed
        for d in range(1, delta + 1):
            col = [0] * (n + 1)
            acc = 0
            for m in range(1, n):
                acc += counts[m] * R[n - m][d - 1]
                col[m] = acc
            col[n] = acc
            d_rows.append(col)
            r_row[d] = acc
        R.append(r_row)
        D.append(d_rows)
        counts.append(r_row[delta])
    return CountTable(n_max, delta, R, D)


def count(table, n):
    """Number of trees with ``n`` nodes and at most ``delta`` children per node."""
    if not isinstance(n, int) or n < 1 or n > table.n_max:
        raise OutOfRange(f"n={n} outside 1..{table.n_max}")
    return table.R[n][table.delta]


def _write_int(buf, value):
    raw = value.to_bytes((value.bit_length() + 7) // 8, "big")
    buf.write(_LEN.pack(len(raw)))
    buf.write(raw)


def dumps_tables(table):
    buf = io.BytesIO()
    buf.write(_HEADER.pack(MAGIC, FORMAT_VERSION, table.n_max, table.delta))
    for n in range(1, table.n_max + 1):
        for value in table.R[n]:
            _write_int(buf, value)
        for col in table.D[n]:
            for value in col:
                _write_int(buf, value)
    body = buf.getvalue()
    return body + hashlib.blake2b(body, digest_size=8).digest()


def loads_tables(data, delta=None, n_max=None):
    """Parse bytes produced by :func:`dumps_tables`.

    ``delta`` and ``n_max``, when given, are the caller's requirements: the
    stored ``delta`` must match and the stored ``n_max`` must be at least
    ``n_max``.
    """
    if len(data) < _HEADER.size + 8:
        raise ChecksumMismatch("table file is truncated")
    body, digest = data[:-8], data[-8:]
    if hashlib.blake2b(body, digest_size=8).digest() != digest:
        raise ChecksumMismatch("table checksum does not match")
    magic, version, stored_n, stored_delta = _HEADER.unpack_from(body)
    if magic != MAGIC or version != FORMAT_VERSION:
        raise FormatMismatch(f"unsupported table format {magic!r} v{version}")
    if delta is not None and stored_delta != delta:
        raise FormatMismatch(f"table has delta={stored_delta}, need delta={delta}")
    if n_max is not None and stored_n < n_max:
        raise FormatMismatch(f"table has n_max={stored_n}, need n_max>={n_max}")

    pos = _HEADER.size

    def read_int():
        nonlocal pos
        (length,) = _LEN.unpack_from(body, pos)
        pos += _LEN.size
        value = int.from_bytes(body[pos:pos + length], "big")
        pos += length
        return value

    try:
        R = [None]
        D = [None]
        for n in range(1, stored_n + 1):
            R.append([read_int() for _ in range(stored_delta + 1)])
            D.append(
                [[read_int() for _ in range(n + 1)] for _ in range(stored_delta + 1)]
            )
    except struct.error as exc:
        raise FormatMismatch(f"table body is malformed: {exc}") from None
    if pos != len(body):
        raise FormatMismatch("trailing bytes after table body")
    return CountTable(stored_n, stored_delta, R, D)


def save_tables(table, destination):
    """Write ``table`` to a path or binary file object."""
    data = dumps_tables(table)
    try:
        if hasattr(destination, "write"):
            destination.write(data)
        else:
            tmp = f"{os.fspath(destination)}.tmp"
            with open(tmp, "wb") as fh:
                fh.write(data)
            os.replace(tmp, destination)
    except OSError as exc:
        raise IoFailure(f"cannot write table: {exc}") from exc


def load_tables(source, delta=None, n_max=None):
    """Read a table written by :func:`save_tables` from a path or file object."""
    try:
        if hasattr(source, "read"):
            data = source.read()
        else:
            with open(source, "rb") as fh:
                data = fh.read()
    except OSError as exc:
        raise IoFailure(f"cannot read table: {exc}") from exc
    return loads_tables(data, delta=delta, n_max=n_max)
