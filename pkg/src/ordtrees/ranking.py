"""A-order rank, unrank and uniform sampling backed by a :class:`CountTable`.

For a tree whose root has subtrees ``T_1 .. T_k`` of sizes ``n_1 .. n_k``
and ``rem_j = n - (n_1 + ... + n_{j-1})``::

    rank(T) = 1 + sum_j [ D(rem_j, n_j - 1, delta - j + 1)
                         + (rank(T_j) - 1) * D(rem_j - n_j, rem_j - n_j, delta - j) ]

The first term counts trees sharing ``T_1 .. T_{j-1}`` whose j-th subtree is
smaller; the second block size counts the ways to complete the remaining
siblings.  Unranking inverts this one subtree at a time.
"""

import random
from dataclasses import dataclass

from .codec import children_lists
from .counting import count
from .errors import OutOfRange, RankOutOfRange, ZeroDivisor
from .model import Codeword, as_text


class OpCounter:
    """Tally of big-integer operations (lookups, comparisons, arithmetic)."""

    def __init__(self):
        self.ops = 0

    def __repr__(self):
        return f"OpCounter(ops={self.ops})"


@dataclass(frozen=True)
class MixedRadixStep:
    """One subtree choice: its 1-based index ``j``, its size, the number of
    trees skipped by smaller j-th subtrees and the completion block size."""

    subtree_index: int
    subtree_size: int
    offset: int
    block: int


def div_plus(a, b):
    """Quotient whose remainder lies in ``1..b`` instead of ``0..b-1``."""
    if b == 0:
        raise ZeroDivisor("div_plus by zero")
    q, r = divmod(a, b)
    return q - 1 if r == 0 else q


def mod_plus(a, b):
    if b == 0:
        raise ZeroDivisor("mod_plus by zero")
    r = a % b
    return b if r == 0 else r


def _check_n(n, table):
    if n < 1 or n > table.n_max:
        raise OutOfRange(f"n={n} outside 1..{table.n_max} supported by the table")


def rank_steps(c, table):
    """Mixed-radix decomposition at the root of ``c`` (for inspection)."""
    text = as_text(c)
    _check_n(len(text), table)
    kids = children_lists(text, table.delta)
    sizes = _sizes(kids)
    delta = table.delta
    rem = len(text)
    steps = []
    for j, child in enumerate(kids[0], 1):
        size = sizes[child]
        offset = table.prefix(rem, size - 1, delta - j + 1)
        block = table.prefix(rem - size, rem - size, delta - j)
        steps.append(MixedRadixStep(j, size, offset, block))
        rem -= size
    return steps


def _sizes(kids):
    sizes = [1] * len(kids)
    for i in range(len(kids) - 1, -1, -1):
        for child in kids[i]:
            sizes[i] += sizes[child]
    return sizes


def rank(c, table, counter=None):
    """1-based position of codeword ``c`` in the A-order listing of its class.

    The recursion is unrolled: every node carries the product of the block
    sizes on its path from the root, and ``rank - 1`` is the sum over nodes
    of that multiplier times the node's own offsets.
    """
    text = as_text(c)
    n = len(text)
    _check_n(n, table)
    kids = children_lists(text, table.delta)
    sizes = _sizes(kids)
    delta = table.delta
    D = table.D
    mult = [0] * n
    mult[0] = 1
    total = 0
    ops = 0
    for node in range(n):
        children = kids[node]
        if not children:
            continue
        m = mult[node]
        rem = sizes[node]
        offsets = 0
        for j, child in enumerate(children, 1):
            size = sizes[child]
            # D(rem, size-1, delta-j+1); rows are clamped at m = rem
            offsets += D[rem][delta - j + 1][size - 1]
            rest = rem - size
            mult[child] = m * D[rest][delta - j][rest]
            rem = rest
            ops += 4
        total += m * offsets
        ops += 2
    if counter is not None:
        counter.ops += ops
    return total + 1


def _smallest_at_least(col, lo, hi, target, counter):
    """Smallest ``i`` in ``[lo, hi]`` with ``col[i] >= target``.

    Galloping from ``lo`` then bisecting, so the cost is logarithmic in the
    answer rather than in the row length.  ``col[hi] >= target`` is required.
    """
    ops = 0
    step = 1
    prev = lo - 1
    probe = lo
    while True:
        ops += 1
        if col[probe] >= target:
            break
        prev = probe
        if probe == hi:
            raise AssertionError("prefix-count row is not monotone")
        probe = min(probe + step, hi)
        step *= 2
    lo, hi = prev + 1, probe
    while lo < hi:
        mid = (lo + hi) // 2
        ops += 1
        if col[mid] >= target:
            hi = mid
        else:
            lo = mid + 1
    if counter is not None:
        counter.ops += ops
    return lo


def _smallest_linear(col, lo, hi, target, counter):
    for i in range(lo, hi + 1):
        if counter is not None:
            counter.ops += 1
        if col[i] >= target:
            return i
    raise AssertionError("prefix-count row is not monotone")


def unrank(r, n, table, counter=None, search="gallop"):
    """Codeword of the tree at 1-based A-order position ``r`` among ``n``-node trees.

    ``search="linear"`` swaps the logarithmic search for a linear scan; it is
    only meant for differential testing.
    """
    _check_n(n, table)
    total = count(table, n)
    if not isinstance(r, int) or r < 1 or r > total:
        raise RankOutOfRange(f"rank {r} outside 1..{total} for n={n}, delta={table.delta}")
    find = _smallest_linear if search == "linear" else _smallest_at_least
    delta = table.delta
    D = table.D
    out = ["s"] * n
    ops = 0
    # (position, size, rank, symbol); positions are assigned before descending
    stack = [(0, n, r, "s")]
    while stack:
        pos, size, r, symbol = stack.pop()
        out[pos] = symbol
        rem = size
        child_pos = pos + 1
        j = 0
        while rem > 1:
            j += 1
            col = D[rem][delta - j + 1]
            sub = find(col, 1, rem - 1, r, counter)
            r -= col[sub - 1]
            rest = rem - sub
            block = D[rest][delta - j][rest]
            q, rr = divmod(r, block)
            if rr == 0:
                q, rr = q - 1, block
            ops += 4
            if rest == 1:
                label = "s" if j == 1 else "r"
            else:
                label = "l" if j == 1 else "m"
            stack.append((child_pos, sub, q + 1, label))
            r = rr
            child_pos += sub
            rem = rest
    if counter is not None:
        counter.ops += ops
    return Codeword("".join(out))


def uniform_sample(n, table, seed):
    """Uniformly random tree, reproducible for a given integer ``seed``."""
    _check_n(n, table)
    rng = random.Random(seed)
    return unrank(rng.randrange(count(table, n)) + 1, n, table)


def sample_many(n, table, seed, k):
    """``k`` independent uniform draws from one seeded stream."""
    _check_n(n, table)
    rng = random.Random(seed)
    total = count(table, n)
    return [unrank(rng.randrange(total) + 1, n, table) for _ in range(k)]
