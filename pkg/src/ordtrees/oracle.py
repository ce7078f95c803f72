"""Brute-force reference implementations used for differential testing.

Nothing here shares code with the fast paths: trees are built by direct
recursion over the first-subtree size, ordered with a structural
comparator, and ranks are found by sorting.  Only suitable for small ``n``.
"""

from functools import cmp_to_key

from .errors import CapExceeded, NotFound
from .model import Tree, as_text, check_params

DEFAULT_CAP = 10**6


def enumerate_all(n, delta, cap=DEFAULT_CAP):
    """Every tree with ``n`` nodes and at most ``delta`` children per node."""
    check_params(n, delta)
    memo = {}

    def forests(size, budget):
        # ordered child lists with `size` nodes in total, at most `budget` trees
        key = (size, budget)
        if key in memo:
            return memo[key]
        if size == 0:
            result = [()]
        elif budget == 0:
            result = []
        else:
            result = []
            for first in range(1, size + 1):
                for head in trees(first):
                    for tail in forests(size - first, budget - 1):
                        result.append((head,) + tail)
                        if len(result) > cap:
                            raise CapExceeded(f"more than {cap} trees")
        memo[key] = result
        return result

    def trees(size):
        return [Tree(kids) for kids in forests(size - 1, delta)]

    out = trees(n)
    if len(out) > cap:
        raise CapExceeded(f"more than {cap} trees")
    return out


def _cmp(a, b, less):
    if less(a, b):
        return -1
    if less(b, a):
        return 1
    return 0


def a_order_less(a: Tree, b: Tree) -> bool:
    """Smaller size first; equal sizes compare subtree lists lexicographically."""
    if a.size != b.size:
        return a.size < b.size
    for x, y in zip(a.children, b.children):
        if a_order_less(x, y):
            return True
        if a_order_less(y, x):
            return False
    return False


def b_order_less(a: Tree, b: Tree) -> bool:
    """Smaller root degree first; equal degrees compare subtrees lexicographically."""
    if a.degree != b.degree:
        return a.degree < b.degree
    for x, y in zip(a.children, b.children):
        if b_order_less(x, y):
            return True
        if b_order_less(y, x):
            return False
    return False


def sorted_trees(n, delta, cap=DEFAULT_CAP):
    return sorted(
        enumerate_all(n, delta, cap), key=cmp_to_key(lambda a, b: _cmp(a, b, a_order_less))
    )


def label(tree, symbol="s"):
    """Codeword of ``tree`` by direct recursion (kept apart from the codec)."""
    kids = tree.children
    if len(kids) == 1:
        return symbol + label(kids[0], "s")
    parts = [symbol]
    for i, child in enumerate(kids):
        parts.append(label(child, "l" if i == 0 else "r" if i == len(kids) - 1 else "m"))
    return "".join(parts)


def sorted_codewords(n, delta, cap=DEFAULT_CAP):
    return [label(t) for t in sorted_trees(n, delta, cap)]


def reference_rank(c, n, delta, cap=DEFAULT_CAP):
    """1-based A-order position of ``c`` among all trees of its class."""
    text = as_text(c)
    words = sorted_codewords(n, delta, cap)
    try:
        return words.index(text) + 1
    except ValueError:
        raise NotFound(f"{text!r} is not a tree with n={n}, delta={delta}") from None
