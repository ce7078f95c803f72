"""Validation of codewords and the codeword <-> tree bijection.

A codeword is the pre-order listing of node labels: the root and every only
child are ``s``; in a group of two or more siblings the leftmost is ``l``,
the rightmost ``r`` and the rest ``m``.  All routines here are iterative so
they work on trees with millions of nodes.
"""

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional

from .errors import DegreeOverflow, InvalidCodeword
from .model import Codeword, CodewordLike, Tree, as_text


class Reason(str, Enum):
    BAD_ROOT = "BadRoot"
    SIBLING_OVERFLOW = "SiblingOverflow"
    UNCLOSED_GROUP = "UnclosedGroup"
    DANGLING_CLOSE = "DanglingClose"
    BAD_LENGTH = "BadLength"


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    failure_position: Optional[int] = None
    reason: Optional[Reason] = None

    def __bool__(self):
        return self.valid

    def describe(self):
        if self.valid:
            return "valid"
        return f"{self.reason.value} at position {self.failure_position}"


VALID = ValidationReport(True)


def _scan(text, delta, want_parents):
    """Single left-to-right pass.  Returns ``(report, parents)``.

    ``parents[i]`` is the 0-based index of the parent of node ``i`` (``-1``
    for the root).  Each open sibling group is a stack frame
    ``[position of its l, siblings seen, parent index]``.
    """
    n = len(text)
    if text[0] != "s":
        return ValidationReport(False, 1, Reason.BAD_ROOT), None
    parents = [-1] * n if want_parents else None
    groups = []
    for i in range(1, n):
        ch = text[i]
        if ch == "s":
            parent = i - 1
        elif ch == "l":
            parent = i - 1
            # a group needs room for at least its closing r
            if delta is not None and delta < 2:
                return ValidationReport(False, i + 1, Reason.SIBLING_OVERFLOW), None
            groups.append([i, 1, parent])
        else:
            if not groups:
                return ValidationReport(False, i + 1, Reason.DANGLING_CLOSE), None
            frame = groups[-1]
            frame[1] += 1
            parent = frame[2]
            if ch == "m":
                if delta is not None and frame[1] + 1 > delta:
                    return ValidationReport(False, i + 1, Reason.SIBLING_OVERFLOW), None
            else:
                if delta is not None and frame[1] > delta:
                    return ValidationReport(False, i + 1, Reason.SIBLING_OVERFLOW), None
                groups.pop()
        if want_parents:
            parents[i] = parent
    if groups:
        return ValidationReport(False, groups[-1][0] + 1, Reason.UNCLOSED_GROUP), None
    return VALID, parents


def validate(c: CodewordLike, delta: Optional[int] = None, n: Optional[int] = None) -> ValidationReport:
    """Check ``c`` against the codeword grammar for trees with at most
    ``delta`` children per node (``None`` means unbounded).

    If ``n`` is given the length must match it.
    """
    text = as_text(c)
    if n is not None and len(text) != n:
        return ValidationReport(False, min(len(text), n) + 1, Reason.BAD_LENGTH)
    return _scan(text, delta, False)[0]


def _parents(c, delta):
    text = as_text(c)
    report, parents = _scan(text, delta, True)
    if not report.valid:
        raise InvalidCodeword(report)
    return text, parents


def decode(c: CodewordLike, delta: Optional[int] = None) -> Tree:
    text, parents = _parents(c, delta)
    n = len(text)
    kids: List[list] = [[] for _ in range(n)]
    nodes: List[Optional[Tree]] = [None] * n
    # children always follow their parent in pre-order, so build right to left
    for i in range(n - 1, -1, -1):
        kids_i = kids[i]
        kids_i.reverse()
        node = Tree(kids_i)
        nodes[i] = node
        kids[i] = None
        if parents[i] >= 0:
            kids[parents[i]].append(node)
    return nodes[0]


def encode(t: Tree, delta: Optional[int] = None) -> Codeword:
    out = []
    index = 0
    stack = [(t, "s")]
    while stack:
        node, label = stack.pop()
        index += 1
        out.append(label)
        k = len(node.children)
        if delta is not None and k > delta:
            raise DegreeOverflow(index, k, delta)
        if k == 1:
            stack.append((node.children[0], "s"))
        elif k > 1:
            stack.append((node.children[-1], "r"))
            for child in reversed(node.children[1:-1]):
                stack.append((child, "m"))
            stack.append((node.children[0], "l"))
    return Codeword("".join(out))


def preorder_subtree_sizes(c: CodewordLike, delta: Optional[int] = None) -> List[int]:
    """Size of the subtree rooted at each position, in pre-order."""
    text, parents = _parents(c, delta)
    sizes = [1] * len(text)
    for i in range(len(text) - 1, 0, -1):
        sizes[parents[i]] += sizes[i]
    return sizes


def children_lists(c: CodewordLike, delta: Optional[int] = None) -> List[List[int]]:
    """0-based child positions for every node."""
    text, parents = _parents(c, delta)
    kids = [[] for _ in text]
    for i in range(1, len(text)):
        kids[parents[i]].append(i)
    return kids


def to_dot(c: CodewordLike, delta: Optional[int] = None) -> str:
    """Graphviz digraph with nodes numbered by 1-based pre-order index."""
    text, parents = _parents(c, delta)
    lines = ["digraph {"]
    if len(text) == 1:
        lines.append("  1;")
    for i in range(1, len(text)):
        lines.append(f"  {parents[i] + 1} -> {i + 1};")
    lines.append("}")
    return "\n".join(lines)


def to_paren(c: CodewordLike, delta: Optional[int] = None) -> str:
    """Nested parentheses, e.g. ``(() (()))`` for ``slrs``."""
    kids = children_lists(c, delta)
    out = []
    stack = [(0, 0)]
    while stack:
        node, nxt = stack.pop()
        if nxt == 0:
            out.append("(")
        if nxt < len(kids[node]):
            if nxt > 0:
                out.append(" ")
            stack.append((node, nxt + 1))
            stack.append((kids[node][nxt], 0))
        else:
            out.append(")")
    return "".join(out)


def from_paren(text: str) -> Tree:
    """Inverse of :func:`to_paren` (whitespace is ignored)."""
    stack: List[list] = []
    root = None
    for pos, ch in enumerate(text, 1):
        if ch.isspace():
            continue
        if ch == "(":
            if root is not None:
                raise ValueError(f"trailing input at position {pos}")
            stack.append([])
        elif ch == ")":
            if not stack:
                raise ValueError(f"unbalanced ')' at position {pos}")
            node = Tree(stack.pop())
            if stack:
                stack[-1].append(node)
            else:
                root = node
        else:
            raise ValueError(f"unexpected {ch!r} at position {pos}")
    if root is None or stack:
        raise ValueError("unbalanced parentheses")
    return root
