"""Shared domain types: symbols, codewords, trees and (n, delta) parameters."""

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Tuple, Union

from .errors import EmptyInput, InvalidCharacter

#: Largest supported bound on children per node.
MAX_DELTA = 64


class Symbol(str, Enum):
    """Node label in a codeword.  ``L`` renders as ASCII ``'l'``."""

    S = "s"
    L = "l"
    M = "m"
    R = "r"

    def __str__(self):
        return self.value


ALPHABET = frozenset("slmr")


@dataclass(frozen=True)
class Params:
    n: int
    delta: int

    def __post_init__(self):
        check_params(self.n, self.delta)


def check_params(n, delta, max_delta=MAX_DELTA):
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    check_delta(delta, max_delta)


def check_delta(delta, max_delta=MAX_DELTA):
    if not isinstance(delta, int) or delta < 1:
        raise ValueError(f"delta must be an integer >= 1, got {delta!r}")
    if delta > max_delta:
        raise ValueError(f"delta={delta} exceeds the configured maximum {max_delta}")


@dataclass(frozen=True)
class Codeword:
    """A word over ``{s, l, m, r}``.

    Only the alphabet is checked here; grammar checks live in
    :func:`ordtrees.codec.validate`.  Indexing is 0-based like any Python
    sequence, while error positions reported by the library are 1-based.
    """

    text: str

    def __post_init__(self):
        if not self.text:
            raise EmptyInput()
        for pos, ch in enumerate(self.text, 1):
            if ch not in ALPHABET:
                raise InvalidCharacter(pos, ch)

    def __len__(self):
        return len(self.text)

    def __iter__(self) -> Iterator[Symbol]:
        return (Symbol(ch) for ch in self.text)

    def __getitem__(self, i) -> Symbol:
        return Symbol(self.text[i])

    def __str__(self):
        return self.text

    @property
    def symbols(self) -> Tuple[Symbol, ...]:
        return tuple(self)


CodewordLike = Union[Codeword, str]


def parse_codeword(text: str) -> Codeword:
    return Codeword(text)


def render_codeword(c: Codeword) -> str:
    return c.text


def as_text(c: CodewordLike) -> str:
    """Return the character string behind a codeword, checking the alphabet."""
    if isinstance(c, Codeword):
        return c.text
    return Codeword(c).text


class Tree:
    """Unlabeled ordered rooted tree.

    Trees are immutable.  Equality and hashing walk the tree iteratively, so
    very deep trees (long chains) are safe to compare.
    """

    __slots__ = ("children", "size")

    def __init__(self, children=()):
        self.children = tuple(children)
        self.size = 1 + sum(c.size for c in self.children)

    @property
    def degree(self):
        return len(self.children)

    def shape(self) -> Tuple[int, ...]:
        """Child counts in pre-order; determines the tree uniquely."""
        out = []
        stack = [self]
        while stack:
            node = stack.pop()
            out.append(len(node.children))
            stack.extend(reversed(node.children))
        return tuple(out)

    def max_degree(self):
        return max(self.shape())

    def __eq__(self, other):
        if not isinstance(other, Tree):
            return NotImplemented
        if self is other:
            return True
        return self.size == other.size and self.shape() == other.shape()

    def __hash__(self):
        return hash(self.shape())

    def __repr__(self):
        return f"Tree(size={self.size}, degree={self.degree})"

    @classmethod
    def chain(cls, n):
        """The path tree with ``n`` nodes."""
        node = cls()
        for _ in range(n - 1):
            node = cls((node,))
        return node
