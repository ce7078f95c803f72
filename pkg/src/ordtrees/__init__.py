"""Generation, ranking and unranking of ordered trees with bounded node degree."""

from .codec import (
    Reason,
    ValidationReport,
    decode,
    encode,
    from_paren,
    preorder_subtree_sizes,
    to_dot,
    to_paren,
    validate,
)
from .counting import CountTable, build_tables, count, load_tables, save_tables
from .errors import TreeError
from .generator import (
    GeneratorState,
    enumerate_codewords,
    first_codeword,
    iter_codewords,
    last_codeword,
    next_inplace,
)
from .model import MAX_DELTA, Codeword, Params, Symbol, Tree, parse_codeword, render_codeword
from .ranking import div_plus, mod_plus, rank, sample_many, uniform_sample, unrank

__version__ = "0.1.0"

__all__ = [
    "CountTable",
    "Codeword",
    "GeneratorState",
    "MAX_DELTA",
    "Params",
    "Reason",
    "Symbol",
    "Tree",
    "TreeError",
    "ValidationReport",
    "build_tables",
    "count",
    "decode",
    "div_plus",
    "encode",
    "enumerate_codewords",
    "first_codeword",
    "from_paren",
    "iter_codewords",
    "last_codeword",
    "load_tables",
    "mod_plus",
    "next_inplace",
    "parse_codeword",
    "preorder_subtree_sizes",
    "rank",
    "render_codeword",
    "sample_many",
    "save_tables",
    "to_dot",
    "to_paren",
    "uniform_sample",
    "unrank",
    "validate",
]
