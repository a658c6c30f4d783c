"""Immediate-sublist recurrences, solved two ways.

A recurrence that answers a sequence by combining the answers of all its
immediate sublists (each obtained by deleting one element) can be
evaluated naively top-down, recomputing shared subproblems, or bottom-up
along a binomial tree of levels, solving each distinct subsequence once.
This package provides both evaluators, the tree machinery the bottom-up
one is built from, and executable laws showing they agree.
"""

from __future__ import annotations

from .combinatorics import (
    ShapeIndex,
    binomial,
    bounded_holds,
    ch,
    check_shape,
    choose,
    spine_sizes,
    subs,
)
from .core_tree import (
    BinomialTree,
    Node,
    Tip,
    count_tips,
    decode_tree,
    encode_tree,
    extract_singleton,
    iter_compose,
    map_tree,
    snoc,
    tips,
    tree_from_doc,
    tree_to_doc,
    un_tip,
    zip_tree_with,
)
from .errors import (
    EmptyInput,
    LengthMismatch,
    MalformedLevel,
    NotATip,
    NotSingleton,
    OutOfRange,
    Overflow,
    ShapeMismatch,
    SublistsError,
)
from .instances import (
    MAXMIN,
    MODSUM,
    MODULUS,
    TRACE,
    GoldenCase,
    builtin_problems,
    case_from_json_line,
    case_to_json_line,
    evaluate_golden_case,
    example_input,
    get_problem,
    golden_relpath,
    golden_suite,
    parse_input,
)
from .level_engine import Level, step, up, upgrade_oracle
from .solver import (
    Algorithm,
    RunStats,
    SublistProblem,
    bu,
    run_with_stats,
    solve,
    td,
    td_prime,
)

__version__ = "0.1.0"

__all__ = [
    "Algorithm",
    "BinomialTree",
    "EmptyInput",
    "GoldenCase",
    "Level",
    "LengthMismatch",
    "MAXMIN",
    "MODSUM",
    "MODULUS",
    "MalformedLevel",
    "Node",
    "NotATip",
    "NotSingleton",
    "OutOfRange",
    "Overflow",
    "RunStats",
    "ShapeIndex",
    "ShapeMismatch",
    "SublistProblem",
    "SublistsError",
    "TRACE",
    "Tip",
    "binomial",
    "bounded_holds",
    "bu",
    "builtin_problems",
    "case_from_json_line",
    "case_to_json_line",
    "ch",
    "check_shape",
    "choose",
    "count_tips",
    "decode_tree",
    "encode_tree",
    "evaluate_golden_case",
    "example_input",
    "extract_singleton",
    "get_problem",
    "golden_relpath",
    "golden_suite",
    "iter_compose",
    "map_tree",
    "parse_input",
    "run_with_stats",
    "snoc",
    "solve",
    "spine_sizes",
    "step",
    "subs",
    "td",
    "td_prime",
    "tips",
    "tree_from_doc",
    "tree_to_doc",
    "un_tip",
    "up",
    "upgrade_oracle",
    "zip_tree_with",
]
