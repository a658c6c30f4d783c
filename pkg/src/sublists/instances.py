"""Built-in problems and the golden expected-value suite.

Three problems ship with the package:

* ``trace``: answers are parenthesized strings recording exactly how the
  recurrence combined things, so any reordering or dropped branch changes
  the output. The canary for evaluation order.
* ``modsum``: order-sensitive modular arithmetic; each combined value is
  weighted by its 1-based position before summing.
* ``maxmin``: max minus min, order-insensitive on purpose, as a control.

Golden cases live both here (the authoritative list) and as one-line
JSONL files under ``golden/<problem>/<input>.jsonl`` at the repository
root. Cases that exercise an operation rather than a registered problem
encode the operation and its count parameter in the problem slot:
``subs``, ``choose-3``, ``spine-2``. List inputs name files with
dash-joined tokens (``1-2-3.jsonl``).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import PurePosixPath
from string import ascii_lowercase
from typing import Any

from .combinatorics import ch, choose, spine_sizes, subs
from .solver import Algorithm, SublistProblem, solve

MODULUS = 1_000_003


def _trace_base(x) -> str:
    return str(x)


def _trace_combine(ys: list[str]) -> str:
    return "(" + "".join(ys) + ")"


def _modsum_base(x: int) -> int:
    return x % MODULUS


def _modsum_combine(ys: list[int]) -> int:
    # 1-based position weights keep this order-sensitive
    return (1 + sum(v * i for i, v in enumerate(ys, start=1))) % MODULUS


def _maxmin_base(x: int) -> int:
    return x


def _maxmin_combine(ys: list[int]) -> int:
    return max(ys) - min(ys)


TRACE = SublistProblem("trace", _trace_base, _trace_combine, input_kind="chars")
MODSUM = SublistProblem("modsum", _modsum_base, _modsum_combine, input_kind="ints")
MAXMIN = SublistProblem("maxmin", _maxmin_base, _maxmin_combine, input_kind="ints")


def builtin_problems() -> list[SublistProblem]:
    """The registered problems, in registry order."""
    return [TRACE, MODSUM, MAXMIN]


def get_problem(name: str) -> SublistProblem | None:
    """Look a problem up by name; None when nothing is registered."""
    for problem in builtin_problems():
        if problem.name == name:
            return problem
    return None


def parse_input(problem: SublistProblem, text: str):
    """Turn CLI --input text into the problem's input sequence."""
    if problem.input_kind == "ints":
        if text.strip() == "":
            return []
        try:
            return [int(tok) for tok in text.split(",")]
        except ValueError:
            raise ValueError(f"expected comma-separated integers, got {text!r}") from None
    return text


def example_input(problem: SublistProblem, length: int):
    """A distinct-symbol input of the given length, for sweeps and bench."""
    if problem.input_kind == "ints":
        return list(range(1, length + 1))
    if length > len(ascii_lowercase):
        raise ValueError(f"cannot build a {length}-letter example input")
    return ascii_lowercase[:length]


@dataclass(frozen=True)
class GoldenCase:
    """One frozen expected value.

    ``algorithm`` is "td", "bu", "both", or None for cases that exercise
    an operation instead of a registered problem. ``provenance`` records
    how the expected value was obtained: "worked-example" (authoritative
    published example), "reference-run" (generated by the td reference
    evaluator, then reviewed against an independent computation), or
    "definitional" (true by definition).
    """

    problem_name: str
    input: Any
    algorithm: str | None
    expected: Any
    provenance: str


def golden_suite() -> list[GoldenCase]:
    """Every golden case, in file-path order."""
    return [
        GoldenCase(
            "choose-3",
            "abcde",
            None,
            ["abc", "abd", "abe", "acd", "ace", "ade", "bcd", "bce", "bde", "cde"],
            "worked-example",
        ),
        GoldenCase("maxmin", [3, 1, 4, 1, 5], "both", 1, "reference-run"),
        GoldenCase("modsum", [1, 2, 3], "both", 50, "reference-run"),
        GoldenCase("spine-2", "abcde", None, [10, 6, 3, 1], "worked-example"),
        GoldenCase(
            "subs",
            "abcde",
            None,
            ["abcd", "abce", "abde", "acde", "bcde"],
            "worked-example",
        ),
        GoldenCase("trace", "ab", "both", "(ab)", "reference-run"),
        GoldenCase("trace", "abc", "both", "((ab)(ac)(bc))", "reference-run"),
    ]


def evaluate_golden_case(case: GoldenCase) -> Any:
    """Compute the value a golden case describes, fresh.

    Solver cases run under every algorithm they name and must agree;
    operation cases dispatch on the encoded operation name.
    """
    name = case.problem_name
    if name == "subs":
        return subs(case.input)
    if name.startswith("choose-"):
        return choose(int(name.split("-", 1)[1]), case.input)
    if name.startswith("spine-"):
        return spine_sizes(ch(int(name.split("-", 1)[1]), case.input))
    problem = get_problem(name)
    if problem is None:
        raise ValueError(f"golden case names unknown problem {name!r}")
    algos = {
        "td": [Algorithm.TOP_DOWN],
        "bu": [Algorithm.BOTTOM_UP],
        "both": [Algorithm.TOP_DOWN, Algorithm.BOTTOM_UP],
    }[case.algorithm or "both"]
    values = [solve(problem, case.input, algo) for algo in algos]
    if any(v != values[0] for v in values[1:]):
        raise RuntimeError(f"algorithms disagree on golden case {name!r}: {values}")
    return values[0]


def _input_token(value: Any) -> str:
    if isinstance(value, str):
        return value
    return "-".join(str(v) for v in value)


def golden_relpath(case: GoldenCase) -> PurePosixPath:
    """Repository-relative path of the case's JSONL file."""
    return PurePosixPath("golden") / case.problem_name / f"{_input_token(case.input)}.jsonl"


def case_to_json_line(case: GoldenCase) -> str:
    """Canonical one-line encoding: fixed key order, no extra whitespace."""
    doc = {
        "problem": case.problem_name,
        "input": case.input,
        "algorithm": case.algorithm,
        "expected": case.expected,
        "provenance": case.provenance,
    }
    return json.dumps(doc, separators=(",", ":"))


def case_from_json_line(line: str) -> GoldenCase:
    doc = json.loads(line)
    return GoldenCase(
        problem_name=doc["problem"],
        input=doc["input"],
        algorithm=doc["algorithm"],
        expected=doc["expected"],
        provenance=doc["provenance"],
    )
