"""Top-down and bottom-up evaluation of immediate-sublist recurrences.

A problem assigns a value to every non-empty sequence: ``base`` answers
singletons, and ``combine`` builds the answer for a sequence out of the
answers for all its immediate sublists (every way of deleting one
element), received in ``subs`` order. ``td`` evaluates that recurrence
literally and recomputes shared subproblems; it is the executable
reference, kept deliberately free of caching. ``bu`` computes each level
of distinct subsequences exactly once by walking a choice tree upward,
and always agrees with ``td`` (the equivalence is replayed by the test
suite and by ``sublists verify``).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Callable, Generic, Sequence, TypeVar

from .combinatorics import ch, subs
from .core_tree import count_tips, extract_singleton, iter_compose, map_tree, un_tip
from .errors import EmptyInput, LengthMismatch
from .level_engine import step

X = TypeVar("X")
Y = TypeVar("Y")


class Algorithm(enum.Enum):
    TOP_DOWN = "td"
    BOTTOM_UP = "bu"


@dataclass(frozen=True)
class SublistProblem(Generic[X, Y]):
    """A recurrence over immediate sublists.

    ``base`` maps one element to the answer for its singleton sequence.
    ``combine`` receives the answers for all immediate sublists of a
    sequence, in ``subs`` order, and returns the sequence's answer.
    ``input_kind`` tells the CLI how to parse and generate inputs
    ("chars" for character strings, "ints" for comma-separated integers).
    """

    name: str
    base: Callable[[X], Y]
    combine: Callable[[list[Y]], Y]
    input_kind: str = "chars"


@dataclass
class RunStats:
    """Counters observed during one evaluation.

    ``peak_level_tips`` is the largest tip count of any intermediate tree
    the bottom-up run built; top-down runs build no trees, so it stays 0.
    """

    algorithm: Algorithm
    f_calls: int = 0
    g_calls: int = 0
    peak_level_tips: int = 0


def td(n: int, problem: SublistProblem[X, Y], xs: Sequence[X]) -> Y:
    """Reference evaluator: index n answers sequences of length n + 1."""
    if len(xs) != 1 + n:
        raise LengthMismatch(f"index {n} expects length {1 + n}, got {len(xs)}")
    if n == 0:
        return problem.base(extract_singleton(xs))
    return problem.combine([td(n - 1, problem, ys) for ys in subs(xs)])


def td_prime(n: int, combine: Callable[[list[Y]], Y], ys: Sequence[Y]) -> Y:
    """td with the base map stripped off: works on already-seeded values.

    td(n, p, xs) == td_prime(n, p.combine, [p.base(x) for x in xs]);
    the equality is one of the replayed laws.
    """
    if len(ys) != 1 + n:
        raise LengthMismatch(f"index {n} expects length {1 + n}, got {len(ys)}")
    if n == 0:
        return extract_singleton(ys)
    return combine([td_prime(n - 1, combine, zs) for zs in subs(ys)])


def bu(
    n: int,
    problem: SublistProblem[X, Y],
    xs: Sequence[X],
    *,
    on_level: Callable[..., None] | None = None,
) -> Y:
    """Bottom-up evaluator: each distinct subsequence is solved once.

    Seed: apply ``base`` to every element and build the level-1 choice
    tree over the seeded values, so each tip holds one singleton answer.
    Then raise-and-combine n times; the final tree is a single tip whose
    value is the answer for ``xs`` itself.

    ``on_level`` (if given) observes every level tree as it is produced,
    the seed level included; it is for instrumentation only and must not
    mutate what it sees.
    """
    if len(xs) != 1 + n:
        raise LengthMismatch(f"index {n} expects length {1 + n}, got {len(xs)}")
    seeds = [problem.base(x) for x in xs]
    level = map_tree(extract_singleton, ch(1, seeds))
    if on_level is not None:
        on_level(level)

    def advance(t):
        t = step(problem.combine, t)
        if on_level is not None:
            on_level(t)
        return t

    return un_tip(iter_compose(n, advance, level))


def run_with_stats(
    algo: Algorithm, n: int, problem: SublistProblem[X, Y], xs: Sequence[X]
) -> tuple[Y, RunStats]:
    """Evaluate like td/bu and report call counts alongside the value.

    Counting wraps ``base`` and ``combine`` only; the algorithms run
    unchanged, so the value is identical to the bare evaluators'.
    """
    stats = RunStats(algorithm=algo)

    def counted_base(x):
        stats.f_calls += 1
        return problem.base(x)

    def counted_combine(ys):
        stats.g_calls += 1
        return problem.combine(ys)

    counted = replace(problem, base=counted_base, combine=counted_combine)
    if algo is Algorithm.TOP_DOWN:
        value = td(n, counted, xs)
    else:

        def observe(t):
            stats.peak_level_tips = max(stats.peak_level_tips, count_tips(t))

        value = bu(n, counted, xs, on_level=observe)
    return value, stats


def solve(
    problem: SublistProblem[X, Y],
    xs: Sequence[X],
    algo: Algorithm = Algorithm.BOTTOM_UP,
) -> Y:
    """Answer ``xs`` with the requested algorithm; EmptyInput if empty."""
    if len(xs) == 0:
        raise EmptyInput("cannot solve an empty input")
    n = len(xs) - 1
    if algo is Algorithm.TOP_DOWN:
        return td(n, problem, xs)
    return bu(n, problem, xs)
