"""Shared test helpers: independent oracles and shape builders.

Nothing here reuses the library's recursive definitions; the point is to
have second routes to the same answers.
"""

from __future__ import annotations

import functools
import math
from string import ascii_lowercase

from sublists import Node, Tip


def prefix(n: int) -> str:
    return ascii_lowercase[:n]


def deletion_subs(t: tuple) -> list[tuple]:
    """Immediate sublists by direct deletion, later positions first."""
    return [t[: i] + t[i + 1 :] for i in range(len(t) - 1, -1, -1)]


def memo_solve(problem, xs):
    """Memoized evaluation of the recurrence, keyed on subsequences.

    Independent of both library evaluators: no trees, no shared subs
    implementation, caching instead of recomputation.
    """
    base, combine = problem.base, problem.combine

    @functools.lru_cache(maxsize=None)
    def go(t: tuple):
        if len(t) == 1:
            return base(t[0])
        return combine([go(s) for s in deletion_subs(t)])

    return go(tuple(xs))


def tree_of_shape(k: int, n: int, make_value):
    """The unique (k, n)-shaped tree, tips filled from ``make_value``."""
    if k == 0 or k == n:
        return Tip(make_value())
    return Node(tree_of_shape(k - 1, n - 1, make_value), tree_of_shape(k, n - 1, make_value))


def td_g_calls(n: int) -> int:
    """Closed form for the reference evaluator's combine-call count:
    c(0) = 0 and c(m) = 1 + (m + 1) * c(m - 1)."""
    c = 0
    for m in range(1, n + 1):
        c = 1 + (m + 1) * c
    return c


def bu_g_calls(n: int) -> int:
    """Closed form for the bottom-up combine-call count: one call per
    tip of every level after the first."""
    return sum(math.comb(n + 1, j) for j in range(2, n + 2))
