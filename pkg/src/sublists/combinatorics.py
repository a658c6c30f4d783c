"""Sublist and combination generators, plus shape-index validation.

Everything here is polymorphic over sliceable sequences: strings, lists
and tuples all work, and results keep the kind of the input (``subs`` of a
string is a list of strings, ``subs`` of a list of ints is a list of int
lists). Generation order is fixed and load-bearing throughout: it is the
order the level-raising step reproduces.
"""

from __future__ import annotations

import math
from typing import NamedTuple, Sequence, TypeVar

from .core_tree import BinomialTree, Node, Tip, count_tips, map_tree
from .errors import OutOfRange, Overflow

S = TypeVar("S", bound=Sequence)

_UINT64_MAX = 2**64 - 1


def subs(xs: S) -> list[S]:
    """All sequences obtained by deleting exactly one element of ``xs``.

    Ordered so that the sublist missing a later element comes first; the
    tail of ``xs`` (first element deleted) is last. Empty input gives [].
    """
    if len(xs) == 0:
        return []
    head, tail = xs[:1], xs[1:]
    return [head + ys for ys in subs(tail)] + [tail]


def choose(k: int, xs: S) -> list[S]:
    """All k-element subsequences of ``xs``, keeping element order.

    Subsequences containing the first element come before those without
    it. Defined for 0 <= k <= len(xs); anything else raises OutOfRange.
    The k == 0 clause wins on empty input, so choose(0, "") == [""].
    """
    if k < 0 or k > len(xs):
        raise OutOfRange(f"cannot choose {k} of {len(xs)} elements")
    if k == 0:
        return [xs[:0]]
    if k == len(xs):
        return [xs]
    head, tail = xs[:1], xs[1:]
    return [head + ys for ys in choose(k - 1, tail)] + choose(k, tail)


def ch(k: int, xs: S) -> BinomialTree[S]:
    """The choice tree whose tips are ``choose(k, xs)`` in order.

    Left subtree: selections keeping the first element; right subtree:
    selections skipping it. Same domain and clause order as ``choose``,
    so ch(0, xs) and ch(len(xs), xs) are single tips.
    """
    if k < 0 or k > len(xs):
        raise OutOfRange(f"cannot choose {k} of {len(xs)} elements")
    if k == 0:
        return Tip(xs[:0])
    if k == len(xs):
        return Tip(xs)
    head, tail = xs[:1], xs[1:]
    return Node(map_tree(lambda ys: head + ys, ch(k - 1, tail)), ch(k, tail))


class ShapeIndex(NamedTuple):
    """Index (k, n): the shape of the tree for k-of-n selections."""

    k: int
    n: int


def bounded_holds(idx: ShapeIndex | tuple[int, int]) -> bool:
    """True iff the index satisfies k <= n."""
    k, n = idx
    return k <= n


def check_shape(t: BinomialTree, idx: ShapeIndex | tuple[int, int]) -> bool:
    """Decide whether ``t`` has the shape the index (k, n) dictates.

    A tip is valid for (0, n) with any n, and for (k, k) with k >= 1.
    A node is valid for (k, n) only when k >= 1 and n >= 1, its left
    subtree is valid for (k - 1, n - 1), and its right subtree is valid
    for (k, n - 1). A valid index always satisfies k <= n, and the index
    determines the shape completely.
    """
    stack: list[tuple[BinomialTree, int, int]] = [(t, int(idx[0]), int(idx[1]))]
    while stack:
        current, k, n = stack.pop()
        if isinstance(current, Tip):
            if not (k == 0 or k == n):
                return False
        else:
            if k < 1 or n < 1:
                return False
            stack.append((current.left, k - 1, n - 1))
            stack.append((current.right, k, n - 1))
    return True


def spine_sizes(t: BinomialTree) -> list[int]:
    """Tip counts along the right spine: t, t.right, ... down to a tip."""
    sizes = [count_tips(t)]
    while isinstance(t, Node):
        t = t.right
        sizes.append(count_tips(t))
    return sizes


def binomial(n: int, k: int) -> int:
    """C(n, k), exact. OutOfRange unless 0 <= k <= n; results beyond the
    64-bit unsigned range raise Overflow rather than silently growing."""
    if k < 0 or n < 0 or k > n:
        raise OutOfRange(f"C({n}, {k}) is undefined here")
    value = math.comb(n, k)
    if value > _UINT64_MAX:
        raise Overflow(f"C({n}, {k}) exceeds the supported integer range")
    return value
