"""The level-raising step on choice trees.

``up`` is the engine of the bottom-up solver. Applied to a tree shaped
like ``ch(k, xs)`` whose tips carry values attached to the k-element
subsequences of ``xs`` (in generation order), it returns a tree shaped
like ``ch(k + 1, xs)`` in which each tip carries the *list* of values of
that (k+1)-subsequence's immediate sublists, in ``subs`` order. That list
is exactly the argument a sublist recurrence's combining function wants,
which is why one ``up`` plus one tip-wise map advances a whole level.

``up`` rearranges values purely by position; it never looks at them. Its
domain is trees of shape (k, n) with 1 <= k < n. The shape (n, n) and
(0, n) trees are single tips, and raising a single tip is meaningless, so
those inputs (and any tree not shaped like a level at all) raise
MalformedLevel naming the clause that failed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Sequence, TypeVar

from .combinatorics import ShapeIndex, bounded_holds, check_shape, choose, subs
from .core_tree import (
    BinomialTree,
    Node,
    Tip,
    map_tree,
    snoc,
    un_tip,
    zip_tree_with,
)
from .errors import MalformedLevel, NotATip, OutOfRange, ShapeMismatch

A = TypeVar("A")
B = TypeVar("B")
S = TypeVar("S", bound=Sequence)


def up(t: BinomialTree[A]) -> BinomialTree[list[A]]:
    """Raise a level tree one step (see the module docstring).

    Four clauses, tried top to bottom; the order is load-bearing because
    the first clause's pattern overlaps the next two:

    1. node(tip p, tip q)  ->  tip [p, q]
    2. node(t, tip q)      ->  tip (un_tip(up(t)) with q appended)
    3. node(tip p, u)      ->  node(map (q -> [p, q]) u, up(u))
    4. node(t, u)          ->  node(zip snoc (up t) u, up(u))

    On a well-shaped level the inner un_tip of clause 2 and the zip of
    clause 4 cannot fail; if they do, the input was not a level, and the
    resulting MalformedLevel says which clause discovered it.
    """
    match t:
        case Tip():
            raise MalformedLevel(
                "no clause applies: a single tip is already a complete level"
            )
        case Node(Tip(p), Tip(q)):
            return Tip([p, q])
        case Node(left, Tip(q)):
            try:
                gathered = un_tip(up(left))
            except NotATip as exc:
                raise MalformedLevel(
                    "clause 2: raising the left subtree did not collapse to a tip"
                ) from exc
            return Tip(snoc(gathered, q))
        case Node(Tip(p), right):
            return Node(map_tree(lambda q: [p, q], right), up(right))
        case Node(left, right):
            try:
                zipped = zip_tree_with(snoc, up(left), right)
            except ShapeMismatch as exc:
                raise MalformedLevel(
                    "clause 4: raised left subtree and right subtree differ in shape"
                ) from exc
            return Node(zipped, up(right))
    raise TypeError(f"not a tree: {t!r}")


def upgrade_oracle(k: int, xs: S) -> list[list[S]]:
    """List-level answer the raised tree must flatten to.

    For each (k+1)-element subsequence of ``xs`` (in ``choose`` order),
    the list of its immediate sublists. Defined for 1 <= k < len(xs);
    k == 0 is impossible (a 1-element selection has only the empty
    sublist, which identifies nothing) and raises OutOfRange.
    """
    if k < 1 or k + 1 > len(xs):
        raise OutOfRange(f"cannot upgrade level {k} of a {len(xs)}-element input")
    return [subs(ys) for ys in choose(k + 1, xs)]


def step(g: Callable[[list[A]], A], t: BinomialTree[A]) -> BinomialTree[A]:
    """One bottom-up move: raise the level, then combine every tip."""
    return map_tree(g, up(t))


@dataclass(frozen=True)
class Level:
    """A tree paired with the shape index it claims; checked on creation."""

    tree: BinomialTree[Any]
    claimed_index: ShapeIndex

    def __post_init__(self):
        idx = ShapeIndex(*self.claimed_index)
        object.__setattr__(self, "claimed_index", idx)
        if not bounded_holds(idx):
            raise MalformedLevel(f"index {idx} violates k <= n")
        if not check_shape(self.tree, idx):
            raise MalformedLevel(f"tree does not have shape {tuple(idx)}")
