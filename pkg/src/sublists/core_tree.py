"""Tip-valued binary trees and the generic combinators over them.

Trees are immutable; every combinator returns a fresh structure and never
mutates its argument. Traversals use explicit stacks instead of recursion,
so they stay safe even for trees much deeper than the desk-scale inputs
this package builds (tree depth never exceeds the source-sequence length).

A tree also has a canonical JSON document form: a tip is ``{"tip": value}``
and a node is ``{"node": [left, right]}``, serialized with no extra
whitespace. ``decode_tree(encode_tree(t)) == t`` for every tree whose tip
values are strings, numbers, or (nested) lists of those.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Callable, Generic, Sequence, TypeVar, Union

from .errors import NotATip, NotSingleton, ShapeMismatch

A = TypeVar("A")
B = TypeVar("B")
C = TypeVar("C")


@dataclass(frozen=True)
class Tip(Generic[A]):
    """Leaf holding one value."""

    value: A


@dataclass(frozen=True)
class Node(Generic[A]):
    """Internal node with exactly two subtrees."""

    left: "BinomialTree[A]"
    right: "BinomialTree[A]"


BinomialTree = Union[Tip[A], Node[A]]


def map_tree(f: Callable[[A], B], t: BinomialTree[A]) -> BinomialTree[B]:
    """Apply ``f`` to every tip value, preserving the shape of ``t``."""
    out: list[BinomialTree[B]] = []
    stack: list[tuple[BinomialTree[A], bool]] = [(t, False)]
    while stack:
        current, rebuild = stack.pop()
        if rebuild:
            right = out.pop()
            left = out.pop()
            out.append(Node(left, right))
        elif isinstance(current, Tip):
            out.append(Tip(f(current.value)))
        else:
            stack.append((current, True))
            stack.append((current.right, False))
            stack.append((current.left, False))
    return out[0]


def zip_tree_with(
    f: Callable[[A, B], C], t: BinomialTree[A], u: BinomialTree[B]
) -> BinomialTree[C]:
    """Combine two same-shaped trees tip-wise with ``f``.

    Raises ShapeMismatch carrying the path (L/R turns from the root) to
    the first point, in left-to-right order, where the shapes diverge.
    """
    out: list[BinomialTree[C]] = []
    stack: list[tuple[Any, Any, tuple[str, ...], bool]] = [(t, u, (), False)]
    while stack:
        a, b, path, rebuild = stack.pop()
        if rebuild:
            right = out.pop()
            left = out.pop()
            out.append(Node(left, right))
        elif isinstance(a, Tip) and isinstance(b, Tip):
            out.append(Tip(f(a.value, b.value)))
        elif isinstance(a, Node) and isinstance(b, Node):
            stack.append((a, b, path, True))
            stack.append((a.right, b.right, path + ("R",), False))
            stack.append((a.left, b.left, path + ("L",), False))
        else:
            raise ShapeMismatch(path)
    return out[0]


def un_tip(t: BinomialTree[A]) -> A:
    """Return the value of a tree that must be a single tip."""
    if not isinstance(t, Tip):
        raise NotATip("expected a single tip, found a node")
    return t.value


def extract_singleton(xs: Sequence[A]) -> A:
    """Return the sole element of a one-element sequence."""
    if len(xs) != 1:
        raise NotSingleton(f"expected exactly one element, got {len(xs)}")
    return xs[0]


def snoc(ys, z):
    """Append ``z`` at the end of ``ys``, preserving the sequence kind."""
    if isinstance(ys, str):
        return ys + z
    if isinstance(ys, tuple):
        return ys + (z,)
    return [*ys, z]


def iter_compose(k: int, f: Callable[[A], A], x: A) -> A:
    """Apply ``f`` to ``x`` exactly ``k`` times."""
    for _ in range(k):
        x = f(x)
    return x


def tips(t: BinomialTree[A]) -> list[A]:
    """All tip values of ``t`` in left-to-right order."""
    out: list[A] = []
    stack: list[BinomialTree[A]] = [t]
    while stack:
        current = stack.pop()
        if isinstance(current, Tip):
            out.append(current.value)
        else:
            stack.append(current.right)
            stack.append(current.left)
    return out


def count_tips(t: BinomialTree[A]) -> int:
    """Number of tips of ``t``; cheaper than ``len(tips(t))``."""
    n = 0
    stack: list[BinomialTree[A]] = [t]
    while stack:
        current = stack.pop()
        if isinstance(current, Tip):
            n += 1
        else:
            stack.append(current.left)
            stack.append(current.right)
    return n


def _value_to_doc(v: Any) -> Any:
    if isinstance(v, bool):
        raise TypeError("boolean tip values have no document form")
    if isinstance(v, (str, int, float)):
        return v
    if isinstance(v, (list, tuple)):
        return [_value_to_doc(x) for x in v]
    raise TypeError(f"tip value {v!r} has no document form")


def _value_from_doc(v: Any) -> Any:
    if isinstance(v, bool):
        raise ValueError("boolean is not a valid tip value")
    if isinstance(v, (str, int, float)):
        return v
    if isinstance(v, list):
        return [_value_from_doc(x) for x in v]
    raise ValueError(f"{v!r} is not a valid tip value")


def tree_to_doc(t: BinomialTree[Any]) -> dict[str, Any]:
    """Plain-dict document form of ``t`` (see the module docstring)."""
    out: list[dict[str, Any]] = []
    stack: list[tuple[BinomialTree[Any], bool]] = [(t, False)]
    while stack:
        current, rebuild = stack.pop()
        if rebuild:
            right = out.pop()
            left = out.pop()
            out.append({"node": [left, right]})
        elif isinstance(current, Tip):
            out.append({"tip": _value_to_doc(current.value)})
        else:
            stack.append((current, True))
            stack.append((current.right, False))
            stack.append((current.left, False))
    return out[0]


def tree_from_doc(doc: Any) -> BinomialTree[Any]:
    """Rebuild a tree from its document form; ValueError if malformed."""
    out: list[BinomialTree[Any]] = []
    stack: list[tuple[Any, bool]] = [(doc, False)]
    while stack:
        d, rebuild = stack.pop()
        if rebuild:
            right = out.pop()
            left = out.pop()
            out.append(Node(left, right))
            continue
        if not isinstance(d, dict) or len(d) != 1:
            raise ValueError(f"not a tree document: {d!r}")
        if "tip" in d:
            out.append(Tip(_value_from_doc(d["tip"])))
        elif "node" in d and isinstance(d["node"], list) and len(d["node"]) == 2:
            stack.append((d, True))
            stack.append((d["node"][1], False))
            stack.append((d["node"][0], False))
        else:
            raise ValueError(f"not a tree document: {d!r}")
    return out[0]


def encode_tree(t: BinomialTree[Any]) -> str:
    """Canonical JSON text for ``t``: compact separators, no whitespace."""
    return json.dumps(tree_to_doc(t), separators=(",", ":"))


def decode_tree(text: str) -> BinomialTree[Any]:
    """Inverse of encode_tree (lists and tuples both come back as lists)."""
    return tree_from_doc(json.loads(text))
