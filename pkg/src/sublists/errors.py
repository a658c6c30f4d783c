"""Exception types raised across the package.

Everything derives from SublistsError so callers can catch domain errors
with one clause; the CLI maps them to usage failures (exit code 2).
"""

from __future__ import annotations


class SublistsError(Exception):
    """Base class for every error this package raises on purpose."""


class ShapeMismatch(SublistsError):
    """Two trees combined tip-wise disagree in shape.

    ``path`` holds the L/R turns from the root to the first point of
    divergence, in left-to-right traversal order.
    """

    def __init__(self, path: tuple[str, ...] = ()):
        self.path = tuple(path)
        where = "/".join(self.path) if self.path else "<root>"
        super().__init__(f"tree shapes diverge at {where}")


class NotATip(SublistsError):
    """A tree expected to be a single tip has internal structure."""


class NotSingleton(SublistsError):
    """A sequence expected to hold exactly one element does not."""


class OutOfRange(SublistsError):
    """A selection count k lies outside the valid range for its input."""


class Overflow(SublistsError):
    """An exact count no longer fits the supported integer range."""


class MalformedLevel(SublistsError):
    """A tree fed to the level-raising step is not shaped like one."""


class LengthMismatch(SublistsError):
    """An input sequence does not have the length the index demands."""


class EmptyInput(SublistsError):
    """An operation that needs at least one element received none."""
