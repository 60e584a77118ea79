"""Finite integer windows and materialized membership tables."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from ..errors import OutOfWindowError, WindowError


@dataclass(frozen=True, order=True)
class Window:
    """The integers ``lo..hi`` (both inclusive)."""

    lo: int
    hi: int

    def __post_init__(self):
        if int(self.lo) != self.lo or int(self.hi) != self.hi:
            raise WindowError(f"window endpoints must be integers: {self.lo}, {self.hi}")
        object.__setattr__(self, "lo", int(self.lo))
        object.__setattr__(self, "hi", int(self.hi))
        if self.lo > self.hi:
            raise WindowError(f"empty window [{self.lo},{self.hi}]")

    @classmethod
    def parse(cls, text: str) -> "Window":
        """Parse ``"lo:hi"``."""
        try:
            lo, hi = text.split(":")
            return cls(int(lo), int(hi))
        except ValueError as exc:
            if isinstance(exc, WindowError):
                raise
            raise WindowError(f"bad window {text!r}; expected lo:hi") from None

    @property
    def length(self) -> int:
        return self.hi - self.lo + 1

    def __contains__(self, n) -> bool:
        return self.lo <= n <= self.hi

    def contains_window(self, other: "Window") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def shifted(self, m: int) -> "Window":
        return Window(self.lo + m, self.hi + m)

    def widened(self, left: int, right: int) -> "Window":
        return Window(self.lo - left, self.hi + right)

    def integers(self) -> np.ndarray:
        return np.arange(self.lo, self.hi + 1, dtype=np.int64)

    def as_list(self) -> list[int]:
        return [self.lo, self.hi]

    def __str__(self):
        return f"{self.lo}:{self.hi}"


def _frozen_bool(arr) -> np.ndarray:
    out = np.array(arr, dtype=bool, copy=True)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class WindowedSet:
    """Membership of a set restricted to ``window``.

    ``approximate`` marks a table that may under-report the described set
    (never over-report): every listed member is genuine.
    """

    window: Window
    membership: np.ndarray = field(repr=False)
    approximate: bool = False

    def __post_init__(self):
        table = _frozen_bool(self.membership)
        if table.ndim != 1 or table.shape[0] != self.window.length:
            raise WindowError(
                f"membership table has shape {table.shape}, window length is {self.window.length}"
            )
        object.__setattr__(self, "membership", table)

    @classmethod
    def from_members(cls, window: Window, members: Iterable[int], approximate=False):
        table = np.zeros(window.length, dtype=bool)
        for n in members:
            if n not in window:
                raise OutOfWindowError(f"{n} outside window {window}")
            table[n - window.lo] = True
        return cls(window, table, approximate)

    @classmethod
    def full(cls, window: Window):
        return cls(window, np.ones(window.length, dtype=bool))

    @classmethod
    def empty(cls, window: Window):
        return cls(window, np.zeros(window.length, dtype=bool))

    def __contains__(self, n) -> bool:
        if n not in self.window:
            raise OutOfWindowError(f"{n} outside window {self.window}")
        return bool(self.membership[n - self.window.lo])

    def __eq__(self, other):
        if not isinstance(other, WindowedSet):
            return NotImplemented
        return self.window == other.window and np.array_equal(self.membership, other.membership)

    __hash__ = None

    @property
    def count(self) -> int:
        return int(np.count_nonzero(self.membership))

    def is_empty(self) -> bool:
        return not self.membership.any()

    def members(self) -> np.ndarray:
        return np.flatnonzero(self.membership) + self.window.lo

    def restrict(self, window: Window) -> "WindowedSet":
        if not self.window.contains_window(window):
            raise OutOfWindowError(f"{window} not inside {self.window}")
        a = window.lo - self.window.lo
        return WindowedSet(window, self.membership[a:a + window.length], self.approximate)

    def slice(self, lo: int, hi: int) -> np.ndarray:
        """Raw membership for ``lo..hi``; the range must lie inside the window."""
        return self.restrict(Window(lo, hi)).membership

    def __or__(self, other: "WindowedSet") -> "WindowedSet":
        self._same_window(other)
        return WindowedSet(self.window, self.membership | other.membership,
                           self.approximate or other.approximate)

    def __and__(self, other: "WindowedSet") -> "WindowedSet":
        self._same_window(other)
        return WindowedSet(self.window, self.membership & other.membership,
                           self.approximate or other.approximate)

    def _same_window(self, other):
        if self.window != other.window:
            raise WindowError(f"window mismatch: {self.window} vs {other.window}")

    def __repr__(self):
        shown = self.members()[:8].tolist()
        more = "..." if self.count > 8 else ""
        return f"WindowedSet({self.window}, {shown}{more}, approximate={self.approximate})"
