"""Syndeticity and piecewise syndeticity on finite windows.

Distances are window-internal: a point only counts as near the set if a member
inside the same window is close.  Gaps touching the window edge are therefore
inflated, never understated.
"""

from __future__ import annotations

from dataclasses import dataclass
import json

import numpy as np

from .errors import SpecError
from .setmodel import Window, WindowedSet

_FAR = np.iinfo(np.int64).max // 4


def nearest_distance(s: WindowedSet) -> np.ndarray:
    """Distance from each window point to the nearest member in the window."""
    m = s.membership
    idx = np.arange(m.size, dtype=np.int64)
    prev = np.maximum.accumulate(np.where(m, idx, -_FAR))
    nxt = np.minimum.accumulate(np.where(m, idx, _FAR)[::-1])[::-1]
    return np.minimum(idx - prev, nxt - idx)


def runs(mask: np.ndarray) -> list[tuple[int, int]]:
    """Maximal runs of True as (start, end) index pairs, inclusive."""
    padded = np.concatenate(([False], mask, [False])).astype(np.int8)
    edges = np.flatnonzero(np.diff(padded))
    return [(int(a), int(b) - 1) for a, b in zip(edges[::2], edges[1::2])]


def min_gap_bound(s: WindowedSet) -> int:
    """Least ``k`` with ``s - {-k..k}`` covering the window."""
    if s.is_empty():
        raise SpecError("min_gap_bound of an empty set")
    return int(nearest_distance(s).max())


@dataclass(frozen=True)
class PwsCertificate:
    """``s + [-k, k]`` contains each listed interval."""

    k: int
    intervals: tuple
    checked_set_window: Window

    def to_dict(self):
        return {
            "k": self.k,
            "intervals": [w.as_list() for w in self.intervals],
            "window": self.checked_set_window.as_list(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d) -> "PwsCertificate":
        return cls(int(d["k"]), tuple(Window(*w) for w in d["intervals"]), Window(*d["window"]))

    @classmethod
    def from_json(cls, text: str) -> "PwsCertificate":
        return cls.from_dict(json.loads(text))

    @property
    def longest(self) -> int:
        return max((w.length for w in self.intervals), default=0)


def _covered_runs(dist: np.ndarray, k: int, L_min: int):
    return [r for r in runs(dist <= k) if r[1] - r[0] + 1 >= L_min]


def pws_certificate(s: WindowedSet, k_max: int, L_min: int) -> PwsCertificate | None:
    """Smallest ``k <= k_max`` whose dilation holds an interval of length ``L_min``.

    Returns None when no such ``k`` exists.  All maximal covered intervals of
    length at least ``L_min`` are listed.
    """
    if k_max < 0 or L_min < 1:
        raise SpecError(f"need k_max >= 0 and L_min >= 1, got {k_max}, {L_min}")
    if s.is_empty() or L_min > s.window.length:
        return None
    dist = nearest_distance(s)
    if not _covered_runs(dist, k_max, L_min):
        return None
    lo, hi = 0, k_max
    while lo < hi:
        mid = (lo + hi) // 2
        if _covered_runs(dist, mid, L_min):
            hi = mid
        else:
            lo = mid + 1
    base = s.window.lo
    found = _covered_runs(dist, lo, L_min)
    return PwsCertificate(lo, tuple(Window(base + a, base + b) for a, b in found), s.window)


def check_pws_certificate(s: WindowedSet, cert: PwsCertificate, L_min: int | None = None) -> bool:
    """Re-validate ``cert`` against ``s`` by counting members in each ``[n-k, n+k]``."""
    if cert.k < 0 or not s.window.contains_window(cert.checked_set_window):
        return False
    if s.window != cert.checked_set_window:
        s = s.restrict(cert.checked_set_window)
    if not cert.intervals:
        return False
    w = s.window
    csum = np.concatenate(([0], np.cumsum(s.membership, dtype=np.int64)))
    prev_hi = None
    for iv in cert.intervals:
        if not w.contains_window(iv):
            return False
        if prev_hi is not None and iv.lo <= prev_hi:
            return False
        prev_hi = iv.hi
        if L_min is not None and iv.length < L_min:
            return False
        n = iv.integers() - w.lo
        left = np.clip(n - cert.k, 0, w.length)
        right = np.clip(n + cert.k + 1, 0, w.length)
        if not ((csum[right] - csum[left]) > 0).all():
            return False
    return True
