"""Window densities, finite upper Banach density estimates, and the shift search.

All densities are exact ``Fraction`` values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import SpecError, WindowError
from .setmodel import Shift, Window, WindowedSet, eventual_form, materialize
from .setmodel._conv import lag_counts


@dataclass(frozen=True)
class DensityReport:
    value: Fraction
    window_length: int
    achieving_window: Window

    def to_dict(self):
        return {
            "value": rational_str(self.value),
            "window_length": self.window_length,
            "achieving_window": self.achieving_window.as_list(),
        }


def rational_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def window_density(s: WindowedSet) -> Fraction:
    """Proportion of the window occupied by ``s``."""
    return Fraction(s.count, s.window.length)


def window_sums(table: np.ndarray, length: int) -> np.ndarray:
    """Member counts of every length-``length`` subwindow, left to right."""
    csum = np.concatenate(([0], np.cumsum(table, dtype=np.int64)))
    return csum[length:] - csum[:-length]


def banach_density_est(s: WindowedSet, L: int) -> DensityReport:
    """Maximum density over all length-``L`` subwindows (leftmost maximizer)."""
    if not 1 <= L <= s.window.length:
        raise WindowError(f"L={L} outside 1..{s.window.length}")
    sums = window_sums(s.membership, L)
    i = int(np.argmax(sums))
    lo = s.window.lo + i
    return DensityReport(Fraction(int(sums[i]), L), L, Window(lo, lo + L - 1))


def exact_density(spec) -> Fraction | None:
    """Upper Banach density of an eventually periodic description, else None."""
    form = eventual_form(spec)
    return None if form is None else form.density()


def _pick_shift(shifts: np.ndarray, counts: np.ndarray) -> int:
    best = counts.max()
    cands = shifts[counts == best]
    # smallest |n|, then the positive one
    return int(min(cands.tolist(), key=lambda n: (abs(n), n < 0)))


def shift_counts(a: WindowedSet, b: WindowedSet, shift_range: Window,
                 eval_window: Window) -> np.ndarray:
    """``|{k in eval_window : k in b, k + n in a}|`` for each ``n`` in ``shift_range``."""
    need = Window(eval_window.lo + shift_range.lo, eval_window.hi + shift_range.hi)
    if not a.window.contains_window(need) or not b.window.contains_window(eval_window):
        raise WindowError("materialized sets do not cover the shifted evaluation windows")
    return lag_counts(a.restrict(need).membership, b.restrict(eval_window).membership)


def best_shift_windowed(a: WindowedSet, b: WindowedSet, shift_range: Window,
                        eval_window: Window) -> tuple[int, Fraction]:
    counts = shift_counts(a, b, shift_range, eval_window)
    n = _pick_shift(shift_range.integers(), counts)
    # recount the winner directly
    k = eval_window.integers()
    hits = b.restrict(eval_window).membership & a.restrict(eval_window.shifted(n)).membership
    assert int(hits.sum()) == counts[n - shift_range.lo], "correlation count mismatch"
    return n, Fraction(int(hits.sum()), k.size)


def best_shift(a, b, shift_range: Window, eval_window: Window) -> tuple[int, Fraction]:
    """Integer shift ``n`` maximizing the density of ``(a - n) & b`` on ``eval_window``.

    Ties go to the smallest ``|n|``, then to the positive shift.
    """
    if shift_range is None:
        raise SpecError("shift range is empty")
    wa = materialize(a, Window(eval_window.lo + shift_range.lo, eval_window.hi + shift_range.hi))
    wb = materialize(b, eval_window)
    return best_shift_windowed(wa, wb, shift_range, eval_window)


def shifted_intersection(a, b, n: int, window: Window) -> WindowedSet:
    """``(a - n) & b`` on ``window``, as a spec-level convenience."""
    return materialize(Shift(a, -n), window) & materialize(b, window)
