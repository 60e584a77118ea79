"""Greedy maximal families of disjoint translates, and the resulting cover of Z by C - C.

If ``C - i_1, ..., C - i_m`` are pairwise disjoint and no further translate
can be added, every integer ``n`` has ``(C - n) & (C - i_k)`` nonempty for some
``k``, i.e. ``n`` lies in ``(C - C) + i_k``.  Disjoint translates of a set of
density ``d`` also force ``m <= 1/d``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import json
import math

import numpy as np

from .density import rational_str, window_density
from .errors import SpecError, WindowError
from .setmodel import DiffSet, Window, WindowedSet, diff_set, eventual_form, materialize
from .setmodel import eventual as ev


@dataclass(frozen=True)
class FolnerReport:
    shifts: tuple
    m: int
    density: Fraction
    density_bound: int | None  # floor(1/density); None for density 0
    cover_verified: bool
    core_window: Window | None = None  # None: decided exactly over all of Z

    @property
    def window_approximate(self) -> bool:
        return self.core_window is not None

    def to_dict(self):
        return {
            "shifts": list(self.shifts),
            "m": self.m,
            "bound": None if self.density_bound is None else rational_str(Fraction(self.density_bound)),
            "cover_verified": self.cover_verified,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def _bound(d: Fraction):
    return None if d == 0 else math.floor(1 / d)


def _greedy(shift_range: Window, collides) -> list[int]:
    chosen: list[int] = []
    for i in range(shift_range.lo, shift_range.hi + 1):
        if not any(collides(i - j) for j in chosen):
            chosen.append(i)
    return chosen


def greedy_disjoint_shifts(c, shift_range: Window, core_window: Window | None = None) -> FolnerReport:
    """Scan ``shift_range`` upward, keeping ``i`` when ``c - i`` misses every kept translate.

    ``c`` is either a set description with an eventually periodic form (decided
    exactly) or a ``WindowedSet`` together with a ``core_window`` on which the
    disjointness and the cover are checked (report marked window-approximate).
    """
    if shift_range is None:
        raise SpecError("empty shift range")
    if isinstance(c, WindowedSet):
        return _greedy_windowed(c, shift_range, core_window)
    form = eventual_form(c)
    if form is None:
        raise SpecError("greedy_disjoint_shifts needs a periodic-class description "
                        "or a WindowedSet with a core window")
    if form.is_empty():
        raise SpecError("empty set")
    span = shift_range.length - 1
    # c - i and c - j meet iff i - j lies in c - c
    diffs = ev.difference(form, form)
    if diffs is None:
        raise SpecError("difference set too large for exact evaluation")
    near = diffs.mask(0, span)
    shifts = _greedy(shift_range, lambda t: near[t])
    cover = _exact_cover(diffs, shifts)
    d = form.density()
    return FolnerReport(tuple(shifts), len(shifts), d, _bound(d), cover)


def _exact_cover(diffs: ev.Eventual, shifts) -> bool:
    union = diffs.shifted(shifts[0])
    for i in shifts[1:]:
        union = ev.combine(union, diffs.shifted(i), np.logical_or)
        if union is None:
            return False
    return union.is_everything()


def _greedy_windowed(c: WindowedSet, shift_range: Window, core: Window | None) -> FolnerReport:
    if core is None:
        raise SpecError("a WindowedSet needs a declared core window")
    need = Window(core.lo + shift_range.lo, core.hi + shift_range.hi)
    if not c.window.contains_window(need):
        raise WindowError(f"core {core} shifted by {shift_range} leaves {c.window}")
    if c.is_empty():
        raise SpecError("empty set")
    block = c.restrict(need).membership

    def translate(i):  # membership of c - i on the core
        a = core.lo + i - need.lo
        return block[a:a + core.length]

    chosen: list[int] = []
    for i in range(shift_range.lo, shift_range.hi + 1):
        ti = translate(i)
        if not any((ti & translate(j)).any() for j in chosen):
            chosen.append(i)
    d = window_density(c.restrict(core))
    cc = diff_set(c, c)
    cover = _window_cover(cc, chosen, core)
    return FolnerReport(tuple(chosen), len(chosen), d, _bound(d), cover, core)


def _window_cover(cc: WindowedSet, shifts, test: Window) -> bool:
    hit = np.zeros(test.length, dtype=bool)
    for i in shifts:
        lo, hi = test.lo - i, test.hi - i
        a, b = max(lo, cc.window.lo), min(hi, cc.window.hi)
        if a > b:
            continue
        hit[a - lo: b - lo + 1] |= cc.slice(a, b)
    return bool(hit.all())


def verify_cc_cover(c, shifts, test_window: Window) -> bool:
    """True iff every ``n`` in ``test_window`` lies in ``(c - c) + i`` for some shift ``i``."""
    shifts = list(shifts)
    if not shifts:
        raise SpecError("no shifts given")
    w = Window(test_window.lo - max(shifts), test_window.hi - min(shifts))
    cc = materialize(DiffSet(c, c), w)
    return _window_cover(cc, shifts, test_window)


def check_disjoint(c, shifts) -> bool:
    """Pairwise disjointness of ``c - i`` over Z, by direct evaluation of ``c``.

    Outside the core hull both tails repeat with the period, so one extra period
    on each side beyond the shifted hulls decides the question.
    """
    form = eventual_form(c)
    if form is None:
        raise SpecError("exact disjointness check needs a periodic-class description")
    shifts = sorted(shifts)
    if len(shifts) < 2:
        return True
    lo = min(form.lo, form.hi) - shifts[-1] - 2 * form.period
    hi = max(form.lo, form.hi) - shifts[0] + 2 * form.period
    table = materialize(c, Window(lo + shifts[0], hi + shifts[-1])).membership
    seen = np.zeros(hi - lo + 1, dtype=bool)
    for i in shifts:
        part = table[i - shifts[0]: i - shifts[0] + hi - lo + 1]
        if (seen & part).any():
            return False
        seen |= part
    return True
