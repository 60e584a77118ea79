"""Evaluation of set descriptions on finite windows, and difference sets."""

from __future__ import annotations

from functools import lru_cache
import math

import numpy as np

from .. import _rng
from ..bohrset import bohr_mask
from ..errors import SpecError
from . import eventual as ev
from ._conv import diff_counts
from .ast import AP, Bohr, DiffSet, Explicit, Intersect, Periodic, Random, Shift, Union_
from .windows import Window, WindowedSet

# witness search half-width for differences with no exact evaluation
DEFAULT_WITNESS_RADIUS = 4096


@lru_cache(maxsize=512)
def eventual_form(spec) -> ev.Eventual | None:
    """Exact eventually-periodic form of ``spec``, or None (Random, irrational Bohr, too large)."""
    if isinstance(spec, Periodic):
        if spec.period > ev.PERIOD_CAP:
            return None
        return ev.Eventual.periodic(spec.period, spec.residues)
    if isinstance(spec, AP):
        if spec.step > ev.PERIOD_CAP:
            return None
        return ev.Eventual.progression(spec.start, spec.step)
    if isinstance(spec, Explicit):
        if max(spec.values) - min(spec.values) + 1 > ev.CORE_CAP:
            return None
        return ev.Eventual.finite(spec.values)
    if isinstance(spec, Bohr):
        p = spec.spec.rational_period()
        if p > ev.PERIOD_CAP:
            return None
        table = bohr_mask(spec.spec, 0, p - 1)
        return ev.Eventual(p, table, table).normalized()
    if isinstance(spec, Random):
        return None
    if isinstance(spec, Shift):
        inner = eventual_form(spec.inner)
        return None if inner is None else inner.shifted(spec.n)
    left, right = eventual_form(spec.left), eventual_form(spec.right)
    if left is None or right is None:
        return None
    if isinstance(spec, Union_):
        return ev.combine(left, right, np.logical_or)
    if isinstance(spec, Intersect):
        return ev.combine(left, right, np.logical_and)
    if isinstance(spec, DiffSet):
        return ev.difference(left, right)
    raise TypeError(f"not a set spec: {spec!r}")


def is_periodic_class(spec) -> bool:
    """True when every question about ``spec`` can be answered exactly over Z."""
    return eventual_form(spec) is not None


def _evaluate(spec, lo: int, hi: int, radius: int) -> tuple[np.ndarray, bool]:
    """Membership on lo..hi and whether it may under-report."""
    form = eventual_form(spec)
    if form is not None:
        return form.mask(lo, hi), False
    n = np.arange(lo, hi + 1, dtype=np.int64)
    if isinstance(spec, Periodic):
        return np.isin(np.mod(n, spec.period), list(spec.residues)), False
    if isinstance(spec, AP):
        return (n >= spec.start) & (np.mod(n - spec.start, spec.step) == 0), False
    if isinstance(spec, Explicit):
        return np.isin(n, list(spec.values)), False
    if isinstance(spec, Bohr):
        return bohr_mask(spec.spec, lo, hi), False
    if isinstance(spec, Random):
        return _rng.bernoulli(spec.seed, lo, hi, spec.density), False
    if isinstance(spec, Shift):
        return _evaluate(spec.inner, lo - spec.n, hi - spec.n, radius)
    if isinstance(spec, (Union_, Intersect)):
        a, fa = _evaluate(spec.left, lo, hi, radius)
        b, fb = _evaluate(spec.right, lo, hi, radius)
        op = np.logical_or if isinstance(spec, Union_) else np.logical_and
        return op(a, b), fa or fb
    if isinstance(spec, DiffSet):
        return _evaluate_diff(spec, lo, hi, radius)
    raise TypeError(f"not a set spec: {spec!r}")


def _evaluate_diff(spec: DiffSet, lo: int, hi: int, radius: int):
    left, right = eventual_form(spec.left), eventual_form(spec.right)
    approx = False
    if right is not None and right.is_finite():
        ylo, yhi = right.lo, right.hi
    elif left is not None and left.is_finite():
        ylo, yhi = left.lo - hi, left.hi - lo
    elif left is not None and right is not None:
        ylo, yhi = ev.witness_range(left, right, lo, hi, math.lcm(left.period, right.period))
    else:
        ylo, yhi, approx = -radius, radius, True
    if yhi < ylo:
        return np.zeros(hi - lo + 1, dtype=bool), False
    b, fb = _evaluate(spec.right, ylo, yhi, radius)
    a, fa = _evaluate(spec.left, lo + ylo, hi + yhi, radius)
    off = yhi - ylo
    counts = diff_counts(a, b)
    return counts[off: off + hi - lo + 1] > 0, approx or fa or fb


def materialize(spec, window: Window, witness_radius: int | None = None) -> WindowedSet:
    """Membership of ``spec`` on ``window``.

    Differences are exact whenever an operand is finite or both operands have an
    eventually periodic form.  Otherwise witnesses ``b`` are searched in
    ``[-witness_radius, witness_radius]`` and the result is flagged approximate
    (an under-approximation).
    """
    if not isinstance(window, Window):
        raise SpecError(f"expected a Window, got {window!r}")
    radius = DEFAULT_WITNESS_RADIUS if witness_radius is None else int(witness_radius)
    table, approx = _evaluate(spec, window.lo, window.hi, radius)
    return WindowedSet(window, table, approx)


def diff_set(a: WindowedSet, b: WindowedSet) -> WindowedSet:
    """All differences ``x - y`` with ``x`` in ``a`` and ``y`` in ``b``.

    The result window is ``[a.lo - b.hi, a.hi - b.lo]``; the table is exact for
    the two finite sets, hence an under-approximation of the difference of any
    extensions of them.
    """
    if a.is_empty() or b.is_empty():
        raise SpecError("difference set of an empty operand")
    window = Window(a.window.lo - b.window.hi, a.window.hi - b.window.lo)
    counts = diff_counts(a.membership, b.membership)
    return WindowedSet(window, counts > 0, a.approximate or b.approximate)
