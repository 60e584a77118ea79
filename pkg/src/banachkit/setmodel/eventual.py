"""Eventually periodic sets.

A set ``X`` is stored as a period ``P``, two residue tables and a finite core:
``n > hi`` is a member iff ``pos[n % P]``, ``n < lo`` iff ``neg[n % P]``, and
``lo <= n <= hi`` iff ``core[n - lo]``.  An empty core has ``hi == lo - 1``.

Periodic sets, one-sided progressions, finite sets and rational Bohr sets all
have this form, and the form is closed under union, intersection, translation
and difference, so every operation below is exact over all of Z.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
import math

import numpy as np

from ._conv import diff_counts

PERIOD_CAP = 1 << 20
CORE_CAP = 1 << 22


def _ro(a) -> np.ndarray:
    a = np.array(a, dtype=bool, copy=True)
    a.setflags(write=False)
    return a


def _prime_factors(n: int):
    f, out = 2, []
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def _has_period(table: np.ndarray, d: int) -> bool:
    rows = table.reshape(-1, d)
    return bool((rows == rows[0]).all())


@dataclass(frozen=True, eq=False)
class Eventual:
    period: int
    pos: np.ndarray = field(repr=False)
    neg: np.ndarray = field(repr=False)
    lo: int = 0
    hi: int = -1
    core: np.ndarray = field(default=None, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "pos", _ro(self.pos))
        object.__setattr__(self, "neg", _ro(self.neg))
        core = np.zeros(0, dtype=bool) if self.core is None else self.core
        object.__setattr__(self, "core", _ro(core))
        assert self.pos.shape == self.neg.shape == (self.period,)
        assert self.core.shape == (self.hi - self.lo + 1,)

    # constructors

    @classmethod
    def periodic(cls, period: int, residues) -> "Eventual":
        table = np.zeros(period, dtype=bool)
        table[list(residues)] = True
        return cls(period, table, table)

    @classmethod
    def progression(cls, start: int, step: int) -> "Eventual":
        pos = np.zeros(step, dtype=bool)
        pos[start % step] = True
        return cls(step, pos, np.zeros(step, dtype=bool), start, start - 1)

    @classmethod
    def finite(cls, values) -> "Eventual":
        vals = sorted(values)
        core = np.zeros(vals[-1] - vals[0] + 1, dtype=bool)
        core[np.array(vals) - vals[0]] = True
        none = np.zeros(1, dtype=bool)
        return cls(1, none, none, vals[0], vals[-1], core)

    # queries

    def mask(self, lo: int, hi: int) -> np.ndarray:
        n = np.arange(lo, hi + 1, dtype=np.int64)
        res = np.mod(n, self.period)
        out = np.where(n > self.hi, self.pos[res], self.neg[res])
        mid = (n >= self.lo) & (n <= self.hi)
        if mid.any():
            out[mid] = self.core[n[mid] - self.lo]
        return out

    def density(self) -> Fraction:
        """Upper Banach density: the denser of the two tails."""
        return Fraction(int(max(self.pos.sum(), self.neg.sum())), self.period)

    def is_finite(self) -> bool:
        return not self.pos.any() and not self.neg.any()

    def is_empty(self) -> bool:
        return self.is_finite() and not self.core.any()

    def is_everything(self) -> bool:
        return bool(self.pos.all() and self.neg.all() and self.core.all())

    def is_two_sided_periodic(self) -> bool:
        return self.core.size == 0 and np.array_equal(self.pos, self.neg)

    def residues(self) -> frozenset:
        """Residue set of a two-sided periodic set."""
        assert self.is_two_sided_periodic()
        return frozenset(np.flatnonzero(self.pos).tolist())

    # transformations

    def lifted(self, period: int) -> tuple[np.ndarray, np.ndarray]:
        reps = period // self.period
        return np.tile(self.pos, reps), np.tile(self.neg, reps)

    def shifted(self, m: int) -> "Eventual":
        return Eventual(self.period, np.roll(self.pos, m), np.roll(self.neg, m),
                        self.lo + m, self.hi + m, self.core)

    def reflected(self) -> "Eventual":
        idx = np.mod(-np.arange(self.period), self.period)
        return Eventual(self.period, self.neg[idx], self.pos[idx],
                        -self.hi, -self.lo, self.core[::-1])

    def normalized(self) -> "Eventual":
        """Smallest period, then the tightest core."""
        p, pos, neg = self.period, self.pos, self.neg
        for f in _prime_factors(p):
            while p % f == 0 and _has_period(pos, p // f) and _has_period(neg, p // f):
                p //= f
                pos, neg = pos[:p], neg[:p]
        lo, hi, core = self.lo, self.hi, self.core
        if core.size:
            n = np.arange(lo, hi + 1)
            bad = np.flatnonzero(core != pos[n % p])
            hi = lo + int(bad[-1]) if bad.size else lo - 1
            core = core[: hi - lo + 1]
        if core.size:
            n = np.arange(lo, hi + 1)
            bad = np.flatnonzero(core != neg[n % p])
            shift = int(bad[0]) if bad.size else core.size
            lo, core = lo + shift, core[shift:]
        if core.size == 0 and np.array_equal(pos, neg):
            lo, hi = 0, -1
        return Eventual(p, pos, neg, lo, hi, core)


def _common(a: Eventual, b: Eventual):
    q = math.lcm(a.period, b.period)
    if q > PERIOD_CAP:
        return None
    lo, hi = min(a.lo, b.lo), max(a.hi, b.hi)
    if hi - lo + 1 > CORE_CAP:
        return None
    return q, lo, hi


def combine(a: Eventual, b: Eventual, op) -> Eventual | None:
    """Pointwise boolean ``op`` of two forms (union: ``np.logical_or`` etc.)."""
    common = _common(a, b)
    if common is None:
        return None
    q, lo, hi = common
    ap, an = a.lifted(q)
    bp, bn = b.lifted(q)
    core = op(a.mask(lo, hi), b.mask(lo, hi)) if hi >= lo else None
    return Eventual(q, op(ap, bp), op(an, bn), lo, hi, core).normalized()


def witness_range(a: Eventual, b: Eventual, lo: int, hi: int, period: int) -> tuple[int, int]:
    """Interval containing a witness ``y`` in ``b`` for every ``x`` in ``a - b`` with lo <= x <= hi.

    If ``y > b.hi + P`` and ``x + y > a.hi + P`` then ``y - P`` is also a witness;
    symmetrically from below.  ``P`` must be a common period of both tails.
    """
    if b.is_finite():
        return b.lo, b.hi
    if a.is_finite():
        return a.lo - hi, a.hi - lo
    return (min(b.lo, a.lo - hi) - period, max(b.hi, a.hi - lo) + period)


def exact_diff_mask(a: Eventual, b: Eventual, lo: int, hi: int, period: int) -> np.ndarray:
    """Membership of ``a - b`` on lo..hi, exact."""
    ylo, yhi = witness_range(a, b, lo, hi, period)
    counts = diff_counts(a.mask(lo + ylo, hi + yhi), b.mask(ylo, yhi))
    off = yhi - ylo
    return counts[off: off + hi - lo + 1] > 0


def difference(a: Eventual, b: Eventual) -> Eventual | None:
    """The form of ``a - b``, or None when it would exceed the size caps."""
    if a.is_empty() or b.is_empty():
        none = np.zeros(1, dtype=bool)
        return Eventual(1, none, none)
    q = math.lcm(a.period, b.period)
    if q > PERIOD_CAP:
        return None
    # beyond these bounds every contributing piece is a full residue class
    top = a.hi - b.lo + 2 * q
    bottom = a.lo - b.hi - 2 * q
    if top - bottom + 1 + 2 * q > CORE_CAP:
        return None
    table = exact_diff_mask(a, b, bottom - q, top + q, q)
    core = table[q: q + top - bottom + 1]
    upper = np.arange(top + 1, top + q + 1)
    lower = np.arange(bottom - q, bottom)
    pos = np.zeros(q, dtype=bool)
    neg = np.zeros(q, dtype=bool)
    pos[upper % q] = table[-q:]
    neg[lower % q] = table[:q]
    return Eventual(q, pos, neg, bottom, top, core).normalized()
