"""Bohr-set checks: piecewise Bohr containment, ``C - C`` versus a Bohr_0 set, and
frequency discovery through exponential sums."""

from __future__ import annotations

from fractions import Fraction
import csv
import io
import math

import numpy as np

from .bohrset import BohrSpec, as_fraction, bohr_mask, bohr_member, dist_to_int
from .density import banach_density_est
from .errors import OutOfWindowError, SpecError
from .setmodel import DiffSet, Window, WindowedSet, materialize

__all__ = [
    "BohrSpec", "bohr_member", "bohr_mask", "piecewise_bohr_check", "folner_bohr_check",
    "exceptional_set", "spectral_hints", "spectral_csv",
]


def piecewise_bohr_check(p: WindowedSet, spec: BohrSpec, intervals) -> bool:
    """True iff every Bohr member inside the listed intervals also lies in ``p``."""
    for iv in intervals:
        if not p.window.contains_window(iv):
            raise OutOfWindowError(f"interval {iv} escapes {p.window}")
        if (bohr_mask(spec, iv.lo, iv.hi) & ~p.slice(iv.lo, iv.hi)).any():
            return False
    return True


def exceptional_set(c, spec: BohrSpec, window: Window,
                    witness_radius: int | None = None) -> WindowedSet:
    """Bohr members on ``window`` that are missing from ``C - C``."""
    cc = materialize(DiffSet(c, c), window, witness_radius)
    return WindowedSet(window, bohr_mask(spec, window.lo, window.hi) & ~cc.membership,
                       cc.approximate)


def folner_bohr_check(c, spec: BohrSpec, window: Window, null_tolerance,
                      witness_radius: int | None = None) -> tuple[bool, Fraction]:
    """Does ``C - C`` contain the Bohr set up to a set of (estimated) density zero?

    The density of the exceptional set is the maximum over subwindows of length
    ``ceil(window.length / 10)``.
    """
    missing = exceptional_set(c, spec, window, witness_radius)
    est = banach_density_est(missing, math.ceil(window.length / 10)).value
    return est <= as_fraction(null_tolerance), est


def spectral_hints(s: WindowedSet, grid_size: int, top: int) -> list[tuple[Fraction, float]]:
    """Largest normalized exponential sums ``|sum_x e(x a)| / |S|`` over ``a = j / grid_size``.

    Frequency 0 is excluded.  Equal magnitudes (to 1e-12) are ordered by
    ``||a||`` and then by ``a``, which keeps conjugate pairs adjacent.
    """
    if grid_size < 2 or top < 1:
        raise SpecError("need grid_size >= 2 and top >= 1")
    members = s.members()
    if members.size == 0:
        raise SpecError("spectrum of an empty set")
    counts = np.bincount(np.mod(members, grid_size), minlength=grid_size).astype(np.float64)
    sums = np.fft.ifft(counts) * grid_size  # sum_x exp(+2 pi i x j / G)
    mags = np.abs(sums) / members.size
    freqs = [Fraction(j, grid_size) for j in range(1, grid_size)]
    order = sorted(range(1, grid_size),
                   key=lambda j: (-round(float(mags[j]), 12), dist_to_int(freqs[j - 1]), j))
    return [(freqs[j - 1], float(mags[j])) for j in order[:top]]


def spectral_csv(hints) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["frequency", "magnitude"])
    for f, m in hints:
        w.writerow([f"{f.numerator}/{f.denominator}", repr(m)])
    return buf.getvalue()
