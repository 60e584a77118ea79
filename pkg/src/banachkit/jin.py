"""Desk-scale checks that ``A - B`` is piecewise syndetic.

Pipeline: materialize ``A`` and ``B``, take ``A - B``, look for a covered
interval certificate, then find the best integer shift ``n*`` and probe the
translate mechanism: every finite ``F`` inside ``C - C`` with
``C = (A - n*) & B`` must have a translate ``t + F`` inside ``A - B``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
import json

import numpy as np

from . import _rng
from .density import best_shift_windowed, rational_str, window_density
from .errors import SpecError
from .setmodel import Window, WindowedSet, diff_set, materialize
from .structure import PwsCertificate, check_pws_certificate, pws_certificate

PROBE_MIN, PROBE_MAX = 2, 8


def find_translate(p: WindowedSet, f, search: Window) -> int | None:
    """Smallest ``t`` in ``search`` with ``t + F`` inside ``p``.

    Translates that would leave ``p.window`` are skipped.
    """
    f = sorted(set(int(x) for x in f))
    if not f:
        raise SpecError("empty probe set")
    lo = max(search.lo, p.window.lo - f[0])
    hi = min(search.hi, p.window.hi - f[-1])
    if lo > hi:
        return None
    ok = np.ones(hi - lo + 1, dtype=bool)
    for x in f:
        ok &= p.slice(lo + x, hi + x)
        if not ok.any():
            return None
    return lo + int(np.argmax(ok))


@dataclass(frozen=True)
class Probe:
    seed: int
    elements: tuple
    t: int | None

    def to_dict(self):
        return {"seed": self.seed, "F": list(self.elements), "t": self.t}


@dataclass(frozen=True)
class JinReport:
    densities: tuple
    diff_window: Window
    certificate: PwsCertificate | None
    translate_checks: tuple
    window_a: Window
    window_b: Window
    shift: int
    shift_value: Fraction
    shift_range: Window
    approximate: bool = False
    diff: WindowedSet | None = field(default=None, repr=False, compare=False)

    @property
    def probes_ok(self) -> bool:
        return all(p.t is not None for p in self.translate_checks)

    @property
    def success(self) -> bool:
        return self.certificate is not None and self.probes_ok

    def to_dict(self):
        return {
            "densities": [rational_str(d) for d in self.densities],
            "diff_window": self.diff_window.as_list(),
            "windows": {"A": self.window_a.as_list(), "B": self.window_b.as_list()},
            "best_shift": {"n": self.shift, "value": rational_str(self.shift_value),
                           "range": self.shift_range.as_list()},
            "certificate": None if self.certificate is None else self.certificate.to_dict(),
            "probes": [p.to_dict() for p in self.translate_checks],
            "approximate": self.approximate,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def sample_probe(members: np.ndarray, seed: int, diameter: int) -> tuple:
    """A finite subset of ``members`` of size 2..8 and diameter at most ``diameter``.

    Draws come from the same counter-based generator as Random sets.
    """
    draws = _rng.words(seed, [-1, -2])
    size = PROBE_MIN + int(draws[0] % np.uint64(PROBE_MAX - PROBE_MIN + 1))
    anchor = int(members[int(draws[1] % np.uint64(members.size))])
    pool = members[(members > anchor) & (members <= anchor + diameter)]
    # a seeded random ordering of the pool, keyed by element value
    order = np.argsort(_rng.words(seed, pool), kind="stable")
    chosen = [anchor] + pool[order[: size - 1]].tolist()
    return tuple(sorted(chosen))


def jin_experiment(a, b, window: Window, k_max: int, L_min: int, probes: int = 0,
                   seed: int = 0, shift_radius: int | None = None,
                   witness_radius: int | None = None) -> JinReport:
    """Run the piecewise-syndeticity pipeline for ``A - B`` on ``window``.

    ``A`` is materialized on ``window`` widened by the shift radius so the best
    shift is evaluated exactly on ``window``; ``B`` on ``window`` itself.
    The default shift radius is ``min(1000, window.length // 4)``.
    """
    if probes < 0:
        raise SpecError("probes must be >= 0")
    r = min(1000, window.length // 4) if shift_radius is None else int(shift_radius)
    shift_range = Window(-r, r)
    wa = materialize(a, window.widened(r, r), witness_radius)
    wb = materialize(b, window, witness_radius)
    densities = (window_density(wa.restrict(window)), window_density(wb))
    if wa.is_empty() or wb.is_empty():
        raise SpecError("an operand is empty on the window")
    diff = diff_set(wa, wb)
    cert = pws_certificate(diff, k_max, L_min)

    n_star, value = best_shift_windowed(wa, wb, shift_range, window)
    c = WindowedSet(window, wb.membership & wa.restrict(window.shifted(n_star)).membership)
    checks = []
    if probes and not c.is_empty():
        cc = diff_set(c, c).members()
        diameter = max(window.length // 4, 1)
        for j in range(probes):
            probe_seed = _rng.word(seed, j)
            f = sample_probe(cc, probe_seed, diameter)
            checks.append(Probe(probe_seed, f, find_translate(diff, f, diff.window)))
    elif probes:
        checks = [Probe(_rng.word(seed, j), (), None) for j in range(probes)]
    return JinReport(densities, diff.window, cert, tuple(checks), wa.window, wb.window,
                     n_star, value, shift_range, diff.approximate, diff)


def recheck(report: JinReport, a, b, witness_radius: int | None = None) -> bool:
    """Rebuild ``A - B`` from the recorded windows and re-validate the certificate."""
    if report.certificate is None:
        return False
    diff = diff_set(materialize(a, report.window_a, witness_radius),
                    materialize(b, report.window_b, witness_radius))
    return diff.window == report.diff_window and check_pws_certificate(diff, report.certificate)
