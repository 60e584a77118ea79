from fractions import Fraction
import math

from hypothesis import given, settings, strategies as st
import numpy as np
import pytest

from banachkit.bohrset import BohrSpec
from banachkit.errors import SpecError
from banachkit.jin import find_translate, jin_experiment, recheck, sample_probe
from banachkit.setmodel import (Bohr, Periodic, Random, Shift, Window, WindowedSet, diff_set,
                                materialize)
from banachkit.structure import check_pws_certificate

from strategies import periodics

EVENS = Periodic(2, {0})
ODDS = Periodic(2, {1})


def test_find_translate_examples():
    w = Window(0, 100)
    assert find_translate(materialize(EVENS, w), {0, 2, 4}, w) == 0
    assert find_translate(materialize(ODDS, w), {0, 2}, w) == 1
    p = WindowedSet.from_members(Window(0, 120), list(range(10)) + list(range(100, 110)))
    assert find_translate(p, {0, 5, 9}, p.window) == 0
    assert find_translate(p, {0, 50}, p.window) is None


@settings(max_examples=100, deadline=None)
@given(st.lists(st.booleans(), min_size=5, max_size=60),
       st.sets(st.integers(-5, 10), min_size=1, max_size=4))
def test_find_translate_brute_force(bits, f):
    p = WindowedSet(Window(0, len(bits) - 1), bits)
    members = set(p.members().tolist())
    want = next((t for t in range(-20, 80) if all(t + x in members for x in f)), None)
    assert find_translate(p, f, Window(-20, 80)) == want


def test_sample_probe_shape():
    members = np.arange(0, 1000, 3)
    for seed in range(50):
        f = sample_probe(members, seed, 40)
        assert 1 <= len(f) <= 8 and max(f) - min(f) <= 40
        assert set(f) <= set(members.tolist())
        assert f == sample_probe(members, seed, 40)


def test_evens_minus_odds():
    r = jin_experiment(EVENS, ODDS, Window(0, 10**4), 2, 100)
    assert r.certificate.k == 1 and r.success
    assert r.densities == (Fraction(5001, 10001), Fraction(5000, 10001))
    assert recheck(r, EVENS, ODDS)


def test_three_z():
    a = Periodic(3, {0})
    w = Window(0, 3000)
    r = jin_experiment(a, a, w, 2, 100, probes=10, seed=1)
    assert r.certificate.k == 1 and r.success
    full = jin_experiment(a, a, w, 2, r.diff_window.length)
    assert full.certificate.k == 1 and full.certificate.intervals == (r.diff_window,)


def test_bohr_against_shifted_copy():
    a = Bohr(BohrSpec((0.41421356,), Fraction(1, 10)))
    b = Shift(a, 7)
    r = jin_experiment(a, b, Window(0, 10**5), 20, 1000, probes=20, seed=3)
    assert r.certificate is not None and r.certificate.k <= 20
    assert r.probes_ok and len(r.translate_checks) == 20
    assert recheck(r, a, b)


def test_report_json_and_determinism():
    a = Periodic(5, {0, 2})
    r1 = jin_experiment(a, EVENS, Window(0, 2000), 5, 100, probes=5, seed=9)
    r2 = jin_experiment(a, EVENS, Window(0, 2000), 5, 100, probes=5, seed=9)
    assert r1.to_json() == r2.to_json()
    d = r1.to_dict()
    assert set(d) == {"densities", "diff_window", "windows", "best_shift", "certificate",
                      "probes", "approximate"}
    assert d["best_shift"]["range"] == [-500, 500]


def test_negative_probes():
    with pytest.raises(SpecError):
        jin_experiment(EVENS, ODDS, Window(0, 100), 1, 10, probes=-1)


@settings(max_examples=25, deadline=None)
@given(periodics(max_period=12), periodics(max_period=12), st.integers(0, 2**32))
def test_periodic_pairs_succeed(a, b, seed):
    P = math.lcm(a.period, b.period)
    w = Window(0, P * (4000 // P) - 1)  # whole periods, so window densities are exact
    r = jin_experiment(a, b, w, 20, 200, probes=8, seed=seed)
    assert r.success
    assert check_pws_certificate(r.diff, r.certificate)
    assert r.shift_value >= Fraction(len(a.residues), a.period) * Fraction(len(b.residues), b.period)


def test_approximate_certificates_are_sound():
    # witness search truncated to a small radius still yields a certificate valid for
    # the larger (true) difference set
    a = Random(Fraction(1, 2), 4)
    r = jin_experiment(a, a, Window(0, 3000), 3, 100, witness_radius=50)
    wide = diff_set(materialize(a, r.window_a, 400), materialize(a, r.window_b, 400))
    assert wide.window == r.diff_window
    assert check_pws_certificate(wide, r.certificate)
