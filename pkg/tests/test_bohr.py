from fractions import Fraction

import pytest

from banachkit.bohr import (exceptional_set, folner_bohr_check, piecewise_bohr_check,
                            spectral_csv, spectral_hints)
from banachkit.bohrset import BohrSpec, bohr_member
from banachkit.errors import OutOfWindowError, SpecError
from banachkit.setmodel import Bohr, Periodic, Random, Window, WindowedSet, materialize

ALPHA = 0.41421356


def test_member_zero():
    for spec in (BohrSpec((ALPHA,), Fraction(1, 100)), BohrSpec((Fraction(2, 9), 0.7), 0.5)):
        assert bohr_member(0, spec)


def test_piecewise_examples():
    spec = BohrSpec((ALPHA,), Fraction(1, 10))
    w = Window(0, 999)
    assert piecewise_bohr_check(WindowedSet.full(w), spec, [w])
    p = materialize(Bohr(spec), w)
    assert piecewise_bohr_check(p, spec, [Window(0, 499), Window(600, 999)])
    victim = int(p.members()[5])
    bits = p.membership.copy()
    bits[victim] = False
    mutated = WindowedSet(w, bits)
    assert not piecewise_bohr_check(mutated, spec, [Window(victim - 3, victim + 3)])
    assert piecewise_bohr_check(mutated, spec, [Window(victim + 1, 999)])
    with pytest.raises(OutOfWindowError):
        piecewise_bohr_check(p, spec, [Window(990, 1010)])


def test_folner_bohr_examples():
    ok, est = folner_bohr_check(Periodic(3, {0}), BohrSpec((Fraction(1, 3),), Fraction(3, 10)),
                                Window(-300, 300), 0)
    assert ok and est == 0
    ok, est = folner_bohr_check(Periodic(1, {0}), BohrSpec((ALPHA,), Fraction(1, 50)),
                                Window(-300, 300), 0)
    assert ok and est == 0
    c = Bohr(BohrSpec((ALPHA,), Fraction(1, 10)))
    ok, est = folner_bohr_check(c, BohrSpec((ALPHA,), Fraction(9, 100)), Window(-10**5, 10**5),
                                Fraction(1, 100))
    assert ok and est == 0


def test_exceptional_set_detects_failures():
    # C - C = 4Z misses the odd members of the Bohr set of 1/2
    c = Periodic(4, {0})
    spec = BohrSpec((Fraction(1, 3),), Fraction(1, 4))  # = 3Z
    missing = exceptional_set(c, spec, Window(0, 120))
    assert missing.members().tolist() == [n for n in range(121) if n % 3 == 0 and n % 4]
    ok, est = folner_bohr_check(c, spec, Window(0, 119), Fraction(1, 100))
    assert not ok and est > 0


def test_spectral_examples():
    w = Window(0, 4095)
    [(f, m)] = spectral_hints(materialize(Periodic(2, {0}), w), 4096, 1)
    assert f == Fraction(1, 2) and abs(m - 1) < 1e-12
    hints = spectral_hints(materialize(Bohr(BohrSpec((Fraction(1, 4),), 0.13)), w), 4096, 4)
    assert [h[0] for h in hints[:2]] == [Fraction(1, 4), Fraction(3, 4)]
    assert abs(hints[0][1] - hints[1][1]) < 1e-9
    rnd = spectral_hints(materialize(Random(Fraction(1, 2), 42), w), 4096, 1)
    assert rnd[0][1] < 0.1


def test_spectral_conjugacy():
    s = materialize(Bohr(BohrSpec((Fraction(2, 7), Fraction(1, 5)), Fraction(1, 5))), Window(0, 2099))
    hints = spectral_hints(s, 70, 69)
    mags = {f: m for f, m in hints}
    for f, m in mags.items():
        assert abs(mags[1 - f] - m) < 1e-9


def test_spectral_errors_and_csv():
    s = WindowedSet.from_members(Window(0, 7), [0, 2])
    with pytest.raises(SpecError):
        spectral_hints(s, 1, 1)
    with pytest.raises(SpecError):
        spectral_hints(WindowedSet.empty(Window(0, 7)), 8, 1)
    text = spectral_csv(spectral_hints(s, 4, 1))
    assert text.splitlines()[0] == "frequency,magnitude"
    assert text.splitlines()[1] == "1/2,1.0"
