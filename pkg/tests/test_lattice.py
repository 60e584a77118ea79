from fractions import Fraction

from hypothesis import given, settings, strategies as st
import numpy as np
import pytest

from banachkit.errors import SpecError, WindowError
from banachkit.lattice import (Box, LatticeCertificate, LatticeSet, banach_density_est_d,
                               check_lattice_certificate, diff_set_d, pws_certificate_d)
from banachkit.setmodel import Periodic


def grid(lo, hi, d=2):
    return Box(((lo, hi),) * d)


def product(box, periods, residues):
    return LatticeSet.from_specs([Periodic(p, r) for p, r in zip(periods, residues)], box)


def test_box_validation():
    assert Box.parse("0:9,-2:3").shape == (10, 6)
    with pytest.raises(WindowError):
        Box(((3, 1),))
    with pytest.raises(WindowError):
        Box(((0, 1),) * 5)


def test_density_examples():
    s = product(grid(0, 9), (2, 1), ({0}, {0}))
    assert banach_density_est_d(s, 2) == Fraction(1, 2)
    full = LatticeSet(grid(0, 9), np.ones((10, 10), dtype=bool))
    assert banach_density_est_d(full, 4) == 1
    s = product(grid(0, 29), (2, 3), ({0}, {0}))
    assert banach_density_est_d(s, 6) == Fraction(1, 6)
    with pytest.raises(WindowError):
        banach_density_est_d(s, 31)


def test_diff_examples():
    one = LatticeSet.from_points(grid(0, 3), [(0, 0)])
    assert diff_set_d(one, one).points() == [(0, 0)]
    a = product(grid(0, 11), (2, 3), ({0}, {0}))
    d = diff_set_d(a, a)
    assert d.box == grid(-11, 11)
    assert d.points() == [(x, y) for x in range(-11, 12) for y in range(-11, 12)
                          if x % 2 == 0 and y % 3 == 0]
    b = LatticeSet.from_points(grid(0, 3), [(1, 2)])
    assert diff_set_d(one, b).points() == [(-1, -2)]
    with pytest.raises(SpecError):
        diff_set_d(one, LatticeSet.from_points(grid(0, 3), []))


@settings(max_examples=50, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 5), st.integers(0, 4)), min_size=1, max_size=10),
       st.lists(st.tuples(st.integers(-2, 3), st.integers(1, 3)), min_size=1, max_size=10))
def test_diff_brute_force(pa, pb):
    a = LatticeSet.from_points(Box(((0, 5), (0, 4))), pa)
    b = LatticeSet.from_points(Box(((-2, 3), (1, 3))), pb)
    want = sorted({(x - u, y - v) for x, y in pa for u, v in pb})
    assert diff_set_d(a, b).points() == want


def test_pws_examples():
    full = LatticeSet(grid(0, 19), np.ones((20, 20), dtype=bool))
    cert = pws_certificate_d(full, 3, 20)
    assert cert.k == 0 and cert.cubes == (full.box,)
    lat = product(grid(0, 99), (2, 2), ({0}, {0}))
    cert = pws_certificate_d(lat, 1, 50)
    assert cert.k == 1 and check_lattice_certificate(lat, cert)
    squares = LatticeSet.from_points(Box(((0, 10**4), (0, 10))), [(n * n, 0) for n in range(101)])
    assert pws_certificate_d(squares, 3, 10) is None


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_product_density(p1, p2, data):
    r1 = data.draw(st.sets(st.integers(0, p1 - 1), min_size=1))
    r2 = data.draw(st.sets(st.integers(0, p2 - 1), min_size=1))
    L = p1 * p2
    s = product(grid(0, 3 * L - 1), (p1, p2), (r1, r2))
    assert banach_density_est_d(s, L) == Fraction(len(r1), p1) * Fraction(len(r2), p2)


def brute_pws(points, box, k, L):
    pts = set(points)
    (x0, x1), (y0, y1) = box.ranges
    covered = {(x, y) for x in range(x0, x1 + 1) for y in range(y0, y1 + 1)
               if any((x + i, y + j) in pts for i in range(-k, k + 1) for j in range(-k, k + 1))}
    for cx in range(x0, x1 - L + 2):
        for cy in range(y0, y1 - L + 2):
            if all((cx + i, cy + j) in covered for i in range(L) for j in range(L)):
                return (cx, cy)
    return None


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 9), st.integers(0, 7)), min_size=1, max_size=12),
       st.integers(0, 3), st.integers(1, 6))
def test_pws_brute_force(points, k_max, L):
    box = Box(((0, 9), (0, 7)))
    s = LatticeSet.from_points(box, points)
    cert = pws_certificate_d(s, k_max, L)
    ks = [k for k in range(k_max + 1) if brute_pws(points, box, k, L)]
    if not ks:
        assert cert is None
        return
    assert cert.k == ks[0]
    assert cert.cubes[0].lows == brute_pws(points, box, cert.k, L)
    assert check_lattice_certificate(s, cert)
    if cert.k > 0:
        assert not check_lattice_certificate(s, LatticeCertificate(cert.k - 1, cert.cubes, box))


def test_three_dimensions():
    box = grid(0, 11, 3)
    s = product(box, (2, 3, 2), ({0}, {1}, {0, 1}))
    assert banach_density_est_d(s, 6) == Fraction(1, 6)
    cert = pws_certificate_d(s, 2, 8)
    assert cert.k == 1 and check_lattice_certificate(s, cert)


def test_jin_in_the_plane():
    box = grid(0, 299)
    a = product(box, (3, 3), ({0}, {0}))
    b = product(box, (3, 3), ({1}, {2}))
    d = diff_set_d(a, b)
    cert = pws_certificate_d(d, 3, 100)
    assert cert is not None and cert.k <= 3 and check_lattice_certificate(d, cert)


def test_certificate_json():
    cert = LatticeCertificate(1, (grid(0, 4),), grid(0, 9))
    assert cert.to_json() == '{"k":1,"cubes":[[[0,4],[0,4]]],"box":[[0,9],[0,9]]}'
    import json
    assert LatticeCertificate.from_dict(json.loads(cert.to_json())) == cert


def test_periodic_from_residue_tuples():
    s = LatticeSet.periodic(grid(0, 5), (2, 3), [(0, 0), (1, 1)])
    assert s.points() == [(x, y) for x in range(6) for y in range(6)
                          if (x % 2, y % 3) in {(0, 0), (1, 1)}]
