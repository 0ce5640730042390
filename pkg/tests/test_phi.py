import json

import numpy as np
import pytest

import toeplitz_lab as tl
from toeplitz_lab import phi as ph
from toeplitz_lab import series as se

TOL = 1e-12


def test_jet_examples():
    j = tl.jet2(tl.halfplane())
    assert (j.d1, j.d2) == (2.0, 4.0)
    j = tl.jet2(tl.janowski(0.7, -0.4))
    assert abs(j.d1 - 1.1) < TOL and abs(j.d2 - 0.88) < TOL
    j = tl.jet2(tl.power(0.5))
    assert (j.d1, j.d2) == (1.0, 1.0)
    j = tl.jet2(tl.alpha(0.25))
    assert (j.d1, j.d2) == (1.5, 3.0)


def test_jet_reduction_equalities():
    ref = tl.jet2(tl.halfplane())
    for phi in (tl.alpha(0.0), tl.power(1.0), tl.janowski(1.0, -1.0)):
        j = tl.jet2(phi)
        assert j.d1 == ref.d1 and j.d2 == ref.d2


def test_phi_series_examples():
    s = tl.phi_series(tl.halfplane(), 3)
    assert s.coeffs == (1, 2, 2, 2)
    a = tl.phi_series(tl.power(1.0), 8)
    b = tl.phi_series(tl.halfplane(), 8)
    c = tl.phi_series(tl.janowski(1.0, -1.0), 8)
    for k in range(9):
        assert abs(a.coeffs[k] - b.coeffs[k]) < TOL
        assert abs(c.coeffs[k] - b.coeffs[k]) < TOL


def jet_from_series(phi):
    s = tl.phi_series(phi, 4)
    return s.coeffs[1].real, 2 * s.coeffs[2].real


def test_series_jet_matches_closed_form():
    rng = np.random.default_rng(21)
    for _ in range(100):
        a = rng.random() * 0.99
        g = 0.01 + rng.random() * 0.99
        e = -1 + 2 * rng.random()
        d = e + (1 - e) * (0.01 + 0.99 * rng.random())
        d = min(d, 1.0)
        for phi in (tl.halfplane(), tl.alpha(a), tl.power(g), tl.janowski(d, e)):
            d1, d2 = jet_from_series(phi)
            j = tl.jet2(phi)
            assert abs(d1 - j.d1) < TOL
            assert abs(d2 - j.d2) < TOL


def test_condition_t22():
    assert tl.condition_t22(tl.halfplane())
    # Janowski: holds iff |D - 2E| >= 1
    assert tl.condition_t22(tl.janowski(0.5, -0.5))
    assert not tl.condition_t22(tl.janowski(0.5, 0.0))
    # power: holds iff gamma >= 1/3
    assert tl.condition_t22(tl.power(1 / 3))
    assert not tl.condition_t22(tl.power(0.3))


def test_condition_t31():
    assert tl.condition_t31(tl.halfplane())
    assert tl.condition_t31(tl.alpha(2 / 3))
    assert not tl.condition_t31(tl.alpha(0.7))
    assert not tl.condition_t31(tl.power(0.25))


def test_conditions_on_series_jets_agree():
    rng = np.random.default_rng(22)
    for _ in range(100):
        a = rng.random() * 0.99
        g = 0.01 + rng.random() * 0.99
        for phi in (tl.alpha(a), tl.power(g)):
            d1, d2 = jet_from_series(phi)
            assert tl.condition_t22(phi) == (abs(d2 + 2 * d1**2) >= 2 * d1)
            assert tl.condition_t31(phi) == (
                2 * d1 - 2 * d1**2 <= d2 <= 6 * d1**2 - 2 * d1
            )


def test_invalid_parameters():
    with pytest.raises(tl.InvalidParameters):
        tl.alpha(1.0)
    with pytest.raises(tl.InvalidParameters):
        tl.power(0.0)
    with pytest.raises(tl.InvalidParameters):
        tl.janowski(0.5, 0.5)  # D = E degenerates the jet
    with pytest.raises(tl.InvalidParameters):
        tl.janowski(0.5, 0.7)


def test_subordination_check_basics():
    hp = tl.halfplane()
    # Phi composed with omega(z) = z/2 is subordinate by construction
    cand = se.compose(tl.phi_series(hp, 16), 0.5 * se.identity(16))
    assert tl.subordination_check(cand, hp, 32)
    assert not tl.subordination_check(tl.Series((1, 10) + (0,) * 14), hp, 32)
    assert tl.subordination_check(se.constant(1, 16), hp, 32)


def test_subordination_check_power_and_janowski():
    for phi in (tl.power(0.5), tl.janowski(0.8, -0.6), tl.alpha(0.4)):
        cand = se.compose(tl.phi_series(phi, 16), 0.5 * se.identity(16))
        assert tl.subordination_check(cand, phi, 32)


def test_custom_phi():
    s = tl.phi_series(tl.halfplane(), 8)
    # inverse of (1+z)/(1-z) in powers of u = w - 1 is u/(2 + u)
    inv = se.div(se.identity(8), tl.Series((2, 1) + (0,) * 7))
    cphi = tl.custom(s, inv)
    j = tl.jet2(cphi)
    assert (j.d1, j.d2) == (2.0, 4.0)
    cand = se.compose(s, 0.5 * se.identity(8))
    assert tl.subordination_check(cand, cphi, 16)


def test_custom_without_inverse_refuses_check():
    cphi = tl.custom(tl.phi_series(tl.halfplane(), 8))
    with pytest.raises(ph.NoInverseAvailable):
        tl.subordination_check(se.constant(1, 8), cphi, 8)


def test_custom_rejects_bad_jets():
    with pytest.raises(tl.InvalidParameters):
        tl.custom(tl.Series((1, -1, 0, 0)))  # d1 < 0
    with pytest.raises(tl.InvalidParameters):
        tl.custom(tl.Series((1, 1, 1j, 0)))  # d2 not real
    with pytest.raises(tl.InvalidParameters):
        tl.custom(tl.Series((2, 1, 0, 0)))  # Phi(0) != 1


def test_parse_family(tmp_path):
    assert tl.parse_family("starlike").family == "halfplane"
    assert tl.parse_family("alpha:0.5").params == (0.5,)
    assert tl.parse_family("janowski:0.8:-0.6").params == (0.8, -0.6)
    assert tl.parse_family("power:0.5").params == (0.5,)
    path = tmp_path / "phi.json"
    path.write_text(json.dumps({"coeffs": [[1, 0], [2, 0], [2, 0]]}))
    spec = tl.parse_family(f"custom:{path}")
    assert tl.jet2(spec).d1 == 2.0
    with pytest.raises(tl.InvalidParameters):
        tl.parse_family("nope")
    with pytest.raises(tl.InvalidParameters):
        tl.parse_family("alpha:2")
