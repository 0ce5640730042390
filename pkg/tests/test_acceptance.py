"""Acceptance gate: one test per criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines.  Tolerances are fixed here, not configurable.
"""

import time

import numpy as np

import toeplitz_lab as tl
from toeplitz_lab import highdim as hd
from toeplitz_lab import sampler as sp

FAMILIES = (
    tl.halfplane(),
    tl.alpha(0.3),
    tl.alpha(0.5),
    tl.power(0.5),
    tl.power(0.9),
    tl.janowski(0.8, -0.6),
)


def _report(name, ok):
    print(f"ACCEPTANCE {name}: {'PASS' if ok else 'FAIL'}")
    assert ok, name


def test_criterion_1_starlike_bounds_exact():
    jet = tl.jet2(tl.halfplane())
    t0 = time.perf_counter()
    t22 = tl.t22_bound(jet)
    t31 = tl.t31_bound(jet)
    elapsed = time.perf_counter() - t0
    ok = abs(t22 - 13.0) < 1e-12 and abs(t31 - 24.0) < 1e-12 and elapsed < 1e-3
    _report("1 starlike bounds 13/24 exactly, <1ms", ok)


def test_criterion_2_algebraic_identity_witnesses():
    rng = np.random.default_rng(2024)
    ok = True
    for _ in range(200):
        a = rng.random() * (2 / 3)
        j = tl.jet2(tl.alpha(a))
        ok &= abs(tl.t22_bound(j) - (1 - a) ** 2 * (4 * a**2 - 12 * a + 13)) < 1e-12
        ok &= abs(
            tl.t31_bound(j) - (12 * a**4 - 52 * a**3 + 91 * a**2 - 74 * a + 24)
        ) < 1e-12
    for _ in range(200):
        e = -1 + 2 * rng.random()
        d = min(e + (1 - e) * (0.01 + 0.99 * rng.random()), 1.0)
        j = tl.jet2(tl.janowski(d, e))
        c_t22 = (d - e) ** 2 * (d**2 + 4 * e**2 - 4 * d * e + 4) / 4
        c_t31 = 1 + 2 * (d - e) ** 2 + (
            (3 * d**2 - 5 * d * e + 2 * e**2) * (d**2 - 3 * d * e + 2 * e**2) / 4
        )
        ok &= abs(tl.t22_bound(j) - c_t22) < 1e-12
        ok &= abs(tl.t31_bound(j) - c_t31) < 1e-12
    _report("2 order-alpha and Janowski polynomial identities at random parameters", ok)


def test_criterion_3_reduction_lattice():
    ok = True
    for phi in (tl.alpha(0.0), tl.power(1.0), tl.janowski(1.0, -1.0)):
        j = tl.jet2(phi)
        ok &= abs(tl.t22_bound(j) - 13.0) < 1e-12
        ok &= abs(tl.t31_bound(j) - 24.0) < 1e-12
    rng = np.random.default_rng(3)
    for _ in range(100):
        g = 1 / 3 + (2 / 3) * rng.random()
        j = tl.jet2(tl.power(g))
        ok &= abs(tl.t22_bound(j) - (9 * g**4 + 4 * g**2)) < 1e-12
        ok &= abs(tl.t31_bound(j) - (15 * g**4 + 8 * g**2 + 1)) < 1e-12
    _report("3 reduction lattice + strongly-starlike corollary", ok)


def test_criterion_4_sharpness_certificates():
    t0 = time.perf_counter()
    ok = True
    for phi in FAMILIES:
        cert = tl.certify(phi)
        if cert.cond_t22:
            ok &= cert.gap_t22 < 1e-10
        if cert.cond_t31:
            ok &= cert.gap_t31 < 1e-10
    elapsed = time.perf_counter() - t0
    ok &= elapsed < 1.0
    _report(f"4 extremal certificates, gaps <1e-10 ({elapsed:.3f}s)", ok)


def test_criterion_5_independent_oracle():
    ok = True
    for phi in FAMILIES:
        t0 = time.perf_counter()
        for target in ("t22", "t31"):
            cond = tl.condition_t22(phi) if target == "t22" else tl.condition_t31(phi)
            if not cond:
                continue
            got = tl.oracle_sup(phi, target, grid=200).value
            bound = sp.target_bound(phi, target)
            ok &= got <= bound + 1e-9
            ok &= bound - got <= 1e-3
        ok &= time.perf_counter() - t0 < 30.0
    _report("5 grid-200 jet-body oracle within 1e-3 from below", ok)


def test_criterion_6_montecarlo_soundness():
    t0 = time.perf_counter()
    ok = True
    for phi in FAMILIES:
        for theorem in ("t22", "t31"):
            rep = tl.montecarlo_verify(phi, 10_000, seed=6, theorem=theorem,
                                       tol=1e-6)
            ok &= rep.violations == []
            if phi.family == "halfplane" and theorem == "t22":
                ok &= rep.max_observed >= 0.95 * rep.bound
    elapsed = time.perf_counter() - t0
    ok &= elapsed < 60.0
    _report(f"6 Monte-Carlo soundness, 1e4 samples/family ({elapsed:.1f}s)", ok)


def test_criterion_7_highdim_equalities():
    hp = tl.halfplane()
    h = hd.extremal_lift(hp)
    ok = True
    for n in (2, 3, 5):
        for r in (0.3, 0.6, 0.9):
            z = hd.NormedPoint((r,) + (0j,) * (n - 1), "sup")
            rep = tl.verify_polydisc(hp, h, z)
            ok &= abs(rep.lhs_t22 - (9 * r**6 + 4 * r**4)) < 1e-9
            ok &= abs(rep.margin_t22) < 1e-9
            ok &= abs(rep.lhs_t31 - (15 * r**6 + 8 * r**4 + 1)) < 1e-9
            ok &= abs(rep.margin_t31) < 1e-9
    rng = np.random.default_rng(7)
    for n in (2, 3, 5):
        for _ in range(100):
            w = sp.sample_words(1, int(rng.integers(0, 2**62)))[0]
            hs = hd.lift_from_class_member(tl.g_from_schwarz(hp, w, 10))
            z = hd.random_interior_point(rng, n, "sup")
            rep = tl.verify_polydisc(hp, hs, z)
            ok &= rep.margin_t22 >= -1e-9 and rep.margin_t31 >= -1e-9
            rep = tl.verify_ball(hp, hs, z)
            ok &= rep.margin_t22 >= -1e-9 and rep.margin_t31 >= -1e-9
    _report("7 polydisc equalities 9r^6+4r^4 / 15r^6+8r^4+1 and margins", ok)


def test_criterion_8_oracle_cross_checks():
    rng = np.random.default_rng(8)
    ok = True
    for _ in range(1000):
        b2 = complex(rng.uniform(-5, 5), rng.uniform(-5, 5))
        b3 = complex(rng.uniform(-5, 5), rng.uniform(-5, 5))
        j = tl.CoeffJet(b2, b3)
        ok &= abs(tl.det_generic([1, b2, b3], 3) - tl.det_t31(j)) < 1e-10
        ok &= abs(tl.det_generic([b2, b3], 2) - tl.det_t22(j)) < 1e-10
    hp = tl.halfplane()
    for _ in range(25):
        w = sp.sample_words(1, int(rng.integers(0, 2**62)))[0]
        h = hd.lift_from_class_member(tl.g_from_schwarz(hp, w, 10))
        z = hd.random_interior_point(rng, 3, "sup")
        from toeplitz_lab import series as se

        inner = hd._ell(z, None) * se.identity(h.order)
        comp = se.compose(h, inner)
        zv = np.asarray(z.coords)
        terms = tl.homogeneous_terms(h, z)
        ok &= np.allclose(terms.q2, zv * comp.coeffs[1], atol=1e-12)
        ok &= np.allclose(terms.q3, zv * comp.coeffs[2], atol=1e-12)
    _report("8 generic-determinant and restriction-coefficient cross-checks", ok)
