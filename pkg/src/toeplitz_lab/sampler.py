"""Class members from Schwarz functions, plus independent suprema.

Two independent routes to the sharp bounds live here:

* ``montecarlo_verify`` samples Blaschke-product Schwarz functions,
  builds the induced class members g with z g'/g = Phi(omega(z)), and
  asserts the closed-form bounds on their determinants;
* ``oracle_sup`` brute-forces the supremum of a target functional over
  the exact Schwarz-Pick 2-jet body {(w1, w2): |w1| <= 1,
  |w2| <= 1 - |w1|^2}, which parametrizes every attainable (b2, b3)
  through b2 = d1 w1 and 2 b3 - b2^2 = d1 w2 + (d2/2) w1^2.

The target functionals are polynomials in w2, so their moduli attain
their maxima on the Schwarz-Pick boundary |w2| = 1 - |w1|^2 (maximum
modulus principle); the oracle scans that boundary, which keeps the
search three-dimensional without giving up any attainable value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import series as se
from .bounds import fekete_szego_bound, t22_bound, t31_bound
from .phi import PhiSpec, condition_t22, condition_t31, jet2, phi_series
from .series import Series
from .toeplitz import CoeffJet, coeff_jet, det_t22, det_t31


class BoundViolated(AssertionError):
    """A sampled function exceeded a sharp bound; carries the witness."""

    def __init__(self, message, word=None):
        super().__init__(message)
        self.word = word


@dataclass(frozen=True)
class SchwarzWord:
    """Finite parametrization of a Schwarz function.

    omega(z) = rotation * z^leading_power * prod_i (z + a_i)/(1 + conj(a_i) z)
    with |rotation| = 1, |a_i| < 1 and leading_power >= 1; the Blaschke
    construction guarantees omega(0) = 0 and |omega| < 1 on the disk.
    """

    rotation: complex
    factors: tuple = ()
    leading_power: int = 1

    def __post_init__(self):
        if abs(abs(self.rotation) - 1) > 1e-12:
            raise ValueError("rotation must have unit modulus")
        if self.leading_power < 1:
            raise ValueError("leading_power must be >= 1")
        if any(abs(a) >= 1 for a in self.factors):
            raise ValueError("Blaschke factor parameters must lie in the open disk")


@dataclass(frozen=True)
class JetBodyPoint:
    """A point of the Schwarz-Pick 2-jet body."""

    w1: complex
    w2: complex

    def __post_init__(self):
        if abs(self.w1) > 1 + 1e-12 or abs(self.w2) > 1 - abs(self.w1) ** 2 + 1e-9:
            raise ValueError("point outside the Schwarz-Pick body")


def omega_series(w: SchwarzWord, order: int = se.DEFAULT_ORDER) -> Series:
    out = se.identity(order)
    for _ in range(w.leading_power - 1):
        out = se.shift_mul_z(out)
    for a in w.factors:
        num = Series((a,) + (1.0,) + (0j,) * (order - 1))
        den = Series((1.0,) + (np.conj(a),) + (0j,) * (order - 1))
        out = se.mul(out, se.div(num, den))
    return w.rotation * out


def g_from_schwarz(
    phi: PhiSpec, w: SchwarzWord, order: int = se.DEFAULT_ORDER
) -> Series:
    """Class member with z g'/g = Phi(omega(z)), normalized g(z) = z + ...

    Construction: g = z exp(integral of (Phi(omega(t)) - 1)/t dt).
    """
    om = omega_series(w, order)
    big_g = se.compose(phi_series(phi, order), om)
    return se.shift_mul_z(se.exp_series(se.integrate_div_t(big_g - 1)))


def sample_words(count: int, seed: int, max_factors: int = 2) -> list:
    """Deterministic pseudo-random Schwarz words.

    Rotation phase uniform, factor count uniform on 0..max_factors,
    factor parameters area-uniform in the disk (radius = sqrt(uniform)),
    leading power uniform on {1, 2, 3}.
    """
    rng = np.random.default_rng(seed)
    words = []
    for _ in range(count):
        rot = np.exp(2j * math.pi * rng.random())
        nfac = int(rng.integers(0, max_factors + 1))
        factors = tuple(
            math.sqrt(rng.random()) * np.exp(2j * math.pi * rng.random())
            for _ in range(nfac)
        )
        words.append(
            SchwarzWord(complex(rot), factors, int(rng.integers(1, 4)))
        )
    return words


def _target_values(target, jet, w1, w2):
    """Vectorized |target functional| on jet-body points."""
    b2 = jet.d1 * w1
    b2sq = b2 * b2
    b3 = (jet.d1 * w2 + (jet.d2 / 2) * w1 * w1 + b2sq) / 2
    if target == "t22":
        return np.abs(b2sq - b3 * b3)
    if target == "t31":
        return np.abs(2 * b2sq * b3 - 2 * b2sq - b3 * b3 + 1)
    if isinstance(target, tuple) and target[0] == "fs":
        return np.abs(b3 - complex(target[1]) * b2sq)
    raise ValueError(f"unknown target {target!r}")


def target_bound(phi: PhiSpec, target) -> float:
    """Closed-form sharp bound for an oracle target."""
    j = jet2(phi)
    if target == "t22":
        return t22_bound(j)
    if target == "t31":
        return t31_bound(j)
    if isinstance(target, tuple) and target[0] == "fs":
        return fekete_szego_bound(j, complex(target[1]))
    raise ValueError(f"unknown target {target!r}")


@dataclass
class OracleResult:
    value: float
    argmax: JetBodyPoint


def _scan(jet, target, r1, th1, th2):
    """Max of the target over the lattice; w2 on the Schwarz-Pick boundary."""
    w1 = r1[:, None] * np.exp(1j * th1)[None, :]
    rad2 = (1 - r1**2)[:, None]
    best = -1.0
    arg = (0, 0, 0)
    phase2 = np.exp(1j * th2)
    for k, p2 in enumerate(phase2):
        vals = _target_values(target, jet, w1, rad2 * p2)
        i, j = np.unravel_index(int(np.argmax(vals)), vals.shape)
        if vals[i, j] > best:
            best = float(vals[i, j])
            arg = (i, j, k)
    return best, arg


def oracle_sup(phi: PhiSpec, target, grid: int = 200, refine: bool = True):
    """Supremum of |target| over the Schwarz-Pick 2-jet body by grid scan.

    One local refinement pass around the best cell removes most of the
    lattice-resolution bias.  Converges to the sharp bound from below.
    """
    if grid < 8:
        raise ValueError("grid must be >= 8")
    jet = jet2(phi)
    r1 = np.linspace(0.0, 1.0, grid)
    th1 = np.linspace(0.0, 2 * math.pi, grid, endpoint=False)
    th2 = np.linspace(0.0, 2 * math.pi, grid, endpoint=False)
    best, (i, j, k) = _scan(jet, target, r1, th1, th2)

    w1b = r1[i] * np.exp(1j * th1[j])
    w2b = (1 - r1[i] ** 2) * np.exp(1j * th2[k])
    if refine:
        dr = r1[1] - r1[0]
        dt = th1[1] - th1[0]
        fr1 = np.clip(np.linspace(r1[i] - dr, r1[i] + dr, grid), 0.0, 1.0)
        fth1 = np.linspace(th1[j] - dt, th1[j] + dt, grid)
        fth2 = np.linspace(th2[k] - dt, th2[k] + dt, grid)
        fbest, (fi, fj, fk) = _scan(jet, target, fr1, fth1, fth2)
        if fbest > best:
            best = fbest
            w1b = fr1[fi] * np.exp(1j * fth1[fj])
            w2b = (1 - fr1[fi] ** 2) * np.exp(1j * fth2[fk])
    return OracleResult(best, JetBodyPoint(complex(w1b), complex(w2b)))


@dataclass
class VerificationReport:
    family: str
    theorem: str
    samples: int
    seed: int
    bound: float
    max_observed: float
    tol: float
    violations: list = field(default_factory=list)
    margin_histogram: list = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "family": self.family,
            "theorem": self.theorem,
            "samples": self.samples,
            "seed": self.seed,
            "bound": self.bound,
            "max_observed": self.max_observed,
            "tol": self.tol,
            "violations": self.violations,
            "margin_histogram": self.margin_histogram,
        }


#: float-accumulation slack for sampled functions (b2, b3 are truncation-exact)
SAMPLE_TOL = 1e-6


def montecarlo_verify(
    phi: PhiSpec,
    count: int,
    seed: int,
    theorem: str = "t22",
    order: int = se.DEFAULT_ORDER,
    max_factors: int = 2,
    tol: float = SAMPLE_TOL,
) -> VerificationReport:
    """Sample class members and assert the requested sharp bound.

    Raises :class:`BoundViolated` (carrying the offending word) if any
    sample exceeds bound + tol; a violation is a genuine test failure.
    """
    if theorem == "t22":
        bound, det = t22_bound(jet2(phi)), det_t22
        if not condition_t22(phi):
            raise ValueError("t22 condition does not hold for this family")
    elif theorem == "t31":
        bound, det = t31_bound(jet2(phi)), det_t31
        if not condition_t31(phi):
            raise ValueError("t31 condition does not hold for this family")
    else:
        raise ValueError(f"unknown theorem {theorem!r}")

    margins = []
    max_observed = 0.0
    violations = []
    for w in sample_words(count, seed, max_factors):
        g = g_from_schwarz(phi, w, order)
        value = abs(det(coeff_jet(g)))
        max_observed = max(max_observed, value)
        margins.append(bound - value)
        if value > bound + tol:
            violations.append(
                {
                    "value": value,
                    "rotation": [w.rotation.real, w.rotation.imag],
                    "factors": [[a.real, a.imag] for a in w.factors],
                    "leading_power": w.leading_power,
                }
            )
    rep = VerificationReport(
        family=phi.label(),
        theorem=theorem,
        samples=count,
        seed=seed,
        bound=bound,
        max_observed=max_observed,
        tol=tol,
        violations=violations,
        margin_histogram=_histogram(margins, bound),
    )
    if violations:
        worst = max(violations, key=lambda v: v["value"])
        raise BoundViolated(
            f"{phi.label()} {theorem}: observed {worst['value']} > bound {bound}",
            word=worst,
        )
    return rep


def _histogram(margins, bound, bins: int = 10):
    if not margins:
        return []
    counts, edges = np.histogram(margins, bins=bins, range=(0.0, max(bound, 1e-9)))
    return [
        {"lo": float(edges[i]), "hi": float(edges[i + 1]), "count": int(counts[i])}
        for i in range(len(counts))
    ]


def schwarz_jet(w: SchwarzWord) -> JetBodyPoint:
    """(omega'(0), omega''(0)/2) of the induced Schwarz function."""
    om = omega_series(w, 4)
    return JetBodyPoint(om.coeffs[1], om.coeffs[2])
