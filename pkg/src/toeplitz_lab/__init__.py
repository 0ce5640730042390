"""Verification lab for sharp Toeplitz-determinant bounds on
subordination-defined function classes (disk, ball, polydisc)."""

from .bounds import BoundReport, fekete_szego_bound, report, t22_bound, t31_bound
from .extremal import CertificationFailed, ExtremalCertificate, certify, extremal_g
from .highdim import (
    NormedPoint,
    homogeneous_terms,
    lift_from_class_member,
    lz_apply,
    verify_ball,
    verify_polydisc,
)
from .phi import (
    InvalidParameters,
    Jet2,
    PhiSpec,
    alpha,
    condition_t22,
    condition_t31,
    custom,
    halfplane,
    janowski,
    jet2,
    parse_family,
    phi_series,
    power,
    subordination_check,
)
from .sampler import (
    BoundViolated,
    JetBodyPoint,
    SchwarzWord,
    g_from_schwarz,
    montecarlo_verify,
    omega_series,
    oracle_sup,
    sample_words,
)
from .series import Series
from .toeplitz import CoeffJet, coeff_jet, det_generic, det_t22, det_t31

__all__ = [
    "BoundReport",
    "BoundViolated",
    "CertificationFailed",
    "CoeffJet",
    "ExtremalCertificate",
    "InvalidParameters",
    "Jet2",
    "JetBodyPoint",
    "NormedPoint",
    "PhiSpec",
    "SchwarzWord",
    "Series",
    "alpha",
    "certify",
    "coeff_jet",
    "condition_t22",
    "condition_t31",
    "custom",
    "det_generic",
    "det_t22",
    "det_t31",
    "extremal_g",
    "fekete_szego_bound",
    "g_from_schwarz",
    "halfplane",
    "homogeneous_terms",
    "janowski",
    "jet2",
    "lift_from_class_member",
    "lz_apply",
    "montecarlo_verify",
    "omega_series",
    "oracle_sup",
    "parse_family",
    "phi_series",
    "power",
    "report",
    "sample_words",
    "subordination_check",
    "t22_bound",
    "t31_bound",
    "verify_ball",
    "verify_polydisc",
]

__version__ = "0.1.0"
