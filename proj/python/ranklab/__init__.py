"""Exact rank, label, and decomposition computations for real binary forms.

A form of degree d is given by its d+1 coefficients c_0..c_d with
f = sum c_i x^(d-i) y^i; coefficients may be ints, "p/q" strings, or
fractions.Fraction.  Report dicts follow docs/report.schema.json.
"""

import json as _json

from _ranklab import CertificationFailure, __version__
from _ranklab import a_rank as _a_rank
from _ranklab import admissible_rank as _admissible_rank
from _ranklab import complex_rank as _complex_rank
from _ranklab import real_rank as _real_rank
from _ranklab import decompose_json as _decompose_json
from _ranklab import labels_json as _labels_json
from _ranklab import rank_json as _rank_json
from _ranklab import sample_form as _sample_form
from _ranklab import sample_report as _sample_report
from _ranklab import survey_json as _survey_json
from _ranklab import verify_json as _verify_json

__all__ = [
    "CertificationFailure",
    "__version__",
    "a_rank",
    "admissible_rank",
    "complex_rank",
    "decompose",
    "labels",
    "rank",
    "real_rank",
    "sample",
    "sample_csv",
    "sample_form",
    "survey",
    "verify",
]


def _coeffs(coeffs):
    return [str(c) for c in coeffs]


def complex_rank(coeffs):
    """Least number of points of the complex curve whose span contains f."""
    return _complex_rank(_coeffs(coeffs))


def admissible_rank(coeffs):
    """Least cardinality of a conjugation-stable evincing set."""
    return _admissible_rank(_coeffs(coeffs))


def real_rank(coeffs):
    """(lo, hi, exact); the real rank is exact iff lo == hi."""
    return _real_rank(_coeffs(coeffs))


def a_rank(coeffs, a):
    """Minimal real-point count with exactly a conjugate pairs, as (lo, hi, exact)."""
    return _a_rank(_coeffs(coeffs), a)


def rank(coeffs):
    """Full rank report (complex, admissible, real, labels) as a dict."""
    return _json.loads(_rank_json(_coeffs(coeffs)))


def labels(coeffs, at=None):
    """Label set at the admissible rank, or at cardinality `at` (non-normative)."""
    return _json.loads(_labels_json(_coeffs(coeffs), at))


def decompose(coeffs, label=None):
    """Certified decomposition with its verification, as a dict.

    `label` is an optional (s, a) pair; by default the admissible witness
    is decomposed.  Raises ValueError for unachievable labels and
    CertificationFailure when a partial search has no witness.
    """
    return _json.loads(_decompose_json(_coeffs(coeffs), label))


def sample(degree, count, bound=100, seed=0, jobs=1, keep_reports=False):
    """Seeded empirical rank/label distribution as a dict."""
    return _json.loads(_sample_report(degree, count, bound, seed, jobs, keep_reports, False))


def sample_csv(degree, count, bound=100, seed=0, jobs=1):
    """The same distribution flattened to CSV text, one row per sample."""
    return _sample_report(degree, count, bound, seed, jobs, True, True)


def sample_form(degree, bound, seed, index):
    """Canonical integer coefficients of sample #index under the master seed."""
    return [int(c) for c in _sample_form(degree, bound, seed, index)]


def verify(check, degree, count, bound=100, seed=0, jobs=1):
    """(pass, report dict) for one of the named density checks."""
    ok, text = _verify_json(check, degree, count, bound, seed, jobs)
    return ok, _json.loads(text)


def survey(a, degree, count, bound=100, seed=0, jobs=1):
    """(pass, report dict) for the empirical a-rank distribution."""
    ok, text = _survey_json(a, degree, count, bound, seed, jobs)
    return ok, _json.loads(text)
