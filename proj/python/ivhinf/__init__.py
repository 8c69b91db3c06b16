"""Worst-case sensitivity H-infinity norms of interval feedback systems."""

import json

from ._core import (  # noqa: F401
    Error,
    IntervalPolynomial,
    __version__,
    analyze_json,
    check_lemma23,
    family_complex_stability,
    hinf_norm,
    is_hurwitz,
    kharitonov_vertices,
    octagon,
    roots,
    sensitivity_norm,
    twelve_tuples,
)


def analyze(problem, run_bisection=True):
    """Analyze a problem given as document text or as a dict; returns the report dict."""
    text = problem if isinstance(problem, str) else json.dumps(problem)
    return json.loads(analyze_json(text, run_bisection))
