"""Exact recognizers, decompositions and solvers for structured QAP instances.

Thin wrapper over the compiled extension: JSON-string entry points become
dicts, rational strings stay exact and convert cleanly to fractions.Fraction.
"""

import json as _json

try:
    from ._qaptk import *  # noqa: F401,F403  (installed layout)
    from . import _qaptk as _ext
except ImportError:  # in-tree build with the extension directory on sys.path
    from _qaptk import *  # noqa: F401,F403
    import _qaptk as _ext


def classify(matrix):
    """Per-class verdicts (with witnesses and the Toeplitz profile) as a dict."""
    return _json.loads(_ext.classify_json(matrix))


def decompose(matrix, mode="cdw"):
    """Decomposition report for mode kalmanson | robinson-kalmanson | cdw | benevolent."""
    return _json.loads(_ext.decompose_json(matrix, mode))


def solve(a, b, b_split=None, oracle=False, max_brute=10, threads=1):
    """Detected case, optimal permutation and exact value; optional brute-force cross-check."""
    return _json.loads(_ext.solve_json(a, b, b_split, oracle, max_brute, threads))


def generate(class_name, n, seed=0):
    """Seeded random class member plus its generating parameters."""
    matrix, params = _ext.generate(class_name, n, seed)
    return matrix, _json.loads(params)
