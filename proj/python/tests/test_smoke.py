"""Smoke tests for the python bindings."""

import json
import os
from fractions import Fraction

import pytest

import qaptk


DATA = os.environ.get("QAPTK_DATA_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "data"))


def load(name):
    return qaptk.read_matrix(os.path.join(DATA, name + ".mat"))


def test_matrix_roundtrip():
    m = qaptk.Matrix([["0", "1/2"], ["1/2", "0"]])
    assert m.n == 2
    assert Fraction(m.at(1, 2)) == Fraction(1, 2)
    assert qaptk.parse_matrix(m.to_text()) == m


def test_objective_and_permutations():
    a = load("kalmanson_robinson")
    b = load("down_benevolent_toeplitz")
    assert qaptk.qap_objective(a, b, qaptk.identity(10)) == "27556"
    assert qaptk.supnick(6) == [1, 3, 5, 6, 4, 2]
    pi = qaptk.cyclic_shift(7, 3)
    assert qaptk.compose(pi, qaptk.invert(pi)) == qaptk.identity(7)


def test_classify_fixture():
    report = qaptk.classify(load("example_6x6"))
    assert report["classes"]["robinson"]["verdict"] == "yes"
    assert report["classes"]["kalmanson"]["verdict"] == "yes"
    typo = qaptk.classify(load("simple_toeplitz_typo"))
    assert typo["classes"]["toeplitz"]["witness"]["indices"] == [2, 5]


def test_decompose_cdw():
    report = qaptk.decompose(load("example_6x6"), "cdw")
    assert report["verdict"] == "yes"
    blocks = [term["blocks"] for term in report["terms"]]
    assert [[1, 3], [4, 6]] in blocks
    assert [[1, 2], [3, 4], [5, 6]] in blocks


def test_solve_with_oracle():
    report = qaptk.solve(load("kalmanson"), load("dw_toeplitz"), oracle=True, threads=2)
    assert report["case"] == "DW_kalmanson_dw"
    assert report["permutation"] == list(range(1, 11))
    assert report["oracle"]["agree"] is True


def test_generate_and_brute_force():
    a, params = qaptk.generate("robinson_kalmanson", 6, seed=11)
    b, _ = qaptk.generate("down_benevolent", 6, seed=12)
    assert params["class"] == "robinson_kalmanson"
    perm, value = qaptk.brute_force(a, b)
    assert Fraction(value) == Fraction(qaptk.qap_objective(a, b, perm))
    assert Fraction(qaptk.qap_objective(a, b, qaptk.identity(6))) == Fraction(value)


def test_cli_reports_validate_against_published_schema():
    cli = os.environ.get("QAPTK_CLI")
    schema_path = os.path.join(DATA, "..", "docs", "report-schema.json")
    if cli is None or not os.path.exists(schema_path):
        pytest.skip("CLI path or schema not available")
    jsonschema = pytest.importorskip("jsonschema")
    import subprocess

    with open(schema_path) as fh:
        schema = json.load(fh)

    def report(args):
        proc = subprocess.run([cli] + args, capture_output=True, text=True)
        return json.loads(proc.stdout)

    mat = os.path.join(DATA, "example_6x6.mat")
    reports = [
        report(["classify", mat]),
        report(["decompose", "--mode", "cdw", mat]),
        report(["decompose", "--mode", "kalmanson", mat]),
        report(["decompose", "--mode", "benevolent", os.path.join(DATA, "down_benevolent_toeplitz.mat")]),
        report(["solve", os.path.join(DATA, "kalmanson.mat"), os.path.join(DATA, "dw_toeplitz.mat")]),
        report(["solve", os.path.join(DATA, "anti_monge.mat"), os.path.join(DATA, "up_benevolent_toeplitz.mat")]),
        report(["classify", "/nonexistent.mat"]),
    ]
    for r in reports:
        jsonschema.validate(r, schema)
