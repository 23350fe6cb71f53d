from fractions import Fraction

import pytest

from higgs_spectral.exact.poly import BiPoly, UniPoly
from higgs_spectral.fixtures import CORPUS_ENV, corpus_dir, ideal_from_input, load, resolve
from higgs_spectral.parsing import (InputError, parse_bipoly, parse_unipoly, poly_matrix_from_input,
                                    rat_matrix_from_input, spectral_from_input)


def test_polynomial_strings():
    p = parse_bipoly("eta^2 - 3/2*w*eta + 1")
    assert p == BiPoly([UniPoly([1]), UniPoly([0, Fraction(-3, 2)]), UniPoly([1])])
    assert parse_bipoly("(eta + w)**2") == parse_bipoly("eta^2 + 2*w*eta + w^2")
    assert parse_unipoly("-(w - 1)/2") == UniPoly([Fraction(1, 2), Fraction(-1, 2)])


@pytest.mark.parametrize("bad", ["", "eta +", "x + 1", "w^eta", "w^-1", "1/w", "w^(1/2)", "__import__('os')",
                                 "eta.real", "2.5*w"])
def test_malformed_polynomials(bad):
    with pytest.raises(InputError):
        parse_bipoly(bad)


def test_spectral_polynomial_must_be_monic():
    assert spectral_from_input("eta^2 - w").n == 2
    with pytest.raises(InputError):
        spectral_from_input("2*eta^2 - w")
    with pytest.raises(InputError):
        spectral_from_input("w")
    assert parse_unipoly("w^2") == UniPoly([0, 0, 1])
    with pytest.raises(InputError):
        parse_unipoly("eta")


def test_matrices():
    m = poly_matrix_from_input([["0", "w"], ["1", "0"]])
    assert m[0, 1] == UniPoly([0, 1])
    assert rat_matrix_from_input([["1", "1/2"], ["0", "-1"]])[0, 1] == Fraction(1, 2)
    with pytest.raises(InputError):
        poly_matrix_from_input([["0", "w"], ["1"]])
    with pytest.raises(InputError):
        rat_matrix_from_input([["w"]])
    with pytest.raises(InputError):
        poly_matrix_from_input("w")


def test_corpus_lookup(tmp_path, monkeypatch):
    assert resolve("free_module_eta2_minus_w.json").parent == corpus_dir()
    doc = load("free_module_eta2_minus_w.json")
    assert doc["schema_version"] == "1.0" and "_provenance" in doc
    (tmp_path / "mine.json").write_text('{"p": "eta^2 - w", "generators": ["eta"]}')
    monkeypatch.setenv(CORPUS_ENV, str(tmp_path))
    assert corpus_dir() == tmp_path
    assert ideal_from_input(load("mine.json")).generators[0][1] == UniPoly([1])
    with pytest.raises(InputError):
        load("free_module_eta2_minus_w.json")


def test_bad_json(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(InputError):
        load(str(bad))
    with pytest.raises(InputError):
        ideal_from_input({"p": "eta^2 - w", "generators": []})
    with pytest.raises(InputError):
        ideal_from_input({"generators": ["1"]})
