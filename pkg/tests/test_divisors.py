from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from conftest import ETA, W, sym_bi
from higgs_spectral.correspondence import SpectralAlgebra
from higgs_spectral.divisors import (PRYM_SCOPE, BaseDivisor, Divisor, fiber_points, norm, parity_invariant,
                                     point, prym_membership_degreewise, sigma_divisor)
from higgs_spectral.fixtures import load
from higgs_spectral.parsing import spectral_from_input

FIBERS = load("norm_rational_fibers.json")["fixtures"]


def _alg(text):
    return SpectralAlgebra(spectral_from_input(text))


def test_fixture_corpus_shape():
    assert len(FIBERS) == 50
    assert {fx["n"] for fx in FIBERS} == {2, 3, 4}


@pytest.mark.parametrize("k", range(len(FIBERS)))
def test_norm_of_fiber_is_n_times_point(k):
    fx = FIBERS[k]
    alg = _alg(fx["p"])
    w0 = Fraction(fx["w0"])
    fib = fiber_points(alg, w0)
    assert fib.fully_rational and fib.certified
    # sympy oracle: the fiber is the rational root multiset of p(eta, w0)
    roots = sp.roots(sym_bi(alg.p).subs(W, sp.Rational(w0.numerator, w0.denominator)), ETA)
    assert {sp.Rational(pt.eta0.numerator, pt.eta0.denominator): m for pt, m in fib.points} == roots
    nm = norm(fib.as_divisor(alg))
    assert nm.support == {w0: alg.n}
    assert nm.to_json() == fx["expected_norm"]
    assert alg.sigma_symmetric == fx["sigma_symmetric"]


@st.composite
def divisors(draw, alg):
    terms = []
    for _ in range(draw(st.integers(0, 4))):
        fib = fiber_points(alg, draw(st.integers(-5, 5)))
        pt, _ = draw(st.sampled_from(fib.points))
        terms.append((pt.w0, pt.eta0, draw(st.integers(-3, 3))))
    return Divisor.from_terms(alg, terms)


SPLIT = _alg("eta^2 - w^2")  # fully rational fibers everywhere


@given(divisors(SPLIT), divisors(SPLIT))
def test_norm_is_additive_and_degree_preserving(d1, d2):
    total = {}
    for nm in (norm(d1), norm(d2)):
        for w, m in nm.support.items():
            total[w] = total.get(w, 0) + m
    assert norm(d1 + d2) == BaseDivisor(total)
    assert norm(d1).degree == d1.degree


@given(divisors(SPLIT))
def test_sigma_compatibility(d):
    s = sigma_divisor(d)
    assert norm(s) == norm(d)
    assert sigma_divisor(s) == d
    rep = prym_membership_degreewise(d - s)
    assert rep["in_norm_kernel"]
    assert rep["scope"] == PRYM_SCOPE


def test_divisor_arithmetic():
    alg = _alg("eta^2 - w")
    p, q = point(alg, 4, 2), point(alg, 4, -2)
    d = Divisor(alg, {p: 1, q: -1})
    assert d.degree == 0
    assert (d - d).is_zero()
    assert d.scale(3).support == {q: -3, p: 3}
    assert -d == Divisor(alg, {p: -1, q: 1})
    assert d.to_json() == [{"w": "4/1", "eta": "-2/1", "mult": -1}, {"w": "4/1", "eta": "2/1", "mult": 1}]


def test_point_must_lie_on_curve():
    alg = _alg("eta^2 - w")
    with pytest.raises(ValueError):
        point(alg, 4, 3)
    with pytest.raises(ValueError):
        Divisor.from_terms(alg, [(1, 2, 1)])


def test_irrational_fiber_is_reported():
    alg = _alg("eta^2 - w")
    fib = fiber_points(alg, 2)
    assert not fib.fully_rational
    assert fib.total == 2
    with pytest.raises(ValueError):
        fib.as_divisor(alg)


def test_branch_fiber_has_multiplicity():
    fib = fiber_points(_alg("eta^2 - w"), 0)
    assert [(pt.eta0, m) for pt, m in fib.points] == [(0, 2)]


def test_sigma_needs_symmetric_curve():
    alg = _alg("eta^3 - w")
    with pytest.raises(ValueError, match="σ"):
        sigma_divisor(Divisor.from_terms(alg, [(1, 1, 1)]))


def test_prym_predicates():
    alg = _alg("eta^2 - w")
    d = Divisor.from_terms(alg, [(4, 2, 1), (1, 1, 1)])
    rep = prym_membership_degreewise(d)
    assert not rep["in_norm_kernel"]
    assert not rep["prym_representative"]
    assert not rep["twice_degree_zero"]


RECORDS = load("upp_parity.json")["records"]


@pytest.mark.parametrize("rec", RECORDS)
def test_parity_corpus(rec):
    rep = parity_invariant(rec["deg_L"], rec["minus_one_points"], rec.get("deg_W1"), rec.get("deg_W2"))
    assert rep["status"] == "pass"
    assert (rec["deg_L"] - rec["minus_one_points"]) % 2 == 0
    assert parity_invariant(rec["deg_L"] + 1, rec["minus_one_points"])["status"] == "fail"
    if "deg_W1" in rec:
        assert rep["toledo"] == rec["deg_W1"] - rec["deg_W2"]


def test_parity_rejects_negative_count():
    with pytest.raises(ValueError):
        parity_invariant(0, -1)
