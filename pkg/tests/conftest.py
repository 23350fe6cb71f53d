"""Shared helpers: conversion to sympy (the independent oracle) and strategies."""

from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import settings, strategies as st

from higgs_spectral.exact.matrix import Matrix
from higgs_spectral.exact.poly import BiPoly, BiSpectralPolynomial, UniPoly

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

W, ETA = sp.symbols("w eta")


def sym_uni(p: UniPoly, var=W):
    return sp.Add(*[sp.Rational(c.numerator, c.denominator) * var**k for k, c in enumerate(p.coeffs)])


def sym_bi(p):
    if isinstance(p, BiSpectralPolynomial):
        p = p.to_bipoly()
    return sp.expand(sp.Add(*[sym_uni(c) * ETA**k for k, c in enumerate(p.coeffs)]))


def from_sym_uni(expr) -> UniPoly:
    poly = sp.Poly(sp.expand(expr), W)
    coeffs = [Fraction(int(sp.fraction(c)[0]), int(sp.fraction(c)[1])) for c in reversed(poly.all_coeffs())]
    return UniPoly(coeffs)


def sym_matrix(m: Matrix):
    def conv(e):
        if isinstance(e, UniPoly):
            return sym_uni(e)
        return sp.Rational(e.numerator, e.denominator)

    return sp.Matrix([[conv(e) for e in row] for row in m.to_rows()])


small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def unipolys(draw, max_degree=4, coeffs=small_rationals):
    return UniPoly(draw(st.lists(coeffs, max_size=max_degree + 1)))


@st.composite
def int_unipolys(draw, max_degree=3, bound=3):
    return UniPoly(draw(st.lists(st.integers(-bound, bound), max_size=max_degree + 1)))


@st.composite
def poly_matrices(draw, n, max_degree=2, bound=3):
    return Matrix.from_rows([[draw(int_unipolys(max_degree, bound)) for _ in range(n)] for _ in range(n)])


@st.composite
def rat_matrices(draw, n, m=None):
    m = m or n
    return Matrix.from_rows([[draw(small_rationals) for _ in range(m)] for _ in range(n)])


@st.composite
def skew_matrices(draw, n, max_degree=1):
    rows = [[UniPoly() for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            e = draw(int_unipolys(max_degree, 3))
            rows[i][j], rows[j][i] = e, -e
    return Matrix.from_rows(rows)


@st.composite
def spectral_polys(draw, max_n=4, max_degree=3):
    n = draw(st.integers(1, max_n))
    return BiSpectralPolynomial.from_ascending([draw(int_unipolys(max_degree, 3)) for _ in range(n)])


# -- acceptance summary ----------------------------------------------------------

ACCEPTANCE_KEY = pytest.StashKey[list]()


@pytest.fixture
def acceptance_log(request):
    """Append (number, title, passed, detail) rows; printed once at the end of the run."""
    return request.config.stash.setdefault(ACCEPTANCE_KEY, [])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    rows = config.stash.get(ACCEPTANCE_KEY, [])
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, detail in sorted(rows):
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {number:>2}. {title}: {detail}")
