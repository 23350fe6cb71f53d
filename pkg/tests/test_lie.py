from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from conftest import small_rationals, sym_matrix
from higgs_spectral.exact.matrix import Matrix
from higgs_spectral.lie import (AlgebraDescriptor, CMat, ad_matrix, basis_size_table, bracket, classify_gram,
                                inertia, jacobi_defect, killing, standard_basis, standard_cartan,
                                structure_constants)

SMALL = [("gl", 2), ("sl", 2), ("sl", 3), ("so_odd", 1), ("so_odd", 2), ("so_even", 2), ("so_even", 3),
         ("sp", 1), ("sp", 2)]


def _in_algebra(d: AlgebraDescriptor, x: Matrix) -> bool:
    n = d.n
    if d.family == "gl":
        return True
    if d.family == "sl":
        return x.trace() == 0
    if d.family in ("so_odd", "so_even"):
        return x.T == -x
    j = Matrix.from_rows([[int(c == r + n) - int(r == c + n) for c in range(2 * n)] for r in range(2 * n)])
    return (x.T @ j + j @ x).is_zero()


def _killing_by_trace(d: AlgebraDescriptor, x: Matrix, y: Matrix) -> Fraction:
    # textbook multiples of the trace form
    N = d.size
    t = (x @ y).trace()
    return {"gl": 2 * N * t - 2 * x.trace() * y.trace(), "sl": 2 * N * t,
            "so_odd": (N - 2) * t, "so_even": (N - 2) * t, "sp": (N + 2) * t}[d.family]


@st.composite
def elements(draw, d):
    basis = standard_basis(d)
    return basis.combine([draw(small_rationals) for _ in range(basis.dimension)])


@pytest.mark.parametrize("family, n", SMALL)
def test_basis_spans_the_algebra(family, n):
    d = AlgebraDescriptor(family, n)
    basis = standard_basis(d)
    assert basis.dimension == d.dimension
    assert all(_in_algebra(d, b) for b in basis.elements)
    flat = sp.Matrix([[e for e in b.entries] for b in basis.elements])
    assert flat.rank() == d.dimension


def test_dimension_table():
    table = basis_size_table(max_n=6)
    for (family, n), dim in table.items():
        N = AlgebraDescriptor(family, n).size
        expected = {"gl": N * N, "sl": N * N - 1, "so_odd": N * (N - 1) // 2,
                    "so_even": N * (N - 1) // 2, "sp": N * (N + 1) // 2}[family]
        assert dim == expected


@pytest.mark.parametrize("family, n", SMALL)
@given(data=st.data())
def test_bracket_closes_and_satisfies_jacobi(family, n, data):
    d = AlgebraDescriptor(family, n)
    x, y, z = (data.draw(elements(d)) for _ in range(3))
    assert standard_basis(d).contains(bracket(x, y))
    assert jacobi_defect(x, y, z).is_zero()
    assert bracket(x, y) == -bracket(y, x)


@pytest.mark.parametrize("family, n", SMALL + [("sl", 4), ("sp", 3), ("so_odd", 3)])
@given(data=st.data())
def test_killing_is_trace_multiple(family, n, data):
    d = AlgebraDescriptor(family, n)
    x, y = data.draw(elements(d)), data.draw(elements(d))
    assert killing(d, x, y) == _killing_by_trace(d, x, y)


@pytest.mark.parametrize("family, n", [("sl", 2), ("so_odd", 1), ("sp", 1)])
def test_killing_against_sympy_adjoint(family, n):
    # independent route: solve for ad-matrix columns with sympy, then take traces
    d = AlgebraDescriptor(family, n)
    basis = standard_basis(d)
    B = [sym_matrix(b) for b in basis.elements]
    cs = sp.symbols(f"c0:{len(B)}")

    def ad(x):
        cols = []
        for b in B:
            target = x * b - b * x
            comb = sum((c * e for c, e in zip(cs, B)), sp.zeros(*target.shape))
            sol = sp.solve(list(comb - target), cs, dict=True)[0]
            cols.append([sol.get(c, 0) for c in cs])
        return sp.Matrix(cols).T

    ads = [ad(b) for b in B]
    for i, bi in enumerate(basis.elements):
        for j, bj in enumerate(basis.elements):
            assert killing(d, bi, bj) == (ads[i] * ads[j]).trace()


def test_ad_matrix_is_a_representation():
    d = AlgebraDescriptor("sl", 3)
    basis = standard_basis(d)
    x, y = basis.elements[0], basis.elements[4]
    assert ad_matrix(bracket(x, y), basis) == ad_matrix(x, basis) @ ad_matrix(y, basis) - ad_matrix(y, basis) @ ad_matrix(x, basis)


def test_structure_constants_are_antisymmetric():
    sc = structure_constants(AlgebraDescriptor("sp", 2))
    for i, row in enumerate(sc):
        for j, entry in enumerate(row):
            assert dict(entry) == {k: -v for k, v in sc[j][i]}


@pytest.mark.parametrize("family, n", SMALL)
def test_cartan_subalgebra_is_abelian(family, n):
    d = AlgebraDescriptor(family, n)
    hs = standard_cartan(d)
    assert len(hs) == (d.size if family == "gl" else d.rank)
    assert all(bracket(a, b).is_zero() for a in hs for b in hs)
    assert all(standard_basis(d).contains(h) for h in hs)


@given(st.lists(st.lists(small_rationals, min_size=4, max_size=4), min_size=4, max_size=4))
def test_inertia_matches_sympy_eigenvalues(rows):
    sym = [[rows[i][j] + rows[j][i] for j in range(4)] for i in range(4)]
    pos, neg, zero = inertia(sym)
    eig = sp.Matrix([[sp.Rational(x.numerator, x.denominator) for x in r] for r in sym]).eigenvals()
    signs = {"p": 0, "n": 0, "z": 0}
    for lam, mult in eig.items():
        v = sp.re(sp.N(lam, 50))
        key = "z" if lam == 0 else ("p" if v > 0 else "n")
        signs[key] += mult
    assert (pos, neg, zero) == (signs["p"], signs["n"], signs["z"])


def test_classify_gram():
    assert classify_gram([[1, 0], [0, 2]]) == "positive"
    assert classify_gram([[-1, 0], [0, -2]]) == "negative"
    assert classify_gram([[0, 1], [1, 0]]) == "indefinite"
    assert classify_gram([[1, 1], [1, 1]]) == "degenerate"


def test_complex_matrices():
    x = CMat(Matrix.from_rows([[1, 2], [0, 1]]), Matrix.from_rows([[0, 1], [1, 0]]))
    assert x.star().star() == x
    assert x.times_i().times_i() == -x
    assert x.bracket(x).is_zero()


def test_descriptor_validation():
    with pytest.raises(ValueError):
        AlgebraDescriptor("sl", 1)
    with pytest.raises(ValueError):
        AlgebraDescriptor("e8", 1)
    assert AlgebraDescriptor("so_even", 3).label() == "so(6)"
