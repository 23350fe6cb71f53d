from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from conftest import ETA, small_rationals, sym_bi, sym_matrix
from higgs_spectral.exact.matrix import Matrix, char_poly, pfaffian
from higgs_spectral.exact.poly import BiSpectralPolynomial, UniPoly
from higgs_spectral.invariants import (GROUPS, GroupDescriptor, dimensions, invariant_degrees, moduli_dimension,
                                       pushforward_degree, section_space_dim, slope, template_higgs_field,
                                       toledo, validate_char_structure, validate_matrix)
from higgs_spectral.lie import AlgebraDescriptor, standard_basis

GRID = [(grp, n, g) for grp in GROUPS for n in range(1, 7) for g in range(2, 6)
        if not (grp in ("sl", "so_even") and n < 2)]


def _lie_dim(grp, n):
    N = {"gl": n, "sl": n, "sp": 2 * n, "so_odd": 2 * n + 1, "so_even": 2 * n}[grp]
    return {"gl": N * N, "sl": N * N - 1, "sp": N * (N + 1) // 2}.get(grp, N * (N - 1) // 2)


def test_known_degrees():
    assert invariant_degrees(GroupDescriptor("gl", 3)) == [1, 2, 3]
    assert invariant_degrees(GroupDescriptor("sl", 3)) == [2, 3]
    assert invariant_degrees(GroupDescriptor("sp", 2)) == [2, 4]
    assert invariant_degrees(GroupDescriptor("so_odd", 3)) == [2, 4, 6]
    assert invariant_degrees(GroupDescriptor("so_even", 4)) == [2, 4, 4, 6]


def test_riemann_roch():
    assert section_space_dim(0, 3) == 1
    assert section_space_dim(1, 3) == 3
    assert section_space_dim(2, 3) == 3 * 2
    with pytest.raises(ValueError):
        section_space_dim(2, 1)


@pytest.mark.parametrize("grp, n, g", GRID)
def test_base_is_half_of_moduli(grp, n, g):
    rep = dimensions(GroupDescriptor(grp, n), g)
    assert rep.passed
    assert 2 * rep.base_dim == rep.moduli_dim
    dim = _lie_dim(grp, n)
    if grp == "gl":
        assert rep.moduli_dim == 2 * n * n * (g - 1) + 2
    else:
        assert sum(2 * d - 1 for d in rep.degrees) == dim
        assert rep.base_dim == dim * (g - 1)


def test_sp4_genus_two_example():
    rep = dimensions(GroupDescriptor("sp", 2), 2).to_json()
    assert rep["degrees"] == [2, 4]
    assert (rep["base_dim"], rep["moduli_dim"], rep["half_dim_check"]) == (10, 20, "pass")


def test_gl_moduli_dimension():
    assert moduli_dimension(GroupDescriptor("gl", 2), 2) == 10


@st.composite
def algebra_element(draw, family, n):
    basis = standard_basis(AlgebraDescriptor(family, n))
    return basis.combine([draw(small_rationals) for _ in range(basis.dimension)])


@pytest.mark.parametrize("grp, n", [("sl", 2), ("sl", 3), ("sp", 1), ("sp", 2), ("so_odd", 1), ("so_odd", 2),
                                    ("so_even", 2), ("so_even", 3)])
@given(data=st.data())
def test_algebra_elements_have_patterned_char_poly(grp, n, data):
    x = data.draw(algebra_element(grp, n))
    rep = validate_matrix(GroupDescriptor(grp, n), x)
    assert rep["passed"], rep
    if grp == "so_even":
        # constant term is det = pf^2, checked against sympy
        pf = rep["pfaffian_up_to_sign"]
        assert pf * pf == UniPoly([Fraction(str(sym_matrix(x).det()))])
        assert abs(pfaffian(x)) == abs(pf[0])


def test_violations_are_rejected():
    p = BiSpectralPolynomial.from_ascending([UniPoly([0, 1]), UniPoly([1])])  # eta^2 + eta + w
    assert not validate_char_structure(GroupDescriptor("sl", 2), p)["passed"]
    assert not validate_char_structure(GroupDescriptor("sp", 1), p)["passed"]
    q = BiSpectralPolynomial.from_ascending([UniPoly([0, 1]), 0, 0, 0])  # eta^4 + w
    rep = validate_char_structure(GroupDescriptor("so_even", 2), q)
    assert rep["checks"] == {"odd_coefficients_vanish": True, "constant_term_square": False}
    with pytest.raises(ValueError):
        validate_char_structure(GroupDescriptor("sp", 2), p)


def test_so_odd_char_has_eta_factor():
    x = standard_basis(AlgebraDescriptor("so_odd", 1)).combine([1, 2, 3])
    p = char_poly(x)
    assert sp.rem(sym_bi(p), ETA, ETA) == 0
    assert validate_matrix(GroupDescriptor("so_odd", 1), x)["passed"]


def test_degree_bookkeeping():
    assert slope(3, 2) == Fraction(3, 2)
    # deg of direct image: deg L - (n^2 - n)(g - 1)
    assert pushforward_degree(5, 2, 2) == 3
    assert toledo(3, 1) == 2
    with pytest.raises(ValueError):
        slope(1, 0)


def test_template_field():
    m = template_higgs_field(UniPoly([0, 1]))
    assert char_poly(m) == BiSpectralPolynomial.from_ascending([UniPoly([0, -1]), 0])


def test_group_validation():
    with pytest.raises(ValueError):
        GroupDescriptor("sl", 1)
    with pytest.raises(ValueError):
        GroupDescriptor("e8", 2)
