import pytest
import sympy as sp
from hypothesis import assume, given, strategies as st

from conftest import ETA, W, poly_matrices, sym_bi, sym_matrix, sym_uni
from higgs_spectral.correspondence import (NOT_SMOOTH_WARNING, PRINCIPALITY_CAVEAT, FractionalIdeal, HiggsMatrix,
                                           Rank2Module, SpectralAlgebra, eigenline, fixed_point_check,
                                           ideal_sigma_test, pushforward_line, pushforward_rank2,
                                           sigma_basis_matrix, spectral_irreducibility)
from higgs_spectral.exact.matrix import Matrix, char_poly, det, discriminant
from higgs_spectral.exact.poly import BiPoly, UniPoly, squarefree
from higgs_spectral.parsing import parse_bipoly, spectral_from_input
from higgs_spectral.real_forms import real_form


def _alg(text):
    return SpectralAlgebra(spectral_from_input(text))


def _ideal(p, *gens):
    return FractionalIdeal(_alg(p), tuple(parse_bipoly(g) for g in gens))


def _w(*coeffs):
    return UniPoly(coeffs)


def test_free_module_gives_local_model():
    pf = pushforward_line(_ideal("eta^2 - w", "1"))
    assert pf.higgs.phi == Matrix.from_rows([[_w(), _w(0, 1)], [_w(1), _w()]])
    assert pf.warnings == []


def test_local_model_eigenline_is_free_module():
    alg = _alg("eta^2 - w")
    res = eigenline(Matrix.from_rows([[_w(), _w(0, 1)], [_w(1), _w()]]))
    assert res.ideal.same_module(FractionalIdeal(alg, (1,)))
    assert pushforward_line(res.ideal).higgs.phi == Matrix.from_rows([[_w(), _w(0, 1)], [_w(1), _w()]])


def test_eta_ideal_pushforward():
    pf = pushforward_line(_ideal("eta^2 - w", "eta"))
    assert pf.higgs.phi == Matrix.from_rows([[_w(), _w(1)], [_w(0, 1), _w()]])
    assert pushforward_line(eigenline(pf.higgs).ideal).higgs.phi == pf.higgs.phi


def _is_left_eigenvector(phi, vec, p):
    # r Phi = eta r in Q[w][eta]/(p), checked with sympy polynomial remainders
    r = [sym_bi(BiPoly(list(x))) for x in vec]
    m = sym_matrix(phi)
    n = len(r)
    for j in range(n):
        lhs = sum(r[i] * m[i, j] for i in range(n)) - ETA * r[j]
        if sp.rem(sp.expand(lhs), sym_bi(p), ETA) != 0:
            return False
    return True


@pytest.mark.parametrize("n", [2, 3])
@given(data=st.data())
def test_round_trip_preserves_char_and_is_idempotent(n, data):
    phi = data.draw(poly_matrices(n, max_degree=2, bound=2))
    assume(det(phi) != 0)
    h = HiggsMatrix.from_matrix(phi)
    d = discriminant(h.char)
    assume(not d.is_zero() and squarefree(d))
    line = eigenline(h)
    assert _is_left_eigenvector(h.phi, line.eigenvector, h.char)
    first = pushforward_line(line.ideal)
    assert first.higgs.char == h.char
    assert sp.expand(sym_bi(first.higgs.char) - sym_matrix(phi).charpoly(ETA).as_expr()) == 0
    second = pushforward_line(eigenline(first.higgs).ideal)
    assert second.higgs.phi == first.higgs.phi


def test_constant_field_with_split_spectrum():
    # p = eta^2 - 4 is reducible; the eigenline still has to be a line bundle
    res = eigenline(Matrix.from_rows([[_w(), _w(4)], [_w(1), _w()]]))
    pf = pushforward_line(res.ideal)
    assert pf.higgs.char == spectral_from_input("eta^2 - 4")
    assert spectral_irreducibility(pf.higgs.char)["status"] == "undetermined"


def test_non_reduced_spectrum_is_rejected():
    with pytest.raises(ValueError, match="non-reduced"):
        eigenline(Matrix.from_rows([[_w(0, 1), _w()], [_w(), _w(0, 1)]]))


def test_singular_curve_warns():
    I = _ideal("eta^2 - w^2*(w + 1)", "1")
    assert NOT_SMOOTH_WARNING in pushforward_line(I).warnings


def test_non_line_bundle_is_rejected():
    # on eta^2 = w^2 the ideal (eta - w) is the free Q[w]-module on eta - w: rank one, not two
    alg = _alg("eta^2 - w^2")
    I = FractionalIdeal(alg, (parse_bipoly("eta - w"),))
    with pytest.raises(ValueError, match="line bundle"):
        pushforward_line(I)


def test_rank_two_pushforward():
    alg = _alg("eta^2 - w")
    V = Rank2Module(alg, (FractionalIdeal(alg, (1,)), FractionalIdeal(alg, (parse_bipoly("eta"),))))
    h = pushforward_rank2(V)
    assert h.char == alg.p * alg.p
    assert h.phi.rows == 4


def _groebner_ideal(gens, p):
    return sp.groebner([sym_bi(parse_bipoly(g)) for g in gens] + [sym_bi(p)], ETA, W, order="lex")


def test_even_quartic_ideal_is_not_sigma_invariant():
    p = spectral_from_input("eta^4 + w*eta^2 + w^3")
    I = FractionalIdeal(SpectralAlgebra(p), (parse_bipoly("eta - w"), parse_bipoly("w^2")))
    rep = ideal_sigma_test(I)
    assert rep["classification"] == "neither"
    assert rep["caveats"] == [PRINCIPALITY_CAVEAT]
    # sympy oracle: reduced Groebner bases of I and sigma(I) differ
    G = _groebner_ideal(["eta - w", "w^2"], p)
    G_sigma = _groebner_ideal(["-eta - w", "w^2"], p)
    assert G.exprs != G_sigma.exprs
    # and our module equality agrees with ideal membership in sympy
    assert not G.contains(sym_bi(parse_bipoly("-eta - w")))
    assert I.contains(parse_bipoly("w^2*eta")) == G.contains(sym_bi(parse_bipoly("w^2*eta")))


def test_sigma_invariant_and_pairing_cases():
    rep = ideal_sigma_test(_ideal("eta^2 - w", "eta"))
    assert rep["classification"] == "invariant"
    rep = ideal_sigma_test(_ideal("eta^4 + w*eta^2 + w^3", "eta - 1"))
    assert rep["classification"] == "anti-invariant-pairing"
    alg = _alg("eta^2 - w")
    assert alg.multiplication_matrix(alg.eta()) @ sigma_basis_matrix(2) == \
        -(sigma_basis_matrix(2) @ alg.multiplication_matrix(alg.eta()))


def test_sigma_needs_symmetric_curve():
    with pytest.raises(ValueError, match="σ"):
        _ideal("eta^3 - w", "eta").sigma()


def test_algebra_norm_matches_sympy_resultant():
    alg = _alg("eta^3 + w*eta - w^2")
    a = alg.element(parse_bipoly("eta^2 + w"))
    from sympy.polys.subresultants_qq_zz import sylvester

    expected = sylvester(sym_bi(alg.p), sym_bi(parse_bipoly("eta^2 + w")), ETA, 1).det()
    assert sp.expand(sym_uni(alg.norm(a)) - expected) == 0


def test_fixed_points():
    su11 = real_form("SU(p,q)", p=1, q=1)
    phi = Matrix.from_rows([[_w(), _w(1, 0, 1)], [_w(0, 1), _w()]])
    assert fixed_point_check(su11, phi)["status"] == "pass"
    rep = fixed_point_check(su11, phi, Matrix.from_rows([[-1, 0], [0, 1]]))
    assert rep["status"] == "pass"
    assert fixed_point_check(su11, Matrix.identity(2))["status"] == "fail"
    sl2r = real_form("SL(n,R)", n=2)
    # f Phi = Phi^T f with f symmetric: the swap works for this off-diagonal field
    assert fixed_point_check(sl2r, phi, Matrix.from_rows([[0, 1], [1, 0]]))["status"] == "pass"
    assert fixed_point_check(sl2r, phi, Matrix.identity(2))["status"] == "fail"
    assert fixed_point_check(sl2r, Matrix.from_rows([[_w(1), _w(0, 1)], [_w(0, 1), _w(-1)]]))["status"] == "pass"


def test_compact_form_needs_zero_field():
    form = real_form("compact", family="sl", n=2)
    assert fixed_point_check(form, Matrix.zeros(2, 2))["status"] == "pass"
    assert fixed_point_check(form, Matrix.identity(2))["status"] == "fail"


def test_size_mismatch():
    with pytest.raises(ValueError):
        fixed_point_check(real_form("SU(p,q)", p=2, q=1), Matrix.identity(2))


def test_irreducibility_witness():
    assert spectral_irreducibility(spectral_from_input("eta^2 - w"))["status"] == "irreducible"


def test_eta_zero_divisor_keeps_char_and_warns():
    # det Phi = 0 puts eta | p; the eigenline is then only partially normalized
    from higgs_spectral.correspondence import NORMALIZATION_WARNING

    phi = Matrix.from_rows([[_w(), _w(-1, -1)], [_w(), _w(-1)]])
    line = eigenline(phi)
    assert NORMALIZATION_WARNING in line.warnings
    assert pushforward_line(line.ideal).higgs.char == char_poly(phi)
