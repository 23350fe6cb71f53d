"""Line bundles on affine spectral curves versus Higgs fields on the base.

The spectral algebra is A = Q[w][eta]/(p).  An ideal I of A, viewed as a
Q[w]-module, is free of rank n; multiplication by eta in its Hermite basis
is the Higgs field.  Conversely the rows of adj(eta - Phi) are left
eigenvectors of Phi over A and recover the ideal.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .curves import affine_smoothness
from .exact.hermite import hermite_rows, module_coordinates
from .exact.matrix import Matrix, adjugate, as_poly_matrix, char_poly, det, inverse_rational, rank_rational
from .exact.poly import BiPoly, BiSpectralPolynomial, UniPoly, poly_gcd, to_fraction
from .real_forms import RealFormDescriptor, standard_matrix

Element = tuple  # tuple[UniPoly, ...] of length n, power-basis coordinates


class SpectralAlgebra:
    """A = Q[w][eta]/(p) with elements stored in the basis 1, eta, ..., eta^{n-1}."""

    def __init__(self, p: BiSpectralPolynomial):
        self.p = p
        self.n = p.n
        self._pb = p.to_bipoly()

    def __eq__(self, other) -> bool:
        return isinstance(other, SpectralAlgebra) and self.p == other.p

    def __hash__(self) -> int:
        return hash(self.p)

    def __repr__(self) -> str:
        return f"SpectralAlgebra({self.p.format()})"

    @cached_property
    def smoothness(self) -> dict:
        return affine_smoothness(self.p)

    @property
    def smooth(self) -> bool:
        return self.smoothness["smooth"]

    # -- elements ----------------------------------------------------
    def element(self, value) -> Element:
        """Reduce a BiPoly, UniPoly, scalar or coordinate sequence to an element."""
        if isinstance(value, tuple) and len(value) == self.n and all(isinstance(c, UniPoly) for c in value):
            return value
        if isinstance(value, (list, tuple)):
            value = BiPoly([UniPoly.coerce(c) if not isinstance(c, list) else UniPoly(c) for c in value])
        bp = BiPoly.coerce(value)
        _, r = bp.divmod_monic(self._pb)
        return tuple(r.coeff(k) for k in range(self.n))

    def to_bipoly(self, a: Element) -> BiPoly:
        return BiPoly(list(a))

    def one(self) -> Element:
        return self.element(1)

    def eta(self) -> Element:
        return self.element(BiPoly.eta())

    def mul(self, a: Element, b: Element) -> Element:
        return self.element(self.to_bipoly(a) * self.to_bipoly(b))

    def add(self, a: Element, b: Element) -> Element:
        return tuple(x + y for x, y in zip(a, b))

    def scale(self, a: Element, c) -> Element:
        return tuple(x * c for x in a)

    def eta_times(self, a: Element) -> Element:
        # shift, then fold eta^n = -(c_{n-1} eta^{n-1} + ... + c_0)
        top = a[-1]
        out = [UniPoly.zero()] + list(a[:-1])
        if top:
            for k in range(self.n):
                out[k] = out[k] - top * self.p.coefficient(k)
        return tuple(out)

    def is_zero(self, a: Element) -> bool:
        return all(c.is_zero() for c in a)

    def multiplication_matrix(self, a: Element) -> Matrix:
        """Columns are the coordinates of a * eta^j."""
        cols = []
        cur = a
        for _ in range(self.n):
            cols.append(cur)
            cur = self.eta_times(cur)
        return Matrix.from_rows([[cols[j][i] for j in range(self.n)] for i in range(self.n)])

    def norm(self, a: Element) -> UniPoly:
        return UniPoly.coerce(det(self.multiplication_matrix(a)))

    def format(self, a: Element) -> str:
        return self.to_bipoly(a).format()

    # -- sigma ---------------------------------------------------------
    @property
    def sigma_symmetric(self) -> bool:
        return self.p.is_sigma_symmetric()

    def sigma(self, a: Element) -> Element:
        if not self.sigma_symmetric:
            raise ValueError("σ undefined on this algebra")
        return tuple(c if k % 2 == 0 else -c for k, c in enumerate(a))


def sigma_on_algebra(algebra: SpectralAlgebra, a) -> Element:
    return algebra.sigma(algebra.element(a))


@dataclass
class FractionalIdeal:
    """Ideal of the spectral algebra generated by ``generators``.

    ``twist`` records the power of the pulled-back canonical bundle the
    global object carries (possibly half-integral); it is trivial on the
    affine chart and is kept only for reporting.
    """

    algebra: SpectralAlgebra
    generators: tuple
    twist: Fraction = Fraction(0)

    def __post_init__(self):
        gens = tuple(self.algebra.element(g) for g in self.generators)
        if not gens or all(self.algebra.is_zero(g) for g in gens):
            raise ValueError("ideal needs a nonzero generator")
        self.generators = gens
        self.twist = to_fraction(self.twist) if not isinstance(self.twist, Fraction) else self.twist

    def module_generators(self) -> list[Element]:
        """Q[w]-module generators: eta^j g for j < n (closed under eta by Cayley-Hamilton)."""
        out = []
        for g in self.generators:
            cur = g
            for _ in range(self.algebra.n):
                out.append(cur)
                cur = self.algebra.eta_times(cur)
        return out

    @cached_property
    def hermite(self) -> list[list[UniPoly]]:
        # Close under eta lazily: usually far fewer rows than module_generators().
        n = self.algebra.n
        rows = hermite_rows([list(g) for g in self.generators], n)
        while True:
            missing = []
            for b in rows:
                image = list(self.algebra.eta_times(tuple(b)))
                try:
                    module_coordinates(rows, image)
                except ValueError:
                    missing.append(image)
            if not missing:
                return rows
            rows = hermite_rows(rows + missing, n)

    def contains(self, a) -> bool:
        try:
            module_coordinates(self.hermite, list(self.algebra.element(a)))
        except ValueError:
            return False
        return True

    def same_module(self, other: "FractionalIdeal") -> bool:
        return self.algebra == other.algebra and self.hermite == other.hermite

    def sigma(self) -> "FractionalIdeal":
        return FractionalIdeal(self.algebra, tuple(self.algebra.sigma(g) for g in self.generators), self.twist)

    def product(self, other: "FractionalIdeal") -> "FractionalIdeal":
        gens = tuple(self.algebra.mul(a, b) for a in self.generators for b in other.generators)
        gens = tuple(g for g in gens if not self.algebra.is_zero(g)) or gens
        return FractionalIdeal(self.algebra, gens, self.twist + other.twist)

    def basis_elements(self) -> list[Element]:
        return [tuple(r) for r in self.hermite]


@dataclass(frozen=True)
class HiggsMatrix:
    phi: Matrix
    char: BiSpectralPolynomial

    @property
    def n(self) -> int:
        return self.phi.rows

    @classmethod
    def from_matrix(cls, phi: Matrix) -> "HiggsMatrix":
        phi = as_poly_matrix(phi)
        return cls(phi, char_poly(phi))


@dataclass
class PushforwardResult:
    higgs: HiggsMatrix
    basis: list[Element]
    warnings: list[str] = field(default_factory=list)


NOT_SMOOTH_WARNING = "spectral curve is not certified smooth on the affine chart; correspondence applied in warning mode"


def _eta_matrix(algebra: SpectralAlgebra, basis_rows: list[list[UniPoly]]) -> Matrix:
    n = algebra.n
    cols = [module_coordinates(basis_rows, list(algebra.eta_times(tuple(b)))) for b in basis_rows]
    return Matrix.from_rows([[cols[j][i] for j in range(n)] for i in range(n)])


def pushforward_line(I: FractionalIdeal, verify: bool = True) -> PushforwardResult:
    """Multiplication by eta on the Hermite basis of I.

    With ``verify`` the characteristic polynomial is recomputed and compared
    with p; skipping it is only for callers that check the matrix some other
    way (a rank n ideal always has characteristic polynomial p).
    """
    alg = I.algebra
    notes = []
    if not alg.smooth:
        notes.append(NOT_SMOOTH_WARNING)
    basis = I.hermite
    if len(basis) != alg.n:
        raise ValueError("not a line bundle model")
    phi = _eta_matrix(alg, basis)
    ch = char_poly(phi) if verify else alg.p
    if ch != alg.p:
        raise AssertionError("pushforward does not satisfy the characteristic equation")
    return PushforwardResult(HiggsMatrix(phi, ch), [tuple(b) for b in basis], notes)


@dataclass
class Rank2Module:
    algebra: SpectralAlgebra
    twist_ideals: tuple[FractionalIdeal, FractionalIdeal]

    def __post_init__(self):
        if any(i.algebra != self.algebra for i in self.twist_ideals):
            raise ValueError("both ideals must live over the same algebra")


def pushforward_rank2(V: Rank2Module) -> HiggsMatrix:
    blocks = [pushforward_line(i).higgs.phi for i in V.twist_ideals]
    phi = Matrix.block_diag(blocks)
    ch = char_poly(phi)
    if ch != V.algebra.p * V.algebra.p:
        raise AssertionError("rank two pushforward must have characteristic polynomial p^2")
    return HiggsMatrix(phi, ch)


# -- eigenline ------------------------------------------------------------

NORMALIZATION_WARNING = "eigenline left partially normalized (no regular last entry, or eta is a zero divisor)"


def _adjoint_inverse(algebra: SpectralAlgebra, u: Element) -> Element | None:
    """u' with u * u' = N(u) in Q[w], or None when u is a zero divisor."""
    if algebra.is_zero(u):
        return None
    mu = algebra.multiplication_matrix(u)
    n = algebra.n
    if n == 1:
        return None if UniPoly.coerce(mu[0, 0]).is_zero() else algebra.one()
    # first column of adj(mu) is the first row of cofactors; expanding along it gives N(u)
    cof = [UniPoly.coerce(det(mu.minor(0, i))) * (-1) ** i for i in range(n)]
    norm = UniPoly.zero()
    for i in range(n):
        norm = norm + UniPoly.coerce(mu[0, i]) * cof[i]
    return None if norm.is_zero() else tuple(cof)


def _row_combinations(rows: list[list[Element]], algebra: SpectralAlgebra):
    """Adjugate rows, then small integer combinations (all still left eigenvectors)."""
    yield from rows
    for coeffs in itertools.product((0, 1, -1, 2), repeat=len(rows)):
        if sum(1 for c in coeffs if c) < 2:
            continue
        combo = [tuple(UniPoly.zero() for _ in range(algebra.n)) for _ in rows[0]]
        for c, r in zip(coeffs, rows):
            if c:
                combo = [algebra.add(a, algebra.scale(x, c)) for a, x in zip(combo, r)]
        yield combo


def _content(vectors: Iterable[Sequence[UniPoly]]) -> UniPoly:
    g = UniPoly.zero()
    for v in vectors:
        for c in v:
            if c:
                g = poly_gcd(g, c)
                if g.degree == 0:
                    return g
    return g


def _clear_denominators(vectors: list[Element]) -> list[Element]:
    from math import lcm

    den = 1
    for v in vectors:
        for c in v:
            den = lcm(den, c.content_denominator())
    return [tuple(c * den for c in v) for v in vectors]


def eigenline_vector(phi: Matrix, algebra: SpectralAlgebra) -> tuple[list[Element], list[str]]:
    """A left eigenvector r of Phi over A (r Phi = eta r), normalized when possible.

    Normalization makes the last entry a polynomial multiple of eta^{n-1}:
    the Hermite basis of any ideal has that shape, so for Phi produced by
    ``pushforward_line`` this lands on that same Hermite basis.
    """
    n = algebra.n
    eta = BiPoly.eta()
    m = Matrix.from_rows([[(eta if i == j else BiPoly()) - BiPoly.coerce(phi[i, j]) for j in range(n)]
                          for i in range(n)])
    adj = adjugate(m)
    rows = [[algebra.element(adj[i, j]) for j in range(n)] for i in range(n)]
    notes: list[str] = []
    eta_el = algebra.eta()
    eta_power = algebra.one()
    for _ in range(n - 1):
        eta_power = algebra.mul(eta_power, eta_el)
    eta_regular = not algebra.norm(eta_el).is_zero()
    chosen = None
    # coordinate n-1 first: that is the one the normalization is built around
    for k in reversed(range(n)):
        for r in _row_combinations(rows, algebra):
            inverse = _adjoint_inverse(algebra, r[k])
            if inverse is None:
                continue
            lam = algebra.mul(eta_power, inverse) if k == n - 1 and eta_regular else inverse
            chosen = [algebra.mul(lam, x) for x in r]
            break
        if chosen is not None:
            if k != n - 1 or not eta_regular:
                notes.append(NORMALIZATION_WARNING)
            break
    if chosen is None:
        # every coordinate is a zero divisor (p splits into coprime factors):
        # take the first combination whose entries still span a rank n module
        notes.append(NORMALIZATION_WARNING)
        nonzero = [r for r in rows if not all(algebra.is_zero(x) for x in r)]
        chosen = next((r for r in _row_combinations(nonzero, algebra)
                       if not all(algebra.is_zero(x) for x in r)
                       and len(FractionalIdeal(algebra, tuple(r)).hermite) == n), nonzero[0])
    chosen = _clear_denominators(chosen)
    c = _content(chosen)
    chosen = [tuple(x.exact_div(c) for x in v) for v in chosen]
    return chosen, notes


@dataclass
class EigenlineResult:
    ideal: FractionalIdeal
    eigenvector: list[Element]
    warnings: list[str]


def eigenline(phi) -> EigenlineResult:
    h = phi if isinstance(phi, HiggsMatrix) else HiggsMatrix.from_matrix(phi)
    from .exact.matrix import discriminant

    if discriminant(h.char).is_zero():
        raise ValueError("non-reduced spectrum: eigenline undefined")
    algebra = SpectralAlgebra(h.char)
    vec, notes = eigenline_vector(h.phi, algebra)
    if not algebra.smooth:
        notes = [NOT_SMOOTH_WARNING] + notes
    return EigenlineResult(FractionalIdeal(algebra, tuple(vec)), vec, notes)


# -- sigma on ideals ------------------------------------------------------

PRINCIPALITY_CAVEAT = (
    "principality is searched among products of generators and their sigma-images; "
    "a miss does not prove non-principality"
)


def ideal_sigma_test(I: FractionalIdeal, max_products: int = 64) -> dict:
    alg = I.algebra
    sI = I.sigma()
    invariant = I.same_module(sI)
    product = I.product(sI)
    target = product.hermite
    candidates: list[Element] = []
    gens = list(I.generators)
    sgens = list(sI.generators)
    for a, b in itertools.product(gens, sgens):
        candidates.append(alg.mul(a, b))
    candidates.extend(gens)
    generator = None
    for cand in candidates[:max_products]:
        if alg.is_zero(cand):
            continue
        principal = FractionalIdeal(alg, (cand,))
        if principal.hermite == target:
            generator = cand
            break
    if invariant:
        classification = "invariant"
    elif generator is not None:
        classification = "anti-invariant-pairing"
    else:
        classification = "neither"
    out = {
        "classification": classification,
        "invariant": invariant,
        "pairing_generator": generator,
        "caveats": [] if generator is not None else [PRINCIPALITY_CAVEAT],
    }
    return out


def sigma_basis_matrix(n: int) -> Matrix:
    return Matrix.diag([(-1) ** k for k in range(n)])


# -- fixed-point predicates for real forms ---------------------------------

ANTI_FORMS = ("SU(p,q)", "SO(p,q)_odd", "SO(p,q)_even", "Sp(2n,R)", "Sp(2p,2q)", "SO*(2m)")


def _rat(m: Matrix) -> Matrix:
    return m.map(lambda e: e[0] if isinstance(e, UniPoly) and e.is_constant() else e)


def _as_poly(m: Matrix) -> Matrix:
    return m.map(UniPoly.coerce)


def _is_invertible(f: Matrix) -> bool:
    return det(f) != 0


def _eigen_dims(f: Matrix) -> tuple[int, int]:
    """(dim ker(f + I), dim ker(f - I))."""
    n = f.rows
    ident = Matrix.identity(n)
    minus = f + ident
    plus = f - ident
    return n - rank_rational(minus.to_rows()), n - rank_rational(plus.to_rows())


def fixed_point_conditions(form: RealFormDescriptor, phi: Matrix, f: Matrix) -> dict[str, bool]:
    n = phi.rows
    if f.shape != (n, n):
        raise ValueError("size mismatch between f and Phi")
    ident = Matrix.identity(n)
    pf = _as_poly(f)
    name = form.name
    conds: dict[str, bool] = {}
    if name == "compact":
        conds["phi_vanishes"] = phi.is_zero()
        return conds
    if name in ("SL(n,R)", "SU*(2m)"):
        if name == "SL(n,R)":
            conds["f_symmetric"] = f == f.T
        else:
            conds["f_skew"] = f == -f.T
        conds["f_invertible"] = _is_invertible(f)
        conds["f_phi_equals_phi_t_f"] = pf @ phi == phi.T @ pf
        return conds
    conds["f_invertible"] = _is_invertible(f)
    if not conds["f_invertible"]:
        return conds
    finv = _as_poly(inverse_rational(f))
    conds["f_phi_f_inverse_equals_minus_phi"] = pf @ phi @ finv == -phi
    if name in ("SU(p,q)", "SO(p,q)_odd", "SO(p,q)_even", "Sp(2p,2q)"):
        p, q = form.param("p"), form.param("q")
        conds["f_squared_identity"] = f @ f == ident
        neg, pos = _eigen_dims(f)
        if name == "Sp(2p,2q)":
            conds["signature"] = (neg, pos) == (2 * p, 2 * q)
            j = standard_matrix("J_n", p + q)
            conds["f_symplectic"] = f.T @ j @ f == j
        else:
            conds["signature"] = (neg, pos) == (p, q)
        if name.startswith("SO("):
            conds["f_orthogonal"] = f.T @ f == ident
    elif name == "Sp(2n,R)":
        j = standard_matrix("J_n", form.param("n"))
        conds["f_squared_identity"] = f @ f == ident
        conds["f_symplectic"] = f.T @ j @ f == j
    elif name == "SO*(2m)":
        conds["f_orthogonal"] = f.T @ f == ident
        conds["f_squared_minus_identity"] = f @ f == -ident
    return conds


def _signed_permutations(n: int):
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            rows = [[0] * n for _ in range(n)]
            for i, (j, s) in enumerate(zip(perm, signs)):
                rows[i][j] = s
            yield Matrix.from_rows(rows)


def _standard_candidates(form: RealFormDescriptor, n: int) -> list[Matrix]:
    out = []
    ps = dict(form.params)
    for p in range(1, n):
        out.append(standard_matrix("I_pq", p, n - p))
    if n % 2 == 0:
        out.append(standard_matrix("J_n", n // 2))
        out.append(-standard_matrix("J_n", n // 2))
        for p in range(1, n // 2):
            out.append(standard_matrix("K_pq", p, n // 2 - p))
    if "p" in ps and "q" in ps and ps["p"] + ps["q"] == n:
        out.insert(0, standard_matrix("I_pq", ps["p"], ps["q"]))
    return out


def _sigma_symmetric_char(ch: BiSpectralPolynomial) -> bool:
    return ch.is_sigma_symmetric()


def fixed_point_check(form: RealFormDescriptor, phi, candidate_f: Matrix | None = None,
                      max_search_size: int = 5) -> dict:
    h = phi if isinstance(phi, HiggsMatrix) else HiggsMatrix.from_matrix(phi)
    n = h.n
    if n != form.complex_parent.size:
        raise ValueError(f"Phi has size {n} but {form.label()} acts on size {form.complex_parent.size}")
    report: dict = {"form": form.label()}
    if candidate_f is not None:
        f = _rat(candidate_f)
        conds = fixed_point_conditions(form, h.phi, f)
        report.update(status="pass" if all(conds.values()) else "fail", f=f, conditions=conds, searched=0)
        return report
    if form.name in ANTI_FORMS and not _sigma_symmetric_char(h.char):
        report.update(status="fail", f=None, conditions={"char_sigma_symmetric": False}, searched=0,
                      reason="f Phi f^-1 = -Phi forces p(-eta) = +-p(eta), which fails")
        return report
    if form.name == "compact":
        conds = {"phi_vanishes": h.phi.is_zero()}
        report.update(status="pass" if conds["phi_vanishes"] else "fail", f=None, conditions=conds, searched=0)
        return report
    candidates: list[Matrix] = _standard_candidates(form, n)
    if n <= max_search_size:
        candidates = candidates + list(_signed_permutations(n))
    for count, f in enumerate(candidates, 1):
        conds = fixed_point_conditions(form, h.phi, f)
        if all(conds.values()):
            report.update(status="pass", f=f, conditions=conds, searched=count)
            return report
    report.update(status="undetermined", f=None, conditions={}, searched=len(candidates),
                  reason="no candidate among signed permutations and standard matrices")
    return report


def spectral_irreducibility(p: BiSpectralPolynomial, sample_points: Sequence[int] = tuple(range(-6, 7))) -> dict:
    """Certify irreducibility of p over Q(w) by one irreducible specialization."""
    from .exact.factor import is_irreducible

    if p.n == 1:
        return {"status": "irreducible", "witness_w": None}
    for w0 in sample_points:
        if is_irreducible(p.eval_w(w0)) is True:
            return {"status": "irreducible", "witness_w": Fraction(w0)}
    return {"status": "undetermined", "witness_w": None}
