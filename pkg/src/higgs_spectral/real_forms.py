"""Real forms of the classical complex Lie algebras as explicit involutions.

Every real form is given by a pair of commuting antilinear involutions
(rho, tau) of the complexified algebra g^c: rho fixes the compact form u,
tau fixes the real form g, and sigma = rho tau is the holomorphic
involution.  We realise g^c as a real vector space of twice the complex
dimension, with coordinates (real part, imaginary part) in the standard
basis, so each involution becomes a rational matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .exact.matrix import Matrix, nullspace_rational, rank_rational
from .lie import (
    AlgebraDescriptor,
    CMat,
    _basis_cached,
    _coordinates,
    _killing_entries,
    from_sparse,
    sparse_mul,
    to_sparse,
    classify_gram,
    standard_basis,
    structure_constants,
)

ROW_NAMES = (
    "SL(n,R)",
    "SU*(2m)",
    "SU(p,q)",
    "SO(p,q)_odd",
    "Sp(2n,R)",
    "Sp(2p,2q)",
    "SO(p,q)_even",
    "SO*(2m)",
    "compact",
)

INVOLUTIONS = ("rho", "tau", "theta", "sigma")
ANTILINEAR = {"rho": True, "tau": True, "theta": False, "sigma": False}


# -- the matrices I_{p,q}, J_n, K_{p,q} -------------------------------------

def standard_matrix(kind: str, *params: int) -> Matrix:
    if kind == "I_pq":
        p, q = params
        if p < 1 or q < 1:
            raise ValueError("I_pq needs p, q >= 1")
        return Matrix.diag([-1] * p + [1] * q)
    if kind == "J_n":
        (n,) = params
        if n < 1:
            raise ValueError("J_n needs n >= 1")
        rows = [[0] * (2 * n) for _ in range(2 * n)]
        for i in range(n):
            rows[i][n + i] = 1
            rows[n + i][i] = -1
        return Matrix.from_rows(rows)
    if kind == "K_pq":
        p, q = params
        if p < 1 or q < 1:
            raise ValueError("K_pq needs p, q >= 1")
        return Matrix.diag(([-1] * p + [1] * q) * 2)
    raise ValueError(f"unknown standard matrix {kind!r}")


def _j_inverse(j: Matrix) -> Matrix:
    return -j  # J^2 = -I


# -- descriptors -------------------------------------------------------------

@dataclass(frozen=True)
class RealFormDescriptor:
    name: str
    params: tuple[tuple[str, int], ...]
    complex_parent: AlgebraDescriptor = field(compare=False)

    def param(self, key: str) -> int:
        return dict(self.params)[key]

    def label(self) -> str:
        ps = dict(self.params)
        if self.name == "compact":
            return f"compact form of {self.complex_parent.label()}"
        if self.name == "SL(n,R)":
            return f"SL({ps['n']},R)"
        if self.name in ("SU*(2m)", "SO*(2m)"):
            return self.name.replace("2m", str(2 * ps["m"]))
        if self.name == "Sp(2n,R)":
            return f"Sp({2 * ps['n']},R)"
        if self.name == "Sp(2p,2q)":
            return f"Sp({2 * ps['p']},{2 * ps['q']})"
        base = self.name.split("_")[0]
        return base.replace("(p,q)", f"({ps['p']},{ps['q']})")

    def to_json(self) -> dict:
        return {"name": self.name, "params": dict(self.params), "parent": self.complex_parent.to_json()}


def real_form(name: str, **params: int) -> RealFormDescriptor:
    """Validate parameters and attach the complex parent algebra."""
    if name not in ROW_NAMES:
        raise ValueError(f"unknown real form {name!r}; expected one of {', '.join(ROW_NAMES)}")
    for k, v in params.items():
        if k != "family" and (not isinstance(v, int) or isinstance(v, bool)):
            raise ValueError(f"parameter {k} must be an integer")

    def need(*keys: str) -> list[int]:
        missing = [k for k in keys if k not in params]
        extra = [k for k in params if k not in keys]
        if missing or extra:
            raise ValueError(f"{name} takes parameters {', '.join(keys)}")
        return [params[k] for k in keys]

    if name == "SL(n,R)":
        (n,) = need("n")
        if n < 2:
            raise ValueError("SL(n,R) needs n >= 2")
        parent = AlgebraDescriptor("sl", n)
    elif name == "SU*(2m)":
        (m,) = need("m")
        if m < 1:
            raise ValueError("SU*(2m) needs m >= 1")
        parent = AlgebraDescriptor("sl", 2 * m)
    elif name == "SU(p,q)":
        p, q = need("p", "q")
        if p < 1 or q < 1:
            raise ValueError("SU(p,q) needs p, q >= 1")
        parent = AlgebraDescriptor("sl", p + q)
    elif name == "SO(p,q)_odd":
        p, q = need("p", "q")
        if p < 1 or q < 1 or (p + q) % 2 == 0:
            raise ValueError("SO(p,q)_odd needs p, q >= 1 with p + q odd")
        parent = AlgebraDescriptor("so_odd", (p + q - 1) // 2)
    elif name == "Sp(2n,R)":
        (n,) = need("n")
        if n < 1:
            raise ValueError("Sp(2n,R) needs n >= 1")
        parent = AlgebraDescriptor("sp", n)
    elif name == "Sp(2p,2q)":
        p, q = need("p", "q")
        if p < 1 or q < 1:
            raise ValueError("Sp(2p,2q) needs p, q >= 1")
        parent = AlgebraDescriptor("sp", p + q)
    elif name == "SO(p,q)_even":
        p, q = need("p", "q")
        if p < 1 or q < 1 or (p + q) % 2:
            raise ValueError("SO(p,q)_even needs p, q >= 1 with p + q even")
        parent = AlgebraDescriptor("so_even", (p + q) // 2)
    elif name == "SO*(2m)":
        (m,) = need("m")
        if m < 1:
            raise ValueError("SO*(2m) needs m >= 1")
        parent = AlgebraDescriptor("so_even", m)
    else:
        family, n = need("family", "n")
        if family == "gl":
            raise ValueError("gl is not semisimple; use sl")
        parent = AlgebraDescriptor(family, n)
        return RealFormDescriptor(name, (("family", family), ("n", n)), parent)
    return RealFormDescriptor(name, tuple(sorted(params.items())), parent)


def all_rows(max_size: int = 6) -> list[RealFormDescriptor]:
    """Every row with defining-representation size at most ``max_size``."""
    out = []
    for n in range(2, max_size + 1):
        out.append(real_form("SL(n,R)", n=n))
    for m in range(1, max_size // 2 + 1):
        out.append(real_form("SU*(2m)", m=m))
    for p in range(1, max_size):
        for q in range(1, max_size - p + 1):
            out.append(real_form("SU(p,q)", p=p, q=q))
            if (p + q) % 2:
                out.append(real_form("SO(p,q)_odd", p=p, q=q))
            else:
                out.append(real_form("SO(p,q)_even", p=p, q=q))
    for n in range(1, max_size // 2 + 1):
        out.append(real_form("Sp(2n,R)", n=n))
        out.append(real_form("SO*(2m)", m=n))
    for p in range(1, max_size // 2):
        for q in range(1, max_size // 2 - p + 1):
            out.append(real_form("Sp(2p,2q)", p=p, q=q))
    for n in range(2, max_size + 1):
        out.append(real_form("compact", family="sl", n=n))
    for n in range(1, (max_size - 1) // 2 + 1):
        out.append(real_form("compact", family="so_odd", n=n))
    for n in range(1, max_size // 2 + 1):
        out.append(real_form("compact", family="sp", n=n))
        out.append(real_form("compact", family="so_even", n=n))
    return out


# -- involutions on complexified matrices -----------------------------------

# A complexified element is handled as a pair of sparse dicts (re, im).
SPair = tuple


def _sp_conj(x: SPair) -> SPair:
    return x[0], {k: -v for k, v in x[1].items()}


def _sp_transpose(x: SPair) -> SPair:
    return tuple({(j, i): v for (i, j), v in part.items()} for part in x)


def _sp_star(x: SPair) -> SPair:
    return _sp_transpose(_sp_conj(x))


def _sp_neg(x: SPair) -> SPair:
    return tuple({k: -v for k, v in part.items()} for part in x)


def _conj_by(a: Matrix, a_inv: Matrix) -> Callable[[SPair], SPair]:
    sa, sai = to_sparse(a), to_sparse(a_inv)
    return lambda x: tuple(sparse_mul(sparse_mul(sa, part), sai) for part in x)


def _rho(d: AlgebraDescriptor) -> Callable[[SPair], SPair]:
    if d.family == "sl":
        return lambda x: _sp_neg(_sp_star(x))
    if d.family in ("so_odd", "so_even"):
        return _sp_conj
    j = standard_matrix("J_n", d.n)
    by_j = _conj_by(j, _j_inverse(j))
    return lambda x: by_j(_sp_conj(x))


def _involution_fn(form: RealFormDescriptor, which: str) -> Callable[[SPair], SPair]:
    if which not in INVOLUTIONS:
        raise ValueError(f"unknown involution {which!r}")
    d = form.complex_parent
    rho = _rho(d)
    if which == "rho":
        return rho
    ps = dict(form.params)
    name = form.name
    if name in ("SU*(2m)", "SO*(2m)"):
        j = standard_matrix("J_n", ps["m"])
        by = _conj_by(j, _j_inverse(j))
    elif name == "Sp(2n,R)":
        j = standard_matrix("J_n", ps["n"])
        by = _conj_by(j, _j_inverse(j))
    elif name in ("SU(p,q)", "SO(p,q)_odd", "SO(p,q)_even"):
        i = standard_matrix("I_pq", ps["p"], ps["q"])
        by = _conj_by(i, i)
    elif name == "Sp(2p,2q)":
        k = standard_matrix("K_pq", ps["p"], ps["q"])
        by = _conj_by(k, k)
    if which in ("sigma", "theta"):
        if name == "compact":
            return lambda x: x
        if name == "SL(n,R)":
            return lambda x: _sp_neg(_sp_transpose(x))
        if name == "SU*(2m)":
            return lambda x: _sp_neg(by(_sp_transpose(x)))
        return by  # I_pq X I_pq, J X J^-1 or K X K
    # tau
    if name == "compact":
        return rho
    if name in ("SL(n,R)", "Sp(2n,R)"):
        return _sp_conj
    if name in ("SU*(2m)", "SO*(2m)", "SO(p,q)_odd", "SO(p,q)_even"):
        return lambda x: by(_sp_conj(x))
    if name in ("SU(p,q)", "Sp(2p,2q)"):
        return lambda x: _sp_neg(by(_sp_star(x)))
    raise AssertionError(name)


def apply_involution(form: RealFormDescriptor, which: str, x: CMat) -> CMat:
    """Table formula applied to a complexified element of the parent algebra."""
    basis = standard_basis(form.complex_parent)
    if not (basis.contains(x.re) and basis.contains(x.im)):
        raise ValueError("element outside algebra")
    size = form.complex_parent.size
    re, im = _involution_fn(form, which)((to_sparse(x.re), to_sparse(x.im)))
    y = CMat(from_sparse(re, size), from_sparse(im, size))
    if not (basis.contains(y.re) and basis.contains(y.im)):
        raise AssertionError(f"{which} left the parent algebra")
    return y


# -- matrices of the involutions on R^{2 dim} -------------------------------

Vec = list  # list[Fraction] of length 2*dim


def to_coords(d: AlgebraDescriptor, x: CMat) -> Vec:
    b = standard_basis(d)
    return b.coordinates(x.re) + b.coordinates(x.im)


def from_coords(d: AlgebraDescriptor, v: Sequence) -> CMat:
    b = standard_basis(d)
    dim = b.dimension
    return CMat(b.combine(v[:dim]), b.combine(v[dim:]))


@lru_cache(maxsize=None)
def involution_matrix(form: RealFormDescriptor, which: str) -> tuple[tuple[Fraction, ...], ...]:
    """Rows of the real-linear map on R^{2 dim}; column k is the image of basis vector k."""
    d = form.complex_parent
    b = standard_basis(d)
    dim = b.dimension
    fn = _involution_fn(form, which)
    basis = _basis_cached(d)
    cols = []
    for k in range(2 * dim):
        e = basis[k % dim]
        re, im = fn((e, {}) if k < dim else ({}, e))
        cols.append(_coordinates(d, re) + _coordinates(d, im))
    return tuple(tuple(cols[j][i] for j in range(2 * dim)) for i in range(2 * dim))


def _complex_structure(dim: int) -> SparseRows:
    # multiplication by i: (a, b) -> (-b, a)
    return [{dim + k: Fraction(-1)} for k in range(dim)] + [{k: Fraction(1)} for k in range(dim)]


# Linear maps on R^{2 dim} are stored as sparse rows: one {col: value} per row.
SparseRows = list


def _sparse(a: Sequence[Sequence]) -> SparseRows:
    return [{j: x for j, x in enumerate(r) if x} for r in a]


def _mm(a: SparseRows, b: SparseRows) -> SparseRows:
    out = []
    for r in a:
        acc: dict[int, Fraction] = {}
        for k, x in r.items():
            for j, y in b[k].items():
                acc[j] = acc.get(j, 0) + x * y
        out.append({j: v for j, v in acc.items() if v})
    return out


def _mv(a: SparseRows, v: Sequence) -> list[Fraction]:
    out = []
    for r in a:
        acc = 0
        for k, x in r.items():
            y = v[k]
            if y:
                acc += x * y
        out.append(Fraction(acc))
    return out


def _eye(n: int) -> SparseRows:
    return [{i: Fraction(1)} for i in range(n)]


def _neg(a: SparseRows) -> SparseRows:
    return [{j: -x for j, x in r.items()} for r in a]


def _shift(a: SparseRows, eps: int) -> list[list[Fraction]]:
    n = len(a)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i, r in enumerate(a):
        for j, x in r.items():
            rows[i][j] = x
        rows[i][i] -= eps
    return rows


# -- Killing form on the complexification -------------------------------------

def killing_complex(d: AlgebraDescriptor, u: Sequence, v: Sequence) -> tuple[Fraction, Fraction]:
    """(Re, Im) of the complex-bilinear Killing form on doubled coordinates."""
    gram = _killing_entries(d)
    dim = len(gram)
    ar, ai, br, bi = u[:dim], u[dim:], v[:dim], v[dim:]

    def bil(a, b):
        acc = Fraction(0)
        for i, x in enumerate(a):
            if x:
                row = gram[i]
                for j, y in enumerate(b):
                    if y and row[j]:
                        acc += x * row[j] * y
        return acc

    return bil(ar, br) - bil(ai, bi), bil(ar, bi) + bil(ai, br)


def complex_bracket(d: AlgebraDescriptor, u: Sequence, v: Sequence) -> Vec:
    """Doubled coordinates of [u, v] via the structure constants."""
    sc = structure_constants(d)
    dim = len(sc)
    ar, ai, br, bi = u[:dim], u[dim:], v[:dim], v[dim:]
    re = [Fraction(0)] * dim
    im = [Fraction(0)] * dim
    for i in range(dim):
        if not (ar[i] or ai[i]):
            continue
        for j in range(dim):
            if not (br[j] or bi[j]):
                continue
            rr = ar[i] * br[j] - ai[i] * bi[j]
            ii = ar[i] * bi[j] + ai[i] * br[j]
            for k, c in sc[i][j]:
                re[k] += rr * c
                im[k] += ii * c
    return re + im


def is_semisimple(d: AlgebraDescriptor) -> bool:
    return not (d.family == "gl" or (d.family == "so_even" and d.n == 1))


# -- verification ----------------------------------------------------------

@dataclass
class RowReport:
    form: RealFormDescriptor
    checks: dict[str, bool | None]
    notes: list[str]

    @property
    def passed(self) -> bool:
        return all(v is not False for v in self.checks.values())

    def to_json(self) -> dict:
        return {
            "form": self.form.to_json(),
            "label": self.form.label(),
            "checks": {k: ("n/a" if v is None else ("pass" if v else "fail")) for k, v in self.checks.items()},
            "passed": self.passed,
            "notes": list(self.notes),
        }


def _gram_on(d: AlgebraDescriptor, vecs: Sequence[Sequence], twist=None) -> tuple[list[list[Fraction]], bool]:
    """Real part of B(v_i, twist v_j); second value says the imaginary part vanished."""
    gram = _killing_entries(d)
    dim = len(gram)
    sparse_gram = [{j: x for j, x in enumerate(r) if x} for r in gram]

    def g_times(part):
        out = []
        for r in sparse_gram:
            acc = 0
            for j, x in r.items():
                if part[j]:
                    acc += x * part[j]
            out.append(acc)
        return out

    def dot(a, b):
        acc = 0
        for x, y in zip(a, b):
            if x and y:
                acc += x * y
        return acc

    images = [(_mv(twist, v) if twist is not None else v) for v in vecs]
    g_images = [(g_times(b[:dim]), g_times(b[dim:])) for b in images]
    out, real = [], True
    for a in vecs:
        ar, ai = a[:dim], a[dim:]
        row = []
        for gbr, gbi in g_images:
            re = dot(ar, gbr) - dot(ai, gbi)
            im = dot(ar, gbi) + dot(ai, gbr)
            real = real and not im
            row.append(Fraction(re))
        out.append(row)
    return out, real


def fixed_space(m: SparseRows, eps: int = 1) -> list[list[Fraction]]:
    return nullspace_rational(Matrix.from_rows(_shift(m, eps)))


def _rho_cartan_gram(d: AlgebraDescriptor, rho: SparseRows) -> list[list[Fraction]]:
    """-Re B(e_i, rho e_j) over the real basis of g^c."""
    gram = _killing_entries(d)
    dim = len(gram)
    n = 2 * dim
    out = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        # rho e_j is column j of rho
        col = {i: r[j] for i, r in enumerate(rho) if j in r}
        for i in range(n):
            acc = Fraction(0)
            ii = i % dim
            for k, c in col.items():
                kk = k % dim
                g = gram[ii][kk]
                if not g:
                    continue
                # Re of (i-part) x (k-part): imaginary times imaginary flips sign
                sign = -1 if (i >= dim and k >= dim) else (1 if (i < dim and k < dim) else 0)
                acc += sign * g * c
            out[i][j] = -acc
    return out


def verify_row(form: RealFormDescriptor) -> RowReport:
    d = form.complex_parent
    dim = d.dimension
    rho = _sparse(involution_matrix(form, "rho"))
    tau = _sparse(involution_matrix(form, "tau"))
    sig = _sparse(involution_matrix(form, "sigma"))
    eye = _eye(2 * dim)
    jc = _complex_structure(dim)
    checks: dict[str, bool | None] = {}
    notes: list[str] = []

    checks["rho_squared_identity"] = _mm(rho, rho) == eye
    checks["tau_squared_identity"] = _mm(tau, tau) == eye
    checks["sigma_squared_identity"] = _mm(sig, sig) == eye
    checks["sigma_equals_rho_tau"] = _mm(rho, tau) == sig
    checks["rho_tau_commute"] = _mm(rho, tau) == _mm(tau, rho)
    checks["rho_antilinear"] = _mm(rho, jc) == _neg(_mm(jc, rho))
    checks["tau_antilinear"] = _mm(tau, jc) == _neg(_mm(jc, tau))
    checks["sigma_linear"] = _mm(sig, jc) == _mm(jc, sig)
    checks["theta_preserves_compact_form"] = _mm(sig, rho) == _mm(rho, sig)

    u = fixed_space(rho)
    g = fixed_space(tau)
    checks["compact_form_dimension"] = len(u) == dim
    checks["real_form_dimension"] = len(g) == dim

    if not is_semisimple(d):
        for key in ("killing_compact_negative", "b_theta_positive_on_real_form",
                    "rho_cartan_on_complexification", "killing_h_negative"):
            checks[key] = None
        notes.append(f"{d.label()} is abelian, so Killing-form definiteness does not apply")
        return RowReport(form, checks, notes)

    gram_u, real_u = _gram_on(d, u)
    checks["killing_compact_negative"] = real_u and classify_gram(gram_u) == "negative"
    # B_theta(X, Y) = -B(X, theta Y) on the real form g, theta = sigma restricted to g
    gram_g, real_g = _gram_on(d, g, twist=sig)
    checks["b_theta_positive_on_real_form"] = real_g and classify_gram([[-x for x in r] for r in gram_g]) == "positive"
    # rho is a Cartan involution of g^c viewed as a real Lie algebra
    checks["rho_cartan_on_complexification"] = classify_gram(_rho_cartan_gram(d, rho)) == "positive"
    h = [list(v) for v in _eigenspace(form, 1, 1)]
    if h:
        gram_h, real_h = _gram_on(d, h)
        checks["killing_h_negative"] = real_h and classify_gram(gram_h) == "negative"
    else:
        checks["killing_h_negative"] = None
        notes.append("maximal compact subalgebra is zero")
    return RowReport(form, checks, notes)


@lru_cache(maxsize=None)
def _eigenspace(form: RealFormDescriptor, er: int, et: int) -> tuple[tuple[Fraction, ...], ...]:
    rho = _sparse(involution_matrix(form, "rho"))
    tau = _sparse(involution_matrix(form, "tau"))
    return tuple(tuple(v) for v in _simultaneous(rho, tau, er, et))


def _simultaneous(r: SparseRows, t: SparseRows, er: int, et: int) -> list[list[Fraction]]:
    return nullspace_rational(Matrix.from_rows(_shift(r, er) + _shift(t, et)))


# -- decomposition --------------------------------------------------------

SIGNS = {"h": (1, 1), "m": (-1, 1), "im": (1, -1), "ih": (-1, -1)}


@dataclass
class DecompositionReport:
    form: RealFormDescriptor
    spaces: dict[str, list[list[Fraction]]]
    checks: dict[str, bool]

    @property
    def dims(self) -> dict[str, int]:
        return {k: len(v) for k, v in self.spaces.items()}

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def elements(self, key: str) -> list[CMat]:
        return [from_coords(self.form.complex_parent, v) for v in self.spaces[key]]

    def to_json(self, verbose: bool = False) -> dict:
        out = {
            "form": self.form.to_json(),
            "label": self.form.label(),
            "dims": self.dims,
            "real_dimension_of_complexification": 2 * self.form.complex_parent.dimension,
            "checks": {k: "pass" if v else "fail" for k, v in self.checks.items()},
        }
        if verbose:
            out["bases"] = {k: [[str(x) for x in v] for v in vs] for k, vs in self.spaces.items()}
        return out


def _in_space(r, t, signs: tuple[int, int], v: Sequence) -> bool:
    er, et = signs
    return _mv(r, v) == [er * x for x in v] and _mv(t, v) == [et * x for x in v]


def cartan_decomposition(form: RealFormDescriptor) -> DecompositionReport:
    d = form.complex_parent
    dim = d.dimension
    rho = _sparse(involution_matrix(form, "rho"))
    tau = _sparse(involution_matrix(form, "tau"))
    sig = _sparse(involution_matrix(form, "sigma"))
    spaces = {k: [list(v) for v in _eigenspace(form, *s)] for k, s in SIGNS.items()}
    checks: dict[str, bool] = {}
    total = sum(len(v) for v in spaces.values())
    checks["dims_sum_to_real_dimension"] = total == 2 * dim
    checks["spaces_independent"] = rank_rational([v for vs in spaces.values() for v in vs]) == total

    def inclusion(a: str, b: str, target: str) -> bool:
        for x in spaces[a]:
            for y in spaces[b]:
                z = complex_bracket(d, x, y)
                if any(z) and not _in_space(rho, tau, SIGNS[target], z):
                    return False
        return True

    checks["bracket_h_h_in_h"] = inclusion("h", "h", "h")
    checks["bracket_h_m_in_m"] = inclusion("h", "m", "m")
    checks["bracket_m_m_in_h"] = inclusion("m", "m", "h")
    fixed = fixed_space(sig)
    h_ih = spaces["h"] + spaces["ih"]
    checks["sigma_fixed_equals_h_plus_ih"] = (
        len(fixed) == len(h_ih)
        and all(_mv(sig, v) == v for v in h_ih)
        and rank_rational(fixed + h_ih) == len(fixed)
    )
    checks["compact_form_is_h_plus_im"] = len(fixed_space(rho)) == len(spaces["h"]) + len(spaces["im"])
    checks["real_form_is_h_plus_m"] = len(fixed_space(tau)) == len(spaces["h"]) + len(spaces["m"])
    return DecompositionReport(form, spaces, checks)


def expected_compact_dim(form: RealFormDescriptor) -> int:
    """Closed-form dimension of the maximal compact subalgebra h."""
    ps = dict(form.params)
    name = form.name
    if name == "compact":
        return form.complex_parent.dimension
    if name == "SL(n,R)":
        n = ps["n"]
        return n * (n - 1) // 2
    if name == "SU*(2m)":
        m = ps["m"]
        return m * (2 * m + 1)
    if name == "SU(p,q)":
        p, q = ps["p"], ps["q"]
        return p * p + q * q - 1
    if name in ("SO(p,q)_odd", "SO(p,q)_even"):
        p, q = ps["p"], ps["q"]
        return p * (p - 1) // 2 + q * (q - 1) // 2
    if name == "Sp(2n,R)":
        return ps["n"] ** 2
    if name == "Sp(2p,2q)":
        p, q = ps["p"], ps["q"]
        return p * (2 * p + 1) + q * (2 * q + 1)
    if name == "SO*(2m)":
        return ps["m"] ** 2
    raise AssertionError(name)


def maximal_compact_dim(form: RealFormDescriptor) -> int:
    d = form.complex_parent
    value = len(_eigenspace(form, 1, 1))
    if value != expected_compact_dim(form):
        raise AssertionError(f"dim h = {value} disagrees with closed form for {form.label()} in {d.label()}")
    return value


def split_cartan(form: RealFormDescriptor) -> list[CMat]:
    """A tau-invariant Cartan subalgebra of a split real form, as elements of g."""
    from .lie import standard_cartan

    d = form.complex_parent
    if form.name in ("SL(n,R)", "Sp(2n,R)"):
        return [CMat.real(h) for h in standard_cartan(d)]
    if form.name in ("SO(p,q)_odd", "SO(p,q)_even"):
        p, q = form.param("p"), form.param("q")
        if abs(p - q) > 1:
            raise ValueError(f"{form.label()} is not split")
        size = d.size
        out = []
        for k in range(min(p, q)):
            rows = [[0] * size for _ in range(size)]
            rows[k][p + k] = 1
            rows[p + k][k] = -1
            out.append(CMat.imag(Matrix.from_rows(rows)))
        return out
    raise ValueError(f"{form.label()} is not a split real form")


def split_cartan_report(form: RealFormDescriptor) -> dict:
    d = form.complex_parent
    cartan = split_cartan(form)
    vecs = [to_coords(d, x) for x in cartan]
    tau = _sparse(involution_matrix(form, "tau"))
    commuting = all(complex_bracket(d, a, b) == [0] * len(a) for a in vecs for b in vecs)
    gram, real = _gram_on(d, vecs)
    return {
        "rank": len(cartan),
        "tau_invariant": all(_mv(tau, v) == v for v in vecs),
        "commuting": commuting,
        "independent": rank_rational(vecs) == len(vecs),
        "killing": classify_gram(gram) if real else "not real",
    }


def parse_real_form(name: str, params: dict) -> RealFormDescriptor:
    return real_form(name, **params)
