"""Classical matrix Lie algebras: bases, adjoint action, Killing form.

Elements are ``Matrix`` objects with rational entries.  Internally the
bracket works on sparse dicts ``{(i, j): Fraction}``, which keeps the
Killing form of sl(6) or sp(6) cheap.  Complexified elements are pairs of
real matrices (``CMat``), so everything stays rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .exact.matrix import Matrix, rat_matrix

FAMILIES = ("gl", "sl", "so_odd", "so_even", "sp")

Sparse = dict  # {(i, j): Fraction}


@dataclass(frozen=True)
class AlgebraDescriptor:
    family: str
    n: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError("parameter n must be a positive integer")
        if self.family == "sl" and self.n < 2:
            raise ValueError("sl(n) needs n >= 2")

    @property
    def size(self) -> int:
        """Matrix size of the defining representation."""
        return {"gl": self.n, "sl": self.n, "so_odd": 2 * self.n + 1,
                "so_even": 2 * self.n, "sp": 2 * self.n}[self.family]

    @property
    def dimension(self) -> int:
        n = self.n
        return {"gl": n * n, "sl": n * n - 1, "so_odd": n * (2 * n + 1),
                "so_even": n * (2 * n - 1), "sp": n * (2 * n + 1)}[self.family]

    @property
    def rank(self) -> int:
        return self.n - 1 if self.family == "sl" else self.n

    def label(self) -> str:
        names = {"gl": "gl({})", "sl": "sl({})", "so_odd": "so({})", "so_even": "so({})", "sp": "sp({})"}
        return names[self.family].format(self.size)

    def to_json(self) -> dict:
        return {"family": self.family, "n": self.n}


# -- sparse helpers ----------------------------------------------------

def to_sparse(m: Matrix) -> Sparse:
    return {(i, j): m[i, j] for i in range(m.rows) for j in range(m.cols) if m[i, j]}


def from_sparse(s: Sparse, size: int) -> Matrix:
    return Matrix(size, size, tuple(s.get((i, j), Fraction(0)) for i in range(size) for j in range(size)))


def sparse_mul(a: Sparse, b: Sparse) -> Sparse:
    by_row: dict[int, list] = {}
    for (k, j), v in b.items():
        by_row.setdefault(k, []).append((j, v))
    out: Sparse = {}
    for (i, k), x in a.items():
        for j, y in by_row.get(k, ()):
            key = (i, j)
            out[key] = out.get(key, 0) + x * y
    return {k: v for k, v in out.items() if v}


def sparse_add(a: Sparse, b: Sparse, scale=1) -> Sparse:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + scale * v
    return {k: v for k, v in out.items() if v}


def sparse_bracket(a: Sparse, b: Sparse) -> Sparse:
    return sparse_add(sparse_mul(a, b), sparse_mul(b, a), -1)


def bracket(x: Matrix, y: Matrix) -> Matrix:
    return x @ y - y @ x


# -- bases ---------------------------------------------------------------

def _e(i: int, j: int, c=1) -> Sparse:
    return {(i, j): Fraction(c)}


def _sparse_basis(d: AlgebraDescriptor) -> list[Sparse]:
    n, N = d.n, d.size
    out: list[Sparse] = []
    if d.family in ("gl", "sl"):
        for i in range(N):
            for j in range(N):
                if i != j:
                    out.append(_e(i, j))
        if d.family == "gl":
            out.extend(_e(i, i) for i in range(N))
        else:
            out.extend({(i, i): Fraction(1), (i + 1, i + 1): Fraction(-1)} for i in range(N - 1))
    elif d.family in ("so_odd", "so_even"):
        for i in range(N):
            for j in range(i + 1, N):
                out.append({(i, j): Fraction(1), (j, i): Fraction(-1)})
    else:  # sp: [[A, B], [C, -A^t]] with B, C symmetric
        for i in range(n):
            for j in range(n):
                out.append(sparse_add(_e(i, j), _e(n + j, n + i), -1))
        for i in range(n):
            for j in range(i, n):
                out.append(_e(i, n + i) if i == j else sparse_add(_e(i, n + j), _e(j, n + i)))
        for i in range(n):
            for j in range(i, n):
                out.append(_e(n + i, i) if i == j else sparse_add(_e(n + i, j), _e(n + j, i)))
    return out


@dataclass(frozen=True)
class AlgebraBasis:
    descriptor: AlgebraDescriptor
    elements: tuple[Matrix, ...]

    @property
    def dimension(self) -> int:
        return len(self.elements)

    def coordinates(self, x: Matrix) -> list[Fraction]:
        return _coordinates(self.descriptor, to_sparse(x))

    def combine(self, coords: Sequence) -> Matrix:
        return from_sparse(_combine(self.descriptor, coords), self.descriptor.size)

    def contains(self, x: Matrix) -> bool:
        try:
            self.coordinates(x)
        except ValueError:
            return False
        return True


@lru_cache(maxsize=None)
def _basis_cached(d: AlgebraDescriptor) -> tuple[Sparse, ...]:
    return tuple(_sparse_basis(d))


@lru_cache(maxsize=None)
def _coordinate_map(d: AlgebraDescriptor) -> tuple[tuple, tuple]:
    """Pivot positions P and the inverse of the basis restricted to P.

    Returns (positions, rows) where coordinate k of X is
    sum_p rows[k][p] * X[positions[p]].
    """
    basis = _basis_cached(d)
    dim = len(basis)
    positions = sorted({pos for b in basis for pos in b})
    # Column pivots of the dim x |positions| entry matrix pick out positions
    # on which the basis restricts to an invertible square matrix.
    rows = [[b.get(p, Fraction(0)) for p in positions] for b in basis]
    width = len(positions)
    pivots = []
    r = 0
    for c in range(width):
        piv = next((i for i in range(r, dim) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(r + 1, dim):
            if rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == dim:
            break
    if r != dim:
        raise AssertionError("basis is linearly dependent")
    piv_pos = tuple(positions[c] for c in pivots)
    sub = [[b.get(p, Fraction(0)) for p in piv_pos] for b in basis]  # dim x dim, row k = basis k
    # x^T * sub = X|piv  ->  x = (sub^T)^{-1} X|piv
    st = [[sub[k][p] for k in range(dim)] for p in range(dim)]
    aug = [st[i] + [Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
    for c in range(dim):
        piv = next(i for i in range(c, dim) if aug[i][c])
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(dim):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
    inverse = tuple(tuple(row[dim:]) for row in aug)
    sparse_inverse = tuple(tuple((p, v) for p, v in enumerate(row) if v) for row in inverse)
    return piv_pos, sparse_inverse


def _combine(d: AlgebraDescriptor, coords: Sequence) -> Sparse:
    out: Sparse = {}
    for c, b in zip(coords, _basis_cached(d)):
        if c:
            for k, v in b.items():
                out[k] = out.get(k, 0) + c * v
    return {k: v for k, v in out.items() if v}


def _coordinates(d: AlgebraDescriptor, x: Sparse) -> list[Fraction]:
    if any(i >= d.size or j >= d.size for i, j in x):
        raise ValueError("element outside algebra")
    positions, inverse = _coordinate_map(d)
    vals = [x.get(p, Fraction(0)) for p in positions]
    coords = [sum((v * vals[p] for p, v in row), Fraction(0)) for row in inverse]
    if _combine(d, coords) != {k: v for k, v in x.items() if v}:
        raise ValueError("element outside algebra")
    return coords


@lru_cache(maxsize=None)
def standard_basis(d: AlgebraDescriptor) -> AlgebraBasis:
    return AlgebraBasis(d, tuple(from_sparse(b, d.size) for b in _basis_cached(d)))


# -- adjoint representation and Killing form ----------------------------

@lru_cache(maxsize=None)
def structure_constants(d: AlgebraDescriptor) -> tuple[tuple[tuple[tuple[int, Fraction], ...], ...], ...]:
    """c[i][j] = sparse coordinates of [e_i, e_j]."""
    basis = _basis_cached(d)
    out = []
    for a in basis:
        row = []
        for b in basis:
            coords = _coordinates(d, sparse_bracket(a, b))
            row.append(tuple((k, v) for k, v in enumerate(coords) if v))
        out.append(tuple(row))
    return tuple(out)


def _ad_from_coords(d: AlgebraDescriptor, coords: Sequence) -> list[list[Fraction]]:
    sc = structure_constants(d)
    dim = len(sc)
    ad = [[Fraction(0)] * dim for _ in range(dim)]
    for i, c in enumerate(coords):
        if not c:
            continue
        for j in range(dim):
            for k, v in sc[i][j]:
                ad[k][j] += c * v
    return ad


def ad_matrix(x: Matrix, basis: AlgebraBasis) -> Matrix:
    """Matrix of ad X in the basis: column j holds the coordinates of [X, e_j]."""
    coords = basis.coordinates(x)
    return rat_matrix(_ad_from_coords(basis.descriptor, coords))


@lru_cache(maxsize=None)
def _killing_entries(d: AlgebraDescriptor) -> tuple[tuple[Fraction, ...], ...]:
    sc = structure_constants(d)
    dim = len(sc)
    # ad e_i as {(k, j): v}
    ads = []
    for i in range(dim):
        entries = {}
        for j in range(dim):
            for k, v in sc[i][j]:
                entries[(k, j)] = v
        ads.append(entries)
    by_row = []
    for a in ads:
        rows: dict[int, list] = {}
        for (k, j), v in a.items():
            rows.setdefault(k, []).append((j, v))
        by_row.append(rows)
    gram = [[Fraction(0)] * dim for _ in range(dim)]
    for i in range(dim):
        for j in range(i, dim):
            # Tr(ad_i ad_j) = sum_{k,l} ad_i[k][l] ad_j[l][k]
            bj = by_row[j]
            acc = Fraction(0)
            for (k, l), v in ads[i].items():
                for kk, w in bj.get(l, ()):
                    if kk == k:
                        acc += v * w
            gram[i][j] = gram[j][i] = acc
    return tuple(tuple(r) for r in gram)


@dataclass(frozen=True)
class BilinearFormMatrix:
    basis: AlgebraBasis
    gram: Matrix

    def value(self, x: Matrix, y: Matrix) -> Fraction:
        a = self.basis.coordinates(x)
        b = self.basis.coordinates(y)
        return _bilinear(self.gram, a, b)


def _bilinear(gram: Matrix, a: Sequence, b: Sequence):
    n = gram.rows
    acc = Fraction(0)
    for i in range(n):
        if not a[i]:
            continue
        for j in range(n):
            if b[j]:
                acc += a[i] * gram[i, j] * b[j]
    return acc


def killing_gram(basis: AlgebraBasis) -> BilinearFormMatrix:
    return BilinearFormMatrix(basis, rat_matrix(_killing_entries(basis.descriptor)))


def killing(d: AlgebraDescriptor, x: Matrix, y: Matrix) -> Fraction:
    b = standard_basis(d)
    return killing_gram(b).value(x, y)


# -- definiteness ------------------------------------------------------

def inertia(gram: Sequence[Sequence]) -> tuple[int, int, int]:
    """(positive, negative, zero) counts of a symmetric rational matrix.

    Exact congruence diagonalization with symmetric pivoting; when every
    diagonal entry vanishes we add row/column j to row/column i first.
    """
    a = [[Fraction(x) for x in row] for row in gram]
    n = len(a)
    for i in range(n):
        for j in range(n):
            if a[i][j] != a[j][i]:
                raise ValueError("form is not symmetric")
    pos = neg = 0
    active = list(range(n))
    while active:
        piv = next((i for i in active if a[i][i]), None)
        if piv is None:
            pair = next(((i, j) for i in active for j in active if i != j and a[i][j]), None)
            if pair is None:
                break
            i, j = pair
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            piv = i
        d = a[piv][piv]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(piv)
        for i in active:
            f = a[i][piv] / d
            if f:
                for k in active:
                    a[i][k] -= f * a[piv][k]
        for i in active:
            a[i][piv] = a[piv][i] = Fraction(0)
    return pos, neg, n - pos - neg


def classify_gram(gram: Sequence[Sequence]) -> str:
    if not gram:
        raise ValueError("empty subspace")
    pos, neg, zero = inertia(gram)
    if zero:
        return "degenerate"
    if neg == 0:
        return "positive"
    if pos == 0:
        return "negative"
    return "indefinite"


def definiteness(form: BilinearFormMatrix, subspace: Sequence) -> str:
    """Signature class of the form restricted to span(subspace).

    Elements may be real matrices or ``CMat`` complexified elements; in the
    latter case the complex-bilinear extension must be real on the span.
    """
    if not subspace:
        raise ValueError("empty subspace")
    vecs = [_complex_coords(form.basis, x) for x in subspace]
    gram = []
    for a in vecs:
        row = []
        for b in vecs:
            re, im = _complex_bilinear(form.gram, a, b)
            if im:
                raise ValueError("form is not real on this subspace")
            row.append(re)
        gram.append(row)
    _require_independent(vecs)
    return classify_gram(gram)


def _require_independent(vecs) -> None:
    from .exact.matrix import rank_rational

    flat = [list(re) + list(im) for re, im in vecs]
    if rank_rational(flat) != len(flat):
        raise ValueError("subspace elements are linearly dependent")


def _complex_coords(basis: AlgebraBasis, x) -> tuple[list, list]:
    if isinstance(x, CMat):
        return basis.coordinates(x.re), basis.coordinates(x.im)
    coords = basis.coordinates(x)
    return coords, [Fraction(0)] * len(coords)


def _complex_bilinear(gram: Matrix, a, b) -> tuple[Fraction, Fraction]:
    (ar, ai), (br, bi) = a, b
    re = _bilinear(gram, ar, br) - _bilinear(gram, ai, bi)
    im = _bilinear(gram, ar, bi) + _bilinear(gram, ai, br)
    return re, im


def standard_cartan(d: AlgebraDescriptor) -> list[Matrix]:
    N, n = d.size, d.n
    out: list[Sparse] = []
    if d.family == "sl":
        out = [{(i, i): Fraction(1), (i + 1, i + 1): Fraction(-1)} for i in range(N - 1)]
    elif d.family == "gl":
        out = [_e(i, i) for i in range(N)]
    elif d.family in ("so_odd", "so_even"):
        out = [{(2 * i, 2 * i + 1): Fraction(1), (2 * i + 1, 2 * i): Fraction(-1)} for i in range(n)]
    else:
        out = [{(i, i): Fraction(1), (n + i, n + i): Fraction(-1)} for i in range(n)]
    return [from_sparse(s, N) for s in out]


# -- complexified elements ------------------------------------------------

@dataclass(frozen=True)
class CMat:
    """re + i*im with rational matrices re, im."""

    re: Matrix
    im: Matrix

    @classmethod
    def real(cls, m: Matrix) -> "CMat":
        return cls(m, Matrix.zeros(m.rows, m.cols))

    @classmethod
    def imag(cls, m: Matrix) -> "CMat":
        return cls(Matrix.zeros(m.rows, m.cols), m)

    @classmethod
    def from_coords(cls, basis: AlgebraBasis, re: Sequence, im: Sequence) -> "CMat":
        return cls(basis.combine(re), basis.combine(im))

    def conj(self) -> "CMat":
        return CMat(self.re, -self.im)

    def transpose(self) -> "CMat":
        return CMat(self.re.T, self.im.T)

    def star(self) -> "CMat":
        return CMat(self.re.T, -self.im.T)

    def __add__(self, other: "CMat") -> "CMat":
        return CMat(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "CMat") -> "CMat":
        return CMat(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "CMat":
        return CMat(-self.re, -self.im)

    def times_i(self) -> "CMat":
        return CMat(-self.im, self.re)

    def __matmul__(self, other) -> "CMat":
        if isinstance(other, Matrix):
            other = CMat.real(other)
        return CMat(self.re @ other.re - self.im @ other.im, self.re @ other.im + self.im @ other.re)

    def __rmatmul__(self, other: Matrix) -> "CMat":
        return CMat.real(other) @ self

    def bracket(self, other: "CMat") -> "CMat":
        return self @ other - other @ self

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()


def jacobi_defect(x: Matrix, y: Matrix, z: Matrix) -> Matrix:
    return bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))


def parse_descriptor(family: str, n: int) -> AlgebraDescriptor:
    return AlgebraDescriptor(family, n)


def basis_size_table(families: Iterable[str] = FAMILIES, max_n: int = 6) -> dict:
    return {(f, n): standard_basis(AlgebraDescriptor(f, n)).dimension
            for f in families for n in range(1, max_n + 1) if not (f == "sl" and n < 2)}
