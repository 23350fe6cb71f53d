"""Dense matrices over the exact rings of this package.

One ``Matrix`` class serves for rational matrices (``RatMat``), matrices over
Q[w] (``PolyMat``) and matrices over Q[w][eta]; the algorithms below only
need ring operations, plus exact division where noted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .poly import BiPoly, BiSpectralPolynomial, UniPoly, to_fraction


def ring_zero(sample):
    if isinstance(sample, BiPoly):
        return BiPoly()
    if isinstance(sample, UniPoly):
        return UniPoly.zero()
    return Fraction(0)


def ring_one(sample):
    if isinstance(sample, BiPoly):
        return BiPoly([1])
    if isinstance(sample, UniPoly):
        return UniPoly.one()
    return Fraction(1)


def _normalize(x):
    if isinstance(x, (UniPoly, BiPoly, Fraction)):
        return x
    return to_fraction(x)


def _is_zero(x) -> bool:
    return not x


def _common_zero(*seqs):
    # zero of the largest ring that appears among the entries
    kinds = {type(e) for s in seqs for e in s}
    if BiPoly in kinds:
        return BiPoly()
    if UniPoly in kinds:
        return UniPoly.zero()
    return Fraction(0)


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative shape")
        ents = tuple(_normalize(e) for e in self.entries)
        if len(ents) != self.rows * self.cols:
            raise ValueError(
                f"entries list has length {len(ents)}, expected {self.rows * self.cols}"
            )
        object.__setattr__(self, "entries", ents)

    # -- constructors -------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        rows = [list(r) for r in rows]
        if not rows:
            raise ValueError("empty matrix")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, tuple(e for r in rows for e in r))

    @classmethod
    def identity(cls, n: int, one=Fraction(1)) -> "Matrix":
        zero = ring_zero(one)
        return cls(n, n, tuple(one if i == j else zero for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int, zero=Fraction(0)) -> "Matrix":
        return cls(rows, cols, (zero,) * (rows * cols))

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        values = [_normalize(v) for v in values]
        n = len(values)
        zero = ring_zero(values[0])
        return cls(n, n, tuple(values[i] if i == j else zero for i in range(n) for j in range(n)))

    @classmethod
    def block_diag(cls, blocks: Sequence["Matrix"]) -> "Matrix":
        n = sum(b.rows for b in blocks)
        m = sum(b.cols for b in blocks)
        zero = ring_zero(blocks[0].entries[0]) if blocks[0].entries else Fraction(0)
        out = [[zero] * m for _ in range(n)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[r0 + i][c0 + j] = b[i, j]
            r0 += b.rows
            c0 += b.cols
        return cls.from_rows(out)

    # -- access -------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def map(self, fn: Callable) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(fn(e) for e in self.entries))

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def is_zero(self) -> bool:
        return all(_is_zero(e) for e in self.entries)

    def trace(self):
        if not self.is_square():
            raise ValueError("trace of a non-square matrix")
        acc = ring_zero(self.entries[0]) if self.entries else Fraction(0)
        for i in range(self.rows):
            acc = acc + self[i, i]
        return acc

    def minor(self, drop_row: int, drop_col: int) -> "Matrix":
        return Matrix.from_rows(
            [[self[i, j] for j in range(self.cols) if j != drop_col]
             for i in range(self.rows) if i != drop_row]
        )

    # -- arithmetic ---------------------------------------------------
    def _check_same(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(a * c for a in self.entries))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        a_rows = [self.row(i) for i in range(self.rows)]
        b_cols = [other.col(j) for j in range(other.cols)]
        out = []
        for ra in a_rows:
            for cb in b_cols:
                acc = None
                for x, y in zip(ra, cb):
                    if _is_zero(x) or _is_zero(y):
                        continue
                    t = x * y
                    acc = t if acc is None else acc + t
                if acc is None:
                    acc = _common_zero(ra, cb)
                out.append(acc)
        return Matrix(self.rows, other.cols, tuple(out))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(a == b for a, b in zip(self.entries, other.entries))

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def format(self) -> str:
        def fmt(e):
            if isinstance(e, (UniPoly, BiPoly)):
                return e.format()
            return str(e)

        return "[" + ", ".join("[" + ", ".join(fmt(e) for e in self.row(i)) + "]" for i in range(self.rows)) + "]"

    def __str__(self) -> str:
        return self.format()


RatMat = Matrix
PolyMat = Matrix


def rat_matrix(rows: Sequence[Sequence]) -> Matrix:
    return Matrix.from_rows([[to_fraction(x) for x in r] for r in rows])


def poly_matrix(rows: Sequence[Sequence]) -> Matrix:
    """Rows of UniPoly (or coefficient lists / scalars) to a matrix over Q[w]."""

    def conv(x):
        if isinstance(x, UniPoly):
            return x
        if isinstance(x, (list, tuple)):
            return UniPoly(x)
        return UniPoly.coerce(to_fraction(x))

    return Matrix.from_rows([[conv(x) for x in r] for r in rows])


def as_poly_matrix(m: Matrix) -> Matrix:
    return m.map(UniPoly.coerce)


def as_bipoly_matrix(m: Matrix) -> Matrix:
    return m.map(BiPoly.coerce)


def _exact_div(a, b):
    if isinstance(a, UniPoly):
        return a.exact_div(b)
    return a / b


def det_bareiss(m: Matrix):
    """Fraction-free determinant; needs exact division (fields or Q[w])."""
    if not m.is_square():
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return Fraction(1)
    a = m.to_rows()
    one = ring_one(a[0][0])
    sign = 1
    prev = one
    for k in range(n - 1):
        if _is_zero(a[k][k]):
            swap = next((i for i in range(k + 1, n) if not _is_zero(a[i][k])), None)
            if swap is None:
                return ring_zero(a[0][0])
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        piv = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = _exact_div(a[i][j] * piv - a[i][k] * a[k][j], prev)
            a[i][k] = ring_zero(piv)
        prev = piv
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


def det_expansion(m: Matrix):
    """Division-free determinant by Laplace expansion memoized on column sets.

    Works over any commutative ring, including Q[w][eta]; cost O(n 2^n).
    """
    if not m.is_square():
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return Fraction(1)
    rows = m.to_rows()
    zero = ring_zero(rows[0][0])

    @lru_cache(maxsize=None)
    def sub(row: int, cols: tuple[int, ...]):
        # determinant of rows[row:] restricted to the given columns
        if len(cols) == 1:
            return rows[row][cols[0]]
        acc = zero
        for idx, c in enumerate(cols):
            e = rows[row][c]
            if _is_zero(e):
                continue
            rest = cols[:idx] + cols[idx + 1:]
            term = e * sub(row + 1, rest)
            acc = acc + term if idx % 2 == 0 else acc - term
        return acc

    return sub(0, tuple(range(n)))


def det(m: Matrix):
    sample = m.entries[0] if m.entries else Fraction(0)
    if isinstance(sample, BiPoly):
        return det_expansion(m)
    return det_bareiss(m)


def adjugate(m: Matrix) -> Matrix:
    """Classical adjoint, so that m @ adjugate(m) = det(m) * I."""
    if not m.is_square():
        raise ValueError("adjugate of a non-square matrix")
    n = m.rows
    if n == 1:
        return Matrix(1, 1, (ring_one(m.entries[0]),))
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            c = det(m.minor(i, j))
            out[j][i] = c if (i + j) % 2 == 0 else -c
    return Matrix.from_rows(out)


def is_skew(m: Matrix) -> bool:
    if not m.is_square():
        return False
    return all(m[i, j] == -m[j, i] for i in range(m.rows) for j in range(m.rows))


def pfaffian(m: Matrix, *, _sign_flip: bool = False):
    """Pfaffian by recursive expansion along the first row.

    pf(A) = sum_j (-1)^j a_{0j} pf(A without rows/cols 0, j), j = 1..2k-1.
    ``_sign_flip`` deliberately breaks the alternating sign; it exists only
    for the mutation-testing harness.
    """
    if not m.is_square() or m.rows % 2 or not is_skew(m):
        raise ValueError("not skew-symmetric of even order")
    n = m.rows
    if n == 0:
        return Fraction(1)
    rows = m.to_rows()
    zero = ring_zero(rows[0][0])

    @lru_cache(maxsize=None)
    def pf(idx: tuple[int, ...]):
        if not idx:
            return ring_one(rows[0][0])
        first = idx[0]
        acc = zero
        for pos in range(1, len(idx)):
            e = rows[first][idx[pos]]
            if _is_zero(e):
                continue
            rest = idx[1:pos] + idx[pos + 1:]
            term = e * pf(rest)
            positive = pos % 2 == 1
            if _sign_flip and pos == len(idx) - 1 and len(idx) > 2:
                positive = not positive
            acc = acc + term if positive else acc - term
        return acc

    return pf(tuple(range(n)))


def char_poly(m: Matrix) -> BiSpectralPolynomial:
    """det(eta*I - m) via the Faddeev-LeVerrier recursion.

    Only divisions by the integers 1..n occur, which is exact over Q[w].
    """
    if not m.is_square():
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = m.rows
    if all(isinstance(e, (int, Fraction)) for e in m.entries):
        return _char_poly_rational(m)
    a = as_poly_matrix(m)
    ident = Matrix.identity(n, UniPoly.one())
    coeffs_desc: list[UniPoly] = []  # c_{n-1}, ..., c_0
    mk = Matrix.zeros(n, n, UniPoly.zero())
    c_prev = UniPoly.one()
    for k in range(1, n + 1):
        mk = a @ mk + ident.scale(c_prev)
        c_prev = (a @ mk).trace() * Fraction(-1, k)
        coeffs_desc.append(c_prev)
    return BiSpectralPolynomial(n, tuple(coeffs_desc))


def _char_poly_rational(m: Matrix) -> BiSpectralPolynomial:
    # Faddeev-LeVerrier on the integer matrix d*m; then c_k(m) = c_k(d m) / d^k.
    from math import lcm

    n = m.rows
    d = 1
    for e in m.entries:
        d = lcm(d, Fraction(e).denominator)
    a = [[int(Fraction(m[i, j]) * d) for j in range(n)] for i in range(n)]
    mk = [[0] * n for _ in range(n)]
    c_prev = 1
    coeffs: list[UniPoly] = []
    for k in range(1, n + 1):
        mk = [[sum(a[i][t] * mk[t][j] for t in range(n)) + (c_prev if i == j else 0) for j in range(n)]
              for i in range(n)]
        tr = sum(a[i][t] * mk[t][i] for i in range(n) for t in range(n))
        c_prev = -tr // k  # exact: the coefficients of an integer matrix are integers
        coeffs.append(UniPoly([Fraction(c_prev, d ** k)]))
    return BiSpectralPolynomial(n, tuple(coeffs))


def char_poly_by_determinant(m: Matrix) -> BiSpectralPolynomial:
    """det(eta*I - m) by direct expansion over Q[w][eta]; slower, independent."""
    n = m.rows
    eta = BiPoly.eta()
    rows = [[(eta if i == j else BiPoly()) - BiPoly.coerce(m[i, j]) for j in range(n)] for i in range(n)]
    return BiSpectralPolynomial.from_bipoly(det_expansion(Matrix.from_rows(rows)))


def companion(p: BiSpectralPolynomial) -> Matrix:
    """Matrix of multiplication by eta on the power basis 1, eta, ..., eta^{n-1}."""
    n = p.n
    zero, one = UniPoly.zero(), UniPoly.one()
    out = [[zero] * n for _ in range(n)]
    for i in range(1, n):
        out[i][i - 1] = one
    for i in range(n):
        out[i][n - 1] = -p.coefficient(i)
    return Matrix.from_rows(out)


def sylvester(f: Sequence, g: Sequence) -> Matrix:
    """Sylvester matrix of two polynomials given as ascending coefficient lists."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    zero = ring_zero(f[0])
    rows = []
    for i in range(n):
        row = [zero] * size
        for k, c in enumerate(reversed(f)):
            row[i + k] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k, c in enumerate(reversed(g)):
            row[i + k] = c
        rows.append(row)
    return Matrix.from_rows(rows)


def resultant_eta(f: BiPoly, g: BiPoly) -> UniPoly:
    """Res_eta(f, g) as the Sylvester determinant over Q[w]."""
    if f.is_zero() or g.is_zero():
        return UniPoly.zero()
    if f.degree == 0:
        return f.coeff(0) ** g.degree
    if g.degree == 0:
        return g.coeff(0) ** f.degree
    return UniPoly.coerce(det_bareiss(sylvester(list(f.coeffs), list(g.coeffs))))


@lru_cache(maxsize=4096)
def discriminant(p: BiSpectralPolynomial) -> UniPoly:
    """Discriminant in eta: (-1)^{n(n-1)/2} Res_eta(p, dp/deta) (p is monic)."""
    if p.n == 1:
        return UniPoly.one()
    res = resultant_eta(p.to_bipoly(), p.derivative_eta())
    return res if (p.n * (p.n - 1) // 2) % 2 == 0 else -res


def solve_rational(m: Matrix, rhs: Sequence) -> list[Fraction] | None:
    """One solution x of m x = rhs over Q, or None if inconsistent."""
    rows = [list(m.row(i)) + [to_fraction(rhs[i])] for i in range(m.rows)]
    ncols = m.cols
    pivots = _rref_in_place(rows, ncols)
    for r in rows[len(pivots):]:
        if r[ncols]:
            return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = rows[i][ncols]
    return x


def sparse_rref(rows: list[dict], ncols: int) -> tuple[list[dict], list[int]]:
    """Reduced row echelon form of sparse rows {col: value}.

    Returns (rows, pivots); the first len(pivots) rows carry the pivots.
    """
    rows = [{k: v for k, v in r.items() if v} for r in rows]
    rows = [r for r in rows if r]
    done: list[dict] = []
    pivots: list[int] = []
    for c in range(ncols):
        idx = next((i for i, r in enumerate(rows) if c in r), None)
        if idx is None:
            continue
        pr = rows.pop(idx)
        inv = 1 / pr[c]
        pr = {k: v * inv for k, v in pr.items()}
        for group in (rows, done):
            for i, r in enumerate(group):
                f = r.get(c)
                if f:
                    nr = dict(r)
                    for k, v in pr.items():
                        x = nr.get(k, 0) - f * v
                        if x:
                            nr[k] = x
                        else:
                            nr.pop(k, None)
                    group[i] = nr
        rows = [r for r in rows if r]
        done.append(pr)
        pivots.append(c)
        if not rows:
            break
    # leftover rows only touch columns >= ncols (e.g. an augmented right-hand side)
    return done + rows, pivots


def _rref_in_place(rows: list[list], ncols: int) -> list[int]:
    reduced, pivots = sparse_rref([{j: x for j, x in enumerate(r) if x} for r in rows], ncols)
    zero = Fraction(0)
    for i in range(len(rows)):
        if i < len(reduced):
            rows[i] = [reduced[i].get(j, zero) for j in range(len(rows[i]))]
        else:
            rows[i] = [zero] * len(rows[i])
    return pivots


def rref(vectors: Iterable[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    rows = [[to_fraction(x) for x in v] for v in vectors]
    if not rows:
        return [], []
    pivots = _rref_in_place(rows, len(rows[0]))
    return rows[:len(pivots)], pivots


def rank_rational(vectors: Iterable[Sequence]) -> int:
    return len(rref(vectors)[1])


def nullspace_rational(m: Matrix) -> list[list[Fraction]]:
    """Basis of {x : m x = 0} over Q, one vector per free column."""
    rows = [list(m.row(i)) for i in range(m.rows)]
    ncols = m.cols
    pivots = _rref_in_place(rows, ncols) if rows else []
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -rows[i][f]
        basis.append(v)
    return basis


def inverse_rational(m: Matrix) -> Matrix:
    n = m.rows
    if not m.is_square():
        raise ValueError("inverse of a non-square matrix")
    rows = [list(m.row(i)) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    pivots = _rref_in_place(rows, n)
    if len(pivots) != n:
        raise ZeroDivisionError("singular matrix")
    return Matrix.from_rows([r[n:] for r in rows])
