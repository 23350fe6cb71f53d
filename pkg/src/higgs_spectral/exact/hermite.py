"""Row Hermite normal form for submodules of Q[w]^r.

The canonical basis is in row-echelon form by column, every pivot is monic,
and entries above a pivot have strictly smaller degree than it.  Since Q[w]
is Euclidean this basis depends only on the module, not on the generators.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .matrix import Matrix
from .poly import UniPoly


Vector = list  # list of UniPoly


def _coerce_vec(v: Sequence) -> list[UniPoly]:
    return [x if isinstance(x, UniPoly) else UniPoly.coerce(x) for x in v]


def _axpy(target: list[UniPoly], q: UniPoly, source: list[UniPoly], start: int) -> None:
    # target -= q * source, columns >= start
    for k in range(start, len(target)):
        if source[k]:
            target[k] = target[k] - q * source[k]


def _primitive_row(v: list[UniPoly]) -> list[UniPoly]:
    # rational constants are units, so rescaling keeps the module and tames coefficient growth
    from math import gcd, lcm

    den, num = 1, 0
    for x in v:
        for c in x.coeffs:
            den = lcm(den, c.denominator)
            num = gcd(num, c.numerator)
    if num == 0 or (den == 1 and num == 1):
        return v
    out = []
    for x in v:
        if not x:
            out.append(x)
            continue
        ints = [c.numerator * (den // c.denominator) // num for c in x.coeffs]
        out.append(UniPoly([Fraction(c) for c in ints]))
    return out


def hermite_rows(generators: Sequence[Sequence], ambient_rank: int) -> list[list[UniPoly]]:
    """Canonical basis rows of the module spanned by ``generators``."""
    rows = []
    for g in generators:
        v = _coerce_vec(g)
        if len(v) != ambient_rank:
            raise ValueError(f"generator has {len(v)} coordinates, expected {ambient_rank}")
        if any(v):
            rows.append(_primitive_row(v))
    if not rows:
        raise ValueError("zero module")

    basis: list[list[UniPoly]] = []
    pivot_cols: list[int] = []
    for col in range(ambient_rank):
        active = [r for r in rows if r[col]]
        rest = [r for r in rows if not r[col]]
        if not active:
            continue
        # Euclid down the column until a single row carries a nonzero entry.
        while len(active) > 1:
            active.sort(key=lambda r: r[col].degree)
            piv = active[0]
            survivors = [piv]
            for r in active[1:]:
                q = r[col] // piv[col]
                _axpy(r, q, piv, col)
                r[:] = _primitive_row(r)
                if r[col]:
                    survivors.append(r)
                elif any(r[col + 1:]):
                    rest.append(r)
            active = survivors
        piv = active[0]
        inv = 1 / piv[col].lc
        piv = [x * inv for x in piv]
        for b in basis:
            if b[col].degree >= piv[col].degree:
                q = b[col] // piv[col]
                _axpy(b, q, piv, col)
        basis.append(piv)
        pivot_cols.append(col)
        rows = rest
        if not rows:
            break
    # Reducing later pivots can disturb nothing earlier: the above-pivot
    # reduction only touches columns >= the new pivot column.
    return basis


def hermite_basis(generators: Sequence[Sequence], ambient_rank: int) -> Matrix:
    rows = hermite_rows(generators, ambient_rank)
    return Matrix.from_rows(rows)


def pivot_columns(basis_rows: Sequence[Sequence[UniPoly]]) -> list[int]:
    out = []
    for r in basis_rows:
        out.append(next(i for i, x in enumerate(r) if x))
    return out


def module_coordinates(basis_rows: Sequence[Sequence[UniPoly]], v: Sequence) -> list[UniPoly]:
    """Coefficients c with sum c_i * basis_i = v; raises if v is not in the module."""
    vec = _coerce_vec(v)
    pivots = pivot_columns(basis_rows)
    coords = []
    for row, col in zip(basis_rows, pivots):
        q, r = divmod(vec[col], row[col])
        if r:
            raise ValueError("vector not in module")
        coords.append(q)
        if q:
            _axpy(vec, q, list(row), col)
    if any(vec):
        raise ValueError("vector not in module")
    return coords


def contains(basis_rows: Sequence[Sequence[UniPoly]], v: Sequence) -> bool:
    try:
        module_coordinates(basis_rows, v)
    except ValueError:
        return False
    return True
