"""Factoring univariate rational polynomials, as far as desk work needs.

We extract rational roots and rational quadratic factors.  Whatever is left
is irreducible when its degree is at most 5 (a degree 4 or 5 polynomial with
no linear or quadratic factor cannot split); higher-degree leftovers are
reported as uncertified.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd, isqrt

from .poly import UniPoly, squarefree_decomposition


def _divisors(n: int) -> list[int]:
    n = abs(n)
    if n == 0:
        return [0]
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def _primitive(f: UniPoly) -> list[int]:
    return f.integer_coeffs()


def rational_roots(f: UniPoly) -> list[Fraction]:
    """Distinct rational roots, sorted."""
    if f.is_zero():
        raise ValueError("zero input")
    ints = _primitive(f)
    roots: set[Fraction] = set()
    # strip the power of w first; 0 is handled separately
    k = 0
    while k < len(ints) and ints[k] == 0:
        k += 1
    if k:
        roots.add(Fraction(0))
    ints = ints[k:]
    if len(ints) <= 1:
        return sorted(roots)
    g = UniPoly(ints)
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            if gcd(p, q) != 1:
                continue
            for s in (1, -1):
                r = Fraction(s * p, q)
                if g(r) == 0:
                    roots.add(r)
    return sorted(roots)


def _quadratic_factor(f: UniPoly) -> UniPoly | None:
    """A monic rational quadratic dividing f, found by Kronecker's method."""
    ints = _primitive(f)
    g = UniPoly(ints)
    points = [0, 1, -1]
    values = [int(g(x)) for x in points]
    if any(v == 0 for v in values):
        return None  # f has a rational root; caller strips those first
    choices = [[s * d for d in _divisors(v) for s in (1, -1)] for v in values]
    seen = set()
    for ys in product(*choices):
        # interpolate h with h(0)=y0, h(1)=y1, h(-1)=y2
        y0, y1, y2 = ys
        a2 = Fraction(y1 + y2 - 2 * y0, 2)
        a1 = Fraction(y1 - y2, 2)
        if a2 == 0:
            continue
        h = UniPoly([y0, a1, a2]).monic()
        if h in seen:
            continue
        seen.add(h)
        if (g % h).is_zero():
            return h
    return None


@dataclass(frozen=True)
class Factorization:
    """f = lc * prod(factor^mult); ``certified`` is False if a leftover may split."""

    lc: Fraction
    factors: tuple[tuple[UniPoly, int], ...]
    certified: bool


def factor_rational(f: UniPoly) -> Factorization:
    if f.is_zero():
        raise ValueError("zero input")
    certified = True
    out: list[tuple[UniPoly, int]] = []
    for part, mult in squarefree_decomposition(f):
        rest = part
        for r in rational_roots(part):
            lin = UniPoly([-r, 1])
            out.append((lin, mult))
            rest = rest.exact_div(lin)
        while rest.degree >= 4:
            h = _quadratic_factor(rest)
            if h is None:
                break
            out.append((h, mult))
            rest = rest.exact_div(h)
        if rest.degree >= 1:
            if rest.degree >= 6:
                certified = False
            out.append((rest.monic(), mult))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return Factorization(f.lc, tuple(out), certified)


def is_irreducible(f: UniPoly) -> bool | None:
    """True/False when decided, None when the factorization is uncertified."""
    if f.degree < 1:
        return False
    fac = factor_rational(f)
    if len(fac.factors) == 1 and fac.factors[0][1] == 1:
        return True if fac.certified else None
    return False
