"""Univariate and bivariate polynomials with exact rational coefficients.

``UniPoly`` is a polynomial in the base coordinate ``w``.  ``BiPoly`` is a
polynomial in ``eta`` whose coefficients are ``UniPoly``; it is the ring in
which characteristic polynomials and adjugates of ``eta*I - Phi`` live.
``BiSpectralPolynomial`` is the monic-in-eta special case that defines an
affine spectral curve.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


def to_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to ``Fraction``."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def _format_scalar(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _format_terms(terms: list[tuple[Fraction | str, str]]) -> str:
    """Join (coefficient, monomial) pairs into ``a*x^2 - b*x + c`` notation."""
    out = ""
    for coeff, mono in terms:
        if isinstance(coeff, str):
            if " " in coeff:
                piece, negative = f"({coeff})", False
            else:
                negative = coeff.startswith("-")
                piece = coeff.lstrip("-")
        else:
            negative = coeff < 0
            mag = -coeff if negative else coeff
            if mono and mag == 1:
                piece = ""
            else:
                piece = _format_scalar(mag)
        body = piece + ("*" if piece and mono else "") + mono
        if not out:
            out = ("-" if negative else "") + body
        else:
            out += (" - " if negative else " + ") + body
    return out or "0"



def _scaled_numerators(cs: Sequence[Fraction]) -> tuple[list[int], int]:
    """Integers v_k and a common denominator d with cs[k] = v_k / d."""
    d = 1
    for c in cs:
        if c.denominator != 1:
            d = lcm(d, c.denominator)
    if d == 1:
        return [c.numerator for c in cs], 1
    return [c.numerator * (d // c.denominator) for c in cs], d


def _from_ints(vs: list[int], den: int) -> list[Fraction]:
    if den == 1:
        return [Fraction(v) for v in vs]
    return [Fraction(v, den) for v in vs]


def _int_mul(a: list[int], b: list[int]) -> list[int]:
    """Product of integer coefficient lists via Kronecker substitution."""
    if len(a) < 8 or len(b) < 8:
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return out
    bound = max(map(abs, a)) * max(map(abs, b)) * min(len(a), len(b))
    k = bound.bit_length() + 2
    pack = lambda v: sum(x << (k * i) for i, x in enumerate(v))
    prod = pack(a) * pack(b)
    out = []
    mask, half = (1 << k) - 1, 1 << (k - 1)
    for _ in range(len(a) + len(b) - 1):
        x = prod & mask
        if x >= half:
            x -= 1 << k
        out.append(x)
        prod = (prod - x) >> k
    return out


class UniPoly:
    """Immutable polynomial in one variable over the rationals.

    Coefficients are stored ascending; the zero polynomial has no
    coefficients and degree -1.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        cs = [to_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: list[Fraction]) -> "UniPoly":
        # Internal constructor: coefficients already Fractions.
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        obj = cls.__new__(cls)
        obj.coeffs = tuple(coeffs)
        obj._hash = None
        return obj

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls) -> "UniPoly":
        return _ZERO

    @classmethod
    def one(cls) -> "UniPoly":
        return _ONE

    @classmethod
    def const(cls, c: Scalar) -> "UniPoly":
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c: Scalar = 1) -> "UniPoly":
        return cls([0] * degree + [c])

    @classmethod
    def coerce(cls, value) -> "UniPoly":
        if isinstance(value, UniPoly):
            return value
        return cls([value])

    # -- basic properties --------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly.coerce(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(("UniPoly", self.coeffs))
        return self._hash

    # -- arithmetic ---------------------------------------------------
    def __neg__(self) -> "UniPoly":
        return UniPoly._raw([-c for c in self.coeffs])

    def __pos__(self) -> "UniPoly":
        return self

    def _linear(self, other, sign: int) -> "UniPoly":
        na, da = _scaled_numerators(self.coeffs)
        nb, db = _scaled_numerators(UniPoly.coerce(other).coeffs)
        den = da if da == db else lcm(da, db)
        if den != da:
            na = [x * (den // da) for x in na]
        if den != db:
            nb = [x * (den // db) for x in nb]
        if len(na) < len(nb):
            na = na + [0] * (len(nb) - len(na))
        for i, c in enumerate(nb):
            na[i] += sign * c
        return UniPoly._raw(_from_ints(na, den))

    def __add__(self, other) -> "UniPoly":
        if isinstance(other, BiPoly):
            return NotImplemented
        return self._linear(other, 1)

    __radd__ = __add__

    def __sub__(self, other) -> "UniPoly":
        if isinstance(other, BiPoly):
            return NotImplemented
        return self._linear(other, -1)

    def __rsub__(self, other) -> "UniPoly":
        return UniPoly.coerce(other) - self

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, BiPoly):
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            if not other:
                return _ZERO
            return UniPoly._raw([c * other for c in self.coeffs])
        a, b = self.coeffs, UniPoly.coerce(other).coeffs
        if not a or not b:
            return _ZERO
        na, da = _scaled_numerators(a)
        nb, db = _scaled_numerators(b)
        return UniPoly._raw(_from_ints(_int_mul(na, nb), da * db))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UniPoly":
        if k < 0:
            raise ValueError("negative power")
        result, base = _ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other) -> tuple["UniPoly", "UniPoly"]:
        d = UniPoly.coerce(other)
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        dd = len(d.coeffs) - 1
        if len(self.coeffs) - 1 < dd:
            return _ZERO, self
        # integer pseudo-division: self = R / D, d = nb / db
        rem, den = _scaled_numerators(self.coeffs)
        nb, db = _scaled_numerators(d.coeffs)
        lead = nb[-1]
        quot = [Fraction(0)] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if not c:
                continue
            quot[k - dd] = Fraction(c * db, den * lead)
            if lead != 1:
                rem = [x * lead for x in rem]
                den *= lead
            for i in range(dd + 1):
                y = nb[i]
                if y:
                    rem[k - dd + i] -= c * y
        return UniPoly._raw(quot), UniPoly._raw([Fraction(x, den) for x in rem[:dd]])

    def __floordiv__(self, other) -> "UniPoly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "UniPoly":
        return divmod(self, other)[1]

    def exact_div(self, other) -> "UniPoly":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def __truediv__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self.exact_div(other)

    # -- analysis -----------------------------------------------------
    def __call__(self, x):
        acc = Fraction(0) if isinstance(x, (int, Fraction)) else UniPoly.coerce(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly._raw([k * c for k, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self * (1 / self.lc)

    def compose(self, inner: "UniPoly") -> "UniPoly":
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def content_denominator(self) -> int:
        """Least common multiple of the coefficient denominators."""
        from math import lcm

        out = 1
        for c in self.coeffs:
            out = lcm(out, c.denominator)
        return out

    def integer_coeffs(self) -> list[int]:
        """Coefficients of the primitive integer polynomial proportional to self."""
        from math import gcd

        den = self.content_denominator()
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if g > 1:
            ints = [v // g for v in ints]
        if ints and ints[-1] < 0:
            ints = [-v for v in ints]
        return ints

    # -- display ------------------------------------------------------
    def format(self, var: str = "w") -> str:
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            terms.append((c, mono))
        return _format_terms(terms)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"UniPoly({self.format()})"


_ZERO = UniPoly()
_ONE = UniPoly([1])
W = UniPoly([0, 1])


def _primitive(v: list[int]) -> list[int]:
    from math import gcd

    g = 0
    for x in v:
        g = gcd(g, x)
    return [x // g for x in v] if g > 1 else v


def _int_prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of integer coefficient lists (low degree first)."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        c = a[-1]
        shift = len(a) - 1 - db
        a = [x * lb for x in a]
        for i, y in enumerate(b):
            a[shift + i] -= c * y
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd (zero when both inputs vanish); primitive remainder sequence over Z."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    x, y = a.integer_coeffs(), b.integer_coeffs()
    if len(x) < len(y):
        x, y = y, x
    while y:
        x, y = y, _primitive(_int_prem(x, y))
    return UniPoly(x).monic()


def poly_xgcd(a: UniPoly, b: UniPoly) -> tuple[UniPoly, UniPoly, UniPoly]:
    """Return (g, s, t) with s*a + t*b = g and g monic."""
    r0, r1 = a, b
    s0, s1 = _ONE, _ZERO
    t0, t1 = _ZERO, _ONE
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = 1 / r0.lc
    return r0 * inv, s0 * inv, t0 * inv


def poly_lcm(a: UniPoly, b: UniPoly) -> UniPoly:
    if a.is_zero() or b.is_zero():
        return _ZERO
    return (a * b).exact_div(poly_gcd(a, b)).monic()


def squarefree_decomposition(q: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm: monic squarefree factors with their multiplicities."""
    if q.is_zero():
        raise ValueError("zero input")
    f = q.monic()
    out: list[tuple[UniPoly, int]] = []
    if f.degree == 0:
        return out
    fp = f.derivative()
    a = poly_gcd(f, fp)
    b = f.exact_div(a)
    c = fp.exact_div(a)
    d = c - b.derivative()
    k = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        if a.degree > 0:
            out.append((a, k))
        k += 1
    return out


def squarefree(q: UniPoly) -> bool:
    """True iff gcd(q, q') is a nonzero constant."""
    if q.is_zero():
        raise ValueError("zero input")
    return poly_gcd(q, q.derivative()).degree == 0


def poly_sqrt(q: UniPoly) -> UniPoly | None:
    """Exact square root with positive leading coefficient, or None."""
    if q.is_zero():
        return _ZERO
    if q.degree % 2:
        return None
    lead = rational_sqrt(q.lc)
    if lead is None:
        return None
    m = q.degree // 2
    # Solve r^2 = q top-down for r = sum r_k w^k.
    r = [Fraction(0)] * (m + 1)
    r[m] = lead
    for k in range(m - 1, -1, -1):
        # coefficient of w^(m+k) in r^2
        s = sum(r[i] * r[m + k - i] for i in range(k + 1, m))
        r[k] = (q[m + k] - s) / (2 * lead)
    root = UniPoly(r)
    return root if root * root == q else None


def rational_sqrt(c: Fraction) -> Fraction | None:
    from math import isqrt

    c = to_fraction(c)
    if c < 0:
        return None
    n, d = c.numerator, c.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _coerce_bi(value) -> "BiPoly":
    if isinstance(value, BiPoly):
        return value
    return BiPoly([UniPoly.coerce(value)])


class BiPoly:
    """Polynomial in eta with ``UniPoly`` (in w) coefficients, ascending."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [UniPoly.coerce(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs: tuple[UniPoly, ...] = tuple(cs)

    @classmethod
    def eta(cls) -> "BiPoly":
        return cls([_ZERO, _ONE])

    @classmethod
    def coerce(cls, value) -> "BiPoly":
        return _coerce_bi(value)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> UniPoly:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return _ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (BiPoly, UniPoly, int, Fraction)):
            return self.coeffs == _coerce_bi(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("BiPoly", self.coeffs))

    def __neg__(self) -> "BiPoly":
        return BiPoly([-c for c in self.coeffs])

    def __add__(self, other) -> "BiPoly":
        a, b = self.coeffs, _coerce_bi(other).coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return BiPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "BiPoly":
        return self + (-_coerce_bi(other))

    def __rsub__(self, other) -> "BiPoly":
        return _coerce_bi(other) - self

    def __mul__(self, other) -> "BiPoly":
        if isinstance(other, (int, Fraction, UniPoly)):
            return BiPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, _coerce_bi(other).coeffs
        if not a or not b:
            return BiPoly()
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x.is_zero():
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "BiPoly":
        result = BiPoly([_ONE])
        for _ in range(k):
            result = result * self
        return result

    def divmod_monic(self, divisor: "BiPoly") -> tuple["BiPoly", "BiPoly"]:
        """Division by a polynomial that is monic in eta."""
        dc = divisor.coeffs
        if not dc or dc[-1] != _ONE:
            raise ValueError("divisor must be monic in eta")
        n = len(dc) - 1
        rem = list(self.coeffs)
        if len(rem) - 1 < n:
            return BiPoly(), self
        quot = [_ZERO] * (len(rem) - n)
        for k in range(len(rem) - 1, n - 1, -1):
            c = rem[k]
            if c.is_zero():
                continue
            quot[k - n] = c
            for i, y in enumerate(dc):
                if y:
                    rem[k - n + i] = rem[k - n + i] - c * y
        return BiPoly(quot), BiPoly(rem[:n])

    def derivative_eta(self) -> "BiPoly":
        return BiPoly([c * k for k, c in enumerate(self.coeffs)][1:])

    def eval_w(self, w0) -> UniPoly:
        """Specialize w to a rational number; result is a polynomial in eta."""
        w0 = to_fraction(w0)
        return UniPoly([c(w0) for c in self.coeffs])

    def eval_eta(self, eta0) -> UniPoly:
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * eta0 + c
        return acc

    def negate_eta(self) -> "BiPoly":
        return BiPoly([c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)])

    def format(self, var: str = "eta", inner: str = "w") -> str:
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if c.is_constant():
                terms.append((c[0], mono))
            else:
                terms.append((c.format(inner), mono))
        return _format_terms(terms)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"BiPoly({self.format()})"


ETA = BiPoly.eta()


@dataclass(frozen=True)
class BiSpectralPolynomial:
    """p(eta, w) = eta^n + c_{n-1}(w) eta^{n-1} + ... + c_0(w).

    ``coeffs`` is ordered ``[c_{n-1}, ..., c_0]``.
    """

    n: int
    coeffs: tuple[UniPoly, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("eta_degree must be >= 1")
        cs = tuple(UniPoly.coerce(c) for c in self.coeffs)
        if len(cs) != self.n:
            raise ValueError(f"expected {self.n} coefficients, got {len(cs)}")
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def from_bipoly(cls, bp: BiPoly) -> "BiSpectralPolynomial":
        n = bp.degree
        if n < 1 or bp.coeff(n) != _ONE:
            raise ValueError("polynomial is not monic in eta of positive degree")
        return cls(n, tuple(bp.coeff(k) for k in range(n - 1, -1, -1)))

    @classmethod
    def from_ascending(cls, coeffs: Sequence) -> "BiSpectralPolynomial":
        """Build from [c_0, c_1, ..., c_{n-1}] (the leading 1 implied)."""
        cs = [UniPoly.coerce(c) for c in coeffs]
        return cls(len(cs), tuple(reversed(cs)))

    def coefficient(self, k: int) -> UniPoly:
        """Coefficient of eta^k."""
        if k == self.n:
            return _ONE
        if 0 <= k < self.n:
            return self.coeffs[self.n - 1 - k]
        return _ZERO

    def to_bipoly(self) -> BiPoly:
        return BiPoly([self.coefficient(k) for k in range(self.n + 1)])

    def derivative_eta(self) -> BiPoly:
        return self.to_bipoly().derivative_eta()

    def eval_w(self, w0) -> UniPoly:
        return self.to_bipoly().eval_w(w0)

    def is_even(self) -> bool:
        return all(self.coefficient(k).is_zero() for k in range(1, self.n, 2)) and self.n % 2 == 0

    def is_odd(self) -> bool:
        return all(self.coefficient(k).is_zero() for k in range(0, self.n, 2)) and self.n % 2 == 1

    def is_sigma_symmetric(self) -> bool:
        """p(-eta) = +-p(eta)."""
        return self.is_even() or self.is_odd()

    def __mul__(self, other: "BiSpectralPolynomial") -> "BiSpectralPolynomial":
        return BiSpectralPolynomial.from_bipoly(self.to_bipoly() * other.to_bipoly())

    def format(self) -> str:
        return self.to_bipoly().format()

    def __str__(self) -> str:
        return self.format()
