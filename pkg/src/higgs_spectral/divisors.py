"""Rational points and divisors on affine spectral curves, the norm map and
the degree-level Prym and parity predicates."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .correspondence import SpectralAlgebra
from .exact.factor import factor_rational
from .exact.poly import BiSpectralPolynomial, UniPoly, to_fraction
from .invariants import toledo

PRYM_SCOPE = (
    "degree-level necessary conditions only: over the affine base every degree zero divisor is "
    "principal, but linear equivalence on the spectral curve itself is not tested"
)


@dataclass(frozen=True, order=True)
class SpectralPoint:
    w0: Fraction
    eta0: Fraction

    def to_json(self) -> dict:
        from .exact.serialize import rational_to_json

        return {"w": rational_to_json(self.w0), "eta": rational_to_json(self.eta0)}


def _check_point(p: BiSpectralPolynomial, pt: SpectralPoint) -> None:
    if p.eval_w(pt.w0)(pt.eta0) != 0:
        raise ValueError(f"point (w={pt.w0}, eta={pt.eta0}) is not on the curve")


def point(algebra: SpectralAlgebra, w0, eta0) -> SpectralPoint:
    pt = SpectralPoint(to_fraction(w0), to_fraction(eta0))
    _check_point(algebra.p, pt)
    return pt


def _clean(support: Mapping) -> dict:
    return {k: v for k, v in sorted(support.items()) if v}


@dataclass(frozen=True)
class BaseDivisor:
    support: dict  # Fraction -> int

    def __post_init__(self):
        object.__setattr__(self, "support", _clean(self.support))

    @property
    def degree(self) -> int:
        return sum(self.support.values())

    def is_zero(self) -> bool:
        return not self.support

    def to_json(self) -> list:
        from .exact.serialize import rational_to_json

        return [{"w": rational_to_json(w), "mult": m} for w, m in self.support.items()]


@dataclass(frozen=True)
class Divisor:
    algebra: SpectralAlgebra
    support: dict  # SpectralPoint -> int

    def __post_init__(self):
        clean = _clean(self.support)
        for pt in clean:
            _check_point(self.algebra.p, pt)
        object.__setattr__(self, "support", clean)

    @classmethod
    def from_terms(cls, algebra: SpectralAlgebra, terms: Iterable[tuple]) -> "Divisor":
        """Terms are (w, eta, multiplicity)."""
        acc: Counter = Counter()
        for w0, eta0, mult in terms:
            acc[SpectralPoint(to_fraction(w0), to_fraction(eta0))] += int(mult)
        return cls(algebra, dict(acc))

    @property
    def degree(self) -> int:
        return sum(self.support.values())

    def is_zero(self) -> bool:
        return not self.support

    def __add__(self, other: "Divisor") -> "Divisor":
        if other.algebra != self.algebra:
            raise ValueError("divisors live on different curves")
        acc = Counter(self.support)
        acc.update(other.support)
        return Divisor(self.algebra, dict(acc))

    def __neg__(self) -> "Divisor":
        return Divisor(self.algebra, {k: -v for k, v in self.support.items()})

    def __sub__(self, other: "Divisor") -> "Divisor":
        return self + (-other)

    def scale(self, k: int) -> "Divisor":
        return Divisor(self.algebra, {pt: k * m for pt, m in self.support.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, Divisor) and self.algebra == other.algebra and self.support == other.support

    def __hash__(self) -> int:
        return hash((self.algebra, tuple(self.support.items())))

    def to_json(self) -> list:
        return [{**pt.to_json(), "mult": m} for pt, m in self.support.items()]


@dataclass
class Fiber:
    w0: Fraction
    points: list[tuple[SpectralPoint, int]]
    unresolved: list[tuple[UniPoly, int]] = field(default_factory=list)
    certified: bool = True

    @property
    def total(self) -> int:
        return sum(m for _, m in self.points) + sum(f.degree * m for f, m in self.unresolved)

    @property
    def fully_rational(self) -> bool:
        return not self.unresolved

    def as_divisor(self, algebra: SpectralAlgebra) -> Divisor:
        if not self.fully_rational:
            raise ValueError("fiber has irrational points")
        return Divisor(algebra, {pt: m for pt, m in self.points})

    def to_json(self) -> dict:
        from .exact.serialize import rational_to_json

        return {
            "w": rational_to_json(self.w0),
            "points": [{**pt.to_json(), "mult": m} for pt, m in self.points],
            "unresolved": [{"factor": f.format("eta"), "degree": f.degree, "mult": m} for f, m in self.unresolved],
            "certified": self.certified,
        }


def fiber_points(algebra: SpectralAlgebra, w0) -> Fiber:
    """Rational points over w = w0 plus the irreducible factors left over."""
    w0 = to_fraction(w0)
    fac = factor_rational(algebra.p.eval_w(w0))
    points, unresolved = [], []
    for f, m in fac.factors:
        if f.degree == 1:
            points.append((SpectralPoint(w0, -f[0] / f[1]), m))
        else:
            unresolved.append((f, m))
    points.sort()
    fib = Fiber(w0, points, unresolved, fac.certified)
    if fib.total != algebra.n:
        raise AssertionError("fiber multiplicities do not add up to the degree of the cover")
    return fib


def norm(D: Divisor) -> BaseDivisor:
    acc: Counter = Counter()
    for pt, m in D.support.items():
        acc[pt.w0] += m
    return BaseDivisor(dict(acc))


def sigma_divisor(D: Divisor) -> Divisor:
    if not D.algebra.sigma_symmetric:
        raise ValueError("σ undefined on this algebra")
    return Divisor(D.algebra, {SpectralPoint(pt.w0, -pt.eta0): m for pt, m in D.support.items()})


def prym_membership_degreewise(D: Divisor) -> dict:
    nm = norm(D)
    report = {
        "norm": nm.to_json(),
        "norm_degree": nm.degree,
        "in_norm_kernel": nm.degree == 0,
        "twice_degree_zero": 2 * D.degree == 0,
        "scope": PRYM_SCOPE,
    }
    if D.algebra.sigma_symmetric:
        report["d_plus_sigma_d_degree_zero"] = (D + sigma_divisor(D)).degree == 0
    report["order_two_necessary"] = report["twice_degree_zero"] and report.get("d_plus_sigma_d_degree_zero", True)
    report["prym_representative"] = report["in_norm_kernel"]
    return report


def parity_invariant(deg_L: int, minus_one_points: int, deg_W1: int | None = None,
                     deg_W2: int | None = None) -> dict:
    """deg L and the number of points where sigma acts by -1 must share parity."""
    if minus_one_points < 0:
        raise ValueError("minus_one_points must be nonnegative")
    out = {
        "deg_L": deg_L,
        "minus_one_points": minus_one_points,
        "status": "pass" if (deg_L - minus_one_points) % 2 == 0 else "fail",
    }
    if deg_W1 is not None and deg_W2 is not None:
        out["toledo"] = toledo(deg_W1, deg_W2)
    return out
