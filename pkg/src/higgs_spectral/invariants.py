"""Invariant degrees, Hitchin base and moduli dimensions, char-poly structure."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact.matrix import Matrix, char_poly
from .exact.poly import BiSpectralPolynomial, UniPoly, poly_sqrt

GROUPS = ("gl", "sl", "sp", "so_odd", "so_even")

GROUP_LABELS = {
    "gl": "GL({n},C)",
    "sl": "SL({n},C)",
    "sp": "Sp({2n},C)",
    "so_odd": "SO({2n1},C)",
    "so_even": "SO({2n},C)",
}


@dataclass(frozen=True)
class GroupDescriptor:
    group: str
    n: int

    def __post_init__(self):
        if self.group not in GROUPS:
            raise ValueError(f"unknown group {self.group!r}; expected one of {', '.join(GROUPS)}")
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise ValueError("n must be a positive integer")
        if self.group in ("sl", "so_even") and self.n < 2:
            raise ValueError(f"{self.group} needs n >= 2")

    def label(self) -> str:
        return GROUP_LABELS[self.group].format(n=self.n, **{"2n": 2 * self.n, "2n1": 2 * self.n + 1})

    @property
    def matrix_size(self) -> int:
        return {"gl": self.n, "sl": self.n, "sp": 2 * self.n,
                "so_odd": 2 * self.n + 1, "so_even": 2 * self.n}[self.group]

    @property
    def semisimple(self) -> bool:
        return self.group != "gl"

    @property
    def lie_dimension(self) -> int:
        n = self.n
        return {"gl": n * n, "sl": n * n - 1, "sp": n * (2 * n + 1),
                "so_odd": n * (2 * n + 1), "so_even": n * (2 * n - 1)}[self.group]

    def to_json(self) -> dict:
        return {"group": self.group, "n": self.n, "label": self.label()}


def invariant_degrees(G: GroupDescriptor) -> list[int]:
    n = G.n
    if G.group == "gl":
        return list(range(1, n + 1))
    if G.group == "sl":
        return list(range(2, n + 1))
    if G.group in ("sp", "so_odd"):
        return [2 * i for i in range(1, n + 1)]
    return sorted([2 * i for i in range(1, n)] + [n])


def section_space_dim(d: int, g: int) -> int:
    """dim H^0(K^d) on a curve of genus g >= 2 (Riemann-Roch)."""
    if d < 0:
        raise ValueError("negative degree")
    if g < 2:
        raise ValueError("genus must be at least 2")
    if d == 0:
        return 1
    if d == 1:
        return g
    return (2 * d - 1) * (g - 1)


@dataclass(frozen=True)
class DimensionReport:
    group: GroupDescriptor
    genus: int
    degrees: tuple[int, ...]
    base_dim: int
    moduli_dim: int
    checks: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "group": self.group.to_json(),
            "genus": self.genus,
            "degrees": list(self.degrees),
            "base_dim": self.base_dim,
            "moduli_dim": self.moduli_dim,
            "half_dim_check": "pass" if self.checks.get("half_dimension") else "fail",
            "checks": {k: "pass" if v else "fail" for k, v in self.checks.items()},
        }


def moduli_dimension(G: GroupDescriptor, g: int) -> int:
    if G.group == "gl":
        return 2 * G.n ** 2 * (g - 1) + 2
    return 2 * G.lie_dimension * (g - 1)


def dimensions(G: GroupDescriptor, g: int) -> DimensionReport:
    if g < 2:
        raise ValueError("genus must be at least 2")
    degrees = invariant_degrees(G)
    base = sum(section_space_dim(d, g) for d in degrees)
    moduli = moduli_dimension(G, g)
    checks = {"half_dimension": 2 * base == moduli}
    if G.semisimple:
        checks["exponent_sum"] = sum(2 * d - 1 for d in degrees) == G.lie_dimension
        checks["base_equals_dim_times_genus_minus_one"] = base == G.lie_dimension * (g - 1)
    else:
        checks["gl_base_formula"] = base == G.n ** 2 * (g - 1) + 1
    return DimensionReport(G, g, tuple(degrees), base, moduli, checks)


def char_degree(G: GroupDescriptor) -> int:
    return G.matrix_size


def validate_char_structure(G: GroupDescriptor, p: BiSpectralPolynomial) -> dict:
    """Check the coefficient pattern forced on char(X) by X in the Lie algebra of G."""
    if p.n != char_degree(G):
        raise ValueError(f"{G.label()} expects a characteristic polynomial of degree {char_degree(G)}, got {p.n}")
    n = p.n
    checks: dict[str, bool] = {}
    result: dict = {"group": G.to_json()}
    if G.group == "sl":
        checks["trace_free"] = p.coefficient(n - 1).is_zero()
    elif G.group == "sp":
        checks["odd_coefficients_vanish"] = all(p.coefficient(k).is_zero() for k in range(1, n, 2))
    elif G.group == "so_odd":
        checks["constant_term_vanishes"] = p.coefficient(0).is_zero()
        # quotient by eta: remaining powers eta^{k-1} for k >= 1 must be even
        checks["quotient_by_eta_even"] = all(p.coefficient(k).is_zero() for k in range(2, n, 2))
    elif G.group == "so_even":
        checks["odd_coefficients_vanish"] = all(p.coefficient(k).is_zero() for k in range(1, n, 2))
        root = poly_sqrt(p.coefficient(0))
        checks["constant_term_square"] = root is not None
        if root is not None:
            result["pfaffian_up_to_sign"] = root
    else:
        checks["monic"] = True
    result["checks"] = checks
    result["passed"] = all(checks.values())
    return result


def validate_matrix(G: GroupDescriptor, x: Matrix) -> dict:
    return validate_char_structure(G, char_poly(x))


def slope(deg: int, rank: int) -> Fraction:
    if rank < 1:
        raise ValueError("rank must be positive")
    return Fraction(deg, rank)


def pushforward_degree(deg_L: int, n: int, g: int) -> int:
    """Degree of the direct image of a degree deg_L line bundle under an n-sheeted cover."""
    if n < 1:
        raise ValueError("n must be positive")
    if g < 2:
        raise ValueError("genus must be at least 2")
    return deg_L + (n * n - n) * (1 - g)


def toledo(deg_W1: int, deg_W2: int) -> int:
    return deg_W1 - deg_W2


def template_higgs_field(omega: UniPoly) -> Matrix:
    """The rank-2 local model [[0, omega], [1, 0]]."""
    return Matrix.from_rows([[UniPoly.zero(), omega], [UniPoly.one(), UniPoly.zero()]])
