"""Genus, ramification and Prym bookkeeping for spectral curves."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .exact.matrix import discriminant
from .exact.poly import BiSpectralPolynomial, UniPoly, squarefree, squarefree_decomposition
from .invariants import GroupDescriptor, invariant_degrees

# Covers attached to real forms whose spectral curve is not the one of the
# complex group: U(p,p) uses the GL(2p) curve, SU*(2m) and SO*(2m) use a
# degree m curve.
REAL_COVERS = ("u_pp", "su_star", "so_star")

AFFINE_SCOPE = "smoothness certified on the affine chart only (the curve at infinity is not examined)"
SO_EVEN_QUOTIENT_NOTE = (
    "quotient-genus discrepancy: unramified Riemann-Hurwitz gives 1+n(2n-1)(g-1), "
    "one more than the closed form n(2n-1)(g-1); the Prym dimension is unaffected"
)


@dataclass(frozen=True)
class CurveModel:
    group: str
    n: int
    base_genus: int
    coefficients: tuple[UniPoly, ...] | None = None

    def __post_init__(self):
        if self.base_genus < 2:
            raise ValueError("base genus must be at least 2")
        if self.group in REAL_COVERS:
            if self.n < 1:
                raise ValueError("parameter must be positive")
        else:
            GroupDescriptor(self.group, self.n)
        if self.coefficients is not None and self.group not in REAL_COVERS:
            expected = len(invariant_degrees(GroupDescriptor(self.group, self.n)))
            if len(self.coefficients) != expected:
                raise ValueError(f"expected {expected} coefficients, got {len(self.coefficients)}")

    @property
    def cover_degree(self) -> int:
        if self.group in ("gl", "sl"):
            return self.n
        if self.group == "u_pp":
            return 2 * self.n
        if self.group in ("su_star", "so_star"):
            return self.n
        return 2 * self.n

    @property
    def top_degree(self) -> int:
        """K-degree of the coefficient whose zeros give the ramification data."""
        if self.group in ("gl", "sl", "so_even", "su_star", "so_star"):
            return self.n
        return 2 * self.n  # sp, so_odd, u_pp


@dataclass
class GenusReport:
    spectral_genus: int
    ramification_count: int
    desing_genus: int | None = None
    quotient_genus: int | None = None
    prym_dim: int | None = None
    singular_points: int | None = None
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        out = {"spectral_genus": self.spectral_genus, "ramification_count": self.ramification_count}
        for key in ("desing_genus", "quotient_genus", "prym_dim", "singular_points"):
            val = getattr(self, key)
            if val is not None:
                out[key] = val
        out["notes"] = list(self.notes)
        return out


def spectral_genus(c: CurveModel) -> int:
    """1 + N^2 (g - 1) for an N-sheeted spectral cover (virtual genus for SO(2n))."""
    return 1 + c.cover_degree ** 2 * (c.base_genus - 1)


def ramification_count(c: CurveModel) -> int:
    return c.top_degree * (2 * c.base_genus - 2)


def so_even_desingularization(n: int, g: int) -> GenusReport:
    if n < 2:
        raise ValueError("SO(2n) needs n >= 2")
    if g < 2:
        raise ValueError("base genus must be at least 2")
    virtual = 1 + 4 * n * n * (g - 1)
    desing = 1 + 2 * n * (2 * n - 1) * (g - 1)
    singular = 2 * n * (g - 1)
    # unramified double cover: 2 desing - 2 = 2 (2 q - 2)
    quotient = (desing + 1) // 2
    if 2 * quotient - 1 != desing:
        raise AssertionError("desingularized genus must be odd")
    report = GenusReport(
        spectral_genus=virtual,
        ramification_count=n * (2 * g - 2),
        desing_genus=desing,
        quotient_genus=quotient,
        prym_dim=desing - quotient,
        singular_points=singular,
        notes=[SO_EVEN_QUOTIENT_NOTE],
    )
    # each ordinary double point drops the genus by one
    if virtual - singular != desing:
        raise AssertionError("virtual genus minus double points disagrees with desingularized genus")
    return report


def quotient_genus_ramified(g_S: int, branch_points: int) -> int:
    """Genus of S/sigma from 2 g_S - 2 = 2 (2 g_q - 2) + b."""
    if branch_points < 0 or g_S < 0:
        raise ValueError("inconsistent ramification data")
    num = 2 * g_S + 2 - branch_points
    if num % 4 or num < 0:
        raise ValueError("inconsistent ramification data")
    return num // 4


def genus_report(c: CurveModel) -> GenusReport:
    """Spectral genus plus, where defined, quotient genus and Prym dimension."""
    g = c.base_genus
    gs = spectral_genus(c)
    ram = ramification_count(c)
    if c.group == "so_even":
        return so_even_desingularization(c.n, g)
    if c.group in ("gl", "u_pp", "su_star", "so_star"):
        notes = []
        if c.group == "gl":
            notes.append("GL(n) fibre is the full Jacobian of S; prym_dim reports dim Jac(S)")
            return GenusReport(gs, ram, prym_dim=gs, notes=notes)
        if c.group == "u_pp":
            # sigma-quotient of the GL(2p) curve, branched at the zeros of a_{2p}
            q = quotient_genus_ramified(gs, ram)
            return GenusReport(gs, ram, quotient_genus=q, prym_dim=gs - q,
                               notes=["sigma acts by eta -> -eta on the degree 2p cover"])
        return GenusReport(gs, ram, notes=["degree m cover; rank two data on S"])
    if c.group == "sl":
        return GenusReport(gs, ram, quotient_genus=g, prym_dim=gs - g,
                           notes=["Prym of S over the base curve (kernel of the Norm map)"])
    # sp, so_odd: double cover S -> S/sigma branched over the zeros of a_n
    q = quotient_genus_ramified(gs, ram)
    notes = ["Prym of S over S/sigma"]
    if c.group == "so_odd":
        notes.append("mod-2 trivialization data of the zero eigenspace is reported, not computed")
    return GenusReport(gs, ram, quotient_genus=q, prym_dim=gs - q, notes=notes)


def prym_dimension(group: str, n: int, g: int) -> int:
    return genus_report(CurveModel(group, n, g)).prym_dim


def affine_smoothness(p: BiSpectralPolynomial) -> dict:
    out = _affine_smoothness(p)
    return {**out, "offending_factors": list(out["offending_factors"])}


@lru_cache(maxsize=4096)
def _affine_smoothness(p: BiSpectralPolynomial) -> dict:
    disc = discriminant(p)
    if disc.is_zero():
        return {"smooth": False, "discriminant": disc, "offending_factors": [],
                "reason": "discriminant vanishes identically (non-reduced spectral curve)",
                "scope": AFFINE_SCOPE}
    smooth = squarefree(disc)
    offending = [{"factor": f, "multiplicity": m} for f, m in squarefree_decomposition(disc) if m > 1]
    out = {"smooth": smooth, "discriminant": disc, "offending_factors": offending, "scope": AFFINE_SCOPE}
    if not smooth:
        out["reason"] = "discriminant has a repeated factor"
    return out


def quotient_equation(p: BiSpectralPolynomial) -> BiSpectralPolynomial:
    """q(xi, w) with p(eta, w) = q(eta^2, w)."""
    if not p.is_even():
        raise ValueError("no η ↦ −η symmetry")
    m = p.n // 2
    return BiSpectralPolynomial.from_ascending([p.coefficient(2 * k) for k in range(m)])


def grid_rows(max_n: int = 5, genera: Sequence[int] = (2, 3, 4, 5)) -> list[dict]:
    """Genus table used by the acceptance battery."""
    rows = []
    for g in genera:
        for n in range(1, max_n + 1):
            for group in ("gl", "sl", "sp", "so_odd", "so_even"):
                if group in ("sl", "so_even") and n < 2:
                    continue
                rep = genus_report(CurveModel(group, n, g))
                rows.append({"group": group, "n": n, "g": g, **rep.to_json()})
    return rows
