"""JSON encoding of exact values: rationals as "p/q" strings."""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from .matrix import Matrix
from .poly import BiPoly, BiSpectralPolynomial, UniPoly, to_fraction


def rational_to_json(x) -> str:
    x = to_fraction(x)
    return f"{x.numerator}/{x.denominator}"


def rational_from_json(obj) -> Fraction:
    if isinstance(obj, bool) or not isinstance(obj, (int, str)):
        raise ValueError(f"rational must be a string or integer, got {obj!r}")
    try:
        return Fraction(obj)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational {obj!r}") from exc


def unipoly_to_json(p: UniPoly) -> list[str]:
    return [rational_to_json(c) for c in p.coeffs]


def unipoly_from_json(obj) -> UniPoly:
    if isinstance(obj, (int, str)) and not isinstance(obj, bool):
        return UniPoly([rational_from_json(obj)])
    if not isinstance(obj, list):
        raise ValueError(f"polynomial must be a list of rationals, got {obj!r}")
    return UniPoly([rational_from_json(c) for c in obj])


def spectral_to_json(p: BiSpectralPolynomial) -> dict:
    return {"n": p.n, "coeffs": [unipoly_to_json(c) for c in p.coeffs]}


def spectral_from_json(obj) -> BiSpectralPolynomial:
    if not isinstance(obj, dict) or "n" not in obj or "coeffs" not in obj:
        raise ValueError("spectral polynomial needs keys 'n' and 'coeffs'")
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError("'n' must be an integer")
    return BiSpectralPolynomial(n, tuple(unipoly_from_json(c) for c in obj["coeffs"]))


def bipoly_to_json(p: BiPoly) -> list[list[str]]:
    return [unipoly_to_json(c) for c in p.coeffs]


def bipoly_from_json(obj) -> BiPoly:
    if not isinstance(obj, list):
        raise ValueError("bivariate polynomial must be a list of polynomials in w")
    return BiPoly([unipoly_from_json(c) for c in obj])


def _entry_to_json(e) -> Any:
    if isinstance(e, BiPoly):
        return bipoly_to_json(e)
    if isinstance(e, UniPoly):
        return unipoly_to_json(e)
    return rational_to_json(e)


def matrix_to_json(m: Matrix) -> dict:
    return {"rows": m.rows, "cols": m.cols, "entries": [_entry_to_json(e) for e in m.entries]}


def _shape(obj) -> tuple[int, int, list]:
    if not isinstance(obj, dict) or not {"rows", "cols", "entries"} <= obj.keys():
        raise ValueError("matrix needs keys 'rows', 'cols', 'entries'")
    rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
    if not isinstance(entries, list) or len(entries) != rows * cols:
        raise ValueError("matrix entries do not match its shape")
    return rows, cols, entries


def poly_matrix_from_json(obj) -> Matrix:
    rows, cols, entries = _shape(obj)
    return Matrix(rows, cols, tuple(unipoly_from_json(e) for e in entries))


def rat_matrix_from_json(obj) -> Matrix:
    rows, cols, entries = _shape(obj)
    return Matrix(rows, cols, tuple(rational_from_json(e) for e in entries))


def to_jsonable(obj) -> Any:
    """Recursively convert exact values inside dicts/lists to JSON types."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, float)):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return rational_to_json(obj)
    if isinstance(obj, BiPoly):
        return bipoly_to_json(obj)
    if isinstance(obj, UniPoly):
        return unipoly_to_json(obj)
    if isinstance(obj, BiSpectralPolynomial):
        return spectral_to_json(obj)
    if isinstance(obj, Matrix):
        return matrix_to_json(obj)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if hasattr(obj, "to_json"):
        return obj.to_json()
    raise TypeError(f"cannot serialize {type(obj).__name__}")
