"""Reading polynomials, matrices and divisors from readable JSON inputs.

Polynomials may be written as strings such as ``"eta^2 - w"`` or
``"3/2*w*eta + 1"``, or in the coefficient-list encoding of
:mod:`higgs_spectral.exact.serialize`.
"""

from __future__ import annotations

import ast
import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .exact.matrix import Matrix
from .exact.poly import BiPoly, BiSpectralPolynomial, UniPoly
from .exact.serialize import bipoly_from_json, rational_from_json, spectral_from_json


class InputError(ValueError):
    """Malformed input (as opposed to a well-formed but mathematically invalid one)."""


_W = BiPoly([UniPoly([0, 1])])
_ETA = BiPoly.eta()


def _eval(node: ast.AST) -> BiPoly | Fraction:
    if isinstance(node, ast.Expression):
        return _eval(node.body)
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return Fraction(node.value)
    if isinstance(node, ast.Name):
        if node.id == "w":
            return _W
        if node.id == "eta":
            return _ETA
        raise InputError(f"unknown variable {node.id!r}; use w and eta")
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval(node.operand)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        a, b = _eval(node.left), _eval(node.right)
        if isinstance(node.op, ast.Add):
            return _lift(a) + _lift(b) if isinstance(a, BiPoly) or isinstance(b, BiPoly) else a + b
        if isinstance(node.op, ast.Sub):
            return _lift(a) - _lift(b) if isinstance(a, BiPoly) or isinstance(b, BiPoly) else a - b
        if isinstance(node.op, ast.Mult):
            return _lift(a) * _lift(b) if isinstance(a, BiPoly) or isinstance(b, BiPoly) else a * b
        if isinstance(node.op, ast.Div):
            if isinstance(b, BiPoly) or b == 0:
                raise InputError("only division by nonzero numbers is allowed")
            return a * (1 / b) if isinstance(a, BiPoly) else a / b
        if isinstance(node.op, ast.Pow):
            if isinstance(b, BiPoly) or b.denominator != 1 or b < 0:
                raise InputError("exponents must be nonnegative integers")
            return _lift(a) ** int(b) if isinstance(a, BiPoly) else a ** int(b)
    raise InputError(f"unsupported syntax in polynomial: {ast.dump(node)}")


def _lift(x) -> BiPoly:
    return x if isinstance(x, BiPoly) else BiPoly.coerce(x)


def parse_bipoly(text: str) -> BiPoly:
    if not isinstance(text, str) or not text.strip():
        raise InputError("empty polynomial")
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise InputError(f"cannot parse polynomial {text!r}") from exc
    return _lift(_eval(tree))


def parse_unipoly(text: str) -> UniPoly:
    bp = parse_bipoly(text)
    if bp.degree > 0:
        raise InputError(f"{text!r} involves eta; expected a polynomial in w")
    return bp.coeff(0)


def bipoly_from_input(obj: Any) -> BiPoly:
    if isinstance(obj, str):
        return parse_bipoly(obj)
    if isinstance(obj, int) and not isinstance(obj, bool):
        return BiPoly.coerce(obj)
    try:
        return bipoly_from_json(obj)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def unipoly_from_input(obj: Any) -> UniPoly:
    bp = bipoly_from_input(obj)
    if bp.degree > 0:
        raise InputError(f"{obj!r} involves eta; expected a polynomial in w")
    return bp.coeff(0)


def spectral_from_input(obj: Any) -> BiSpectralPolynomial:
    if isinstance(obj, dict):
        try:
            return spectral_from_json(obj)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    bp = bipoly_from_input(obj)
    if bp.degree < 1 or bp.coeff(bp.degree) != UniPoly.one():
        raise InputError("spectral polynomial must be monic in eta of positive degree")
    return BiSpectralPolynomial.from_bipoly(bp)


def poly_matrix_from_input(obj: Any) -> Matrix:
    if isinstance(obj, dict):
        from .exact.serialize import poly_matrix_from_json

        try:
            return poly_matrix_from_json(obj)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    if not isinstance(obj, list) or not obj or not all(isinstance(r, list) for r in obj):
        raise InputError("matrix must be a nonempty list of rows")
    width = len(obj[0])
    if any(len(r) != width for r in obj):
        raise InputError("matrix rows have different lengths")
    return Matrix.from_rows([[unipoly_from_input(e) for e in r] for r in obj])


def rat_matrix_from_input(obj: Any) -> Matrix:
    m = poly_matrix_from_input(obj)
    if any(e.degree > 0 for e in m.entries):
        raise InputError("expected a constant matrix")
    return m.map(lambda e: e[0])


def rational_from_input(obj: Any) -> Fraction:
    try:
        return rational_from_json(obj)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def load_json(path: str | Path) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError as exc:
        raise InputError(f"no such file: {path}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc}") from exc


def require(obj: dict, key: str) -> Any:
    if not isinstance(obj, dict) or key not in obj:
        raise InputError(f"input is missing the key {key!r}")
    return obj[key]
