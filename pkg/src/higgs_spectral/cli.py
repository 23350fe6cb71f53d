"""higgs-spectral: command-line front end.

Every command prints one JSON envelope

    {"schema_version", "command", "inputs", "result", "warnings"}

or, with ``--format text``, a readable rendering of the same content.
Exit codes: 0 success, 2 domain error, 3 malformed input, 4 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable

from . import __version__
from .battery import MUTATIONS, verify_all
from .correspondence import (
    HiggsMatrix,
    eigenline,
    fixed_point_check,
    ideal_sigma_test,
    pushforward_line,
    pushforward_rank2,
    spectral_irreducibility,
)
from .curves import AFFINE_SCOPE, CurveModel, affine_smoothness, genus_report
from .divisors import Divisor, fiber_points, norm, prym_membership_degreewise
from .exact.matrix import Matrix, char_poly
from .exact.serialize import to_jsonable
from .fixtures import CORPUS_ENV, ideal_from_input, load, rank2_from_input
from .invariants import GROUPS, GroupDescriptor, dimensions, validate_char_structure
from .parsing import (
    InputError,
    poly_matrix_from_input,
    rat_matrix_from_input,
    rational_from_input,
    require,
    spectral_from_input,
)
from .real_forms import ROW_NAMES, cartan_decomposition, maximal_compact_dim, real_form, verify_row

SCHEMA_VERSION = "1.0"

EXIT_OK, EXIT_DOMAIN, EXIT_PARSE, EXIT_INTERNAL = 0, 2, 3, 4


class DomainFailure(Exception):
    """A command ran correctly but its verdict is negative (e.g. a failed suite)."""

    def __init__(self, envelope: dict):
        super().__init__("domain failure")
        self.envelope = envelope


def matrix_text(m: Matrix) -> list[list[str]]:
    return [[str(m[i, j]) for j in range(m.cols)] for i in range(m.rows)]


def _element_text(alg, a) -> str:
    return alg.format(a)


# -- commands -----------------------------------------------------------------

def cmd_dims(args) -> tuple[dict, dict, list[str]]:
    G = GroupDescriptor(args.group, args.n)
    rep = dimensions(G, args.genus)
    return {"group": args.group, "n": args.n, "genus": args.genus}, rep.to_json(), []


def cmd_curve(args):
    c = CurveModel(args.group, args.n, args.genus)
    rep = genus_report(c)
    result = rep.to_json()
    if args.group == "so_even":
        result["virtual_genus"] = rep.spectral_genus
    warnings = list(rep.notes) if args.group == "so_even" else []
    return {"group": args.group, "n": args.n, "genus": args.genus}, result, warnings


def cmd_realform(args):
    params = {}
    for item in args.param or []:
        key, sep, value = item.partition("=")
        if not sep:
            raise InputError(f"parameters are written key=value, got {item!r}")
        params[key] = value if key == "family" else _int(value, key)
    form = real_form(args.name, **params)
    row = verify_row(form)
    dec = cartan_decomposition(form)
    result = {
        "form": form.to_json(),
        "label": form.label(),
        "verification": row.to_json(),
        "decomposition": dec.to_json(verbose=args.verbose),
        "maximal_compact_dim": maximal_compact_dim(form),
        "passed": row.passed and dec.passed,
    }
    return {"name": args.name, "params": params}, result, list(row.notes)


def _int(value: str, key: str) -> int:
    try:
        return int(value)
    except ValueError as exc:
        raise InputError(f"parameter {key} must be an integer") from exc


def cmd_validate(args):
    G = GroupDescriptor(args.group, args.n)
    if args.char is not None:
        p = spectral_from_input(args.char)
        inputs = {"group": args.group, "n": args.n, "char": p.format()}
    else:
        if not args.input:
            raise InputError("validate needs --char or --input")
        doc = load(args.input)
        phi = poly_matrix_from_input(require(doc, "phi"))
        p = char_poly(phi)
        inputs = {"group": args.group, "n": args.n, "input": str(args.input)}
    result = validate_char_structure(G, p)
    result["char"] = p.format()
    return inputs, result, []


def cmd_pushforward(args):
    doc = load(args.input)
    warnings: list[str] = []
    if doc.get("kind") == "rank2":
        V = rank2_from_input(doc)
        h = pushforward_rank2(V)
        result = {"phi": h.phi, "phi_text": matrix_text(h.phi), "char": h.char.format(), "rank": 2}
        if not V.algebra.smooth:
            warnings.append("spectral curve is not certified smooth on the affine chart")
    else:
        ideal = ideal_from_input(doc)
        pf = pushforward_line(ideal)
        alg = ideal.algebra
        result = {
            "phi": pf.higgs.phi,
            "phi_text": matrix_text(pf.higgs.phi),
            "char": pf.higgs.char.format(),
            "basis": [_element_text(alg, b) for b in pf.basis],
            "twist": ideal.twist,
            "irreducibility": spectral_irreducibility(alg.p),
        }
        warnings.extend(pf.warnings)
        if alg.sigma_symmetric:
            result["sigma"] = ideal_sigma_test(ideal)
            result["sigma"]["pairing_generator"] = (
                None if result["sigma"]["pairing_generator"] is None
                else _element_text(alg, result["sigma"]["pairing_generator"])
            )
            warnings.extend(result["sigma"]["caveats"])
    warnings.append(AFFINE_SCOPE)
    return {"input": str(args.input)}, result, warnings


def cmd_eigenline(args):
    doc = load(args.input)
    phi = poly_matrix_from_input(require(doc, "phi"))
    res = eigenline(HiggsMatrix.from_matrix(phi))
    alg = res.ideal.algebra
    result = {
        "char": alg.p.format(),
        "generators": [_element_text(alg, g) for g in res.ideal.generators],
        "hermite_basis": [_element_text(alg, tuple(b)) for b in res.ideal.hermite],
        "is_free": res.ideal.same_module(type(res.ideal)(alg, (1,))),
    }
    return {"input": str(args.input)}, result, res.warnings + [AFFINE_SCOPE]


def cmd_check_fixedpoint(args):
    doc = load(args.input)
    form_doc = require(doc, "form")
    form = real_form(require(form_doc, "name"), **form_doc.get("params", {}))
    phi = poly_matrix_from_input(require(doc, "phi"))
    f = rat_matrix_from_input(doc["f"]) if doc.get("f") is not None else None
    rep = fixed_point_check(form, phi, f)
    if rep.get("f") is not None:
        rep["f"] = matrix_text(rep["f"])
    rep["conditions"] = {k: "pass" if v else "fail" for k, v in rep["conditions"].items()}
    warnings = ["no intertwining matrix found; the search is not exhaustive"] if rep["status"] == "undetermined" else []
    return {"input": str(args.input)}, rep, warnings


def _divisor_from_doc(doc) -> Divisor:
    from .correspondence import SpectralAlgebra

    alg = SpectralAlgebra(spectral_from_input(require(doc, "p")))
    if "fiber_w" in doc:
        return fiber_points(alg, rational_from_input(doc["fiber_w"])).as_divisor(alg)
    terms = []
    for t in require(doc, "divisor"):
        terms.append((rational_from_input(require(t, "w")), rational_from_input(require(t, "eta")), int(require(t, "mult"))))
    return Divisor.from_terms(alg, terms)


def cmd_norm(args):
    doc = load(args.input)
    D = _divisor_from_doc(doc)
    nm = norm(D)
    result = {"divisor": D.to_json(), "degree": D.degree, "norm": nm.to_json(), "norm_degree": nm.degree}
    return {"input": str(args.input)}, result, []


def cmd_prym_check(args):
    doc = load(args.input)
    D = _divisor_from_doc(doc)
    rep = prym_membership_degreewise(D)
    return {"input": str(args.input)}, {"divisor": D.to_json(), **rep}, [rep["scope"]]


def cmd_verify_all(args):
    def timer(name: str, seconds: float) -> None:
        print(f"[verify-all] {name}: {seconds:.2f}s", file=sys.stderr)

    mutations = [args.mutate] if args.mutate else []
    summary = verify_all(args.seed, args.samples, mutations, timer=timer)
    inputs = {"seed": args.seed, "samples": args.samples}
    if mutations:
        inputs["mutations"] = mutations
    if not summary["passed"]:
        raise DomainFailure(envelope("verify-all", inputs, summary, ["one or more suites failed"]))
    return inputs, summary, []


# -- plumbing -----------------------------------------------------------------

def envelope(command: str, inputs: Any, result: Any, warnings: list[str]) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": to_jsonable(inputs),
        "result": to_jsonable(result),
        "warnings": list(dict.fromkeys(warnings)),
    }


def render_text(env: dict) -> str:
    lines = [f"{env['command']} (schema {env['schema_version']})"]

    def walk(obj, indent: int) -> None:
        pad = "  " * indent
        if isinstance(obj, dict):
            for k, v in obj.items():
                if f"{k}_text" in obj:
                    continue
                if isinstance(v, (dict, list)) and v and not _is_flat_matrix(v):
                    lines.append(f"{pad}{k}:")
                    walk(v, indent + 1)
                else:
                    lines.append(f"{pad}{k}: {_short(v)}")
        elif isinstance(obj, list):
            for v in obj:
                if isinstance(v, (dict, list)) and not _is_flat_matrix(v):
                    lines.append(f"{pad}-")
                    walk(v, indent + 1)
                else:
                    lines.append(f"{pad}- {_short(v)}")

    walk({"result": env["result"]}, 0)
    for w in env["warnings"]:
        lines.append(f"warning: {w}")
    return "\n".join(lines)


def _is_flat_matrix(v) -> bool:
    return isinstance(v, list) and bool(v) and all(isinstance(r, list) and all(isinstance(x, str) for x in r) for r in v)


def _short(v) -> str:
    if _is_flat_matrix(v):
        return "[" + ", ".join("[" + ", ".join(r) + "]" for r in v) + "]"
    return json.dumps(v) if not isinstance(v, str) else v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="higgs-spectral",
        description="Exact spectral-curve computations for Higgs bundles.",
        epilog=f"Fixture names are looked up in the bundled corpus; set {CORPUS_ENV} to use another directory.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--format", choices=("json", "text"), default="json", help="output format (default json)")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, fn: Callable, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text, description=help_text, parents=[common])
        p.set_defaults(func=fn)
        return p

    p = add("dims", cmd_dims, "Invariant degrees, Hitchin base and moduli dimensions.")
    p.add_argument("--group", choices=GROUPS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--genus", type=int, required=True)

    p = add("curve", cmd_curve, "Spectral, desingularized and quotient genera with Prym dimension.")
    p.add_argument("--group", choices=GROUPS + ("u_pp", "su_star", "so_star"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--genus", type=int, required=True)

    p = add("realform", cmd_realform, "Verify a real-form row and its Cartan decomposition.")
    p.add_argument("--name", choices=ROW_NAMES, required=True)
    p.add_argument("--param", action="append", metavar="KEY=VALUE", help="e.g. p=1 (repeatable)")
    p.add_argument("--verbose", action="store_true", help="include eigenspace bases")

    p = add("validate", cmd_validate, "Check the characteristic-polynomial pattern for a group.")
    p.add_argument("--group", choices=GROUPS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--char", help='characteristic polynomial, e.g. "eta^4 + w*eta^2 + w^2"')
    p.add_argument("--input", help="JSON file with a matrix under 'phi'")

    p = add("pushforward", cmd_pushforward, "Higgs field of an ideal (or pair of ideals) on the spectral curve.")
    p.add_argument("--input", required=True)

    p = add("eigenline", cmd_eigenline, "Ideal recovered from a Higgs matrix.")
    p.add_argument("--input", required=True)

    p = add("check-fixedpoint", cmd_check_fixedpoint, "Test a Higgs field against a real-form involution.")
    p.add_argument("--input", required=True)

    p = add("norm", cmd_norm, "Norm of a divisor on the spectral curve.")
    p.add_argument("--input", required=True)

    p = add("prym-check", cmd_prym_check, "Degree-level Prym membership conditions for a divisor.")
    p.add_argument("--input", required=True)

    p = add("verify-all", cmd_verify_all, "Run the whole verification battery.")
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--samples", type=int, default=20, help="random samples per size in sampled suites")
    p.add_argument("--mutate", choices=MUTATIONS, help=argparse.SUPPRESS)
    return parser


def _emit(env: dict, fmt: str, stream=None) -> None:
    stream = stream or sys.stdout
    if fmt == "text":
        print(render_text(env), file=stream)
    else:
        print(json.dumps(env, indent=2, sort_keys=False), file=stream)


def _echo(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "command", "format") and v is not None}


def _error(args, kind: str, message: str) -> dict:
    return envelope(args.command, _echo(args), {"error": {"kind": kind, "message": message}}, [])


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_PARSE
    command = args.command
    try:
        inputs, result, warnings = args.func(args)
    except DomainFailure as exc:
        _emit(exc.envelope, args.format)
        return EXIT_DOMAIN
    except InputError as exc:
        _emit(_error(args, "parse", str(exc)), args.format)
        return EXIT_PARSE
    except ValueError as exc:
        _emit(_error(args, "domain", str(exc)), args.format)
        return EXIT_DOMAIN
    except Exception as exc:  # invariant violations and bugs
        _emit(_error(args, "internal", f"{type(exc).__name__}: {exc}"), args.format)
        return EXIT_INTERNAL
    _emit(envelope(command, inputs, result, warnings), args.format)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
