"""The verification battery behind ``verify-all`` and the acceptance tests.

Every suite is deterministic for a given seed and returns a plain summary;
timings are measured by the caller so that summaries stay byte-identical.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .correspondence import (
    FractionalIdeal,
    HiggsMatrix,
    SpectralAlgebra,
    eigenline,
    pushforward_line,
)
from .curves import SO_EVEN_QUOTIENT_NOTE, CurveModel, genus_report, so_even_desingularization, spectral_genus
from .divisors import Divisor, fiber_points, norm, parity_invariant, sigma_divisor
from .exact.matrix import Matrix, char_poly, det, discriminant, pfaffian
from .exact.poly import UniPoly, squarefree
from .fixtures import load
from .invariants import GROUPS, GroupDescriptor, dimensions, validate_matrix
from .lie import AlgebraDescriptor, standard_basis
from .parsing import parse_bipoly, poly_matrix_from_input, rational_from_input, spectral_from_input
from .real_forms import all_rows, cartan_decomposition, maximal_compact_dim, real_form, split_cartan_report, verify_row

MUTATIONS = ("pfaffian-sign",)


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    def check(self, ok: bool, label: str) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(label)

    @property
    def passed(self) -> bool:
        return self.checked > 0 and not self.failures

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "checked": self.checked,
            "failed": len(self.failures),
            "failures": self.failures[:20],
            "passed": self.passed,
        }


# -- 1-3: numerology -------------------------------------------------------

GENERA = (2, 3, 4, 5)


def _groups(max_n: int):
    for group in GROUPS:
        for n in range(1, max_n + 1):
            if group in ("sl", "so_even") and n < 2:
                continue
            yield GroupDescriptor(group, n)


def suite_dimensions() -> SuiteResult:
    res = SuiteResult("dimension_identity")
    for G in _groups(6):
        for g in GENERA:
            rep = dimensions(G, g)
            res.check(2 * rep.base_dim == rep.moduli_dim, f"{G.label()} g={g}: base*2 != moduli")
            if G.semisimple:
                res.check(sum(2 * d - 1 for d in rep.degrees) == G.lie_dimension,
                          f"{G.label()}: exponent sum != dim")
            else:
                res.check(rep.moduli_dim == 2 * G.n ** 2 * (g - 1) + 2, f"{G.label()} g={g}: GL moduli formula")
    return res


def suite_genus() -> SuiteResult:
    res = SuiteResult("genus_tables")
    for n in range(1, 6):
        for g in GENERA:
            res.check(spectral_genus(CurveModel("gl", n, g)) == 1 + n * n * (g - 1), f"gl n={n} g={g}")
            if n >= 2:
                res.check(spectral_genus(CurveModel("sl", n, g)) == 1 + n * n * (g - 1), f"sl n={n} g={g}")
            for group in ("sp", "so_odd"):
                res.check(spectral_genus(CurveModel(group, n, g)) == 1 + 4 * n * n * (g - 1), f"{group} n={n} g={g}")
            if n >= 2:
                rep = so_even_desingularization(n, g)
                res.check(rep.spectral_genus == 1 + 4 * n * n * (g - 1), f"so_even virtual n={n} g={g}")
                res.check(rep.desing_genus == 1 + 2 * n * (2 * n - 1) * (g - 1), f"so_even desing n={n} g={g}")
                res.check(SO_EVEN_QUOTIENT_NOTE in rep.notes, f"so_even n={n} g={g}: discrepancy not flagged")
                res.check(rep.quotient_genus == 1 + n * (2 * n - 1) * (g - 1), f"so_even quotient n={n} g={g}")
    return res


def suite_prym() -> SuiteResult:
    res = SuiteResult("prym_crosscheck")
    for G in _groups(5):
        if G.group == "gl":
            continue
        for g in GENERA:
            prym = genus_report(CurveModel(G.group, G.n, g)).prym_dim
            res.check(prym == dimensions(G, g).base_dim, f"{G.label()} g={g}: prym {prym}")
    return res


# -- 4-5: correspondence ---------------------------------------------------

def random_higgs_matrix(rng: random.Random, n: int, max_degree: int = 3, bound: int = 3) -> Matrix:
    """Random polynomial matrix with det != 0 and squarefree nonzero discriminant."""
    while True:
        rows = [[UniPoly([rng.randint(-bound, bound) for _ in range(rng.randint(0, max_degree + 1))])
                 for _ in range(n)] for _ in range(n)]
        phi = Matrix.from_rows(rows)
        if UniPoly.coerce(det(phi)).is_zero():
            continue
        d = discriminant(char_poly(phi))
        if d.is_zero() or not squarefree(d):
            continue
        return phi


def suite_roundtrip(seed: int, samples: int = 100, sizes=(2, 3, 4)) -> SuiteResult:
    res = SuiteResult("correspondence_roundtrip")
    rng = random.Random(seed)
    for n in sizes:
        for i in range(samples):
            phi = random_higgs_matrix(rng, n)
            h = HiggsMatrix.from_matrix(phi)
            first = pushforward_line(eigenline(h).ideal)
            res.check(first.higgs.char == h.char, f"n={n} #{i}: char changed")
            second = pushforward_line(eigenline(first.higgs).ideal, verify=False)
            res.check(second.higgs.phi == first.higgs.phi, f"n={n} #{i}: not idempotent")
    return res


def suite_local_model() -> SuiteResult:
    from .fixtures import ideal_from_input

    res = SuiteResult("local_model")
    doc = load("free_module_eta2_minus_w.json")
    ideal = ideal_from_input(doc)
    pf = pushforward_line(ideal)
    expected = poly_matrix_from_input(doc["expected_phi"])
    res.check(pf.higgs.phi == expected, "pushforward of the free module")
    back = eigenline(pf.higgs)
    free = FractionalIdeal(ideal.algebra, (1,))
    res.check(back.ideal.same_module(free), "eigenline does not return the free module")
    res.check(pushforward_line(back.ideal).higgs.phi == expected, "round trip on the local model")
    return res


# -- 6: characteristic polynomial structure -------------------------------

CHAR_ALGEBRAS = (("sl", 2), ("sl", 3), ("sp", 1), ("sp", 2), ("sp", 3),
                 ("so_odd", 1), ("so_odd", 2), ("so_odd", 3), ("so_even", 2), ("so_even", 3))


def random_element(rng: random.Random, d: AlgebraDescriptor, bound: int = 3) -> Matrix:
    basis = standard_basis(d)
    return basis.combine([rng.randint(-bound, bound) for _ in range(basis.dimension)])


def suite_char_structure(seed: int, samples: int = 100, mutations: frozenset = frozenset()) -> SuiteResult:
    res = SuiteResult("char_structure")
    rng = random.Random(seed)
    flip = "pfaffian-sign" in mutations
    for family, n in CHAR_ALGEBRAS:
        d = AlgebraDescriptor(family, n)
        G = GroupDescriptor(family, n)
        killed = 0
        for i in range(samples):
            x = random_element(rng, d)
            rep = validate_matrix(G, x)
            res.check(rep["passed"], f"{d.label()} #{i}: pattern")
            if family == "so_even":
                pf = pfaffian(x, _sign_flip=flip)
                res.check(char_poly(x).coefficient(0) == UniPoly([pf * pf]), f"{d.label()} #{i}: pfaffian^2 != det")
            # mutant: x + I leaves the algebra and must break the pattern
            mutant = x + Matrix.identity(x.rows)
            killed += not validate_matrix(G, mutant)["passed"]
        res.check(killed == samples, f"{d.label()}: {samples - killed} mutants survived")
    return res


# -- 7: real forms ----------------------------------------------------------

SPLIT_FORMS = (("SL(n,R)", {"n": 2}), ("SL(n,R)", {"n": 3}), ("Sp(2n,R)", {"n": 1}), ("Sp(2n,R)", {"n": 2}),
               ("SO(p,q)_even", {"p": 2, "q": 2}), ("SO(p,q)_odd", {"p": 1, "q": 2}),
               ("SO(p,q)_odd", {"p": 2, "q": 3}))


def suite_real_forms(max_size: int = 6) -> SuiteResult:
    res = SuiteResult("real_forms")
    for form in all_rows(max_size):
        row = verify_row(form)
        for key, ok in row.checks.items():
            res.check(ok is not False, f"{form.label()}: {key}")
        dec = cartan_decomposition(form)
        for key, ok in dec.checks.items():
            res.check(ok, f"{form.label()}: {key}")
        try:
            maximal_compact_dim(form)
            res.check(True, "")
        except AssertionError as exc:
            res.check(False, f"{form.label()}: {exc}")
    for name, params in SPLIT_FORMS:
        form = real_form(name, **params)
        rep = split_cartan_report(form)
        ok = rep["tau_invariant"] and rep["commuting"] and rep["independent"] and rep["killing"] == "positive"
        res.check(ok and rep["rank"] == form.complex_parent.rank, f"{form.label()}: split Cartan")
    return res


# -- 8-9: divisors ----------------------------------------------------------

def suite_norm(seed: int) -> SuiteResult:
    res = SuiteResult("norm_law")
    rng = random.Random(seed)
    doc = load("norm_rational_fibers.json")
    for k, fx in enumerate(doc["fixtures"]):
        alg = SpectralAlgebra(spectral_from_input(fx["p"]))
        w0 = rational_from_input(fx["w0"])
        fib = fiber_points(alg, w0)
        res.check(fib.fully_rational, f"fixture {k}: fiber not rational")
        if not fib.fully_rational:
            continue
        D = fib.as_divisor(alg)
        nm = norm(D)
        res.check(nm.support == {w0: alg.n}, f"fixture {k}: Nm(fiber) != n*[w0]")
        # a random combination of fiber points over a few base points
        combo = Divisor(alg, {})
        for _ in range(3):
            other = fiber_points(alg, rng.randint(-6, 6))
            for pt, _m in other.points:
                combo = combo + Divisor(alg, {pt: rng.randint(-3, 3)})
        res.check(norm(combo).degree == combo.degree, f"fixture {k}: degree not preserved")
        if alg.sigma_symmetric:
            s = sigma_divisor(combo)
            res.check(norm(s).support == norm(combo).support, f"fixture {k}: Nm(sigma D) != Nm(D)")
            res.check(sigma_divisor(s) == combo, f"fixture {k}: sigma not an involution")
    return res


def suite_parity() -> SuiteResult:
    from .curves import ramification_count

    res = SuiteResult("parity_rule")
    doc = load("upp_parity.json")
    for k, rec in enumerate(doc["records"]):
        fixed = ramification_count(CurveModel("u_pp", rec["p"], rec["g"]))
        res.check(0 <= rec["minus_one_points"] <= fixed, f"record {k}: too many -1 points")
        rep = parity_invariant(rec["deg_L"], rec["minus_one_points"], rec.get("deg_W1"), rec.get("deg_W2"))
        res.check(rep["status"] == "pass", f"record {k}: parity")
        bad = parity_invariant(rec["deg_L"] + 1, rec["minus_one_points"])
        res.check(bad["status"] == "fail", f"record {k}: violation accepted")
        if rec["minus_one_points"] < fixed:
            bad = parity_invariant(rec["deg_L"], rec["minus_one_points"] + 1)
            res.check(bad["status"] == "fail", f"record {k}: violation accepted")
    return res


# -- driver -----------------------------------------------------------------

def suites(seed: int, samples: int, mutations: frozenset) -> list[tuple[str, Callable[[], SuiteResult]]]:
    return [
        ("dimension_identity", suite_dimensions),
        ("genus_tables", suite_genus),
        ("prym_crosscheck", suite_prym),
        ("correspondence_roundtrip", lambda: suite_roundtrip(seed, samples)),
        ("local_model", suite_local_model),
        ("char_structure", lambda: suite_char_structure(seed, samples, mutations)),
        ("real_forms", suite_real_forms),
        ("norm_law", lambda: suite_norm(seed)),
        ("parity_rule", suite_parity),
    ]


def verify_all(seed: int = 7, samples: int = 20, mutations=(), timer: Callable | None = None) -> dict:
    """Run every suite; ``timer(name, seconds)`` receives timings if given."""
    import time

    unknown = set(mutations) - set(MUTATIONS)
    if unknown:
        raise ValueError(f"unknown mutation(s): {', '.join(sorted(unknown))}")
    out = []
    for name, run in suites(seed, samples, frozenset(mutations)):
        start = time.perf_counter()
        result = run()
        if timer is not None:
            timer(name, time.perf_counter() - start)
        out.append(result.to_json())
    return {
        "seed": seed,
        "samples": samples,
        "mutations": sorted(mutations),
        "suites": out,
        "passed": all(s["passed"] for s in out),
    }
