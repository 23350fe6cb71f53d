"""Access to the bundled fixture corpus (overridable by environment variable)."""

from __future__ import annotations

import os
from pathlib import Path
from typing import Any

from .correspondence import FractionalIdeal, Rank2Module, SpectralAlgebra
from .parsing import InputError, bipoly_from_input, load_json, rational_from_input, require, spectral_from_input

CORPUS_ENV = "HIGGS_SPECTRAL_CORPUS"


def corpus_dir() -> Path:
    override = os.environ.get(CORPUS_ENV)
    if override:
        return Path(override)
    return Path(__file__).resolve().parent / "corpus"


def resolve(name_or_path: str | Path) -> Path:
    """A path as given if it exists, otherwise a file name inside the corpus."""
    p = Path(name_or_path)
    if p.exists():
        return p
    candidate = corpus_dir() / p.name
    if candidate.exists():
        return candidate
    raise InputError(f"no such file: {name_or_path} (also looked in {corpus_dir()})")


def load(name: str | Path) -> Any:
    return load_json(resolve(name))


def ideal_from_input(doc: dict, algebra: SpectralAlgebra | None = None) -> FractionalIdeal:
    if algebra is None:
        algebra = SpectralAlgebra(spectral_from_input(require(doc, "p")))
    gens = require(doc, "generators")
    if not isinstance(gens, list) or not gens:
        raise InputError("'generators' must be a nonempty list")
    twist = rational_from_input(doc.get("twist", "0"))
    return FractionalIdeal(algebra, tuple(bipoly_from_input(g) for g in gens), twist)


def rank2_from_input(doc: dict) -> Rank2Module:
    algebra = SpectralAlgebra(spectral_from_input(require(doc, "p")))
    ideals = require(doc, "ideals")
    if not isinstance(ideals, list) or len(ideals) != 2:
        raise InputError("'ideals' must list exactly two ideals")
    return Rank2Module(algebra, tuple(ideal_from_input(i, algebra) for i in ideals))
