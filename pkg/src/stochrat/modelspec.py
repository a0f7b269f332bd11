"""Model specifications as JSON documents.

A model spec is a JSON object with a ``kind`` tag and kind-specific
parameters; all numeric parameters are rational strings so nothing passes
through floats.  Supported kinds:

* ``luce``: {"utility": {label: rational}}
* ``general_luce``: adds {"consideration": [{"menu": [...], "allowed": [...]}]}
* ``two_stage_luce``: adds {"dominance": [[better, worse], ...]}
* ``uniform_drum``: {"first": utility, "second": utility, "weight": rational}
* ``drum``: {"first", "second", "weights": [{"menu": [...], "weight": r}]}
* ``rum``: {"components": [{"utility": {...}, "weight": r}, ...]}
* ``tremble``: {"utility": {...}, "alpha": rational}
* ``mum``: {"utility", "metric": [{"pair": [a, b], "distance": r}],
  "response": [{"arg": r, "value": r}]}
* ``random``: {"universe": [...], "seed": int, "denominator_bound": int,
  "domain": "full"|"pairwise"}
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

from . import models
from .rationals import parse_rational
from .scf import DomainKind, StochasticChoiceFunction


@dataclass(frozen=True)
class LoadedModel:
    kind: str
    scf: StochasticChoiceFunction
    notes: tuple[str, ...] = ()


def _utility(doc: dict, key: str = "utility") -> dict:
    value = doc.get(key)
    if not isinstance(value, dict) or not value:
        raise ValueError(f"model spec needs a nonempty {key!r} mapping")
    return value


def load_model_spec(
    path: Union[str, Path],
    default_seed: int = 0,
    max_universe: Optional[int] = None,
) -> LoadedModel:
    path = Path(path)
    with path.open(encoding="utf-8") as handle:
        doc = json.load(handle)
    if not isinstance(doc, dict):
        raise ValueError(f"{path}: model spec must be a JSON object")
    kind = doc.get("kind")
    if not isinstance(kind, str):
        raise ValueError(f"{path}: missing model kind")

    if kind == "luce":
        return LoadedModel(kind, models.luce(_utility(doc), max_universe=max_universe))

    if kind == "general_luce":
        consideration = {}
        for entry in doc.get("consideration", []):
            consideration[tuple(entry["menu"])] = tuple(entry["allowed"])
        return LoadedModel(
            kind,
            models.general_luce(
                _utility(doc), consideration, max_universe=max_universe
            ),
        )

    if kind == "two_stage_luce":
        dominance = [tuple(pair) for pair in doc.get("dominance", [])]
        scf, proper = models.two_stage_luce(
            _utility(doc), dominance, max_universe=max_universe
        )
        note = "proper: utility increases along dominance" if proper else (
            "improper: utility does not increase along dominance"
        )
        return LoadedModel(kind, scf, (note,))

    if kind == "uniform_drum":
        return LoadedModel(
            kind,
            models.uniform_drum(
                _utility(doc, "first"),
                _utility(doc, "second"),
                doc["weight"],
                max_universe=max_universe,
            ),
        )

    if kind == "drum":
        weights = {
            tuple(entry["menu"]): entry["weight"] for entry in doc.get("weights", [])
        }
        return LoadedModel(
            kind,
            models.drum(
                _utility(doc, "first"),
                _utility(doc, "second"),
                weights,
                max_universe=max_universe,
            ),
        )

    if kind == "rum":
        components = [
            (entry["utility"], entry["weight"]) for entry in doc.get("components", [])
        ]
        return LoadedModel(kind, models.rum(components, max_universe=max_universe))

    if kind == "tremble":
        return LoadedModel(
            kind,
            models.tremble(_utility(doc), doc["alpha"], max_universe=max_universe),
        )

    if kind == "mum":
        metric = {
            tuple(entry["pair"]): entry["distance"] for entry in doc.get("metric", [])
        }
        response = {
            parse_rational(str(entry["arg"])): entry["value"]
            for entry in doc.get("response", [])
        }
        return LoadedModel(
            kind,
            models.mum_pairwise(
                _utility(doc), metric, response, max_universe=max_universe
            ),
        )

    if kind == "random":
        universe = doc.get("universe")
        if not isinstance(universe, list) or not universe:
            raise ValueError(f"{path}: random model needs a universe list")
        seed = doc.get("seed", default_seed)
        return LoadedModel(
            kind,
            models.random_scf(
                int(seed),
                [str(x) for x in universe],
                denominator_bound=int(doc.get("denominator_bound", 20)),
                domain_kind=DomainKind(doc.get("domain", "full")),
                max_universe=max_universe,
            ),
        )

    raise ValueError(f"{path}: unknown model kind {kind!r}")
