"""Resolution spec files and the shipped fixture corpus.

A resolution spec is JSON of the form::

    {"label": ..., "truncation": null, "signs": "whitehead",
     "generators": [{"name": ..., "reduced_degree": ..., "home_dim": ...,
                     "attaching": "<element expression>" | null,
                     "rationalized": false}]}

Attaching expressions may reference any generator declared earlier in the
list.  Serialization is canonical, so save(load(text)) is byte-stable.
"""

from __future__ import annotations

import json
import os
from importlib import resources
from pathlib import Path

from .errors import ExpressionParseError
from .expr import format_element, parse_element
from .lie import CHAIN_ALGEBRA, WHITEHEAD_ALGEBRA, GeneratorSymbol
from .simplicial import CWGenerator, SimplicialLieObject

FIXTURE_ENV_VAR = "SIMPLIE_FIXTURE_DIR"

_ALGEBRAS = {"whitehead": WHITEHEAD_ALGEBRA, "chain": CHAIN_ALGEBRA}


def resolution_from_dict(data: dict) -> SimplicialLieObject:
    try:
        label = data["label"]
        raw_generators = data["generators"]
    except KeyError as exc:
        raise ExpressionParseError(f"spec file misses the {exc.args[0]!r} field") from exc
    signs = data.get("signs", "whitehead")
    if signs not in _ALGEBRAS:
        raise ExpressionParseError(f"unknown sign convention {signs!r}")
    symbols: dict[str, GeneratorSymbol] = {}
    generators: list[CWGenerator] = []
    for item in raw_generators:
        try:
            symbol = GeneratorSymbol(
                item["name"], int(item["reduced_degree"]), int(item.get("home_dim", 0))
            )
        except KeyError as exc:
            raise ExpressionParseError(
                f"generator entry misses the {exc.args[0]!r} field"
            ) from exc
        attaching_text = item.get("attaching")
        attaching = None
        if attaching_text is not None:
            attaching = parse_element(attaching_text, symbols)
        symbols[symbol.name] = symbol
        generators.append(
            CWGenerator(symbol, attaching, bool(item.get("rationalized", False)))
        )
    return SimplicialLieObject(
        label=label,
        generators=tuple(generators),
        truncation=data.get("truncation"),
        zero_faces_added=int(data.get("zero_faces_added", 0)),
        algebra=_ALGEBRAS[signs],
    )


def resolution_to_dict(obj: SimplicialLieObject) -> dict:
    generators = []
    for cw in obj.generators:
        entry = {
            "name": cw.symbol.name,
            "reduced_degree": cw.symbol.reduced_degree,
            "home_dim": cw.symbol.home_dim,
            "attaching": None if cw.attaching is None else format_element(cw.attaching),
        }
        if cw.rationalized:
            entry["rationalized"] = True
        generators.append(entry)
    data = {
        "label": obj.label,
        "signs": obj.algebra.signs,
        "truncation": obj.truncation,
        "generators": generators,
    }
    if obj.zero_faces_added:
        data["zero_faces_added"] = obj.zero_faces_added
    return data


def dumps_resolution(obj: SimplicialLieObject) -> str:
    return json.dumps(resolution_to_dict(obj), indent=2) + "\n"


def load_resolution(path: str | Path) -> SimplicialLieObject:
    with open(path, "r", encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise ExpressionParseError(f"invalid JSON in {path}: {exc}") from exc
    return resolution_from_dict(data)


def save_resolution(obj: SimplicialLieObject, path: str | Path) -> None:
    Path(path).write_text(dumps_resolution(obj), encoding="utf-8")


def fixture_dir() -> Path:
    """The fixture corpus directory (env override, else the packaged one)."""
    override = os.environ.get(FIXTURE_ENV_VAR)
    if override:
        return Path(override)
    return Path(resources.files("simplie") / "fixtures")


def fixture_names() -> list[str]:
    return sorted(p.stem for p in fixture_dir().glob("*.json"))


def fixture_path(name: str) -> Path:
    path = fixture_dir() / f"{name}.json"
    if not path.exists():
        raise FileNotFoundError(f"no fixture named {name!r} under {fixture_dir()}")
    return path


def load_fixture(name: str) -> SimplicialLieObject:
    return load_resolution(fixture_path(name))
