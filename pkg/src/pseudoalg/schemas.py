"""JSON schemas for every report kind, shipped as package data."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

import jsonschema
from referencing import Registry, Resource
from referencing.jsonschema import DRAFT202012

__all__ = ["REPORT_KINDS", "schema_for", "validate"]

REPORT_KINDS = (
    "check",
    "cohomology",
    "annihilation",
    "compare",
    "window-jacobi",
    "lambda",
    "derived",
    "mtype",
    "catalog-list",
    "catalog-verify",
)


def _read(name: str) -> dict:
    return json.loads(resources.files("pseudoalg").joinpath(f"data/schemas/{name}.json").read_text(encoding="utf-8"))


@lru_cache(maxsize=None)
def _registry() -> Registry:
    pairs = [("defs", _read("_defs"))] + [(k, _read(k)) for k in REPORT_KINDS]
    return Registry().with_resources((uri, Resource.from_contents(doc, DRAFT202012)) for uri, doc in pairs)


def schema_for(kind: str) -> dict:
    if kind not in REPORT_KINDS:
        raise KeyError(f"unknown report kind {kind!r}")
    return _read(kind)


def validate(report: dict) -> None:
    """Raise ``jsonschema.ValidationError`` unless ``report`` matches the schema of its kind."""
    kind = report.get("kind")
    validator = jsonschema.Draft202012Validator(schema_for(kind), registry=_registry())
    validator.validate(report)
