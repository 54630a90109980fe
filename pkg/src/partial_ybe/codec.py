"""JSON documents for partial solutions.

Finite::

    {"carrier": {"kind": "finite", "size": 3},
     "sigma": [{"x": 0, "map": [[0, 0], [2, 2]]}, ...],
     "gamma": [...]}

Countable::

    {"carrier": {"kind": "countable", "family": "thompson"}}
"""

from __future__ import annotations

import json
from importlib import resources

import jsonschema

from .core import COUNTABLE, Finite, PartialBijection
from .errors import NonInjectiveError, NonInjectiveSigma, SchemaError
from .families import FAMILIES
from .solution import PartialSolution

_MAP_LIST = {
    "type": "array",
    "items": {
        "type": "object",
        "additionalProperties": False,
        "required": ["x", "map"],
        "properties": {
            "x": {"type": "integer", "minimum": 0},
            "map": {
                "type": "array",
                "items": {
                    "type": "array",
                    "items": {"type": "integer", "minimum": 0},
                    "minItems": 2,
                    "maxItems": 2,
                },
            },
        },
    },
}

SCHEMA = {
    "oneOf": [
        {
            "type": "object",
            "additionalProperties": False,
            "required": ["carrier", "sigma", "gamma"],
            "properties": {
                "carrier": {
                    "type": "object",
                    "additionalProperties": False,
                    "required": ["kind", "size"],
                    "properties": {
                        "kind": {"const": "finite"},
                        "size": {"type": "integer", "minimum": 1},
                    },
                },
                "sigma": _MAP_LIST,
                "gamma": _MAP_LIST,
            },
        },
        {
            "type": "object",
            "additionalProperties": False,
            "required": ["carrier"],
            "properties": {
                "carrier": {
                    "type": "object",
                    "additionalProperties": False,
                    "required": ["kind", "family"],
                    "properties": {
                        "kind": {"const": "countable"},
                        "family": {"enum": sorted(FAMILIES)},
                    },
                },
            },
        },
    ]
}


def save(S: PartialSolution) -> dict:
    if not S.carrier.is_finite:
        return {"carrier": {"kind": "countable", "family": S.family}}

    def maps(family):
        return [{"x": x, "map": [[a, b] for a, b in pb.items()]}
                for x, pb in enumerate(family)]

    return {"carrier": {"kind": "finite", "size": S.carrier.size},
            "sigma": maps(S.sigmas), "gamma": maps(S.gammas)}


def _best_error(doc, validator):
    errors = list(validator.iter_errors(doc))
    if not errors:
        return None
    # oneOf hides the useful message; pick the branch matching the declared kind
    err = errors[0]
    if err.validator == "oneOf" and err.context:
        kind = doc.get("carrier", {}).get("kind") if isinstance(doc, dict) else None
        branch = 1 if kind == "countable" else 0
        sub = [e for e in err.context if e.schema_path and e.schema_path[0] == branch]
        if sub:
            err = jsonschema.exceptions.best_match(sub)
    return err


def _load_maps(entries, n, key):
    found = {}
    for i, entry in enumerate(entries):
        x = entry["x"]
        path = (key, i)
        if x >= n:
            raise SchemaError(f"generator {x} outside carrier of size {n}", path + ("x",))
        if x in found:
            raise SchemaError(f"generator {x} listed twice", path + ("x",))
        mapping = {}
        for j, (a, b) in enumerate(entry["map"]):
            if a >= n or b >= n:
                raise SchemaError(f"pair {[a, b]} outside carrier of size {n}",
                                  path + ("map", j))
            if a in mapping:
                raise SchemaError(f"{key}_{x} lists {a} twice", path + ("map", j))
            mapping[a] = b
        try:
            found[x] = PartialBijection.from_mapping(mapping)
        except NonInjectiveError as e:
            raise NonInjectiveSigma(f"{key}_{x} is not injective ({e})", path + ("map",)) from None
    missing = [x for x in range(n) if x not in found]
    if missing:
        raise SchemaError(f"no {key} map for generators {missing}", (key,))
    return tuple(found[x] for x in range(n))


def load(doc) -> PartialSolution:
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as e:
            raise SchemaError(f"invalid JSON: {e}") from None
    err = _best_error(doc, jsonschema.Draft202012Validator(SCHEMA))
    if err is not None:
        raise SchemaError(err.message, err.absolute_path)
    carrier = doc["carrier"]
    if carrier["kind"] == "countable":
        return PartialSolution(COUNTABLE, family=carrier["family"])
    n = carrier["size"]
    return PartialSolution(Finite(n), _load_maps(doc["sigma"], n, "sigma"),
                           _load_maps(doc["gamma"], n, "gamma"))


def load_file(path) -> PartialSolution:
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as e:
            raise SchemaError(f"invalid JSON: {e}") from None
    return load(doc)


def dumps(S: PartialSolution) -> str:
    return json.dumps(save(S), sort_keys=True)


def shipped(name: str) -> PartialSolution:
    """Load a descriptor bundled in the package's data directory."""
    text = resources.files("partial_ybe").joinpath("data").joinpath(f"{name}.json").read_text()
    return load(text)
