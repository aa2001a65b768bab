##
# @file LogSchema.py
#
# @brief JSON schema (Draft 7) of the canonical experiment log.
# Structure only; model invariants are checked by the model classes themselves.
#
# @section libraries_LogSchema Libraries/Modules
# - jsonschema (https://python-jsonschema.readthedocs.io)
#   - Draft 7 validator.
##

# External imports
from jsonschema import Draft7Validator

## Current canonical format version.
LOG_FORMAT_VERSION: str = "1"

_EPISODE_METRICS = {
    "type": "object",
    "additionalProperties": {"type": "array", "items": {"type": "number"}},
}

_RUN = {
    "type": "object",
    "required": ["intervals"],
    "additionalProperties": False,
    "properties": {
        "intervals": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["step_count", "metrics"],
                "additionalProperties": False,
                "properties": {
                    "step_count": {"type": "integer", "minimum": 0},
                    "metrics": _EPISODE_METRICS,
                },
            },
        },
        "absolute": {
            "type": "object",
            "required": ["metrics"],
            "additionalProperties": False,
            "properties": {"metrics": _EPISODE_METRICS},
        },
    },
}

## Canonical experiment log schema. Unknown top-level keys are allowed and end up in the metadata.
LOG_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["environments", "metrics", "version"],
    "properties": {
        "version": {"type": "string", "const": LOG_FORMAT_VERSION},
        "metrics": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name"],
                "additionalProperties": False,
                "properties": {
                    "name": {"type": "string", "minLength": 1},
                    "unit_interval": {"type": "boolean"},
                    "higher_is_better": {"type": "boolean"},
                },
            },
        },
        "environments": {
            "type": "object",
            "additionalProperties": {
                "type": "object",
                "additionalProperties": {
                    "type": "object",
                    "additionalProperties": {
                        "type": "object",
                        "additionalProperties": _RUN,
                    },
                },
            },
        },
        "metadata": {"type": "object", "additionalProperties": {"type": "string"}},
    },
}

## Shared validator instance (validators are stateless and thread safe).
LOG_VALIDATOR = Draft7Validator(LOG_SCHEMA)


def json_path(parts) -> str:
    """!
    Format a sequence of keys and indices as a JSON path ("$.a.b[2]").
    @param parts iterable of str | int
    @return str
    """
    path = "$"
    for part in parts:
        if isinstance(part, int):
            path += f"[{part}]"
        else:
            path += f".{part}"
    return path


def schema_violations(document: object) -> list:
    """!
    Return every structural violation of the document as sorted (path, message) pairs.
    Shallow paths come first; a missing required field is reported at its own path.
    @param document object Parsed JSON.
    @return list[tuple[str, str]]
    """
    found = set()
    for error in LOG_VALIDATOR.iter_errors(document):
        parts = list(error.absolute_path)
        if error.validator == "required" and isinstance(error.instance, dict):
            for name in error.validator_value:
                if name not in error.instance:
                    found.add((len(parts) + 1, json_path(parts + [name]), "required field is missing"))
        else:
            found.add((len(parts), json_path(parts), error.message))
    return [(path, message) for _, path, message in sorted(found)]
