"""JSON schemas for every file format the tool reads."""

from __future__ import annotations

import jsonschema

from .errors import InputError

RATIONAL = {
    "oneOf": [
        {"type": "integer"},
        {"type": "string", "pattern": r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$"},
    ]
}

NAMED_COEF = {
    "type": "object",
    "required": ["name", "coef"],
    "properties": {"name": {"type": "string"}, "coef": RATIONAL},
    "additionalProperties": False,
}

BIGRADED_TABLE = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["deg", "hodge", "dim"],
        "properties": {
            "deg": {"type": "integer", "minimum": 0},
            "hodge": {
                "type": "array",
                "items": {"type": "integer", "minimum": 0},
                "minItems": 2,
                "maxItems": 2,
            },
            "dim": {"type": "integer", "minimum": 1},
        },
        "additionalProperties": False,
    },
}

RING_PRESENTATION = {
    "type": "object",
    "required": ["dim", "basis", "degree"],
    "properties": {
        "dim": {"type": "integer", "minimum": 0},
        "basis": {"type": "array", "items": {"type": "array", "items": {"type": "string"}}},
        "mult": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["lhs", "rhs", "out"],
                "properties": {
                    "lhs": {"type": "string"},
                    "rhs": {"type": "string"},
                    "out": {"type": "array", "items": NAMED_COEF},
                },
                "additionalProperties": False,
            },
        },
        "degree": {"type": "array", "items": NAMED_COEF},
        "aliases": {"type": "object", "additionalProperties": {"type": "string"}},
    },
    "additionalProperties": False,
}

INTERSECTION_MINIMA = {
    "type": "object",
    "required": ["dim", "minima"],
    "properties": {
        "dim": {"type": "integer", "minimum": 1},
        "minima": {
            "type": "object",
            "patternProperties": {r"^[1-9][0-9]*$": {"type": "integer", "minimum": 1}},
            "additionalProperties": False,
        },
    },
    "additionalProperties": False,
}

E1_PAGE = {
    "type": "object",
    "required": ["p_max", "complete", "cells"],
    "properties": {
        "p_max": {"type": "integer"},
        "complete": {"type": "boolean"},
        "cells": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["p", "table"],
                "properties": {"p": {"type": "integer", "minimum": 0}, "table": BIGRADED_TABLE},
            },
        },
    },
}

PRESET_VARIETY = {
    "type": "object",
    "required": ["preset"],
    "properties": {
        "preset": {"enum": ["projective_space", "product_of_projective_spaces", "curve"]},
        "params": {"type": "object", "additionalProperties": {"type": "integer"}},
    },
    "additionalProperties": False,
}

INLINE_VARIETY = {
    "type": "object",
    "required": ["dim", "q_irr", "hodge", "ring", "todd"],
    "properties": {
        "dim": {"type": "integer", "minimum": 1},
        "q_irr": {"type": "integer", "minimum": 0},
        "hodge": BIGRADED_TABLE,
        "ring": RING_PRESENTATION,
        "todd": {"type": "array", "items": NAMED_COEF},
    },
    "additionalProperties": False,
}

PROBLEM_FILE = {
    "type": "object",
    "properties": {
        "variety": {"oneOf": [PRESET_VARIETY, INLINE_VARIETY]},
        "degree": {
            "oneOf": [
                {"type": "object", "additionalProperties": RATIONAL},
                {"type": "array", "items": NAMED_COEF},
            ]
        },
        "minima": INTERSECTION_MINIMA,
        "target": {
            "oneOf": [
                {
                    "type": "object",
                    "required": ["PN"],
                    "properties": {"PN": {"type": "integer", "minimum": 1}},
                    "additionalProperties": False,
                },
                {
                    "type": "object",
                    "required": ["genericY"],
                    "properties": {
                        "genericY": {
                            "type": "object",
                            "required": ["N", "fibers", "ambient"],
                            "properties": {
                                "N": {"type": "integer", "minimum": 1},
                                "fibers": {
                                    "type": "object",
                                    "patternProperties": {r"^[1-9][0-9]*$": BIGRADED_TABLE},
                                    "additionalProperties": False,
                                },
                                "ambient": BIGRADED_TABLE,
                            },
                            "additionalProperties": False,
                        }
                    },
                    "additionalProperties": False,
                },
            ]
        },
        "flags": {
            "type": "object",
            "properties": {
                "acyclic": {"type": "boolean"},
                "cutoff_variant": {"enum": ["r+1", "r-1"]},
            },
            "additionalProperties": False,
        },
        "d1_ranks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["p", "q", "weight", "rank"],
                "properties": {
                    "p": {"type": "integer", "minimum": 0},
                    "q": {"type": "integer", "minimum": 0},
                    "weight": {"type": "integer", "minimum": 0},
                    "rank": {"type": "integer", "minimum": 0},
                },
                "additionalProperties": False,
            },
        },
        "description": {"type": "string"},
    },
    "additionalProperties": False,
}


def validate(instance, schema, what: str) -> None:
    try:
        jsonschema.validate(instance, schema)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise InputError(f"{what}: schema error at {where}: {exc.message}") from None
