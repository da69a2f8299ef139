"""JSON Schemas (draft 2020-12) for the reports written by the CLI."""

_FLOAT_OR_TAG = {"anyOf": [{"type": "number"}, {"type": "string", "enum": ["nan", "inf", "-inf"]}]}

SUITE_REPORT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "trigeom.suite/1",
    "type": "object",
    "required": ["schema", "seed", "triangle_count", "eps_rel", "degeneracy_eps", "passed",
                 "checks", "failures", "skip_counts"],
    "additionalProperties": False,
    "properties": {
        "schema": {"const": "trigeom.suite/1"},
        "seed": {"type": "integer"},
        "triangle_count": {"type": "integer", "minimum": 1},
        "eps_rel": {"type": "number", "exclusiveMinimum": 0},
        "degeneracy_eps": {"type": "number", "exclusiveMinimum": 0},
        "passed": {"type": "boolean"},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "passed", "experimental", "worst_residual", "worst_triangle", "counts"],
                "additionalProperties": False,
                "properties": {
                    "id": {"type": "string"},
                    "passed": {"type": "boolean"},
                    "experimental": {"type": "boolean"},
                    "worst_residual": _FLOAT_OR_TAG,
                    "worst_triangle": {"type": "integer", "minimum": -1},
                    "counts": {
                        "type": "object",
                        "required": ["PASS", "FAIL", "SKIPPED_DEGENERATE", "CONSTRUCTION_ERROR"],
                        "additionalProperties": {"type": "integer", "minimum": 0},
                    },
                },
            },
        },
        "failures": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "status", "residual", "triangle", "triangle_index", "message"],
                "properties": {
                    "id": {"type": "string"},
                    "status": {"enum": ["FAIL", "CONSTRUCTION_ERROR"]},
                    "residual": _FLOAT_OR_TAG,
                    "triangle": {"type": "array", "items": {"type": "number"}, "minItems": 6, "maxItems": 6},
                    "triangle_index": {"type": "integer"},
                    "message": {"type": "string"},
                },
            },
        },
        "skip_counts": {"type": "object", "additionalProperties": {"type": "integer", "minimum": 0}},
    },
}

EVAL_REPORT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "trigeom.eval/1",
    "type": "object",
    "required": ["schema", "seed", "triangles", "eps", "passed", "emits", "assertions"],
    "additionalProperties": False,
    "properties": {
        "schema": {"const": "trigeom.eval/1"},
        "seed": {"type": "integer"},
        "triangles": {"type": "integer", "minimum": 1},
        "eps": {"type": "number", "exclusiveMinimum": 0},
        "passed": {"type": "boolean"},
        "emits": {"type": "array", "items": {"type": "string"}},
        "assertions": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["index", "source", "line", "column", "max_residual", "worst_triangle", "status"],
                "properties": {
                    "index": {"type": "integer"},
                    "source": {"type": "string"},
                    "line": {"type": "integer", "minimum": 1},
                    "column": {"type": "integer", "minimum": 1},
                    "max_residual": {"type": "number", "minimum": 0},
                    "worst_triangle": {"type": ["integer", "null"]},
                    "status": {"enum": ["PASS", "FAIL", "ERROR"]},
                    "error": {
                        "type": "object",
                        "required": ["message", "line", "column", "triangle"],
                    },
                },
            },
        },
    },
}

CENTERS_REPORT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "trigeom.centers/1",
    "type": "object",
    "required": ["schema", "triangle", "degenerate", "points"],
    "additionalProperties": False,
    "properties": {
        "schema": {"const": "trigeom.centers/1"},
        "triangle": {"type": "array", "items": {"type": "number"}, "minItems": 6, "maxItems": 6},
        "degenerate": {"type": "boolean"},
        "points": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "x", "y"],
                "additionalProperties": False,
                "properties": {"name": {"type": "string"}, "x": {"type": "number"}, "y": {"type": "number"}},
            },
        },
    },
}
