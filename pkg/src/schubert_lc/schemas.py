"""JSON Schemas (draft 2020-12) for everything the command line emits.

Kept as plain dicts so that the package itself does not depend on a
validator; the test suite checks CLI output against them with jsonschema.
"""

_INT_LIST = {"type": "array", "items": {"type": "integer", "minimum": 0}}
_BOX = {"type": "array", "items": {"type": "integer", "minimum": 1}, "minItems": 2, "maxItems": 2}
_CONTEXT = {
    "type": "object",
    "properties": {"k": {"type": "integer"}, "n": {"type": "integer"}},
    "required": ["k", "n"],
}

PATTERN = {
    "type": "object",
    "properties": {
        "context": _CONTEXT,
        "partition": _INT_LIST,
        "paths": {"type": "array", "items": {"type": "array", "items": _BOX, "minItems": 1}},
        "bullets": {"type": "array", "items": _BOX},
        "quotient": _INT_LIST,
        "r": {"type": "integer", "minimum": 0},
        "bullets_count": {"type": "integer", "minimum": 0},
        "q": {"type": "integer"},
        "p": {"type": "integer"},
    },
    "required": ["partition", "paths", "bullets", "quotient", "r", "bullets_count"],
}

PATTERNS_OUTPUT = {
    "type": "object",
    "properties": {
        "context": _CONTEXT,
        "partition": _INT_LIST,
        "count": {"type": "integer", "minimum": 0},
        "patterns": {"type": "array", "items": PATTERN},
    },
    "required": ["context", "partition", "count", "patterns"],
}

FACTOR = {
    "type": "object",
    "properties": {
        "label": _INT_LIST,
        "twist": {"type": "integer"},
        "mult": {"type": "integer", "minimum": 1},
    },
    "required": ["label", "twist", "mult"],
    "additionalProperties": False,
}

MODULE = {
    "type": "object",
    "properties": {
        "role": {"enum": ["N", "M", "H"]},
        "base": _INT_LIST,
        "layers": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"p": {"type": "integer"}, "factors": {"type": "array", "items": FACTOR}},
                "required": ["p", "factors"],
            },
        },
    },
    "required": ["role", "base", "layers"],
}

VERMA_OUTPUT = {
    "type": "object",
    "properties": {"context": _CONTEXT, "highest_weight": {"type": "string"}, "module": MODULE},
    "required": ["context", "module"],
}

LOCALCOH_OUTPUT = {
    "type": "object",
    "properties": {
        "context": _CONTEXT,
        "partition": _INT_LIST,
        "route": {"enum": ["formula", "oracle"]},
        "cohomology": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"q": {"type": "integer", "minimum": 0}, "module": MODULE},
                "required": ["q", "module"],
            },
        },
    },
    "required": ["context", "partition", "cohomology"],
}

_DEGREE_MAP = {"type": "object", "patternProperties": {"^[0-9]+$": {"type": "integer", "minimum": 0}}}

GC_OUTPUT = {
    "type": "object",
    "properties": {
        "context": _CONTEXT,
        "partition": _INT_LIST,
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"j": {"type": "integer"}, "subpartitions": {"type": "array", "items": _INT_LIST}},
                "required": ["j", "subpartitions"],
            },
        },
        "pieces": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "p": {"type": "integer"},
                    "label": _INT_LIST,
                    "dims": _DEGREE_MAP,
                    "ranks": _DEGREE_MAP,
                    "cohomology": _DEGREE_MAP,
                },
                "required": ["p", "label", "dims", "ranks", "cohomology"],
            },
        },
    },
    "required": ["context", "partition", "terms", "pieces"],
}

_STATUS = {"anyOf": [{"const": "ok"}, {"type": "array"}, {"type": "string"}]}

VERIFY_OUTPUT = {
    "type": "object",
    "properties": {
        "instance": {
            "type": "object",
            "properties": {"k": {"type": "integer"}, "n": {"type": "integer"}, "partition": _INT_LIST},
            "required": ["k", "n", "partition"],
        },
        "formula_vs_oracle": _STATUS,
        "euler": _STATUS,
        "dsq_zero": _STATUS,
        "koszul_exactness": _STATUS,
        "bijection": _STATUS,
    },
    "required": ["instance", "formula_vs_oracle", "euler", "dsq_zero", "koszul_exactness"],
}

DET_OUTPUT = {
    "type": "object",
    "properties": {
        "instance": {
            "type": "object",
            "properties": {"m": {"type": "integer"}, "n": {"type": "integer"}, "p": {"type": "integer"}},
            "required": ["m", "n", "p"],
        },
        "per_s": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "s": {"type": "integer", "minimum": 0},
                    "label": _INT_LIST,
                    "gen_poly": {
                        "type": "array",
                        "items": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
                    },
                    "weights_ok": {"type": ["boolean", "null"]},
                },
                "required": ["s", "gen_poly", "weights_ok"],
            },
        },
        "match": {"anyOf": [{"const": "ok"}, {"const": "skipped"}, {"type": "array"}]},
    },
    "required": ["per_s", "match"],
}

BY_COMMAND = {
    "patterns": PATTERNS_OUTPUT,
    "verma": VERMA_OUTPUT,
    "localcoh": LOCALCOH_OUTPUT,
    "gc": GC_OUTPUT,
    "verify": VERIFY_OUTPUT,
    "det": DET_OUTPUT,
}
