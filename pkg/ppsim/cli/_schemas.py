NUMBER_LIST = {"type": "array", "items": {"type": "number"}}

NESTED_NUMBERS = {
    "type": "array",
    "items": {
        "anyOf": [{"type": "number"}, {"$ref": "#/definitions/nested"}]
    },
}

METRICS_SCHEMA = {
    "type": "object",
    "properties": {
        name: {"type": "number"}
        for name in (
            "i_ab",
            "i_ae",
            "key_rate",
            "holevo",
            "qber_raw",
            "qber_sifted",
        )
    },
    "required": [
        "i_ab",
        "i_ae",
        "key_rate",
        "holevo",
        "qber_raw",
        "qber_sifted",
    ],
    "additionalProperties": False,
}

POINT_REPORT_SCHEMA = {
    "$schema": "http://json-schema.org/draft-06/schema",
    "definitions": {"nested": NESTED_NUMBERS},
    "type": "object",
    "properties": {
        "channel": {
            "enum": ["amplitude_damping", "depolarizing", "none"]
        },
        "ordering": {"enum": ["before_attack", "after_attack"]},
        "p": {"type": "number", "minimum": 0, "maximum": 1},
        "joint": {"$ref": "#/definitions/nested"},
        "metrics": METRICS_SCHEMA,
        "eigenvalues": {
            "type": "object",
            "properties": {
                "a0": NUMBER_LIST,
                "a1": NUMBER_LIST,
                "average": NUMBER_LIST,
            },
            "required": ["a0", "a1", "average"],
            "additionalProperties": False,
        },
    },
    "required": ["channel", "p", "joint", "metrics", "eigenvalues"],
}

CHECK_SCHEMA = {
    "type": "object",
    "properties": {
        "name": {"type": "string"},
        "passed": {"type": "boolean"},
        "value": {"type": "number"},
        "detail": {"type": "string"},
    },
    "required": ["name", "passed", "value", "detail"],
}

FEASIBILITY_REPORT_SCHEMA = {
    "$schema": "http://json-schema.org/draft-06/schema",
    "type": "object",
    "properties": {
        "p": {"type": "number", "exclusiveMinimum": 0, "exclusiveMaximum": 1},
        "confirmed": {"type": "boolean"},
        "search": {
            "type": "object",
            "properties": {
                "metric": {"enum": ["tv", "l2"]},
                "distance": {"type": "number", "minimum": 0},
                "evaluations": {"type": "integer", "minimum": 0},
                "budget": {"type": "integer", "minimum": 1},
                "exhausted": {"type": "boolean"},
                "marginal_floor": {"type": "number", "minimum": 0},
                "model": {"type": "object"},
            },
            "required": ["metric", "distance", "model", "evaluations"],
        },
        "checks": {
            "type": "object",
            "properties": {
                "passed": {"type": "boolean"},
                "steps": {"type": "array", "items": CHECK_SCHEMA},
            },
            "required": ["passed", "steps"],
        },
    },
    "required": ["p", "confirmed", "search", "checks"],
}
