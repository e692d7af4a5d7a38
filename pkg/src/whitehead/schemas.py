"""JSON Schemas for the ``--json`` output of each CLI subcommand."""

_word = {"type": "string"}
_step = {
    "type": "object",
    "properties": {
        "aut": {"type": ["string", "null"]},
        "conjugator": {"type": "string"},
    },
    "required": ["aut"],
    "additionalProperties": False,
}
_trace = {"type": "array", "items": _step}
_graph = {
    "type": "object",
    "properties": {
        "vertex_count": {"type": "integer", "minimum": 0},
        "rank": {"type": "integer", "minimum": 1},
        "base": {"type": ["integer", "null"]},
        "edges": {
            "type": "array",
            "items": {"type": "array", "prefixItems": [{"type": "integer"}, _word, {"type": "integer"}],
                      "minItems": 3, "maxItems": 3},
        },
    },
    "required": ["vertex_count", "rank", "edges"],
}
_history = {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 1}


def _minimize(input_schema, minimal_schema):
    return {
        "type": "object",
        "properties": {
            "command": {"type": "string"},
            "rank": {"type": "integer", "minimum": 1},
            "input": input_schema,
            "minimal": minimal_schema,
            "size_history": _history,
            "trace": _trace,
        },
        "required": ["command", "rank", "input", "minimal", "size_history", "trace"],
    }


SCHEMAS = {
    "minimize-word": _minimize(_word, _word),
    "minimize-cyclic": _minimize(_word, _word),
    "minimize-subgroup": _minimize(
        {"type": "array", "items": _word},
        {"type": "object",
         "properties": {"basis": {"type": "array", "items": _word}, "graph": _graph},
         "required": ["basis", "graph"]}),
    "minimize-conjugacy": _minimize(_graph, _graph),
    "minimize-tuple": _minimize({"type": "array", "items": _graph},
                                {"type": "array", "items": _graph}),
    "is-primitive": {
        "type": "object",
        "properties": {"command": {"type": "string"}, "input": _word,
                       "primitive": {"type": "boolean"}, "trace": _trace},
        "required": ["command", "input", "primitive"],
    },
    "is-free-factor": {
        "type": "object",
        "properties": {"command": {"type": "string"}, "input": {"type": "array", "items": _word},
                       "free_factor": {"type": "boolean"}, "trace": _trace},
        "required": ["command", "input", "free_factor"],
    },
    "fold": {
        "type": "object",
        "properties": {"command": {"type": "string"}, "graph": _graph},
        "required": ["command", "graph"],
    },
    "hypergraph": {
        "type": "object",
        "properties": {
            "command": {"type": "string"},
            "rank": {"type": "integer"},
            "hyperedges": {"type": "array", "items": {
                "type": "object",
                "properties": {"letters": {"type": "array", "items": _word, "minItems": 2},
                               "multiplicity": {"type": "integer", "minimum": 1}},
                "required": ["letters", "multiplicity"]}},
        },
        "required": ["command", "rank", "hyperedges"],
    },
    "export-dot": {
        "type": "object",
        "properties": {"command": {"type": "string"}, "dot": {"type": "string"}},
        "required": ["command", "dot"],
    },
    "oracle-check": {
        "type": "object",
        "properties": {
            "command": {"type": "string"},
            "rank": {"type": "integer"}, "cases": {"type": "integer"}, "seed": {"type": "integer"},
            "mincut_checks": {"type": "integer"}, "mincut_mismatches": {"type": "integer"},
            "delta_checks": {"type": "integer"}, "delta_mismatches": {"type": "integer"},
            "ok": {"type": "boolean"},
        },
        "required": ["command", "rank", "cases", "mincut_mismatches", "delta_mismatches", "ok"],
    },
}
