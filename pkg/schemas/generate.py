"""Regenerate the JSON schema files in this directory.

    python3 schemas/generate.py

One file per CLI command (``<group>.<command>.schema.json``); each is
self-contained so it can be used without a reference resolver.
"""
import json
from pathlib import Path

HERE = Path(__file__).resolve().parent
DRAFT = "https://json-schema.org/draft/2020-12/schema"

INT_STR = {"type": "string", "pattern": "^-?[0-9]+$"}
DEFS = {
    "intstr": INT_STR,
    "matrix": {
        "type": "object",
        "required": ["rank", "rows"],
        "additionalProperties": False,
        "properties": {
            "rank": {"type": "integer", "minimum": 0},
            "rows": {"type": "array", "items": {"type": "array", "items": {"$ref": "#/$defs/intstr"}}},
        },
    },
    "poly": {
        "type": "object",
        "required": ["variable", "terms"],
        "properties": {
            "variable": {"type": "string"},
            "terms": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["exp", "coeff"],
                    "additionalProperties": False,
                    "properties": {"exp": {"type": "integer"}, "coeff": {"$ref": "#/$defs/intstr"}},
                },
            },
            "s2_equals_t": {"const": True},
        },
        "additionalProperties": False,
    },
    "word": {
        "type": "object",
        "required": ["strands", "letters", "text"],
        "additionalProperties": False,
        "properties": {
            "strands": {"type": "integer", "minimum": 1},
            "letters": {"type": "array", "items": {"type": "integer", "not": {"const": 0}}},
            "text": {"type": "string"},
        },
    },
    "discrepancy": {
        "type": "object",
        "required": ["sweep", "check", "level", "params", "detail"],
        "additionalProperties": False,
        "properties": {
            "sweep": {"type": "string"},
            "check": {"type": "string"},
            "level": {"enum": ["required", "expected"]},
            "params": {"type": "object"},
            "detail": {"type": "string"},
        },
    },
    "case": {
        "type": "object",
        "required": ["params", "equal", "diff_positions"],
        "properties": {
            "params": {"type": "object"},
            "equal": {"type": "boolean"},
            "diff_positions": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2}},
            "closed": {"$ref": "#/$defs/matrix"},
            "oracle": {"$ref": "#/$defs/matrix"},
            "difference": {"$ref": "#/$defs/matrix"},
        },
    },
    "family_report": {
        "type": "object",
        "required": ["family", "cases", "rejected"],
        "properties": {
            "family": {"enum": ["gamma", "phi", "psi", "omega"]},
            "cases": {"type": "array", "items": {"$ref": "#/$defs/case"}},
            "rejected": {
                "type": "array",
                "items": {"type": "object", "required": ["params", "reason"], "properties": {"params": {"type": "object"}, "reason": {"type": "string"}}},
            },
            "abc_rows": {"type": "array", "items": {"type": "object"}},
        },
    },
    "unknot": {
        "type": "object",
        "required": ["word", "components", "alexander", "verdict"],
        "additionalProperties": False,
        "properties": {
            "word": {"type": "string"},
            "components": {"type": "integer", "minimum": 1},
            "alexander": {"$ref": "#/$defs/poly"},
            "verdict": {"enum": ["consistent_with_unknot", "not_unknot", "inconclusive_multicomponent"]},
        },
    },
    "dd_cell": {
        "type": "object",
        "required": ["m", "k", "reduced_alexander", "theorem_dd", "matches_theorem", "linking_eval", "linking_formula", "matches_linking", "structural"],
        "properties": {
            "m": {"type": "integer"},
            "k": {"type": "integer"},
            "reduced_alexander": {"type": "string"},
            "theorem_dd": {"type": "string"},
            "matches_theorem": {"type": "boolean"},
            "linking_eval": {"$ref": "#/$defs/intstr"},
            "linking_formula": {"$ref": "#/$defs/intstr"},
            "matches_linking": {"type": "boolean"},
            "structural": {"type": "object", "additionalProperties": {"type": ["boolean", "integer"]}},
        },
    },
    "linking_cell": {
        "type": "object",
        "required": ["m", "k", "linking_eval", "linking_formula", "matches_linking"],
        "additionalProperties": False,
        "properties": {
            "m": {"type": "integer"},
            "k": {"type": "integer"},
            "linking_eval": {"$ref": "#/$defs/intstr"},
            "linking_formula": {"$ref": "#/$defs/intstr"},
            "matches_linking": {"type": "boolean"},
        },
    },
}


def obj(required, props, extra=False):
    return {"type": "object", "required": list(required), "properties": props, "additionalProperties": extra}


def ref(name):
    return {"$ref": f"#/$defs/{name}"}


STRINGS = {"type": "array", "items": {"type": "string"}}
INT = {"type": "integer"}

SWEEPS = {
    "gamma": ref("family_report"),
    "phi": ref("family_report"),
    "psi": ref("family_report"),
    "omega": ref("family_report"),
    "dd": obj(["cells"], {"cells": {"type": "array", "items": ref("dd_cell")}}),
    "linking": obj(["cells"], {"cells": {"type": "array", "items": ref("linking_cell")}}),
    "unknots": obj(
        ["cells", "trefoil_alexander", "single_crossing_alexander"],
        {"cells": {"type": "array", "items": ref("unknot")}, "trefoil_alexander": {"type": "string"}, "single_crossing_alexander": {"type": "string"}},
    ),
    "core": obj(
        ["omega_4_0", "char_poly_4_0", "reduced_alexander_4_0", "random_samples", "random_seed", "e1_family_invariant"],
        {
            "omega_4_0": ref("matrix"),
            "char_poly_4_0": {"type": "string"},
            "reduced_alexander_4_0": {"type": "string"},
            "random_samples": INT,
            "random_seed": INT,
            "e1_family_invariant": {"type": "object", "additionalProperties": ref("intstr")},
        },
    ),
    "distinct": obj(
        ["e1_family_invariant"],
        {"e1_family_invariant": {"type": "object", "additionalProperties": {"type": "array", "items": ref("intstr")}}},
    ),
}

INVARIANTS = obj(
    ["m", "k", "strands", "monodromy", "char_poly", "reduced_alexander", "reduced_alexander_text", "linking_eval", "linking_abs", "palindromy"],
    {
        "m": INT,
        "k": INT,
        "strands": INT,
        "monodromy": ref("matrix"),
        "char_poly": ref("poly"),
        "reduced_alexander": ref("poly"),
        "reduced_alexander_text": {"type": "string"},
        "linking_eval": ref("intstr"),
        "linking_abs": ref("intstr"),
        "palindromy": obj(
            ["char_poly_sign", "char_poly_degree", "reduced_alexander_sign", "constant_term"],
            {
                "char_poly_sign": {"enum": [1, -1, None]},
                "char_poly_degree": INT,
                "reduced_alexander_sign": {"enum": [1, -1, None]},
                "constant_term": INT,
            },
        ),
    },
)

RESULTS = {
    "braid.parse": obj(["input", "word", "length"], {"input": {"type": "string"}, "word": ref("word"), "length": INT}),
    "braid.family": obj(
        ["m", "k", "word", "phi", "psi"],
        {"m": INT, "k": INT, "word": ref("word"), "phi": {"type": "string"}, "psi": {"type": "string"}},
    ),
    "braid.info": obj(
        ["word", "length", "exponent_sum", "freely_reduced", "permutation", "closure_components"],
        {
            "word": ref("word"),
            "length": INT,
            "exponent_sum": INT,
            "freely_reduced": {"type": "string"},
            "permutation": obj(
                ["strands", "images", "cycles"],
                {"strands": INT, "images": {"type": "array", "items": INT}, "cycles": {"type": "array", "items": {"type": "array", "items": INT}}},
            ),
            "closure_components": INT,
        },
    ),
    "braid.artin": obj(
        ["word", "images", "presentation"],
        {
            "word": ref("word"),
            "images": {"type": "array", "items": obj(["generator", "image"], {"generator": {"type": "string"}, "image": STRINGS})},
            "presentation": obj(
                ["generators", "relators"],
                {"generators": STRINGS, "relators": {"type": "array", "items": STRINGS}},
            ),
        },
    ),
    "cover.monodromy": obj(
        ["word", "monodromy", "det", "char_poly"],
        {"word": ref("word"), "monodromy": ref("matrix"), "det": ref("intstr"), "char_poly": ref("poly")},
    ),
    "cover.closed-form": obj(
        ["family", "params", "closed", "oracle", "equal"],
        {
            "family": {"enum": ["gamma", "phi", "psi", "omega"]},
            "params": {"type": "object"},
            "closed": ref("matrix"),
            "oracle": ref("matrix"),
            "equal": {"type": "boolean"},
        },
    ),
    "cover.compare": ref("family_report"),
    "cover.alexander": INVARIANTS,
    "alexander.invariants": INVARIANTS,
    "alexander.theorem-dd": obj(
        ["m", "k", "theorem_dd", "text", "oracle", "equal"],
        {"m": INT, "k": INT, "theorem_dd": ref("poly"), "text": {"type": "string"}, "oracle": ref("poly"), "equal": {"type": "boolean"}},
    ),
    "alexander.linking": obj(
        ["m", "k", "linking_formula", "oracle_value_at_one", "oracle_linking_abs", "equal"],
        {
            "m": INT,
            "k": INT,
            "linking_formula": ref("intstr"),
            "oracle_value_at_one": ref("intstr"),
            "oracle_linking_abs": ref("intstr"),
            "equal": {"type": "boolean"},
        },
    ),
    "alexander.unknot-check": ref("unknot"),
    "sw.e1": obj(
        ["m", "k", "delta_sym", "sw", "sw_text", "total_sw", "e1_family_invariant"],
        {
            "m": INT,
            "k": INT,
            "delta_sym": ref("poly"),
            "sw": ref("poly"),
            "sw_text": {"type": "string"},
            "total_sw": ref("intstr"),
            "e1_family_invariant": ref("intstr"),
        },
    ),
    "sw.distinguish": obj(
        ["m", "i", "j", "sw_nonzero", "verdict"],
        {"m": INT, "i": INT, "j": INT, "sw_nonzero": {"type": "boolean"}, "verdict": {"enum": ["distinct", "not_distinct", "inconclusive"]}},
    ),
    "sw.fiber-data": obj(
        ["strands", "fiber_genus", "boundary_components", "h1_rank", "lefschetz_fiber_genus"],
        {k: INT for k in ["strands", "fiber_genus", "boundary_components", "h1_rank", "lefschetz_fiber_genus"]},
    ),
}
for name in ["gamma", "phi", "psi", "omega", "dd", "linking", "unknots"]:
    RESULTS[f"verify.{name}"] = obj([name], {name: SWEEPS[name]})
RESULTS["verify.all"] = obj(list(SWEEPS), SWEEPS)


def report_schema(command: str, results: dict) -> dict:
    group, cmd = command.split(".")
    return {
        "$schema": DRAFT,
        "$id": f"braidcover/{command}.schema.json",
        "title": f"braidcover {group} {cmd} run report",
        "type": "object",
        "required": ["tool", "version", "command", "parameters", "results", "discrepancies", "exit_status"],
        "additionalProperties": False,
        "properties": {
            "tool": {"const": "braidcover"},
            "version": {"type": "string"},
            "command": {"const": f"{group} {cmd}"},
            "parameters": {"type": "object", "additionalProperties": {"type": ["integer", "string", "boolean"]}},
            "results": {"oneOf": [results, {"type": "null"}]},
            "discrepancies": {"type": "array", "items": ref("discrepancy")},
            "exit_status": {"enum": [0, 2, 3, 4]},
            "error": obj(["type", "message"], {"type": {"type": "string"}, "message": {"type": "string"}}),
        },
        "$defs": DEFS,
    }


def main():
    for old in HERE.glob("*.schema.json"):
        old.unlink()
    for command, results in RESULTS.items():
        text = json.dumps(report_schema(command, results), indent=2, sort_keys=True) + "\n"
        (HERE / f"{command}.schema.json").write_text(text, encoding="utf-8")


if __name__ == "__main__":
    main()
