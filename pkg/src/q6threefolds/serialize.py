"""Reading variety and subspace descriptions, and the JSON envelope.

Variety specs:
    builtin:<name>        one of the built-ins, or builtin:segre_divisor
    divisor:<f>           a Q4 divisor from a polynomial in normal form
    <path>.json | {...}   JSON: {"kind": "builtin" | "divisor" | "param", ...}

Subspace specs:
    V0, H0, test          named subspaces (test = {x1 = x3 = x5 = x7 = 0})
    random:<kind>:<seed>  kind in vertical, horizontal, p4
    <path>.json | {...}   {"basis": [[...]]} or {"equations": [[...]]}
"""

from __future__ import annotations

import json
import os

from .algebra.fields import QQ
from .expr import ExprError
from .quadspace import H0, V0, IsoType, LinearSubspace, random_max_isotropic, random_subspace
from .varieties import BUILTINS, ParamVariety, Q4Divisor, VarietyError, builtin, segre_divisor

SCHEMA_VERSION = 1


class InputError(ValueError):
    """Malformed or invalid user input (exit code 2)."""


def _read_json(text: str, what: str) -> dict:
    src = text
    if not text.lstrip().startswith("{"):
        if not os.path.exists(text):
            raise InputError(f"{what} {text!r} is neither a known name nor an existing JSON file")
        with open(text, encoding="utf-8") as fh:
            src = fh.read()
    try:
        payload = json.loads(src)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {what}: {exc}") from None
    if not isinstance(payload, dict):
        raise InputError(f"{what} JSON must be an object")
    return payload


def load_variety(spec: str):
    try:
        if spec.startswith("builtin:"):
            name = spec.split(":", 1)[1]
            return segre_divisor() if name == "segre_divisor" else builtin(name)
        if spec.startswith("divisor:"):
            return Q4Divisor.from_expr(spec.split(":", 1)[1])
        payload = _read_json(spec, "variety spec")
        return variety_from_json(payload)
    except (VarietyError, ExprError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(str(exc)) from None


def variety_from_json(payload: dict):
    kind = payload.get("kind")
    if kind == "builtin":
        name = payload.get("name")
        if name == "segre_divisor":
            return segre_divisor()
        if name not in BUILTINS:
            raise InputError(f"unknown builtin {name!r}")
        return builtin(name)
    if kind == "divisor":
        return Q4Divisor.from_json(payload)
    if kind == "param":
        return ParamVariety.from_json(payload)
    raise InputError("variety JSON needs \"kind\": \"builtin\", \"divisor\" or \"param\"")


def variety_to_json(X) -> dict:
    if isinstance(X, Q4Divisor):
        return {"kind": "divisor", **X.to_json()}
    return {"kind": "param", **X.to_json()}


TEST_SUBSPACE = LinearSubspace.from_equations(
    [[1 if j == i else 0 for j in range(8)] for i in (0, 2, 4, 6)], field=QQ
)


def load_subspace(spec: str) -> LinearSubspace:
    named = {"V0": V0, "H0": H0, "test": TEST_SUBSPACE}
    if spec in named:
        return named[spec]
    if spec.startswith("random:"):
        parts = spec.split(":")
        if len(parts) != 3 or not parts[2].lstrip("-").isdigit():
            raise InputError("random subspaces are written random:<vertical|horizontal|p4>:<seed>")
        kind, seed = parts[1], int(parts[2])
        if kind == "vertical":
            return random_max_isotropic(IsoType.VERTICAL, QQ, seed)
        if kind == "horizontal":
            return random_max_isotropic(IsoType.HORIZONTAL, QQ, seed)
        if kind == "p4":
            return random_subspace(5, QQ, seed)
        raise InputError(f"unknown random subspace kind {kind!r}")
    payload = _read_json(spec, "subspace spec")
    try:
        W = LinearSubspace.from_json(payload)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if W.n != 8:
        raise InputError("subspaces live in K^8")
    return W


def envelope(command: str, result) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command, "result": result}


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def table(obj, prefix: str = "") -> list[str]:
    """Flatten nested JSON into aligned 'key  value' lines."""
    rows = []

    def walk(o, key):
        if isinstance(o, dict):
            for k, v in o.items():
                walk(v, f"{key}.{k}" if key else str(k))
        elif isinstance(o, list) and o and any(isinstance(v, (dict, list)) for v in o):
            for i, v in enumerate(o):
                walk(v, f"{key}[{i}]")
        else:
            rows.append((key, json.dumps(o) if not isinstance(o, str) else o))

    walk(obj, prefix)
    width = max((len(k) for k, _ in rows), default=0)
    return [f"{k.ljust(width)}  {v}" for k, v in rows]
