"""
JSON documents for ideals and command results.

An ideal is {"dim": d, "vars": [...], "gens": [[...], ...]} with generators
in canonical (descending lex) order.  A result is
{"command": name, "inputs": {...}, "result": payload} where the payload
holds only integers, booleans, strings, lists and ideal documents.
"""

import json
from typing import Any, Dict, Optional, Sequence

from .errors import DimensionMismatch, MonomialIdealError
from .monomial import MonomialIdeal, default_vars, minimalize


class SerializationError(MonomialIdealError):
    def __init__(self, message):
        super().__init__(message, operation="deserialize")


def ideal_to_dict(I: MonomialIdeal, names: Optional[Sequence[str]] = None) -> Dict[str, Any]:
    names = tuple(names) if names is not None else default_vars(I.dim)
    if len(names) != I.dim:
        raise DimensionMismatch(f"{len(names)} variable names for dimension {I.dim}", "serialize", I)
    return {"dim": I.dim, "vars": list(names), "gens": [list(g) for g in I.gens]}


def ideal_from_dict(doc, names: Optional[Sequence[str]] = None) -> MonomialIdeal:
    """Validate and rebuild an ideal.  When ``names`` is given the document
    must use exactly those variables."""
    if not isinstance(doc, dict) or set(doc) != {"dim", "vars", "gens"}:
        raise SerializationError("an ideal document has exactly the keys dim, vars, gens")
    d, vars_, gens = doc["dim"], doc["vars"], doc["gens"]
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise SerializationError(f"bad dimension {d!r}")
    if not isinstance(vars_, list) or len(vars_) != d or not all(isinstance(v, str) for v in vars_):
        raise SerializationError(f"vars must list {d} names")
    if names is not None and list(names) != vars_:
        raise SerializationError(f"variables {vars_} do not match {list(names)}")
    if not isinstance(gens, list) or not gens:
        raise SerializationError("gens must be a nonempty list")
    for g in gens:
        if (not isinstance(g, list) or len(g) != d
                or not all(isinstance(e, int) and not isinstance(e, bool) and e >= 0 for e in g)):
            raise SerializationError(f"bad generator {g!r} for dimension {d}")
    return minimalize([tuple(g) for g in gens], d)


def dumps(I: MonomialIdeal, names=None) -> str:
    return json.dumps(ideal_to_dict(I, names), separators=(",", ":"))


def loads(text: str, names=None) -> MonomialIdeal:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SerializationError(f"malformed document: {exc}") from None
    return ideal_from_dict(doc, names)


def result_record(command: str, inputs: Dict[str, Any], result: Any) -> Dict[str, Any]:
    return {"command": command, "inputs": inputs, "result": result}


def result_from_dict(doc) -> Dict[str, Any]:
    if not isinstance(doc, dict) or set(doc) != {"command", "inputs", "result"}:
        raise SerializationError("a result document has exactly the keys command, inputs, result")
    if not isinstance(doc["command"], str) or not isinstance(doc["inputs"], dict):
        raise SerializationError("command must be a string and inputs an object")
    return doc
