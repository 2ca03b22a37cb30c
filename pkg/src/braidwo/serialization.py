from enum import Enum
import json
from pathlib import Path
import sys
from typing import Any, Dict

from pydantic import BaseModel

from .braid.expseq import ExpSeq, parse_expseq
from .ordinals.cnf import Ordinal, format_ordinal, parse_ordinal
from .ordinals.intmath import sci_digest
from .special.tree import Leaf, Node, format_tree, parse_tree_text

SCHEMA = "braidwo.report/1"

SCI_MIN_BITS = 64


def allow_huge_ints():
    # Hardy values and hydra lengths run far past the default conversion limit
    sys.set_int_max_str_digits(0)


def json_serialize_bignat(value: int, sci: bool = False):
    if sci:
        return {"__bignat__": True, "decimal": str(value), "sci": sci_digest(value)}
    else:
        return str(value)


def json_deserialize_bignat(value):
    if isinstance(value, dict) and value.get("__bignat__"):
        return int(value["decimal"])
    elif isinstance(value, str):
        return int(value)
    else:
        assert isinstance(value, int)
        return value


def json_serialize_expseq(value: ExpSeq):
    return {"__expseq__": True, "exps": str(value)}


def json_deserialize_expseq(value):
    if isinstance(value, dict) and value.get("__expseq__"):
        return parse_expseq(value["exps"])
    elif isinstance(value, str):
        return parse_expseq(value)
    else:
        return value


def json_serialize_ordinal(value: Ordinal):
    return {"__ordinal__": True, "cnf": format_ordinal(value)}


def json_deserialize_ordinal(value):
    if isinstance(value, dict) and value.get("__ordinal__"):
        return parse_ordinal(value["cnf"])
    elif isinstance(value, str):
        return parse_ordinal(value)
    else:
        return value


def json_serialize_tree(value: Leaf | Node):
    return {"__skew_tree__": True, "tree": format_tree(value)}


def json_deserialize_tree(value):
    if isinstance(value, dict) and value.get("__skew_tree__"):
        return parse_tree_text(value["tree"])
    elif isinstance(value, str):
        return parse_tree_text(value)
    else:
        return value


def to_jsonable(obj: Any, sci: bool = False) -> Any:
    """Plain JSON values for reports.

    Python ints stay ints unless sci is set and they exceed SCI_MIN_BITS, in
    which case they get the bignat document with a leading-digit digest.
    """
    if isinstance(obj, bool):
        return obj
    elif isinstance(obj, int):
        if sci and obj.bit_length() > SCI_MIN_BITS:
            return json_serialize_bignat(obj, sci=True)
        return obj
    elif isinstance(obj, BaseModel):
        return to_jsonable(obj.model_dump(mode="json"), sci)
    elif isinstance(obj, ExpSeq):
        return json_serialize_expseq(obj)
    elif isinstance(obj, Ordinal):
        return json_serialize_ordinal(obj)
    elif isinstance(obj, (Leaf, Node)):
        return json_serialize_tree(obj)
    elif isinstance(obj, Enum):
        return obj.value
    elif isinstance(obj, Path):
        return str(obj)
    elif isinstance(obj, dict):
        return {str(k): to_jsonable(v, sci) for k, v in obj.items()}
    elif isinstance(obj, (list, tuple)):
        return [to_jsonable(v, sci) for v in obj]
    else:
        return obj


def report_document(payload: Dict[str, Any], sci: bool = False) -> Dict[str, Any]:
    doc = to_jsonable(payload, sci)
    doc["schema"] = SCHEMA
    return doc


def dumps(payload: Dict[str, Any], sci: bool = False) -> str:
    """Stable JSON text of a report: sorted keys and the schema tag."""
    return json.dumps(report_document(payload, sci), sort_keys=True, indent=2)


def loads(text: str) -> Dict[str, Any]:
    doc = json.loads(text)
    if doc.get("schema") != SCHEMA:
        raise ValueError(f"Unsupported report schema: {doc.get('schema')!r}")
    return doc
