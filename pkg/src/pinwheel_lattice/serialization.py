"""JSON encoding of classes, verdicts and reports.

Rationals are written as strings (``"3/2"``, ``"4"``), never as floats, and
documents are dumped with sorted keys so that parse -> dump is byte-stable.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from . import __version__
from .cones import ConeVerdict
from .errors import ParseError
from .lattice import HomologyClass, ModClass, PeriodVector, format_rational, get_chart, parse_rational
from .pinwheels import DelPezzoVerdict, FeasibilityReport, TransportWitness
from .reflections import OrbitCertificate

SCHEMA_PREFIX = "pinwheel-lattice"


def schema(kind: str) -> str:
    return f"{SCHEMA_PREFIX}/{kind}/v1"


def dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def class_to_json(a: HomologyClass) -> dict:
    return {"chart": a.chart.name, "coeffs": list(a.coeffs)}


def class_from_json(d: dict) -> HomologyClass:
    try:
        chart = get_chart(d["chart"])
        return HomologyClass(chart, tuple(int(c) for c in d["coeffs"]))
    except (KeyError, TypeError) as e:
        raise ParseError(f"malformed class document: {d!r}") from e


def modclass_to_json(a: ModClass) -> dict:
    return {"chart": a.chart.name, "modulus": a.modulus, "coeffs": list(a.coeffs)}


def modclass_from_json(d: dict) -> ModClass:
    try:
        return ModClass(get_chart(d["chart"]), int(d["modulus"]), tuple(int(c) for c in d["coeffs"]))
    except (KeyError, TypeError) as e:
        raise ParseError(f"malformed mod-class document: {d!r}") from e


def periods_to_json(p: PeriodVector) -> dict:
    return {"chart": p.chart.name, "values": [format_rational(v) for v in p.values]}


def periods_from_json(d: dict) -> PeriodVector:
    try:
        return PeriodVector(get_chart(d["chart"]), tuple(parse_rational(v) for v in d["values"]))
    except (KeyError, TypeError) as e:
        raise ParseError(f"malformed period document: {d!r}") from e


def verdict_to_json(v: ConeVerdict) -> dict:
    violated = []
    for item in v.violated:
        violated.append({
            "constraint": item.constraint,
            "class": class_to_json(item.cls) if item.cls is not None else "volume",
            "label": str(item.cls) if item.cls is not None else "volume",
            "value": format_rational(item.value),
        })
    return {"schema": schema("cone-verdict"), "inside": v.inside, "violated": violated}


def certificate_to_json(c: OrbitCertificate) -> dict:
    return {
        "source": class_to_json(c.source),
        "target": class_to_json(c.target),
        "word": [class_to_json(r.axis) for r in c.word],
    }


def witness_to_json(w: TransportWitness) -> dict:
    return {
        "target_chart": w.target_chart.name,
        "periods": periods_to_json(w.periods),
        "eps": [format_rational(e) for e in w.eps],
    }


def report_to_json(r: FeasibilityReport) -> dict:
    doc: dict[str, Any] = {"schema": schema("feasibility"), "feasible": r.feasible, "mode": r.mode}
    doc["witness"] = witness_to_json(r.witness) if r.witness else None
    if r.obstruction:
        doc["obstruction"] = {
            "description": r.obstruction.description,
            "values": {k: format_rational(v) for k, v in r.obstruction.values.items()},
        }
    else:
        doc["obstruction"] = None
    return doc


def delpezzo_to_json(v: DelPezzoVerdict) -> dict:
    return {"schema": schema("result"), "result": v.must_intersect, "mode": v.mode}


def result_doc(value: Any, **extra: Any) -> dict:
    doc = {"schema": schema("result"), "result": jsonable(value)}
    doc.update({k: jsonable(v) for k, v in extra.items()})
    return doc


def error_doc(exc: BaseException) -> dict:
    return {"schema": schema("error"), "error": {"type": type(exc).__name__, "message": str(exc)}}


def jsonable(x: Any) -> Any:
    """Best-effort conversion of library values to JSON-safe data."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, HomologyClass):
        return str(x)
    if isinstance(x, ModClass):
        return str(x)
    if isinstance(x, PeriodVector):
        return periods_to_json(x)
    if isinstance(x, ConeVerdict):
        return verdict_to_json(x)
    if isinstance(x, FeasibilityReport):
        return report_to_json(x)
    if isinstance(x, OrbitCertificate):
        return certificate_to_json(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        return [jsonable(v) for v in x]
    raise TypeError(f"cannot serialise {type(x).__name__}")


__all__ = [
    "__version__",
    "certificate_to_json",
    "class_from_json",
    "class_to_json",
    "delpezzo_to_json",
    "dumps",
    "error_doc",
    "jsonable",
    "modclass_from_json",
    "modclass_to_json",
    "periods_from_json",
    "periods_to_json",
    "report_to_json",
    "result_doc",
    "schema",
    "verdict_to_json",
]
