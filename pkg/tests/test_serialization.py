import json
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from pinwheel_lattice.cones import kahler_cone_x5_special, symplectic_cone_contains
from pinwheel_lattice.lattice import HomologyClass, ModClass, PeriodVector, std_chart
from pinwheel_lattice.pinwheels import two_rp2_witness
from pinwheel_lattice.reflections import canonicalize
from pinwheel_lattice.serialization import (
    certificate_to_json,
    class_from_json,
    class_to_json,
    dumps,
    modclass_from_json,
    modclass_to_json,
    periods_from_json,
    periods_to_json,
    report_to_json,
    verdict_to_json,
)

X3 = std_chart(3)


def test_class_schema():
    assert class_to_json(X3.parse("H-E1")) == {"chart": "std_X3", "coeffs": [1, -1, 0, 0]}
    assert class_from_json({"chart": "std_X3", "coeffs": [1, -1, 0, 0]}) == X3.parse("H-E1")


def test_rationals_are_strings():
    doc = periods_to_json(PeriodVector(X3, (3, Fraction(1, 2), 1, 1)))
    assert doc["values"] == ["3", "1/2", "1", "1"]
    assert periods_from_json(doc).values[1] == Fraction(1, 2)


def test_modclass_roundtrip():
    m = ModClass(X3, 2, (1, 0, 1, 1))
    assert modclass_from_json(modclass_to_json(m)) == m


def test_verdict_json():
    doc = verdict_to_json(symplectic_cone_contains(PeriodVector(X3, (2, 1, 1, 1))))
    assert doc["inside"] is False
    assert {v["label"] for v in doc["violated"]} == {"H-E1-E2", "H-E1-E3", "H-E2-E3"}
    assert all(v["value"] == "0" for v in doc["violated"])
    doc = verdict_to_json(kahler_cone_x5_special(6, 1, ["1/2", "1/10", "1/10", "1/10"]))
    assert doc == {"schema": doc["schema"], "inside": True, "violated": []}


def test_report_json():
    doc = report_to_json(two_rp2_witness(4, (1, 1, 1)))
    assert doc["feasible"] and doc["mode"] == "computed" and doc["obstruction"] is None
    assert doc["witness"]["periods"]["chart"] == "X5_special"


def test_certificate_json():
    _, cert = canonicalize(X3.parse("E1"))
    doc = certificate_to_json(cert)
    assert doc["source"] == class_to_json(X3.parse("E1"))
    assert all(w["chart"] == "std_X3" for w in doc["word"])


@given(st.integers(0, 8).flatmap(lambda k: st.tuples(st.just(k), st.lists(st.integers(-50, 50), min_size=k + 1,
                                                                               max_size=k + 1))))
def test_documents_roundtrip_byte_identically(kc):
    k, coeffs = kc
    doc = class_to_json(HomologyClass(std_chart(k), tuple(coeffs)))
    text = dumps(doc)
    assert dumps(json.loads(text)) == text
    assert class_to_json(class_from_json(json.loads(text))) == doc


def test_report_roundtrips_byte_identically():
    text = dumps(report_to_json(two_rp2_witness(Fraction(7, 2), (1, Fraction(2, 3), Fraction(5, 6)))))
    assert dumps(json.loads(text)) == text
