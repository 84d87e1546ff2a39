import json
from pathlib import Path

import pytest
from jsonschema import Draft202012Validator
from referencing import Registry, Resource

from salvetti import export
from salvetti.artin import build_complex_q, face_poset_Q
from salvetti.coxeter import parse_coxeter_spec
from salvetti.homology import homology
from salvetti.resolution import coxeter_complex, homology_coxeter

SCHEMAS = Path(__file__).resolve().parents[1] / "schemas"


def _load():
    docs = {p.name: json.loads(p.read_text()) for p in SCHEMAS.glob("*.schema.json")}
    registry = Registry().with_resources(
        (name, Resource.from_contents(doc)) for name, doc in docs.items())
    registry = registry.with_resources(
        (doc["$id"], Resource.from_contents(doc)) for doc in docs.values())
    return docs, registry


DOCS, REGISTRY = _load()


def validate(doc, name):
    schema = dict(DOCS[name])
    schema["$id"] = name
    Draft202012Validator(schema, registry=REGISTRY).validate(doc)


def test_schemas_are_valid():
    for doc in DOCS.values():
        Draft202012Validator.check_schema(doc)


@pytest.mark.parametrize("name", ["A2", "B3", "~A2", "~A1"])
def test_artin_complex_document(name):
    m = parse_coxeter_spec(name)
    doc = export.complex_json(build_complex_q(m), m, "artin-q")
    validate(doc, "complex.schema.json")
    assert doc["ring"] == "Q[q,q^-1]"
    if name == "A2":
        assert doc["bases"] == [["{}"], ["{1}", "{2}"], ["{1,2}"]]
        assert doc["boundaries"][1]["entries"] == [["-1 - q - q^2"], ["1 + q + q^2"]]


def test_coxeter_complex_document():
    m = parse_coxeter_spec("A2")
    doc = export.complex_json(coxeter_complex(m, 3), m, "coxeter-resolution", label=export.fmt_flag)
    validate(doc, "complex.schema.json")
    assert doc["bases"][2] == ["({1} >= {1})", "({1,2})", "({2} >= {2})"]


@pytest.mark.parametrize("name", ["A2", "~A2", "B2"])
def test_group_ring_document(name):
    doc = export.artin_group_ring_json(parse_coxeter_spec(name))
    validate(doc, "artin-group-ring.schema.json")


def test_face_poset_document():
    m = parse_coxeter_spec("~A2")
    doc = export.face_poset_json(face_poset_Q(m), m)
    validate(doc, "face-poset.schema.json")
    assert doc["counts"] == [13, 15, 3]
    assert len(doc["pieces"]) == 3


def test_homology_document():
    m = parse_coxeter_spec("~A1")
    doc = export.homology_json(homology(build_complex_q(m)), m, "LAURENT")
    validate(doc, "homology.schema.json")
    doc = export.homology_json(homology_coxeter(m, 3), m, "ZZ")
    doc["reported_degrees"] = [0, 2]
    validate(doc, "homology.schema.json")
    assert [x["text"] for x in doc["modules"]] == ["Z", "Z/2 + Z/2", "0"]


def test_serialization_is_deterministic():
    m = parse_coxeter_spec("B3")
    a = export.dumps(export.artin_group_ring_json(m))
    b = export.dumps(export.artin_group_ring_json(m))
    assert a == b and a.endswith("}\n")


def test_infinite_label_serialized_as_string():
    assert export.system_json(parse_coxeter_spec("~A1"))["matrix"] == [[1, "inf"], ["inf", 1]]
