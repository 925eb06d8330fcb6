import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cubelattice import io as rule_io
from cubelattice.cubature import make_rule

rules = st.tuples(st.sampled_from([2, 3]), st.integers(3, 7), st.sampled_from(["trig-sym", "trig-equal", "w0", "w1"]))


@settings(deadline=None, max_examples=25)
@given(rules)
def test_json_round_trip(params):
    dim, n, name = params
    rule = make_rule(dim, n, name)
    back = rule_io.parse_json(rule_io.emit_json(rule))
    assert back.normalization == rule.normalization
    assert back.weights == rule.weights
    assert back.exactness == rule.exactness
    assert np.array_equal(back.indices, rule.indices)
    assert np.array_equal(back.nodes, rule.nodes)


@settings(deadline=None, max_examples=25)
@given(rules)
def test_csv_and_json_agree(params):
    dim, n, name = params
    rule = make_rule(dim, n, name)
    indices, nodes, weights = rule_io.parse_csv(rule_io.emit_csv(rule), rule.weight_kind)
    doc = rule_io.parse_json(rule_io.emit_json(rule))
    assert np.array_equal(indices, doc.indices)
    assert np.array_equal(nodes, doc.nodes)
    assert weights == doc.weights


def test_document_fields():
    doc = json.loads(rule_io.emit_json(make_rule(2, 2, "w0")))
    assert doc["normalization"] == "1/8"
    assert len(doc["nodes"]) == 5
    assert doc["weights"][0] == "1/1"
    assert doc["exactness"] == "total<=3"
    assert all(len(c.replace("-", "").replace(".", "").lstrip("0")) <= 17 for p in doc["nodes"] for c in p)


def test_csv_layout():
    text = rule_io.emit_csv(make_rule(2, 2, "w0"))
    lines = text.strip().split("\n")
    assert lines[0] == "k1,k2,node1,node2,weight"
    assert len(lines) == 6


def test_schema_version_checked():
    doc = rule_io.rule_to_dict(make_rule(2, 3, "w1"))
    doc["schema_version"] = "0"
    with pytest.raises(ValueError):
        rule_io.rule_from_dict(doc)


def test_samples_and_probes():
    samples = rule_io.read_samples("k1,k2,value\n0,0,1.5\n1,1,2\n", 2)
    assert samples == {(0, 0): 1.5, (1, 1): 2.0}
    with pytest.raises(ValueError, match="duplicate"):
        rule_io.read_samples("0,0,1\n0,0,2\n", 2)
    assert rule_io.read_probes("", 3).shape == (0, 3)
    assert rule_io.read_probes("t1,t2\n0.5,-0.25\n", 2).tolist() == [[0.5, -0.25]]
