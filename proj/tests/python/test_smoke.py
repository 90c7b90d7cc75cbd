# SPDX-License-Identifier: Apache-2.0
import json

import pytest

import ccndtn


def test_name_parse_and_prefix():
    n = ccndtn.Name("/pub/doc")
    assert str(n) == "/pub/doc"
    assert len(n) == 2
    assert n.components == ["pub", "doc"]
    assert ccndtn.Name("/pub").is_prefix_of(n)
    assert not n.is_prefix_of(ccndtn.Name("/pub"))
    assert n == ccndtn.Name.parse("/pub/doc")
    with pytest.raises(ValueError):
        ccndtn.Name("no-leading-slash")


def test_sdnv_vectors():
    assert ccndtn.sdnv_encode(0) == b"\x00"
    assert ccndtn.sdnv_encode(127) == b"\x7f"
    assert ccndtn.sdnv_encode(128) == b"\x81\x00"
    assert ccndtn.sdnv_decode(b"\x81\x00") == (128, 2, True)
    # Liberal decode: non-minimal form is accepted and reported.
    assert ccndtn.sdnv_decode(b"\x80\x05") == (5, 2, False)
    with pytest.raises(ValueError):
        ccndtn.sdnv_decode(b"\xff")  # truncated


def test_packet_roundtrip():
    i = ccndtn.Interest()
    i.name = ccndtn.Name("/pub/doc")
    i.nonce = bytes(range(8))
    i.lifetime_ms = 4000
    wire = ccndtn.encode_packet(i)
    back = ccndtn.decode_packet(wire)
    assert isinstance(back, ccndtn.Interest)
    assert back == i
    with pytest.raises(ValueError):
        ccndtn.decode_packet(b"")
    with pytest.raises(ValueError):
        i.nonce = b"\x00"


def test_bundle_roundtrip():
    b = ccndtn.Bundle()
    b.source = ccndtn.Eid("dtn:a")
    b.destination = ccndtn.Eid("dtn", "any")
    b.creation_timestamp = ccndtn.Timestamp(12, 3)
    b.lifetime_ms = 400000
    b.hop_limit = 8
    b.payload = b"\x01\x02"
    q = ccndtn.BpqBlock()
    q.kind = ccndtn.BpqKind.Query
    q.value = str(ccndtn.Name("/pub/doc")).encode("ascii")
    b.bpq = q
    assert b.id() == "dtn:a|12|3"
    assert b.expires_at() == 400012
    back = ccndtn.decode_bundle(ccndtn.encode_bundle(b))
    assert back == b
    assert back.bpq.kind == ccndtn.BpqKind.Query
    assert back.bpq.value == b"/pub/doc"


def test_builtin_run_and_determinism():
    names = ccndtn.builtin_scenarios()
    assert "fig4" in names
    assert "baseline_ccn" in names
    assert json.loads(ccndtn.scenario_text("fig4"))["name"] == "fig4"
    first = ccndtn.run("fig4")
    second = ccndtn.run("fig4")
    assert first["metrics"]["delivery_ratio"] == 1.0
    assert first["trace"] == second["trace"]
    assert first["metrics"] == second["metrics"]
    assert first["events_executed"] > 0
    baseline = ccndtn.run("baseline_ccn")
    assert baseline["metrics"]["delivery_ratio"] == 0.0
    assert baseline["metrics"]["bundle_transmissions"] == 0


def test_run_json_and_validation():
    doc = {
        "name": "two_node",
        "t_end": 10000,
        "seed": 1,
        "nodes": [
            {"id": "A", "roles": ["ccn"]},
            {"id": "P", "roles": ["ccn"]},
        ],
        "links": [{"a": "A", "b": "P", "kind": "ccn", "latency_ms": 5}],
        "routes": [{"node": "A", "prefix": "/pub", "via": "P"}],
        "workload": [
            {
                "type": "publish",
                "node": "P",
                "prefix": "/pub",
                "at": 0,
                "content_size": 64,
                "content_name": "/pub/doc",
            },
            {
                "type": "request",
                "node": "A",
                "name": "/pub/doc",
                "at": 1000,
                "reexpress_interval_ms": 4000,
                "max_reexpressions": 0,
                "lifetime_ms": 4000,
            },
        ],
    }
    text = json.dumps(doc)
    assert ccndtn.validate_scenario(text) == "two_node"
    result = ccndtn.run_json(text)
    assert result["metrics"]["delivery_ratio"] == 1.0
    delivers = [e for e in result["trace"] if e["event"] == "data_deliver"]
    assert len(delivers) == 1
    assert delivers[0]["node"] == "A"
    with pytest.raises(ValueError):
        ccndtn.run_json("{]")
    with pytest.raises(ValueError):
        ccndtn.run_json('{"name": "bad", "t_end": 0, "nodes": []}')
    # Seed override is reflected in the result.
    assert ccndtn.run("fig4", seed=9)["seed"] == 9
