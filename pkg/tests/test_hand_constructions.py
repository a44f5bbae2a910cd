from qsymgraph.intertwiners.hand_constructions import (
    build_c13,
    e,
    parse_vector,
    verify_paper_c13,
    verify_paper_c17,
)
from qsymgraph.intertwiners.morphisms import apply


def test_parse_vector():
    assert parse_vector("2e7+e6+e8") == {(6,): 1, (7,): 2, (8,): 1}
    assert parse_vector("e_{10}") == {(10,): 1}
    assert e(0, 1) == {(0, 1): 1}


def test_c13_maps_hit_every_vertex():
    maps = build_c13()
    for k in range(13):
        assert apply(maps[f"F{k}"], e(0, 1)) == e(k), k
    assert apply(maps["G1"], e(0, 2)) == e(1)
    assert apply(maps["H4"], e(0, 1)) == parse_vector("e6+e7+e8")


def test_c13_transcript():
    tr = verify_paper_c13()
    assert tr.ok, tr.first_failure()
    assert tr.checks[-1].label.startswith("H(")
    assert len(tr.checks) >= 50


def test_c17_transcript():
    tr = verify_paper_c17()
    assert tr.ok, tr.first_failure()
    labels = {c.label: c for c in tr.checks}
    assert labels["O_0^1 & O_1^1"].actual == "[2, 9, 16]"
    assert labels["H11(e0(x)e1)"].actual == "e_2+e_9+e_16"
    for k in (2, 9, 16):
        assert labels[f"F{k}(e0(x)e1)"].ok
    assert tr.checks[-1].label.startswith("G(") and tr.checks[-1].ok


def test_transcript_render_and_dict():
    tr = verify_paper_c13()
    text = tr.render()
    assert "FAIL" not in text
    d = tr.to_dict()
    assert d["ok"] and len(d["checks"]) == len(tr.checks)
