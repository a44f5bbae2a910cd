import pytest

from qsymgraph.analysis import HAS_QS, INCONCLUSIVE, NO_QS, AnalyzeOptions, analyze
from qsymgraph.analysis.enumeration import enumerate_prime_type
from qsymgraph.graphs import complete, empty, from_circulant_spec, from_symbol_set, path


def _run(spec, **kw):
    return analyze(from_circulant_spec(spec), AnalyzeOptions(**kw))


@pytest.mark.parametrize("spec, kind, cert", [
    ("C13(3,4)", NO_QS, "scripted"),
    ("C17(2,4,8)", NO_QS, "scripted"),
    ("C13(2)", NO_QS, "bound"),
    ("C13(5)", NO_QS, "swap"),
    ("C29(12)", NO_QS, "two-maximal"),
    ("C41(3,9,14)", NO_QS, "swap"),
])
def test_verdicts(spec, kind, cert):
    rep = _run(spec)
    assert rep.verdict.kind == kind
    assert rep.certificate["kind"] == cert


def test_trivial_and_small():
    assert analyze(complete(13)).verdict.kind == HAS_QS
    assert analyze(empty(5)).verdict.kind == HAS_QS
    assert analyze(complete(3)).verdict.kind == NO_QS
    assert analyze(complete(13)).aut_order["order"] == 6227020800


def test_open_cases_stay_inconclusive():
    for spec in ["C41(4,10,16,18)", "C31(2,4,8,15)"]:
        rep = _run(spec)
        assert rep.verdict.kind == INCONCLUSIVE
        assert rep.certificate is None
        assert rep.criteria["nosym2"]["holds"] is False
        assert rep.criteria["nosymG"]["failed_orbitals"]


def test_not_vertex_transitive():
    rep = analyze(path(5))
    assert rep.verdict.kind == INCONCLUSIVE
    assert rep.vertex_transitive is False


def test_prism(prism):
    rep = analyze(prism)
    assert rep.verdict.kind == NO_QS
    assert rep.certificate["route"] == "nosymG"
    assert rep.criteria["bclos"]["route"] == "coherent-closure"
    assert rep.aut_order["order"] == 24


def test_report_fields():
    d = _run("C13(5)").to_dict()
    for key in ("graph", "type", "criteria", "verdict", "certificate"):
        assert key in d
    assert d["type"]["k"] == 4
    assert d["criteria"]["nosym2"]["intersection"] == [12]
    assert d["criteria"]["swap_verification"]["exhaustive"]


def test_stages_keep_running_after_verdict():
    rep = _run("C13(2)")
    names = [st["stage"] for st in rep.stages]
    assert names[:3] == ["vertex_transitive", "bound", "two_maximal"]
    assert "two_maximal" in rep.criteria


def test_sampling_policy():
    rep = _run("C97(22,33,47)", exhaustive_limit=50)
    ver = rep.criteria["swap_verification"]
    assert ver["ok"] and not ver["exhaustive"]
    assert rep.certificate["verification"]["exhaustive"] is False
    full = _run("C97(22,33,47)", exhaustive_limit=50, full_verify=True)
    assert full.criteria["swap_verification"]["checked"] == 97 * 97


def test_types_4_6_8_have_no_quantum_symmetry():
    for k in (4, 6, 8):
        for d in enumerate_prime_type(k):
            g = from_symbol_set(d.p, d.symbol_set)
            rep = analyze(g)
            if g.is_complete():
                assert rep.verdict.kind == HAS_QS
            else:
                assert rep.verdict.kind == NO_QS, d.p
