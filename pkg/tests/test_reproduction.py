from qsymgraph.analysis.render import (
    format_set,
    orbital_rows,
    render_gamma,
    render_reproduction,
    render_table,
)
from qsymgraph.analysis.reproduction import MISMATCH, NOTE, reproduce_paper_report
from qsymgraph.orbital_algebra import GammaMatrix

from conftest import circ_orbitals


def test_report_has_no_mismatch():
    rep = reproduce_paper_report()
    assert rep.ok, [it.to_dict() for it in rep.mismatches()]
    counts = rep.counts()
    assert counts[MISMATCH] == 0
    assert counts["MATCH"] > 100


def test_known_discrepancies_are_notes():
    rep = reproduce_paper_report()
    notes = {(it.group, it.label) for it in rep.items if it.status == NOTE}
    assert ("counts", "type 6, p <= 36") in notes
    assert ("prism C6", "orbital labels") in notes
    assert ("singleton C61(3,9,20,27)", "orbital labels") in notes


def test_mismatch_is_reported():
    rep = reproduce_paper_report()
    rep.add("extra", "deliberately wrong", 1, 2)
    assert not rep.ok
    assert "MISMATCH" in render_reproduction(rep)


def test_render_table_alignment():
    text = render_table(["a", "bb"], [[1, 22], [333, 4]])
    lines = text.splitlines()
    assert lines[0] == "a    bb"
    assert lines[1] == "---  --"
    assert lines[3] == "333  4"


def test_render_gamma():
    text = render_gamma(GammaMatrix([[2, 3], [3, 3]], (0, 1)))
    assert text.splitlines()[2] == "1      2  3"


def test_translate_rows():
    rows = orbital_rows(circ_orbitals("C13(3,4)"), translate=True)
    assert format_set(rows[1][0]) == "{2,4,5,10,11,0}"
    assert sorted(rows[1][0]) == sorted(circ_orbitals("C13(3,4)").O(1, 1))
