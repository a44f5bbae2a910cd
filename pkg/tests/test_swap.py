import pytest

from qsymgraph.analysis.reproduction import PRISM_WITNESS, prism_label_map
from qsymgraph.errors import DimensionMismatchError, WitnessError
from qsymgraph.intertwiners.morphisms import Identity, Mult, Swap, tensor
from qsymgraph.intertwiners.swap import (
    SwapWitness,
    WitnessRecord,
    build_swap_candidate,
    check_record,
    extend_witness,
    find_nosym2_witness,
    sample_pairs,
    search_nosymG,
    verify_swap,
)

from conftest import circ_orbitals


def test_nosym2_pair_and_extension():
    orb = circ_orbitals("C13(5)")
    assert find_nosym2_witness(orb) == (1, 2)
    w = extend_witness(orb, (1, 2))
    assert w.origin == "nosym2"
    assert [rec.j for rec in w.records] == [0, 1, 2, 4]
    w.validate(orb)


def test_no_pair_for_rank3_graphs():
    assert find_nosym2_witness(circ_orbitals("C13(3,4)")) is None
    assert find_nosym2_witness(circ_orbitals("C17(2,4,8)")) is None


def test_extend_rejects_non_singleton():
    orb = circ_orbitals("C13(5)")
    with pytest.raises(WitnessError):
        extend_witness(orb, (1, 1))


def test_swap_candidate_is_flip():
    orb = circ_orbitals("C13(5)")
    F = build_swap_candidate(orb, extend_witness(orb, (1, 2)))
    res = verify_swap(F)
    assert res.ok and res.exhaustive and res.checked == 169


def test_tampered_witness_is_rejected():
    orb = circ_orbitals("C13(5)")
    w = extend_witness(orb, (1, 2))
    bad = list(w.records)
    r = bad[2]
    bad[2] = WitnessRecord(r.s, r.j, (r.k + 1) % 13, r.t)
    with pytest.raises(WitnessError):
        build_swap_candidate(orb, SwapWitness(tuple(bad), "nosym2"))
    with pytest.raises(WitnessError):
        SwapWitness(w.records[:-1]).validate(orb)


def test_verify_swap_catches_wrong_maps():
    n = 4
    res = verify_swap(tensor(Identity(n), Identity(n)))
    assert not res.ok
    assert res.failures[0]["pair"] == [0, 1]
    assert verify_swap(Swap(n)).ok
    with pytest.raises(DimensionMismatchError):
        verify_swap(Mult(n))


def test_witness_round_trip():
    orb = circ_orbitals("C13(5)")
    w = extend_witness(orb, (1, 2))
    assert SwapWitness.from_dict(w.to_dict()) == w


def test_nosymg_fails_on_rank3():
    res = search_nosymG(circ_orbitals("C13(3,4)"))
    assert res.witness is None and res.failed == [1, 2]


def test_prism_scan_and_flip(prism_orbitals):
    orb = prism_orbitals
    res = search_nosymG(orb)
    assert res.failed == []
    for rec in res.witness.records:
        assert check_record(orb, rec) == []
    assert verify_swap(build_swap_candidate(orb, res.witness)).ok


def test_printed_prism_rows_hold(prism_orbitals):
    orb = prism_orbitals
    lm = prism_label_map(orb)
    for s, j, k, t in PRISM_WITNESS:
        rec = WitnessRecord(lm[s], j, k, tuple(lm[x] for x in t))
        assert check_record(orb, rec) == [], s


def test_check_record_reports_each_failure(prism_orbitals):
    probs = check_record(prism_orbitals, WitnessRecord(2, 2, 3, (2, 5, 2, 5, 2)))
    assert probs and all(p.startswith("s=2") for p in probs)


def test_sample_hits_every_orbital():
    orb = circ_orbitals("C97(22,33,47)")
    pairs = sample_pairs(orb)
    seen = {orb.orbit_of_pair(j, i) for i, j in pairs}
    assert seen == set(range(orb.r + 1))
    assert len(pairs) < 97 * 97 // 10
