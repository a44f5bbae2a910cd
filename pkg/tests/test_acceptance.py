"""The eleven acceptance criteria, one test each; conftest prints a PASS/FAIL line per test."""

import time

import numpy as np

import test_properties as props
from qsymgraph.analysis import HAS_QS, NO_QS, analyze
from qsymgraph.analysis.enumeration import enumerate_prime_type, enumerate_symbol_unions
from qsymgraph.analysis.reproduction import (
    NOTE,
    PRISM_TABLE,
    PRISM_WITNESS,
    ReproductionReport,
    _counts,
    prism_label_map,
)
from qsymgraph.graphs import complete, from_circulant_spec, from_symbol_set
from qsymgraph.intertwiners.hand_constructions import (
    _rank3_orbitals,
    build_c13,
    build_edge_family,
    e,
    parse_vector,
    verify_paper_c13,
    verify_paper_c17,
)
from qsymgraph.intertwiners.morphisms import Mult, apply, compose, orbital_operator, tensor
from qsymgraph.intertwiners.swap import (
    WitnessRecord,
    build_swap_candidate,
    check_record,
    extend_witness,
    find_nosym2_witness,
    search_nosymG,
    verify_swap,
)
from qsymgraph.orbital_algebra import circulant_gamma, minimal_polynomial_degree
from qsymgraph.residue_groups import circulant_type_data
from qsymgraph.symmetry import automorphism_group, circulant_orbitals, orbitals

from conftest import circ


def _has_one(data):
    return any(1 in row for row in circulant_gamma(data).beta)


def test_criterion_01_gamma_matrices():
    expected = {
        "C13(3,4)": [[2, 3], [3, 3]],
        "C17(2,4,8)": [[3, 4], [4, 4]],
        "C41(4,10,16,18)": [[0, 3, 2, 4], [3, 3, 2, 2], [2, 2, 4, 2], [4, 2, 2, 2]],
        "C31(2,4,8,15)": [[3, 4, 2], [4, 2, 4], [2, 4, 4]],
    }
    for spec, beta in expected.items():
        t0 = time.perf_counter()
        _, data = circ(spec)
        got = circulant_gamma(data).beta
        assert time.perf_counter() - t0 < 1.0
        assert got == beta, spec


def test_criterion_02_singleton_intersections():
    # (graph, multiplier of O_0, multiplier of O_1, intersection)
    cases = [
        ("C29(12)", 1, 2, {28}), ("C17(4)", 1, 2, {16}), ("C13(5)", 1, 2, {12}),
        ("C31(5,6)", 1, 2, {30}), ("C19(7,8)", 1, 2, {18}), ("C97(22,33,47)", 1, 2, {96}),
        ("C89(12,34,37)", 1, 2, {88}), ("C73(10,22,27)", 1, 2, {72}),
        ("C41(3,9,14)", 2, 8, {18}), ("C71(5,14,17,25)", 1, 2, {70}),
        ("C61(3,9,20,27)", 2, 4, {43}),
    ]
    t0 = time.perf_counter()
    for spec, y1, y2, inter in cases:
        _, data = circ(spec)
        orb = circulant_orbitals(data)
        s1, s2 = data.label_of(y1), data.label_of(y2)
        assert set(orb.intersection(0, s1, 1, s2)) == inter, spec
    assert time.perf_counter() - t0 < 1.0
    # the C41 labels coincide with the printed O_0^2 and O_1^5
    _, data = circ("C41(3,9,14)")
    assert (data.label_of(2), data.label_of(8)) == (2, 5)


def test_criterion_03_enumeration_counts():
    t0 = time.perf_counter()
    assert len(enumerate_prime_type(4, 36)) == 4
    assert len(enumerate_prime_type(6, 36)) == 4
    assert len(enumerate_prime_type(8, 1296)) == 48
    assert len(enumerate_prime_type(10, 1296)) == 51
    assert len(enumerate_symbol_unions(31, 6)) == 15
    rep = ReproductionReport()
    _counts(rep)
    six = next(it for it in rep.items if it.label == "type 6, p <= 36")
    assert six.status == NOTE and (six.expected, six.actual) == (3, 4)
    assert time.perf_counter() - t0 < 5.0


def test_criterion_04_nosym2_universality():
    t0 = time.perf_counter()
    type8 = enumerate_prime_type(8)
    assert [d.p for d in type8 if not _has_one(d)] == [17]
    type10 = [d for d in enumerate_prime_type(10) if d.p >= 71]
    assert type10 and all(_has_one(d) for d in type10)
    for spec in ["C13(3,4)", "C17(2,4,8)", "C41(4,10,16,18)", "C31(2,4,8,15)"]:
        _, data = circ(spec)
        assert not _has_one(data), spec
        assert find_nosym2_witness(circulant_orbitals(data)) is None
    for p in (5, 7, 11, 13, 17):
        assert not _has_one(circulant_type_data(range(1, p), p))
    assert time.perf_counter() - t0 < 30.0


def test_criterion_05_bclos_dimension_identity():
    t0 = time.perf_counter()
    seen = 0
    for k in (4, 6, 8, 10):
        for d in enumerate_prime_type(k):
            if d.p > 100:
                continue
            deg = minimal_polynomial_degree(from_symbol_set(d.p, d.symbol_set))
            assert deg == (d.p - 1) // k + 1 == d.r + 1, (d.p, k)
            seen += 1
    assert seen > 0
    assert time.perf_counter() - t0 < 60.0


def test_criterion_06_swap_certificates():
    t0 = time.perf_counter()
    for spec in ["C13(5)", "C17(4)", "C29(12)", "C19(7,8)", "C31(5,6)"]:
        _, data = circ(spec)
        orb = circulant_orbitals(data)
        pair = find_nosym2_witness(orb)
        F = build_swap_candidate(orb, extend_witness(orb, pair))
        res = verify_swap(F)
        assert res.ok and res.exhaustive and res.checked == data.p ** 2, spec
    assert time.perf_counter() - t0 < 30.0


def test_criterion_07_c13_construction():
    t0 = time.perf_counter()
    m = build_c13()
    for k in range(13):
        assert apply(m[f"F{k}"], e(0, 1)) == e(k)
    assert apply(m["G1"], e(0, 2)) == e(1)
    assert apply(m["H4"], e(0, 1)) == parse_vector("e6+e7+e8")
    orb = _rank3_orbitals("C13(3,4)")
    assert apply(orbital_operator(orb, 2), parse_vector("e7+e8")) == \
        parse_vector("2e0+2e1+2e2+e3+e5+e6+e9+e10+e12")
    tr = verify_paper_c13()
    assert tr.ok, tr.first_failure()
    last = tr.checks[-1]
    assert last.label.startswith("H(") and "169" in last.actual
    assert time.perf_counter() - t0 < 5.0


def test_criterion_08_c17_construction():
    t0 = time.perf_counter()
    orb = _rank3_orbitals("C17(2,4,8)")
    assert orb.intersection(0, 1, 1, 1) == (2, 9, 16)
    fam = build_edge_family(orb, adj=1, non=2, b=1)
    assert sorted(fam.F) == [2, 9, 16]
    for k in (2, 9, 16):
        assert apply(fam.F[k], e(0, 1)) == e(k)
    h11 = compose(Mult(17), tensor(orbital_operator(orb, 1), orbital_operator(orb, 1)))
    assert apply(h11, e(0, 1)) == parse_vector("e2+e9+e16")
    tr = verify_paper_c17()
    assert tr.ok, tr.first_failure()
    last = tr.checks[-1]
    assert last.label.startswith("G(") and "289" in last.actual
    assert time.perf_counter() - t0 < 5.0


def test_criterion_09_prism(prism):
    t0 = time.perf_counter()
    orb = orbitals(prism)
    lm = prism_label_map(orb)
    assert sorted(lm.values()) == list(range(8))
    table = [[set(orb.O(i, lm[s])) for s in range(1, 8)] for i in range(12)]
    assert table == PRISM_TABLE
    for s, j, k, t in PRISM_WITNESS:
        rec = WitnessRecord(lm[s], j, k, tuple(lm[x] for x in t))
        assert check_record(orb, rec) == []
    search = search_nosymG(orb)
    assert search.failed == []
    for rec in search.witness.records[1:]:
        assert check_record(orb, rec) == []
    res = verify_swap(build_swap_candidate(orb, search.witness))
    assert res.ok and res.checked == 144
    assert analyze(prism).verdict.kind == NO_QS
    assert time.perf_counter() - t0 < 10.0


def test_criterion_10_property_suites():
    props.test_partition_laws_all_small_circulants()
    props.test_gamma_row_sums_up_to_100()
    props.test_singleton_transfer_exhaustive_p_le_31()
    props.test_circulant_orbitals_agree_with_search()
    props.test_union_orbitals_agree_with_search()
    props.test_lazy_equals_dense()
    props.test_lazy_equals_dense_larger_n()
    props.test_composition_associative_and_unital()
    props.test_interchange_law()
    props.test_adjoint_laws()
    props.test_tensor_associative()


def test_criterion_11_automorphism_orders(prism):
    t0 = time.perf_counter()
    assert automorphism_group(from_circulant_spec("C13")).order == 26
    assert automorphism_group(from_circulant_spec("C13(5)")).order == 52
    assert automorphism_group(from_circulant_spec("C13(3,4)")).order == 78
    assert automorphism_group(prism).order == 24
    assert analyze(complete(13)).verdict.kind == HAS_QS
    # the symmetric group acts on K_n: the diagonal plus one orbital
    assert orbitals(complete(13)).r == 1
    assert np.array_equal(orbitals(complete(13)).basis(0), np.eye(13, dtype=int))
    assert time.perf_counter() - t0 < 10.0
