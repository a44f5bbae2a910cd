from fractions import Fraction

import numpy as np
import pytest

from qsymgraph.graphs import complete, from_circulant_spec
from qsymgraph.orbital_algebra import (
    RationalMatrix,
    bclos_check,
    circulant_gamma,
    coefficients_in_basis,
    coherent_closure,
    evaluate_polynomial_at_adjacency,
    gamma_base_pair,
    gamma_matrix,
    hadamard_product,
    minimal_polynomial,
    minimal_polynomial_degree,
)
from qsymgraph.symmetry import orbitals

from conftest import circ, circ_orbitals


def _distinct_eigenvalues(g):
    ev = np.linalg.eigvalsh(g.adjacency_matrix().astype(float))
    return len(np.unique(np.round(ev, 6)))


def test_minimal_polynomial_c13_3_4():
    # (x - 6)(x^2 + x - 3), lowest degree first
    assert minimal_polynomial(from_circulant_spec("C13(3,4)")) == [18, -9, -5, 1]


@pytest.mark.parametrize("spec", ["C13(5)", "C17(4)", "C12(3)", "C10(2,5)", "C19(7,8)"])
def test_minimal_polynomial_annihilates(spec):
    g = from_circulant_spec(spec)
    coeffs = minimal_polynomial(g)
    assert evaluate_polynomial_at_adjacency(coeffs, g).is_zero()
    assert minimal_polynomial_degree(g) == _distinct_eigenvalues(g)


def test_hadamard_product_entrywise():
    a = RationalMatrix.from_array([[1, 2], [3, 4]])
    b = RationalMatrix.from_array([[Fraction(1, 2), 0], [1, -1]])
    assert hadamard_product(a, b).tolist() == [[Fraction(1, 2), 0], [3, -4]]


def test_coefficients_in_basis(prism_orbitals):
    orb = prism_orbitals
    m = orb.basis(0) + 2 * orb.basis(3)
    assert coefficients_in_basis(orb, m) == [1, 0, 0, 2, 0, 0, 0, 0]
    bad = np.zeros((12, 12), dtype=int)
    bad[0, 1] = 1
    assert coefficients_in_basis(orb, bad) is None


def test_gamma_c13_3_4_both_routes():
    g, data = circ("C13(3,4)")
    orb = circ_orbitals("C13(3,4)")
    assert circulant_gamma(data).beta == [[2, 3], [3, 3]]
    assert gamma_matrix(orb, (0, 1)).beta == [[2, 3], [3, 3]]


@pytest.mark.parametrize("spec", ["C13(5)", "C41(4,10,16,18)", "C31(2,4,8,15)", "C41(3,9,14)"])
def test_gamma_routes_agree(spec):
    _, data = circ(spec)
    arith = circulant_gamma(data)
    direct = gamma_matrix(circ_orbitals(spec), (0, 1))
    assert arith.beta == direct.beta
    assert arith.is_symmetric()


def test_gamma_ones():
    _, data = circ("C13(5)")
    assert circulant_gamma(data).ones() == [(1, 2), (2, 1), (2, 3), (3, 2), (3, 3)]


def test_gamma_base_pair_uses_a_neighbor(prism, prism_orbitals):
    assert gamma_base_pair(prism_orbitals, prism) == (0, 1)


def test_coherent_closure_rank3():
    g = from_circulant_spec("C13(3,4)")
    assert len(coherent_closure(g)) == 3
    assert len(coherent_closure(complete(7))) == 2


def test_bclos_routes(prism, prism_orbitals):
    g = from_circulant_spec("C13(3,4)")
    res = bclos_check(g, orbitals(g))
    assert res.certified and res.route == "minimal-polynomial"
    res = bclos_check(prism, prism_orbitals)
    assert res.certified and res.route == "coherent-closure"
    assert (res.minpoly_degree, res.closure_dim, res.orbital_dim) == (7, 8, 8)


def test_bclos_inconclusive_when_closure_skipped(prism, prism_orbitals):
    res = bclos_check(prism, prism_orbitals, closure_limit=4)
    assert not res.certified
    assert res.to_dict()["status"] == "Inconclusive"
    assert res.notes
