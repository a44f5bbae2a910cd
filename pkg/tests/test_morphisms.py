from fractions import Fraction

import numpy as np
import pytest

from qsymgraph.errors import DimensionMismatchError, QSymError
from qsymgraph.intertwiners.morphisms import (
    Comult,
    Counit,
    Identity,
    Linear1,
    Mult,
    Swap,
    Unit,
    add,
    apply,
    apply_basis,
    compose,
    dense_from_lazy,
    format_vector,
    generator,
    hadamard,
    orbital_operator,
    same_action,
    scale,
    tensor,
    vec,
)

from conftest import circ_orbitals


def test_generators_on_basis():
    n = 4
    assert apply_basis(Mult(n), 2, 2) == {(2,): 1}
    assert apply_basis(Mult(n), 2, 3) == {}
    assert apply_basis(Comult(n), 1) == {(1, 1): 1}
    assert apply(Unit(n), {(): 1}) == {(0,): 1, (1,): 1, (2,): 1, (3,): 1}
    assert apply_basis(Counit(n), 3) == {(): 1}
    assert apply_basis(Swap(n), 0, 3) == {(3, 0): 1}


def test_generator_lookup():
    orb = circ_orbitals("C13(5)")
    t = generator("T2", 13, orbitals=orb)
    assert apply_basis(t, 0) == vec(*orb.O(0, 2))
    assert isinstance(generator("D*", 3), type(generator("D", 3).adjoint()))
    with pytest.raises(QSymError):
        generator("Q", 3)
    with pytest.raises(QSymError):
        generator("T", 13)


def test_frobenius_identities():
    n = 3
    Id, M, Ms = Identity(n), Mult(n), Comult(n)
    assert same_action(compose(M, Ms), Id)
    lhs = compose(tensor(M, Id), tensor(Id, Ms))
    rhs = compose(Ms, M)
    assert same_action(lhs, rhs)
    assert same_action(compose(M, tensor(Unit(n), Id)), Id)


def test_hadamard_is_entrywise():
    a = Linear1.from_matrix(np.array([[1, 2], [3, 4]]), "A")
    b = Linear1.from_matrix(np.array([[5, 0], [1, 2]]), "B")
    h = hadamard(a, b).to_dense()
    assert np.array_equal(h.astype(int), np.array([[5, 0], [3, 8]]))


def test_linear_combination_and_scalars():
    n = 3
    f = add(Identity(n), scale(Fraction(1, 2), Identity(n)))
    assert apply_basis(f, 1) == {(1,): Fraction(3, 2)}
    g = Identity(n) - Identity(n)
    assert apply_basis(g, 1) == {}
    h = 2 * Swap(n)
    assert apply_basis(h, 0, 1) == {(1, 0): 2}


def test_adjoint_is_transpose():
    orb = circ_orbitals("C13(3,4)")
    f = compose(Mult(13), tensor(orbital_operator(orb, 1), orbital_operator(orb, 2)))
    assert np.array_equal(f.adjoint().to_dense(), f.to_dense().T)


def test_lazy_matches_dense_oracle():
    n = 3
    f = compose(tensor(Mult(n), Identity(n)), tensor(Identity(n), Swap(n)), tensor(Comult(n), Identity(n)))
    assert np.array_equal(dense_from_lazy(f), f.to_dense())


def test_dimension_checks():
    with pytest.raises(DimensionMismatchError):
        apply(Mult(3), {(0,): 1})
    with pytest.raises(DimensionMismatchError):
        compose(Mult(3), Mult(3)).apply_terms([(1, ({0: 1},))])


def test_tabulate_freezes_action():
    n = 3
    f = compose(Swap(n), tensor(Identity(n), Identity(n)))
    assert same_action(f.tabulate(), f)
    assert same_action(f.tabulate().adjoint(), f.adjoint())


def test_format_vector():
    assert format_vector({(7,): 2, (6,): 1}) == "e_6+2e_7"
    assert format_vector({(0, 1): 1, (2, 2): -1}) == "e_0(x)e_1-e_2(x)e_2"
    assert format_vector({}) == "0"


def test_diag3_is_iterated_mult():
    n = 3
    assert same_action(generator("D", n), compose(Mult(n), tensor(Identity(n), Mult(n))))
    assert same_action(generator("D*", n), compose(tensor(Identity(n), Comult(n)), Comult(n)))
