from math import gcd

import pytest

from qsymgraph.errors import InvalidModulusError, InvalidSymbolSetError, NoSuchSubgroupError
from qsymgraph.residue_groups import (
    borne_bound,
    circulant_type_data,
    coset_representatives,
    euler_phi,
    is_prime,
    is_two_maximal,
    is_two_maximal_bruteforce,
    subgroup_of_order,
    symbol_stabilizer,
    unit_group,
)

from conftest import primes_upto


def test_is_prime_matches_trial_division():
    ps = set(primes_upto(500))
    assert [n for n in range(501) if is_prime(n)] == sorted(ps)


def test_euler_phi_counts_units():
    for k in range(1, 60):
        assert euler_phi(k) == sum(1 for a in range(1, k + 1) if gcd(a, k) == 1)


def test_bound_values():
    assert borne_bound(2) == 6
    assert borne_bound(4) == 36
    assert borne_bound(6) == 36
    assert borne_bound(8) == 1296
    assert borne_bound(10) == 1296


def test_unit_group_is_everything():
    assert unit_group(13).elements == tuple(range(1, 13))


def test_subgroup_of_order_examples():
    assert subgroup_of_order(13, 4).elements == (1, 5, 8, 12)
    assert subgroup_of_order(29, 4).elements == (1, 12, 17, 28)
    assert subgroup_of_order(17, 8).elements == (1, 2, 4, 8, 9, 13, 15, 16)


def test_subgroup_is_closed_and_unique():
    for p in primes_upto(80)[1:]:
        for k in range(1, p):
            if (p - 1) % k:
                continue
            E = subgroup_of_order(p, k)
            E.check()
            assert len(E) == k
            # the order-k subgroup of a cyclic group is the set of k-th roots of 1
            assert set(E.elements) == {x for x in range(1, p) if pow(x, k, p) == 1}


def test_subgroup_of_bad_order():
    with pytest.raises(NoSuchSubgroupError):
        subgroup_of_order(13, 5)


def test_stabilizer_of_symbol_set():
    assert symbol_stabilizer([1, 5, 6, 25, 26, 30], 31).elements == (1, 5, 6, 25, 26, 30)
    # C13(2): only +-1 fixes {1,2,11,12}
    assert symbol_stabilizer([1, 2, 11, 12], 13).elements == (1, 12)


def test_coset_reps_are_minimal():
    E = subgroup_of_order(41, 8)
    reps = coset_representatives(E)
    assert reps[0] == 1
    assert all(r == min(E.coset(r)) for r in reps)
    covered = sorted(x for r in reps for x in E.coset(r))
    assert covered == list(range(1, 41))


def test_type_data_of_c13_2():
    d = circulant_type_data([1, 2, 11, 12], 13)
    assert d.type_k == 2
    assert d.r == 6
    assert d.label_of(5) == 5
    assert d.label_of(8) == 5


def test_type_data_rejects_bad_input():
    with pytest.raises(InvalidModulusError):
        circulant_type_data([1, 14], 15)
    with pytest.raises(InvalidSymbolSetError):
        circulant_type_data([1, 2], 13)


def test_two_maximal_against_bruteforce():
    for p in primes_upto(61)[2:]:
        for k in range(2, p, 2):
            if (p - 1) % k == 0:
                E = subgroup_of_order(p, k)
                assert is_two_maximal(E) == is_two_maximal_bruteforce(E.elements, p), (p, k)


def test_two_maximal_examples():
    assert is_two_maximal(subgroup_of_order(29, 4))
    assert not is_two_maximal(subgroup_of_order(13, 4))
