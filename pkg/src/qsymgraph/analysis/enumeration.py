"""Circulant p-graphs of a given type, and the symbol sets sharing one E."""

from __future__ import annotations

from itertools import combinations

from ..errors import NoSuchSubgroupError
from ..residue_groups import (
    CirculantTypeData,
    borne_bound,
    is_prime,
    subgroup_of_order,
    symbol_stabilizer,
)


def enumerate_prime_type(k: int, bound: int | None = None) -> list[CirculantTypeData]:
    """One S = E graph per prime p = 1 mod k with k + 1 <= p <= bound (default 6**phi(k))."""
    if k < 2 or k % 2:
        raise NoSuchSubgroupError(f"type must be an even integer >= 2, got {k}")
    bound = borne_bound(k) if bound is None else bound
    out = []
    for p in range(k + 1, bound + 1, k):
        if is_prime(p):
            E = subgroup_of_order(p, k)
            out.append(CirculantTypeData(p, E.elements, E))
    return out


def symbol_union_candidates(p: int, k: int) -> list[tuple[int, ...]]:
    """E together with every proper union of the other E-cosets."""
    E = subgroup_of_order(p, k)
    cosets = []
    covered = set(E.elements)
    for x in range(1, p):
        if x not in covered:
            c = E.coset(x)
            covered.update(c)
            cosets.append(c)
    out = []
    for size in range(len(cosets)):
        for pick in combinations(range(len(cosets)), size):
            s = set(E.elements)
            for i in pick:
                s.update(cosets[i])
            out.append(tuple(sorted(s)))
    return out


def enumerate_symbol_unions(p: int, k: int) -> list[tuple[int, ...]]:
    """Symbol sets S with stabilizer exactly the order-k subgroup, complete graph excluded."""
    E = subgroup_of_order(p, k)
    return [S for S in symbol_union_candidates(p, k)
            if symbol_stabilizer(S, p).elements == E.elements]


def jumps_of(S, p: int) -> tuple[int, ...]:
    """Circulant jump list (1 dropped, each +-pair once) for a symmetric symbol set."""
    return tuple(sorted({min(x % p, (-x) % p) for x in S} - {1}))


def spec_string(S, p: int) -> str:
    jumps = jumps_of(S, p)
    return f"C{p}({','.join(map(str, jumps))})" if jumps else f"C{p}"
