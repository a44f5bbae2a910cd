"""Arithmetic in Z_n and its unit group.

Everything here works on plain Python ints; moduli in scope stay far below
64 bits so there is no overflow concern.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, isqrt
from typing import Iterable, Sequence

from .errors import (
    InvalidModulusError,
    InvalidSymbolSetError,
    NoSuchSubgroupError,
    NotEvenSubgroupError,
)


@dataclass(frozen=True)
class UnitSubgroup:
    """A subgroup of (Z_n)^* stored as a sorted tuple of residues."""

    modulus: int
    elements: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(sorted(set(self.elements))))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return x % self.modulus in self._as_set

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def _as_set(self) -> frozenset[int]:
        return frozenset(self.elements)

    def coset(self, x: int) -> tuple[int, ...]:
        n = self.modulus
        return tuple(sorted({x * e % n for e in self.elements}))

    def is_even(self) -> bool:
        return (self.modulus - 1) in self

    def check(self) -> None:
        """Assert the group axioms; raises AssertionError on violation."""
        n = self.modulus
        s = self._as_set
        assert 1 in s, "missing identity"
        for a in s:
            assert gcd(a, n) == 1, f"{a} not a unit mod {n}"
            assert pow(a, -1, n) in s, f"inverse of {a} missing"
            for b in s:
                assert a * b % n in s, f"{a}*{b} escapes"
        assert euler_phi(n) % len(s) == 0


@dataclass(frozen=True)
class CirculantTypeData:
    """Arithmetic description of a circulant p-graph.

    ``r`` is the number of nontrivial orbitals, ``(p - 1) / type_k``.
    """

    p: int
    symbol_set: tuple[int, ...]
    E: UnitSubgroup
    coset_reps: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "symbol_set", tuple(sorted(set(self.symbol_set))))
        if not self.coset_reps:
            object.__setattr__(self, "coset_reps", tuple(coset_representatives(self.E)))

    @property
    def type_k(self) -> int:
        return self.E.order

    @property
    def r(self) -> int:
        return (self.p - 1) // self.E.order

    def label_of(self, x: int) -> int:
        """Index s with x in y_s E (0 for x == 0 mod p)."""
        x %= self.p
        if x == 0:
            return 0
        return self._labels[x]

    @property
    def _labels(self) -> dict[int, int]:
        cache = self.__dict__.get("_label_cache")
        if cache is None:
            cache = {}
            for s, y in enumerate(self.coset_reps, start=1):
                for e in self.E.elements:
                    cache[y * e % self.p] = s
            object.__setattr__(self, "_label_cache", cache)
        return cache

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "symbol_set": list(self.symbol_set),
            "E": list(self.E.elements),
            "k": self.type_k,
            "r": self.r,
            "coset_reps": list(self.coset_reps),
        }


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def euler_phi(k: int) -> int:
    if k < 1:
        raise ValueError("euler_phi needs k >= 1")
    result = k
    m = k
    d = 2
    while d * d <= m:
        if m % d == 0:
            while m % d == 0:
                m //= d
            result -= result // d
        d += 1
    if m > 1:
        result -= result // m
    return result


def borne_bound(k: int) -> int:
    """6**phi(k): above this prime order a type-k p-graph is settled."""
    return 6 ** euler_phi(k)


def unit_group(n: int) -> UnitSubgroup:
    if n < 2:
        raise InvalidModulusError(f"modulus must be >= 2, got {n}")
    return UnitSubgroup(n, tuple(a for a in range(1, n) if gcd(a, n) == 1))


def subgroup_of_order(p: int, k: int) -> UnitSubgroup:
    """The unique order-k subgroup of Z_p^*, i.e. the k-th roots of unity."""
    if not is_prime(p):
        raise InvalidModulusError(f"{p} is not prime")
    if k < 1 or (p - 1) % k:
        raise NoSuchSubgroupError(f"{k} does not divide {p - 1}")
    return UnitSubgroup(p, tuple(x for x in range(1, p) if pow(x, k, p) == 1))


def _canonical_symbols(S: Iterable[int], n: int) -> frozenset[int]:
    return frozenset(x % n for x in S)


def symbol_stabilizer(S: Iterable[int], n: int) -> UnitSubgroup:
    """{a in Z_n^* : aS = S}. Works for composite n as well."""
    if n < 2:
        raise InvalidModulusError(f"modulus must be >= 2, got {n}")
    sset = _canonical_symbols(S, n)
    if not sset:
        raise InvalidSymbolSetError("symbol set is empty")
    if 0 in sset:
        raise InvalidSymbolSetError("symbol set contains 0")
    if frozenset((-x) % n for x in sset) != sset:
        raise InvalidSymbolSetError(f"symbol set is not symmetric mod {n}")
    E = UnitSubgroup(
        n,
        tuple(a for a in unit_group(n).elements
              if frozenset(a * x % n for x in sset) == sset),
    )
    if not E.is_even():
        # S = -S forces -1 into E; reaching here means corrupted input.
        raise NotEvenSubgroupError(
            f"stabilizer of symmetric set lacks -1 mod {n}: {E.elements}")
    return E


def coset_representatives(E: UnitSubgroup) -> list[int]:
    """Minimal element of each coset xE, ascending; the first is 1."""
    n = E.modulus
    covered: set[int] = set()
    reps: list[int] = []
    for x in range(1, n):
        if gcd(x, n) != 1 or x in covered:
            continue
        reps.append(x)
        covered.update(x * e % n for e in E.elements)
    return reps


def circulant_type_data(S: Iterable[int], p: int) -> CirculantTypeData:
    if not is_prime(p):
        raise InvalidModulusError(f"{p} is not prime")
    sset = sorted(_canonical_symbols(S, p))
    E = symbol_stabilizer(sset, p)
    return CirculantTypeData(p, tuple(sset), E)


def is_two_maximal(E: UnitSubgroup, p: int | None = None) -> bool:
    """True iff a - b = 2(c - d) with a, b, c, d in E forces a = +-b.

    The differences 2(c - d) are hashed once, so the scan is quadratic in |E|.
    """
    p = E.modulus if p is None else p
    if not E.is_even():
        raise NotEvenSubgroupError("2-maximality is only defined for even subgroups")
    if p % 2 == 0:
        raise InvalidModulusError("2 must be invertible")
    els = E.elements
    doubled = {2 * (c - d) % p for c in els for d in els}
    for a in els:
        for b in els:
            if a == b or (a + b) % p == 0:
                continue
            if (a - b) % p in doubled:
                return False
    return True


def is_two_maximal_bruteforce(E: Sequence[int], p: int) -> bool:
    """Quartic reference scan over E^4; only for cross-checking."""
    for a in E:
        for b in E:
            for c in E:
                for d in E:
                    if (a - b - 2 * (c - d)) % p == 0 and (a - b) % p and (a + b) % p:
                        return False
    return True
