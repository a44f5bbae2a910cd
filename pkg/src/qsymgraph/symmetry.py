"""Automorphism groups of small graphs and the orbital structures they induce.

The search is a plain individualization/refinement backtrack: at every node
the prefix assignment is encoded as colors on both the source and the image
side, both sides are refined together (1-WL on the disjoint union) and the
branch is cut as soon as the two color histograms disagree. Every leaf is
checked against the adjacency rows, so refinement strength only affects speed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import ResourceLimitError, UnsupportedGraphError
from .graphs import Graph, _bits
from .residue_groups import CirculantTypeData, is_prime

DEFAULT_AUT_CAP = 64
DEFAULT_MAX_ORDER = 200_000

Perm = tuple[int, ...]


@dataclass(frozen=True)
class PermutationGroup:
    degree: int
    elements: tuple[Perm, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def as_array(self) -> np.ndarray:
        return np.array(self.elements, dtype=np.int64).reshape(len(self.elements), self.degree)

    def orbit(self, v: int) -> list[int]:
        return sorted({g[v] for g in self.elements})

    def stabilizer(self, v: int) -> "PermutationGroup":
        return PermutationGroup(self.degree, tuple(g for g in self.elements if g[v] == v))

    def find(self, constraints: dict[int, int]) -> Perm | None:
        """First element (in search order) with g[a] == b for every a -> b."""
        for g in self.elements:
            if all(g[a] == b for a, b in constraints.items()):
                return g
        return None

    def is_closed(self) -> bool:
        elems = set(self.elements)
        ident = tuple(range(self.degree))
        if ident not in elems:
            return False
        for g in self.elements:
            inv = [0] * self.degree
            for i, gi in enumerate(g):
                inv[gi] = i
            if tuple(inv) not in elems:
                return False
            for h in self.elements:
                if tuple(g[h[i]] for i in range(self.degree)) not in elems:
                    return False
        return True


# --- refinement ---------------------------------------------------------------

def _refine(nbrs: list[list[int]], colors: list[int]) -> list[int]:
    """Stable 1-WL coloring; color ids are canonical across calls."""
    num = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in nbrs[v]))) for v in range(len(colors))]
        table = {sig: idx for idx, sig in enumerate(sorted(set(sigs)))}
        new = [table[s] for s in sigs]
        if len(table) == num:
            return new
        colors, num = new, len(table)


class _Search:
    def __init__(self, g: Graph, max_order: int):
        self.g = g
        self.n = g.n
        nb = [g.neighbors(i) for i in range(g.n)]
        # disjoint union: source copy 0..n-1, image copy n..2n-1
        self.union_nbrs = nb + [[u + g.n for u in row] for row in nb]
        self.max_order = max_order
        self.found: list[Perm] = []

    def _colors(self, assignment: list[tuple[int, int]]) -> list[int] | None:
        n = self.n
        colors = [0] * (2 * n)
        for idx, (x, y) in enumerate(assignment, start=1):
            colors[x] = idx
            colors[y + n] = idx
        colors = _refine(self.union_nbrs, colors)
        src, img = colors[:n], colors[n:]
        if sorted(src) != sorted(img):
            return None
        return colors

    def run(self, first_only_target: tuple[int, int] | None = None,
            fixed: Sequence[tuple[int, int]] = ()) -> list[Perm]:
        self._stop = False
        self._search(list(fixed), first_only=first_only_target is not None)
        return self.found

    def _search(self, assignment: list[tuple[int, int]], first_only: bool) -> None:
        if self._stop:
            return
        colors = self._colors(assignment)
        if colors is None:
            return
        n = self.n
        src, img = colors[:n], colors[n:]
        counts: dict[int, int] = {}
        for c in src:
            counts[c] = counts.get(c, 0) + 1
        if all(v == 1 for v in counts.values()):
            where = {c: v for v, c in enumerate(img)}
            perm = tuple(where[src[v]] for v in range(n))
            if self.g.is_automorphism(perm):
                self.found.append(perm)
                if first_only or len(self.found) > self.max_order:
                    self._stop = True
            return
        # branch on the first vertex of the smallest non-singleton cell
        cell = min((c for c, k in counts.items() if k > 1), key=lambda c: (counts[c], c))
        x = next(v for v in range(n) if src[v] == cell)
        for y in range(n):
            if img[y] == cell:
                self._search(assignment + [(x, y)], first_only)
                if self._stop:
                    return


def _check_cap(g: Graph, aut_cap: int) -> None:
    if g.n > aut_cap:
        raise ResourceLimitError(
            f"graph has {g.n} vertices, automorphism search cap is {aut_cap}; "
            f"raise the cap (--aut-cap) to proceed")


def automorphism_group(g: Graph, aut_cap: int = DEFAULT_AUT_CAP,
                       max_order: int = DEFAULT_MAX_ORDER) -> PermutationGroup:
    """All automorphisms of ``g`` as an explicit, verified element list."""
    _check_cap(g, aut_cap)
    search = _Search(g, max_order)
    elems = search.run()
    if len(elems) > max_order:
        raise ResourceLimitError(
            f"automorphism group of order > {max_order}; explicit enumeration refused")
    elems.sort()
    return PermutationGroup(g.n, tuple(elems))


def find_automorphism(g: Graph, constraints: dict[int, int],
                      aut_cap: int = DEFAULT_AUT_CAP) -> Perm | None:
    """One automorphism honoring ``constraints`` (a -> b), or None."""
    _check_cap(g, aut_cap)
    search = _Search(g, 1)
    res = search.run(first_only_target=(0, 0), fixed=sorted(constraints.items()))
    return res[0] if res else None


def is_vertex_transitive(g: Graph, aut_cap: int = DEFAULT_AUT_CAP) -> bool:
    if g.n <= 1 or g.is_complete() or g.is_empty():
        return True
    degs = {g.degree(i) for i in range(g.n)}
    if len(degs) > 1:
        return False
    return all(find_automorphism(g, {0: v}, aut_cap) is not None for v in range(1, g.n))


# --- orbital structures -------------------------------------------------------------

@dataclass
class OrbitalStructure:
    """Partition of vertex pairs into Aut(X)-orbitals.

    ``labels[i, j] == s`` iff ``(i, j)`` lies in orbital ``s``, i.e.
    ``i`` belongs to ``O_j^s``. Orbital 0 is the diagonal; the rest are
    ordered by the minimal element of ``O_0^s``.
    """

    n: int
    labels: np.ndarray
    reps: tuple[int, ...] | None = None
    group_order: int | None = None
    _per_vertex: list[list[tuple[int, ...]]] | None = field(default=None, repr=False)

    @property
    def r(self) -> int:
        return int(self.labels.max()) if self.n > 1 else 0

    def orbit_of_pair(self, i: int, j: int) -> int:
        return int(self.labels[i, j])

    @property
    def per_vertex(self) -> list[list[tuple[int, ...]]]:
        if self._per_vertex is None:
            pv = [[[] for _ in range(self.r + 1)] for _ in range(self.n)]
            for j in range(self.n):
                col = self.labels[:, j]
                for i in range(self.n):
                    pv[j][int(col[i])].append(i)
            self._per_vertex = [[tuple(c) for c in row] for row in pv]
        return self._per_vertex

    def O(self, i: int, s: int) -> tuple[int, ...]:
        """Sorted O_i^s."""
        return self.per_vertex[i][s]

    def intersection(self, i: int, s1: int, j: int, s2: int) -> tuple[int, ...]:
        """O_i^{s1} cap O_j^{s2}, sorted."""
        a = self.labels[:, i] == s1
        b = self.labels[:, j] == s2
        return tuple(int(x) for x in np.flatnonzero(a & b))

    def sizes(self) -> list[int]:
        return [len(self.O(0, s)) for s in range(self.r + 1)]

    def self_paired(self) -> list[bool]:
        """Per orbital: is it closed under (i, j) -> (j, i)?"""
        out = []
        for s in range(self.r + 1):
            mask = self.labels == s
            out.append(bool(np.array_equal(mask, mask.T)))
        return out

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.labels, self.labels.T))

    def basis(self, s: int) -> np.ndarray:
        return (self.labels == s).astype(np.int64)

    def table(self) -> list[list[tuple[int, ...]]]:
        """Rows i = 0..n-1, columns s = 1..r of O_i^s."""
        return [[self.O(i, s) for s in range(1, self.r + 1)] for i in range(self.n)]

    def same_partition(self, other: "OrbitalStructure") -> bool:
        """Equality as pair partitions, ignoring labels."""
        if self.n != other.n or self.r != other.r:
            return False
        mapping: dict[int, int] = {}
        for a, b in zip(self.labels.ravel().tolist(), other.labels.ravel().tolist()):
            if mapping.setdefault(a, b) != b:
                return False
        return len(set(mapping.values())) == len(mapping)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "labels": self.labels.tolist(),
            "reps": list(self.reps) if self.reps else None,
            "O_0": [list(self.O(0, s)) for s in range(self.r + 1)],
        }


def _trivial_orbitals(n: int) -> OrbitalStructure:
    labels = np.ones((n, n), dtype=np.int64)
    np.fill_diagonal(labels, 0)
    return OrbitalStructure(n, labels)


def _orbitals_from_group(n: int, group: PermutationGroup) -> OrbitalStructure:
    P = group.as_array()
    raw = -np.ones((n, n), dtype=np.int64)
    nxt = 0
    for j in range(n):
        for i in range(n):
            if raw[i, j] >= 0:
                continue
            raw[P[:, i], P[:, j]] = nxt
            nxt += 1
    # relabel: diagonal first, then by min element of the column-0 fiber
    order = []
    col0 = raw[:, 0]
    seen = set()
    for i in range(n):
        lab = int(col0[i])
        if lab not in seen:
            seen.add(lab)
            order.append(lab)
    if len(order) != nxt:
        raise UnsupportedGraphError("group is not transitive; orbitals do not all meet column 0")
    remap = np.empty(nxt, dtype=np.int64)
    for new, old in enumerate(order):
        remap[old] = new
    return OrbitalStructure(n, remap[raw], group_order=group.order)


def stabilizer_orbits(g: Graph, base: int = 0, aut_cap: int = DEFAULT_AUT_CAP,
                      group: PermutationGroup | None = None) -> list[list[int]]:
    """Orbits of Aut_base(X): [{base}, ...] ordered by minimal element."""
    if g.n == 1:
        return [[base]]
    if g.is_complete() or g.is_empty():
        return [[base], [v for v in range(g.n) if v != base]]
    group = group or automorphism_group(g, aut_cap)
    if len(group.orbit(0)) != g.n:
        raise UnsupportedGraphError("graph is not vertex-transitive")
    stab = group.stabilizer(base)
    seen: set[int] = {base}
    out = [[base]]
    for v in range(g.n):
        if v in seen:
            continue
        orb = stab.orbit(v)
        seen.update(orb)
        out.append(orb)
    return out


def orbitals(g: Graph, aut_cap: int = DEFAULT_AUT_CAP,
             group: PermutationGroup | None = None) -> OrbitalStructure:
    if g.n == 1:
        return OrbitalStructure(1, np.zeros((1, 1), dtype=np.int64))
    if g.is_complete() or g.is_empty():
        return _trivial_orbitals(g.n)
    group = group or automorphism_group(g, aut_cap)
    if len(group.orbit(0)) != g.n:
        raise UnsupportedGraphError("graph is not vertex-transitive")
    return _orbitals_from_group(g.n, group)


def circulant_orbitals(data: CirculantTypeData) -> OrbitalStructure:
    """Arithmetic orbitals of a nontrivial circulant p-graph: O_i^s = i + y_s E."""
    p = data.p
    if not is_prime(p):
        raise UnsupportedGraphError(f"{p} is not prime")
    if len(data.symbol_set) in (0, p - 1):
        raise UnsupportedGraphError("trivial circulant (empty or complete); use orbitals()")
    lab = np.zeros(p, dtype=np.int64)
    for x in range(1, p):
        lab[x] = data.label_of(x)
    idx = np.arange(p)
    labels = lab[(idx[:, None] - idx[None, :]) % p]
    return OrbitalStructure(p, labels, reps=tuple(data.coset_reps),
                            group_order=p * data.type_k)


def permutation_commutes_with(labels_mask: np.ndarray, perm: Sequence[int]) -> bool:
    """P_sigma T = T P_sigma for a 0/1 matrix T."""
    p = np.asarray(perm)
    return bool(np.array_equal(labels_mask[np.ix_(p, p)], labels_mask))
