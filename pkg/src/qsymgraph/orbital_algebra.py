"""The orbital algebra T^X and the sufficient checks for B-clos graphs.

No floating point is used anywhere: dimensions of C[d_X] come from an exact
minimal polynomial, coherent closures from integer 2-WL refinement.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

import numpy as np

from .errors import DimensionMismatchError, UnsupportedGraphError
from .graphs import Graph
from .symmetry import OrbitalStructure


# --- exact rational matrices ---------------------------------------------------------

class RationalMatrix:
    """Dense matrix of Fractions. Small and boring on purpose."""

    def __init__(self, rows: Sequence[Sequence]):
        self.rows = [[Fraction(x) for x in row] for row in rows]
        self.shape = (len(self.rows), len(self.rows[0]) if self.rows else 0)

    @classmethod
    def from_array(cls, a) -> "RationalMatrix":
        return cls(np.asarray(a, dtype=object).tolist())

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def ones(cls, n: int, m: int | None = None) -> "RationalMatrix":
        return cls([[1] * (n if m is None else m) for _ in range(n)])

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalMatrix):
            return self.rows == other.rows
        return NotImplemented

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._same_shape(other)
        return RationalMatrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._same_shape(other)
        return RationalMatrix([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def scale(self, c) -> "RationalMatrix":
        c = Fraction(c)
        return RationalMatrix([[c * a for a in r] for r in self.rows])

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape[1] != other.shape[0]:
            raise DimensionMismatchError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows))
        return RationalMatrix([[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols]
                               for r in self.rows])

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix([list(c) for c in zip(*self.rows)])

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def _same_shape(self, other: "RationalMatrix") -> None:
        if self.shape != other.shape:
            raise DimensionMismatchError(f"shape {self.shape} vs {other.shape}")

    def rank(self) -> int:
        m = [row[:] for row in self.rows]
        rank = 0
        ncols = self.shape[1]
        for col in range(ncols):
            piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
            if piv is None:
                continue
            m[rank], m[piv] = m[piv], m[rank]
            pv = m[rank][col]
            for i in range(len(m)):
                if i != rank and m[i][col] != 0:
                    f = m[i][col] / pv
                    m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
            rank += 1
        return rank

    def tolist(self) -> list[list[Fraction]]:
        return [r[:] for r in self.rows]


def hadamard_product(f: RationalMatrix, g: RationalMatrix) -> RationalMatrix:
    if f.shape != g.shape:
        raise DimensionMismatchError(f"Hadamard product needs equal shapes: {f.shape} vs {g.shape}")
    return RationalMatrix([[a * b for a, b in zip(r1, r2)] for r1, r2 in zip(f.rows, g.rows)])


def basis_matrix(orb: OrbitalStructure, s: int) -> np.ndarray:
    """0/1 matrix of orbital s: entry (i, j) is 1 iff (i, j) in O^s."""
    if not 0 <= s <= orb.r:
        raise IndexError(f"orbital index {s} outside [0, {orb.r}]")
    return orb.basis(s)


def coefficients_in_basis(orb: OrbitalStructure, m) -> list[Fraction] | None:
    """Coordinates of m in (T_0..T_r), or None if m is not constant on orbitals."""
    m = np.asarray(m, dtype=object)
    coeffs: list[Fraction] = []
    for s in range(orb.r + 1):
        vals = {Fraction(x) for x in m[orb.labels == s].tolist()}
        if len(vals) != 1:
            return None
        coeffs.append(vals.pop())
    return coeffs


# --- Gamma ---------------------------------------------------------------------------

@dataclass
class GammaMatrix:
    beta: list[list[int]]
    base_pair: tuple[int, int]

    @property
    def r(self) -> int:
        return len(self.beta)

    def is_symmetric(self) -> bool:
        return all(self.beta[a][b] == self.beta[b][a] for a in range(self.r) for b in range(self.r))

    def entry(self, s1: int, s2: int) -> int:
        """beta_{s1,s2} with 1-based orbital labels."""
        return self.beta[s1 - 1][s2 - 1]

    def ones(self) -> list[tuple[int, int]]:
        return [(a + 1, b + 1) for a in range(self.r) for b in range(self.r) if self.beta[a][b] == 1]

    def to_dict(self) -> dict:
        return {"beta": self.beta, "base_pair": list(self.base_pair),
                "symmetric": self.is_symmetric()}


def gamma_base_pair(orb: OrbitalStructure, g: Graph | None = None) -> tuple[int, int]:
    if g is not None and g.n > 1 and g.neighbors(0):
        return (0, min(g.neighbors(0)))
    return (0, 1)


def gamma_matrix(orb: OrbitalStructure, base: tuple[int, int] = (0, 1)) -> GammaMatrix:
    """beta_{s1,s2} = |O_a^{s1} cap O_b^{s2}| for base pair (a, b)."""
    if orb.n < 2:
        raise UnsupportedGraphError("Gamma needs at least two vertices")
    a, b = base
    r = orb.r
    beta = np.zeros((r, r), dtype=np.int64)
    la = orb.labels[:, a]
    lb = orb.labels[:, b]
    for x in range(orb.n):
        s1, s2 = int(la[x]), int(lb[x])
        if s1 and s2:
            beta[s1 - 1, s2 - 1] += 1
    return GammaMatrix(beta.tolist(), (a, b))


def circulant_gamma(data) -> GammaMatrix:
    """Gamma of a circulant p-graph straight from cosets: |y_a E & (y_b E + 1)|.

    Independent of any orbital structure; used for large sweeps and as a
    cross-check of ``gamma_matrix``.
    """
    r = data.r
    beta = [[0] * r for _ in range(r)]
    for a, y in enumerate(data.coset_reps):
        for e in data.E.elements:
            x = y * e % data.p
            b = data.label_of(x - 1)
            if b:
                beta[a][b - 1] += 1
    return GammaMatrix(beta, (0, 1))


# --- minimal polynomial ---------------------------------------------------------------

def _next_power(power: np.ndarray, d: np.ndarray, deg: int) -> np.ndarray:
    if power.dtype != object and int(np.abs(power).max(initial=0)) * max(deg, 1) >= 2 ** 62:
        power = power.astype(object)
    if power.dtype == object:
        return power.dot(d.astype(object))
    return power @ d


def minimal_polynomial(g: Graph) -> list[Fraction]:
    """Monic minimal polynomial of d_X over Q, coefficients low degree first.

    Krylov on the powers I, d, d^2, ...: each new power is reduced exactly
    (fraction-free integer elimination) against the previous ones. Elimination
    runs on a block of rows only; a dependency found there is confirmed on the
    full matrices, and the block widens if confirmation fails. Independence on
    a sub-block implies independence, so the first confirmed dependency is the
    minimal polynomial.
    """
    n = g.n
    d = g.adjacency_matrix()
    deg = max((g.degree(i) for i in range(n)), default=0)
    powers = [np.eye(n, dtype=np.int64)]
    rows = 1
    while True:
        coeffs = _krylov_on_rows(powers, d, deg, rows, n)
        m = len(coeffs) - 1
        total = sum((powers[i].astype(object) * c for i, c in enumerate(coeffs) if c),
                    np.zeros((n, n), dtype=object))
        if all(x == 0 for x in total.ravel().tolist()):
            lead = coeffs[m]
            return [Fraction(c, lead) for c in coeffs]
        if rows >= n:
            raise AssertionError("full-row dependency failed to annihilate d_X")
        rows = min(n, 2 * rows)


def _krylov_on_rows(powers: list[np.ndarray], d: np.ndarray, deg: int, rows: int, n: int) -> list[int]:
    """Integer coefficients of the first dependency among powers restricted to ``rows`` rows."""
    pivots: list[tuple[int, list[int], list[int]]] = []
    m = 0
    while True:
        while len(powers) <= m:
            powers.append(_next_power(powers[-1], d, deg))
        vec = [int(x) for x in powers[m][:rows].ravel().tolist()]
        combo = [0] * (m + 1)
        combo[m] = 1
        for col, prow, pcombo in pivots:
            c = vec[col]
            if c == 0:
                continue
            pv = prow[col]
            vec = [x * pv - y * c for x, y in zip(vec, prow)]
            combo = [x * pv for x in combo]
            for i, y in enumerate(pcombo):
                combo[i] -= y * c
            vec, combo = _reduce_gcd(vec, combo)
        nz = next((i for i, x in enumerate(vec) if x), None)
        if nz is None:
            return combo
        pivots.append((nz, vec, combo))
        m += 1
        if m > n + 1:
            raise AssertionError("minimal polynomial degree exceeded n")  # Cayley-Hamilton


def _reduce_gcd(vec: list[int], combo: list[int]) -> tuple[list[int], list[int]]:
    gg = gcd(*vec, *combo)
    if gg > 1:
        vec = [x // gg for x in vec]
        combo = [c // gg for c in combo]
    return vec, combo


def minimal_polynomial_degree(g: Graph) -> int:
    return len(minimal_polynomial(g)) - 1


def evaluate_polynomial_at_adjacency(coeffs: Sequence[Fraction], g: Graph) -> RationalMatrix:
    """Exact p(d_X); used to certify the minimal polynomial annihilates d_X."""
    den = 1
    for c in coeffs:
        den = den * Fraction(c).denominator // gcd(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in coeffs]
    d = np.array(g.adjacency_matrix().tolist(), dtype=object)
    acc = np.zeros((g.n, g.n), dtype=object)
    for c in reversed(ints):
        acc = acc.dot(d) + c * np.eye(g.n, dtype=np.int64).astype(object)
    return RationalMatrix([[Fraction(x, den) for x in row] for row in acc.tolist()])


# --- coherent closure ------------------------------------------------------------------

def coherent_closure(g: Graph) -> list[np.ndarray]:
    """Basis of the coherent closure of d_X via 2-dimensional WL stabilization.

    Pair colors start as {diagonal, edge, non-edge}; each round a pair (i, j)
    is recolored by (color, transposed color, counts of color pairs over
    paths i -> k -> j). The fixpoint partition spans the smallest coherent
    algebra containing I, J and d_X.
    """
    n = g.n
    a = g.adjacency_matrix()
    colors = np.where(a == 1, 1, 2)
    np.fill_diagonal(colors, 0)
    colors = _relabel(colors)
    num = int(colors.max()) + 1
    while True:
        mats = [(colors == c).astype(np.int64) for c in range(num)]
        feats = [colors.ravel(), colors.T.ravel()]
        for x in mats:
            for y in mats:
                feats.append((x @ y).ravel())
        stacked = np.stack(feats, axis=1)
        _, inverse = np.unique(stacked, axis=0, return_inverse=True)
        new = _relabel(inverse.reshape(n, n))
        new_num = int(new.max()) + 1
        if new_num == num:
            break
        colors, num = new, new_num
    return [(colors == c).astype(np.int64) for c in range(num)]


def _relabel(colors: np.ndarray) -> np.ndarray:
    """Renumber colors by first occurrence in row-major order."""
    flat = colors.ravel()
    order: dict[int, int] = {}
    for v in flat.tolist():
        if v not in order:
            order[v] = len(order)
    lut = np.array([order[v] for v in range(int(flat.max()) + 1)] if flat.size else [], dtype=np.int64)
    return lut[colors]


# --- B-clos ------------------------------------------------------------------------------

@dataclass
class BClosResult:
    certified: bool
    route: str | None
    orbital_dim: int
    minpoly_degree: int | None = None
    closure_dim: int | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def dim(self) -> int | None:
        return self.orbital_dim if self.certified else None

    def to_dict(self) -> dict:
        return {
            "status": "Certified" if self.certified else "Inconclusive",
            "route": self.route,
            "orbital_dim": self.orbital_dim,
            "minpoly_degree": self.minpoly_degree,
            "closure_dim": self.closure_dim,
            "notes": self.notes,
        }


def bclos_check(g: Graph, orb: OrbitalStructure, closure_limit: int = 128) -> BClosResult:
    """Certify C_A(X)(1,1) = T^X from one of two sufficient dimension equalities.

    Both C[d_X] and the coherent closure sit inside C_A(X)(1,1), which sits
    inside T^X; equality of either with r + 1 collapses the chain.
    """
    target = orb.r + 1
    res = BClosResult(False, None, target)
    res.minpoly_degree = minimal_polynomial_degree(g)
    if res.minpoly_degree == target:
        res.certified, res.route = True, "minimal-polynomial"
        return res
    if g.n <= closure_limit:
        res.closure_dim = len(coherent_closure(g))
        if res.closure_dim == target:
            res.certified, res.route = True, "coherent-closure"
            return res
    else:
        res.notes.append(f"coherent closure skipped (n > {closure_limit})")
    return res
