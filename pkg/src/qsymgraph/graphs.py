"""Finite simple graphs on vertices 0..n-1, stored as adjacency bit rows."""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import GraphValidationError


@dataclass(frozen=True)
class Graph:
    """Undirected loop-free graph; row ``i`` of ``rows`` is a bitmask of N(i)."""

    n: int
    rows: tuple[int, ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise GraphValidationError(f"expected {self.n} rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row & ~full:
                raise GraphValidationError(f"row {i} has bits beyond n={self.n}")
            if row >> i & 1:
                raise GraphValidationError(f"self-loop at vertex {i}")
            for j in _bits(row):
                if not self.rows[j] >> i & 1:
                    raise GraphValidationError(f"asymmetric adjacency at ({i}, {j})")

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def neighbors(self, i: int) -> list[int]:
        return list(_bits(self.rows[i]))

    def degree(self, i: int) -> int:
        return self.rows[i].bit_count()

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in _bits(self.rows[i]) if i < j]

    def adjacency_matrix(self, dtype=np.int64) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        for i, j in self.edges():
            a[i, j] = a[j, i] = 1
        return a

    def is_complete(self) -> bool:
        return self.num_edges == self.n * (self.n - 1) // 2

    def is_empty(self) -> bool:
        return self.num_edges == 0

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph whose edges are (perm[i], perm[j]) for edges (i, j)."""
        return from_edge_list(self.n, [(perm[i], perm[j]) for i, j in self.edges()])

    def is_automorphism(self, perm: Sequence[int]) -> bool:
        for i in range(self.n):
            image = 0
            for j in _bits(self.rows[i]):
                image |= 1 << perm[j]
            if image != self.rows[perm[i]]:
                return False
        return True

    def digest(self) -> str:
        h = hashlib.sha256()
        h.update(str(self.n).encode())
        for row in self.rows:
            h.update(b":" + format(row, "x").encode())
        return h.hexdigest()[:16]

    def label(self) -> str:
        return self.name or f"graph[n={self.n},m={self.num_edges},{self.digest()}]"


def _bits(x: int) -> Iterable[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class CirculantSpec:
    """``C_n(k_1, ..., k_r)``; the jump 1 is always implied."""

    n: int
    jumps: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise GraphValidationError(f"circulant order must be positive, got {self.n}")
        canon = sorted(set(self.jumps) - {1})
        half = self.n // 2
        for k in canon:
            if not 2 <= k <= half:
                raise GraphValidationError(
                    f"jump {k} out of range [2, {half}] for C_{self.n}")
        object.__setattr__(self, "jumps", tuple(canon))

    def symbol_set(self) -> list[int]:
        n = self.n
        if n == 1:
            return []
        s = {1 % n, (-1) % n}
        for k in self.jumps:
            s.add(k % n)
            s.add((-k) % n)
        s.discard(0)
        return sorted(s)

    def __str__(self) -> str:
        return f"C{self.n}({','.join(map(str, self.jumps))})" if self.jumps else f"C{self.n}"


_SPEC_RE = re.compile(r"^\s*[cC]\s*(\d+)\s*(?:\(\s*([0-9,\s]*)\))?\s*$")


def parse_circulant_spec(text: str) -> CirculantSpec:
    """Parse ``C13(3,4)``, ``c13``, ``C19(1,7,8)``; a leading 1 is accepted."""
    m = _SPEC_RE.match(text)
    if not m:
        col = next((i + 1 for i, ch in enumerate(text) if not (ch.isdigit() or ch in "cC(), ")), None)
        raise GraphValidationError(f"not a circulant spec string: {text!r}",
                                   source="circulant-spec", column=col)
    n = int(m.group(1))
    jumps: list[int] = []
    body = m.group(2)
    if body is not None and body.strip():
        col = m.start(2) + 1
        for pos, tok in enumerate(body.split(",")):
            value = tok.strip()
            if not value:
                raise GraphValidationError(f"empty jump at position {pos + 1} in {text!r}",
                                           source="circulant-spec", column=col)
            jump = int(value)
            if jump != 1 and not 2 <= jump <= n // 2:
                raise GraphValidationError(f"jump {jump} out of range [2, {n // 2}] for C_{n}",
                                           source="circulant-spec",
                                           column=col + len(tok) - len(tok.lstrip()))
            jumps.append(jump)
            col += len(tok) + 1
    return CirculantSpec(n, tuple(jumps))


def from_symbol_set(n: int, S: Iterable[int], name: str | None = None) -> Graph:
    """Circulant graph i ~ j iff (j - i) mod n in S."""
    sset = {x % n for x in S}
    if 0 in sset:
        raise GraphValidationError("symbol set contains 0")
    if {(-x) % n for x in sset} != sset:
        raise GraphValidationError("symbol set is not symmetric")
    rows = []
    for i in range(n):
        row = 0
        for x in sset:
            row |= 1 << ((i + x) % n)
        rows.append(row)
    return Graph(n, tuple(rows), name)


def from_circulant_spec(spec: CirculantSpec | str) -> Graph:
    if isinstance(spec, str):
        spec = parse_circulant_spec(spec)
    return from_symbol_set(spec.n, spec.symbol_set(), name=str(spec))


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << i) for i in range(n)), f"K{n}")


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n, f"E{n}")


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    name = f"co-{g.name}" if g.name else None
    return Graph(g.n, tuple(full & ~row & ~(1 << i) for i, row in enumerate(g.rows)), name)


def from_edge_list(n: int, edges: Iterable[tuple[int, int]], name: str | None = None) -> Graph:
    rows = [0] * n
    for idx, (u, v) in enumerate(edges):
        if not (0 <= u < n and 0 <= v < n):
            raise GraphValidationError(f"edge ({u}, {v}) has an endpoint outside [0, {n - 1}]",
                                       line=idx + 1)
        if u == v:
            raise GraphValidationError(f"self-loop at vertex {u}", line=idx + 1)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows), name)


def from_adjacency_matrix(a, name: str | None = None) -> Graph:
    a = np.asarray(a)
    n = a.shape[0]
    if a.shape != (n, n):
        raise GraphValidationError("adjacency matrix must be square")
    rows = []
    for i in range(n):
        row = 0
        for j in range(n):
            if a[i, j] not in (0, 1):
                raise GraphValidationError(f"entry ({i}, {j}) is not 0/1")
            if a[i, j] != a[j, i]:
                raise GraphValidationError(f"asymmetric adjacency at ({i}, {j})")
            if a[i, j]:
                row |= 1 << j
        rows.append(row)
    return Graph(n, tuple(rows), name)


def cartesian_product_with_edge(g: Graph) -> Graph:
    """K_2 box g, copy A on even labels 2v, copy B on odd labels 2v + 1."""
    edges = [(2 * v, 2 * v + 1) for v in range(g.n)]
    for u, v in g.edges():
        edges.append((2 * u, 2 * v))
        edges.append((2 * u + 1, 2 * v + 1))
    name = f"prism:{g.name}" if g.name else None
    return from_edge_list(2 * g.n, edges, name)


def path(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)], f"P{n}")


def cyclic_shift_is_automorphism(g: Graph) -> bool:
    return g.is_automorphism([(i + 1) % g.n for i in range(g.n)])


def circulant_symbols(g: Graph) -> list[int]:
    """Symbol set of g seen as a circulant in its given labeling (N(0))."""
    return g.neighbors(0)


# --- text formats -----------------------------------------------------------

def parse_edge_list_text(text: str, source: str = "<edge-list>") -> Graph:
    lines = [(no, ln.strip()) for no, ln in enumerate(text.splitlines(), start=1)]
    lines = [(no, ln) for no, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphValidationError("empty edge-list file", source=source)
    no, head = lines[0]
    try:
        n, m = (int(t) for t in head.split())
    except ValueError:
        raise GraphValidationError("header must be 'n m'", source=source, line=no) from None
    body = lines[1:]
    if len(body) != m:
        raise GraphValidationError(f"header announces {m} edges, found {len(body)}",
                                   source=source, line=no)
    edges = []
    seen = set()
    for no, ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphValidationError("edge line must be 'u v'", source=source, line=no)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphValidationError("non-integer endpoint", source=source, line=no) from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphValidationError(f"endpoint out of range [0, {n - 1}]", source=source, line=no)
        if u == v:
            raise GraphValidationError(f"self-loop at vertex {u}", source=source, line=no)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphValidationError(f"duplicate edge {key}", source=source, line=no)
        seen.add(key)
        edges.append((u, v))
    return from_edge_list(n, edges, name=source)


def parse_adjacency_text(text: str, source: str = "<adjacency>") -> Graph:
    lines = [(no, ln.strip()) for no, ln in enumerate(text.splitlines(), start=1)]
    lines = [(no, ln) for no, ln in lines if ln]
    n = len(lines)
    rows = []
    for r, (no, ln) in enumerate(lines):
        if len(ln) != n:
            raise GraphValidationError(f"row has {len(ln)} characters, expected {n}",
                                       source=source, line=no)
        bad = next((c for c, ch in enumerate(ln) if ch not in "01"), None)
        if bad is not None:
            raise GraphValidationError(f"character {ln[bad]!r} is not 0/1",
                                       source=source, line=no, column=bad + 1)
        rows.append([int(ch) for ch in ln])
    for i in range(n):
        if rows[i][i]:
            raise GraphValidationError(f"self-loop at vertex {i}", source=source,
                                       line=lines[i][0], column=i + 1)
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise GraphValidationError(f"asymmetric adjacency at ({i}, {j})",
                                           source=source, line=lines[i][0], column=j + 1)
    return from_adjacency_matrix(np.array(rows, dtype=np.int64).reshape(n, n), name=source)


def read_graph_file(path: str | Path) -> Graph:
    """Sniff edge-list (first line 'n m') versus 0/1 adjacency rows."""
    path = Path(path)
    text = path.read_text()
    first = next((ln.strip() for ln in text.splitlines() if ln.strip()), "")
    if len(first.split()) == 2:
        return parse_edge_list_text(text, source=str(path))
    if first and set(first) <= {"0", "1"}:
        return parse_adjacency_text(text, source=str(path))
    raise GraphValidationError("could not detect format (tried edge-list and adjacency)",
                               source=str(path), line=1)
