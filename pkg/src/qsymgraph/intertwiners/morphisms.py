"""Exact linear maps (C^n)^{(x)k} -> (C^n)^{(x)l} built from a few generators.

Morphisms are expression trees (compose, tensor, linear combination) over
leaf generators. They are never expanded into n^k x n^l matrices during
evaluation: a state is kept as a list of *product terms*
``(coeff, (v_1, ..., v_k))`` where each ``v_m`` is a sparse vector
``{index: coeff}`` on one tensor slot, and every node pushes those terms
through factor by factor. Coefficients are Python ints or Fractions.

``to_dense`` is a separate, deliberately naive path (Kronecker products of
leaf matrices) used as an oracle on small instances.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from ..errors import DimensionMismatchError, QSymError

Coeff = int | Fraction
Vec = dict[int, Coeff]
Term = tuple[Coeff, tuple[Vec, ...]]
Basis = tuple[int, ...]


def _norm(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Morphism:
    """Base class. Subclasses implement ``_apply_term`` and ``_dense``."""

    n: int
    source: int
    target: int

    # -- evaluation --------------------------------------------------------------
    def apply_terms(self, terms: Iterable[Term]) -> list[Term]:
        out: list[Term] = []
        for c, vecs in terms:
            if len(vecs) != self.source:
                raise DimensionMismatchError(
                    f"{self!r} expects {self.source} tensor slots, got {len(vecs)}")
            out.extend(self._apply_term(c, vecs))
        return out

    def _apply_term(self, c: Coeff, vecs: tuple[Vec, ...]) -> list[Term]:
        raise NotImplementedError

    def basis_image(self, idx: Basis) -> dict[Basis, Coeff]:
        return apply(self, {tuple(idx): 1})

    # -- structure ---------------------------------------------------------------
    def adjoint(self) -> "Morphism":
        raise NotImplementedError

    @property
    def T(self) -> "Morphism":
        return self.adjoint()

    def to_dense(self) -> np.ndarray:
        """Materialized (n^target x n^source) matrix; for small oracles only."""
        return self._dense()

    def _dense(self) -> np.ndarray:
        raise NotImplementedError

    def tabulate(self) -> "Tabulated":
        """Freeze this morphism into a table of basis images."""
        images = {}
        for idx in itertools.product(range(self.n), repeat=self.source):
            images[idx] = apply(self, {idx: 1})
        return Tabulated(self.n, self.source, self.target, images, name=f"tab({self!r})")

    # -- operators -----------------------------------------------------------------
    def __matmul__(self, other: "Morphism") -> "Morphism":
        return compose(self, other)

    def __add__(self, other: "Morphism") -> "Morphism":
        return add(self, other)

    def __sub__(self, other: "Morphism") -> "Morphism":
        return add(self, scale(-1, other))

    def __neg__(self) -> "Morphism":
        return scale(-1, self)

    def __rmul__(self, c) -> "Morphism":
        if isinstance(c, Rational):
            return scale(c, self)
        return NotImplemented

    def __mul__(self, c) -> "Morphism":
        return self.__rmul__(c)

    def shape(self) -> tuple[int, int]:
        return (self.source, self.target)


# -- helpers over sparse vectors ---------------------------------------------------------

def _matvec(cols: Sequence[Mapping[int, Coeff]], v: Vec) -> Vec:
    out: Vec = {}
    for j, a in v.items():
        for i, b in cols[j].items():
            out[i] = out.get(i, 0) + a * b
    return {i: _norm(x) for i, x in out.items() if x}


def _hadamard(v: Vec, w: Vec) -> Vec:
    if len(v) > len(w):
        v, w = w, v
    out = {}
    for i, a in v.items():
        b = w.get(i)
        if b is not None:
            x = a * b
            if x:
                out[i] = x
    return out


def _unit(i: int) -> Vec:
    return {i: 1}


def _expand(vecs: Sequence[Vec]) -> Iterable[tuple[Basis, Coeff]]:
    """Product-state expansion into basis tuples."""
    for combo in itertools.product(*(v.items() for v in vecs)):
        c: Coeff = 1
        idx = []
        for i, a in combo:
            idx.append(i)
            c = c * a
        yield tuple(idx), c


def _flat_to_terms(flat: Mapping[Basis, Coeff], arity: int) -> list[Term]:
    """Group a flat sparse tensor into product terms sharing all but the last slot."""
    if arity == 0:
        c = flat.get((), 0)
        return [(c, ())] if c else []
    groups: dict[Basis, Vec] = {}
    for idx, c in flat.items():
        if c:
            groups.setdefault(idx[:-1], {})[idx[-1]] = c
    return [(1, tuple(_unit(i) for i in prefix) + (vec,)) for prefix, vec in groups.items()]


# -- leaves ----------------------------------------------------------------------------------

class Leaf(Morphism):
    name = "leaf"

    def __init__(self, n: int):
        self.n = n

    def __repr__(self) -> str:
        return self.name

    def _leaf_image(self, idx: Basis) -> dict[Basis, Coeff]:
        """Direct formula for the image of a basis tuple (dense oracle path)."""
        raise NotImplementedError

    def _dense(self) -> np.ndarray:
        n = self.n
        mat = np.zeros((n ** self.target, n ** self.source), dtype=object)
        for col, idx in enumerate(itertools.product(range(n), repeat=self.source)):
            for out, c in self._leaf_image(idx).items():
                row = 0
                for i in out:
                    row = row * n + i
                mat[row, col] += c
        return mat


class Identity(Leaf):
    name = "Id"
    source = target = 1

    def _apply_term(self, c, vecs):
        return [(c, vecs)]

    def _leaf_image(self, idx):
        return {idx: 1}

    def adjoint(self):
        return self


class Linear1(Leaf):
    """A 1 -> 1 map given by its columns (``cols[j]`` is the image of e_j)."""

    source = target = 1

    def __init__(self, n: int, cols: Sequence[Mapping[int, Coeff]], name: str = "A"):
        super().__init__(n)
        if len(cols) != n:
            raise DimensionMismatchError(f"need {n} columns, got {len(cols)}")
        self.cols = [dict((i, c) for i, c in col.items() if c) for col in cols]
        self.name = name

    @classmethod
    def from_matrix(cls, a, name: str = "A") -> "Linear1":
        a = np.asarray(a, dtype=object)
        n = a.shape[0]
        cols = [{i: _norm(Fraction(a[i, j])) for i in range(n) if a[i, j] != 0} for j in range(n)]
        return cls(n, cols, name)

    def _apply_term(self, c, vecs):
        v = _matvec(self.cols, vecs[0])
        return [(c, (v,))] if v else []

    def _leaf_image(self, idx):
        return {(i,): a for i, a in self.cols[idx[0]].items()}

    def matrix(self) -> np.ndarray:
        m = np.zeros((self.n, self.n), dtype=object)
        for j, col in enumerate(self.cols):
            for i, a in col.items():
                m[i, j] = a
        return m

    def adjoint(self):
        rows: list[dict[int, Coeff]] = [{} for _ in range(self.n)]
        for j, col in enumerate(self.cols):
            for i, a in col.items():
                rows[i][j] = a
        name = self.name[:-1] if self.name.endswith("*") else self.name + "*"
        return Linear1(self.n, rows, name)


class Mult(Leaf):
    """M(e_i (x) e_j) = delta_ij e_i."""
    name = "M"
    source, target = 2, 1

    def _apply_term(self, c, vecs):
        v = _hadamard(vecs[0], vecs[1])
        return [(c, (v,))] if v else []

    def _leaf_image(self, idx):
        return {(idx[0],): 1} if idx[0] == idx[1] else {}

    def adjoint(self):
        return Comult(self.n)


class Comult(Leaf):
    """M*(e_i) = e_i (x) e_i."""
    name = "M*"
    source, target = 1, 2

    def _apply_term(self, c, vecs):
        return [(c * a, (_unit(i), _unit(i))) for i, a in vecs[0].items()]

    def _leaf_image(self, idx):
        return {(idx[0], idx[0]): 1}

    def adjoint(self):
        return Mult(self.n)


class Unit(Leaf):
    """U(1) = sum_k e_k."""
    name = "U"
    source, target = 0, 1

    def _apply_term(self, c, vecs):
        return [(c, ({i: 1 for i in range(self.n)},))]

    def _leaf_image(self, idx):
        return {(i,): 1 for i in range(self.n)}

    def adjoint(self):
        return Counit(self.n)


class Counit(Leaf):
    """U*(e_i) = 1."""
    name = "U*"
    source, target = 1, 0

    def _apply_term(self, c, vecs):
        total = _norm(sum(vecs[0].values()))
        return [(c * total, ())] if total else []

    def _leaf_image(self, idx):
        return {(): 1}

    def adjoint(self):
        return Unit(self.n)


class Swap(Leaf):
    """S(e_i (x) e_j) = e_j (x) e_i."""
    name = "S"
    source = target = 2

    def _apply_term(self, c, vecs):
        return [(c, (vecs[1], vecs[0]))]

    def _leaf_image(self, idx):
        return {(idx[1], idx[0]): 1}

    def adjoint(self):
        return self


class Diag3(Leaf):
    """D(e_i (x) e_j (x) e_k) = delta_ij delta_ik e_i, i.e. M o (id (x) M)."""
    name = "D"
    source, target = 3, 1

    def _apply_term(self, c, vecs):
        v = _hadamard(_hadamard(vecs[0], vecs[1]), vecs[2])
        return [(c, (v,))] if v else []

    def _leaf_image(self, idx):
        return {(idx[0],): 1} if idx[0] == idx[1] == idx[2] else {}

    def adjoint(self):
        return Codiag3(self.n)


class Codiag3(Leaf):
    name = "D*"
    source, target = 1, 3

    def _apply_term(self, c, vecs):
        return [(c * a, (_unit(i), _unit(i), _unit(i))) for i, a in vecs[0].items()]

    def _leaf_image(self, idx):
        return {(idx[0],) * 3: 1}

    def adjoint(self):
        return Diag3(self.n)


class Scalar(Leaf):
    source = target = 0

    def __init__(self, n: int, value: Coeff):
        super().__init__(n)
        self.value = _norm(Fraction(value))
        self.name = f"{self.value}"

    def _apply_term(self, c, vecs):
        return [(c * self.value, ())] if self.value else []

    def _leaf_image(self, idx):
        return {(): self.value} if self.value else {}

    def adjoint(self):
        return self


class Tabulated(Leaf):
    """A k -> l map stored as the images of every basis tuple."""

    def __init__(self, n: int, source: int, target: int,
                 images: Mapping[Basis, Mapping[Basis, Coeff]], name: str = "tab"):
        super().__init__(n)
        self.source, self.target = source, target
        self.images = {tuple(k): {tuple(o): c for o, c in v.items() if c} for k, v in images.items()}
        self.name = name

    def _apply_term(self, c, vecs):
        flat: dict[Basis, Coeff] = {}
        for idx, a in _expand(vecs):
            for out, b in self.images.get(idx, {}).items():
                flat[out] = flat.get(out, 0) + a * b
        return [(c * d, v) for d, v in _flat_to_terms(flat, self.target)]

    def _leaf_image(self, idx):
        return dict(self.images.get(idx, {}))

    def basis_image(self, idx):
        return dict(self.images.get(tuple(idx), {}))

    def adjoint(self):
        flipped: dict[Basis, dict[Basis, Coeff]] = {}
        for src, outs in self.images.items():
            for out, c in outs.items():
                flipped.setdefault(out, {})[src] = c
        name = self.name[:-1] if self.name.endswith("*") else self.name + "*"
        return Tabulated(self.n, self.target, self.source, flipped, name)


# -- composites -------------------------------------------------------------------------------

class Compose(Morphism):
    """``outer o inner``."""

    def __init__(self, outer: Morphism, inner: Morphism):
        if inner.target != outer.source:
            raise DimensionMismatchError(
                f"cannot compose {outer!r} ({outer.source}->{outer.target}) after "
                f"{inner!r} ({inner.source}->{inner.target})")
        if inner.n != outer.n:
            raise DimensionMismatchError("base dimensions differ")
        self.outer, self.inner = outer, inner
        self.n, self.source, self.target = inner.n, inner.source, outer.target

    def _apply_term(self, c, vecs):
        return self.outer.apply_terms(self.inner._apply_term(c, vecs))

    def adjoint(self):
        return Compose(self.inner.adjoint(), self.outer.adjoint())

    def _dense(self):
        return self.outer._dense().dot(self.inner._dense())

    def __repr__(self):
        return f"({self.outer!r} o {self.inner!r})"


class Tensor(Morphism):
    def __init__(self, left: Morphism, right: Morphism):
        if left.n != right.n:
            raise DimensionMismatchError("base dimensions differ")
        self.left, self.right = left, right
        self.n = left.n
        self.source = left.source + right.source
        self.target = left.target + right.target

    def _apply_term(self, c, vecs):
        k = self.left.source
        lhs = self.left._apply_term(1, vecs[:k])
        if not lhs:
            return []
        rhs = self.right._apply_term(1, vecs[k:])
        return [(c * a * b, lv + rv) for a, lv in lhs for b, rv in rhs]

    def adjoint(self):
        return Tensor(self.left.adjoint(), self.right.adjoint())

    def _dense(self):
        return np.kron(self.left._dense(), self.right._dense())

    def __repr__(self):
        return f"({self.left!r} (x) {self.right!r})"


class LinComb(Morphism):
    def __init__(self, parts: Sequence[tuple[Coeff, Morphism]]):
        if not parts:
            raise QSymError("empty linear combination")
        shapes = {(m.n, m.source, m.target) for _, m in parts}
        if len(shapes) != 1:
            raise DimensionMismatchError(f"cannot add morphisms of shapes {sorted(shapes)}")
        self.parts = [(_norm(Fraction(c)), m) for c, m in parts]
        self.n, self.source, self.target = shapes.pop()

    def _apply_term(self, c, vecs):
        out: list[Term] = []
        for a, m in self.parts:
            if a:
                out.extend(m._apply_term(c * a, vecs))
        return out

    def adjoint(self):
        return LinComb([(a, m.adjoint()) for a, m in self.parts])

    def _dense(self):
        acc = None
        for a, m in self.parts:
            d = m._dense() * a
            acc = d if acc is None else acc + d
        return acc

    def __repr__(self):
        return " + ".join(f"{a}*{m!r}" if a != 1 else repr(m) for a, m in self.parts)


# -- public constructors ---------------------------------------------------------------------

def compose(f: Morphism, *rest: Morphism) -> Morphism:
    """compose(f, g, h) = f o g o h."""
    out = f
    for g in rest:
        out = Compose(out, g)
    return out


def tensor(f: Morphism, *rest: Morphism) -> Morphism:
    out = f
    for g in rest:
        out = Tensor(out, g)
    return out


def add(f: Morphism, *rest: Morphism) -> Morphism:
    parts: list[tuple[Coeff, Morphism]] = []
    for m in (f, *rest):
        if isinstance(m, LinComb):
            parts.extend(m.parts)
        else:
            parts.append((1, m))
    return LinComb(parts)


def scale(c: Coeff, f: Morphism) -> Morphism:
    if isinstance(f, LinComb):
        return LinComb([(c * a, m) for a, m in f.parts])
    return LinComb([(c, f)])


def adjoint(f: Morphism) -> Morphism:
    return f.adjoint()


def identity_power(n: int, k: int) -> Morphism:
    if k == 0:
        return Scalar(n, 1)
    return tensor(*[Identity(n) for _ in range(k)])


def orbital_operator(orb, s: int) -> Linear1:
    """T_s(e_j) = sum of e_i over i in O_j^s."""
    if not 0 <= s <= orb.r:
        raise IndexError(f"orbital index {s} outside [0, {orb.r}]")
    cols = [{i: 1 for i in orb.O(j, s)} for j in range(orb.n)]
    return Linear1(orb.n, cols, name=f"T{s}")


def generator(name: str, n: int, s: int | None = None, orbitals=None) -> Morphism:
    """Standard generators by name: U, U*, M, M*, S, Id, D, D*, T (needs s, orbitals)."""
    simple: dict[str, Callable[[int], Morphism]] = {
        "U": Unit, "U*": Counit, "M": Mult, "M*": Comult, "S": Swap,
        "Id": Identity, "D": Diag3, "D*": Codiag3,
    }
    if name in simple:
        return simple[name](n)
    if name in ("T", "T_s") or (name.startswith("T") and name[1:].isdigit()):
        if s is None and name[1:].isdigit():
            s = int(name[1:])
        if s is None:
            raise QSymError("generator T needs an orbital index s")
        if orbitals is None:
            raise QSymError("generator T needs an orbital structure")
        if orbitals.n != n:
            raise DimensionMismatchError("orbital structure has a different vertex count")
        return orbital_operator(orbitals, s)
    raise QSymError(f"unknown generator {name!r}")


def hadamard(f: Morphism, g: Morphism) -> Morphism:
    """f x g = M o (f (x) g) o M*, the entrywise product of 1 -> 1 maps."""
    n = f.n
    return compose(Mult(n), tensor(f, g), Comult(n))


# -- evaluation entry points -------------------------------------------------------------------

def apply(f: Morphism, v: Mapping[Basis, Coeff]) -> dict[Basis, Coeff]:
    """Exact image of a sparse vector over basis tuples."""
    terms: list[Term] = []
    for idx, c in v.items():
        idx = tuple(idx)
        if len(idx) != f.source:
            raise DimensionMismatchError(
                f"basis tuple {idx} has arity {len(idx)}, morphism expects {f.source}")
        if c:
            terms.append((c, tuple(_unit(i) for i in idx)))
    flat: dict[Basis, Coeff] = {}
    for c, vecs in f.apply_terms(terms):
        for idx, a in _expand(vecs):
            flat[idx] = flat.get(idx, 0) + c * a
    return {k: _norm(x) for k, x in sorted(flat.items()) if x}


def apply_basis(f: Morphism, *idx: int) -> dict[Basis, Coeff]:
    return apply(f, {tuple(idx): 1})


def same_action(f: Morphism, g: Morphism) -> bool:
    """Compare on every basis tuple (n^source evaluations)."""
    if f.shape() != g.shape() or f.n != g.n:
        return False
    for idx in itertools.product(range(f.n), repeat=f.source):
        if apply(f, {idx: 1}) != apply(g, {idx: 1}):
            return False
    return True


def dense_from_lazy(f: Morphism) -> np.ndarray:
    """Matrix assembled column by column from lazy evaluation."""
    n = f.n
    mat = np.zeros((n ** f.target, n ** f.source), dtype=object)
    for col, idx in enumerate(itertools.product(range(n), repeat=f.source)):
        for out, c in apply(f, {idx: 1}).items():
            row = 0
            for i in out:
                row = row * n + i
            mat[row, col] += c
    return mat


def format_vector(v: Mapping[Basis, Coeff]) -> str:
    """``2e_1+e_3`` style rendering, tuples as ``e_i(x)e_j``."""
    if not v:
        return "0"
    parts = []
    for idx, c in sorted(v.items()):
        basis = "(x)".join(f"e_{i}" for i in idx) if idx else "1"
        if c == 1:
            parts.append(basis)
        elif c == -1:
            parts.append("-" + basis)
        else:
            parts.append(f"{c}{basis}")
    return "+".join(parts).replace("+-", "-")


def vec(*indices: int, coeffs: Sequence[Coeff] | None = None) -> dict[Basis, Coeff]:
    """Sparse 1-slot vector helper: vec(4, 10) == e_4 + e_10."""
    out: dict[Basis, Coeff] = {}
    for pos, i in enumerate(indices):
        c = 1 if coeffs is None else coeffs[pos]
        out[(i,)] = out.get((i,), 0) + c
    return {k: c for k, c in out.items() if c}
