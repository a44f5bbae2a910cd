"""Witness search and the swap intertwiner built from it.

A witness assigns to every orbital s a vertex j_s in O_0^s, a vertex k_s
and five orbital labels t^1..t^5 with three singleton intersections:

    O_0^{t1} & O_{j}^{t2} = {k}
    O_0^{s}  & O_{k}^{t4} = {j}
    O_{k}^{t5} & O_{j}^{t3} = {0}

From such a record the map f_s sends e_i (x) e_j to e_j (x) e_i for every
pair in orbital s, and F = sum_s f_s o g_s is then the flip map.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from ..errors import ContradictionError, DimensionMismatchError, WitnessError
from ..symmetry import OrbitalStructure
from .morphisms import (
    Comult,
    Identity,
    Morphism,
    Mult,
    add,
    apply,
    compose,
    orbital_operator,
    tensor,
)


@dataclass(frozen=True)
class WitnessRecord:
    s: int
    j: int
    k: int
    t: tuple[int, int, int, int, int]

    def to_dict(self) -> dict:
        return {"s": self.s, "j": self.j, "k": self.k, "t": list(self.t)}

    @classmethod
    def from_dict(cls, d: dict) -> "WitnessRecord":
        return cls(int(d["s"]), int(d["j"]), int(d["k"]), tuple(int(x) for x in d["t"]))


def check_record(orb: OrbitalStructure, rec: WitnessRecord) -> list[str]:
    """Problems with one record; empty list means all three singletons hold."""
    problems = []
    s, j, k = rec.s, rec.j, rec.k
    t1, t2, t3, t4, t5 = rec.t
    if not (0 <= j < orb.n and 0 <= k < orb.n):
        return [f"s={s}: vertex out of range"]
    if any(not 0 <= t <= orb.r for t in rec.t):
        return [f"s={s}: orbital label out of range [0, {orb.r}]"]
    if orb.orbit_of_pair(j, 0) != s:
        problems.append(f"s={s}: j={j} is not in O_0^{s}")
    a = orb.intersection(0, t1, j, t2)
    if a != (k,):
        problems.append(f"s={s}: O_0^{t1} & O_{j}^{t2} = {set(a) or '{}'}, expected {{{k}}}")
    b = orb.intersection(0, s, k, t4)
    if b != (j,):
        problems.append(f"s={s}: O_0^{s} & O_{k}^{t4} = {set(b) or '{}'}, expected {{{j}}}")
    c = orb.intersection(k, t5, j, t3)
    if c != (0,):
        problems.append(f"s={s}: O_{k}^{t5} & O_{j}^{t3} = {set(c) or '{}'}, expected {{0}}")
    return problems


@dataclass(frozen=True)
class SwapWitness:
    """One record per orbital 0..r; ``origin`` says which search produced it."""

    records: tuple[WitnessRecord, ...]
    origin: str = "nosymG"
    seed: tuple[int, int] | None = None

    @property
    def r(self) -> int:
        return len(self.records) - 1

    def validate(self, orb: OrbitalStructure) -> None:
        if len(self.records) != orb.r + 1:
            raise WitnessError(f"witness has {len(self.records)} records, need {orb.r + 1}")
        problems = []
        for s, rec in enumerate(self.records):
            if rec.s != s:
                problems.append(f"record {s} is labelled s={rec.s}")
            problems.extend(check_record(orb, rec))
        if problems:
            raise WitnessError("; ".join(problems))

    def to_dict(self) -> dict:
        return {
            "origin": self.origin,
            "seed": list(self.seed) if self.seed else None,
            "records": [rec.to_dict() for rec in self.records],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SwapWitness":
        seed = d.get("seed")
        return cls(tuple(WitnessRecord.from_dict(x) for x in d["records"]),
                   d.get("origin", "nosymG"), tuple(seed) if seed else None)


def identity_record() -> WitnessRecord:
    return WitnessRecord(0, 0, 0, (0, 0, 0, 0, 0))


# --- searches ----------------------------------------------------------------------------

def find_nosym2_witness(orb: OrbitalStructure, base: tuple[int, int] = (0, 1)
                        ) -> tuple[int, int] | None:
    """First (s1, s2) in row-major order with |O_a^{s1} & O_b^{s2}| == 1."""
    a, b = base
    for s1 in range(1, orb.r + 1):
        for s2 in range(1, orb.r + 1):
            if len(orb.intersection(a, s1, b, s2)) == 1:
                return (s1, s2)
    return None


def _rep_of(orb: OrbitalStructure, s: int) -> int:
    if orb.reps is not None:
        return orb.reps[s - 1]
    return orb.O(0, s)[0]


def extend_witness(orb: OrbitalStructure, pair: tuple[int, int] | None = None) -> SwapWitness:
    """Per-orbital singletons |O_0^{t1} & O_{y_s}^{t2}| = 1, completed to 5-tuples.

    The completion uses t3 = s, t4 = t2, t5 = t1. A missing singleton for some
    s while ``pair`` is one would contradict the transfer lemma and is raised.
    """
    if pair is not None and len(orb.intersection(0, pair[0], 1, pair[1])) != 1:
        raise WitnessError(f"{pair} is not a singleton pair")
    records = [identity_record()]
    for s in range(1, orb.r + 1):
        y = _rep_of(orb, s)
        rec = None
        for t1 in range(1, orb.r + 1):
            for t2 in range(1, orb.r + 1):
                hit = orb.intersection(0, t1, y, t2)
                if len(hit) == 1:
                    rec = WitnessRecord(s, y, hit[0], (t1, t2, s, t2, t1))
                    break
            if rec:
                break
        if rec is None:
            if pair is not None:
                raise ContradictionError(
                    f"singleton pair {pair} exists but no singleton found for s={s} (y_s={y})")
            raise WitnessError(f"no singleton intersection for s={s}")
        problems = check_record(orb, rec)
        if problems:
            raise ContradictionError("completed record fails: " + "; ".join(problems))
        records.append(rec)
    return SwapWitness(tuple(records), "nosym2", tuple(pair) if pair else None)


def _scan_orbital(orb: OrbitalStructure, s: int) -> WitnessRecord | None:
    lab = orb.labels
    for j in orb.O(0, s):
        t3 = int(lab[0, j])
        for k in range(orb.n):
            t1, t2 = int(lab[k, 0]), int(lab[k, j])
            if orb.intersection(0, t1, j, t2) != (k,):
                continue
            t4 = int(lab[j, k])
            if orb.intersection(0, s, k, t4) != (j,):
                continue
            t5 = int(lab[0, k])
            if orb.intersection(k, t5, j, t3) != (0,):
                continue
            return WitnessRecord(s, j, k, (t1, t2, t3, t4, t5))
    return None


@dataclass
class NoSymGSearch:
    witness: SwapWitness | None
    failed: list[int] = field(default_factory=list)


def search_nosymG(orb: OrbitalStructure) -> NoSymGSearch:
    """Deterministic scan; reports every orbital without a record.

    Membership pins down every t once (j, k) is chosen (t1 is the orbital of
    (k, 0), and so on), so the scan runs over j in O_0^s, then k ascending.
    """
    records = [identity_record()]
    failed = []
    for s in range(1, orb.r + 1):
        rec = _scan_orbital(orb, s)
        if rec is None:
            failed.append(s)
        else:
            records.append(rec)
    if failed:
        return NoSymGSearch(None, failed)
    return NoSymGSearch(SwapWitness(tuple(records), "nosymG"))


def find_nosymG_witness(orb: OrbitalStructure) -> SwapWitness | None:
    return search_nosymG(orb).witness


# --- the swap candidate ---------------------------------------------------------------------

def build_g(orb: OrbitalStructure, s: int) -> Morphism:
    """g_s(e_i (x) e_j) = [j in O_i^s] e_i (x) e_j."""
    n = orb.n
    Id = Identity(n)
    return compose(tensor(Id, Mult(n)),
                   tensor(Id, orbital_operator(orb, s), Id),
                   tensor(Comult(n), Id))


def build_f(orb: OrbitalStructure, rec: WitnessRecord) -> Morphism:
    n = orb.n
    Id, M, Ms = Identity(n), Mult(n), Comult(n)
    t1, t2, t3, t4, t5 = rec.t
    T = lambda s: orbital_operator(orb, s)  # noqa: E731
    h = compose(tensor(M, M), tensor(Id, T(t4), T(t5), Id))
    return compose(h,
                   tensor(Id, compose(Ms, M), Id),
                   tensor(T(rec.s), T(t1), T(t2), T(t3)),
                   tensor(Ms, Ms))


def build_swap_candidate(orb: OrbitalStructure, w: SwapWitness) -> Morphism:
    """F = sum_{s=0}^{r} f_s o g_s."""
    w.validate(orb)
    parts = [compose(build_f(orb, rec), build_g(orb, rec.s)) for rec in w.records]
    return add(*parts)


@dataclass
class SwapVerification:
    ok: bool
    checked: int
    total: int
    failures: list[dict] = field(default_factory=list)
    exhaustive: bool = True

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "checked": self.checked,
            "total": self.total,
            "exhaustive": self.exhaustive,
            "failures": self.failures,
        }


def verify_swap(F: Morphism, n: int | None = None,
                pairs: Iterable[tuple[int, int]] | None = None,
                max_failures: int = 10) -> SwapVerification:
    """Check F(e_i (x) e_j) == e_j (x) e_i on all pairs (or on ``pairs``)."""
    n = F.n if n is None else n
    if F.n != n:
        raise DimensionMismatchError(f"morphism lives on C^{F.n}, not C^{n}")
    if (F.source, F.target) != (2, 2):
        raise DimensionMismatchError("swap check needs a 2 -> 2 morphism")
    exhaustive = pairs is None
    todo = [(i, j) for i in range(n) for j in range(n)] if exhaustive else list(pairs)
    failures = []
    ok = True
    for i, j in todo:
        got = apply(F, {(i, j): 1})
        if got != {(j, i): 1}:
            ok = False
            if len(failures) < max_failures:
                failures.append({"pair": [i, j],
                                 "image": {f"{a},{b}": str(c) for (a, b), c in got.items()}})
    return SwapVerification(ok, len(todo), n * n, failures, exhaustive)


def sample_pairs(orb: OrbitalStructure, per_orbital: int = 3) -> list[tuple[int, int]]:
    """A deterministic pair sample that hits every orbital at several vertices."""
    n = orb.n
    out = []
    starts = sorted({0, 1 % n, n // 2, n - 1})
    for i in starts:
        for s in range(orb.r + 1):
            members = orb.O(i, s)
            picks = {members[0], members[-1], members[len(members) // 2]}
            out.extend((i, j) for j in sorted(picks)[:per_orbital])
    return sorted(set(out))
