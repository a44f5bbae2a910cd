"""Per-graph decision pipeline: run the criteria cheapest-first, keep all evidence.

The verdict is the first conclusive stage; later cheap stages still run so
the report shows everything that was established. Expensive stages (swap
construction, hand-built certificates) are skipped once a verdict exists.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import factorial

from ..errors import QSymError, ResourceLimitError
from ..graphs import Graph, cyclic_shift_is_automorphism
from ..intertwiners.hand_constructions import verify_paper_c13, verify_paper_c17
from ..intertwiners.swap import (
    build_swap_candidate,
    extend_witness,
    find_nosym2_witness,
    sample_pairs,
    search_nosymG,
    verify_swap,
)
from ..orbital_algebra import bclos_check, circulant_gamma, gamma_base_pair, gamma_matrix
from ..residue_groups import (
    borne_bound,
    circulant_type_data,
    euler_phi,
    is_prime,
    is_two_maximal,
)
from ..symmetry import (
    DEFAULT_AUT_CAP,
    automorphism_group,
    circulant_orbitals,
    is_vertex_transitive,
    orbitals,
)

NO_QS = "NoQuantumSymmetry"
HAS_QS = "HasQuantumSymmetry"
INCONCLUSIVE = "Inconclusive"

# (p, k) pairs with a hand-built flip map; S = E is forced for both.
SCRIPTED = {(13, 6): "C13(3,4)", (17, 8): "C17(2,4,8)"}


@dataclass
class Verdict:
    kind: str
    reason: str

    def to_dict(self) -> dict:
        return {"kind": self.kind, "reason": self.reason}


@dataclass
class AnalyzeOptions:
    aut_cap: int = DEFAULT_AUT_CAP
    full_verify: bool = False
    exhaustive_limit: int = 100
    closure_limit: int = 128
    per_orbital_sample: int = 3


@dataclass
class AnalysisReport:
    graph: dict
    vertex_transitive: bool | None = None
    circulant: dict | None = None
    aut_order: dict | None = None
    gamma: dict | None = None
    criteria: dict = field(default_factory=dict)
    verdict: Verdict = field(default_factory=lambda: Verdict(INCONCLUSIVE, "no stage run"))
    certificate: dict | None = None
    stages: list[dict] = field(default_factory=list)

    @property
    def conclusive(self) -> bool:
        return self.verdict.kind != INCONCLUSIVE

    def to_dict(self) -> dict:
        return {
            "graph": self.graph,
            "type": self.circulant,
            "criteria": self.criteria,
            "verdict": self.verdict.to_dict(),
            "certificate": self.certificate,
            "vertex_transitive": self.vertex_transitive,
            "aut_order": self.aut_order,
            "gamma": self.gamma,
            "stages": self.stages,
        }


def graph_identity(g: Graph) -> dict:
    return {"label": g.label(), "n": g.n, "edges": [list(e) for e in g.edges()],
            "digest": g.digest()}


class _Run:
    def __init__(self, g: Graph, opts: AnalyzeOptions):
        self.g = g
        self.opts = opts
        self.rep = AnalysisReport(graph_identity(g))
        self._verdict: Verdict | None = None

    def stage(self, name: str, status: str, **detail):
        entry = {"stage": name, "status": status}
        entry.update(detail)
        self.rep.stages.append(entry)

    def conclude(self, kind: str, reason: str, certificate: dict):
        if self._verdict is None:
            self._verdict = Verdict(kind, reason)
            cert = {"version": 1, "graph": self.rep.graph, "verdict": self._verdict.to_dict()}
            cert.update(certificate)
            self.rep.certificate = cert

    @property
    def done(self) -> bool:
        return self._verdict is not None

    def finish(self, fallback: str) -> AnalysisReport:
        self.rep.verdict = self._verdict or Verdict(INCONCLUSIVE, fallback)
        return self.rep


def _verify(F, orb, opts: AnalyzeOptions):
    if opts.full_verify or orb.n <= opts.exhaustive_limit:
        return verify_swap(F)
    return verify_swap(F, pairs=sample_pairs(orb, opts.per_orbital_sample))


def analyze(g: Graph, opts: AnalyzeOptions | None = None) -> AnalysisReport:
    opts = opts or AnalyzeOptions()
    run = _Run(g, opts)
    rep = run.rep
    n = g.n

    # triviality
    if n <= 3:
        run.stage("small", "holds", n=n)
        rep.criteria["small"] = {"holds": True, "n": n}
        run.conclude(NO_QS, f"n = {n} <= 3: the quantum permutation group equals S_n",
                     {"kind": "small"})
    trivial = n >= 1 and (g.is_complete() or g.is_empty())
    rep.criteria["trivial"] = {"holds": trivial,
                               "which": "complete" if g.is_complete() else
                               ("empty" if g.is_empty() else None)}
    if trivial and n >= 4:
        which = "complete" if g.is_complete() else "empty"
        run.stage("trivial", "holds", which=which)
        run.conclude(HAS_QS, f"{which} graph on {n} >= 4 vertices: quantum group is S_{n}^+",
                     {"kind": "trivial", "which": which})

    # vertex-transitivity: a cyclic shift settles it without search
    shift = n > 0 and cyclic_shift_is_automorphism(g)
    try:
        vt = True if shift else is_vertex_transitive(g, opts.aut_cap)
        run.stage("vertex_transitive", "holds" if vt else "fails",
                  route="cyclic shift" if shift else "automorphism search")
    except ResourceLimitError as exc:
        vt = None
        run.stage("vertex_transitive", "error", message=str(exc))
    rep.vertex_transitive = vt

    if trivial:
        rep.aut_order = {"order": factorial(n), "source": "symmetric group"}
        grp = None
    elif 1 <= n <= opts.aut_cap:
        try:
            grp = automorphism_group(g, opts.aut_cap)
            rep.aut_order = {"order": grp.order, "source": "search"}
        except ResourceLimitError as exc:
            run.stage("automorphisms", "error", message=str(exc))
            grp = None
    else:
        grp = None

    if not vt:
        reason = ("not vertex-transitive; every criterion here needs a transitive group"
                  if vt is False else "vertex-transitivity undecided (raise --aut-cap)")
        return run.finish(reason)

    # circulant p-graph arithmetic
    data = None
    if shift and is_prime(n) and not trivial:
        data = circulant_type_data(g.neighbors(0), n)
        rep.circulant = data.to_dict()
        if rep.aut_order is None:
            rep.aut_order = {"order": n * data.type_k, "source": "arithmetic p*k"}
        k = data.type_k
        bound = borne_bound(k)
        holds = n > bound
        rep.criteria["bound"] = {"p": n, "k": k, "phi_k": euler_phi(k), "bound": bound,
                                 "holds": holds}
        run.stage("bound", "holds" if holds else "fails", bound=bound)
        if holds:
            run.conclude(NO_QS, f"p = {n} > 6^phi({k}) = {bound}",
                         {"kind": "bound", "p": n, "k": k, "bound": bound})
        if n >= 5:
            tm = is_two_maximal(data.E)
            rep.criteria["two_maximal"] = {"holds": tm}
            run.stage("two_maximal", "holds" if tm else "fails")
            if tm:
                run.conclude(NO_QS, f"E = {list(data.E.elements)} is 2-maximal (p >= 5)",
                             {"kind": "two-maximal", "E": list(data.E.elements)})
        else:
            rep.criteria["two_maximal"] = {"holds": None, "note": "needs p >= 5"}

    if trivial:
        return run.finish("trivial graph")

    # orbitals
    try:
        if data is not None:
            orb = circulant_orbitals(data)
            orb_source = "circulant"
        else:
            orb = orbitals(g, opts.aut_cap, group=grp)
            orb_source = "search"
    except QSymError as exc:
        run.stage("orbitals", "error", message=str(exc))
        return run.finish(f"orbitals unavailable: {exc}")
    run.stage("orbitals", "done", source=orb_source, r=orb.r)

    if data is not None:
        gam = circulant_gamma(data)
    else:
        gam = gamma_matrix(orb, gamma_base_pair(orb, g))
    rep.gamma = gam.to_dict()

    # NoSym2 (circulant p-graphs)
    if data is not None:
        pair = find_nosym2_witness(orb)
        entry = {"holds": pair is not None, "pair": list(pair) if pair else None}
        if pair:
            entry["intersection"] = list(orb.intersection(0, pair[0], 1, pair[1]))
        rep.criteria["nosym2"] = entry
        run.stage("nosym2", "holds" if pair else "fails")
        if pair and not run.done:
            w = extend_witness(orb, pair)
            _swap_stage(run, orb, w, orb_source, "nosym2")

    # NoSymG (needs B-clos)
    if not run.done:
        bc = bclos_check(g, orb, opts.closure_limit)
        rep.criteria["bclos"] = bc.to_dict()
        run.stage("bclos", "certified" if bc.certified else "inconclusive", route=bc.route)
        if bc.certified:
            search = search_nosymG(orb)
            rep.criteria["nosymG"] = {"holds": search.witness is not None,
                                      "failed_orbitals": search.failed}
            run.stage("nosymG", "holds" if search.witness else "fails", failed=search.failed)
            if search.witness is not None:
                _swap_stage(run, orb, search.witness, orb_source, "nosymG")
        else:
            rep.criteria["nosymG"] = {"holds": None,
                                      "note": "B-clos not certified; hypothesis unverified"}

    # hand-built certificates
    if not run.done and data is not None and (n, data.type_k) in SCRIPTED:
        which = SCRIPTED[(n, data.type_k)]
        tr = verify_paper_c13() if n == 13 else verify_paper_c17()
        rep.criteria["scripted"] = {"holds": tr.ok, "construction": which,
                                    "checks": len(tr.checks)}
        run.stage("scripted", "holds" if tr.ok else "fails", construction=which)
        if tr.ok:
            run.conclude(NO_QS, f"hand-built flip intertwiner for {which} verified on all pairs",
                         {"kind": "scripted", "construction": which,
                          "transcript": tr.to_dict()})

    if not run.done:
        reasons = []
        crit = rep.criteria
        if data is not None:
            if crit.get("bound", {}).get("holds") is False:
                reasons.append("p <= 6^phi(k)")
            if crit.get("two_maximal", {}).get("holds") is False:
                reasons.append("E not 2-maximal")
            if crit.get("nosym2", {}).get("holds") is False:
                reasons.append("Gamma has no entry 1")
            if crit.get("swap_verification", {}).get("ok") is False:
                reasons.append("swap verification failed")
        if rep.criteria.get("bclos", {}).get("status") != "Certified":
            reasons.append("B-clos not certified")
        elif rep.criteria.get("nosymG", {}).get("failed_orbitals"):
            reasons.append(f"no NoSymG record for orbitals "
                           f"{rep.criteria['nosymG']['failed_orbitals']}")
        return run.finish("; ".join(reasons))
    return run.finish("")


def _swap_stage(run: _Run, orb, w, orb_source: str, route: str) -> None:
    t0 = time.perf_counter()
    F = build_swap_candidate(orb, w)
    res = _verify(F, orb, run.opts)
    dt = time.perf_counter() - t0
    run.rep.criteria["swap_verification"] = dict(res.to_dict(), route=route,
                                                 seconds=round(dt, 3))
    run.stage("swap_verification", "holds" if res.ok else "fails", route=route,
              exhaustive=res.exhaustive, checked=res.checked)
    if res.ok:
        scope = "all" if res.exhaustive else "a sample of"
        run.conclude(NO_QS, f"flip map built from a {route} witness, checked on {scope} "
                            f"{res.checked} basis pairs",
                     {"kind": "swap", "route": route, "orbitals": orb_source,
                      "witness": w.to_dict(),
                      "verification": {"exhaustive": res.exhaustive, "checked": res.checked}})
