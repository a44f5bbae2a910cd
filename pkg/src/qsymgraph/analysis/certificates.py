"""Serialized certificates and their search-free replay."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import QSymError, WitnessError
from ..graphs import Graph, cyclic_shift_is_automorphism, from_edge_list
from ..intertwiners.hand_constructions import verify_paper_c13, verify_paper_c17
from ..intertwiners.swap import SwapWitness, build_swap_candidate, sample_pairs, verify_swap
from ..residue_groups import borne_bound, circulant_type_data, is_prime, is_two_maximal
from ..symmetry import DEFAULT_AUT_CAP, circulant_orbitals, orbitals
from .pipeline import HAS_QS, NO_QS


@dataclass
class ReplayResult:
    ok: bool
    verdict: str | None
    kind: str | None
    messages: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"ok": self.ok, "verdict": self.verdict, "kind": self.kind,
                "messages": self.messages}


def graph_from_certificate(cert: dict) -> Graph:
    gd = cert["graph"]
    g = from_edge_list(int(gd["n"]), [tuple(e) for e in gd["edges"]], name=gd.get("label"))
    if "digest" in gd and g.digest() != gd["digest"]:
        raise WitnessError("graph digest does not match its edge list")
    return g


def save_certificate(cert: dict, path: str | Path) -> None:
    Path(path).write_text(json.dumps(cert, indent=2, sort_keys=True) + "\n")


def load_certificate(path: str | Path) -> dict:
    data = json.loads(Path(path).read_text())
    if "certificate" in data and "kind" not in data:
        data = data["certificate"]
    if not isinstance(data, dict) or "kind" not in data:
        raise QSymError(f"{path}: no certificate found")
    return data


def replay(cert: dict, full_verify: bool = False, aut_cap: int = DEFAULT_AUT_CAP) -> ReplayResult:
    """Re-check a certificate. No witness search and no criterion search is run."""
    kind = cert.get("kind")
    claimed = (cert.get("verdict") or {}).get("kind")
    out = ReplayResult(False, None, kind)
    try:
        g = graph_from_certificate(cert)
    except (QSymError, KeyError, TypeError, ValueError) as exc:
        out.messages.append(f"unreadable graph: {exc}")
        return out
    n = g.n

    if kind == "small":
        out.ok = n <= 3
        out.verdict = NO_QS if out.ok else None
    elif kind == "trivial":
        which = cert.get("which")
        out.ok = n >= 4 and ((which == "complete" and g.is_complete())
                             or (which == "empty" and g.is_empty()))
        out.verdict = HAS_QS if out.ok else None
    elif kind in ("bound", "two-maximal"):
        if not (is_prime(n) and cyclic_shift_is_automorphism(g)):
            out.messages.append("not a circulant graph of prime order")
            return out
        data = circulant_type_data(g.neighbors(0), n)
        if kind == "bound":
            bound = int(cert["bound"])
            if bound < borne_bound(data.type_k):
                out.messages.append(f"bound {bound} is below 6^phi(k)")
                return out
            out.ok = n > bound
        else:
            out.ok = list(data.E.elements) == cert.get("E") and n >= 5 and is_two_maximal(data.E)
        out.verdict = NO_QS if out.ok else None
    elif kind == "swap":
        if cert.get("orbitals") == "circulant":
            if not (is_prime(n) and cyclic_shift_is_automorphism(g)):
                out.messages.append("certificate says circulant, graph is not a circulant p-graph")
                return out
            orb = circulant_orbitals(circulant_type_data(g.neighbors(0), n))
        else:
            orb = orbitals(g, aut_cap)
        w = SwapWitness.from_dict(cert["witness"])
        try:
            F = build_swap_candidate(orb, w)
        except WitnessError as exc:
            out.messages.append(f"witness rejected: {exc}")
            return out
        exhaustive = full_verify or cert.get("verification", {}).get("exhaustive", True)
        res = verify_swap(F) if exhaustive else verify_swap(F, pairs=sample_pairs(orb))
        out.messages.append(f"flip checked on {res.checked} of {res.total} pairs")
        out.ok = res.ok
        out.verdict = NO_QS if res.ok else None
    elif kind == "scripted":
        which = cert.get("construction")
        runner = {"C13(3,4)": verify_paper_c13, "C17(2,4,8)": verify_paper_c17}.get(which)
        if runner is None:
            out.messages.append(f"unknown construction {which!r}")
            return out
        expected_graph = {"C13(3,4)": (13, 6), "C17(2,4,8)": (17, 8)}[which]
        if not (n == expected_graph[0] and cyclic_shift_is_automorphism(g)
                and circulant_type_data(g.neighbors(0), n).type_k == expected_graph[1]
                and len(g.neighbors(0)) == expected_graph[1]):
            out.messages.append(f"graph is not {which}")
            return out
        tr = runner()
        out.ok = tr.ok
        out.verdict = NO_QS if tr.ok else None
        fail = tr.first_failure()
        if fail:
            out.messages.append(f"first failing check: {fail.label}")
    else:
        out.messages.append(f"unknown certificate kind {kind!r}")
        return out

    if out.ok and claimed and claimed != out.verdict:
        out.ok = False
        out.messages.append(f"certificate claims {claimed}, replay gives {out.verdict}")
    return out
