"""Aligned plain-text tables for orbitals, Gamma, enumerations and reports."""

from __future__ import annotations

from ..orbital_algebra import GammaMatrix
from ..symmetry import OrbitalStructure


def render_table(headers: list[str], rows: list[list], sep: str = "  ") -> str:
    cells = [[str(h) for h in headers]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[c]) for r in cells) for c in range(len(headers))]
    lines = []
    for idx, row in enumerate(cells):
        lines.append(sep.join(v.ljust(w) for v, w in zip(row, widths)).rstrip())
        if idx == 0:
            lines.append(sep.join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def format_set(xs) -> str:
    return "{" + ",".join(map(str, xs)) + "}"


def orbital_rows(orb: OrbitalStructure, translate: bool = False) -> list[list[tuple[int, ...]]]:
    """Rows O_i^1..O_i^r. ``translate`` lists O_i^s as i + (sorted O_0^s) mod n."""
    if not translate:
        return orb.table()
    base = [orb.O(0, s) for s in range(1, orb.r + 1)]
    return [[tuple((i + x) % orb.n for x in cell) for cell in base] for i in range(orb.n)]


def render_orbitals(orb: OrbitalStructure, translate: bool = False) -> str:
    headers = ["i"] + [f"O_i^{s}" for s in range(1, orb.r + 1)]
    rows = [[i] + [format_set(c) for c in row]
            for i, row in enumerate(orbital_rows(orb, translate))]
    return render_table(headers, rows)


def render_gamma(gam: GammaMatrix) -> str:
    headers = ["s1\\s2"] + [str(s) for s in range(1, gam.r + 1)]
    rows = [[s1 + 1] + row for s1, row in enumerate(gam.beta)]
    return render_table(headers, rows)


def render_enumeration(datas) -> str:
    from .enumeration import spec_string

    rows = [[d.p, d.type_k, d.r, spec_string(d.symbol_set, d.p), format_set(d.E.elements)]
            for d in datas]
    return render_table(["p", "k", "r", "graph", "E"], rows)


def render_report(rep) -> str:
    """Human summary of an AnalysisReport."""
    g = rep.graph
    lines = [f"graph      {g['label']}  (n={g['n']}, digest {g['digest']})"]
    if rep.circulant:
        c = rep.circulant
        lines.append(f"type       k={c['k']}, r={c['r']}, E={format_set(c['E'])}")
    if rep.aut_order:
        lines.append(f"|Aut|      {rep.aut_order['order']} ({rep.aut_order['source']})")
    lines.append("")
    rows = [[st["stage"], st["status"],
             ", ".join(f"{k}={v}" for k, v in st.items() if k not in ("stage", "status"))]
            for st in rep.stages]
    lines.append(render_table(["stage", "status", "detail"], rows).rstrip())
    if rep.gamma:
        lines.append("")
        lines.append("Gamma")
        lines.append(render_gamma(GammaMatrix(rep.gamma["beta"],
                                              tuple(rep.gamma["base_pair"]))).rstrip())
    lines.append("")
    v = rep.verdict
    lines.append(f"verdict    {v.kind}" + (f": {v.reason}" if v.reason else ""))
    return "\n".join(lines) + "\n"


def render_reproduction(rep) -> str:
    rows = []
    for it in rep.items:
        detail = "" if it.status == "MATCH" else f"expected {it.expected}, got {it.actual}"
        if it.note:
            detail = it.note
        rows.append([it.status, it.group, it.label, detail])
    c = rep.counts()
    tail = f"\n{c['MATCH']} match, {c['MISMATCH']} mismatch, {c['NOTE']} note\n"
    return render_table(["status", "group", "item", "detail"], rows) + tail
