"""PNG figures: the Gamma matrix as a heatmap and the orbital label matrix."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .orbital_algebra import GammaMatrix  # noqa: E402
from .symmetry import OrbitalStructure  # noqa: E402


def _slug(name: str) -> str:
    keep = [c if c.isalnum() else "_" for c in name]
    return "".join(keep).strip("_") or "graph"


def plot_gamma(gam: GammaMatrix, path: str | Path, title: str = "") -> Path:
    beta = np.array(gam.beta, dtype=int)
    r = gam.r
    fig, ax = plt.subplots(figsize=(1.0 + 0.6 * r, 0.8 + 0.6 * r))
    im = ax.imshow(beta, cmap="viridis", vmin=0)
    for a in range(r):
        for b in range(r):
            v = beta[a, b]
            # singleton entries are the ones the criterion needs; mark them in red
            color = "red" if v == 1 else ("white" if v < beta.max() / 2 else "black")
            ax.text(b, a, str(v), ha="center", va="center", color=color,
                    fontweight="bold" if v == 1 else "normal")
    ax.set_xticks(range(r), [str(s) for s in range(1, r + 1)])
    ax.set_yticks(range(r), [str(s) for s in range(1, r + 1)])
    ax.set_xlabel("s2")
    ax.set_ylabel("s1")
    ax.set_title(title or "Gamma")
    fig.colorbar(im, ax=ax, fraction=0.046, pad=0.04)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_orbitals(orb: OrbitalStructure, path: str | Path, title: str = "") -> Path:
    """Pair (i, j) coloured by the orbital s with i in O_j^s."""
    n = orb.n
    fig, ax = plt.subplots(figsize=(2.0 + 0.12 * n, 1.6 + 0.12 * n))
    cmap = plt.get_cmap("tab20", orb.r + 1)
    im = ax.imshow(orb.labels, cmap=cmap, vmin=-0.5, vmax=orb.r + 0.5)
    if n <= 20:
        for i in range(n):
            for j in range(n):
                ax.text(j, i, str(int(orb.labels[i, j])), ha="center", va="center", fontsize=7)
    ax.set_xlabel("j")
    ax.set_ylabel("i")
    ax.set_title(title or "orbital labels")
    cb = fig.colorbar(im, ax=ax, ticks=range(orb.r + 1), fraction=0.046, pad=0.04)
    cb.set_label("s")
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def write_figures(outdir: str | Path, name: str, orb: OrbitalStructure | None = None,
                  gam: GammaMatrix | None = None) -> list[Path]:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    stem = _slug(name)
    written = []
    if gam is not None and gam.r > 0:
        written.append(plot_gamma(gam, outdir / f"{stem}_gamma.png", f"Gamma of {name}"))
    if orb is not None:
        written.append(plot_orbitals(orb, outdir / f"{stem}_orbitals.png", f"orbitals of {name}"))
    return written
