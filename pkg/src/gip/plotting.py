"""Figure rendering for census reports.

Figures are written straight to files next to the delimited output; no
interactive backend is ever touched.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)


def _prepare(path: str | Path) -> Path:
    out = Path(path)
    if out.parent and not out.parent.exists():
        out.parent.mkdir(parents=True, exist_ok=True)
    return out


def save_identity_counts(
    path: str | Path, counts: Sequence[tuple[int, int]], title: str
) -> Path:
    """Bar chart of identities per degree."""
    out = _prepare(path)
    fig, ax = plt.subplots(figsize=(6.0, 3.6))
    degrees = [k for k, _ in counts]
    values = [c for _, c in counts]
    ax.bar(degrees, values, color="#4878cf")
    ax.set_xlabel("degree")
    ax.set_ylabel("identities")
    ax.set_title(title)
    ax.set_xticks(degrees)
    ax.spines["right"].set_visible(False)
    ax.spines["top"].set_visible(False)
    fig.tight_layout()
    fig.savefig(out, dpi=150)
    plt.close(fig)
    return out


def save_conjecture_counts(
    path: str | Path,
    identity_counts: Sequence[tuple[int, int]],
    confirmed_counts: Sequence[tuple[int, int]],
    checked_level: int,
    title: str,
) -> Path:
    """Identities per degree with the confirmed portion overlaid for the
    degrees above the generating level."""
    out = _prepare(path)
    fig, ax = plt.subplots(figsize=(6.4, 3.6))
    degrees = [k for k, _ in identity_counts]
    totals = [c for _, c in identity_counts]
    confirmed = dict(confirmed_counts)
    ax.bar(degrees, totals, color="#c8c8c8", label="identities")
    checked = [k for k in degrees if k in confirmed]
    ax.bar(checked, [confirmed[k] for k in checked], color="#4878cf",
           label=f"confirmed from degree <= {checked_level}")
    ax.set_xlabel("degree")
    ax.set_ylabel("monomial identities")
    ax.set_title(title)
    ax.set_xticks(degrees)
    ax.legend(frameon=False, fontsize=8)
    ax.spines["right"].set_visible(False)
    ax.spines["top"].set_visible(False)
    fig.tight_layout()
    fig.savefig(out, dpi=150)
    plt.close(fig)
    return out
