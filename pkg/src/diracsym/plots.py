"""Render the standard report figures from artifact tables."""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402


def _cols(art):
    data = np.array([[float(v) for v in row] for row in art.rows])
    return {name: data[:, i] for i, name in enumerate(art.header)}


def render_artifact(art, out_dir: str):
    """Draw the figure matching the artifact kind; returns the file path."""
    path = os.path.join(out_dir, f"{art.name}.png")
    fig, ax = plt.subplots(figsize=(5.2, 3.6), dpi=130)
    c = _cols(art)

    if art.kind == "trajectory":
        ax.plot(c["x1"], c["x2"], lw=1.0)
        ax.set_xlabel("x1")
        ax.set_ylabel("x2")
        ax.set_title("orbit projection")
    elif art.kind == "kappa":
        for key in ("k1", "k2", "k3"):
            ax.plot(c["t"], c[key], lw=1.0, label=key)
        ax.plot(c["t"], c["knorm"], "k--", lw=0.8, label="|k|")
        ax.set_xlabel("t")
        ax.legend(fontsize=7, ncol=4)
        ax.set_title("moment-vector precession")
    elif art.kind == "spin":
        ax.plot(c["speed"], c["parallel"], label="parallel")
        ax.plot(c["speed"], c["perpendicular"], label="perpendicular")
        ax.set_xlabel("speed")
        ax.set_ylabel("component")
        ax.legend(fontsize=8)
        ax.set_title("spin-vector shortening")
    elif art.kind == "shift":
        ts = np.unique(c["t"])
        xis = np.unique(c["xi1"])
        key = "electron_shift" if "electron_shift" in c else "positron_shift"
        grid = c[key].reshape(ts.size, xis.size)
        im = ax.pcolormesh(xis, ts, grid, shading="auto", cmap="RdBu_r")
        fig.colorbar(im, ax=ax, label=key)
        ax.set_xlabel("xi1")
        ax.set_ylabel("t")
        ax.set_title("momentum-shift symbol")
    elif art.kind == "compton":
        ax.plot(c["angle"], c["two_theta"], label="shift-wave speed")
        ax.plot(c["angle"], c["one_minus_cos"], "--", label="1 - cos(angle)")
        ax.set_xlabel("scattering angle")
        ax.legend(fontsize=8)
        ax.set_title("direction dependence of the shift")
    elif art.kind == "decay":
        ax.loglog(c["bracket"], np.maximum(c["weighted_residual"], 1e-300), "o-", ms=3)
        ax.set_xlabel("<xi>")
        ax.set_ylabel("weighted residual")
        ax.set_title("projection-symbol decay")
    else:
        cols = art.header
        for name in cols[1:]:
            ax.plot(c[cols[0]], c[name], label=name)
        ax.set_xlabel(cols[0])
        ax.legend(fontsize=7)

    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def render_all(artifacts, out_dir: str) -> list:
    # plain tables are data-only; everything else gets a figure
    return [render_artifact(a, out_dir) for a in artifacts if a.kind != "table"]
