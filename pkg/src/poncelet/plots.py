"""Matplotlib figures written next to the CSV reports."""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .core import CanonicalParabola, Circle  # noqa: E402
from .triangles import pedal_point  # noqa: E402


def _draw_scene(ax, circle: Circle, par: CanonicalParabola, span: float):
    th = np.linspace(0.0, 2.0 * math.pi, 256)
    ax.plot(circle.center.x + circle.radius * np.cos(th),
            circle.center.y + circle.radius * np.sin(th),
            color="black", lw=1.0)
    tmax = span / abs(par.p) + 1.5
    ts = np.linspace(-tmax, tmax, 512)
    ax.plot(par.p / 2.0 * (ts ** 2 - 1.0), par.p * ts, color="tab:blue", lw=1.0)


def loci_figure(path: str, what: str, rows: list[dict], circle: Circle,
                par: CanonicalParabola, analytic: dict) -> None:
    fig, ax = plt.subplots(figsize=(6, 6))
    xs = [r["x"] for r in rows]
    ys = [r["y"] for r in rows]
    span = max(2.5, max(abs(v) for v in xs + ys) if xs else 2.5)
    _draw_scene(ax, circle, par, span)
    ax.plot(xs, ys, ".", ms=2.5, color="tab:red", label=f"sampled {what}")
    if "line_x" in analytic:
        ax.axvline(analytic["line_x"], color="tab:green", lw=1.0, ls="--",
                   label=f"x = {analytic['line_x']:.6g}")
    if analytic.get("pedal"):
        ts = np.linspace(-6.0, 6.0, 800)
        pts = [pedal_point(t, circle.center, par.p) for t in ts]
        ax.plot([q.x for q in pts], [q.y for q in pts], color="tab:green",
                lw=1.0, ls="--", label="pedal curve")
    ax.set_aspect("equal")
    ax.set_xlim(-span, span)
    ax.set_ylim(-span, span)
    ax.legend(loc="upper right", fontsize=8)
    ax.set_title(f"{what} locus")
    fig.savefig(path, dpi=120)
    plt.close(fig)


def sweep_figure(path: str, rows: list[dict], n: int) -> None:
    varying = [k for k in ("ex", "ey", "p")
               if len({r[k] for r in rows}) > 1]
    ok = [r for r in rows if r["status"] == "ok"]
    fig, ax = plt.subplots(figsize=(7, 5))
    if len(varying) == 1 and ok:
        k = varying[0]
        xs = [r[k] for r in ok]
        ys = [max(r["residual"], 1e-17) for r in ok]
        ax.semilogy(xs, ys, "-", lw=0.8, color="tab:blue")
        ax.set_xlabel(k)
        ax.set_ylabel(f"{n}-step closure residual")
    elif len(varying) >= 2 and ok:
        kx, ky = varying[0], varying[1]
        xs = sorted({r[kx] for r in ok})
        ys = sorted({r[ky] for r in ok})
        grid = np.full((len(ys), len(xs)), np.nan)
        ix = {v: i for i, v in enumerate(xs)}
        iy = {v: i for i, v in enumerate(ys)}
        for r in ok:
            grid[iy[r[ky]], ix[r[kx]]] = math.log10(max(r["residual"], 1e-17))
        pcm = ax.pcolormesh(xs, ys, grid, shading="nearest", cmap="viridis")
        fig.colorbar(pcm, ax=ax, label="log10 residual")
        ax.set_xlabel(kx)
        ax.set_ylabel(ky)
    ax.set_title(f"closure residual sweep (n={n})")
    fig.savefig(path, dpi=120)
    plt.close(fig)
