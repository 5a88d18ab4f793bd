"""Matplotlib figures written next to the delimited output of the CLI."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "binetfib"

import matplotlib.pyplot as plt  # noqa: E402

from .curve import area_limit  # noqa: E402

FIG_WIDTH = 7.0


# timestamps dropped so repeated renders are byte-identical
_METADATA = {
    "png": {"Software": None},
    "svg": {"Date": None},
    "pdf": {"CreationDate": None, "ModDate": None},
}


def _finish(fig, path):
    fig.tight_layout()
    ext = str(path).rsplit(".", 1)[-1].lower()
    fig.savefig(path, metadata=_METADATA.get(ext))
    plt.close(fig)


def plot_curve(points, path, crossings=(), title="Binet-Fibonacci curve"):
    xs = [float(p.x) for p in points]
    ys = [float(p.y) for p in points]
    fig, ax = plt.subplots(figsize=(FIG_WIDTH, FIG_WIDTH * 0.62))
    ax.axhline(0.0, color="0.6", lw=0.8)
    ax.axvline(0.0, color="0.6", lw=0.8)
    ax.plot(xs, ys, lw=1.2)
    if crossings:
        ax.plot([float(c.x) for c in crossings], [float(c.y) for c in crossings],
                "o", ms=3, color="tab:red")
    ax.set_xlabel("Re F_t")
    ax.set_ylabel("Im F_t")
    ax.set_title(title)
    _finish(fig, path)


def plot_areas(segments, path):
    ns = [s.n for s in segments]
    fig, ax = plt.subplots(figsize=(FIG_WIDTH, FIG_WIDTH * 0.62))
    ax.bar(ns, [float(s.closed_form) for s in segments], color="tab:blue",
           label="closed form")
    ax.plot(ns, [float(s.quadrature) for s in segments], "k.", label="Simpson")
    lim = float(area_limit())
    for y in (lim, -lim):
        ax.axhline(y, color="tab:red", ls="--", lw=0.8)
    ax.set_xlabel("segment n")
    ax.set_ylabel("A_{n,n+1}")
    ax.legend()
    _finish(fig, path)


def plot_curvature(samples, path):
    fig, ax = plt.subplots(figsize=(FIG_WIDTH, FIG_WIDTH * 0.62))
    ax.plot([float(s.t) for s in samples], [float(s.kappa) for s in samples], lw=1.0)
    ax.axhline(0.0, color="0.6", lw=0.8)
    ax.set_yscale("symlog", linthresh=1e-6)
    ax.set_xlabel("t")
    ax.set_ylabel("signed curvature")
    _finish(fig, path)
