"""Matplotlib figures written next to the CLI's tabular output."""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

STYLE = {
    "font.size": 9,
    "axes.labelsize": 9,
    "axes.titlesize": 9,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "figure.dpi": 100,
    "savefig.bbox": "tight",
}

# keep PNG bytes stable between runs
_META = {"Software": None}


def _save(fig, path) -> None:
    fig.savefig(path, metadata=_META)
    plt.close(fig)


def _central_slice(a: np.ndarray) -> np.ndarray:
    while a.ndim > 2:
        a = a[a.shape[0] // 2]
    return a


def plot_props(results, path) -> None:
    """Bar chart of log10 residuals against their tolerances."""
    rows = [r for r in results if r.status != "SKIP"]
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(6.0, 0.22 * max(len(rows), 4) + 1.0))
        y = np.arange(len(rows))
        vals = [math.log10(max(r.value, 1e-18)) for r in rows]
        tols = [math.log10(r.tolerance) for r in rows]
        colors = ["tab:green" if r.status == "PASS" else "tab:red" for r in rows]
        ax.barh(y, [v + 18 for v in vals], left=-18, color=colors, height=0.6)
        ax.scatter(tols, y, marker="|", color="k", s=80, label="tolerance")
        ax.set_yticks(y, [r.name for r in rows])
        ax.invert_yaxis()
        ax.set_xlabel("log10 value")
        ax.legend(loc="lower right")
        _save(fig, path)


def plot_spectrum(magnitude: np.ndarray, path) -> None:
    """Log magnitude of the scalar-component spectrum, DC centred."""
    mag = np.fft.fftshift(_central_slice(np.asarray(magnitude)))
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(4.0, 3.2))
        logm = np.log10(mag + 1e-16)
        if logm.ndim == 1:
            k = np.arange(len(logm)) - len(logm) // 2
            ax.plot(k, logm, lw=1)
            ax.set_xlabel("bin")
            ax.set_ylabel("log10 |F|")
        else:
            im = ax.imshow(logm, cmap="viridis", origin="lower")
            fig.colorbar(im, ax=ax, label="log10 |F|")
        _save(fig, path)


def plot_features(features, path) -> None:
    """Amplitude, phase and orientation angle panels."""
    amp = _central_slice(features.amplitude)
    phase = _central_slice(features.phase)
    angle = _central_slice(np.where(features.defined, features.orientation_angle, np.nan))
    with plt.rc_context(STYLE):
        fig, axes = plt.subplots(1, 3, figsize=(9.0, 2.8))
        panels = (("amplitude", amp, "gray"), ("phase", phase, "twilight"), ("orientation", angle, "hsv"))
        for ax, (title, data, cmap) in zip(axes, panels):
            ax.set_title(title)
            if data.ndim == 1:
                ax.plot(data, lw=1)
            else:
                im = ax.imshow(data, cmap=cmap, origin="lower")
                fig.colorbar(im, ax=ax, shrink=0.8)
        _save(fig, path)
