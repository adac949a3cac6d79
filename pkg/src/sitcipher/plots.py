"""Matplotlib rendering of analysis results.

These figures are written by the CLI next to the CSV/JSON data; the
analysis module itself stays plot-free.  Scatter sampling uses a fixed
stride so figures are deterministic.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .analysis import AvalancheReport
from .pgm import GrayImage


def save_histogram_comparison(original_counts, encrypted_counts, path) -> None:
    """Side-by-side intensity histograms of the original and encrypted image."""
    fig, axes = plt.subplots(1, 2, figsize=(10, 4), sharey=True)
    for ax, counts, title, color in (
            (axes[0], original_counts, "Original", "tab:blue"),
            (axes[1], encrypted_counts, "Encrypted", "tab:red")):
        ax.bar(np.arange(256), np.asarray(counts), width=1.0, color=color)
        ax.set_title(title)
        ax.set_xlabel("Intensity")
        ax.set_xlim(-1, 256)
    axes[0].set_ylabel("Pixel count")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def _adjacent_pairs(img: GrayImage, max_points: int):
    arr = np.frombuffer(img.pixels, np.uint8).reshape(img.height, img.width)
    x = arr[:, :-1].ravel()
    y = arr[:, 1:].ravel()
    stride = max(1, len(x) // max_points)
    return x[::stride], y[::stride]


def save_correlation_scatter(original: GrayImage, encrypted: GrayImage,
                             path, max_points: int = 4096) -> None:
    """Adjacent-pixel scatter plots showing correlation before/after encryption."""
    fig, axes = plt.subplots(1, 2, figsize=(9, 4.5))
    for ax, img, title, color in (
            (axes[0], original, "Original", "tab:blue"),
            (axes[1], encrypted, "Encrypted", "tab:red")):
        x, y = _adjacent_pairs(img, max_points)
        ax.scatter(x, y, s=2, alpha=0.4, color=color, linewidths=0)
        ax.set_title(title)
        ax.set_xlabel("Pixel value")
        ax.set_ylabel("Right neighbor value")
        ax.set_xlim(0, 255)
        ax.set_ylim(0, 255)
        ax.set_aspect("equal")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def save_avalanche_summary(report: AvalancheReport, path) -> None:
    """Distribution of per-trial flip fractions plus per-bit flip rates."""
    fractions = [row[2] for row in report.per_trial]
    fig, (left, right) = plt.subplots(1, 2, figsize=(10, 4))

    left.hist(fractions, bins=np.arange(0, 65) / 64, color="tab:blue")
    left.axvline(report.mean_flip_fraction, color="tab:red",
                 label=f"mean = {report.mean_flip_fraction:.4f}")
    left.axvline(0.5, color="black", linestyle="--", label="ideal 0.5")
    left.set_xlabel("Fraction of ciphertext bits flipped")
    left.set_ylabel("Trials")
    left.set_title(f"One-bit {report.target} change, {report.trials} trials")
    left.legend()

    right.bar(np.arange(64), report.per_bit_flip_fraction, width=1.0,
              color="tab:blue")
    right.axhline(0.5, color="black", linestyle="--")
    right.set_xlabel("Ciphertext bit (0 = MSB)")
    right.set_ylabel("Flip rate")
    right.set_ylim(0, 1)
    right.set_title("Per-bit flip rate")

    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
