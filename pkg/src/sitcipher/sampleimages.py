"""Deterministic synthetic grayscale scenes for the evaluation pipeline.

The classic photographic test rasters (Lena, baboon, cameraman, panda)
cannot be redistributed with this repository, so the pipeline ships
seeded synthetic scenes instead.  Each profile is calibrated, at the
default 256x256 size, to reproduce the reference statistics of its
namesake: the intensity entropy is matched exactly (the histogram is
constructed, then imposed by rank), and the horizontal adjacent-pixel
correlation is matched by tuning the smoothness of the underlying
random field.  Generation is fully deterministic per profile.
"""

import math
from dataclasses import dataclass

import numpy as np

from .pgm import GrayImage, write_pgm


@dataclass(frozen=True)
class SceneProfile:
    name: str
    seed: int
    smoothness: float      # AR(1) coefficient of the base field, both axes
    grain: float           # white-noise level layered on the unit-variance field
    peaks: tuple           # (weight, center, width) bumps of the intensity histogram
    floor: float           # uniform component of the histogram
    entropy_bits: float    # target intensity entropy, matched exactly
    adjacent_correlation: float  # reference horizontal neighbor correlation


PROFILES = {
    "lena": SceneProfile(
        name="lena", seed=2025, smoothness=0.9738, grain=0.03,
        peaks=((1.0, 100.0, 35.0), (0.8, 170.0, 30.0)), floor=0.05,
        entropy_bits=7.4504, adjacent_correlation=0.9744,
    ),
    "baboon": SceneProfile(
        name="baboon", seed=2026, smoothness=0.9035, grain=0.31,
        peaks=((1.0, 128.0, 45.0),), floor=0.04,
        entropy_bits=7.2316, adjacent_correlation=0.8198,
    ),
    "cameraman": SceneProfile(
        name="cameraman", seed=2027, smoothness=0.9905, grain=0.02,
        peaks=((1.0, 15.0, 12.0), (0.9, 160.0, 40.0)), floor=0.02,
        entropy_bits=7.0097, adjacent_correlation=0.9565,
    ),
    "panda": SceneProfile(
        name="panda", seed=2028, smoothness=0.9925, grain=0.015,
        peaks=((1.0, 60.0, 40.0), (1.0, 190.0, 35.0)), floor=0.05,
        entropy_bits=7.4938, adjacent_correlation=0.9811,
    ),
}


def _correlated_field(rng: np.random.Generator, size: int,
                      smoothness: float, grain: float) -> np.ndarray:
    """Unit-variance field with AR(1) structure along rows and columns."""
    a = smoothness
    innovation = math.sqrt(1.0 - a * a)
    g = rng.standard_normal((size, size))
    x = np.empty_like(g)
    x[:, 0] = g[:, 0]
    for j in range(1, size):
        x[:, j] = a * x[:, j - 1] + innovation * g[:, j]
    y = np.empty_like(x)
    y[0] = x[0]
    for i in range(1, size):
        y[i] = a * y[i - 1] + innovation * x[i]
    if grain:
        y = y + grain * rng.standard_normal((size, size))
    return y


def _entropy_bits(p: np.ndarray) -> float:
    nz = p[p > 0]
    return float(-(nz * np.log2(nz)).sum())


def _entropy_matched_counts(total: int, peaks, floor: float,
                            target: float) -> np.ndarray:
    """Integer histogram over 256 bins whose empirical entropy hits ``target``.

    The peak mixture fixes the histogram's shape; a power tilt (sharper or
    flatter) is bisected until the entropy matches, then the distribution
    is rounded to exact integer counts summing to ``total``.
    """
    x = np.arange(256, dtype=np.float64)
    base = np.full(256, floor)
    for weight, center, width in peaks:
        base += weight * np.exp(-0.5 * ((x - center) / width) ** 2)
    base /= base.sum()
    lo, hi = 0.05, 20.0
    for _ in range(60):
        tilt = 0.5 * (lo + hi)
        p = base ** tilt
        p /= p.sum()
        if _entropy_bits(p) > target:
            lo = tilt
        else:
            hi = tilt
    p = base ** (0.5 * (lo + hi))
    p /= p.sum()
    counts = np.floor(p * total).astype(np.int64)
    # hand the leftover pixels to the bins that lost most to the floor
    order = np.argsort(counts - p * total, kind="stable")
    counts[order[:total - counts.sum()]] += 1
    return counts


def _rank_assign(field: np.ndarray, counts: np.ndarray) -> np.ndarray:
    """Impose the histogram on the field by rank: darkest field, lowest level."""
    order = np.argsort(field, axis=None, kind="stable")
    levels = np.repeat(np.arange(256, dtype=np.uint8), counts)
    flat = np.empty(field.size, dtype=np.uint8)
    flat[order] = levels
    return flat


def synthesize(name: str, size: int = 256) -> GrayImage:
    """Deterministic synthetic scene for one of the profiles in PROFILES."""
    if name not in PROFILES:
        raise ValueError(f"unknown profile {name!r}; choose from {sorted(PROFILES)}")
    if size < 2:
        raise ValueError("size must be at least 2")
    profile = PROFILES[name]
    rng = np.random.default_rng(profile.seed)
    field = _correlated_field(rng, size, profile.smoothness, profile.grain)
    counts = _entropy_matched_counts(size * size, profile.peaks, profile.floor,
                                     profile.entropy_bits)
    return GrayImage(size, size, _rank_assign(field, counts).tobytes())


def _main(argv=None) -> None:
    import argparse

    parser = argparse.ArgumentParser(
        description="Write a synthetic grayscale test scene as a PGM file.")
    parser.add_argument("profile", choices=sorted(PROFILES))
    parser.add_argument("output", help="output PGM path")
    parser.add_argument("--size", type=int, default=256)
    args = parser.parse_args(argv)
    with open(args.output, "wb") as fh:
        fh.write(write_pgm(synthesize(args.profile, args.size)))


if __name__ == "__main__":
    _main()
