"""Statistical evaluation of the cipher.

Covers the avalanche / strict avalanche criterion, image entropy and
histograms, correlation coefficients, and the one-bit-wrong-key
sensitivity demonstration.  All randomness flows through a seeded NumPy
PCG64 generator so every report is reproducible from its seed; 64-bit
values are drawn as eight generator bytes interpreted big-endian.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import cipher, modes
from .pgm import GrayImage

BLOCK_BITS = 64

AVALANCHE_TARGETS = ("plaintext", "key")


@dataclass
class AvalancheReport:
    """Result of one avalanche run.

    ``per_trial`` rows are (trial, flipped_bit, hamming_fraction) with the
    flipped bit counted from the least significant end; entry i of
    ``per_bit_flip_fraction`` is the flip rate of ciphertext bit i counted
    from the most significant end.
    """

    target: str
    trials: int
    seed: int
    mean_flip_fraction: float
    per_bit_flip_fraction: list[float]
    per_trial: list[tuple[int, int, float]]


@dataclass
class CorrelationReport:
    """Correlation statistics for an original/encrypted image pair."""

    gamma_plain_cipher: float
    gamma_adjacent_original: float
    gamma_adjacent_encrypted: float


class KeySensitivityImages(NamedTuple):
    encrypted: GrayImage
    decrypted: GrayImage
    wrong_key: GrayImage


def _draw_u64(rng: np.random.Generator) -> int:
    return int.from_bytes(rng.bytes(8), "big")


def avalanche(trials: int, target: str, seed: int = 0) -> AvalancheReport:
    """Flip one random bit of ``target`` per trial and measure the change.

    Each trial draws a fresh key and plaintext, encrypts, flips one
    uniformly random bit of the key or the plaintext, re-encrypts, and
    records the fraction of ciphertext bits that changed.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if target not in AVALANCHE_TARGETS:
        raise ValueError(f"target must be one of {AVALANCHE_TARGETS}, got {target!r}")
    rng = np.random.default_rng(seed)
    position_flips = np.zeros(BLOCK_BITS)
    rows = []
    total = 0.0
    for trial in range(trials):
        key = _draw_u64(rng)
        plaintext = _draw_u64(rng)
        bit = int(rng.integers(BLOCK_BITS))
        keys = cipher.expand_key(key)
        base = cipher.encrypt_block(plaintext, keys)
        if target == "plaintext":
            other = cipher.encrypt_block(plaintext ^ 1 << bit, keys)
        else:
            other = cipher.encrypt_block(plaintext, cipher.expand_key(key ^ 1 << bit))
        diff = base ^ other
        position_flips += np.unpackbits(
            np.frombuffer(diff.to_bytes(8, "big"), np.uint8))
        fraction = bin(diff).count("1") / BLOCK_BITS
        rows.append((trial, bit, fraction))
        total += fraction
    return AvalancheReport(
        target=target,
        trials=trials,
        seed=seed,
        mean_flip_fraction=total / trials,
        per_bit_flip_fraction=(position_flips / trials).tolist(),
        per_trial=rows,
    )


def key_schedule_diffusion(trials: int, seed: int = 0) -> np.ndarray:
    """Hamming distances between round-key sets of keys one bit apart.

    Returns one distance per trial, out of the 80 round-key bits.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    rng = np.random.default_rng(seed)
    distances = np.empty(trials, dtype=np.int64)
    for trial in range(trials):
        key = _draw_u64(rng)
        bit = int(rng.integers(BLOCK_BITS))
        ka = cipher.expand_key(key)
        kb = cipher.expand_key(key ^ 1 << bit)
        distances[trial] = sum(bin(a ^ b).count("1") for a, b in zip(ka, kb))
    return distances


def _as_array(img: GrayImage) -> np.ndarray:
    return np.frombuffer(img.pixels, np.uint8).reshape(img.height, img.width)


def histogram(img: GrayImage) -> np.ndarray:
    """Per-intensity pixel counts (256 bins); always sums to width*height."""
    return np.bincount(np.frombuffer(img.pixels, np.uint8), minlength=256)


def entropy(img: GrayImage) -> float:
    """Shannon entropy of the intensity distribution, in bits (0..8)."""
    counts = histogram(img)
    p = counts[counts > 0] / counts.sum()
    return float(-(p * np.log2(p)).sum())


def chi_square_uniform(counts) -> float:
    """Chi-square statistic of bin counts against the uniform distribution."""
    counts = np.asarray(counts, dtype=np.float64)
    expected = counts.sum() / counts.size
    return float(((counts - expected) ** 2 / expected).sum())


def _vector(x, name: str) -> np.ndarray:
    arr = np.asarray(x, dtype=np.float64).ravel()
    if arr.size == 0:
        raise ValueError(f"{name} must be non-empty")
    return arr


def mean(x) -> float:
    """Arithmetic mean."""
    return float(_vector(x, "x").mean())


def variance(x) -> float:
    """Population variance, normalized by N."""
    return float(_vector(x, "x").var())


def covariance(x, y) -> float:
    """Population covariance, normalized by N."""
    xa = _vector(x, "x")
    ya = _vector(y, "y")
    if xa.size != ya.size:
        raise ValueError(f"length mismatch: {xa.size} vs {ya.size}")
    return float(((xa - xa.mean()) * (ya - ya.mean())).mean())


def correlation(x, y) -> float:
    """Correlation coefficient cov(x, y) / (sqrt(D(x)) * sqrt(D(y)))."""
    xa = _vector(x, "x")
    ya = _vector(y, "y")
    if xa.size != ya.size:
        raise ValueError(f"length mismatch: {xa.size} vs {ya.size}")
    dx = float(xa.var())
    dy = float(ya.var())
    if dx == 0.0 or dy == 0.0:
        raise ValueError("correlation is undefined for zero-variance input")
    cov = float(((xa - xa.mean()) * (ya - ya.mean())).mean())
    gamma = cov / (math.sqrt(dx) * math.sqrt(dy))
    return min(1.0, max(-1.0, gamma))


def adjacent_pixel_correlation(img: GrayImage) -> float:
    """Correlation over all horizontally adjacent pixel pairs of the image."""
    if img.width < 2:
        raise ValueError("image must be at least 2 pixels wide")
    arr = _as_array(img)
    return correlation(arr[:, :-1].ravel(), arr[:, 1:].ravel())


def image_correlation_suite(original: GrayImage, encrypted: GrayImage) -> CorrelationReport:
    """Plain-vs-cipher and within-image adjacent-pixel correlations."""
    if (original.width, original.height) != (encrypted.width, encrypted.height):
        raise ValueError("original and encrypted images must have equal dimensions")
    return CorrelationReport(
        gamma_plain_cipher=correlation(
            np.frombuffer(original.pixels, np.uint8),
            np.frombuffer(encrypted.pixels, np.uint8)),
        gamma_adjacent_original=adjacent_pixel_correlation(original),
        gamma_adjacent_encrypted=adjacent_pixel_correlation(encrypted),
    )


def bit_difference(a: bytes, b: bytes) -> float:
    """Fraction of differing bits between two equal-length byte strings."""
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    if not a:
        raise ValueError("byte strings must be non-empty")
    diff = int.from_bytes(a, "big") ^ int.from_bytes(b, "big")
    return bin(diff).count("1") / (8 * len(a))


def key_sensitivity_demo(img: GrayImage, kc: int, mode: str = modes.ECB,
                         nonce: int = 0) -> KeySensitivityImages:
    """Encrypt an image, then decrypt with the right key and a one-bit-off key.

    The wrong key flips the least significant key bit.  Correct-key
    decryption reproduces the input exactly; the wrong-key raster is shown
    without pad interpretation (a wrong key garbles the pad as well).
    """
    keys = cipher.expand_key(kc)
    wrong = cipher.expand_key(kc ^ 1)
    count = img.width * img.height
    if mode == modes.ECB:
        ciphertext = modes.ecb_encrypt(img.pixels, keys)
        decrypted = modes.ecb_decrypt(ciphertext, keys)
        wrong_pixels = modes.decrypt_blocks(ciphertext, wrong)[:count]
    elif mode == modes.CTR:
        ciphertext = modes.ctr_process(img.pixels, keys, nonce)
        decrypted = modes.ctr_process(ciphertext, keys, nonce)
        wrong_pixels = modes.ctr_process(ciphertext, wrong, nonce)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return KeySensitivityImages(
        encrypted=GrayImage(img.width, img.height, ciphertext[:count]),
        decrypted=GrayImage(img.width, img.height, decrypted),
        wrong_key=GrayImage(img.width, img.height, wrong_pixels),
    )


def avalanche_csv(report: AvalancheReport) -> str:
    """Per-trial rows as ``trial,flipped_bit,hamming_fraction`` CSV."""
    lines = ["trial,flipped_bit,hamming_fraction"]
    lines += [f"{t},{b},{f:.6f}" for t, b, f in report.per_trial]
    return "\n".join(lines) + "\n"


def histogram_csv(counts) -> str:
    """Per-bin rows as ``intensity,count`` CSV."""
    lines = ["intensity,count"]
    lines += [f"{i},{int(c)}" for i, c in enumerate(counts)]
    return "\n".join(lines) + "\n"
