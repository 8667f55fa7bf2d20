"""Reference-based quality metrics: MSE, SNR, SI-SDR, and STOI.

STOI follows the standard short-time intelligibility pipeline: resample to
10 kHz, 256-sample Hann STFT at 50% overlap, 15 one-third-octave bands from
150 Hz, 30-frame temporal envelopes, clean-energy normalization with -15 dB
clipping, and the mean of the per-(band, frame) sample correlations.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .fourier import WindowKind, _fft_core, make_window, stft_frequencies
from .signal import Signal, resample


class MetricError(ValueError):
    """A metric could not be computed for these inputs (too short, silent...)."""


@dataclass(frozen=True)
class MetricScores:
    """Scores of one reconstruction, plus the decomposition wall time."""

    stoi: float | None
    si_sdr: float | None
    snr: float | None
    mse: float | None
    decomposition_time: float


def _as_pair(s, s_hat):
    s = np.asarray(s, dtype=np.float64)
    s_hat = np.asarray(s_hat, dtype=np.float64)
    if s.size != s_hat.size:
        raise ValueError(f"length mismatch: {s.size} vs {s_hat.size}")
    return s, s_hat


def mse(s, s_hat) -> float:
    """Mean squared error ||s - s_hat||^2 / n."""
    s, s_hat = _as_pair(s, s_hat)
    return float(np.mean((s - s_hat) ** 2))


def snr(s, s_hat) -> float:
    """10 log10(||s||^2 / ||s - s_hat||^2) in dB; +inf for identical inputs."""
    s, s_hat = _as_pair(s, s_hat)
    err = float(np.sum((s - s_hat) ** 2))
    if err == 0.0:
        return math.inf
    return 10.0 * math.log10(float(np.sum(s ** 2)) / err)


def si_sdr(s, s_hat) -> float:
    """Scale-invariant SDR: the reference is rescaled by
    alpha = (s . s_hat) / ||s||^2 so the residual is orthogonal to it, then
    10 log10(||alpha s||^2 / ||alpha s - s_hat||^2).

    Returns +inf when s_hat is exactly a rescaled s, -inf when s_hat is
    orthogonal to s (alpha = 0).
    """
    s, s_hat = _as_pair(s, s_hat)
    # same reduction for numerator and denominator so alpha is exactly 1.0
    # (and the +inf sentinel fires) when s_hat is s
    energy = float(np.dot(s, s))
    if energy == 0.0:
        raise ValueError("si_sdr reference must be non-zero")
    alpha = float(np.dot(s, s_hat)) / energy
    if alpha == 0.0:
        return -math.inf
    target = alpha * s
    err = float(np.sum((target - s_hat) ** 2))
    if err == 0.0:
        return math.inf
    return 10.0 * math.log10(float(np.sum(target ** 2)) / err)


_STOI_RATE = 10_000
_STOI_WIN = 256
_STOI_HOP = 128
_STOI_BANDS = 15
_STOI_LOWEST_CENTER = 150.0
_STOI_FRAMES = 30                 # 384 ms at 10 kHz
_STOI_CLIP_DB = -15.0
_STOI_SILENCE_DB = 40.0


def _stoi_band_matrix() -> np.ndarray:
    """(bands x bins) membership matrix: DFT bins grouped into one-third-octave
    bands by center-frequency containment."""
    freqs = stft_frequencies(_STOI_WIN, _STOI_RATE)
    centers = _STOI_LOWEST_CENTER * 2.0 ** (np.arange(_STOI_BANDS) / 3.0)
    lo = centers * 2.0 ** (-1.0 / 6.0)
    hi = centers * 2.0 ** (1.0 / 6.0)
    return ((freqs[None, :] >= lo[:, None]) & (freqs[None, :] < hi[:, None])).astype(float)


def _frames_of(x: np.ndarray, window: np.ndarray) -> np.ndarray:
    n_frames = 1 + (x.size - _STOI_WIN) // _STOI_HOP
    view = np.lib.stride_tricks.sliding_window_view(x, _STOI_WIN)[::_STOI_HOP][:n_frames]
    return view * window


def stoi(s, s_hat, rate: int) -> float:
    """Short-time objective intelligibility of s_hat against clean s, in [0, 1].

    Frames more than 40 dB below the clean signal's loudest frame are dropped
    from both signals before envelope formation; degraded envelopes are
    normalized to the clean envelope energy and clipped at -15 dB relative.
    Zero-variance envelope pairs contribute a correlation of 0.
    """
    s, s_hat = _as_pair(s, s_hat)
    clean = resample(Signal(s, rate), _STOI_RATE).samples
    degraded = resample(Signal(s_hat, rate), _STOI_RATE).samples
    if clean.size < _STOI_WIN:
        raise MetricError("signals too short for STOI (need at least 384 ms)")
    if not np.any(clean):
        raise MetricError("clean signal is silent")

    window = make_window(WindowKind.HANN, _STOI_WIN)
    frames_c = _frames_of(clean, window)
    frames_d = _frames_of(degraded, window)
    energy = np.sum(frames_c ** 2, axis=1)
    keep = energy > energy.max() * 10.0 ** (-_STOI_SILENCE_DB / 10.0)
    frames_c = frames_c[keep]
    frames_d = frames_d[keep]
    if frames_c.shape[0] < _STOI_FRAMES:
        raise MetricError(
            f"fewer than {_STOI_FRAMES} frames remain after silent-frame removal")

    spec_c = np.abs(_fft_core(frames_c.astype(np.complex128), -1.0)[:, :_STOI_WIN // 2 + 1])
    spec_d = np.abs(_fft_core(frames_d.astype(np.complex128), -1.0)[:, :_STOI_WIN // 2 + 1])
    bands = _stoi_band_matrix()
    env_c = np.sqrt(bands @ (spec_c.T ** 2))   # (bands x frames)
    env_d = np.sqrt(bands @ (spec_d.T ** 2))

    n_frames = env_c.shape[1]
    clip_gain = 1.0 + 10.0 ** (-_STOI_CLIP_DB / 20.0)
    correlations = []
    for m in range(_STOI_FRAMES - 1, n_frames):
        x = env_c[:, m - _STOI_FRAMES + 1: m + 1]
        y = env_d[:, m - _STOI_FRAMES + 1: m + 1]
        norm_x = np.linalg.norm(x, axis=1, keepdims=True)
        norm_y = np.linalg.norm(y, axis=1, keepdims=True)
        scale = norm_x / np.where(norm_y == 0.0, 1.0, norm_y)
        y = np.minimum(y * scale, clip_gain * x)
        xc = x - x.mean(axis=1, keepdims=True)
        yc = y - y.mean(axis=1, keepdims=True)
        denom = np.linalg.norm(xc, axis=1) * np.linalg.norm(yc, axis=1)
        num = np.sum(xc * yc, axis=1)
        correlations.append(np.where(denom == 0.0, 0.0, num / np.where(denom == 0.0, 1.0, denom)))
    return float(np.mean(correlations))
