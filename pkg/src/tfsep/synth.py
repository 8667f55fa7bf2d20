"""Synthetic speech-like audio for demos and benchmark corpora.

Not a vocoder: utterances are syllable trains of glottal-pulse-excited
formant resonances with per-speaker pitch and formant structure, shaped
noise bursts standing in for fricatives, and pauses. The spectro-temporal
sparsity is what matters here: it gives ideal-mask separation experiments
realistic behavior without shipping a speech dataset.
"""
from __future__ import annotations

from pathlib import Path

import numpy as np

from .signal import Signal


def _formant_response(rate: int, formants) -> np.ndarray:
    """Impulse response of the vocal-tract stand-in: damped sinusoids at the
    formant frequencies."""
    n = int(0.030 * rate)
    t = np.arange(n) / rate
    out = np.zeros(n)
    for fc, bw, amp in formants:
        out += amp * np.exp(-np.pi * bw * t) * np.sin(2 * np.pi * fc * t)
    return out


def _edge_envelope(n: int, rate: int, edge_s: float) -> np.ndarray:
    edge = max(4, int(edge_s * rate))
    env = np.ones(n)
    ramp = 0.5 - 0.5 * np.cos(np.pi * np.arange(min(edge, n)) / edge)
    env[:ramp.size] = ramp
    env[-ramp.size:] = ramp[::-1]
    return env


def _voiced_segment(n: int, rate: int, pitch: float, formants, rng) -> np.ndarray:
    """Source-filter synthesis: a jittered glottal impulse train driven through
    the formant resonators. The pulsed excitation matters: it gives the
    fine-grained temporal interleaving that real overlapped voices show."""
    pulses = np.zeros(n)
    pos = rng.uniform(0.0, rate / pitch)
    drift_rate = rng.uniform(1.5, 4.0)
    drift_phase = rng.uniform(0.0, 2 * np.pi)
    while pos < n:
        pulses[int(pos)] = 1.0 + 0.12 * rng.normal()   # shimmer
        f0 = pitch * (1.0 + 0.05 * np.sin(2 * np.pi * drift_rate * pos / rate + drift_phase))
        period = rate / f0 * (1.0 + 0.01 * rng.normal())  # jitter
        pos += max(8.0, period)
    # voiced speech carries a strong fundamental; without this resonance the
    # lowest third-octave bands would be noise-floor only
    resonances = ((pitch, 45.0, 0.55),) + tuple(formants)
    out = np.convolve(pulses, _formant_response(rate, resonances))[:n]
    out += 0.002 * rng.normal(size=n)  # aspiration
    env = _edge_envelope(n, rate, 0.02)
    t = np.arange(n) / rate
    # deep syllabic amplitude modulation; overlapped real voices rarely stay
    # simultaneously loud for long
    depth = rng.uniform(0.45, 0.85)
    env *= 1.0 - depth * (0.5 + 0.5 * np.sin(2 * np.pi * rng.uniform(2.5, 6.0) * t
                                             + rng.uniform(0, 2 * np.pi)))
    return out * env


def _fricative_segment(n: int, rate: int, center: float, rng) -> np.ndarray:
    """Noise burst rung through a single high resonance (a crude sibilant)."""
    noise = rng.normal(size=n)
    m = int(0.004 * rate)
    t = np.arange(m) / rate
    shaper = np.exp(-np.pi * rng.uniform(500.0, 900.0) * t) * np.sin(2 * np.pi * center * t)
    seg = np.convolve(noise, shaper)[:n]
    peak = np.abs(seg).max()
    if peak > 0:
        seg *= 0.35 / peak
    return seg * _edge_envelope(n, rate, 0.01)


def speaker_profile(rng, pitch: float | None = None) -> dict:
    """Random per-speaker voice parameters (pitch, formants, tempo)."""
    return {
        "pitch": rng.uniform(105.0, 280.0) if pitch is None else pitch,
        "formants": (
            (rng.uniform(350.0, 850.0), rng.uniform(60.0, 95.0), 1.0),
            (rng.uniform(1000.0, 2200.0), rng.uniform(90.0, 150.0), 0.6),
            (rng.uniform(2400.0, 3300.0), rng.uniform(150.0, 230.0), 0.32),
            (rng.uniform(3400.0, 4200.0), rng.uniform(220.0, 320.0), 0.18),
        ),
        "sibilants": tuple(rng.uniform(2400.0, 5800.0) for _ in range(3)),
        "tempo": rng.uniform(0.8, 1.3),
    }


def speech_like(duration: float, rate: int, rng, profile: dict | None = None) -> Signal:
    """One synthetic utterance of roughly `duration` seconds."""
    if profile is None:
        profile = speaker_profile(rng)
    total = int(duration * rate)
    out = np.zeros(total)
    pos = 0
    while pos < total:
        kind = rng.choice(["voiced", "fricative", "pause"], p=[0.52, 0.15, 0.33])
        if kind == "voiced":
            seg_len = int(rng.uniform(0.09, 0.28) / profile["tempo"] * rate)
            seg = _voiced_segment(min(seg_len, total - pos), rate,
                                  profile["pitch"] * rng.uniform(0.92, 1.1),
                                  profile["formants"], rng)
        elif kind == "fricative":
            seg_len = int(rng.uniform(0.05, 0.15) * rate)
            center = profile["sibilants"][rng.integers(len(profile["sibilants"]))]
            seg = _fricative_segment(min(seg_len, total - pos), rate, center, rng)
        else:
            # mostly short word gaps, sometimes a sentence-level break
            if rng.uniform() < 0.3:
                seg_len = int(rng.uniform(0.5, 1.5) * rate)
            else:
                seg_len = int(rng.uniform(0.08, 0.40) * rate)
            seg = np.zeros(min(seg_len, total - pos))
        out[pos:pos + seg.size] = seg
        pos += seg.size
        if kind != "pause" and rng.uniform() < 0.75:
            pos += int(rng.uniform(0.02, 0.08) * rate)  # stop closure
    peak = np.abs(out).max()
    if peak > 0:
        out *= rng.uniform(0.45, 0.9) / peak
    return Signal(out, rate)


def make_corpus(directory, n_speakers: int = 6, recordings: int = 3,
                duration: float = 8.0, rate: int = 16000, seed: int = 0) -> Path:
    """Write a speaker-per-subdirectory WAV corpus usable by the harness.

    Base pitches are spread log-uniformly across speakers so the corpus spans
    a realistic voice range."""
    from .harness import save_wav

    directory = Path(directory)
    rng = np.random.default_rng(seed)
    lo, hi = 110.0, 265.0
    for sp in range(n_speakers):
        frac = sp / max(1, n_speakers - 1)
        pitch = lo * (hi / lo) ** frac * rng.uniform(0.96, 1.04)
        profile = speaker_profile(rng, pitch=pitch)
        sp_dir = directory / f"speaker{sp:02d}"
        sp_dir.mkdir(parents=True, exist_ok=True)
        for rec in range(recordings):
            sig = speech_like(duration, rate, rng, profile)
            save_wav(sig, sp_dir / f"utterance{rec:02d}.wav")
    return directory
