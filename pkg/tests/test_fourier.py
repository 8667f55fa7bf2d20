import csv

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from tfsep.fourier import (StftConfig, WindowKind, export_heatmap, fft, ifft,
                           istft, make_window, stft, stft_frequencies)
from tfsep.signal import Signal


def brute_dft(x):
    x = np.asarray(x, dtype=np.complex128)
    n = x.size
    k = np.arange(n)
    return np.exp(-2j * np.pi * np.outer(k, k) / n) @ x


class TestFft:
    def test_impulse_flat_spectrum(self):
        assert np.allclose(fft([1, 0, 0, 0]), np.ones(4))

    def test_constant_is_dc(self):
        out = fft(np.full(8, 0.5))
        assert np.isclose(out[0], 4.0)
        assert np.allclose(out[1:], 0.0, atol=1e-12)

    def test_alternating_sign_hits_nyquist_bin(self):
        x = (-1.0) ** np.arange(8)
        out = fft(x)
        oracle = brute_dft(x)
        assert np.allclose(out, oracle, atol=1e-12)
        energy = np.abs(out) ** 2
        assert np.argmax(energy) == 4
        assert np.isclose(energy[4], np.sum(energy))

    def test_matches_brute_force(self, rng):
        for n in (2, 4, 16, 128, 1024):
            x = rng.normal(size=n) + 1j * rng.normal(size=n)
            assert np.max(np.abs(fft(x) - brute_dft(x))) < 1e-9

    def test_non_power_of_two_rejected(self):
        with pytest.raises(ValueError):
            fft(np.zeros(12))
        with pytest.raises(ValueError):
            ifft(np.zeros(3))

    @given(st.integers(0, 9), st.integers(0, 2 ** 32 - 1))
    def test_ifft_inverts(self, log_n, seed):
        gen = np.random.default_rng(seed)
        x = gen.normal(size=1 << log_n) + 1j * gen.normal(size=1 << log_n)
        back = ifft(fft(x))
        assert np.max(np.abs(back - x)) < 1e-10 * max(1.0, np.max(np.abs(x)))


class TestWindows:
    def test_hann_small(self):
        assert np.allclose(make_window(WindowKind.HANN, 4), [0, 0.5, 1, 0.5])

    def test_rectangular(self):
        assert np.array_equal(make_window(WindowKind.RECTANGULAR, 7), np.ones(7))

    def test_hann_midpoint_is_one(self):
        for n in (8, 64, 256):
            assert make_window(WindowKind.HANN, n)[n // 2] == 1.0

    def test_too_short_rejected(self):
        with pytest.raises(ValueError):
            make_window(WindowKind.HANN, 1)


class TestStftConfig:
    def test_invariants(self):
        with pytest.raises(ValueError):
            StftConfig(WindowKind.HANN, 512, 0, 512)
        with pytest.raises(ValueError):
            StftConfig(WindowKind.HANN, 512, 600, 512)
        with pytest.raises(ValueError):
            StftConfig(WindowKind.HANN, 512, 256, 500)

    def test_from_milliseconds(self):
        cfg = StftConfig.from_milliseconds(WindowKind.HANN, 32.0, 16.0, 16000)
        assert cfg.win_size == 512 and cfg.hop == 256 and cfg.fft_size == 512
        cfg = StftConfig.from_milliseconds(WindowKind.HANN, 50.0, 25.0, 16000)
        assert cfg.win_size == 800 and cfg.fft_size == 1024


class TestStft:
    def test_one_minute_recording_shape(self, rng):
        s = Signal(0.1 * rng.normal(size=959669), 16000)
        m = stft(s, StftConfig(WindowKind.HANN, 512, 256, 512))
        assert m.coeffs.shape[0] == 257
        assert abs(m.coeffs.shape[1] - 3750) <= 2

    def test_frequency_axis(self):
        f = stft_frequencies(512, 16000)
        assert f.size == 257
        assert f[0] == 0.0
        assert np.array_equal(f, np.arange(257) * 31.25)

    def test_bin_centered_sinusoid_single_row(self):
        # rectangular window, frequency exactly on bin 8 of a 128-point frame
        rate, nfft = 4000, 128
        t = np.arange(1024)
        x = np.cos(2 * np.pi * 8 * t / nfft)
        m = stft(Signal(x, rate), StftConfig(WindowKind.RECTANGULAR, nfft, nfft, nfft))
        # drop edge frames that see the zero padding
        interior = np.abs(m.coeffs[:, 1:-1])
        energy_by_row = (interior ** 2).sum(axis=1)
        assert np.argmax(energy_by_row) == 8
        others = np.delete(energy_by_row, 8)
        assert others.max() < 1e-18 * energy_by_row[8]

    def test_empty_signal_rejected(self):
        with pytest.raises(ValueError):
            stft(Signal(np.zeros(0), 8000), StftConfig(WindowKind.HANN, 16, 8, 16))

    def test_linearity(self, rng):
        cfg = StftConfig(WindowKind.HANN, 64, 32, 64)
        x = Signal(rng.normal(size=1000), 8000)
        y = Signal(rng.normal(size=1000), 8000)
        a, b = 0.7, -1.3
        combo = stft(Signal(a * x.samples + b * y.samples, 8000), cfg)
        parts = a * stft(x, cfg).coeffs + b * stft(y, cfg).coeffs
        assert np.max(np.abs(combo.coeffs - parts)) < 1e-9 * max(1, np.abs(parts).max())

    def test_frame_parseval(self, rng):
        n = 256
        frame = rng.normal(size=n) * make_window(WindowKind.HANN, n)
        spec = fft(frame)
        time_e = np.sum(frame ** 2)
        freq_e = np.sum(np.abs(spec) ** 2) / n
        assert abs(time_e - freq_e) < 1e-9 * time_e


class TestIstft:
    @pytest.mark.parametrize("window,win,hop", [
        (WindowKind.HANN, 512, 256),
        (WindowKind.HANN, 512, 128),
        (WindowKind.RECTANGULAR, 512, 512),
        (WindowKind.HANN, 320, 80),
    ])
    def test_roundtrip_white_noise(self, rng, window, win, hop):
        fft_size = 512
        s = Signal(rng.normal(size=7919), 16000)
        cfg = StftConfig(window, win, hop, fft_size)
        back = istft(stft(s, cfg))
        assert back.rate == s.rate and len(back) == len(s)
        err = np.linalg.norm(back.samples - s.samples) / np.linalg.norm(s.samples)
        assert err < 1e-6

    def test_non_covering_configuration_rejected(self, rng):
        # periodic Hann with hop == win leaves w[0] = 0 gaps
        s = Signal(rng.normal(size=4096), 8000)
        m = stft(s, StftConfig(WindowKind.HANN, 512, 512, 512))
        with pytest.raises(ValueError):
            istft(m)

    def test_speech_roundtrip(self, speech_signal):
        cfg = StftConfig.from_milliseconds(WindowKind.HANN, 32.0, 16.0, speech_signal.rate)
        back = istft(stft(speech_signal, cfg))
        err = (np.linalg.norm(back.samples - speech_signal.samples)
               / np.linalg.norm(speech_signal.samples))
        assert err < 1e-6


class TestHeatmapExport:
    def test_two_by_two_pixels(self, tmp_path):
        pgm = tmp_path / "m.pgm"
        export_heatmap(np.array([[0.0, 1.0], [1.0, 0.0]]), pgm)
        raw = pgm.read_bytes()
        assert raw.startswith(b"P5\n2 2\n255\n")
        pixels = np.frombuffer(raw[-4:], dtype=np.uint8).reshape(2, 2)
        # bottom PGM row is matrix row 0
        assert pixels[::-1].tolist() == [[0, 255], [255, 0]]

    def test_all_zero_guard(self, tmp_path):
        pgm = tmp_path / "z.pgm"
        export_heatmap(np.zeros((3, 5)), pgm)
        raw = pgm.read_bytes()
        assert set(raw[-15:]) == {0}

    def test_csv_roundtrip(self, tmp_path, rng):
        matrix = rng.normal(size=(4, 9))
        pgm = tmp_path / "r.pgm"
        export_heatmap(matrix, pgm, tmp_path / "r.csv")
        with open(tmp_path / "r.csv", newline="") as fh:
            parsed = np.array([[float(v) for v in row] for row in csv.reader(fh)])
        assert np.max(np.abs(parsed - matrix)) < 1e-9

    def test_non_finite_rejected(self, tmp_path):
        with pytest.raises(ValueError):
            export_heatmap(np.array([[np.nan, 1.0]]), tmp_path / "bad.pgm")
