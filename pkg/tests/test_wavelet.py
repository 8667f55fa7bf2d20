import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from tfsep.signal import PadMode, Signal
from tfsep.wavelet import (WaveletFilterBank, available_families, central_frequency,
                           count_vanishing_moments, cqf_highpass, cwt_ricker,
                           dwt_heatmap_matrix, dwt_step, flatten, gray_permutation,
                           idwt_step, iwpt, lookup, max_level, qmf_highpass,
                           scale_to_frequency, unflatten, verify_pr, wavedec,
                           waverec, wpt)

ALL_MODES = [PadMode.PERIODIZATION, PadMode.ZERO, PadMode.SYMMETRIC]
SQRT2 = np.sqrt(2.0)


class TestRegistry:
    def test_haar_filters(self):
        bank = lookup("haar")
        assert np.allclose(bank.dec_lo, [1 / SQRT2, 1 / SQRT2])
        assert np.allclose(np.abs(bank.dec_hi), [1 / SQRT2, 1 / SQRT2])
        assert np.isclose(np.sum(bank.dec_hi), 0.0)

    def test_db4_has_eight_taps(self):
        assert len(lookup("db4")) == 8

    def test_sym8_registered(self):
        assert len(lookup("sym8")) == 16

    def test_family_count(self):
        fams = available_families()
        assert len(fams) == 57  # haar + db1..20 + sym2..20 + coif1..17
        assert {"haar", "db20", "sym20", "coif17"} <= set(fams)

    def test_unknown_name_lists_families(self):
        with pytest.raises(ValueError, match="haar"):
            lookup("morl")

    def test_registered_moments_are_measured(self):
        for name in available_families():
            bank = lookup(name)
            measured = count_vanishing_moments(bank, max_p=bank.vanishing_moments)
            assert measured == bank.vanishing_moments, name


class TestQmfCqf:
    def test_qmf_alternates_signs(self):
        assert qmf_highpass([1.0, 2.0, 3.0]).tolist() == [1.0, -2.0, 3.0]

    def test_cqf_of_haar_lowpass(self):
        g = cqf_highpass([1 / SQRT2, 1 / SQRT2])
        assert np.allclose(g, [1 / SQRT2, -1 / SQRT2])
        assert np.allclose(g, lookup("haar").rec_hi)

    def test_cqf_twice_restores_up_to_sign(self):
        for name in ("db3", "sym6", "coif2"):
            h = lookup(name).rec_lo
            twice = cqf_highpass(cqf_highpass(h))
            assert np.allclose(twice, h) or np.allclose(twice, -h)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            qmf_highpass([])


class TestPerfectReconstruction:
    def test_haar_passes(self):
        check = verify_pr(lookup("haar"), 1e-8)
        assert check.ok and check.delay >= 0

    def test_every_registered_bank_passes(self):
        for name in available_families():
            check = verify_pr(lookup(name), 1e-8)
            assert check.ok, (name, check)

    def test_perturbed_haar_fails(self):
        haar = lookup("haar")
        broken = haar.dec_hi.copy()
        broken[0] += 0.01
        bank = WaveletFilterBank("broken", haar.dec_lo, broken, haar.rec_lo,
                                 haar.rec_hi, 1)
        assert not verify_pr(bank, 1e-8).ok

    def test_tolerance_must_be_positive(self):
        with pytest.raises(ValueError):
            verify_pr(lookup("haar"), 0.0)


class TestDwtStep:
    def test_constant_signal_has_zero_detail(self):
        approx, detail = dwt_step([1, 1, 1, 1], lookup("haar"))
        assert np.allclose(approx, SQRT2)
        assert np.allclose(detail, 0.0)

    def test_alternating_signal_is_pure_detail(self):
        approx, detail = dwt_step([1, -1, 1, -1], lookup("haar"))
        assert np.allclose(approx, 0.0)
        assert np.allclose(np.abs(detail), SQRT2)

    def test_roundtrip_every_bank(self, rng):
        x = rng.normal(size=64)
        for name in available_families():
            bank = lookup(name)
            approx, detail = dwt_step(x, bank)
            back = idwt_step(approx, detail, bank)
            assert np.max(np.abs(back - x)) < 1e-10, name

    @pytest.mark.parametrize("mode", ALL_MODES)
    @pytest.mark.parametrize("n", [64, 63, 17, 5, 2])
    def test_roundtrip_modes_and_lengths(self, rng, mode, n):
        x = rng.normal(size=n)
        for name in ("haar", "db4", "sym8", "coif3", "db20"):
            bank = lookup(name)
            approx, detail = dwt_step(x, bank, mode)
            back = idwt_step(approx, detail, bank, mode, length=n)
            assert np.max(np.abs(back - x)) < 1e-10, (name, mode, n)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            dwt_step(np.zeros(0), lookup("haar"))

    def test_matches_naive_circular_correlation(self, rng):
        # independent oracle: per-definition loops over the periodized signal
        def naive(x, bank):
            n = x.size
            k = len(bank)
            lo = np.zeros(n // 2)
            hi = np.zeros(n // 2)
            for out in range(n // 2):
                for i in range(k):
                    lo[out] += bank.rec_lo[i] * x[(i + 2 * out) % n]
                    hi[out] += bank.rec_hi[i] * x[(i + 2 * out) % n]
            return lo, hi

        for name in ("haar", "db7", "sym8", "coif4"):
            bank = lookup(name)
            for n in (8, 64, 126):
                x = rng.normal(size=n)
                lo, hi = dwt_step(x, bank)
                lo_ref, hi_ref = naive(x, bank)
                assert np.max(np.abs(lo - lo_ref)) < 1e-12, (name, n)
                assert np.max(np.abs(hi - hi_ref)) < 1e-12, (name, n)


class TestWavedec:
    def test_six_level_band_lengths(self, rng):
        s = Signal(rng.normal(size=65536), 16000)
        coeffs = wavedec(s, lookup("sym8"), 6)
        assert [d.size for d in coeffs.details] == [32768, 16384, 8192, 4096, 2048, 1024]
        assert coeffs.approx.size == 1024

    def test_odd_length_follows_ceil_chain(self, rng):
        s = Signal(rng.normal(size=100), 8000)
        coeffs = wavedec(s, lookup("db2"), 3)
        assert [d.size for d in coeffs.details] == [50, 25, 13]
        back = waverec(coeffs, lookup("db2"))
        assert np.max(np.abs(back.samples - s.samples)) < 1e-10

    def test_polynomial_annihilation(self):
        n = 512
        t = np.linspace(0.0, 1.0, n)
        for p in range(1, 9):
            bank = lookup(f"db{p}")
            poly = np.polynomial.polynomial.polyval(
                t, np.arange(1, p + 1, dtype=float))
            _, detail = dwt_step(poly, bank)
            interior = detail[: (n - len(bank)) // 2]
            assert np.max(np.abs(interior)) <= 1e-6 * np.linalg.norm(poly), p

    def test_matches_manual_cascade_exactly(self, rng):
        s = Signal(rng.normal(size=4096), 8000)
        bank = lookup("db5")
        coeffs = wavedec(s, bank, 4)
        approx = s.samples
        for level in range(4):
            approx, detail = dwt_step(approx, bank)
            assert np.array_equal(detail, coeffs.details[level])
        assert np.array_equal(approx, coeffs.approx)

    def test_level_bounds(self, rng):
        s = Signal(rng.normal(size=100), 8000)
        with pytest.raises(ValueError):
            wavedec(s, lookup("haar"), 0)
        with pytest.raises(ValueError):
            wavedec(s, lookup("haar"), max_level(100) + 1)

    @pytest.mark.parametrize("mode", ALL_MODES)
    def test_roundtrip_all_banks(self, rng, mode):
        s = Signal(rng.normal(size=1024), 8000)
        for name in available_families():
            bank = lookup(name)
            for levels in (1, 3, 6):
                coeffs = wavedec(s, bank, levels, mode)
                back = waverec(coeffs, bank)
                err = np.max(np.abs(back.samples - s.samples))
                assert err < 1e-8, (name, mode, levels, err)

    def test_energy_preserved_with_periodization(self, rng):
        s = Signal(rng.normal(size=4096), 8000)
        for name in ("haar", "db7", "sym12", "coif4"):
            coeffs = wavedec(s, lookup(name), 5)
            ratio = np.linalg.norm(flatten(coeffs)) / np.linalg.norm(s.samples)
            assert abs(ratio - 1.0) < 1e-8, name


class TestFlatten:
    def test_single_level(self):
        coeffs = wavedec(Signal(np.arange(8.0), 8000), lookup("haar"), 1)
        flat = flatten(coeffs)
        assert np.array_equal(flat, np.concatenate([coeffs.approx, coeffs.details[0]]))

    def test_length_conserved(self, rng):
        s = Signal(rng.normal(size=4096), 8000)
        coeffs = wavedec(s, lookup("sym8"), 6)
        assert flatten(coeffs).size == 4096

    def test_unflatten_roundtrip(self, rng):
        s = Signal(rng.normal(size=777), 8000)
        coeffs = wavedec(s, lookup("db3"), 4)
        again = unflatten(flatten(coeffs), coeffs)
        assert np.array_equal(again.approx, coeffs.approx)
        for a, b in zip(again.details, coeffs.details):
            assert np.array_equal(a, b)


class TestGrayOrdering:
    def test_two_levels(self):
        assert gray_permutation(2).tolist() == [0, 1, 3, 2]

    def test_three_levels_and_inverse(self):
        g = gray_permutation(3)
        assert g.tolist() == [0, 1, 3, 2, 7, 6, 4, 5]
        assert np.argsort(g).tolist() == [0, 1, 3, 2, 6, 7, 5, 4]

    @given(st.integers(0, 12))
    def test_bijection(self, levels):
        g = gray_permutation(levels)
        assert sorted(g.tolist()) == list(range(2 ** levels))

    def test_inverse_composition_is_identity(self):
        for levels in range(9):
            g = gray_permutation(levels)
            assert np.array_equal(g[np.argsort(g)], np.arange(2 ** levels))

    def test_matches_reflected_binary_code(self):
        # inverse permutation must be the classic n ^ (n >> 1) sequence
        for levels in range(1, 11):
            inv = np.argsort(gray_permutation(levels))
            ref = np.array([n ^ (n >> 1) for n in range(2 ** levels)])
            assert np.array_equal(inv, ref)


class TestWpt:
    def test_leaf_geometry(self, rng):
        s = Signal(rng.normal(size=65536), 16000)
        leaves = wpt(s, lookup("sym8"), 6)
        assert leaves.matrix.shape == (64, 1024)

    def test_total_coefficients_conserved(self, rng):
        s = Signal(rng.normal(size=1000), 8000)
        leaves = wpt(s, lookup("haar"), 3)
        assert leaves.matrix.shape == (8, 125)
        assert leaves.matrix.size == 1000

    def test_single_level_equals_dwt_step(self, rng):
        x = rng.normal(size=256)
        bank = lookup("db6")
        leaves = wpt(Signal(x, 8000), bank, 1)
        approx, detail = dwt_step(x, bank)
        assert np.array_equal(leaves.matrix[0], approx)
        assert np.array_equal(leaves.matrix[1], detail)

    @pytest.mark.parametrize("mode", ALL_MODES)
    def test_roundtrip(self, rng, mode):
        s = Signal(rng.normal(size=640), 8000)
        for name in ("haar", "db4", "sym8", "coif5", "db20"):
            bank = lookup(name)
            for levels in (1, 3, 6):
                back = iwpt(wpt(s, bank, levels, mode), bank)
                err = np.max(np.abs(back.samples - s.samples))
                assert err < 1e-8, (name, mode, levels, err)

    def test_rows_are_frequency_ordered(self):
        # a pure tone must concentrate in the leaf row holding its frequency
        rate = 16000
        t = np.arange(16384)
        for freq in (430.0, 1700.0, 3333.0, 6100.0):
            s = Signal(np.sin(2 * np.pi * freq * t / rate), rate)
            leaves = wpt(s, lookup("sym8"), 5)
            width = rate / 2 / 32
            assert abs(int(np.argmax((leaves.matrix ** 2).sum(axis=1)))
                       - int(freq // width)) <= 1, freq

    def test_chirp_ridge_is_monotone(self):
        rate = 16000
        n = 65536
        t = np.arange(n) / rate
        sweep = np.sin(2 * np.pi * (rate / 2.0) / (2 * t[-1]) * t * t)  # 0 Hz -> Nyquist
        leaves = wpt(Signal(sweep, rate), lookup("sym8"), 5)
        energy = leaves.matrix ** 2
        # smooth each row a little, then track the ridge position
        kernel = np.ones(9) / 9.0
        ridge = [int(np.argmax(np.convolve(row, kernel, mode="same")))
                 for row in energy]
        assert np.all(np.diff(ridge) > 0)

    def test_wrong_bank_rejected(self, rng):
        leaves = wpt(Signal(rng.normal(size=64), 8000), lookup("haar"), 2)
        with pytest.raises(ValueError):
            iwpt(leaves, lookup("db2"))


class TestVanishingMoments:
    def test_haar_has_one(self):
        assert count_vanishing_moments(lookup("haar")) == 1

    def test_db_and_sym_counts(self):
        assert count_vanishing_moments(lookup("db4")) == 4
        assert count_vanishing_moments(lookup("sym8")) == 8

    def test_nonzero_sum_gives_zero(self):
        haar = lookup("haar")
        hi = np.array([0.75, -0.65])  # taps sum to 0.1
        bank = WaveletFilterBank("unbalanced", haar.dec_lo, hi, haar.rec_lo,
                                 haar.rec_hi, 0)
        assert count_vanishing_moments(bank) == 0


class TestFrequencyMapping:
    def test_sym8_central_frequency(self):
        assert abs(central_frequency("sym8") - 0.666) <= 0.01

    def test_sym8_dyadic_scales_at_16k(self):
        bank = lookup("sym8")
        assert abs(scale_to_frequency(bank, 2 ** 4, 16000) - 666.0) <= 10.0
        assert abs(scale_to_frequency(bank, 2 ** 5, 16000) - 333.0) <= 5.0

    def test_doubling_scale_halves_frequency(self):
        bank = lookup("db6")
        for scale in (1.0, 2.0, 7.0):
            assert np.isclose(scale_to_frequency(bank, 2 * scale, 8000),
                              scale_to_frequency(bank, scale, 8000) / 2.0)


class TestRickerCwt:
    def test_constant_maps_to_zero(self):
        # away from the zero-padded edges, a zero-mean kernel must null a constant
        s = Signal(np.full(2048, 0.7), 8000)
        scales = np.arange(1.0, 33.0)
        out = cwt_ricker(s, scales)
        edge = int(np.ceil(8 * scales.max())) + 1
        assert np.max(np.abs(out[:, edge:-edge])) <= 1e-8

    def test_shape(self, rng):
        s = Signal(rng.normal(size=500), 8000)
        assert cwt_ricker(s, [1.0, 4.0, 9.5]).shape == (3, 500)

    def test_sinusoid_peaks_at_matching_scale(self):
        f0 = 0.0225  # cycles per sample
        t = np.arange(8192)
        s = Signal(0.8 * np.sin(2 * np.pi * f0 * t), 8000)
        scales = np.arange(1.0, 33.0)
        response = np.abs(cwt_ricker(s, scales)[:, 2048:-2048]).max(axis=1)
        # oracle: |a^(1/2) (a w)^2 exp(-(a w)^2 / 2)| maximized over the grid
        w0 = 2 * np.pi * f0
        oracle = np.sqrt(scales) * (scales * w0) ** 2 * np.exp(-0.5 * (scales * w0) ** 2)
        assert int(np.argmax(response)) == int(np.argmax(oracle))
        # the mapped frequency of the winning scale is in the right ballpark
        ricker_cf = np.sqrt(2.0) / (2.0 * np.pi)
        best = scales[int(np.argmax(response))]
        assert abs(ricker_cf / best - f0) / f0 < 0.35

    def test_linear_in_signal(self, rng):
        x = rng.normal(size=600)
        y = rng.normal(size=600)
        scales = [2.0, 5.0]
        lhs = cwt_ricker(Signal(0.25 * x + 0.5 * y, 8000), scales)
        rhs = (0.25 * cwt_ricker(Signal(x, 8000), scales)
               + 0.5 * cwt_ricker(Signal(y, 8000), scales))
        assert np.max(np.abs(lhs - rhs)) < 1e-10

    def test_nonpositive_scale_rejected(self):
        with pytest.raises(ValueError):
            cwt_ricker(Signal(np.zeros(16), 8000), [1.0, 0.0])


class TestDwtHeatmap:
    def test_rows_and_width(self, rng):
        s = Signal(rng.normal(size=1000), 8000)
        coeffs = wavedec(s, lookup("sym8"), 4)
        matrix = dwt_heatmap_matrix(coeffs)
        assert matrix.shape == (5, 500)
        # coarse rows are stretched copies of their bands
        assert np.array_equal(matrix[0][:4], np.repeat(coeffs.approx, 8)[:4])
