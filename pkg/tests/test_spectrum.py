import math

import numpy as np
import pytest

from niep import (
    EmptyInput,
    UnpairedConjugate,
    charpoly_of_matrix,
    coeffs_from_moments,
    coeffs_from_spectrum,
    elementary_symmetric,
    moments,
    moments_from_coeffs,
    moments_of_matrix,
    validate_spectrum,
)

from oracles import moments_direct, poly_from_roots

SQ3 = math.sqrt(3.0)

PAPER_4X4 = [
    [1 / 4, 0, 3 / 4, 0],
    [1 / 4, 1 / 4, 0, 1 / 2],
    [0, 3 / 4, 1 / 4, 0],
    [7 / 24, 0, 11 / 24, 1 / 4],
]
PAPER_4X4_SPECTRUM = [1, complex(0, math.sqrt(3 / 8)), complex(0, -math.sqrt(3 / 8)), 0]


class TestValidateSpectrum:
    def test_pairs_and_perron(self):
        sp = validate_spectrum([3, complex(-SQ3, 1), complex(-SQ3, -1), 3])
        assert sp.n == 4
        assert sp.perron_index is not None
        assert sp.perron_value == pytest.approx(3.0)

    def test_singleton(self):
        sp = validate_spectrum([1])
        assert sp.n == 1
        assert sp.perron_index == 0

    def test_unpaired_conjugate(self):
        with pytest.raises(UnpairedConjugate):
            validate_spectrum([1j, 1j])

    def test_empty(self):
        with pytest.raises(EmptyInput):
            validate_spectrum([])

    def test_canonical_order(self):
        sp = validate_spectrum([complex(-SQ3, -1), 3, complex(-SQ3, 1), 3])
        assert sp.values[0] == 3 and sp.values[1] == 3
        assert sp.values[2].imag > 0 > sp.values[3].imag

    def test_negative_dominant_has_no_perron(self):
        assert validate_spectrum([-2, 1]).perron_index is None


class TestMoments:
    def test_hand_fixture(self):
        assert moments([3, -1, -1, -1], 4).s == pytest.approx((0, 12, 24, 84))

    def test_singleton(self):
        assert moments([1], 3).s == pytest.approx((1, 1, 1))

    def test_complex_fixture(self):
        got = moments([2, -2, -2, 1 + 1j, 1 - 1j], 3).s
        assert got == pytest.approx((0, 12, -12))

    def test_one_based_access(self):
        m = moments([3, -1, -1, -1], 4)
        assert m[2] == pytest.approx(12)
        with pytest.raises(IndexError):
            m[5]


class TestElementarySymmetric:
    def test_hand_fixture(self):
        assert elementary_symmetric([3, -1, -1, -1]).E == pytest.approx((0, -6, 8, -3))

    def test_pair(self):
        assert elementary_symmetric([1, 1]).E == pytest.approx((2, 1))

    def test_three(self):
        assert elementary_symmetric([2, -1, -1]).E == pytest.approx((0, -3, 2))

    def test_newton_coefficients_normalized(self):
        sym = elementary_symmetric([3, -1, -1, -1])
        for k in range(1, 5):
            assert sym.c[k] == pytest.approx(sym.E[k - 1] / math.comb(4, k))


class TestNewtonIdentities:
    def test_from_moments_fixture(self):
        assert coeffs_from_moments((0, 12, 24, 84), 4).k == pytest.approx((0, -6, -8, -3))

    def test_singleton(self):
        assert coeffs_from_moments((1,), 1).k == pytest.approx((-1,))

    def test_double_head_fixture(self):
        # frozen by the expansion oracle: (x-3)^2 (x+2)^3
        roots = [3, 3, -2, -2, -2]
        assert poly_from_roots(roots) == pytest.approx((0, -15, -10, 60, 72))
        s = moments_direct(roots, 5)
        assert s == pytest.approx((0, 30, 30, 210, 390))
        assert coeffs_from_moments(s, 5).k == pytest.approx((0, -15, -10, 60, 72))

    @pytest.mark.parametrize(
        "roots", [[3, -1, -1, -1], [1], [3, 3, -2, -2, -2], [2, -2, -2, 1 + 1j, 1 - 1j]]
    )
    def test_round_trip(self, roots):
        n = len(roots)
        s = moments(roots, n).s
        k = coeffs_from_moments(s, n).k
        back = moments_from_coeffs(k, n).s
        assert back == pytest.approx(s, abs=1e-9)

    def test_moments_beyond_degree_use_recurrence(self):
        roots = [3, -1, -1, -1]
        k = coeffs_from_spectrum(roots).k
        got = moments_from_coeffs(k, 8).s
        assert got == pytest.approx(moments_direct(roots, 8), rel=1e-12)

    def test_signed_elementary_symmetric_property(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            n_pairs = int(rng.integers(0, 3))
            reals = rng.uniform(-2, 2, size=int(rng.integers(1, 5))).tolist()
            vals = list(reals)
            for _ in range(n_pairs):
                z = complex(rng.uniform(-2, 2), rng.uniform(0.05, 2))
                vals += [z, z.conjugate()]
            n = len(vals)
            sigma = max(1.0, max(abs(v) for v in vals))
            k_newton = np.array(coeffs_from_moments(moments(vals, n).s, n).k)
            e = np.array(elementary_symmetric(vals).E)
            signed = np.array([(-1) ** j * e[j - 1] for j in range(1, n + 1)])
            err = np.max(np.abs(k_newton - signed) / sigma ** np.arange(1, n + 1))
            assert err <= 1e-9


class TestMatrixTransforms:
    def test_identity(self):
        assert charpoly_of_matrix(np.eye(2)).k == pytest.approx((-2, 1))

    def test_paper_matrix_charpoly(self):
        want = poly_from_roots(PAPER_4X4_SPECTRUM)
        assert charpoly_of_matrix(PAPER_4X4).k == pytest.approx(want, abs=1e-12)

    def test_companion_round_trip(self):
        a = np.zeros((4, 4))
        for i in range(3):
            a[i, i + 1] = 1.0
        a[3] = [3, 8, 6, 0]  # companion of x^4 - 6x^2 - 8x - 3
        assert charpoly_of_matrix(a).k == pytest.approx((0, -6, -8, -3))

    def test_zero_matrix_moments(self):
        assert moments_of_matrix(np.zeros((3, 3)), 2).s == pytest.approx((0, 0))

    def test_all_ones_offdiagonal(self):
        j_minus_i = np.ones((4, 4)) - np.eye(4)
        assert moments_of_matrix(j_minus_i, 2).s == pytest.approx((0, 12))

    def test_paper_matrix_trace(self):
        assert moments_of_matrix(PAPER_4X4, 1).s == pytest.approx((1,))

    def test_charpoly_consistent_with_power_traces(self):
        rng = np.random.default_rng(11)
        for _ in range(100):
            n = int(rng.integers(2, 7))
            a = rng.uniform(0, 1, size=(n, n))
            k = charpoly_of_matrix(a).k
            via_recurrence = moments_from_coeffs(k, 2 * n).s
            direct = moments_of_matrix(a, 2 * n).s
            scale = max(1.0, max(abs(x) for x in direct))
            assert np.allclose(via_recurrence, direct, rtol=1e-8, atol=1e-8 * scale)

    def test_conjugate_closure_keeps_sums_real(self):
        rng = np.random.default_rng(13)
        for _ in range(100):
            z = complex(rng.uniform(-2, 2), rng.uniform(0.1, 2))
            vals = [rng.uniform(0, 3), z, z.conjugate()]
            moments(vals, 12)  # raises if any imaginary residue survives
            elementary_symmetric(vals)
