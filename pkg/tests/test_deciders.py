import math

import numpy as np
import pytest

from niep import (
    DecisionVerdict,
    WrongDimension,
    coeffs_from_spectrum,
    decide_coeff_gap,
    decide_diag_n3,
    decide_niep_n3,
    decide_rniep_n_le4,
    decide_sniep_n5_gated,
    decide_sym_diag_n3,
    decide_trace0_n4,
    decide_trace0_n5,
    decide_trace0_sniep_n5,
    run_all_necessary,
)

from oracles import poly_from_roots

R = DecisionVerdict.REALIZABLE
NR = DecisionVerdict.NOT_REALIZABLE
NA = DecisionVerdict.INAPPLICABLE

SQ3 = math.sqrt(3.0)


class TestNiepN3:
    def test_pair_inside_triangle(self):
        assert decide_niep_n3([3, complex(0, SQ3), complex(0, -SQ3)]).verdict is R

    def test_pair_outside_triangle(self):
        assert decide_niep_n3([1, 1 + 0.1j, 1 - 0.1j]).verdict is NR

    def test_real_circulant(self):
        assert decide_niep_n3([2, -1, -1]).verdict is R

    def test_wrong_dimension(self):
        with pytest.raises(WrongDimension):
            decide_niep_n3([1, 2, 3, 4])

    def test_real_negative_trace(self):
        assert decide_niep_n3([1, -1, -1]).verdict is NR


class TestRniepLe4:
    def test_trace_positive(self):
        assert decide_rniep_n_le4([3, 3, -2, -2]).verdict is R

    def test_trace_negative(self):
        assert decide_rniep_n_le4([2, -1, -1, -1]).verdict is NR

    def test_singleton_negative(self):
        assert decide_rniep_n_le4([-1]).verdict is NR

    def test_needs_real(self):
        assert decide_rniep_n_le4([1, 1j, -1j]).verdict is NA

    def test_too_big(self):
        with pytest.raises(WrongDimension):
            decide_rniep_n_le4([1, 2, 3, 4, 5])


class TestTrace0N4:
    def test_hand_fixture(self):
        assert decide_trace0_n4([3, -1, -1, -1]).verdict is R

    def test_two_pairs(self):
        assert decide_trace0_n4([1, 1, -1, -1]).verdict is R

    def test_four_cycle(self):
        assert decide_trace0_n4([1, 1j, -1j, -1]).verdict is R

    def test_nonzero_trace_gated(self):
        assert decide_trace0_n4([1, 1, 1, -1]).verdict is NA

    def test_negative_s3(self):
        d = decide_trace0_n4([2, -3, 0.5, 0.5])
        assert d.verdict is NR and d.reason == "s3>=0"

    def test_s2sq_exceeds_4s4(self):
        # two conjugate pairs at 25 and 155 degrees: s1 = s3 = 0, s2 > 0,
        # s4 < 0, so the fourth-moment clause is the one that fires
        # (for real quads it never can, by Cauchy-Schwarz)
        z = complex(math.cos(math.radians(25)), math.sin(math.radians(25)))
        w = complex(math.cos(math.radians(155)), math.sin(math.radians(155)))
        vals = [z, z.conjugate(), w, w.conjugate()]
        d = decide_trace0_n4(vals)
        assert d.verdict is NR and d.reason == "s2^2<=4s4"


class TestTrace0N5:
    def test_accepting(self):
        assert decide_trace0_n5([4, 2, -2, -2, -2]).verdict is R

    def test_rejecting_near_threshold(self):
        d = decide_trace0_n5([3.4, 2.6, -2, -2, -2])
        assert d.verdict is NR
        assert d.reason == "s2^2<=4s4"
        assert d.witness.lhs == pytest.approx(919.3, abs=0.1)
        assert d.witness.rhs == pytest.approx(909.3, abs=0.1)

    def test_double_head(self):
        assert decide_trace0_n5([3, 3, -2, -2, -2]).verdict is NR

    def test_sweep_brackets_threshold(self):
        below = decide_trace0_n5([3.4, 2.6, -2, -2, -2])
        above = decide_trace0_n5([3.48, 2.52, -2, -2, -2])
        assert below.verdict is NR and above.verdict is R

    def test_embedding_agrees_with_n4(self):
        rng = np.random.default_rng(41)
        agreements = 0
        for _ in range(500):
            vals = rng.uniform(-2, 2, size=3)
            quad = [*vals.tolist(), -float(vals.sum())]
            d4 = decide_trace0_n4(quad)
            d5 = decide_trace0_n5(quad + [0.0])
            assert d4.verdict == d5.verdict, (quad, d4, d5)
            agreements += d4.verdict is R
        assert 0 < agreements < 500


class TestCoeffGap:
    def test_n4_fixture(self):
        assert decide_coeff_gap([0, -6, -8, -3], 2).verdict is R

    def test_n5_double_head(self):
        d = decide_coeff_gap([0, -15, -10, 60, 72], 2)
        assert d.verdict is NR
        assert d.witness.indices == (4,)
        assert d.witness.lhs == pytest.approx(60)
        assert d.witness.rhs == pytest.approx(56.25)

    def test_cubic(self):
        assert decide_coeff_gap([0, -1, 0], 2).verdict is R

    def test_leading_coeff_gate(self):
        assert decide_coeff_gap([1, -1, 0], 2).verdict is NA

    def test_p_range_validation(self):
        with pytest.raises(Exception):
            decide_coeff_gap([0, -1, 0, 0, 0, 0], 2)  # n=6 > 2p+1

    def test_agrees_with_reams_on_trace_zero_quads(self):
        rng = np.random.default_rng(43)
        hits = 0
        for _ in range(500):
            vals = rng.uniform(-2, 2, size=3)
            quad = [*vals.tolist(), -float(vals.sum())]
            coeffs = coeffs_from_spectrum(quad)
            gap = decide_coeff_gap(coeffs, 2)
            reams = decide_trace0_n4(quad)
            assert gap.verdict == reams.verdict, (quad, gap, reams)
            hits += gap.verdict is R
        assert hits > 0

    def test_k2p_plus_1_branch(self):
        # p=2, n=5, k4 > 0 second branch: x^5 - 2x^3 - x^2 + k4 x + k5
        k4 = 0.5
        root = math.sqrt(max((-2.0) ** 2 / 4 - k4, 0.0))
        bound = (-1.0) * (-2.0 / 2 - root)
        good = decide_coeff_gap([0, -2, -1, k4, bound - 0.01], 2)
        bad = decide_coeff_gap([0, -2, -1, k4, bound + 0.01], 2)
        assert good.verdict is R
        assert bad.verdict is NR and bad.witness.indices == (5,)


class TestSniepN5:
    def test_accepting(self):
        assert decide_sniep_n5_gated([4, 1, 1, -2, -2]).verdict is R

    def test_gate_fails(self):
        d = decide_sniep_n5_gated([6, 3, 3, -5, -5])
        assert d.verdict is NA

    def test_almost_trivial(self):
        assert decide_sniep_n5_gated([2, 0, 0, 0, 0]).verdict is R

    def test_perron_clause(self):
        # inside the gate the pair-sum and lambda_3 clauses follow from the
        # ordering alone, so the dominance clause is the one that can fire
        d = decide_sniep_n5_gated([2, 1.9, 1.9, 1.9, -2.5])
        assert d.verdict is NR
        assert d.reason == "perron"


class TestTrace0SniepN5:
    def test_accepting(self):
        assert decide_trace0_sniep_n5([4, 1, 0, -2, -3]).verdict is R

    def test_double_head(self):
        d = decide_trace0_sniep_n5([3, 3, -2, -2, -2])
        assert d.verdict is NR and d.reason == "lambda2+lambda5<=0"

    def test_zeros(self):
        assert decide_trace0_sniep_n5([0, 0, 0, 0, 0]).verdict is R

    def test_s3_clause(self):
        d = decide_trace0_sniep_n5([2, 2, 2, -3, -3])
        assert d.verdict is NR and d.reason == "s3>=0"


class TestDiagN3:
    def test_accepting(self):
        assert decide_diag_n3([5, 3, -2], [3, 3, 0]).verdict is R

    def test_diagonal_matrix(self):
        assert decide_diag_n3([1, 0, 0], [1, 0, 0]).verdict is R

    def test_max_d_clause(self):
        d = decide_diag_n3([5, 3, -2], [2, 2, 2])
        assert d.verdict is NR and d.reason == "max(d)>=lambda2"

    def test_sum_clause(self):
        assert decide_diag_n3([5, 3, -2], [3, 2, 0]).verdict is NR


class TestSymDiagN3:
    def test_accepting(self):
        assert decide_sym_diag_n3([5, 3, -2], [3, 3, 0]).verdict is R

    def test_identity(self):
        assert decide_sym_diag_n3([1, 1, 1], [1, 1, 1]).verdict is R

    def test_majorization_breaks(self):
        d = decide_sym_diag_n3([5, 3, -2], [6, 0, 0])
        assert d.verdict is NR and d.reason == "majorization"

    def test_d1_clause(self):
        d = decide_sym_diag_n3([5, 3, -2], [2.5, 2.5, 1])
        assert d.verdict is NR and d.reason == "d1>=lambda2"

    def test_negative_diagonal(self):
        d = decide_sym_diag_n3([5, 3, -2], [7, 0, -1])
        assert d.verdict is NR and d.reason == "d>=0"


class TestConsistencyWithNecessary:
    @pytest.mark.parametrize("seed", [51, 52])
    def test_accepted_spectra_pass_all_necessary(self, seed):
        rng = np.random.default_rng(seed)
        accepted = 0
        for _ in range(300):
            n = int(rng.integers(1, 5))
            vals = rng.uniform(-2, 2, size=n).tolist()
            d = decide_rniep_n_le4(vals)
            if d.verdict is R:
                accepted += 1
                assert not run_all_necessary(vals).violated
        assert accepted > 50
