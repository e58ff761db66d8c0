import numpy as np
import pytest

from niep import (
    BaseRealization,
    DecisionVerdict,
    InvalidParameter,
    Partition,
    check_perfect2,
    check_suleimanova,
    check_suleimanova_perfect,
    realize_companion,
    run_all_necessary,
)

from oracles import random_suleimanova

R = DecisionVerdict.REALIZABLE
U = DecisionVerdict.UNDETERMINED


class TestSuleimanova:
    def test_head_absorbs(self):
        assert check_suleimanova([6, -1, -2, -3]).verdict is R

    def test_head_too_small(self):
        d = check_suleimanova([1, -2])
        assert d.verdict is U

    def test_boundary(self):
        assert check_suleimanova([3, -1, -1, -1]).verdict is R

    def test_extra_positive_blocks_the_condition(self):
        assert check_suleimanova([2, 1, -1]).verdict is U

    def test_all_zeros(self):
        assert check_suleimanova([0, 0, 0]).verdict is R


class TestSuleimanovaPerfect:
    def test_two_blocks_found_greedily(self):
        d = check_suleimanova_perfect([6, 4, -1, -2, -3, -1, -1, -1])
        assert d.verdict is R
        partition = d.flags["partition"]
        for head, tail in partition.blocks:
            assert head + sum(tail) >= -1e-9

    def test_single_block_pair(self):
        assert check_suleimanova_perfect([1, -1]).verdict is R

    def test_infeasible_even_exhaustively(self):
        d = check_suleimanova_perfect([2, 2, -3, -3], exhaustive=True)
        assert d.verdict is U

    def test_explicit_partition_checked(self):
        p = Partition(((6.0, (-1.0, -2.0, -3.0)), (4.0, (-1.0, -1.0, -1.0))))
        d = check_suleimanova_perfect([6, 4, -1, -2, -3, -1, -1, -1], partition=p)
        assert d.verdict is R

    def test_partition_multiset_mismatch_rejected(self):
        p = Partition(((6.0, (-1.0,)),))
        with pytest.raises(InvalidParameter):
            check_suleimanova_perfect([6, -2], partition=p)

    def test_greedy_needs_exhaustive_sometimes(self):
        # greedy sends -3 to the larger head and strands the last -2;
        # blocks (4: -2, -2) and (3: -3) work, so only the exhaustive
        # search certifies
        vals = [4.0, 3.0, -3.0, -2.0, -2.0]
        assert check_suleimanova_perfect(vals).verdict is U
        assert check_suleimanova_perfect(vals, exhaustive=True).verdict is R

    def test_suleimanova_implies_single_block(self):
        rng = np.random.default_rng(61)
        fired = 0
        for _ in range(200):
            vals = random_suleimanova(rng)
            if check_suleimanova(vals).verdict is R:
                fired += 1
                head = max(vals)
                tail = tuple(sorted(v for v in vals if v is not head))
                rest = list(vals)
                rest.remove(head)
                p = Partition(((head, tuple(rest)),))
                assert check_suleimanova_perfect(vals, partition=p).verdict is R
        assert fired > 100


class TestPerfect2:
    def test_two_blocks(self):
        base = BaseRealization(matrix=((3, 2), (2, 3)), spectrum=(5, 1))
        d = check_perfect2(base, [(-2, -1), (-2, -1)])
        assert d.verdict is R
        assert d.flags["perfect2_plus"] is True
        assert d.flags["union"] == (5, 1, -1.0, -1.0, -2.0, -2.0)

    def test_degenerates_to_suleimanova(self):
        base = BaseRealization(matrix=((6,),), spectrum=(6,))
        assert check_perfect2(base, [(-1, -2, -3)]).verdict is R

    def test_diagonal_budget_fails(self):
        base = BaseRealization(matrix=((3, 2), (2, 3)), spectrum=(5, 1))
        d = check_perfect2(base, [(-4,), ()])
        assert d.verdict is U

    def test_base_must_match_spectrum(self):
        with pytest.raises(InvalidParameter):
            BaseRealization(matrix=((3, 2), (2, 3)), spectrum=(4, 2))

    def test_base_must_be_nonnegative(self):
        with pytest.raises(InvalidParameter):
            BaseRealization(matrix=((1, -0.5), (-0.5, 1)), spectrum=(1.5, 0.5))

    def test_tail_count_must_match(self):
        base = BaseRealization(matrix=((3, 2), (2, 3)), spectrum=(5, 1))
        with pytest.raises(Exception):
            check_perfect2(base, [(-1,)])


class TestCrossChecks:
    def test_suleimanova_implies_companion_succeeds(self):
        rng = np.random.default_rng(67)
        fired = 0
        for _ in range(200):
            vals = random_suleimanova(rng)
            if check_suleimanova(vals).verdict is R:
                fired += 1
                cert = realize_companion(vals)
                assert cert.coeff_residual <= 1e-8
                assert cert.min_entry >= -1e-12
        assert fired > 100

    def test_verdicts_never_claim_not_realizable(self):
        rng = np.random.default_rng(71)
        for _ in range(300):
            n = int(rng.integers(1, 8))
            vals = rng.uniform(-3, 3, size=n).tolist()
            for checker in (check_suleimanova, check_suleimanova_perfect):
                assert checker(vals).verdict is not DecisionVerdict.NOT_REALIZABLE

    def test_fired_conditions_are_consistent_with_necessary(self):
        rng = np.random.default_rng(73)
        fired = 0
        for _ in range(200):
            vals = random_suleimanova(rng)
            if check_suleimanova_perfect(vals).verdict is R:
                fired += 1
                assert not run_all_necessary(vals).violated
        assert fired > 100
