"""Approximation solvers: worked cases, optimality, and preconditions."""

import numpy as np
import pytest

import cases
from cases import ADD, MULT, col, m
from troprate import (
    TropicalMatrix,
    TropicalScalar,
    UnsolvableError,
    check_matrix,
    conj_transpose,
    is_reciprocal_matrix,
    mat_add,
    mat_distance,
    mat_mul,
    scalar_mul,
    solve_multi,
    solve_single,
    solve_weighted,
)


def random_positive(rng, n):
    return TropicalMatrix(np.exp(rng.uniform(-2, 2, size=(n, n))), MULT)


def random_reciprocal(rng, n):
    upper = np.exp(rng.uniform(-2, 2, size=(n, n)))
    a = np.triu(upper, 1)
    full = a + np.divide(1.0, a.T, out=np.zeros_like(a), where=a.T != 0) + np.eye(n)
    return TropicalMatrix(full, MULT)


def objective(b: TropicalMatrix, x: TropicalMatrix) -> float:
    """x^- B x as a raw value."""
    return mat_mul(mat_mul(conj_transpose(x), b), x).data[0, 0]


class TestCheckMatrix:
    def test_reciprocal_inconsistent(self):
        report = check_matrix(m(cases.RECIP4))
        assert report.is_reciprocal
        assert not report.is_consistent
        assert report.radius.value == pytest.approx(2.0, rel=1e-9)
        assert report.max_transitivity_violation > 0

    def test_consistent_rank_one(self):
        x = col(cases.RECIP4_SCORES)
        consistent = mat_mul(x, conj_transpose(x))
        report = check_matrix(consistent)
        assert report.is_consistent
        assert report.is_reciprocal
        assert report.radius.value == pytest.approx(1.0, rel=1e-9)
        assert report.max_transitivity_violation == pytest.approx(0.0, abs=1e-9)

    def test_nonreciprocal(self):
        report = check_matrix(m(cases.NONRECIP4))
        assert not report.is_reciprocal

    def test_one_by_one(self):
        assert check_matrix(m([[1]])).is_consistent
        assert not check_matrix(m([[2]])).is_consistent

    def test_rejects_zero_entries(self):
        with pytest.raises(UnsolvableError):
            check_matrix(m([[1, 0], [2, 1]]))

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            check_matrix(m([[1, 2]]))

    def test_additive_consistency(self):
        x = np.array([0.0, 1.5, -2.0])
        a = m(x[:, None] - x[None, :], ADD)
        report = check_matrix(a)
        assert report.is_consistent and report.is_reciprocal
        assert report.radius.value == pytest.approx(0.0, abs=1e-9)


class TestSolveSingle:
    def test_reciprocal_worked_case(self):
        result = solve_single(m(cases.RECIP4))
        assert result.mu.value == pytest.approx(2.0, rel=1e-9)
        assert result.star.allclose(m(cases.RECIP4_STAR))
        assert np.allclose(result.representative.data[:, 0], cases.RECIP4_SCORES)
        assert result.aggregate.allclose(m(cases.RECIP4))

    def test_nonreciprocal_worked_case(self):
        result = solve_single(m(cases.NONRECIP4))
        assert result.mu.value == pytest.approx(2.0, rel=1e-9)
        assert result.aggregate.allclose(m(cases.NONRECIP4_AGG))
        assert result.star.allclose(m(cases.RECIP4_STAR))
        assert np.allclose(result.representative.data[:, 0], cases.RECIP4_SCORES)

    def test_consistent_input_is_exact(self):
        x = col([1, 1 / 6, 1 / 2, 1 / 4])
        result = solve_single(mat_mul(x, conj_transpose(x)))
        assert result.mu.value == pytest.approx(1.0, rel=1e-9)
        rep = result.representative.data[:, 0]
        assert np.allclose(rep / rep[0], x.data[:, 0] / x.data[0, 0])

    def test_one_by_one(self):
        result = solve_single(m([[1]]))
        assert result.mu.is_one()
        assert result.generators.cols == 1 and result.generators.data[0, 0] == 1.0
        # an off-identity diagonal keeps its distance as the error
        assert solve_single(m([[2]])).mu.value == pytest.approx(2.0)

    def test_rejects_zero_entries(self):
        with pytest.raises(UnsolvableError, match="zero entries"):
            solve_single(m([[1, 0], [2, 1]]))
        with pytest.raises(UnsolvableError):
            solve_single(m([[0, 2], [float("-inf"), 0]], ADD))


class TestSolveMulti:
    def test_reciprocal_pair(self):
        result = solve_multi([m(x) for x in cases.PAIR_RECIP])
        assert result.aggregate.allclose(m(cases.NONRECIP4_AGG))
        assert np.allclose(result.representative.data[:, 0], cases.RECIP4_SCORES)

    def test_nonreciprocal_pair(self):
        result = solve_multi([m(x) for x in cases.PAIR_NONRECIP])
        assert result.aggregate.allclose(m(cases.NONRECIP4_AGG))
        assert np.allclose(result.representative.data[:, 0], cases.RECIP4_SCORES)

    def test_singleton_equals_solve_single(self):
        single = solve_single(m(cases.NONRECIP4))
        multi = solve_multi([m(cases.NONRECIP4)])
        assert multi.mu.value == single.mu.value
        assert multi.star.allclose(single.star)

    def test_minimizes_worst_distance(self):
        mats = [m(x) for x in cases.PAIR_RECIP]
        result = solve_multi(mats)
        x = result.representative
        rank_one = mat_mul(x, conj_transpose(x))
        worst = max(mat_distance(a, rank_one).value for a in mats)
        assert worst == pytest.approx(result.mu.value, rel=1e-9)

    def test_errors(self):
        with pytest.raises(ValueError, match="at least one"):
            solve_multi([])
        with pytest.raises(ValueError, match="one shape"):
            solve_multi([m([[1]]), m([[1, 2], [1 / 2, 1]])])
        with pytest.raises(ValueError, match="one scale"):
            solve_multi([m([[1]]), m([[0]], ADD)])


class TestSolveWeighted:
    def test_weighted_worked_case(self):
        result = solve_weighted([m(x) for x in cases.TRIPLE], cases.TRIPLE_WEIGHTS)
        assert result.aggregate.allclose(m(cases.TRIPLE_AGG))
        assert result.mu.value == pytest.approx(2.0, rel=1e-9)
        assert result.star.allclose(m(cases.TRIPLE_STAR))
        assert np.allclose(result.representative.data[:, 0], cases.TRIPLE_SCORES)

    def test_unit_weights_equal_solve_multi(self):
        mats = [m(x) for x in cases.PAIR_NONRECIP]
        weighted = solve_weighted(mats, [1.0, 1.0])
        multi = solve_multi(mats)
        assert weighted.aggregate.allclose(multi.aggregate)
        assert weighted.star.allclose(multi.star)

    def test_weight_scales_error_not_generators(self):
        a = m(cases.RECIP4)
        plain = solve_single(a)
        scaled = solve_weighted([a], [3.0])
        assert scaled.mu.value == pytest.approx(3.0 * plain.mu.value, rel=1e-9)
        assert scaled.star.allclose(plain.star)
        assert scaled.generators.allclose(plain.generators)

    def test_weighted_objective_attained(self):
        mats = [m(x) for x in cases.TRIPLE]
        ws = cases.TRIPLE_WEIGHTS
        result = solve_weighted(mats, ws)
        x = result.representative
        rank_one = mat_mul(x, conj_transpose(x))
        worst = max(w * mat_distance(a, rank_one).value for w, a in zip(ws, mats))
        assert worst == pytest.approx(result.mu.value, rel=1e-9)

    def test_errors(self):
        a = m(cases.RECIP4)
        with pytest.raises(ValueError, match="one weight per matrix"):
            solve_weighted([a], [1.0, 2.0])
        with pytest.raises(UnsolvableError, match="zero weights"):
            solve_weighted([a, a], [0.0, 1.0])
        with pytest.raises(ValueError, match="scale"):
            solve_weighted([a], [TropicalScalar(0.0, ADD)])


class TestOptimality:
    def test_objective_equals_distance(self):
        rng = np.random.default_rng(71)
        for _ in range(100):
            a = random_positive(rng, 4)
            x = TropicalMatrix(np.exp(rng.uniform(-2, 2, size=(4, 1))), MULT)
            b = mat_add(a, conj_transpose(a))
            rank_one = mat_mul(x, conj_transpose(x))
            assert mat_distance(a, rank_one).value == pytest.approx(
                objective(b, x), rel=1e-9
            )

    def test_solution_family_attains_minimum(self):
        rng = np.random.default_rng(73)
        for _ in range(100):
            n = int(rng.integers(2, 6))
            result = solve_single(random_positive(rng, n))
            u = TropicalMatrix(np.exp(rng.uniform(-3, 3, size=(n, 1))), MULT)
            x = mat_mul(result.star, u)
            assert objective(result.aggregate, x) == pytest.approx(
                result.mu.value, rel=1e-9
            )

    def test_no_vector_beats_minimum(self):
        rng = np.random.default_rng(79)
        result = solve_single(m(cases.NONRECIP4))
        for _ in range(1000):
            x = TropicalMatrix(np.exp(rng.uniform(-3, 3, size=(4, 1))), MULT)
            assert objective(result.aggregate, x) >= result.mu.value * (1 - 1e-9)

    def test_reciprocal_shortcut_matches_full_symmetrization(self):
        rng = np.random.default_rng(83)
        for _ in range(50):
            a = random_reciprocal(rng, 4)
            assert is_reciprocal_matrix(a)
            result = solve_single(a)
            assert result.aggregate.allclose(a)
            full = mat_add(a, conj_transpose(a))
            assert result.mu.value == pytest.approx(
                solve_single(full).mu.value, rel=1e-9
            )

    def test_scaling_reciprocal_input_keeps_generators(self):
        rng = np.random.default_rng(89)
        for c in (0.25, 3.0):
            a = random_reciprocal(rng, 4)
            plain = solve_single(a)
            scaled = solve_single(scalar_mul(TropicalScalar(c, MULT), a))
            assert scaled.generators.allclose(plain.generators)
            assert scaled.mu.value == pytest.approx(
                max(c, 1 / c) * plain.mu.value, rel=1e-9
            )

    def test_cross_scale_agreement(self):
        a = m(cases.NONRECIP4)
        la = m(np.log(np.array(cases.NONRECIP4)), ADD)
        mult_result = solve_single(a)
        add_result = solve_single(la)
        assert np.allclose(
            np.log(mult_result.generators.data), add_result.generators.data, atol=1e-9
        )
        assert np.log(mult_result.mu.value) == pytest.approx(
            add_result.mu.value, abs=1e-9
        )

    def test_brute_force_grid_agrees_at_small_order(self):
        from troprate.oracle import grid_min_objective

        rng = np.random.default_rng(97)
        for _ in range(5):
            b0 = random_positive(rng, 3)
            b = mat_add(b0, conj_transpose(b0))
            result = solve_single(b0)
            grid = grid_min_objective(b, resolution=0.01).value
            assert grid >= result.mu.value * (1 - 1e-9)
            assert grid <= result.mu.value * np.exp(0.011)
