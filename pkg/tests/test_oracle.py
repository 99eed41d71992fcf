"""Numeric oracle: GEVP solver paths, companion linearization, residuals, matching."""

import numpy as np
import pytest

from specmat import (
    ShapeMismatchError,
    SingularBError,
    SingularPencilError,
    TooLargeForGeneralPathError,
    ZeroVectorError,
    assemble_toeplitz_hankel,
    fem_p3_eigenvalues,
    match_spectra,
    residual_gevp,
    solve_gevp_numeric,
    solve_pevp_numeric,
)
from specmat.oracle import polynomial_residual

RNG = np.random.default_rng(99)


def _random_hermitian(n, rng=RNG):
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return a + a.conj().T


def _random_spd(n, rng=RNG):
    basis = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return basis @ basis.conj().T + n * np.eye(n)


class TestSolveGevp:
    def test_identity_b_2x2(self):
        sol = solve_gevp_numeric(np.array([[2.0, -1.0], [-1.0, 2.0]]), np.eye(2))
        assert np.allclose(np.sort(sol.values.real), [1.0, 3.0], atol=1e-12)

    def test_complex_5x5_pair_matches_listed_values(self):
        a = assemble_toeplitz_hankel([8 + 2j, 5 - 1j, 2j], 5, 3)
        b = assemble_toeplitz_hankel([6.0, 3j, 1 - 1j], 5, 3)
        sol = solve_gevp_numeric(a, b)
        s2 = np.sqrt(2.0)
        listed = np.array(
            [
                2 - 0.5j,
                (7 - 3j + (6 - 5j) * s2) / 9,
                1.4 - 1.2j,
                -0.625 + 0.375j,
                (7 - 3j - (6 - 5j) * s2) / 9,
            ]
        )
        got = np.sort_complex(sol.values)
        assert np.max(np.abs(got - np.sort_complex(listed))) < 1e-9

    def test_singular_b(self):
        b = np.eye(3)
        b[1, 1] = 0.0
        with pytest.raises(SingularBError):
            solve_gevp_numeric(np.eye(3), b)

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatchError):
            solve_gevp_numeric(np.eye(2), np.eye(3))

    def test_general_path_size_cap(self):
        n = 17
        a = RNG.standard_normal((n, n)) + 1j * RNG.standard_normal((n, n))
        with pytest.raises(TooLargeForGeneralPathError):
            solve_gevp_numeric(a, np.eye(n))

    def test_hermitian_path_handles_moderate_sizes(self):
        n = 40
        a = _random_hermitian(n)
        b = _random_spd(n)
        sol = solve_gevp_numeric(a, b)
        assert sol.n_modes == n
        assert np.max(sol.residuals) < 1e-9
        assert np.max(np.abs(sol.values.imag)) < 1e-10

    def test_paths_agree_where_both_apply(self):
        for n in (3, 6, 12):
            a = _random_hermitian(n)
            b = _random_spd(n)
            fast = solve_gevp_numeric(a, b, method="hermitian")
            slow = solve_gevp_numeric(a, b, method="charpoly")
            scale = max(1.0, np.max(np.abs(fast.values)))
            assert np.max(
                np.abs(np.sort_complex(fast.values) - np.sort_complex(slow.values))
            ) < 1e-8 * scale

    def test_forced_hermitian_path_rejects_unsuitable_input(self):
        from specmat import NotHermitianError

        with pytest.raises(NotHermitianError):
            solve_gevp_numeric(
                np.array([[0.0, 1.0], [0.0, 0.0]]), np.eye(2), method="hermitian"
            )
        with pytest.raises(SingularBError):
            # Hermitian but indefinite right side cannot take the Cholesky route
            solve_gevp_numeric(np.eye(2), np.diag([1.0, -1.0]), method="hermitian")

    def test_oracle_self_consistency(self):
        cases = []
        for n in (3, 5, 8):
            cases.append((_random_hermitian(n), _random_spd(n)))
            sym = RNG.standard_normal((n, n)) + 1j * RNG.standard_normal((n, n))
            sym = sym + sym.T  # complex symmetric, not Hermitian
            cases.append((sym, np.eye(n) * (2.0 + 0.5j) + 0.1 * (sym + sym.T)))
        for a, b in cases:
            sol = solve_gevp_numeric(a, b)
            assert np.max(sol.residuals) < 1e-9

    def test_repeated_eigenvalue_gets_independent_vectors(self):
        from specmat import inverse_iteration

        a = np.diag([1.0, 1.0, 3.0])
        b = np.eye(3)
        v1 = inverse_iteration(a, b, 1.0, seed=1)
        v2 = inverse_iteration(a, b, 1.0, avoid=[v1], seed=2)
        assert abs(np.vdot(v1, v2)) < 1e-8
        assert residual_gevp(a, b, 1.0, v1) < 1e-10
        assert residual_gevp(a, b, 1.0, v2) < 1e-10


class TestSolvePevp:
    def test_scalar_quadratic(self):
        values, dropped = solve_pevp_numeric(
            [np.array([[2.0]]), np.array([[-3.0]]), np.array([[1.0]])]
        )
        assert not dropped
        assert np.allclose(np.sort(values.real), [1.0, 2.0], atol=1e-12)

    def test_linear_case_agrees_with_gevp(self):
        n = 5
        a = _random_hermitian(n)
        b = _random_spd(n)
        # P(lam) = (-a) + lam*b has the spectrum of a x = lam b x
        values, dropped = solve_pevp_numeric([-a, b])
        assert not dropped
        direct = solve_gevp_numeric(a, b)
        assert np.max(
            np.abs(np.sort_complex(values) - np.sort_complex(direct.values))
        ) < 1e-9

    def test_cubic_pencil_matches_interior_fem_p3_modes(self):
        n_elems = 4
        dim = n_elems - 1
        mats = [
            -25200.0 * assemble_toeplitz_hankel([2.0, -1.0], dim, 1),
            360.0 * assemble_toeplitz_hankel([64.0, 3.0], dim, 1),
            30.0 * assemble_toeplitz_hankel([-36.0, 1.0], dim, 1),
            assemble_toeplitz_hankel([8.0, 1.0], dim, 1),
        ]
        scaled, dropped = solve_pevp_numeric(mats)
        assert not dropped
        values = np.sort(scaled.real * n_elems ** 2)
        analytic = fem_p3_eigenvalues(n_elems).real
        interior = np.sort(
            np.array([v for v in analytic if not np.isclose(v, 10.0 * n_elems ** 2)
                      and not np.isclose(v, 42.0 * n_elems ** 2)])
        )
        assert values.size == interior.size
        assert np.max(np.abs(values - interior) / np.abs(interior)) < 1e-10

    def test_each_value_nearly_singularizes_the_pencil(self):
        n, q = 3, 2
        mats = [RNG.standard_normal((n, n)) + 1j * RNG.standard_normal((n, n)) for _ in range(q + 1)]
        mats[-1] += 3 * np.eye(n)
        values, _ = solve_pevp_numeric(mats)
        assert values.size == n * q
        for lam in values:
            assert polynomial_residual(mats, lam) < 1e-8

    def test_singular_leading_coefficient_flagged(self):
        mats = [np.diag([2.0, 3.0]), np.eye(2), np.zeros((2, 2))]
        values, dropped = solve_pevp_numeric(mats)
        assert dropped
        assert values.size == 2  # the quadratic term is gone; one root per row
        assert np.allclose(np.sort(values.real), [-3.0, -2.0], atol=1e-10)

    def test_doubly_singular_rejected(self):
        mats = [np.zeros((2, 2)), np.eye(2), np.zeros((2, 2))]
        with pytest.raises(SingularPencilError):
            solve_pevp_numeric(mats)


class TestResidual:
    def test_exact_pair_is_tiny(self):
        a = np.array([[2.0, -1.0], [-1.0, 2.0]])
        assert residual_gevp(a, np.eye(2), 1.0, [1.0, 1.0]) <= 1e-12

    def test_perturbed_value_is_large(self):
        a = np.array([[2.0, -1.0], [-1.0, 2.0]])
        assert residual_gevp(a, np.eye(2), 1.1, [1.0, 1.0]) > 1e-3

    def test_zero_vector_rejected(self):
        with pytest.raises(ZeroVectorError):
            residual_gevp(np.eye(2), np.eye(2), 1.0, [0.0, 0.0])


class TestMatchSpectra:
    def test_identical_lists(self):
        report = match_spectra(np.array([1.0, 2.0]), np.array([2.0, 1.0]))
        assert report.max_distance == 0.0
        assert not report.count_mismatch

    def test_permutation_tolerance(self):
        report = match_spectra(
            np.array([1.0, 3.0]), np.array([3.0000001, 0.9999999])
        )
        assert report.max_distance == pytest.approx(1e-7, rel=1e-3)

    def test_count_mismatch_flagged_not_raised(self):
        report = match_spectra(np.arange(5.0), np.arange(4.0))
        assert report.count_mismatch
        assert np.isinf(report.distances).sum() == 1
