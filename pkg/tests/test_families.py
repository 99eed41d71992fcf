"""Matrix builders: banded Toeplitz, corner Hankel corrections, block families, FEM pairs."""

import numpy as np
import pytest

from specmat import (
    BadBandwidthError,
    HankelVariant,
    OverlapError,
    ShapeMismatchError,
    TooSmallError,
    assemble_tensor_pencil,
    assemble_toeplitz_hankel,
    build_corner_block,
    build_fem_p2,
    build_fem_p3,
    build_hankel,
    build_toeplitz,
    hermitian_eigen,
    solve_gevp_numeric,
)


def _persymmetry_defect(a):
    return np.max(np.abs(a - a[::-1, ::-1].T))


class TestToeplitz:
    def test_tridiagonal(self):
        t = build_toeplitz([2.0, -1.0], 3)
        assert np.array_equal(t.real, [[2, -1, 0], [-1, 2, -1], [0, -1, 2]])

    def test_zero_offdiagonals_give_identity(self):
        t = build_toeplitz([1.0, 0.0, 0.0], 4)
        assert np.array_equal(t, np.eye(4))

    def test_bandwidth_floor(self):
        with pytest.raises(BadBandwidthError):
            build_toeplitz([1.0], 3)

    def test_bandwidth_ceiling(self):
        with pytest.raises(BadBandwidthError):
            build_toeplitz([1.0, 2.0, 3.0, 4.0], 3)

    def test_entries_depend_only_on_band_offset(self):
        rng = np.random.default_rng(5)
        band = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        t = build_toeplitz(band, 9)
        for j in range(9):
            for k in range(9):
                expected = band[abs(j - k)] if abs(j - k) <= 3 else 0.0
                assert t[j, k] == expected


class TestHankel:
    def test_set1_top_rows_for_m3(self):
        band = np.array([10.0, 11.0, 12.0, 13.0])  # alpha_0..alpha_3
        h = build_hankel(band, 7, 1)
        assert np.array_equal(h[0, :3], [12.0, 13.0, 0.0])
        assert np.array_equal(h[1, :2], [13.0, 0.0])
        assert h[2, 0] == 0.0

    def test_set2_m1_single_corner(self):
        h = build_hankel([5.0, 7.0], 4, 2)
        expected = np.zeros((4, 4))
        expected[0, 0] = 7.0
        expected[3, 3] = 7.0
        assert np.array_equal(h.real, expected)

    def test_set3_halved_corner(self):
        h = build_hankel([8 + 2j, 5 - 1j, 2j], 5, 3)
        assert h[0, 0] == -(4 + 1j)
        assert h[1, 1] == 2j
        assert h[4, 4] == -(4 + 1j)

    def test_overlap_rejected(self):
        with pytest.raises(OverlapError):
            build_hankel([1.0, 2.0, 3.0, 4.0], 4, 2)  # 2m-1 = 5 > 4

    def test_persymmetric(self):
        rng = np.random.default_rng(8)
        for variant in (1, 2, 3, 4):
            band = rng.standard_normal(3) + 1j * rng.standard_normal(3)
            h = build_hankel(band, 6, variant)
            assert _persymmetry_defect(h) == 0.0


class TestAssembleToeplitzHankel:
    def test_set1_m2_corner(self):
        a = assemble_toeplitz_hankel([1.0, -1.0 / 3.0, -1.0 / 6.0], 6, 1)
        assert a[0, 0] == pytest.approx(7.0 / 6.0, abs=1e-15)
        assert np.allclose(a[0].real, [7 / 6, -1 / 3, -1 / 6, 0, 0, 0], atol=1e-15)
        assert np.allclose(a[1].real, [-1 / 3, 1, -1 / 3, -1 / 6, 0, 0], atol=1e-15)

    def test_set4_worked_4x4(self):
        a = assemble_toeplitz_hankel([7.0, 5.0, 2.0], 4, 4)
        expected = np.array(
            [[12, 7, 2, 0], [7, 7, 5, 2], [2, 5, 7, 7], [0, 2, 7, 12]], dtype=float
        )
        assert np.array_equal(a.real, expected)
        assert np.all(a.imag == 0)

    def test_set1_m1_is_plain_tridiagonal(self):
        a = assemble_toeplitz_hankel([2.0, -1.0], 5, 1)
        assert np.array_equal(a, build_toeplitz([2.0, -1.0], 5))

    def test_set3_complex_5x5_pair(self):
        a = assemble_toeplitz_hankel([8 + 2j, 5 - 1j, 2j], 5, 3)
        b = assemble_toeplitz_hankel([6.0, 3j, 1 - 1j], 5, 3)
        expected_a = np.array(
            [
                [4 + 1j, 5 - 1j, 2j, 0, 0],
                [5 - 1j, 8 + 4j, 5 - 1j, 2j, 0],
                [2j, 5 - 1j, 8 + 2j, 5 - 1j, 2j],
                [0, 2j, 5 - 1j, 8 + 4j, 5 - 1j],
                [0, 0, 2j, 5 - 1j, 4 + 1j],
            ]
        )
        expected_b = np.array(
            [
                [3, 3j, 1 - 1j, 0, 0],
                [3j, 7 - 1j, 3j, 1 - 1j, 0],
                [1 - 1j, 3j, 6, 3j, 1 - 1j],
                [0, 1 - 1j, 3j, 7 - 1j, 3j],
                [0, 0, 1 - 1j, 3j, 3],
            ]
        )
        assert np.array_equal(a, expected_a)
        assert np.array_equal(b, expected_b)

    def test_set2_m2_boundary_pattern(self):
        band = np.array([10.0, 3.0, 1.0])
        a = assemble_toeplitz_hankel(band, 6, 2)
        assert a[0, 0] == 7.0  # alpha_0 - alpha_1
        assert a[0, 1] == 2.0  # alpha_1 - alpha_2
        assert a[0, 2] == 1.0
        assert a[5, 5] == 7.0
        assert a[4, 5] == 2.0

    def test_symmetric_and_persymmetric_all_variants(self):
        rng = np.random.default_rng(21)
        for variant in (1, 2, 3, 4):
            for (n, m) in ((5, 2), (8, 3), (9, 4)):
                band = rng.standard_normal(m + 1) + 1j * rng.standard_normal(m + 1)
                a = assemble_toeplitz_hankel(band, n, variant)
                assert np.max(np.abs(a - a.T)) <= 1e-14
                assert _persymmetry_defect(a) <= 1e-14


class TestCornerBlock:
    def test_5x5_block_pattern(self):
        xi = np.array([10.0, 11.0, 12.0, 13.0])
        g = build_corner_block(xi, 2).real
        expected = np.array(
            [
                [13, 11, 0, 0, 0],
                [11, 10, 11, 12, 0],
                [0, 11, 13, 11, 0],
                [0, 12, 11, 10, 11],
                [0, 0, 0, 11, 13],
            ]
        )
        assert np.array_equal(g, expected)

    def test_diagonal_special_case(self):
        g = build_corner_block([0.0, 0.0, 0.0, 1.0], 1)
        assert np.array_equal(g.real, np.diag([1.0, 0.0, 1.0]))

    def test_fem_p2_interior_matches_block_pattern(self):
        k, _ = build_fem_p2(4)
        g = build_corner_block([14 / 3, -8 / 3, 1 / 3, 16 / 3], 3)
        assert np.allclose(k, g / (1 / 4), atol=1e-12)


class TestFemP2:
    def test_smallest_mesh_diagonal(self):
        k, _ = build_fem_p2(2)
        assert k.shape == (3, 3)
        assert np.allclose(np.diag(k).real, np.array([16 / 3, 14 / 3, 16 / 3]) * 2)

    def test_even_interior_rows_annihilate_constants(self):
        k, _ = build_fem_p2(6)
        # even (1-based) rows with a full stencil kill constants:
        # xi2 + xi1 + xi0 + xi1 + xi2 = 1/3 - 8/3 + 14/3 - 8/3 + 1/3 = 0
        for row in range(3, k.shape[0] - 3, 2):
            assert abs(k[row].sum()) < 1e-12

    def test_mass_symmetric_positive_diagonal(self):
        _, m = build_fem_p2(5)
        assert np.array_equal(m, m.T)
        assert np.all(np.diag(m).real > 0)

    def test_mass_positive_definite(self):
        for n_elems in (2, 5, 12, 32):
            _, m = build_fem_p2(n_elems)
            w = hermitian_eigen(m).values.real
            assert np.all(w > 0)

    def test_too_small(self):
        with pytest.raises(TooSmallError):
            build_fem_p2(1)


class TestFemP3:
    def test_leading_block_entries(self):
        h = 1.0 / 2.0
        k, m = build_fem_p3(2)
        assert k.shape == (5, 5)
        assert k[0, 0] == pytest.approx(54 / 5 / h)
        assert k[0, 1] == pytest.approx(-297 / 40 / h)
        assert k[0, 2] == pytest.approx(27 / 20 / h)
        assert k[1, 2] == pytest.approx(-189 / 40 / h)
        assert k[2, 2] == pytest.approx(37 / 5 / h)
        assert m[0, 0] == pytest.approx(27 / 70 * h)
        assert m[1, 1] == pytest.approx(27 / 70 * h)
        assert m[2, 2] == pytest.approx(16 / 105 * h)

    def test_shared_node_couplings(self):
        k, m = build_fem_p3(3)
        h = 1.0 / 3.0
        assert k[2, 2] == pytest.approx(37 / 5 / h)
        assert k[2, 5] == pytest.approx(-13 / 40 / h)
        assert m[2, 5] == pytest.approx(19 / 1680 * h)

    def test_symmetric_and_mass_definite(self):
        for n_elems in (2, 4, 8):
            k, m = build_fem_p3(n_elems)
            assert np.allclose(k, k.T, atol=0)
            assert np.allclose(m, m.T, atol=0)
            assert np.all(hermitian_eigen(m).values.real > 0)

    def test_too_small(self):
        with pytest.raises(TooSmallError):
            build_fem_p3(1)


class TestTensorPencil:
    def test_scalar_case(self):
        lhs, rhs = assemble_tensor_pencil([[2.0]], [[1.0]], [[2.0]], [[1.0]])
        assert lhs[0, 0] == 4.0
        assert rhs[0, 0] == 1.0

    def test_identity_sides_make_kronecker_sum(self):
        a = np.array([[2.0, -1.0], [-1.0, 2.0]])
        lhs, rhs = assemble_tensor_pencil(a, np.eye(2), a, np.eye(2))
        expected = np.kron(a, np.eye(2)) + np.kron(np.eye(2), a)
        assert np.array_equal(lhs, expected)
        assert np.array_equal(rhs, np.eye(4))

    def test_minkowski_sum_spectrum(self):
        rng = np.random.default_rng(17)
        for (n, m) in ((2, 3), (3, 3), (4, 2)):
            a = rng.standard_normal((n, n))
            a = a + a.T
            c = rng.standard_normal((m, m))
            c = c + c.T
            lhs, rhs = assemble_tensor_pencil(a, np.eye(n), c, np.eye(m))
            got = np.sort(solve_gevp_numeric(lhs, rhs).values.real)
            lam = np.linalg.eigvalsh(a)
            mu = np.linalg.eigvalsh(c)
            expected = np.sort(np.add.outer(lam, mu).ravel())
            assert np.max(np.abs(got - expected)) < 1e-9

    def test_shape_bookkeeping(self):
        lhs, rhs = assemble_tensor_pencil(
            np.eye(2), np.eye(2), np.eye(3), np.eye(3)
        )
        assert lhs.shape == (6, 6)
        assert rhs.shape == (6, 6)

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatchError):
            assemble_tensor_pencil(np.eye(2), np.eye(3), np.eye(2), np.eye(2))


class TestVariantEnum:
    def test_signs(self):
        assert HankelVariant.SET1.sign == -1
        assert HankelVariant.SET2.sign == -1
        assert HankelVariant.SET3.sign == 1
        assert HankelVariant.SET4.sign == 1

    def test_coerce(self):
        assert HankelVariant.coerce(3) is HankelVariant.SET3
        with pytest.raises(ValueError):
            HankelVariant.coerce("fifth")
