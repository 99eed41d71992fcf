"""Closed-form eigenpairs for the structured matrix families.

Each generator evaluates a trigonometric symbol at mode angles and pairs the
resulting eigenvalue with a sampled sine or cosine eigenvector.  The
corner-overlapped families reduce, mode by mode, to scalar quadratics or
cubics whose roots are taken directly.
"""

from __future__ import annotations

import dataclasses
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import (
    BadBandwidthError,
    DegenerateQuadraticError,
    SingularPencilError,
    TooSmallError,
    ZeroScaleError,
)
from .families import HankelVariant, as_band, build_corner_block
from .linalg import kron, poly_roots
from .solution import ANALYTIC, NUMERIC, EigenSolution, PolynomialEigenSolution

SYMBOL_ZERO_RTOL = 1e-12
QUADRATIC_DEGENERACY_TOL = 1e-14


def symbol(band, theta):
    """Trigonometric symbol ``band[0] + 2 * sum_l band[l] * cos(l*theta)``.

    Accepts a scalar angle or an array of angles.
    """
    band = as_band(band)
    theta_arr = np.asarray(theta, dtype=float)
    orders = np.arange(1, band.size)
    if orders.size == 0:
        acc = np.broadcast_to(band[0], theta_arr.shape).astype(complex).copy()
    else:
        acc = band[0] + 2.0 * np.tensordot(
            band[1:], np.cos(np.multiply.outer(orders, theta_arr)), axes=(0, 0)
        )
    if np.isscalar(theta) or np.asarray(theta).ndim == 0:
        return complex(acc)
    return acc


def mode_angles(variant, n: int):
    """Mesh parameter ``h`` and angle multipliers for a variant's n modes."""
    variant = HankelVariant.coerce(variant)
    if variant == HankelVariant.SET1:
        return 1.0 / (n + 1), np.arange(1, n + 1)
    if variant == HankelVariant.SET2:
        return 1.0 / n, np.arange(1, n + 1)
    if variant == HankelVariant.SET3:
        return 1.0 / (n - 1), np.arange(n)
    return 1.0 / n, np.arange(n)


def eigenvector_basis(variant, n: int) -> np.ndarray:
    """The variant's sampled sine/cosine eigenvectors, one column per mode."""
    variant = HankelVariant.coerce(variant)
    h, angles = mode_angles(variant, n)
    if variant == HankelVariant.SET1:
        entries = np.arange(1, n + 1)
        return np.sin(np.pi * h * np.outer(entries, angles)).astype(complex)
    if variant == HankelVariant.SET2:
        entries = np.arange(1, n + 1) - 0.5
        return np.sin(np.pi * h * np.outer(entries, angles)).astype(complex)
    if variant == HankelVariant.SET3:
        entries = np.arange(n)
        return np.cos(np.pi * h * np.outer(entries, angles)).astype(complex)
    entries = np.arange(1, n + 1) - 0.5
    return np.cos(np.pi * h * np.outer(entries, angles)).astype(complex)


def gevp_eigenpairs(alpha, beta, n: int, variant) -> EigenSolution:
    """All n eigenpairs of the pencil built from two shared-bandwidth bands.

    The eigenvalue of mode j is the ratio of the two symbols at that mode's
    angle; the eigenvector is the variant's sampled sine or cosine.  Raises
    :class:`SingularPencilError` when the denominator symbol vanishes at a
    sampled angle.
    """
    alpha, beta = as_band(alpha), as_band(beta)
    variant = HankelVariant.coerce(variant)
    if alpha.size != beta.size:
        raise BadBandwidthError(
            f"bands must share a bandwidth, got m={alpha.size - 1} and m={beta.size - 1}"
        )
    m = alpha.size - 1
    if not 1 <= m <= n - 1:
        raise BadBandwidthError(f"need 1 <= m <= n-1, got m={m}, n={n}")
    h, angles = mode_angles(variant, n)
    thetas = np.pi * h * angles
    denom = symbol(beta, thetas)
    floor = SYMBOL_ZERO_RTOL * float(np.sum(np.abs(beta)))
    bad = np.flatnonzero(np.abs(denom) < floor)
    if bad.size:
        raise SingularPencilError(
            f"denominator symbol vanishes at mode angle index {angles[bad[0]]}"
        )
    values = symbol(alpha, thetas) / denom
    return EigenSolution(
        modes=np.arange(1, n + 1),
        values=values,
        vectors=eigenvector_basis(variant, n),
        provenance=ANALYTIC,
        h=h,
    )


def _quadratic_mode_coeffs(alpha, beta, cos_angle):
    a_hat = beta[0] * beta[3] - 2.0 * beta[1] ** 2 + 2.0 * (
        beta[2] * beta[3] - beta[1] ** 2
    ) * cos_angle
    b_hat = (
        4.0 * alpha[1] * beta[1]
        - beta[0] * alpha[3]
        - alpha[0] * beta[3]
        - 2.0 * (beta[2] * alpha[3] - 2.0 * alpha[1] * beta[1] + alpha[2] * beta[3]) * cos_angle
    )
    c_hat = alpha[0] * alpha[3] - 2.0 * alpha[1] ** 2 + 2.0 * (
        alpha[2] * alpha[3] - alpha[1] ** 2
    ) * cos_angle
    return a_hat, b_hat, c_hat


def corner_block_quadratic_bands(alpha, beta):
    """The three order-1 bands whose quadratic pencil condenses the corner-block pencil.

    Returns ascending-power bands ``(d, c, b)`` for ``lam^2 B + lam C + D = 0``:
    position k in the result multiplies ``lam^k``.
    """
    alpha = np.asarray(alpha, dtype=complex)
    beta = np.asarray(beta, dtype=complex)
    band_b = np.array([beta[0] * beta[3] - 2.0 * beta[1] ** 2, beta[2] * beta[3] - beta[1] ** 2])
    band_c = np.array(
        [
            4.0 * alpha[1] * beta[1] - beta[0] * alpha[3] - alpha[0] * beta[3],
            2.0 * alpha[1] * beta[1] - beta[2] * alpha[3] - alpha[2] * beta[3],
        ]
    )
    band_d = np.array([alpha[0] * alpha[3] - 2.0 * alpha[1] ** 2, alpha[2] * alpha[3] - alpha[1] ** 2])
    return band_d, band_c, band_b


def _recover_vector_numerically(alpha, beta, half_n, lam):
    # local import: the oracle depends on nothing in this module
    from .oracle import inverse_iteration

    a = build_corner_block(alpha, half_n)
    b = build_corner_block(beta, half_n)
    return inverse_iteration(a, b, lam)


def corner_block_eigenpairs(alpha, beta, half_n: int) -> EigenSolution:
    """Every eigenpair of a corner-overlapped block-diagonal pencil.

    Modes ``2j-1`` and ``2j`` carry the two roots of a scalar quadratic per
    interior angle ("-" root first, "+" root second); the final mode
    ``2*half_n+1`` is the flat ratio of the odd diagonal entries with an
    alternating odd-entry eigenvector.
    """
    alpha = np.asarray(alpha, dtype=complex)
    beta = np.asarray(beta, dtype=complex)
    if alpha.shape != (4,) or beta.shape != (4,):
        raise ValueError("corner-block pencils take exactly four parameters per side")
    if half_n < 1:
        raise TooSmallError(f"half_n={half_n} must be at least 1")
    if beta[3] == 0:
        raise SingularPencilError("odd-diagonal parameter beta[3] must be nonzero")
    n = half_n
    h = 1.0 / (n + 1)
    dim = 2 * n + 1
    modes, values, columns = [], [], []
    notes = []

    even_grid = np.arange(1, n + 1)

    def mode_vector(angle_index, lam):
        even = np.zeros(n + 2, dtype=complex)  # even[k] = entry 2k, padded ends
        even[1: n + 1] = np.sin(angle_index * np.pi * even_grid * h)
        denom = lam * beta[3] - alpha[3]
        if abs(denom) < 1e-12 * (abs(lam * beta[3]) + abs(alpha[3]) + 1.0):
            return None
        ratio = (alpha[1] - lam * beta[1]) / denom
        x = np.zeros(dim, dtype=complex)
        x[1::2] = even[1: n + 1]                      # entries 2k
        x[0::2] = ratio * (even[: n + 1] + even[1:])  # entries 2k+1
        return x

    for j in range(1, n + 1):
        cos_angle = np.cos(j * np.pi * h)
        a_hat, b_hat, c_hat = _quadratic_mode_coeffs(alpha, beta, cos_angle)
        if abs(a_hat) < QUADRATIC_DEGENERACY_TOL:
            if abs(b_hat) < QUADRATIC_DEGENERACY_TOL:
                raise DegenerateQuadraticError(
                    f"quadratic and linear coefficients both vanish at angle index {j}"
                )
            pair = [(2 * j - 1, -c_hat / b_hat)]
            notes.append(f"mode {2 * j} dropped: quadratic degenerated to linear at angle index {j}")
        else:
            disc = np.sqrt(complex(b_hat * b_hat - 4.0 * a_hat * c_hat))
            pair = [
                (2 * j - 1, (-b_hat - disc) / (2.0 * a_hat)),
                (2 * j, (-b_hat + disc) / (2.0 * a_hat)),
            ]
        for mode, lam in pair:
            vec = mode_vector(j, lam)
            if vec is None:
                warnings.warn(
                    f"odd-entry recursion divides by zero for mode {mode}; "
                    "recovering the eigenvector numerically",
                    RuntimeWarning,
                    stacklevel=2,
                )
                vec = _recover_vector_numerically(alpha, beta, half_n, lam)
                notes.append(f"mode {mode} eigenvector recovered numerically")
            modes.append(mode)
            values.append(lam)
            columns.append(vec)

    flat = np.zeros(dim, dtype=complex)
    flat[0::2] = (-1.0) ** np.arange(n + 1)  # entries 1, 3, ..., 2n+1
    modes.append(2 * n + 1)
    values.append(alpha[3] / beta[3])
    columns.append(flat)

    return EigenSolution(
        modes=np.array(modes),
        values=np.array(values),
        vectors=np.column_stack(columns),
        provenance=ANALYTIC,
        h=h,
        notes=tuple(notes),
    )


def fem_p2_eigenpairs(n_elems: int) -> EigenSolution:
    """Closed-form eigenpairs of the quadratic-element stiffness/mass pencil.

    Three branches: a lower branch for modes 1..n-1, the flat eigenvalue
    ``10 n^2`` at mode n, and an upper branch for modes n+1..2n-1 sampled at
    the reflected angle index ``j - n``.
    """
    if n_elems < 2:
        raise TooSmallError(f"need at least 2 elements, got {n_elems}")
    n = n_elems
    h = 1.0 / n
    dim = 2 * n - 1
    values = np.empty(dim, dtype=complex)
    vectors = np.zeros((dim, dim), dtype=complex)
    even_grid = np.arange(n + 1)
    for j in range(1, dim + 1):
        if j == n:
            values[j - 1] = 10.0 * n * n
            vectors[0::2, j - 1] = (-1.0) ** np.arange(n)  # odd entries alternate
            continue
        angle_index = j if j < n else j - n
        c = np.cos(angle_index * np.pi * h)
        root_term = np.sqrt(124.0 + 112.0 * c - 11.0 * c * c)
        sign = -1.0 if j < n else 1.0
        lam = 4.0 * (13.0 + 2.0 * c + sign * root_term) / (3.0 - c) * n * n
        values[j - 1] = lam
        scaled = lam * h * h
        factor = (40.0 + scaled) / (80.0 - 8.0 * scaled)
        even = np.sin(angle_index * np.pi * even_grid * h)  # even[k] = entry 2k; ends vanish
        vectors[1::2, j - 1] = even[1: n]                   # entries 2k, k=1..n-1
        vectors[0::2, j - 1] = factor * (even[: n] + even[1:])  # entries 2k+1
    return EigenSolution(
        modes=np.arange(1, dim + 1),
        values=values,
        vectors=vectors,
        provenance=ANALYTIC,
        h=h,
    )


def fem_p3_eigenvalues(n_elems: int) -> np.ndarray:
    """Eigenvalues of the cubic-element stiffness/mass pencil, ascending.

    Each interior angle contributes the three roots of a scalar cubic in the
    mesh-scaled eigenvalue; the element-local modes contribute ``10 n^2``
    and ``42 n^2`` exactly.  Eigenvectors are not available in closed form
    and can be recovered with :func:`specmat.oracle.inverse_iteration`.
    """
    if n_elems < 2:
        raise TooSmallError(f"need at least 2 elements, got {n_elems}")
    n = n_elems
    h = 1.0 / n
    values = []
    for j in range(1, n):
        zeta = np.cos(j * np.pi * h)
        coeffs = (
            -25200.0 * (1.0 - zeta),
            360.0 * (32.0 + 3.0 * zeta),
            -30.0 * (18.0 - zeta),
            4.0 + zeta,
        )
        values.extend(poly_roots(coeffs) / (h * h))
    values.append(10.0 * n * n)
    values.append(42.0 * n * n)
    values = np.asarray(values, dtype=complex)
    order = np.lexsort((values.imag, values.real))
    return values[order]


@dataclass
class PolynomialPencil:
    """Coefficient bands of ``P(lam) = sum_k lam^k A_k`` over one variant.

    ``bands[k]`` holds the band of the k-th power's matrix; all bands share
    one bandwidth, and every coefficient matrix is assembled with the same
    corner-correction variant.
    """

    bands: tuple
    variant: HankelVariant
    n: int

    def __post_init__(self):
        self.bands = tuple(as_band(b) for b in self.bands)
        self.variant = HankelVariant.coerce(self.variant)
        if len(self.bands) < 2:
            raise ValueError("a polynomial pencil needs degree q >= 1 (at least two bands)")
        widths = {b.size for b in self.bands}
        if len(widths) != 1:
            raise BadBandwidthError("all coefficient bands must share one bandwidth")
        m = self.bands[0].size - 1
        if not 1 <= m <= self.n - 1:
            raise BadBandwidthError(f"need 1 <= m <= n-1, got m={m}, n={self.n}")

    @property
    def degree(self) -> int:
        return len(self.bands) - 1

    @property
    def bandwidth(self) -> int:
        return self.bands[0].size - 1


def pevp_eigenpairs(pencil: PolynomialPencil) -> PolynomialEigenSolution:
    """Per-mode roots of a polynomial pencil built from shared-bandwidth bands.

    Mode j's eigenvalues are the roots of the scalar polynomial whose k-th
    coefficient is the k-th band's symbol at mode j's angle; the variant's
    sampled eigenvector is shared by all of that mode's roots.  Modes whose
    leading symbol vanishes are flagged and return fewer roots.
    """
    h, angles = mode_angles(pencil.variant, pencil.n)
    thetas = np.pi * h * angles
    basis = eigenvector_basis(pencil.variant, pencil.n)
    floors = [SYMBOL_ZERO_RTOL * float(np.sum(np.abs(b))) for b in pencil.bands]
    mode_roots = []
    drops = []
    for i, theta in enumerate(thetas):
        coeffs = np.array([symbol(b, theta) for b in pencil.bands])
        degree = pencil.degree
        while degree >= 1 and abs(coeffs[degree]) < floors[degree]:
            degree -= 1
        if degree < pencil.degree:
            drops.append(i + 1)
        if degree == 0:
            mode_roots.append(np.empty(0, dtype=complex))
            continue
        mode_roots.append(poly_roots(coeffs[: degree + 1]))
    return PolynomialEigenSolution(
        modes=np.arange(1, pencil.n + 1),
        mode_roots=mode_roots,
        vectors=basis,
        h=h,
        degree_drops=tuple(drops),
    )


def tensor_eigenpairs(left: EigenSolution, right: EigenSolution) -> EigenSolution:
    """Eigenpairs of a two-factor tensor pencil by sum-and-product composition.

    Pair (j, k) has eigenvalue ``left_j + right_k`` and eigenvector
    ``kron(x_j, y_k)``; the result enumerates pairs with the right factor
    fastest.
    """
    count = left.n_modes * right.n_modes
    values = np.add.outer(left.values, right.values).reshape(count)
    columns = [
        kron(left.vectors[:, j], right.vectors[:, k])
        for j in range(left.n_modes)
        for k in range(right.n_modes)
    ]
    provenance = ANALYTIC if left.provenance == right.provenance == ANALYTIC else NUMERIC
    return EigenSolution(
        modes=np.arange(1, count + 1),
        values=values,
        vectors=np.column_stack(columns),
        provenance=provenance,
    )


def scale_pencil(sol: EigenSolution, c1, c2) -> EigenSolution:
    """Spectrum of the pencil after scaling its two sides by constants.

    If ``A x = lam B x`` then ``c1 A x = (lam c1 / c2) c2 B x``, so the
    eigenvalues pick up the factor ``c1 / c2`` and the eigenvectors are
    untouched.
    """
    c1, c2 = complex(c1), complex(c2)
    if c1 == 0 or c2 == 0:
        raise ZeroScaleError("scaling constants must be nonzero")
    return dataclasses.replace(sol, values=sol.values * (c1 / c2))
