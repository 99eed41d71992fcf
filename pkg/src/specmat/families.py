"""Builders for every structured matrix family the library knows about.

All builders return dense complex arrays; structured storage buys nothing at
the sizes these families are meant for.  The four Hankel boundary-correction
variants differ only in which corner entries they touch and in the sign with
which the correction combines with the banded Toeplitz part.
"""

from __future__ import annotations

import enum

import numpy as np

from .errors import (
    BadBandwidthError,
    OverlapError,
    ShapeMismatchError,
    TooSmallError,
)
from .linalg import as_square, kron


class HankelVariant(enum.IntEnum):
    """Which corner-correction rule (and combination sign) to use.

    SET1/SET2 subtract their correction from the Toeplitz part, SET3/SET4
    add it.  SET2 and SET4 shift the band index by a half step, which pairs
    them with half-integer sampled eigenvectors.
    """

    SET1 = 1
    SET2 = 2
    SET3 = 3
    SET4 = 4

    @property
    def sign(self) -> int:
        return -1 if self in (HankelVariant.SET1, HankelVariant.SET2) else +1

    @classmethod
    def coerce(cls, value) -> "HankelVariant":
        if isinstance(value, cls):
            return value
        try:
            return cls(int(value))
        except (ValueError, TypeError) as exc:
            raise ValueError(f"unknown Hankel variant {value!r}") from exc


def as_band(values) -> np.ndarray:
    band = np.atleast_1d(np.asarray(values, dtype=complex))
    if band.ndim != 1 or band.size == 0:
        raise BadBandwidthError("a coefficient band must be a nonempty 1-D sequence")
    return band


def _check_bandwidth(m: int, n: int):
    if m < 1:
        raise BadBandwidthError(f"bandwidth m={m} must be at least 1")
    if m > n - 1:
        raise BadBandwidthError(f"bandwidth m={m} too large for dimension n={n}")


def build_toeplitz(band, n: int) -> np.ndarray:
    """Symmetric banded Toeplitz matrix with ``T[j, j+k] = band[|k|]``."""
    band = as_band(band)
    m = band.size - 1
    _check_bandwidth(m, n)
    lookup = np.zeros(n, dtype=complex)
    lookup[: m + 1] = band
    offsets = np.abs(np.arange(n)[:, None] - np.arange(n)[None, :])
    return lookup[offsets]


def build_hankel(band, n: int, variant) -> np.ndarray:
    """Corner Hankel correction for one of the four boundary rules.

    The top-left block follows the variant's index rule; the bottom-right
    block is its persymmetric reflection ``H[n-j+1, n-k+1] = H[j, k]``.
    Raises :class:`OverlapError` when ``2m - 1 > n`` would make the two
    corrections collide.
    """
    band = as_band(band)
    variant = HankelVariant.coerce(variant)
    m = band.size - 1
    if m < 1:
        raise BadBandwidthError(f"bandwidth m={m} must be at least 1")
    if m > n:
        raise BadBandwidthError(f"bandwidth m={m} too large for dimension n={n}")
    if 2 * m - 1 > n:
        raise OverlapError(
            f"corner corrections collide for m={m}, n={n} (need 2m-1 <= n)"
        )
    top = np.zeros((n, n), dtype=complex)
    if variant == HankelVariant.SET1:
        for j in range(1, m):
            for k in range(1, m - j + 1):
                top[j - 1, k - 1] = band[j + k]
    elif variant in (HankelVariant.SET2, HankelVariant.SET4):
        for j in range(1, m + 1):
            for k in range(1, m - j + 2):
                top[j - 1, k - 1] = band[j + k - 1]
    else:  # SET3: a halved corner entry plus the SET1 pattern shifted by one
        top[0, 0] = -band[0] / 2.0
        for j in range(1, m):
            for k in range(1, m - j + 1):
                top[j, k] = band[j + k]
    return top + top[::-1, ::-1]


def assemble_toeplitz_hankel(band, n: int, variant) -> np.ndarray:
    """Toeplitz part combined with the variant's Hankel correction.

    SET1/SET2 produce ``T - H``, SET3/SET4 produce ``T + H``.  The result is
    always symmetric and persymmetric.
    """
    band = as_band(band)
    variant = HankelVariant.coerce(variant)
    toeplitz = build_toeplitz(band, n)
    hankel = build_hankel(band, n, variant)
    return toeplitz + variant.sign * hankel


def build_corner_block(xi, half_n: int) -> np.ndarray:
    """Corner-overlapped block-diagonal matrix of dimension ``2*half_n + 1``.

    Odd diagonal entries are ``xi[3]``, even diagonal entries ``xi[0]``, the
    first off-diagonal is ``xi[1]``, and even rows couple two steps over via
    ``xi[2]``.  Adjacent 3x3 blocks share one corner entry.
    """
    xi = np.asarray(xi, dtype=complex)
    if xi.shape != (4,):
        raise ValueError("expected exactly four block parameters")
    if half_n < 1:
        raise TooSmallError(f"half_n={half_n} must be at least 1")
    dim = 2 * half_n + 1
    g = np.zeros((dim, dim), dtype=complex)
    for i in range(1, dim + 1):  # 1-based indices match the block pattern
        g[i - 1, i - 1] = xi[3] if i % 2 == 1 else xi[0]
        if i < dim:
            g[i - 1, i] = xi[1]
            g[i, i - 1] = xi[1]
        if i % 2 == 0 and i + 2 <= dim:
            g[i - 1, i + 1] = xi[2]
            g[i + 1, i - 1] = xi[2]
    return g


# quadratic-element parameters: (even diagonal, off-diagonal, even skip, odd diagonal)
FEM_P2_STIFFNESS_BAND = (14.0 / 3.0, -8.0 / 3.0, 1.0 / 3.0, 16.0 / 3.0)
FEM_P2_MASS_BAND = (4.0 / 15.0, 1.0 / 15.0, -1.0 / 30.0, 8.0 / 15.0)

# cubic-element local matrices in node order (left, interior1, interior2, right),
# in units of 1/h and h respectively
_FEM_P3_K_LOCAL = np.array(
    [
        [37.0 / 10.0, -189.0 / 40.0, 27.0 / 20.0, -13.0 / 40.0],
        [-189.0 / 40.0, 54.0 / 5.0, -297.0 / 40.0, 27.0 / 20.0],
        [27.0 / 20.0, -297.0 / 40.0, 54.0 / 5.0, -189.0 / 40.0],
        [-13.0 / 40.0, 27.0 / 20.0, -189.0 / 40.0, 37.0 / 10.0],
    ]
)
_FEM_P3_M_LOCAL = np.array(
    [
        [8.0 / 105.0, 33.0 / 560.0, -3.0 / 140.0, 19.0 / 1680.0],
        [33.0 / 560.0, 27.0 / 70.0, -27.0 / 560.0, -3.0 / 140.0],
        [-3.0 / 140.0, -27.0 / 560.0, 27.0 / 70.0, 33.0 / 560.0],
        [19.0 / 1680.0, -3.0 / 140.0, 33.0 / 560.0, 8.0 / 105.0],
    ]
)


def build_fem_p2(n_elems: int):
    """Stiffness and mass matrices of quadratic elements on a uniform unit-interval mesh.

    Homogeneous Dirichlet ends, ``n_elems`` elements, matrices of dimension
    ``2*n_elems - 1``.  Returns ``(K, M)`` scaled by ``1/h`` and ``h``.
    """
    if n_elems < 2:
        raise TooSmallError(f"need at least 2 elements, got {n_elems}")
    h = 1.0 / n_elems
    stiffness = build_corner_block(FEM_P2_STIFFNESS_BAND, n_elems - 1) / h
    mass = build_corner_block(FEM_P2_MASS_BAND, n_elems - 1) * h
    return stiffness, mass


def build_fem_p3(n_elems: int):
    """Stiffness and mass matrices of cubic elements on a uniform unit-interval mesh.

    Homogeneous Dirichlet ends, ``n_elems`` elements, matrices of dimension
    ``3*n_elems - 1``; element blocks overlap in the shared-node corner.
    """
    if n_elems < 2:
        raise TooSmallError(f"need at least 2 elements, got {n_elems}")
    h = 1.0 / n_elems
    dim = 3 * n_elems - 1
    stiffness = np.zeros((dim, dim), dtype=complex)
    mass = np.zeros((dim, dim), dtype=complex)
    for e in range(1, n_elems + 1):
        # global node numbers; 0 and 3*n_elems are the clamped boundary
        gdofs = (3 * e - 3, 3 * e - 2, 3 * e - 1, 3 * e)
        for a in range(4):
            if not 1 <= gdofs[a] <= dim:
                continue
            for b in range(4):
                if not 1 <= gdofs[b] <= dim:
                    continue
                stiffness[gdofs[a] - 1, gdofs[b] - 1] += _FEM_P3_K_LOCAL[a, b] / h
                mass[gdofs[a] - 1, gdofs[b] - 1] += _FEM_P3_M_LOCAL[a, b] * h
    return stiffness, mass


def assemble_tensor_pencil(a, b, c, d):
    """Two-factor tensor pencil ``(kron(a, d) + kron(b, c), kron(b, d))``.

    ``a, b`` must share one square shape and ``c, d`` another; the assembled
    pair has the sum-of-spectra property checked in the analytic module.
    """
    a, b, c, d = as_square(a), as_square(b), as_square(c), as_square(d)
    if a.shape != b.shape:
        raise ShapeMismatchError(f"left factors differ: {a.shape} vs {b.shape}")
    if c.shape != d.shape:
        raise ShapeMismatchError(f"right factors differ: {c.shape} vs {d.shape}")
    lhs = kron(a, d) + kron(b, c)
    rhs = kron(b, d)
    return lhs, rhs
