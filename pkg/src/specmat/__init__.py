"""Structured matrix families with closed-form eigenpairs.

The package builds banded Toeplitz-plus-Hankel pencils, corner-overlapped
block-diagonal matrices, and 1D finite-element stiffness/mass pairs; produces
their eigenvalues and eigenvectors in closed form; cross-checks every formula
against an independent dense numeric oracle; and evaluates the
eigenvector-eigenvalue identity together with the trigonometric identities it
implies.
"""

from .errors import (
    BadBandwidthError,
    DegenerateQuadraticError,
    NoConvergenceError,
    NotHermitianError,
    OverlapError,
    ShapeMismatchError,
    SingularBError,
    SingularDenominatorError,
    SingularMatrixError,
    SingularPencilError,
    SpecmatError,
    TooLargeForGeneralPathError,
    TooSmallError,
    ZeroScaleError,
    ZeroVectorError,
)
from .families import (
    HankelVariant,
    assemble_tensor_pencil,
    assemble_toeplitz_hankel,
    build_corner_block,
    build_fem_p2,
    build_fem_p3,
    build_hankel,
    build_toeplitz,
)
from .identities import (
    IdentityReport,
    eve_identity_evp,
    eve_identity_gevp,
    minor_remove,
    trig_identity,
)
from .linalg import hermitian_eigen, kron, lu_solve, poly_roots
from .mmio import read_matrix_market, write_matrix_market
from .oracle import (
    OracleReport,
    attach_residuals,
    inverse_iteration,
    match_spectra,
    residual_gevp,
    solve_gevp_numeric,
    solve_pevp_numeric,
)
from .solution import EigenSolution, PolynomialEigenSolution
from .spectra import (
    PolynomialPencil,
    corner_block_eigenpairs,
    corner_block_quadratic_bands,
    fem_p2_eigenpairs,
    fem_p3_eigenvalues,
    gevp_eigenpairs,
    pevp_eigenpairs,
    scale_pencil,
    symbol,
    tensor_eigenpairs,
)

__version__ = "0.1.0"

__all__ = [
    "BadBandwidthError",
    "DegenerateQuadraticError",
    "EigenSolution",
    "HankelVariant",
    "IdentityReport",
    "NoConvergenceError",
    "NotHermitianError",
    "OracleReport",
    "OverlapError",
    "PolynomialEigenSolution",
    "PolynomialPencil",
    "ShapeMismatchError",
    "SingularBError",
    "SingularDenominatorError",
    "SingularMatrixError",
    "SingularPencilError",
    "SpecmatError",
    "TooLargeForGeneralPathError",
    "TooSmallError",
    "ZeroScaleError",
    "ZeroVectorError",
    "assemble_tensor_pencil",
    "assemble_toeplitz_hankel",
    "attach_residuals",
    "build_corner_block",
    "build_fem_p2",
    "build_fem_p3",
    "build_hankel",
    "build_toeplitz",
    "corner_block_eigenpairs",
    "corner_block_quadratic_bands",
    "eve_identity_evp",
    "eve_identity_gevp",
    "fem_p2_eigenpairs",
    "fem_p3_eigenvalues",
    "gevp_eigenpairs",
    "hermitian_eigen",
    "inverse_iteration",
    "kron",
    "lu_solve",
    "match_spectra",
    "minor_remove",
    "pevp_eigenpairs",
    "poly_roots",
    "read_matrix_market",
    "residual_gevp",
    "scale_pencil",
    "solve_gevp_numeric",
    "solve_pevp_numeric",
    "symbol",
    "tensor_eigenpairs",
    "trig_identity",
    "write_matrix_market",
]
