"""Containers for eigenpair results."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

import numpy as np

ANALYTIC = "analytic"
NUMERIC = "numeric"


@dataclass
class EigenSolution:
    """A batch of eigenpairs of a matrix pencil.

    ``vectors[:, i]`` pairs with ``values[i]`` and carries the 1-based mode
    label ``modes[i]`` assigned by whichever closed form or solver produced
    it.  ``h`` is the mesh parameter behind the mode angles, when there is
    one.  ``residuals`` holds relative pencil residuals once a caller has
    attached them (see :func:`specmat.oracle.attach_residuals`).
    """

    modes: np.ndarray
    values: np.ndarray
    vectors: np.ndarray
    provenance: str
    h: float | None = None
    residuals: np.ndarray | None = None
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        self.modes = np.asarray(self.modes, dtype=int)
        self.values = np.asarray(self.values, dtype=complex)
        self.vectors = np.asarray(self.vectors, dtype=complex)
        if self.vectors.ndim != 2:
            raise ValueError("vectors must be a 2-D array with one column per mode")
        if not (len(self.modes) == len(self.values) == self.vectors.shape[1]):
            raise ValueError("modes, values and vector columns must line up")
        if len(np.unique(self.modes)) != len(self.modes):
            raise ValueError("mode labels must be unique")
        norms = np.linalg.norm(self.vectors, axis=0)
        if np.any(norms == 0.0):
            raise ValueError("eigenvectors must be nonzero")
        if self.provenance not in (ANALYTIC, NUMERIC):
            raise ValueError(f"unknown provenance {self.provenance!r}")

    @property
    def n_modes(self) -> int:
        return len(self.values)

    @property
    def dim(self) -> int:
        return self.vectors.shape[0]

    def sorted_values(self) -> np.ndarray:
        """Eigenvalues ordered by (real part, imaginary part), ties by mode."""
        order = np.lexsort((self.modes, self.values.imag, self.values.real))
        return self.values[order]

    def normalized(self) -> "EigenSolution":
        """Copy with every eigenvector rescaled to unit Euclidean norm."""
        vecs = self.vectors / np.linalg.norm(self.vectors, axis=0)
        return dataclasses.replace(self, vectors=vecs)

    def value_for_mode(self, mode: int) -> complex:
        idx = np.flatnonzero(self.modes == mode)
        if idx.size != 1:
            raise KeyError(f"mode {mode} not present")
        return complex(self.values[idx[0]])

    def vector_for_mode(self, mode: int) -> np.ndarray:
        idx = np.flatnonzero(self.modes == mode)
        if idx.size != 1:
            raise KeyError(f"mode {mode} not present")
        return self.vectors[:, idx[0]]


@dataclass
class PolynomialEigenSolution:
    """Per-mode roots of a polynomial matrix pencil.

    Each mode contributes one shared eigenvector (a column of ``vectors``)
    and up to ``q`` eigenvalues, the roots of that mode's scalar polynomial.
    Modes where the leading coefficient vanished carry fewer roots and are
    listed in ``degree_drops``.
    """

    modes: np.ndarray
    mode_roots: list
    vectors: np.ndarray
    h: float | None = None
    degree_drops: tuple[int, ...] = ()

    def __post_init__(self):
        self.modes = np.asarray(self.modes, dtype=int)
        self.mode_roots = [np.asarray(r, dtype=complex) for r in self.mode_roots]
        self.vectors = np.asarray(self.vectors, dtype=complex)
        if len(self.modes) != len(self.mode_roots) or self.vectors.shape[1] != len(self.modes):
            raise ValueError("modes, roots and vector columns must line up")

    def all_values(self) -> np.ndarray:
        """Every eigenvalue, concatenated across modes."""
        if not self.mode_roots:
            return np.empty(0, dtype=complex)
        return np.concatenate(self.mode_roots)
