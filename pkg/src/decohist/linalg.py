"""Dense complex linear algebra: unitarity checks, operator norms, unitary spectra."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import DimensionMismatchError, NotUnitaryError

MAX_DIM = 64
UNITARY_TOL = 1e-10

# Eigenphases this close to 1 wrap around to 0 so that e.g. the identity
# reports phase 0 rather than 1 - (roundoff).
_PHASE_WRAP = 1e-12


def spectral_tol(dim: int) -> float:
    """Reconstruction tolerance for spectral decompositions: 1e-10 per dimension."""
    return 1e-10 * dim


def as_complex_matrix(matrix) -> np.ndarray:
    """Coerce input to a square complex128 array with finite entries.

    Dimensions outside 1..MAX_DIM are rejected; dense algorithms are only
    supported at desk scale.
    """
    a = np.asarray(matrix, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {a.shape}")
    dim = a.shape[0]
    if not 1 <= dim <= MAX_DIM:
        raise DimensionMismatchError(f"dimension {dim} outside supported range 1..{MAX_DIM}")
    if not (np.isfinite(a.real).all() and np.isfinite(a.imag).all()):
        raise ValueError("matrix contains non-finite entries")
    return a


def dagger(matrix: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(matrix).conj().T


def validate_unitary(matrix, tol: float = UNITARY_TOL) -> bool:
    """True iff ||M†M - 1||_F <= tol * dim."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = as_complex_matrix(matrix)
    dim = a.shape[0]
    return bool(np.linalg.norm(dagger(a) @ a - np.eye(dim)) <= tol * dim)


def require_unitary(matrix, tol: float = UNITARY_TOL) -> np.ndarray:
    """Return the matrix as complex128 or raise NotUnitaryError."""
    a = as_complex_matrix(matrix)
    if not validate_unitary(a, tol):
        raise NotUnitaryError(f"matrix of dimension {a.shape[0]} is not unitary at tol {tol}")
    return a


def operator_norm(matrix) -> float:
    """Largest singular value (the norm induced by the vector 2-norm)."""
    return float(np.linalg.norm(as_complex_matrix(matrix), 2))


@dataclass(frozen=True)
class UnitarySpectrum:
    """Eigenphases in [0, 1), ascending, with a paired orthonormal eigenbasis.

    Column j of ``eigenvectors`` belongs to ``phases[j]``; the represented
    unitary is sum_j exp(2*pi*i*phases[j]) |v_j><v_j|.
    """

    phases: np.ndarray
    eigenvectors: np.ndarray

    @property
    def dim(self) -> int:
        return len(self.phases)

    def reconstruct(self) -> np.ndarray:
        """Rebuild the unitary from phases and eigenvectors."""
        eigenvalues = np.exp(2j * np.pi * self.phases)
        return (self.eigenvectors * eigenvalues) @ dagger(self.eigenvectors)


def unitary_spectrum(matrix, tol: float = UNITARY_TOL) -> UnitarySpectrum:
    """Spectral decomposition of a unitary matrix.

    Uses a complex Schur reduction: for a unitary (hence normal) input the
    Schur factor is diagonal up to roundoff, so the Schur basis is an
    orthonormal eigenbasis even in the presence of degenerate eigenvalues.
    Phases are reported in [0, 1), sorted ascending with stable pairing.
    """
    u = require_unitary(matrix, tol)
    t, z = scipy.linalg.schur(u, output="complex")
    phases = (np.angle(np.diagonal(t)) / (2.0 * np.pi)) % 1.0
    phases[phases >= 1.0 - _PHASE_WRAP] = 0.0
    order = np.argsort(phases, kind="stable")
    return UnitarySpectrum(phases=phases[order], eigenvectors=np.ascontiguousarray(z[:, order]))
