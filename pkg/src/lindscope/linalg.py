"""Dense complex linear-algebra kernel.

All operations take and return plain numpy arrays of complex128. They are
pure functions: arguments are never mutated. Everything is dense; desk-scale
dimensions keep SVD, eigendecomposition and the matrix exponential cheap and
exact, so no sparse or iterative paths exist.
"""

from __future__ import annotations

import numpy as np
import scipy.linalg

from .errors import DimensionError, NotHermitianError, NumericalError, RangeError

__all__ = [
    "HERM_RTOL",
    "HERM_FLOOR",
    "EXP_SAFE_NORM",
    "as_complex_matrix",
    "dagger",
    "hs_inner",
    "hs_norm",
    "spectral_norm",
    "hermiticity_defect",
    "hermiticity_tolerance",
    "hermitian_eigenvalues",
    "eigenvalues_general",
    "matrix_exp",
    "commutator",
]

# Hermiticity test: ||M - M^dag||_2 <= max(HERM_RTOL * ||M||_2, HERM_FLOOR).
HERM_RTOL = 1e-10
HERM_FLOOR = 1e-14

# matrix_exp guarantees <= 1e-10 relative accuracy only up to this norm;
# callers with larger arguments must rescale their time grid.
EXP_SAFE_NORM = 50.0


def as_complex_matrix(a, rows: int | None = None, cols: int | None = None) -> np.ndarray:
    """Copy ``a`` into a fresh 2-D complex128 array, checking shape and finiteness."""
    m = np.array(a, dtype=complex)
    if m.ndim != 2:
        raise DimensionError(f"expected a matrix, got an array of rank {m.ndim}")
    if rows is not None and m.shape[0] != rows:
        raise DimensionError(f"expected {rows} rows, got {m.shape[0]}")
    if cols is not None and m.shape[1] != cols:
        raise DimensionError(f"expected {cols} columns, got {m.shape[1]}")
    if not np.isfinite(m).all():
        raise NumericalError("matrix contains NaN or Inf entries")
    return m


def _as2d(a) -> np.ndarray:
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2:
        raise DimensionError(f"expected a matrix, got an array of rank {m.ndim}")
    return m


def _square(a) -> np.ndarray:
    m = _as2d(a)
    if m.shape[0] != m.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {m.shape}")
    return m


def dagger(m) -> np.ndarray:
    """Conjugate transpose."""
    return _as2d(m).conj().T


def hs_inner(a, b) -> complex:
    """Hilbert-Schmidt inner product Tr[a^dag b] of two square matrices."""
    a = _square(a)
    b = _square(b)
    if a.shape != b.shape:
        raise DimensionError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return complex(np.vdot(a, b))


def hs_norm(a) -> float:
    """Hilbert-Schmidt (Frobenius) norm sqrt(Tr[a^dag a])."""
    return float(np.linalg.norm(_as2d(a)))


def spectral_norm(m) -> float:
    """Largest singular value of ``m``."""
    return float(np.linalg.svd(_as2d(m), compute_uv=False)[0])


def hermiticity_defect(m) -> float:
    """Spectral norm of ``m - m^dag``; zero iff ``m`` is Hermitian."""
    m = _square(m)
    return spectral_norm(m - m.conj().T)


def hermiticity_tolerance(m) -> float:
    """Largest Hermiticity defect treated as roundoff for this matrix."""
    return max(HERM_RTOL * spectral_norm(m), HERM_FLOOR)


def hermitian_eigenvalues(m) -> np.ndarray:
    """All eigenvalues of a Hermitian matrix, real and ascending.

    Raises NotHermitianError when the defect ``||m - m^dag||`` exceeds the
    relative tolerance, so silent use on a skewed matrix is impossible.
    """
    m = _square(m)
    defect = hermiticity_defect(m)
    if defect > hermiticity_tolerance(m):
        raise NotHermitianError(
            f"matrix is not Hermitian: defect {defect:.3e} exceeds tolerance"
        )
    return np.linalg.eigvalsh(m)


def eigenvalues_general(m) -> np.ndarray:
    """Full spectrum of a general (possibly nonnormal) matrix.

    Sorted ascending by real part, ties broken by imaginary part, so output
    is deterministic and directly comparable across runs.
    """
    m = _square(m)
    try:
        ev = np.linalg.eigvals(m)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigensolver failed to converge: {exc}") from exc
    order = np.lexsort((ev.imag, ev.real))
    return ev[order]


def matrix_exp(m, hermitian: bool = False) -> np.ndarray:
    """Matrix exponential exp(m).

    General matrices go through scaling-and-squaring with a Pade approximant;
    inputs flagged ``hermitian`` use an eigendecomposition instead. Accuracy
    is guaranteed only for spectral norm up to EXP_SAFE_NORM; beyond that a
    RangeError tells the caller to rescale its time grid.
    """
    m = _square(m)
    norm = spectral_norm(m)
    if norm > EXP_SAFE_NORM:
        raise RangeError(
            f"matrix norm {norm:.6g} exceeds safe range {EXP_SAFE_NORM:g}; "
            "rescale the time grid and compose shorter steps"
        )
    if hermitian:
        defect = hermiticity_defect(m)
        if defect > hermiticity_tolerance(m):
            raise NotHermitianError(
                f"matrix is not Hermitian: defect {defect:.3e} exceeds tolerance"
            )
        w, v = np.linalg.eigh(m)
        return (v * np.exp(w)) @ v.conj().T
    return scipy.linalg.expm(m)


def commutator(a, b) -> np.ndarray:
    """Commutator a@b - b@a of two equal-size square matrices."""
    a = _square(a)
    b = _square(b)
    if a.shape != b.shape:
        raise DimensionError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return a @ b - b @ a
