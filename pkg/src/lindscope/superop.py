"""Generators of Markovian open-system dynamics as explicit matrices.

Operators on a d-dimensional Hilbert space are vectorized by column
stacking, ``vec(A)[i + d*j] = A[i, j]``, so a map ``rho -> A rho B`` has
matrix ``kron(B.T, A)``. Column stacking makes vectorization an isometry
from the Hilbert-Schmidt inner product to the ordinary complex inner
product, which in turn makes the Hilbert-Schmidt adjoint of a
superoperator the plain conjugate transpose of its matrix.

All values are immutable after construction (arrays are frozen), so they
are safe to share across threads.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, DimensionError, ModelError
from .linalg import as_complex_matrix, dagger, hermiticity_defect, hermiticity_tolerance

__all__ = [
    "DEFAULT_DIM_CAP",
    "dim_cap",
    "LindbladModel",
    "Superoperator",
    "vectorize",
    "devectorize",
    "liouvillian",
    "adjoint",
    "decompose",
    "apply",
]

# Dense SVD / eigendecomposition / exponentials stay under seconds up to
# superoperators of size (32^2) x (32^2).
DEFAULT_DIM_CAP = 32


def dim_cap() -> int:
    """Hilbert-space dimension cap; LINDSCOPE_DIM_CAP overrides it (at your own risk)."""
    raw = os.environ.get("LINDSCOPE_DIM_CAP")
    if raw is None:
        return DEFAULT_DIM_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ConfigError(f"LINDSCOPE_DIM_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ConfigError(f"LINDSCOPE_DIM_CAP must be positive, got {cap}")
    return cap


def _frozen(m: np.ndarray) -> np.ndarray:
    m.setflags(write=False)
    return m


@dataclass(frozen=True, eq=False)
class LindbladModel:
    """Hamiltonian plus weighted jump operators, hbar = 1.

    Rates are absorbed into the jump operators (store sqrt(rate) * op), so
    there is no separate rate array that could fall out of sync.
    """

    dim: int
    hamiltonian: np.ndarray
    jumps: tuple[np.ndarray, ...] = ()
    label: str = ""

    def __post_init__(self):
        if self.dim < 1:
            raise ModelError(f"dimension must be positive, got {self.dim}")
        cap = dim_cap()
        if self.dim > cap:
            raise ModelError(
                f"dimension {self.dim} exceeds the cap {cap} "
                "(set LINDSCOPE_DIM_CAP to raise it at your own risk)"
            )
        h = as_complex_matrix(self.hamiltonian, self.dim, self.dim)
        defect = hermiticity_defect(h)
        if defect > hermiticity_tolerance(h):
            raise ModelError(
                f"hamiltonian is not Hermitian: defect {defect:.3e} exceeds tolerance"
            )
        jumps = tuple(as_complex_matrix(j, self.dim, self.dim) for j in self.jumps)
        object.__setattr__(self, "hamiltonian", _frozen(h))
        object.__setattr__(self, "jumps", tuple(_frozen(j) for j in jumps))


@dataclass(frozen=True, eq=False)
class Superoperator:
    """A linear map on operators, stored as its dense d^2 x d^2 matrix."""

    dim: int
    matrix: np.ndarray

    def __post_init__(self):
        if self.dim < 1:
            raise ModelError(f"dimension must be positive, got {self.dim}")
        m = as_complex_matrix(self.matrix, self.dim**2, self.dim**2)
        object.__setattr__(self, "matrix", _frozen(m))


def vectorize(a) -> np.ndarray:
    """Column-stack a square matrix into a vector: vec(A)[i + d*j] = A[i, j]."""
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {a.shape}")
    return a.flatten(order="F")


def devectorize(v, dim: int) -> np.ndarray:
    """Inverse of vectorize: reshape a length-d^2 vector back into a d x d matrix."""
    v = np.asarray(v, dtype=complex)
    if v.ndim != 1 or v.shape[0] != dim * dim:
        raise DimensionError(f"expected a vector of length {dim * dim}, got shape {v.shape}")
    return v.reshape((dim, dim), order="F")


def liouvillian(model: LindbladModel) -> Superoperator:
    """Matrix of rho -> -i[H, rho] + sum_k (L_k rho L_k^dag - {L_k^dag L_k, rho}/2).

    Under column stacking this is
        -i (kron(I, H) - kron(H.T, I))
        + sum_k [ kron(conj(L_k), L_k)
                  - kron(I, L_k^dag L_k)/2 - kron((L_k^dag L_k).T, I)/2 ].
    """
    d = model.dim
    eye = np.eye(d, dtype=complex)
    h = model.hamiltonian
    m = -1j * (np.kron(eye, h) - np.kron(h.T, eye))
    for jump in model.jumps:
        jdj = dagger(jump) @ jump
        m = m + np.kron(jump.conj(), jump)
        m = m - 0.5 * np.kron(eye, jdj) - 0.5 * np.kron(jdj.T, eye)
    return Superoperator(d, m)


def adjoint(s: Superoperator) -> Superoperator:
    """Hilbert-Schmidt adjoint; equals the conjugate transpose of the matrix."""
    return Superoperator(s.dim, dagger(s.matrix))


def decompose(s: Superoperator) -> tuple[Superoperator, Superoperator]:
    """Split into the Hermitian part (S + S^dag)/2 and anti-Hermitian part (S - S^dag)/2.

    The first drives Hilbert-Schmidt norm change, the second generates
    norm-preserving rotations in operator space; they sum back to S.
    """
    m = s.matrix
    md = dagger(m)
    return (
        Superoperator(s.dim, (m + md) / 2),
        Superoperator(s.dim, (m - md) / 2),
    )


def apply(s: Superoperator, rho) -> np.ndarray:
    """Apply the superoperator to a d x d operator."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (s.dim, s.dim):
        raise DimensionError(f"expected a {s.dim} x {s.dim} operator, got shape {rho.shape}")
    return devectorize(s.matrix @ vectorize(rho), s.dim)
