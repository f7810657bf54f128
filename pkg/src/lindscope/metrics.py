"""Scalar structure metrics of a generator and its dynamical regime.

Two numbers organize the behavior of a Markovian generator:

* dissipative strength ``delta`` -- the operator norm of its Hermitian
  part, i.e. the worst-case exponential rate of Hilbert-Schmidt norm
  change over all operator directions;
* nonnormality ``eta`` -- the norm of the commutator of the generator
  with its adjoint, which vanishes exactly for normal generators and
  measures directional mixing in operator space.

Their dimensionless ratio ``kappa = eta / delta**2`` separates weakly
nonnormal, crossover and strongly nonnormal regimes; it is undefined when
``delta`` vanishes (an anti-Hermitian generator is normal, so a diverging
ratio there would be a normalization artifact, not physics).

Zero tests are relative: ``delta`` counts as zero below
``ZERO_RTOL * ||S||`` and ``eta`` below ``ETA_RTOL * ||S||**2``, which
makes every classification invariant under rescaling the generator.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import NumericalError
from .linalg import (
    commutator,
    dagger,
    eigenvalues_general,
    hermitian_eigenvalues,
    spectral_norm,
)
from .superop import LindbladModel, Superoperator, decompose, liouvillian

__all__ = [
    "ZERO_RTOL",
    "ETA_RTOL",
    "STRUCTURED_ATOL",
    "Regime",
    "RegimeThresholds",
    "StructuralMetrics",
    "zero_tolerance",
    "eta_tolerance",
    "dissipative_strength",
    "nonnormality",
    "kappa",
    "bound_check",
    "classify",
    "compute_metrics",
    "StructuredDissipatorReport",
    "structured_dissipator_report",
]

ZERO_RTOL = 1e-10
ETA_RTOL = 1e-10
STRUCTURED_ATOL = 1e-10


class Regime(str, enum.Enum):
    HAMILTONIAN = "Hamiltonian"
    NORMAL_DISSIPATIVE = "NormalDissipative"
    WEAKLY_NONNORMAL = "WeaklyNonnormal"
    CROSSOVER = "Crossover"
    STRONGLY_NONNORMAL = "StronglyNonnormal"


@dataclass(frozen=True)
class RegimeThresholds:
    """Bands of kappa delimiting the nonnormal regimes.

    Defaults give one decade of crossover on each side of kappa = 1.
    """

    kappa_lo: float = 0.1
    kappa_hi: float = 10.0


@dataclass(frozen=True)
class StructuralMetrics:
    delta: float
    eta: float
    nd_norm: float
    kappa: float | None
    bound_margin: float
    generator_norm: float
    regime: Regime


def zero_tolerance(generator_norm: float) -> float:
    """Below this, delta counts as zero (relative test survives rescaling)."""
    return ZERO_RTOL * generator_norm


def eta_tolerance(generator_norm: float) -> float:
    """Below this, eta counts as zero; scales with the squared norm."""
    return ETA_RTOL * generator_norm**2


def dissipative_strength(s: Superoperator) -> float:
    """Operator norm of the Hermitian part of the generator.

    Since that part is Hermitian in the Hilbert-Schmidt geometry, its
    induced norm equals its largest eigenvalue magnitude.
    """
    herm, _ = decompose(s)
    ev = hermitian_eigenvalues(herm.matrix)
    return float(np.max(np.abs(ev)))


def nonnormality(s: Superoperator) -> float:
    """Norm of [S, S^dag]; zero exactly when the generator is normal.

    Cross-checked internally against the identity
    ``||[S, S^dag]|| = 2 ||[S_herm, S_skew]||`` (exact in arithmetic), so a
    construction bug cannot slip through as a plausible-looking number.
    """
    m = s.matrix
    eta = spectral_norm(commutator(m, dagger(m)))
    herm, skew = decompose(s)
    eta_parts = 2.0 * spectral_norm(commutator(herm.matrix, skew.matrix))
    scale = spectral_norm(m) ** 2
    if abs(eta - eta_parts) > 1e-8 * scale:
        raise NumericalError(
            f"nonnormality routes disagree: {eta:.6e} vs {eta_parts:.6e}"
        )
    return float(eta)


def kappa(s: Superoperator) -> float | None:
    """eta / delta**2, or None when delta is (relatively) zero."""
    delta = dissipative_strength(s)
    if delta <= zero_tolerance(spectral_norm(s.matrix)):
        return None
    return nonnormality(s) / delta**2


def bound_check(s: Superoperator) -> float:
    """Signed margin 2 * delta * ||S_skew|| - eta.

    The margin is reported signed, never clamped. Note that what
    submultiplicativity actually proves is the weaker
    ``eta = 2 ||[S_herm, S_skew]|| <= 4 * delta * ||S_skew||``,
    so this margin can legitimately go negative, down to
    ``-2 * delta * ||S_skew||``; roughly 3% of generic random generators
    land below zero. A margin below that provable floor would signal an
    implementation bug.
    """
    _, skew = decompose(s)
    delta = dissipative_strength(s)
    return 2.0 * delta * spectral_norm(skew.matrix) - nonnormality(s)


def _classify_values(
    delta: float,
    eta: float,
    k: float | None,
    generator_norm: float,
    thresholds: RegimeThresholds | None,
) -> Regime:
    th = thresholds if thresholds is not None else RegimeThresholds()
    if delta <= zero_tolerance(generator_norm):
        return Regime.HAMILTONIAN
    if eta <= eta_tolerance(generator_norm):
        return Regime.NORMAL_DISSIPATIVE
    if k is None:
        k = eta / delta**2
    if k < th.kappa_lo:
        return Regime.WEAKLY_NONNORMAL
    if k > th.kappa_hi:
        return Regime.STRONGLY_NONNORMAL
    return Regime.CROSSOVER


def classify(m: StructuralMetrics, thresholds: RegimeThresholds | None = None) -> Regime:
    """Assign the dynamical regime.

    Precedence follows the strict inclusions of the classes: the
    Hamiltonian test runs before the normality test, which runs before the
    kappa bands.
    """
    return _classify_values(m.delta, m.eta, m.kappa, m.generator_norm, thresholds)


def compute_metrics(
    s: Superoperator, thresholds: RegimeThresholds | None = None
) -> StructuralMetrics:
    """All structure metrics of one generator, with its regime label."""
    norm = spectral_norm(s.matrix)
    _, skew = decompose(s)
    delta = dissipative_strength(s)
    eta = nonnormality(s)
    nd_norm = spectral_norm(skew.matrix)
    k = None if delta <= zero_tolerance(norm) else eta / delta**2
    return StructuralMetrics(
        delta=delta,
        eta=eta,
        nd_norm=nd_norm,
        kappa=k,
        bound_margin=2.0 * delta * nd_norm - eta,
        generator_norm=norm,
        regime=_classify_values(delta, eta, k, norm, thresholds),
    )


@dataclass(frozen=True, eq=False)
class StructuredDissipatorReport:
    """Result of testing whether sum_k L_k^dag L_k is proportional to the identity.

    When it is, the dissipative part of the generator equals the jump map
    ``rho -> sum_k L_k rho L_k^dag`` minus ``gamma`` times the identity, so
    its spectrum is a uniform shift of the jump-map spectrum;
    ``shift_max_error`` records how well that holds numerically.
    """

    is_structured: bool
    gamma: float | None = None
    jump_map_spectrum: np.ndarray | None = None
    shift_max_error: float | None = None


def structured_dissipator_report(model: LindbladModel) -> StructuredDissipatorReport:
    """Detect structured dissipators and verify the uniform spectral shift.

    Only the jump operators enter: a Hamiltonian term, if any, is ignored
    here because the identity concerns the dissipative part alone.
    """
    d = model.dim
    total = np.zeros((d, d), dtype=complex)
    for jump in model.jumps:
        total = total + dagger(jump) @ jump
    gamma = float(np.trace(total).real) / d
    deviation = spectral_norm(total - gamma * np.eye(d))
    if gamma < 0 or deviation > STRUCTURED_ATOL * max(1.0, gamma):
        return StructuredDissipatorReport(is_structured=False)

    jump_map = np.zeros((d * d, d * d), dtype=complex)
    for jump in model.jumps:
        jump_map = jump_map + np.kron(jump.conj(), jump)
    jump_spectrum = eigenvalues_general(jump_map)

    dissipator = liouvillian(
        LindbladModel(d, np.zeros((d, d), dtype=complex), model.jumps, label="dissipator")
    )
    lind_spectrum = eigenvalues_general(dissipator.matrix)
    shift_error = float(np.max(np.abs(lind_spectrum - (jump_spectrum - gamma))))
    return StructuredDissipatorReport(
        is_structured=True,
        gamma=gamma,
        jump_map_spectrum=jump_spectrum,
        shift_max_error=shift_error,
    )
