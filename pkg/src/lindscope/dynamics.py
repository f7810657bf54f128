"""Propagator norms over time, amplification factors and envelopes.

The propagator norm ``||exp(t S)||`` bounds how much a perturbation of the
initial operator can grow by time t. Two normalized amplification factors
are reported side by side:

* ``a_paper``    = ||exp(t S)|| * exp(-t * delta), normalized by the
  dissipative-strength envelope;
* ``a_spectral`` = ||exp(t S)|| * exp(-t * alpha), normalized by the
  spectral abscissa alpha = max Re eigenvalue.

For a normal generator the spectral variant is identically 1, which is the
provable invariant asserted in tests; the dissipative-strength variant is
then exp(t * (alpha - delta)) <= 1. Keeping both makes transient growth
visible relative to either baseline.

Norms are computed by explicit exponential plus SVD at every grid point;
no norm-estimation shortcuts, since desk-scale dimensions make exactness
cheap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import ConfigError, RangeError
from .linalg import (
    EXP_SAFE_NORM,
    as_complex_matrix,
    eigenvalues_general,
    hs_norm,
    matrix_exp,
    spectral_norm,
)
from .metrics import (
    Regime,
    compute_metrics,
    dissipative_strength,
    nonnormality,
    zero_tolerance,
)
from .superop import Superoperator, apply, decompose

__all__ = [
    "MAX_STEPS",
    "DEFAULT_STEPS",
    "TimeGrid",
    "AmplificationSeries",
    "AppgBound",
    "CostEstimate",
    "default_grid",
    "propagator",
    "spectral_abscissa",
    "amplification_series",
    "gronwall_check",
    "normal_factorization_residual",
    "error_amplification",
    "truncated_appg_bound",
    "cost_estimate",
]

MAX_STEPS = 10**6
DEFAULT_STEPS = 200


@dataclass(frozen=True)
class TimeGrid:
    """Uniform grid of steps+1 points on [t_start, t_end]."""

    t_start: float
    t_end: float
    steps: int

    def __post_init__(self):
        if self.t_start < 0:
            raise ConfigError(f"t_start must be nonnegative, got {self.t_start}")
        if not self.t_end > self.t_start:
            raise ConfigError(
                f"t_end must exceed t_start, got [{self.t_start}, {self.t_end}]"
            )
        if not 1 <= self.steps <= MAX_STEPS:
            raise ConfigError(f"steps must be in 1..{MAX_STEPS}, got {self.steps}")

    @property
    def times(self) -> np.ndarray:
        return np.linspace(self.t_start, self.t_end, self.steps + 1)


@dataclass(frozen=True, eq=False)
class AmplificationSeries:
    """Propagator norm and its envelopes sampled on a time grid.

    ``gronwall_env`` is exp(t * delta); ``appg_env`` adds the
    skew-part norm and the leading commutator term,
    exp(t*delta + t*nd_norm + t^2*eta/4). The latter comes from a
    truncated expansion, so ``appg_satisfied`` is diagnostic output,
    never an asserted invariant.
    """

    times: np.ndarray
    prop_norm: np.ndarray
    a_paper: np.ndarray
    a_spectral: np.ndarray
    gronwall_env: np.ndarray
    appg_env: np.ndarray
    appg_satisfied: np.ndarray
    delta: float
    alpha: float


class AppgBound(NamedTuple):
    bound: float
    satisfied: bool


class CostEstimate(NamedTuple):
    base_cost: float
    kappa_overhead: float


def _check_range(s: Superoperator, t: float) -> None:
    if t < 0:
        raise RangeError(f"time must be nonnegative, got {t}")
    scaled = t * spectral_norm(s.matrix)
    if scaled > EXP_SAFE_NORM:
        raise RangeError(
            f"t * ||S|| = {scaled:.6g} exceeds safe range {EXP_SAFE_NORM:g}; "
            "subdivide the interval"
        )


def default_grid(s: Superoperator, steps: int = DEFAULT_STEPS) -> TimeGrid:
    """Grid covering the intrinsic timescale: [0, 5/delta] for dissipative
    generators, [0, 10/||S||] otherwise, [0, 10] for the zero generator."""
    norm = spectral_norm(s.matrix)
    delta = dissipative_strength(s)
    if delta > zero_tolerance(norm):
        t_end = 5.0 / delta
    elif norm > 0.0:
        t_end = 10.0 / norm
    else:
        t_end = 10.0
    return TimeGrid(0.0, t_end, steps)


def propagator(s: Superoperator, t: float) -> Superoperator:
    """exp(t S) as a superoperator; t * ||S|| must stay in the safe range."""
    _check_range(s, t)
    return Superoperator(s.dim, matrix_exp(t * s.matrix))


def spectral_abscissa(s: Superoperator) -> float:
    """Largest real part over the generator's eigenvalues."""
    return float(np.max(eigenvalues_general(s.matrix).real))


def amplification_series(s: Superoperator, grid: TimeGrid) -> AmplificationSeries:
    """Propagator norms, both amplification factors and both envelopes."""
    _check_range(s, grid.t_end)
    _, skew = decompose(s)
    delta = dissipative_strength(s)
    eta = nonnormality(s)
    nd_norm = spectral_norm(skew.matrix)
    alpha = spectral_abscissa(s)

    times = grid.times
    prop = np.array([spectral_norm(matrix_exp(t * s.matrix)) for t in times])
    with np.errstate(over="ignore"):
        a_paper = prop * np.exp(-delta * times)
        a_spectral = prop * np.exp(-alpha * times)
        gronwall_env = np.exp(delta * times)
        appg_env = np.exp(delta * times + nd_norm * times + eta * times**2 / 4.0)
    satisfied = prop <= appg_env * (1.0 + 1e-9)
    return AmplificationSeries(
        times=times,
        prop_norm=prop,
        a_paper=a_paper,
        a_spectral=a_spectral,
        gronwall_env=gronwall_env,
        appg_env=appg_env,
        appg_satisfied=satisfied,
        delta=delta,
        alpha=alpha,
    )


def gronwall_check(s: Superoperator, rho0, grid: TimeGrid) -> float:
    """Minimum over the grid of exp(t*delta)*||rho0|| - ||rho(t)||.

    The envelope bounds the evolved Hilbert-Schmidt norm for every
    generator, so the result is nonnegative up to roundoff.
    """
    rho0 = as_complex_matrix(rho0, s.dim, s.dim)
    _check_range(s, grid.t_end)
    delta = dissipative_strength(s)
    norm0 = hs_norm(rho0)
    margins = [
        math.exp(delta * t) * norm0 - hs_norm(apply(propagator(s, t), rho0))
        for t in grid.times
    ]
    return float(min(margins))


def normal_factorization_residual(s: Superoperator, t: float) -> float:
    """||exp(t S) - exp(t S_herm) exp(t S_skew)||.

    Vanishes (to roundoff) exactly when the generator is normal, because
    then the Hermitian and anti-Hermitian parts commute; generically
    positive otherwise, so it witnesses nonnormality dynamically.
    """
    _check_range(s, t)
    herm, skew = decompose(s)
    full = matrix_exp(t * s.matrix)
    factored = matrix_exp(t * herm.matrix) @ matrix_exp(t * skew.matrix)
    return spectral_norm(full - factored)


def error_amplification(s: Superoperator, t: float, eps: float) -> float:
    """Worst-case state error eps * ||exp(t S)|| from a propagator error eps."""
    if eps < 0:
        raise ConfigError(f"eps must be nonnegative, got {eps}")
    _check_range(s, t)
    return eps * spectral_norm(matrix_exp(t * s.matrix))


def truncated_appg_bound(s: Superoperator, t: float) -> AppgBound:
    """Truncated interaction-picture envelope and whether the norm sits under it.

    bound = exp(t*delta) * exp(t*||S_skew|| + t^2*eta/4). Higher-order
    nested-commutator terms are dropped, so this is a diagnostic, not a
    proven upper bound; the flag is reported, never asserted.
    """
    _check_range(s, t)
    _, skew = decompose(s)
    delta = dissipative_strength(s)
    eta = nonnormality(s)
    nd_norm = spectral_norm(skew.matrix)
    with np.errstate(over="ignore"):
        bound = float(np.exp(delta * t + nd_norm * t + eta * t * t / 4.0))
    prop = spectral_norm(matrix_exp(t * s.matrix))
    return AppgBound(bound=bound, satisfied=bool(prop <= bound * (1.0 + 1e-9)))


def cost_estimate(s: Superoperator, t: float, eps_star: float) -> CostEstimate:
    """Heuristic simulation cost with unit big-O constants and natural log.

    base_cost = t * rate + log(1/eps_star), where rate is the dissipative
    strength, or half the generator norm for (relatively) zero dissipation.
    kappa_overhead adds kappa in the strongly nonnormal regime and a unit
    constant in the crossover regime. Constants are arbitrary by
    construction; the estimate is reported, never asserted against any
    external algorithm.
    """
    if not 0.0 < eps_star < 1.0:
        raise ConfigError(f"eps_star must lie in (0, 1), got {eps_star}")
    if t < 0:
        raise RangeError(f"time must be nonnegative, got {t}")
    norm = spectral_norm(s.matrix)
    delta = dissipative_strength(s)
    rate = delta if delta > zero_tolerance(norm) else 0.5 * norm
    base = t * rate + math.log(1.0 / eps_star)
    m = compute_metrics(s)
    if m.regime is Regime.STRONGLY_NONNORMAL and m.kappa is not None:
        overhead = m.kappa
    elif m.regime is Regime.CROSSOVER:
        overhead = 1.0
    else:
        overhead = 0.0
    return CostEstimate(base_cost=base, kappa_overhead=overhead)
