"""Leapfrog integration and the slot-variable Metropolis correction.

The correction works off a single slot value v: drawn fresh from
Uniform(0, 1) it gives the usual reversible accept rule; kept persistent
in [-1, 1) and advanced externally it gives the non-reversible rule used
by the persistent-momentum Langevin variant.
"""

from __future__ import annotations

import math
from typing import Any

import numpy as np

from .core import TargetModel, kinetic_energy


class DivergenceError(Exception):
    """The integrator hit a non-finite gradient; carries the offending state."""

    def __init__(self, qH, pH, qO):
        super().__init__(f"non-finite gradient at qH={qH!r}, qO={qO!r}")
        self.qH = qH
        self.pH = pH
        self.qO = qO


def leapfrog(
    qH: np.ndarray,
    pH: np.ndarray,
    eps: float,
    model: TargetModel,
    qO: Any,
    grad: np.ndarray | None = None,
):
    """One half-kick / drift / half-kick step.

    ``grad`` is the cached gradient at the incoming qH (for the current
    qO); passing it saves one evaluation. Returns (qH, pH, grad_at_end) so
    callers can thread the cache through a trajectory: L chained steps
    cost L + 1 gradient evaluations.
    """
    if grad is None:
        grad = model.grad_qH(qH, qO)
    if not np.all(np.isfinite(grad)):
        raise DivergenceError(qH, pH, qO)
    half = 0.5 * eps
    pH = pH - half * grad
    qH = qH + eps * pH
    grad = model.grad_qH(qH, qO)
    if not np.all(np.isfinite(grad)):
        raise DivergenceError(qH, pH, qO)
    pH = pH - half * grad
    return qH, pH, grad


def multiple_leapfrogs(
    qH: np.ndarray,
    pH: np.ndarray,
    eps: float,
    L: int,
    model: TargetModel,
    qO: Any,
    grad: np.ndarray | None = None,
):
    """L leapfrog steps followed by momentum negation.

    The negation makes the map an involution: applying it twice returns
    the starting point. Returns (qH, pH, grad_at_end).
    """
    if L < 1:
        raise ValueError(f"L must be >= 1, got {L}")
    for _ in range(L):
        qH, pH, grad = leapfrog(qH, pH, eps, model, qO, grad)
    return qH, -pH, grad


def slot_accepts(v: float, log_ratio: float) -> bool:
    """Accept test |v| <= exp(log_ratio), overflow-safe, ties accept."""
    if math.isnan(log_ratio):
        return False
    return log_ratio >= 0.0 or abs(v) <= math.exp(log_ratio)


def rescale_slot(v: float, log_ratio: float) -> float:
    """v / exp(log_ratio) after an accept; |result| <= 1 by construction."""
    if v == 0.0:
        return 0.0
    if log_ratio >= -709.0:
        return v * math.exp(-log_ratio)
    # exp(-log_ratio) would overflow; the accept test guarantees
    # log|v| <= log_ratio, so go through log space.
    return math.copysign(math.exp(math.log(abs(v)) - log_ratio), v)


def mh_correction(
    s0: tuple[np.ndarray, np.ndarray],
    s: tuple[np.ndarray, np.ndarray],
    v: float,
    model: TargetModel,
    qO0: Any,
    qO: Any,
):
    """Slot-variable Metropolis correction between states s0 and s.

    Accepts s iff |v| <= exp(E0 - E) with E = U + K at each state; on
    accept the slot is rescaled to v * exp(E - E0), on reject the stored
    s0 is returned bit-for-bit with v unchanged. Infinite energy at s
    means rejection. Returns (qH, pH, v, accepted).
    """
    qH0, pH0 = s0
    qH, pH = s
    e0 = model.potential(qH0, qO0) + kinetic_energy(pH0)
    e = model.potential(qH, qO) + kinetic_energy(pH)
    d = e0 - e  # log acceptance threshold
    if math.isnan(d):
        # inf - inf: both endpoints have zero density; reject.
        d = -math.inf
    if slot_accepts(v, d):
        return qH, pH, rescale_slot(v, d), True
    return qH0, pH0, v, False


def advance_slot(v: float, delta: float) -> float:
    """Non-reversible slot update (v + 1 + delta) mod 2 - 1, range [-1, 1)."""
    return (v + 1.0 + delta) % 2.0 - 1.0
