"""Shared state, energy, and model-interface types for all samplers.

A target is a distribution over a hybrid state (qH, qO): qH is the real
vector block updated by leapfrog dynamics, qO is an opaque model-owned
value (discrete vector, scalar, integer, ...) updated only through the
model's Metropolis-Hastings proposal families. Samplers never inspect qO;
they pass it back to the model. Models should use immutable qO values
(tuples, floats, ints) so recorded traces cannot alias mutated state.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Protocol, Sequence, runtime_checkable

import numpy as np


class ModelEvaluationError(Exception):
    """A model returned a non-finite potential where a finite one was required."""


@dataclass
class HybridState:
    """Joint chain state: position qH, momentum pH, other variables qO."""

    qH: np.ndarray
    pH: np.ndarray
    qO: Any

    def __post_init__(self):
        self.qH = np.asarray(self.qH, dtype=float)
        self.pH = np.asarray(self.pH, dtype=float)
        if self.qH.shape != self.pH.shape:
            raise ValueError(
                f"qH and pH must share a shape, got {self.qH.shape} vs {self.pH.shape}"
            )


@runtime_checkable
class Proposal(Protocol):
    """One MH proposal family Q(new qO | qH, qO)."""

    def sample(self, qH: np.ndarray, qO: Any, rng: np.random.Generator) -> Any: ...

    def log_density(self, qO_new: Any, qH: np.ndarray, qO: Any) -> float: ...


@runtime_checkable
class TargetModel(Protocol):
    """Potential, qH-gradient, and the qO proposal families of one target.

    ``potential`` may return +inf to encode zero density; samplers treat
    that as an automatic rejection. NaN is always an evaluation error.
    """

    n: int
    proposals: Sequence[Proposal]

    def potential(self, qH: np.ndarray, qO: Any) -> float: ...

    def grad_qH(self, qH: np.ndarray, qO: Any) -> np.ndarray: ...


@dataclass
class GradientCounter:
    """Counts distinct gradient evaluations; the paper-style cost metric."""

    count: int = 0

    def increment(self):
        self.count += 1

    def reset(self):
        self.count = 0


@dataclass
class CountingModel:
    """Wraps a model so every grad_qH call increments a GradientCounter."""

    inner: Any
    counter: GradientCounter = field(default_factory=GradientCounter)

    def __getattr__(self, name):
        return getattr(self.inner, name)

    @property
    def n(self) -> int:
        return self.inner.n

    @property
    def proposals(self):
        return self.inner.proposals

    def potential(self, qH, qO) -> float:
        return self.inner.potential(qH, qO)

    def grad_qH(self, qH, qO) -> np.ndarray:
        self.counter.increment()
        return self.inner.grad_qH(qH, qO)


def kinetic_energy(pH: np.ndarray) -> float:
    """Sum of squared momentum components over two."""
    return 0.5 * float(np.dot(pH, pH))


def total_energy(state: HybridState, model: TargetModel) -> float:
    """Potential plus kinetic energy of a hybrid state.

    Raises ModelEvaluationError if the potential is non-finite; kernels
    that want inf-as-reject semantics evaluate the potential directly.
    """
    u = model.potential(state.qH, state.qO)
    if not np.isfinite(u):
        raise ModelEvaluationError(
            f"non-finite potential {u!r} at qH={state.qH!r}, qO={state.qO!r}"
        )
    return u + kinetic_energy(state.pH)


def refresh_momentum(
    pH: np.ndarray, alpha: float, rng: np.random.Generator
) -> np.ndarray:
    """Partial momentum refresh: alpha * pH + sqrt(1 - alpha^2) * noise.

    alpha=0 is a full refresh (plain HMC); alpha=1 leaves pH unchanged.
    Always consumes one standard-normal vector from ``rng`` so streams stay
    aligned across alpha values.
    """
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must be in [0, 1], got {alpha}")
    noise = rng.standard_normal(pH.shape[0])
    return alpha * pH + np.sqrt(1.0 - alpha * alpha) * noise


def finite_difference_grad(
    potential: Callable[[np.ndarray, Any], float],
    qH: np.ndarray,
    qO: Any,
    step: float = 1e-5,
) -> np.ndarray:
    """Central finite differences of a potential w.r.t. qH."""
    qH = np.asarray(qH, dtype=float)
    grad = np.empty_like(qH)
    for i in range(qH.shape[0]):
        hi = qH.copy()
        lo = qH.copy()
        hi[i] += step
        lo[i] -= step
        grad[i] = (potential(hi, qO) - potential(lo, qO)) / (2.0 * step)
    return grad
