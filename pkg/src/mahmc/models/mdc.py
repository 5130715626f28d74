"""Mixed discrete-continuous benchmark target.

Joint density: u ~ N(0, 1), v | u ~ N(u, sigma_v^2), and n_flips
independent Bernoulli(1 / (1 + e^u)) bits w. The continuous block
qH = (u, v) is leapfrogged; qO = w is a tuple of 0/1 ints resampled from
its exact conditional (a Gibbs update, so its MH ratio is identically 1).
The exact u-marginal is N(0, 1), which drives the stationarity checks.
"""

from __future__ import annotations

import math

import numpy as np


def softplus(x: float) -> float:
    """log(1 + e^x) without overflow for large x."""
    if x > 0.0:
        return x + math.log1p(math.exp(-x))
    return math.log1p(math.exp(x))


def sigmoid(x: float) -> float:
    if x >= 0.0:
        return 1.0 / (1.0 + math.exp(-x))
    e = math.exp(x)
    return e / (1.0 + e)


class GibbsWProposal:
    """Exact conditional resample of all bits: w_i ~ Bernoulli(1/(1+e^u))."""

    def __init__(self, n_flips: int):
        self.n_flips = n_flips

    def sample(self, qH, qO, rng):
        p_one = sigmoid(-qH[0])  # 1/(1+e^u)
        return tuple(int(x) for x in (rng.random(self.n_flips) < p_one))

    def log_density(self, qO_new, qH, qO):
        # sum_i [w_i log p1 + (1-w_i) log(1-p1)] with p1 = 1/(1+e^u):
        # log p1 = -softplus(u), log(1-p1) = u - softplus(u).
        u = qH[0]
        ones = sum(qO_new)
        return -self.n_flips * softplus(u) + (self.n_flips - ones) * u


class MdcModel:
    def __init__(self, sigma_v: float = 0.04, n_flips: int = 20):
        self.sigma_v = sigma_v
        self.n_flips = n_flips
        self.n = 2
        self._inv_var = 1.0 / (sigma_v * sigma_v)
        self.proposals = [GibbsWProposal(n_flips)]

    def potential(self, qH, qO) -> float:
        u = qH[0]
        v = qH[1]
        ones = sum(qO)
        dv = v - u
        return (
            0.5 * u * u
            + 0.5 * dv * dv * self._inv_var
            + self.n_flips * softplus(u)
            - (self.n_flips - ones) * u
        )

    def grad_qH(self, qH, qO) -> np.ndarray:
        u = qH[0]
        v = qH[1]
        ones = sum(qO)
        dv_term = (v - u) * self._inv_var
        du = u - dv_term + self.n_flips * sigmoid(u) - (self.n_flips - ones)
        return np.array([du, dv_term])

    def qo_update(self, qH, qO, rng):
        """Exterior Gibbs update of the bit vector."""
        return self.proposals[0].sample(qH, qO, rng)

    def init_state(self, rng):
        """Draw an exact sample from the joint as the chain start."""
        u = rng.standard_normal()
        v = u + self.sigma_v * rng.standard_normal()
        qH = np.array([u, v])
        return qH, self.proposals[0].sample(qH, None, rng)
