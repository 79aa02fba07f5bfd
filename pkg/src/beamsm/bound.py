"""Set-membership bound delta(i).

Two modes:

* ``time_varying`` -- the parameter-dependent recursion
  delta(i) = beta * delta(i-1) + (1 - beta) * sqrt(alpha * W * sigma_hat^2)
  where W is the squared norm of the current full weight vector and
  sigma_hat^2 an externally supplied noise-power estimate.  alpha * W *
  sigma_hat^2 is the variance of the weight/noise inner product scaled by
  the tuning coefficient alpha, so the bound tracks the weight evolution
  and avoids over- or underbounding.
* ``fixed`` -- a constant bound; update calls leave it unchanged.

delta(0) in time-varying mode is initialized at the recursion's fixed point
for constant weights, sqrt(alpha * W0 * sigma_hat^2); an arbitrary start is
forgotten at rate beta anyway.
"""

from __future__ import annotations

import math

import numpy as np


class BoundTracker:
    """Recursive state of the update bound for one run."""

    def __init__(
        self,
        mode: str,
        delta0: float,
        alpha: float = 0.0,
        beta: float = 0.0,
        noise_power_estimate: float = 0.0,
        fixed_value: float = 0.0,
    ):
        self.mode = mode
        self.delta = float(delta0)
        self.alpha = alpha
        self.beta = beta
        self.noise_power_estimate = noise_power_estimate
        self.fixed_value = fixed_value

    @classmethod
    def fixed(cls, value: float) -> "BoundTracker":
        if value < 0:
            raise ValueError("fixed bound must be >= 0")
        return cls(mode="fixed", delta0=value, fixed_value=value)

    @classmethod
    def time_varying(
        cls,
        alpha: float,
        beta: float,
        noise_power_estimate: float,
        initial_weight_norm_sq: float,
    ) -> "BoundTracker":
        if alpha <= 1.0:
            raise ValueError("alpha must be > 1")
        if not 0.0 < beta < 1.0:
            raise ValueError("beta must lie in (0, 1)")
        if noise_power_estimate < 0 or initial_weight_norm_sq < 0:
            raise ValueError("noise power and weight norm must be >= 0")
        delta0 = math.sqrt(alpha * initial_weight_norm_sq * noise_power_estimate)
        return cls(
            mode="time_varying",
            delta0=delta0,
            alpha=alpha,
            beta=beta,
            noise_power_estimate=noise_power_estimate,
        )

    def update(self, weight_norm_sq: float) -> float:
        """Advance delta by one snapshot and return the new value.

        ``weight_norm_sq`` is ||T_r w_bar||^2 of the current full weight.
        Fixed mode ignores the input.
        """
        if weight_norm_sq < 0:
            raise ValueError("weight_norm_sq must be >= 0")
        if self.mode == "fixed":
            return self.delta
        target = math.sqrt(
            self.alpha * weight_norm_sq * self.noise_power_estimate
        )
        self.delta = self.beta * self.delta + (1.0 - self.beta) * target
        return self.delta


def init_bound(
    mode: str,
    alpha: float = 0.0,
    beta: float = 0.0,
    sigma_n_sq_est: float = 0.0,
    w0_norm_sq: float = 0.0,
    fixed_value: float = 0.0,
) -> BoundTracker:
    """Construct a tracker in either mode from plain parameters."""
    if mode == "fixed":
        return BoundTracker.fixed(fixed_value)
    if mode == "time_varying":
        return BoundTracker.time_varying(alpha, beta, sigma_n_sq_est, w0_norm_sq)
    raise ValueError(f"unknown bound mode {mode!r}")


def update_bound(tracker: BoundTracker, weight_norm_sq: float) -> float:
    return tracker.update(weight_norm_sq)


class SmoothedInputPowerEstimator:
    """Exponentially smoothed per-element input power, a pluggable stand-in
    for the unspecified noise-power estimator.

    Estimates mean |x_j|^2 across elements with window ``smoothing``; note
    this measures total input power (signal + interference + noise), an
    upper bound on the noise power, not a subspace-based noise estimate.
    """

    def __init__(self, smoothing: float = 0.99):
        if not 0.0 <= smoothing < 1.0:
            raise ValueError("smoothing must lie in [0, 1)")
        self.smoothing = smoothing
        self.value: float | None = None

    def update(self, x: np.ndarray) -> float:
        sample = float(np.vdot(x, x).real) / x.shape[0]
        if self.value is None:
            self.value = sample
        else:
            self.value = self.smoothing * self.value + (1.0 - self.smoothing) * sample
        return self.value
