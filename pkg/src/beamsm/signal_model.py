"""Uniform linear array signal model.

Narrowband sources in the far field impinge on a ULA of m sensors.  Each
snapshot is x(i) = A s(i) + n(i) where A stacks the steering vectors of the
source directions, s(i) carries BPSK symbols scaled to the configured source
powers, and n(i) is circular complex Gaussian noise.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class ArrayGeometry:
    """ULA description: element count and inter-element spacing in wavelengths."""

    num_elements: int
    spacing_ratio: float = 0.5

    def __post_init__(self):
        if self.num_elements < 1:
            raise ValueError("num_elements must be >= 1")
        if self.spacing_ratio <= 0:
            raise ValueError("spacing_ratio must be > 0")


@dataclass(frozen=True)
class Scenario:
    """Sources and noise that fully determine the snapshot statistics.

    ``doas[0]`` is the desired user; all remaining entries are interferers.
    Source powers are linear (E[|s_k|^2]); with noise_power normalized to 1,
    SNR and INR in dB map directly onto the power entries.
    """

    geometry: ArrayGeometry
    doas: tuple = ()
    source_powers: tuple = ()
    noise_power: float = 1.0
    num_snapshots: int = 0
    modulation: str = "bpsk"

    def __post_init__(self):
        doas = tuple(float(t) for t in self.doas)
        powers = tuple(float(p) for p in self.source_powers)
        object.__setattr__(self, "doas", doas)
        object.__setattr__(self, "source_powers", powers)
        if len(doas) != len(powers):
            raise ValueError("doas and source_powers must have equal length")
        if len(doas) > self.geometry.num_elements:
            raise ValueError("number of sources q must satisfy q <= m")
        if len(set(doas)) != len(doas):
            raise ValueError("DOAs must be pairwise distinct")
        if any(p <= 0 for p in powers):
            raise ValueError("source powers must be > 0")
        if self.noise_power < 0:
            raise ValueError("noise_power must be >= 0")
        if self.modulation != "bpsk":
            raise ValueError(f"unsupported modulation {self.modulation!r}")

    @property
    def num_sources(self) -> int:
        return len(self.doas)


def steering_vector(geometry: ArrayGeometry, theta: float) -> np.ndarray:
    """Array response a(theta) for a plane wave from direction theta (radians).

    Element n carries phase exp(-2*pi*j * n * spacing_ratio * cos(theta)),
    so the first element is exactly 1 and all elements have unit modulus.
    """
    n = np.arange(geometry.num_elements)
    phase = -2.0 * np.pi * geometry.spacing_ratio * np.cos(theta)
    return np.exp(1j * phase * n)


def steering_matrix(scenario: Scenario) -> np.ndarray:
    """m x q matrix whose columns are the scenario's steering vectors."""
    return np.stack(
        [steering_vector(scenario.geometry, t) for t in scenario.doas], axis=1
    )


@dataclass(frozen=True)
class IdealCovariance:
    """Exact covariance split used by the MVDR oracle and SINR metric."""

    total: np.ndarray
    desired: np.ndarray
    interference_noise: np.ndarray


def ideal_covariance(scenario: Scenario) -> IdealCovariance:
    """Exact R = sum_k p_k a_k a_k^H + sigma_n^2 I, with the desired /
    interference-plus-noise split exposed for SINR computation."""
    m = scenario.geometry.num_elements
    r_desired = np.zeros((m, m), dtype=np.complex128)
    r_in = scenario.noise_power * np.eye(m, dtype=np.complex128)
    for k, (theta, power) in enumerate(zip(scenario.doas, scenario.source_powers)):
        a = steering_vector(scenario.geometry, theta)
        term = power * np.outer(a, a.conj())
        if k == 0:
            r_desired = term
        else:
            r_in = r_in + term
    return IdealCovariance(
        total=r_desired + r_in, desired=r_desired, interference_noise=r_in
    )


class SnapshotStream:
    """Seeded generator of (x(i), s0(i)) pairs for one Monte-Carlo run.

    Identical (scenario, seed) pairs produce bit-identical streams.  The
    stream is exhausted after ``scenario.num_snapshots`` draws and then
    raises StopIteration.
    """

    def __init__(self, scenario: Scenario, rng_seed: int):
        self.scenario = scenario
        self.rng_seed = rng_seed
        self._rng = np.random.default_rng(rng_seed)
        self._a = steering_matrix(scenario)
        self._amplitudes = np.sqrt(np.asarray(scenario.source_powers))
        self._noise_scale = np.sqrt(scenario.noise_power / 2.0)
        self._emitted = 0

    def __iter__(self):
        return self

    def __next__(self):
        return self.next_snapshot()

    def next_snapshot(self) -> tuple[np.ndarray, complex]:
        """Draw the next received vector and the desired-user symbol s0(i)."""
        if self._emitted >= self.scenario.num_snapshots:
            raise StopIteration("snapshot stream exhausted")
        self._emitted += 1
        q = self.scenario.num_sources
        m = self.scenario.geometry.num_elements
        symbols = self._rng.integers(0, 2, size=q) * 2.0 - 1.0
        s = self._amplitudes * symbols
        noise = self._noise_scale * (
            self._rng.standard_normal(m) + 1j * self._rng.standard_normal(m)
        )
        x = self._a @ s.astype(np.complex128) + noise
        return x, complex(s[0])

    def take_all(self) -> tuple[np.ndarray, np.ndarray]:
        """Materialize the remaining snapshots as (m x N) and (N,) arrays."""
        xs, s0s = [], []
        for x, s0 in self:
            xs.append(x)
            s0s.append(s0)
        if not xs:
            m = self.scenario.geometry.num_elements
            return np.zeros((m, 0), dtype=np.complex128), np.zeros(0, np.complex128)
        return np.stack(xs, axis=1), np.asarray(s0s)


def draw_interferer_doas(
    rng: np.random.Generator,
    count: int,
    desired_doa: float,
    guard: float,
) -> list[float]:
    """Draw interferer directions uniformly in (0, pi) outside a guard band
    around the desired direction.  One draw per Monte-Carlo run."""
    doas: list[float] = []
    while len(doas) < count:
        theta = rng.uniform(0.0, np.pi)
        if abs(theta - desired_doa) > guard:
            doas.append(float(theta))
    return doas
