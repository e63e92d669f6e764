"""Problem-instance data types, validation, and unit conversion.

All powers are linear throughout the library; dB enters only at the CLI
boundary.  Channel gains are plain Python complex numbers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace


class ScenarioError(ValueError):
    """Raised when a scenario violates a type invariant."""


@dataclass(frozen=True)
class ChannelSet:
    """Complex gains of the six links.

    Under imperfect CSI these hold the estimates; h11 and h22 are kept for
    completeness but never enter a rate formula (self-interference is
    cancelled, only the residual bounds matter).
    """

    h11: complex
    h12: complex
    h21: complex
    h22: complex
    z1: complex
    z2: complex


@dataclass(frozen=True)
class ErrorBounds:
    """Absolute-value bounds on the CSI errors of each link, all >= 0."""

    eps11: float = 0.0
    eps12: float = 0.0
    eps21: float = 0.0
    eps22: float = 0.0
    eps1: float = 0.0
    eps2: float = 0.0

    @classmethod
    def uniform(cls, eps: float) -> "ErrorBounds":
        return cls(eps, eps, eps, eps, eps, eps)

    def as_tuple(self) -> tuple[float, ...]:
        return (self.eps11, self.eps12, self.eps21, self.eps22, self.eps1, self.eps2)


@dataclass(frozen=True)
class Scenario:
    """One full problem instance: gains, error bounds, budgets, noise power."""

    channels: ChannelSet
    errors: ErrorBounds
    p1: float
    p2: float
    n0: float = 1.0

    def with_uniform_eps(self, eps: float) -> "Scenario":
        return replace(self, errors=ErrorBounds.uniform(eps))

    def with_budgets(self, p1: float, p2: float) -> "Scenario":
        return replace(self, p1=p1, p2=p2)


@dataclass(frozen=True)
class PowerAllocation:
    """Message and jamming powers (P1s, P1n, P2s, P2n), decision variables."""

    p1s: float
    p1n: float
    p2s: float
    p2n: float

    @classmethod
    def zero(cls) -> "PowerAllocation":
        return cls(0.0, 0.0, 0.0, 0.0)

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.p1s, self.p1n, self.p2s, self.p2n)


@dataclass(frozen=True)
class SolverConfig:
    """Grid sizes, bisection stop, and numerical tolerances.

    grid_k/grid_l are the K and L of the target-rate sweep; zeta is the
    bisection stopping width on the epigraph variable.
    """

    grid_k: int = 40
    grid_l: int = 40
    zeta: float = 1e-6
    feas_tol: float = 1e-9
    oracle_power_grid: int = 40
    oracle_error_grid: int = 100

    def __post_init__(self):
        if self.grid_k < 1 or self.grid_l < 1:
            raise ValueError("grid sizes must be >= 1")
        if self.zeta <= 0:
            raise ValueError("bisection stop zeta must be positive")
        if self.feas_tol <= 0:
            raise ValueError("feasibility tolerance must be positive")
        if self.oracle_power_grid < 2 or self.oracle_error_grid < 2:
            raise ValueError("oracle grid densities must be >= 2")


def db_to_linear(p_db: float) -> float:
    """Convert a dB power value to linear units: 10**(p_db/10)."""
    return 10.0 ** (p_db / 10.0)


def _finite(z: complex) -> bool:
    return math.isfinite(z.real) and math.isfinite(z.imag)


def validate(scenario: Scenario) -> Scenario:
    """Check every invariant; return the scenario unchanged on success.

    Raises ScenarioError naming the first violated invariant.
    """
    ch = scenario.channels
    for name in ("h11", "h12", "h21", "h22", "z1", "z2"):
        if not _finite(complex(getattr(ch, name))):
            raise ScenarioError(f"channel gain {name} is not finite")
    eb = scenario.errors
    for name in ("eps11", "eps12", "eps21", "eps22", "eps1", "eps2"):
        val = getattr(eb, name)
        if not (math.isfinite(val) and val >= 0.0):
            raise ScenarioError(f"error bound negative or not finite: {name}")
    if not (math.isfinite(scenario.p1) and scenario.p1 > 0.0):
        raise ScenarioError("power budget p1 must be positive and finite")
    if not (math.isfinite(scenario.p2) and scenario.p2 > 0.0):
        raise ScenarioError("power budget p2 must be positive and finite")
    if not (math.isfinite(scenario.n0) and scenario.n0 > 0.0):
        raise ScenarioError("noise power must be positive")
    return scenario


def validate_allocation(
    scenario: Scenario, alloc: PowerAllocation, tol: float = 1e-9
) -> PowerAllocation:
    """Check budget and sign invariants of an allocation (relative tol)."""
    t1 = tol * (1.0 + scenario.p1)
    t2 = tol * (1.0 + scenario.p2)
    if min(alloc.as_tuple()) < -max(t1, t2):
        raise ScenarioError("allocation has a negative power component")
    if alloc.p1s + alloc.p1n > scenario.p1 + t1:
        raise ScenarioError("allocation exceeds the p1 budget")
    if alloc.p2s + alloc.p2n > scenario.p2 + t2:
        raise ScenarioError("allocation exceeds the p2 budget")
    return alloc
