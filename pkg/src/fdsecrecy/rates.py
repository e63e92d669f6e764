"""Closed-form rate, capacity, and worst-case rate formulas.

Every rate is in bits per channel use, computed with log2 directly.  The
worst-case forms minimize (legitimate links) or maximize (eavesdropper
link) the SINR over complex error balls |e| <= eps around the channel
estimates; for a single scalar error the extremes of |h0 + e|^2 are
max(|h0| - eps, 0)^2 and (|h0| + eps)^2, since x -> a*x/(c + b*x) is
nondecreasing for a, b, c >= 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .model import PowerAllocation, Scenario


@dataclass(frozen=True)
class RateTriple:
    """Rates delivered by one allocation: both users plus the leakage."""

    r1: float
    r2: float
    re: float


@dataclass(frozen=True)
class CapacityTriple:
    """Full-budget capacities; worst-case c1/c2 and best-case ce when robust."""

    c1: float
    c2: float
    ce: float


def link_rate(gain_sq: float, ps: float, pn: float, n0: float) -> float:
    """log2(1 + g*Ps / (N0 + g*Pn)) for one point-to-point link."""
    return math.log2(1.0 + gain_sq * ps / (n0 + gain_sq * pn))


def eave_rate(z1_sq: float, z2_sq: float, alloc: PowerAllocation, n0: float) -> float:
    """Leakage rate at the eavesdropper, both message signals combined."""
    num = z1_sq * alloc.p1s + z2_sq * alloc.p2s
    den = n0 + z1_sq * alloc.p1n + z2_sq * alloc.p2n
    return math.log2(1.0 + num / den)


def perfect_rates(scenario: Scenario, alloc: PowerAllocation) -> RateTriple:
    """The three nominal-gain rates at one allocation."""
    ch = scenario.channels
    n0 = scenario.n0
    return RateTriple(
        r1=link_rate(abs(ch.h21) ** 2, alloc.p1s, alloc.p1n, n0),
        r2=link_rate(abs(ch.h12) ** 2, alloc.p2s, alloc.p2n, n0),
        re=eave_rate(abs(ch.z1) ** 2, abs(ch.z2) ** 2, alloc, n0),
    )


def _ball_min_sq(mag: float, eps: float) -> float:
    # min of |h0 + e|^2 over |e| <= eps, clamped at 0 for eps >= |h0|
    return max(mag - eps, 0.0) ** 2


def _ball_max_sq(mag: float, eps: float) -> float:
    return (mag + eps) ** 2


def capacities(scenario: Scenario, robust: bool = False) -> CapacityTriple:
    """Full-budget capacities of the three links.

    robust=False evaluates the nominal gains.  robust=True minimizes c1, c2
    and maximizes ce over the error balls, i.e. uses max(|h0|-eps, 0) on the
    legitimate links and (|z0|+eps) on the eavesdropper links.
    """
    ch, eb = scenario.channels, scenario.errors
    h21, h12 = abs(ch.h21), abs(ch.h12)
    z1, z2 = abs(ch.z1), abs(ch.z2)
    if robust:
        g1 = _ball_min_sq(h21, eb.eps21)
        g2 = _ball_min_sq(h12, eb.eps12)
        ze1 = _ball_max_sq(z1, eb.eps1)
        ze2 = _ball_max_sq(z2, eb.eps2)
    else:
        g1, g2, ze1, ze2 = h21**2, h12**2, z1**2, z2**2
    return CapacityTriple(
        c1=math.log2(1.0 + g1 * scenario.p1 / scenario.n0),
        c2=math.log2(1.0 + g2 * scenario.p2 / scenario.n0),
        ce=math.log2(1.0 + (ze1 * scenario.p1 + ze2 * scenario.p2) / scenario.n0),
    )


def worst_case_link_rate(
    h0: complex,
    eps_link: float,
    eps_self: float,
    ps: float,
    pn: float,
    p_other_total: float,
    n0: float,
) -> float:
    """Exact minimum link rate over the link and self-interference error balls.

    Minimizes log2(1 + |h0+e|^2*Ps / (N0 + |e_self|^2*P_other + |h0+e|^2*Pn))
    over |e| <= eps_link and |e_self| <= eps_self.  The minimum is attained
    at |h0+e| = max(|h0|-eps_link, 0) and |e_self| = eps_self.
    """
    g = _ball_min_sq(abs(h0), eps_link)
    den = n0 + eps_self**2 * p_other_total + g * pn
    return math.log2(1.0 + g * ps / den)


def worst_case_eave_rate_upper(scenario: Scenario, alloc: PowerAllocation) -> float:
    """Decoupled upper bound on the worst-case leakage rate.

    The message terms take the ball maximum (|z0|+eps)^2 and the jamming
    terms the ball minimum max(|z0|-eps, 0)^2 independently, which bounds
    the true worst case (where the same error appears in numerator and
    denominator) from above.  Exact when eps = 0 or when both jamming
    powers are zero.
    """
    ch, eb = scenario.channels, scenario.errors
    num = _ball_max_sq(abs(ch.z1), eb.eps1) * alloc.p1s + _ball_max_sq(
        abs(ch.z2), eb.eps2
    ) * alloc.p2s
    den = (
        scenario.n0
        + _ball_min_sq(abs(ch.z1), eb.eps1) * alloc.p1n
        + _ball_min_sq(abs(ch.z2), eb.eps2) * alloc.p2n
    )
    return math.log2(1.0 + num / den)
