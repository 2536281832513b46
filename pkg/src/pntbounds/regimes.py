"""Bracket constants for the turning point and minimum of t * x^nu(t).

For the smoothed Ford region and the Vinogradov-Korobov region, the
integrand x^(-nu(t))/t rises to a single maximum at t0 and falls after
it.  The constants (B0, B1) sandwich log t0 and (B2, B3) sandwich
log min t*x^nu(t), in units of sqrt(log x) for the Ford region and
log^(3/5) x (loglog x)^(-1/5) for the Vinogradov-Korobov one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import zfr
from .zdensity import LOG_RIEMANN_HEIGHT

__all__ = [
    "Bracket",
    "bracket_nu2",
    "bracket_nu3",
    "verify_unimodal",
    "UnimodalReport",
    "vk_decay_arg",
    "ConvergenceError",
]

MIN_LOG_X0_NU2 = 1e5
MIN_LOG_X0_NU3 = 2.8e10


class ConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True)
class Bracket:
    """B0 <= scale of log t0 <= B1 and B2 <= scale of log T <= B3."""

    region_kind: str  # "nu2" | "nu3"
    log_x0: float
    B0: float
    B1: float
    B2: float
    B3: float


def vk_decay_arg(log_x: float) -> float:
    """r(x) = log^(3/5) x * (loglog x)^(-1/5), the VK decay argument."""
    return log_x ** 0.6 / math.log(log_x) ** 0.2


def bracket_nu2(log_x0: float) -> Bracket:
    """Brackets for the smoothed Ford region, valid for x >= exp(log_x0).

    B1 = R1^(-1/2) exactly.  B0 is the fixed point of
    B0 -> sqrt((1 - C(B0)) / R1) with
    C(B0) = D (2 log(B0 sqrt(log x0)) - 1) / (B0 sqrt(log x0)),
    iterated from B1 (empirically a contraction for log_x0 >= 1e5).
    Then B2 = 2 sqrt(alpha) and B3 = B1 + 1/(R1 B0).
    """
    if log_x0 < MIN_LOG_X0_NU2:
        raise ValueError(f"bracket_nu2 requires log x0 >= {MIN_LOG_X0_NU2:g}, got {log_x0:g}")
    r1, d = zfr.R1_FORD, zfr.D_FORD
    u = math.sqrt(log_x0)
    b1 = r1 ** -0.5
    b0 = b1
    for _ in range(200):
        c = d * (2.0 * math.log(b0 * u) - 1.0) / (b0 * u)
        if c >= 1.0:
            raise ValueError(f"log x0 = {log_x0:g} too small: correction term C = {c:g} >= 1")
        nxt = math.sqrt((1.0 - c) / r1)
        if abs(nxt - b0) < 1e-10:
            b0 = nxt
            break
        b0 = nxt
    else:
        raise ConvergenceError("B0 fixed point did not converge in 200 iterations")
    alpha = (1.0 - d * math.log(b0 * u) / (b0 * u)) / r1
    if alpha <= 0.0:
        raise ValueError(f"alpha = {alpha:g} <= 0: log x0 too small for this region")
    return Bracket("nu2", log_x0, B0=b0, B1=b1, B2=2.0 * math.sqrt(alpha), B3=b1 + 1.0 / (r1 * b0))


def bracket_nu3(log_x0: float = MIN_LOG_X0_NU3) -> Bracket:
    """Brackets for the Vinogradov-Korobov region, x >= exp(log_x0).

    B0 = (2/(3c))^(3/5) (5/3)^(1/5) in closed form; B1 comes from the
    beta = 0.4125 construction, rounded up at 5 decimals.  B3 uses the
    exact chain constant kappa = (log B0 + (3/5) L - (1/5) log L)/L at
    L = loglog x0 instead of a hard-coded value, so other anchors work.
    """
    if log_x0 < MIN_LOG_X0_NU3:
        raise ValueError(f"bracket_nu3 requires log x0 >= {MIN_LOG_X0_NU3:g}, got {log_x0:g}")
    c = zfr.C_VK
    b0 = (2.0 / (3.0 * c)) ** 0.6 * (5.0 / 3.0) ** 0.2
    beta = 0.4125
    b1 = math.ceil((2.0 / (3.0 * c)) ** 0.6 * beta ** -0.2 * 1e5) / 1e5
    b2 = 1.0 / (c * b1 ** (2.0 / 3.0) * (3.0 / 5.0) ** (1.0 / 3.0)) + b0
    big_l = math.log(log_x0)
    kappa = (math.log(b0) + 0.6 * big_l - 0.2 * math.log(big_l)) / big_l
    if kappa <= 0.0:
        raise ValueError("kappa <= 0: hypothesis violated")
    b3 = 1.0 / (c * b0 ** (2.0 / 3.0) * kappa ** (1.0 / 3.0)) + b1
    return Bracket("nu3", log_x0, B0=b0, B1=b1, B2=b2, B3=b3)


@dataclass(frozen=True)
class UnimodalReport:
    region_kind: str
    log_x: float
    passed: bool
    pattern: str               # collapsed sign runs of the discrete slope, e.g. "-+-"
    turning_log_t: float       # interior peak of x^(-nu(t))/t
    rise_start_log_t: float    # where the integrand begins rising (log H if no dip)
    bracket_lo: float
    bracket_hi: float


def verify_unimodal(bracket: Bracket, log_x: float, n_grid: int = 1000) -> UnimodalReport:
    """Numerically confirm the single-interior-peak shape of x^(-nu(t))/t.

    Samples g(log t) = -nu(t) log x - log t (the log of the integrand) on
    a grid from log H to twice the upper turning-point bracket.  For the
    smoothed Ford region the width nu2 is still widening just above the
    verified height, so the integrand dips there before rising; no zero
    mass lives below the rise, and the load-bearing property is a slope
    pattern of "+-" or "-+-" with the single interior peak inside
    [B0 * scale, B1 * scale].
    """
    if bracket.region_kind == "nu2":
        if log_x < bracket.log_x0:
            raise ValueError("log_x below the bracket hypothesis")
        scale = math.sqrt(log_x)
        nu = zfr.nu2
    elif bracket.region_kind == "nu3":
        if log_x < bracket.log_x0:
            raise ValueError("log_x below the bracket hypothesis")
        scale = vk_decay_arg(log_x)
        nu = zfr.nu3
    else:
        raise ValueError(f"unknown region {bracket.region_kind!r}")

    lo, hi = LOG_RIEMANN_HEIGHT, 2.0 * bracket.B1 * scale
    grid = np.linspace(lo, hi, n_grid)
    g = np.array([-nu(y) * log_x - y for y in grid])
    signs = np.sign(np.diff(g))
    nz = signs[signs != 0]
    runs: list[float] = []
    for s in nz:
        if not runs or runs[-1] != s:
            runs.append(float(s))
    pattern = "".join("+" if s > 0 else "-" for s in runs)

    ascending = np.nonzero(signs > 0)[0]
    rise_idx = int(ascending[0]) if ascending.size else 0
    rising = g[rise_idx:]
    turning = float(grid[rise_idx + int(np.argmax(rising))])
    in_bracket = bracket.B0 * scale <= turning <= bracket.B1 * scale
    return UnimodalReport(
        region_kind=bracket.region_kind,
        log_x=log_x,
        passed=(pattern in ("+-", "-+-") and in_bracket),
        pattern=pattern,
        turning_log_t=turning,
        rise_start_log_t=float(grid[rise_idx]),
        bracket_lo=bracket.B0 * scale,
        bracket_hi=bracket.B1 * scale,
    )
