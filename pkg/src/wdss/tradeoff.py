"""Storage vs. repair-transmission-bandwidth tradeoff.

The transmission bandwidth tau = d*beta/r counts packets actually put on
the air per newcomer, so a broadcast packet heard by r newcomers is charged
once.  The capacity bound is a minimum of finitely many linear forms
a*alpha + b*beta; the tradeoff curve alpha(beta) at file size B is the
upper envelope (B - b*beta)/a of those forms, evaluated exactly.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .model import SystemParams, require_valid
from .capacity_bound import profile_forms


@dataclass(frozen=True)
class TradeoffPoint:
    tau: Fraction
    alpha: Fraction
    beta: Fraction


@dataclass(frozen=True)
class Curve:
    n: int
    k: int
    d: int
    r: int
    T: int
    B: Fraction
    points: tuple  # TradeoffPoint, ascending beta
    forms: tuple   # (a, b) linear forms backing the curve


def tau_of(p: SystemParams) -> Fraction:
    """Packets transmitted by helpers per newcomer: d*beta/r."""
    require_valid(p)
    return Fraction(p.d) * p.beta / p.r


def _check_scheme(scheme: str) -> None:
    if scheme not in ("broadcast", "cooperative"):
        raise ValueError(f"unknown scheme {scheme!r}")


def _warn_comparison_assumptions(k: int, r: int) -> None:
    if r > 1 and (k % r != 0 or k // r <= 1):
        warnings.warn(
            f"the scheme comparison assumes k = u*r with integer u > 1; "
            f"got k={k}, r={r}", stacklevel=3)


def _point(tau: Fraction, alpha: Fraction, d: int, r: int) -> TradeoffPoint:
    return TradeoffPoint(tau=tau, alpha=alpha, beta=tau * r / d)


def ms_point(scheme: str, k: int, d: int, r: int,
             B: Fraction = Fraction(1)) -> TradeoffPoint:
    """Minimum-storage endpoint: alpha = B/k with the matching bandwidth."""
    _check_scheme(scheme)
    if d + r - k <= 0:
        raise ValueError("requires d + r - k > 0")
    if d < k or r < 1:
        raise ValueError("requires d >= k and r >= 1")
    _warn_comparison_assumptions(k, r)
    num = d if scheme == "broadcast" else d + r - 1
    tau = B * Fraction(num, k * (d + r - k))
    return _point(tau, B * Fraction(1, k), d, r)


def mt_point(scheme: str, k: int, d: int, r: int,
             B: Fraction = Fraction(1)) -> TradeoffPoint:
    """Minimum repair-transmission-bandwidth endpoint: tau = alpha there."""
    _check_scheme(scheme)
    if 2 * d + r - k <= 0:
        raise ValueError("requires 2d + r - k > 0")
    if d < k or r < 1:
        raise ValueError("requires d >= k and r >= 1")
    _warn_comparison_assumptions(k, r)
    num = 2 * d if scheme == "broadcast" else 2 * d + r - 1
    tau = B * Fraction(num, k * (2 * d + r - k))
    return _point(tau, tau, d, r)


def _alpha_of_beta(forms, B: Fraction, beta: Fraction) -> Fraction:
    for a, b in forms:
        if a == 0 and b * beta < B:
            raise ValueError(f"beta={beta} infeasible: even unlimited "
                             f"storage cannot reach file size {B}")
    alpha = Fraction(0)
    for a, b in forms:
        if a > 0:
            cand = (B - b * beta) / a
            if cand > alpha:
                alpha = cand
    return alpha


def sweep_curve(n: int, k: int, d: int, r: int, T: int, B: Fraction,
                grid: list | None = None, points: int = 33) -> Curve:
    """Minimal storage alpha for each beta at file size B.

    With grid=None, beta spans the exact feasible range: from the smallest
    feasible beta (the minimum-bandwidth end) up to the smallest beta at
    which alpha bottoms out at B/k (the minimum-storage end), with the
    requested number of points including both endpoints.
    """
    require_valid(SystemParams(n=n, k=k, d=d, r=r, alpha=Fraction(1),
                               beta=Fraction(1), T=T))
    if B < 0:
        raise ValueError("B must be nonnegative")
    if grid is None and points < 1:
        raise ValueError("points must be at least 1")
    forms = profile_forms(n, k, d, r, min(T, k + r))

    if grid is None:
        zero_a = [b for a, b in forms if a == 0]
        beta_lo = max((Fraction(B, b) for b in zero_a), default=Fraction(0))
        beta_hi = max((B * Fraction(k - a, k * b) for a, b in forms
                       if a > 0 and b > 0 and a < k), default=beta_lo)
        if beta_hi < beta_lo:
            beta_hi = beta_lo
        if points < 2 or beta_hi == beta_lo:
            grid = [beta_lo]
        else:
            step = (beta_hi - beta_lo) / (points - 1)
            grid = [beta_lo + i * step for i in range(points)]

    seen = set()
    curve_points = []
    for beta in sorted(grid):
        if beta in seen:
            continue
        seen.add(beta)
        alpha = _alpha_of_beta(forms, B, beta)
        curve_points.append(TradeoffPoint(tau=Fraction(d) * beta / r,
                                          alpha=alpha, beta=beta))
    return Curve(n=n, k=k, d=d, r=r, T=T, B=B, points=tuple(curve_points),
                 forms=tuple(forms))


def dominance_report(k: int, d: int, r: int,
                     B: Fraction = Fraction(1)) -> dict:
    """Compare broadcast against cooperative repair at both endpoints."""
    if r <= 1:
        warnings.warn("dominance is strict only for r > 1", stacklevel=2)
    msb = ms_point("broadcast", k, d, r, B)
    msc = ms_point("cooperative", k, d, r, B)
    mtb = mt_point("broadcast", k, d, r, B)
    mtc = mt_point("cooperative", k, d, r, B)
    ms_gap = msc.tau - msb.tau
    mt_gap = mtc.tau - mtb.tau
    return {
        "ms_broadcast": msb, "ms_cooperative": msc,
        "mt_broadcast": mtb, "mt_cooperative": mtc,
        "ms_gap": ms_gap, "mt_gap": mt_gap,
        "broadcast_dominates": ms_gap > 0 and mt_gap > 0,
    }


def curve_csv(curve: Curve, cooperative_endpoints: bool = False) -> str:
    """Delimiter-separated curve: tau, alpha, beta as fractions and decimals."""
    lines = [f"# n={curve.n} k={curve.k} d={curve.d} r={curve.r} "
             f"T={curve.T} B={curve.B}",
             "tau,alpha,beta,tau_dec,alpha_dec,beta_dec"]
    for pt in curve.points:
        lines.append("{},{},{},{:.12g},{:.12g},{:.12g}".format(
            pt.tau, pt.alpha, pt.beta,
            float(pt.tau), float(pt.alpha), float(pt.beta)))
    if cooperative_endpoints:
        lines.append("# cooperative endpoints (schematic straight line "
                     "between them; interior curve not computed)")
        for pt in (mt_point("cooperative", curve.k, curve.d, curve.r, curve.B),
                   ms_point("cooperative", curve.k, curve.d, curve.r, curve.B)):
            lines.append("{},{},{},{:.12g},{:.12g},{:.12g}".format(
                pt.tau, pt.alpha, pt.beta,
                float(pt.tau), float(pt.alpha), float(pt.beta)))
    return "\n".join(lines)
