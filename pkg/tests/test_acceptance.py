"""Acceptance gate: one test and one printed pass/fail line per criterion.

Every comparison is exact rational equality unless the criterion itself is
statistical (decode rates).  Lines are written straight to the real stdout
so they survive pytest's capture.
"""

import random
import sys
import time
from fractions import Fraction

from wdss.model import SystemParams, enumerate_collectors, validate_params
from wdss.demo import example_cuts
from wdss.flowgraph import build_graph, cut_capacity
from wdss.mincut import (brute_force_min_cut, max_flow_min_cut,
                         storage_capacity)
from wdss.capacity_bound import (adversarial_instance, c_lb,
                                 verify_truncation)
from wdss.tradeoff import ms_point, mt_point, sweep_curve, dominance_report
from wdss.rlnc import SimConfig, achievability_experiment

from conftest import random_instance, random_params


def report(num: int, label: str, ok: bool):
    verdict = "PASS" if ok else "FAIL"
    print(f"[{verdict}] criterion {num}: {label}", file=sys.__stdout__)
    assert ok, f"criterion {num}: {label}"


def grid_points():
    """Valid (n, k, d, r, T) tuples at desk scale."""
    out = []
    for n in range(2, 9):
        for k in range(1, 4):
            for d in range(1, 6):
                for r in (1, 2):
                    for T in range(0, 3):
                        p = SystemParams(n, k, d, r, Fraction(1), Fraction(1),
                                         T)
                        if not validate_params(p):
                            out.append((n, k, d, r, T))
    return out


# every alpha/beta ratio from the {1/4, 1, 4} x {1/4, 1, 4} grid, scaled to
# integers; both the bound and the min cut are degree-1 homogeneous in
# (alpha, beta), which the property suite (criterion 8) checks directly
RATIO_PAIRS = [(Fraction(1), Fraction(16)), (Fraction(1), Fraction(4)),
               (Fraction(1), Fraction(1)), (Fraction(4), Fraction(1)),
               (Fraction(16), Fraction(1))]


def test_criterion_1_worked_example_cuts():
    start = time.perf_counter()
    ok = True
    for alpha, beta in [(Fraction(1), Fraction(1)),
                        (Fraction(3, 2), Fraction(1, 7))]:
        g, cuts = example_cuts(alpha, beta)
        by_name = {name: X for name, X, _ in cuts}
        ok &= cut_capacity(g, by_name["cut1"]) == 7 * beta
        ok &= cut_capacity(g, by_name["cut2"]) == alpha + 3 * beta
    ok &= time.perf_counter() - start < 1.0
    report(1, "worked-example cuts equal 7*beta and alpha+3*beta, < 1 s", ok)


def test_criterion_2_bound_min_cut_sandwich():
    violations = 0
    for n, k, d, r, T in grid_points():
        for alpha, beta in RATIO_PAIRS:
            p = SystemParams(n, k, d, r, alpha, beta, T)
            bound = c_lb(p).value
            cap = storage_capacity(p, limit=40, canonical=True)
            if cap.value < bound:
                violations += 1
    report(2, "min cut >= closed-form bound on the full parameter grid "
              f"({violations} violations)", violations == 0)


def test_criterion_3_tightness_certificate():
    ok = True
    prices = [(Fraction(a), Fraction(b))
              for a in (Fraction(1, 4), Fraction(1), Fraction(4))
              for b in (Fraction(1, 4), Fraction(1), Fraction(4))]
    for n, k, d, r, T in grid_points():
        if n < k + 2 * r:
            continue
        for alpha, beta in prices:
            p = SystemParams(n, k, d, r, alpha, beta, T)
            res = c_lb(p)
            inst, sink_side, dc = adversarial_instance(p, res.argmin)
            g = build_graph(inst, dc)
            cut = cut_capacity(g, g.vertices - frozenset(sink_side))
            flow = max_flow_min_cut(g).value
            ok &= res.value == cut == flow
    # one grid point with exhaustive instance enumeration
    p = SystemParams(5, 2, 3, 1, Fraction(1), Fraction(1), 1)
    ok &= storage_capacity(p, canonical=False).value == c_lb(p).value
    report(3, "adversarial cut, witness max flow and bound agree exactly; "
              "full enumeration matches at (5,2,3,1,T=1)", ok)


def test_criterion_4_horizon_saturation():
    ok = True
    vals = (Fraction(1, 4), Fraction(1, 2), Fraction(1), Fraction(2),
            Fraction(4))
    for alpha in vals:
        for beta in vals:
            p = SystemParams(8, 3, 4, 2, alpha, beta, 7)
            ok &= verify_truncation(p, extra=2)["all_equal"]
    report(4, "raw-enumeration bound equal at horizons 5, 6, 7 on the "
              "5x5 price grid", ok)


def test_criterion_5_tradeoff_endpoints():
    k, d, r = 4, 9, 2
    msb = ms_point("broadcast", k, d, r)
    mtb = mt_point("broadcast", k, d, r)
    msc = ms_point("cooperative", k, d, r)
    mtc = mt_point("cooperative", k, d, r)
    ok = (msb.tau, msb.alpha) == (Fraction(9, 28), Fraction(1, 4))
    ok &= (mtb.tau, mtb.alpha) == (Fraction(9, 32), Fraction(9, 32))
    ok &= (msc.tau, msc.alpha) == (Fraction(5, 14), Fraction(1, 4))
    ok &= (mtc.tau, mtc.alpha) == (Fraction(19, 64), Fraction(19, 64))
    curve = sweep_curve(15, k, d, r, 6, Fraction(1), points=33)
    ok &= curve.points[0] == mtb and curve.points[-1] == msb
    rep = dominance_report(k, d, r)
    ok &= rep["ms_gap"] == Fraction(1, 28) > 0
    ok &= rep["mt_gap"] == Fraction(1, 64) > 0
    report(5, "scheme-comparison endpoints exact, sweep hits both, "
              "dominance gaps 1/28 and 1/64 positive", ok)


def test_criterion_6_max_flow_oracle_equivalence():
    rng = random.Random(606)
    ok, done = True, 0
    while done < 100:
        p = random_params(rng, max_vertices=20)
        inst = random_instance(p, rng)
        collectors = list(enumerate_collectors(inst))
        dc = collectors[rng.randrange(len(collectors))]
        g = build_graph(inst, dc)
        ok &= max_flow_min_cut(g).value == brute_force_min_cut(g).value
        done += 1
    report(6, f"max flow equals brute-force min cut on {done} random "
              "graphs", ok)


def test_criterion_7_rlnc_achievability():
    start = time.perf_counter()
    p = SystemParams(8, 3, 4, 2, Fraction(2), Fraction(1), 2)
    assert c_lb(p).value == 5
    cfg = SimConfig(p, B=5, field_w=8, trials=100, seed=0)
    rep = achievability_experiment(cfg, "adversarial")
    ok = rep["violations"] == []
    ok &= all(c["decodable_rate"] >= 0.99
              for c in rep["per_collector"].values())
    ok &= time.perf_counter() - start < 60.0
    report(7, "coding rank never exceeds min cut; decode rate >= 0.99 "
              "per collector at B = bound, < 1 min", ok)


def test_criterion_8_property_suite():
    rng = random.Random(808)
    ok = True
    for _ in range(10):
        p = random_params(rng)
        scale = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        scaled = SystemParams(p.n, p.k, p.d, p.r, p.alpha * scale,
                              p.beta * scale, p.T)
        ok &= c_lb(scaled).value == scale * c_lb(p).value
        inst = random_instance(p, rng)
        dc = next(iter(enumerate_collectors(inst)))
        v1 = max_flow_min_cut(build_graph(inst, dc)).value
        # same failure pattern, scaled prices
        sinst = type(inst)(params=scaled, rounds=inst.rounds)
        v2 = max_flow_min_cut(build_graph(sinst, dc)).value
        ok &= v2 == scale * v1
        longer = SystemParams(p.n, p.k, p.d, p.r, p.alpha, p.beta, p.T + 1)
        ok &= c_lb(longer).value <= c_lb(p).value
        ok &= c_lb(p).value <= p.k * p.alpha
    curve = sweep_curve(15, 4, 9, 2, 6, Fraction(1), points=17)
    ok &= all(pt.tau == Fraction(9) * pt.beta / 2 for pt in curve.points)
    alphas = [pt.alpha for pt in curve.points]
    diffs = [alphas[i + 1] - alphas[i] for i in range(len(alphas) - 1)]
    ok &= all(df <= 0 for df in diffs)
    ok &= all(diffs[i + 1] >= diffs[i] for i in range(len(diffs) - 1))
    report(8, "homogeneity, horizon monotonicity, k*alpha ceiling, "
              "tau = d*beta/r, curve nonincreasing and convex", ok)
