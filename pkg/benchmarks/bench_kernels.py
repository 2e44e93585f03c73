"""Benchmark the compiled kernels against the pure-Python fallback.

Run:  python3 benchmarks/bench_kernels.py
"""

import random
import time
from fractions import Fraction

from wdss import _kernels_py
from wdss.model import SystemParams, enumerate_collectors, enumerate_instances
from wdss.flowgraph import INF, build_graph
from wdss.rlnc import GF

try:
    from wdss import _kernels
except ImportError:
    _kernels = None


def flow_workload():
    """Integer max-flow problems from real repair graphs."""
    p = SystemParams(8, 3, 5, 2, Fraction(1), Fraction(1), 2)
    problems = []
    for inst in enumerate_instances(p, limit=4, canonical=True):
        for dc in enumerate_collectors(inst):
            g = build_graph(inst, dc)
            idx = {v: i for i, v in enumerate(sorted(g.vertices))}
            total = sum(int(c) for _, _, c in g.edges if c is not INF)
            edges = [(idx[u], idx[v], total + 1 if c is INF else int(c))
                     for u, v, c in g.edges]
            problems.append((len(idx), edges, idx[g.source], idx[g.sink]))
    return problems


def rank_workload(rows=24, cols=20, count=300, seed=7):
    rng = random.Random(seed)
    gf = GF(8)
    mats = [[rng.randrange(256) for _ in range(rows * cols)]
            for _ in range(count)]
    return gf, rows, cols, mats


def bench(label, fn, repeats=3):
    best = min(timeit(fn) for _ in range(repeats))
    print(f"  {label:10s} {best * 1e3:9.1f} ms")
    return best


def timeit(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def main():
    problems = flow_workload()
    print(f"max-flow: {len(problems)} repair graphs "
          f"({problems[0][0]} vertices each)")

    def run_flows(mod):
        return lambda: [mod.max_flow(n, e, s, t) for n, e, s, t in problems]

    t_py = bench("python", run_flows(_kernels_py))
    if _kernels is not None:
        t_c = bench("compiled", run_flows(_kernels))
        print(f"  speedup    {t_py / t_c:9.1f}x")

    gf, rows, cols, mats = rank_workload()
    print(f"gf-rank: {len(mats)} matrices {rows}x{cols} over GF(256)")

    def run_ranks(mod):
        return lambda: [mod.gf_rank(m, rows, cols, gf.exp, gf.log, gf.order)
                        for m in mats]

    t_py = bench("python", run_ranks(_kernels_py))
    if _kernels is not None:
        t_c = bench("compiled", run_ranks(_kernels))
        print(f"  speedup    {t_py / t_c:9.1f}x")
    if _kernels is None:
        print("compiled extension not available; built fallback only")


if __name__ == "__main__":
    main()
