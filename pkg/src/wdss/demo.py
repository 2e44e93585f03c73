"""Worked example: the 8-node, two-round system used throughout the docs.

Parameters n=8, k=3, d=4, r=2, T=2.  Nodes 5 and 6 fail first (newcomers
9, 10; helpers 1-4), then nodes 8 and 10 fail (newcomers 11, 12; helpers
9, 3, 4, 7).  Two reference cuts against the collector reading {9, 11, 12}
after round 2 have capacities 7*beta and alpha + 3*beta.
"""

from __future__ import annotations

from fractions import Fraction

from .model import (DataCollectorSpec, Instance, RepairRound, SystemParams)
from .flowgraph import SOURCE, aux_v, build_graph, in_v, out_v


def example_params(alpha=Fraction(1), beta=Fraction(1)) -> SystemParams:
    return SystemParams(n=8, k=3, d=4, r=2,
                        alpha=Fraction(alpha), beta=Fraction(beta), T=2)


def example_instance(alpha=Fraction(1), beta=Fraction(1)) -> Instance:
    p = example_params(alpha, beta)
    rounds = (
        RepairRound(1, frozenset({5, 6}), frozenset({9, 10}),
                    frozenset({1, 2, 3, 4})),
        RepairRound(2, frozenset({8, 10}), frozenset({11, 12}),
                    frozenset({9, 3, 4, 7})),
    )
    return Instance(p, rounds)


def example_collector() -> DataCollectorSpec:
    return DataCollectorSpec(2, frozenset({9, 11, 12}))


def example_cuts(alpha=Fraction(1), beta=Fraction(1)):
    """The two reference cuts, as (name, source-side vertex set, capacity).

    Cut 1 keeps only the initial nodes on the source side and costs
    7*beta (all seven broadcast edges with a live parent).  Cut 2 isolates
    node 9's storage edge and the three round-2 broadcasts from surviving
    helpers, costing alpha + 3*beta.
    """
    g = build_graph(example_instance(alpha, beta), example_collector())
    cut1 = {SOURCE}
    for j in range(1, 9):
        cut1 |= {in_v(j), out_v(j)}

    sink_side2 = {out_v(9), aux_v(9, 2), aux_v(3, 2), aux_v(4, 2),
                  aux_v(7, 2), in_v(11), in_v(12), out_v(11), out_v(12),
                  g.sink}
    cut2 = set(g.vertices) - sink_side2

    alpha, beta = Fraction(alpha), Fraction(beta)
    return g, [("cut1", frozenset(cut1), 7 * beta),
               ("cut2", frozenset(cut2), alpha + 3 * beta)]
