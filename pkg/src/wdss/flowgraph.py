"""Information flow graph for broadcast repair.

Every storage node j (initial or newcomer) is split into in:j -> out:j with
capacity alpha.  Each helper i of round s gets an auxiliary vertex aux:i:s
fed by out:i with capacity beta; the auxiliary vertex fans out with infinite
capacity to every newcomer of the round, so one broadcast transmission is
charged once no matter how many newcomers receive it.  A data collector is a
sink wired with infinite capacity to the out-vertices of its k nodes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .model import (DataCollectorSpec, Instance, active_nodes,
                    instance_violations)


class _Infinity:
    """Sentinel for infinite edge capacity (never a large number)."""

    __slots__ = ()

    def __repr__(self):
        return "inf"


INF = _Infinity()

SOURCE = ("S",)


def in_v(j):
    return ("in", j)


def out_v(j):
    return ("out", j)


def aux_v(i, s):
    return ("aux", i, s)


def dc_v(s, K):
    return ("dc", s, tuple(sorted(K)))


def vertex_label(v) -> str:
    tag = v[0]
    if tag == "S":
        return "S"
    if tag == "in":
        return f"in:{v[1]}"
    if tag == "out":
        return f"out:{v[1]}"
    if tag == "aux":
        return f"aux:{v[1]}:{v[2]}"
    return "dc:{}:{}".format(v[1], ",".join(str(j) for j in v[2]))


@dataclass(frozen=True)
class FlowGraph:
    inst: Instance
    dc: DataCollectorSpec
    vertices: frozenset
    edges: tuple  # (from_vertex, to_vertex, Fraction | INF)
    source: tuple
    sink: tuple


def build_graph(inst: Instance, dc: DataCollectorSpec) -> FlowGraph:
    """Construct the flow graph of inst with a single collector dc.

    The graph always contains all T rounds, even when dc joins earlier.
    Vertex count is 1 + 2(n + rT) + dT + 1 and edge count is
    n + (n + rT) + dT + dTr + k.
    """
    bad = instance_violations(inst)
    if bad:
        raise ValueError("invalid instance: " + "; ".join(bad))
    p = inst.params
    if len(dc.K) != p.k or not dc.K <= active_nodes(inst, dc.s):
        raise ValueError(f"collector {sorted(dc.K)} not legitimate after round {dc.s}")

    alpha, beta = p.alpha, p.beta
    sink = dc_v(dc.s, dc.K)
    vertices = {SOURCE, sink}
    edges = []

    storage_nodes = list(range(1, p.n + 1))
    for rnd in inst.rounds:
        storage_nodes.extend(sorted(rnd.newcomers))

    for j in storage_nodes:
        vertices.add(in_v(j))
        vertices.add(out_v(j))
        edges.append((in_v(j), out_v(j), alpha))
    for j in range(1, p.n + 1):
        edges.append((SOURCE, in_v(j), INF))

    for rnd in inst.rounds:
        for i in sorted(rnd.helpers):
            a = aux_v(i, rnd.s)
            vertices.add(a)
            edges.append((out_v(i), a, beta))
            for j in sorted(rnd.newcomers):
                edges.append((a, in_v(j), INF))

    for j in sorted(dc.K):
        edges.append((out_v(j), sink, INF))

    return FlowGraph(inst=inst, dc=dc, vertices=frozenset(vertices),
                     edges=tuple(edges), source=SOURCE, sink=sink)


def _check_cut(g: FlowGraph, X) -> None:
    if g.source not in X:
        raise ValueError("cut must contain the source")
    if g.sink in X:
        raise ValueError("cut must exclude the sink")


def cut_capacity(g: FlowGraph, X):
    """Sum of capacities of edges leaving X; INF if an infinite edge is cut."""
    _check_cut(g, X)
    total = Fraction(0)
    for u, v, cap in g.edges:
        if u in X and v not in X:
            if cap is INF:
                return INF
            total += cap
    return total


def _head_round(g: FlowGraph, v) -> int | None:
    """Repair round owning vertex v (0 = initial stage, None = collector)."""
    p = g.inst.params
    tag = v[0]
    if tag in ("in", "out"):
        j = v[1]
        return 0 if j <= p.n else (j - p.n + p.r - 1) // p.r
    if tag == "aux":
        return v[2]
    return None


def round_contribution(g: FlowGraph, X, s: int):
    """Capacity of cut edges whose head belongs to round s's vertex set.

    Collector in-edges belong to no round; see collector_contribution.
    """
    _check_cut(g, X)
    if s < 0 or s > g.inst.params.T:
        raise ValueError(f"round index {s} out of range")
    total = Fraction(0)
    for u, v, cap in g.edges:
        if u in X and v not in X and _head_round(g, v) == s:
            if cap is INF:
                return INF
            total += cap
    return total


def collector_contribution(g: FlowGraph, X):
    """INF if a collector in-edge is cut, else 0 (those edges are infinite)."""
    _check_cut(g, X)
    for u, v, cap in g.edges:
        if v == g.sink and u in X:
            return INF
    return Fraction(0)


def capacity_str(cap) -> str:
    return "inf" if cap is INF else str(cap)


def edge_list_text(g: FlowGraph) -> str:
    """One edge per line: from-label, to-label, capacity."""
    lines = [f"{vertex_label(u)} {vertex_label(v)} {capacity_str(cap)}"
             for u, v, cap in g.edges]
    return "\n".join(lines)
