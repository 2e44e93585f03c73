"""System parameters, repair schedules, and instance enumeration.

A wireless distributed storage system is described by the tuple
(n, k, d, r, alpha, beta, T): n storage nodes, any k of which suffice to
retrieve the file, d helpers broadcasting beta packets each per repair
round, r newcomers per round, per-node storage alpha, and T repair rounds.
An *instance* fixes which nodes fail and which active nodes help in each
round.  Node ids are never recycled: the newcomers of round s are
{n+(s-1)r+1, ..., n+sr}.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator


@dataclass(frozen=True)
class SystemParams:
    n: int
    k: int
    d: int
    r: int
    alpha: Fraction
    beta: Fraction
    T: int


@dataclass(frozen=True)
class RepairRound:
    s: int
    failed: frozenset
    newcomers: frozenset
    helpers: frozenset


@dataclass(frozen=True)
class Instance:
    params: SystemParams
    rounds: tuple


@dataclass(frozen=True)
class DataCollectorSpec:
    """A reader joining after round s and connecting to the k nodes in K."""

    s: int
    K: frozenset


def validate_params(p: SystemParams) -> list:
    """Return the list of violated invariants (empty list means valid)."""
    v = []
    if p.n < 1:
        v.append("n must be a positive integer")
    if p.k < 1:
        v.append("k must be a positive integer")
    if p.d < 1:
        v.append("d must be a positive integer")
    if p.r < 1:
        v.append("r must be a positive integer")
    if p.T < 0:
        v.append("T must be a nonnegative integer")
    if p.alpha < 0:
        v.append("alpha must be nonnegative")
    if p.beta < 0:
        v.append("beta must be nonnegative")
    if p.d < p.k:
        v.append("d >= k violated: need at least k helpers per round")
    if p.r > p.n - p.d:
        v.append("r <= n - d violated: fewer than d nodes stay active")
    if p.k > p.n:
        v.append("k <= n violated")
    return v


def require_valid(p: SystemParams) -> None:
    violations = validate_params(p)
    if violations:
        raise ValueError("; ".join(violations))


def newcomer_ids(p: SystemParams, s: int) -> range:
    """Ids of the newcomers joining in round s (1-based rounds)."""
    return range(p.n + (s - 1) * p.r + 1, p.n + s * p.r + 1)


def active_nodes(inst: Instance, s: int) -> frozenset:
    """Nodes alive after round s (s=0 is the initialization stage)."""
    if s < 0 or s > inst.params.T:
        raise ValueError(f"round index {s} out of range 0..{inst.params.T}")
    active = set(range(1, inst.params.n + 1))
    for rnd in inst.rounds[:s]:
        active -= rnd.failed
        active |= rnd.newcomers
    return frozenset(active)


def instance_violations(inst: Instance) -> list:
    """All schedule invariants violated by inst (empty means valid)."""
    p = inst.params
    v = validate_params(p)
    if len(inst.rounds) != p.T:
        v.append(f"expected {p.T} rounds, got {len(inst.rounds)}")
        return v
    active = set(range(1, p.n + 1))
    seen_newcomers = set()
    for i, rnd in enumerate(inst.rounds, start=1):
        if rnd.s != i:
            v.append(f"round {i} carries index {rnd.s}")
        if len(rnd.failed) != p.r:
            v.append(f"round {i}: |failed| != r")
        if not rnd.failed <= active:
            v.append(f"round {i}: failed nodes not active")
        expected = frozenset(newcomer_ids(p, i))
        if rnd.newcomers != expected:
            v.append(f"round {i}: newcomers must be {sorted(expected)}")
        if rnd.newcomers & seen_newcomers:
            v.append(f"round {i}: newcomer id reused")
        seen_newcomers |= rnd.newcomers
        if len(rnd.helpers) != p.d:
            v.append(f"round {i}: |helpers| != d")
        if not rnd.helpers <= (active - rnd.failed):
            v.append(f"round {i}: helpers not active at start of round")
        if rnd.helpers & rnd.newcomers:
            v.append(f"round {i}: helpers overlap newcomers")
        active -= rnd.failed
        active |= rnd.newcomers
    return v


def _subset_choices(pool: frozenset, size: int, touched: frozenset,
                    canonical: bool) -> Iterator[tuple]:
    """Size-subsets of pool; canonical mode treats never-referenced nodes as
    interchangeable and only picks lowest-index prefixes among them."""
    if not canonical:
        yield from combinations(sorted(pool), size)
        return
    used = sorted(pool & touched)
    fresh = sorted(pool - touched)
    for j in range(max(0, size - len(fresh)), min(size, len(used)) + 1):
        take_fresh = tuple(fresh[: size - j])
        if len(take_fresh) < size - j:
            continue
        for sub in combinations(used, j):
            yield tuple(sorted(sub + take_fresh))


def enumerate_instances(p: SystemParams, limit: int | None = None,
                        canonical: bool = False) -> Iterator[Instance]:
    """Yield valid instances of p.

    With canonical=True a symmetry reduction is applied: initial nodes that
    have never appeared in a failed or helper set are interchangeable, so
    failures and helper fill-ins among them are taken as lowest-index
    prefixes only.  This is a search-space heuristic; full enumeration
    (canonical=False) is the ground truth.  With limit, the stream stops
    after limit instances (callers wanting a truncation flag should probe
    for one extra element).
    """
    require_valid(p)

    def rec(s, active, touched, rounds):
        if s > p.T:
            yield Instance(p, tuple(rounds))
            return
        newcomers = frozenset(newcomer_ids(p, s))
        for failed in _subset_choices(active, p.r, touched, canonical):
            fs = frozenset(failed)
            survivors = active - fs
            touched2 = touched | fs
            for helpers in _subset_choices(survivors, p.d, touched2, canonical):
                hs = frozenset(helpers)
                rnd = RepairRound(s, fs, newcomers, hs)
                yield from rec(s + 1, survivors | newcomers,
                               touched2 | hs | newcomers, rounds + [rnd])

    emitted = 0
    for inst in rec(1, frozenset(range(1, p.n + 1)), frozenset(), []):
        yield inst
        emitted += 1
        if limit is not None and emitted >= limit:
            return


def enumerate_collectors(inst: Instance) -> Iterator[DataCollectorSpec]:
    """All (s, K) collector specs: s in 0..T, K any k-subset of the nodes
    active after round s.  Count is (T+1) * C(n, k)."""
    for s in range(inst.params.T + 1):
        for K in combinations(sorted(active_nodes(inst, s)), inst.params.k):
            yield DataCollectorSpec(s, frozenset(K))


# ---------------------------------------------------------------------------
# Serialization: the interchange format used by the CLI.

def params_to_dict(p: SystemParams) -> dict:
    return {"n": p.n, "k": p.k, "d": p.d, "r": p.r,
            "alpha": str(p.alpha), "beta": str(p.beta), "T": p.T}


def params_from_dict(doc: dict) -> SystemParams:
    return SystemParams(n=int(doc["n"]), k=int(doc["k"]), d=int(doc["d"]),
                        r=int(doc["r"]), alpha=Fraction(doc["alpha"]),
                        beta=Fraction(doc["beta"]), T=int(doc["T"]))


def instance_to_dict(inst: Instance) -> dict:
    return {
        "params": params_to_dict(inst.params),
        "rounds": [
            {"s": rnd.s, "failed": sorted(rnd.failed),
             "newcomers": sorted(rnd.newcomers), "helpers": sorted(rnd.helpers)}
            for rnd in inst.rounds
        ],
    }


def instance_from_dict(doc: dict) -> Instance:
    params = params_from_dict(doc["params"])
    rounds = tuple(
        RepairRound(s=int(rd["s"]), failed=frozenset(rd["failed"]),
                    newcomers=frozenset(rd["newcomers"]),
                    helpers=frozenset(rd["helpers"]))
        for rd in doc["rounds"]
    )
    inst = Instance(params, rounds)
    violations = instance_violations(inst)
    if violations:
        raise ValueError("invalid instance document: " + "; ".join(violations))
    return inst


def dump_instance(inst: Instance) -> str:
    return json.dumps(instance_to_dict(inst), indent=2)


def load_instance(text: str) -> Instance:
    return instance_from_dict(json.loads(text))
