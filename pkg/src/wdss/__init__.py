"""Capacity analysis and simulation of broadcast repair in wireless
distributed storage systems."""

from .kernels import BACKEND as KERNEL_BACKEND
from .model import (DataCollectorSpec, Instance, RepairRound, SystemParams,
                    enumerate_collectors, enumerate_instances,
                    validate_params)
from .flowgraph import INF, build_graph, cut_capacity
from .mincut import instance_capacity, max_flow_min_cut, storage_capacity
from .capacity_bound import (adversarial_instance, c_lb, effective_horizon,
                             verify_truncation)
from .tradeoff import (dominance_report, ms_point, mt_point, sweep_curve,
                       tau_of)

__all__ = [
    "KERNEL_BACKEND", "DataCollectorSpec", "Instance", "RepairRound",
    "SystemParams", "enumerate_collectors", "enumerate_instances",
    "validate_params", "INF", "build_graph", "cut_capacity",
    "instance_capacity", "max_flow_min_cut", "storage_capacity",
    "adversarial_instance", "c_lb", "effective_horizon", "verify_truncation",
    "dominance_report", "ms_point", "mt_point", "sweep_curve", "tau_of",
]
