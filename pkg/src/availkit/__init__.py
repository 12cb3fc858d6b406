"""Steady-state availability modelling for repairable systems.

Components carry either a direct availability, an MTBF/MDT pair, or the
full maintainability pipeline (MTTRes, MLDT, MADT, PNRS, TAT). Systems
are reliability block diagram trees (series, parallel, k-of-n, bridge)
or two-terminal networks evaluated by reduction and pivotal factoring.
Brute-force oracles (exhaustive enumeration and a reproducible Monte
Carlo sampler) cross-check every evaluator, and a small model-file
format plus CLI wrap the lot.
"""

from .blocks import Block, Bridge, KofN, Leaf, Parallel, Series, leaves
from .components import (
    Component,
    ComponentSpec,
    DirectAvailability,
    MtbfMaintainability,
    MtbfMdt,
    component_availability,
    component_mdt,
    derive_environment,
)
from .evaluate import (
    EvaluationError,
    eval_block,
    eval_bridge,
    eval_kofn,
    eval_parallel,
    eval_series,
)
from .maintainability import (
    MaintainabilityParams,
    MeanTimes,
    availability_from_times,
    mean_down_time,
)
from .model import Diagnostic, Model, validate
from .modelfile import ParseDiagnostic, SourceSpan, format_model, parse_model
from .network import (
    DEFAULT_PIVOT_DEPTH,
    Edge,
    Network,
    PivotDepthError,
    ReducedNetwork,
    eval_network,
    reduce_network,
)
from .oracle import (
    DEFAULT_ENUMERATION_CAP,
    EnumerationCapError,
    enumerate_availability,
    instances,
    monte_carlo_availability,
    structure_function,
)
from .probability import PROBABILITY_TOLERANCE, Probability, unavailability
from .report import (
    MINUTES_PER_YEAR,
    AvailabilityReport,
    ComponentLine,
    build_report,
    nines,
    render_json,
    render_text,
)

__version__ = "0.1.0"

__all__ = [
    "AvailabilityReport",
    "Block",
    "Bridge",
    "Component",
    "ComponentLine",
    "ComponentSpec",
    "DEFAULT_ENUMERATION_CAP",
    "DEFAULT_PIVOT_DEPTH",
    "Diagnostic",
    "DirectAvailability",
    "Edge",
    "EnumerationCapError",
    "EvaluationError",
    "KofN",
    "Leaf",
    "MINUTES_PER_YEAR",
    "MaintainabilityParams",
    "MeanTimes",
    "Model",
    "MtbfMaintainability",
    "MtbfMdt",
    "Network",
    "PROBABILITY_TOLERANCE",
    "Parallel",
    "ParseDiagnostic",
    "PivotDepthError",
    "Probability",
    "ReducedNetwork",
    "Series",
    "SourceSpan",
    "availability_from_times",
    "build_report",
    "component_availability",
    "component_mdt",
    "derive_environment",
    "enumerate_availability",
    "eval_block",
    "eval_bridge",
    "eval_kofn",
    "eval_network",
    "eval_parallel",
    "eval_series",
    "format_model",
    "instances",
    "leaves",
    "mean_down_time",
    "monte_carlo_availability",
    "nines",
    "parse_model",
    "reduce_network",
    "render_json",
    "render_text",
    "structure_function",
    "unavailability",
    "validate",
]
