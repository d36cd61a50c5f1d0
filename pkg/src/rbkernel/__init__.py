"""Kernelization toolkit for red/blue domination on planar graphs."""

from .graph import (
    BLUE,
    RED,
    ColorError,
    GraphError,
    Instance,
    RBGraph,
    SameVertexError,
    SanitizeReport,
    UnknownVertexError,
    sanitize,
)
from .kernelizer import (
    KernelResult,
    KernelTrace,
    RuleApplication,
    apply_rule,
    find_rule1,
    find_rule2,
    find_rule3,
    find_rule4,
    is_reduced,
    kernelize,
    lift_solution,
    replay_trace,
)
from .planar import (
    Face,
    KuratowskiWitness,
    PlanarityResult,
    PlaneGraph,
    bipartite_euler_bound,
    is_planar,
    rbgraph_planarity,
)
from .solver import SolveOutcome, decide_rbds, min_ds, min_rbds, verify_solution
from .transforms import face_cover_to_rbds, rbds_to_ds
from .generators import gen_grid, gen_matching, gen_random_planar

__version__ = "0.1.0"

__all__ = [
    "BLUE", "RED", "RBGraph", "Instance", "SanitizeReport", "sanitize",
    "GraphError", "UnknownVertexError", "ColorError", "SameVertexError",
    "KernelResult", "KernelTrace", "RuleApplication",
    "find_rule1", "find_rule2", "find_rule3", "find_rule4",
    "apply_rule", "is_reduced", "kernelize", "lift_solution", "replay_trace",
    "SolveOutcome", "verify_solution", "min_rbds", "decide_rbds", "min_ds",
    "PlaneGraph", "Face", "PlanarityResult", "KuratowskiWitness",
    "is_planar", "rbgraph_planarity", "bipartite_euler_bound",
    "face_cover_to_rbds", "rbds_to_ds",
    "gen_grid", "gen_matching", "gen_random_planar",
]
