"""Matroid-constrained submodular partitioning: oracles, algorithms, verification."""
from .core import GroundSet, Partition
from .errors import (InfeasibleError, InternalInvariantError, InvalidArgumentError,
                     InvalidPartitionError, InvalidSubsetError, PropertyViolationError,
                     ResourceLimitError, SubMCPError, ValidationError)
from .submodular import (ExplicitTable, GraphCoverage, GraphCut, HypergraphCut, MatroidRank,
                         SumFunction, WeightedGraph, WeightedHypergraph, evaluate,
                         partition_value, verify_properties)
from .matroid import (ExplicitBasesMatroid, GraphicMatroid, LaminarMatroid, PartitionMatroid,
                      PavingMatroid, TreeEdgeMatroid, UniformMatroid, contract, dual,
                      has_transversal_basis, is_independent, matroid_intersection_max,
                      max_weight_common_independent, min_weight_basis, rank,
                      tree_edge_independent, truncate)
from .gomory_hu import GomoryHuTree, gomory_hu_tree, min_st_cut
from .algorithms import (AlgorithmTrace, TieBreakPolicy, brute_force_opt, cheapest_singleton,
                         double_tree_multiway_cut, gh_greedy, greedy_split, min_split_pair,
                         tree_multiway_cut)
from .instance import Instance, load_instance, save_instance
from .generators import generate
from .experiment import ExperimentReport, run_experiment

__version__ = "0.1.0"

__all__ = [
    "GroundSet", "Partition",
    "SubMCPError", "InvalidSubsetError", "InvalidPartitionError", "InvalidArgumentError",
    "ValidationError", "InfeasibleError", "PropertyViolationError", "ResourceLimitError",
    "InternalInvariantError",
    "WeightedGraph", "WeightedHypergraph", "GraphCut", "GraphCoverage", "HypergraphCut",
    "MatroidRank", "ExplicitTable", "SumFunction", "evaluate", "partition_value",
    "verify_properties",
    "UniformMatroid", "PartitionMatroid", "LaminarMatroid", "GraphicMatroid", "PavingMatroid",
    "ExplicitBasesMatroid", "TreeEdgeMatroid", "is_independent", "rank", "truncate",
    "contract", "dual", "min_weight_basis", "matroid_intersection_max",
    "max_weight_common_independent", "has_transversal_basis", "tree_edge_independent",
    "GomoryHuTree", "gomory_hu_tree", "min_st_cut",
    "TieBreakPolicy", "AlgorithmTrace", "gh_greedy", "greedy_split", "min_split_pair",
    "cheapest_singleton", "tree_multiway_cut", "double_tree_multiway_cut", "brute_force_opt",
    "Instance", "load_instance", "save_instance", "generate", "run_experiment",
    "ExperimentReport",
]
