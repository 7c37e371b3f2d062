"""Exact enumeration, asymptotic estimation and uniform sampling of graphs
and multigraphs whose vertex degrees all lie in a prescribed set."""

from .degree_sets import (INFINITE, DegenerateShiftError, DegreeSet,
                          parse_degree_set)
from .marked import (disjointness_factor, marked_multigraph_weight,
                     marked_multigraph_weight_series)
from .multigraph import GraphClass, Multigraph
from .saddlepoint import (AsymptoticCount, InfeasibleRegimeError,
                          RegularDegreeSetError, SaddlePoint,
                          acceptance_probability, loop_intensity, mean_degree,
                          mean_degree_slope, multigraph_count_asymptotic,
                          saddle_point, simple_graph_count_asymptotic,
                          solve_mean_degree)
from .sampling import (DegreeSequenceSampler, InfeasibleInstanceError,
                       SampleReport, SamplerExhausted, boltzmann_degree_law,
                       boltzmann_sample, boltzmann_tune, make_rng,
                       pair_half_edges)
from .tables import (CoefficientTable, build_table, infeasibility_reason,
                     mixed_power_coefficient, multigraph_weight,
                     power_coefficient)

__version__ = "0.1.0"

__all__ = [
    "INFINITE",
    "AsymptoticCount",
    "CoefficientTable",
    "DegenerateShiftError",
    "DegreeSequenceSampler",
    "DegreeSet",
    "GraphClass",
    "InfeasibleInstanceError",
    "InfeasibleRegimeError",
    "Multigraph",
    "RegularDegreeSetError",
    "SaddlePoint",
    "SampleReport",
    "SamplerExhausted",
    "acceptance_probability",
    "boltzmann_degree_law",
    "boltzmann_sample",
    "boltzmann_tune",
    "build_table",
    "disjointness_factor",
    "infeasibility_reason",
    "loop_intensity",
    "make_rng",
    "marked_multigraph_weight",
    "marked_multigraph_weight_series",
    "mean_degree",
    "mean_degree_slope",
    "mixed_power_coefficient",
    "multigraph_count_asymptotic",
    "multigraph_weight",
    "pair_half_edges",
    "parse_degree_set",
    "power_coefficient",
    "saddle_point",
    "simple_graph_count_asymptotic",
    "solve_mean_degree",
]
