"""Polynomial-time Whitehead minimization for finitely generated free groups."""

from .agraph import (AGraph, BranchInfo, PointedAGraph, build_bouquet, cyclic_core,
                     extract_basis, fold, hyperlink, pointed_normal_form, stallings_graph)
from .automorphisms import (AutStep, FirstKind, MinimizationTrace, SecondKind,
                            apply_to_cyclic_graph, apply_to_letter, apply_to_pointed_graph,
                            apply_to_word, enumerate_second_kind)
from .deciders import is_free_factor, is_primitive
from .hypergraph import (WhiteheadHypergraph, build_hypergraph, capacity, degree,
                         predicted_delta)
from .mincut import best_whitehead_move, brute_force_min_vcut, min_vcut
from .minimizer import (MinimizationResult, minimize_conjugacy, minimize_cyclic_word,
                        minimize_subgroup, minimize_tuple, minimize_word)
from .words import (Alphabet, CyclicWord, cyclic_core_word, format_word, invert_word,
                    parse_word, reduce_word)

__version__ = "0.1.0"

__all__ = [
    "AGraph", "BranchInfo", "PointedAGraph", "build_bouquet", "cyclic_core",
    "extract_basis", "fold", "hyperlink", "pointed_normal_form", "stallings_graph",
    "AutStep", "FirstKind", "MinimizationTrace", "SecondKind", "apply_to_cyclic_graph",
    "apply_to_letter", "apply_to_pointed_graph", "apply_to_word",
    "enumerate_second_kind", "is_free_factor", "is_primitive", "WhiteheadHypergraph",
    "build_hypergraph", "capacity", "degree", "predicted_delta", "best_whitehead_move",
    "brute_force_min_vcut", "min_vcut", "MinimizationResult", "minimize_conjugacy",
    "minimize_cyclic_word", "minimize_subgroup", "minimize_tuple", "minimize_word",
    "Alphabet", "CyclicWord", "cyclic_core_word", "format_word", "invert_word",
    "parse_word", "reduce_word",
]
