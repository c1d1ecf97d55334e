"""Higher independence complexes of graphs: enumeration, integral homology,
discrete Morse matchings and closed-form homotopy types."""

from .complexes import (ComplexTooLarge, SimplicialComplex, independence_complex,
                        is_r_independent, join)
from .formulas import HomotopyType, expected_homology
from .graphs import Graph, GraphError, from_spec
from .homology import HomologyGroup, HomologySummary, WindowError, reduced_homology, smith_normal_form
from .morse import Matching, MatchingError, MorseResult, verify_acyclic

__version__ = "0.1.0"

__all__ = [
    "ComplexTooLarge", "Graph", "GraphError", "HomologyGroup", "HomologySummary", "HomotopyType",
    "Matching", "MatchingError", "MorseResult", "SimplicialComplex", "WindowError", "expected_homology",
    "from_spec", "independence_complex", "is_r_independent", "join", "reduced_homology",
    "smith_normal_form", "verify_acyclic",
]
