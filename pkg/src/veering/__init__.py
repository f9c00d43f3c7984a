"""Taut angle structures, veering colourings and strict angle structures on ideal triangulations."""
from .angles import (
    StrictWitness, TautAngleStructure, enumerate_taut_angle_structures,
    is_generalised_angle_structure, semi_angle_check, strict_angle_structure)
from .generators import MonodromyWord, layered_ptb, random_word
from .q_matching import (
    QMatchingSystem, QuadClass, QSolution, build_q_system, classify_quads, formal_euler,
    property_star_check, strictness_cross_check, vertical_only_solution)
from .taut_veering import (
    TautStructure, VeeringColouring, check_agol_ordering, find_taut_structures,
    find_veering_colouring, one_sided_degrees, veering_report)
from .tgl import ParseError, parse_triangulation, serialize
from .triangulation import (
    EdgeClass, NonOrientableError, QuadId, QuadSequence, Triangulation, TriangulationError,
    edge_classes, orient, quad_sequence, tau, vertex_links)

__all__ = [
    "EdgeClass", "MonodromyWord", "NonOrientableError", "ParseError", "QMatchingSystem",
    "QSolution", "QuadClass", "QuadId", "QuadSequence", "StrictWitness", "TautAngleStructure",
    "TautStructure", "Triangulation", "TriangulationError", "VeeringColouring",
    "build_q_system", "check_agol_ordering", "classify_quads", "edge_classes",
    "enumerate_taut_angle_structures", "find_taut_structures", "find_veering_colouring",
    "formal_euler", "is_generalised_angle_structure", "layered_ptb", "one_sided_degrees",
    "orient", "parse_triangulation", "property_star_check", "quad_sequence", "random_word",
    "semi_angle_check", "serialize", "strict_angle_structure", "strictness_cross_check", "tau",
    "veering_report", "vertex_links", "vertical_only_solution",
]
