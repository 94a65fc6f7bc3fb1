"""Oriented graph colouring: homomorphisms, girth, and explicit and random constructions."""

from .construct import T5, Witness, base_witness, construct, cycle_witness, extend, verify_witness
from .graph import (
    ACYCLIC,
    GraphError,
    LoopArc,
    ODGSyntaxError,
    OppositeArcs,
    OrientedGraph,
    VertexOutOfRange,
    directed_cycle,
    girth,
    is_tournament,
    new_oriented_graph,
    parse,
    serialize,
    short_cycles,
)
from .hom import (
    automorphisms,
    enumerate_homomorphisms,
    find_homomorphism,
    is_core,
    is_homomorphism,
    is_pointed,
    is_uniquely_colourable,
    validate_oriented_colouring,
)
from .tournaments import OrderTooLarge, enumerate_tournaments, oriented_chromatic_number

__version__ = "0.1.0"
