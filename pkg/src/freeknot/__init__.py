"""Cobordism invariants of free knots computed from Gauss diagrams."""

from freeknot.diagram import (
    ChordDiagram,
    GaussWordError,
    canonical_form,
    canonical_key,
    crossing_weights,
    enumerate_knots,
    even_self_chords,
    is_even_chord,
    parse_gauss_words,
    random_knot,
    self_interlacement,
    serialize,
)
from freeknot.invariant import (
    GammaGraph,
    InvariantValue,
    LinearCombination,
    delta,
    delta_n,
    gamma_graph,
    i_n,
    i_of_diagram,
    j_number,
    split_smooth,
)

__version__ = "0.1.0"
