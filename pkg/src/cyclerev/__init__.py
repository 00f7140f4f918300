"""Sequential cycle reversal on finite digraphs and tournaments."""

from .analysis import (
    Bicover,
    Embedding,
    arc_length,
    arc_weight,
    dichromatic_number,
    digirth,
    find_bad_cycle,
    find_bicover,
    is_good_cycle,
    sigma,
    validate_bicover,
)
from .digraph import (
    Cycle,
    Digraph,
    apply_sequence,
    build,
    enumerate_simple_cycles,
    find_cycle,
    is_tournament,
    reverse_cycle,
    strong_components,
    topological_order,
)
from .generators import blowup, iterated_construction, paley, random_tournament, transitive
from .reduction import bicover_tournament, charbit_reduce, crs_exact, transform_same_score
from .structure import (
    canonical_decomposition,
    edge_stabilizer,
    sequences_equivalent,
    triangulate_cycle,
    triangulate_sequence,
)
from .widgets import (
    edge_disjoint_return_paths,
    reverse_arc_set,
    reverse_arc_widget,
    reverse_path_widget,
)

__version__ = "0.1.0"
