"""Recognition and exact embedding of two-clique-against-clique graphs in
the plane under the max metric with unit threshold."""

from .chords import (
    ChordGraph,
    RigidPair,
    audit_assumption1,
    build_chord_graph,
    classify_nonedges,
    compute_ab_sets,
    enumerate_rigid_pairs,
)
from .embedding import (
    Embedding,
    OrderPair,
    brute_force_orders,
    chord_distribution,
    completion,
    embed,
    make_order_pair,
    realize_unit_interval,
    verify_embedding,
    verify_orders,
)
from .errors import (
    GenerationError,
    InputError,
    OrderConstructionError,
    ParseError,
    ScopeError,
    StructuralError,
)
from .graph import (
    BabPartition,
    Graph,
    build_graph,
    is_unit_interval_order,
    validate_bab,
)
from .instances import (
    emit_certificate,
    emit_instance,
    generate_bab,
    parse_certificate,
    parse_instance,
)
from .necessary import NecessaryStatus, check_necessary, check_rigid_free, color_constrained
from .orders import (
    LinearOrder,
    build_order1,
    build_order2,
    check_sufficient,
    derive_relations,
    validate_partial_order,
)
from .pipeline import NO, UNDECIDED, YES, Certificate, recognize, verify_certificate

__version__ = "0.1.0"

__all__ = [
    "BabPartition",
    "Certificate",
    "ChordGraph",
    "Embedding",
    "GenerationError",
    "Graph",
    "InputError",
    "LinearOrder",
    "NO",
    "NecessaryStatus",
    "OrderConstructionError",
    "OrderPair",
    "ParseError",
    "RigidPair",
    "ScopeError",
    "StructuralError",
    "UNDECIDED",
    "YES",
    "audit_assumption1",
    "brute_force_orders",
    "build_chord_graph",
    "build_graph",
    "build_order1",
    "build_order2",
    "check_necessary",
    "check_rigid_free",
    "check_sufficient",
    "chord_distribution",
    "classify_nonedges",
    "color_constrained",
    "completion",
    "compute_ab_sets",
    "derive_relations",
    "embed",
    "emit_certificate",
    "emit_instance",
    "enumerate_rigid_pairs",
    "generate_bab",
    "is_unit_interval_order",
    "make_order_pair",
    "parse_certificate",
    "parse_instance",
    "realize_unit_interval",
    "recognize",
    "validate_bab",
    "validate_partial_order",
    "verify_certificate",
    "verify_embedding",
    "verify_orders",
]
