"""Exact computations with circuits of toric ideals.

The main entry points are re-exported here; see the submodules for the rest.
"""

from .circuits import (
    Binomial,
    Circuit,
    Configuration,
    enumerate_circuits,
    harmonious_circuit,
    is_circuit,
    matroid_circuit_supports,
)
from .classify import (
    ConnectorCertificate,
    GeneratorReport,
    TheoremViolation,
    check_generation_by_circuits,
    find_connector,
    has_square_free_term,
    is_balanced,
    is_connector,
    is_homogeneous,
    is_normal_up_to,
)
from .graphs import (
    EdgeRingReport,
    GraphCircuit,
    Multigraph,
    classify_graph_circuit,
    enumerate_graph_circuits,
    incidence_configuration,
    parse_graph,
    verify_edge_ring_theorem,
    walk_binomial,
)
from .groebner import (
    BinomialIdeal,
    GroebnerBasis,
    MonomialOrder,
    buchberger,
    ideal_membership,
    minimal_binomial_generators,
    toric_ideal_generators,
)
from .linalg import IntMatrix, kernel_lattice_basis, parse_matrix, primitive_part

__version__ = "0.1.0"
