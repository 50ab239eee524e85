"""Finite-model verification of lattice-valued filters and topologies.

The public surface is re-exported here; see the submodules for details.
"""

from .errors import (
    AxiomViolation,
    BottomAxiom,
    BottomNotPreserved,
    BudgetExceeded,
    EmptyFamily,
    EmptyGround,
    FfilError,
    GroundMismatch,
    InvalidTable,
    JoinAxiom,
    JoinNotPreserved,
    MeetsNotPreserved,
    Monotonicity,
    NoCoAdjoint,
    NotAChain,
    NotALattice,
    NotAPartialOrder,
    NotOnto,
    NotResiduated,
    ParseError,
    PreconditionUnmet,
    TensorAxiom,
    TensorNotIsotone,
    TensorNotPreserved,
    TopAxiom,
    TopNotIdempotentUnderTensor,
    TopNotPreserved,
    TopNotUnit,
    ValidationError,
    Violation,
)
from .filters import (
    FuzzyFilter,
    check_continuity,
    check_fuzzy_filter,
    compose_check,
    final_characterization_check,
    final_filter,
    finality_verdict,
    initial_filter,
    meet_filters,
    minimum_filter,
    point_filter,
)
from .ground import (
    FuzzySet,
    GroundMorphism,
    GroundSet,
    backward_powerset,
    forward_powerset,
    ground,
    ground_morphism,
    zadeh_forward,
)
from .instance import InstanceDocument, dumps, load, loads
from .lattice import (
    BOOL,
    CHAIN3,
    DIAMOND,
    LUK3,
    QmlLattice,
    QmlMorphism,
    bundled,
    chain,
    check_cqml,
    check_qml_morphism,
    co_adjoint,
    enumerate_morphisms,
    implication,
    residuum,
    right_adjoint,
    with_meet_tensor,
)
from .topology import (
    FuzzyTopology,
    check_fuzzy_topology,
    check_topo_continuity,
    enumerate_topologies,
    filter_to_topology,
    final_topology,
    functor_T_check,
)
from .ultrafilter import (
    chain_join,
    enumerate_filters,
    filter_leq,
    image_filter,
    maximal_filters,
    ultrafilter_characterization,
)
from .verdict import Verdict

__all__ = [
    "BOOL",
    "CHAIN3",
    "DIAMOND",
    "LUK3",
    "AxiomViolation",
    "BottomAxiom",
    "BottomNotPreserved",
    "BudgetExceeded",
    "EmptyFamily",
    "EmptyGround",
    "FfilError",
    "FuzzyFilter",
    "FuzzySet",
    "FuzzyTopology",
    "GroundMismatch",
    "GroundMorphism",
    "GroundSet",
    "InstanceDocument",
    "InvalidTable",
    "JoinAxiom",
    "JoinNotPreserved",
    "MeetsNotPreserved",
    "Monotonicity",
    "NoCoAdjoint",
    "NotAChain",
    "NotALattice",
    "NotAPartialOrder",
    "NotOnto",
    "NotResiduated",
    "ParseError",
    "PreconditionUnmet",
    "QmlLattice",
    "QmlMorphism",
    "TensorAxiom",
    "TensorNotIsotone",
    "TensorNotPreserved",
    "TopAxiom",
    "TopNotIdempotentUnderTensor",
    "TopNotPreserved",
    "TopNotUnit",
    "ValidationError",
    "Verdict",
    "Violation",
    "backward_powerset",
    "bundled",
    "chain",
    "chain_join",
    "check_continuity",
    "check_cqml",
    "check_fuzzy_filter",
    "check_fuzzy_topology",
    "check_qml_morphism",
    "check_topo_continuity",
    "co_adjoint",
    "compose_check",
    "dumps",
    "enumerate_filters",
    "enumerate_morphisms",
    "enumerate_topologies",
    "filter_leq",
    "filter_to_topology",
    "final_characterization_check",
    "final_filter",
    "final_topology",
    "finality_verdict",
    "forward_powerset",
    "functor_T_check",
    "ground",
    "ground_morphism",
    "image_filter",
    "implication",
    "initial_filter",
    "load",
    "loads",
    "maximal_filters",
    "meet_filters",
    "minimum_filter",
    "point_filter",
    "residuum",
    "right_adjoint",
    "ultrafilter_characterization",
    "with_meet_tensor",
    "zadeh_forward",
]

__version__ = "0.1.0"
