"""Exact toric methods for families of integer programs.

Given an integer matrix A and an integer cost vector c, this package
computes, with no floating point anywhere:

  * the regular subdivision of cone(A) induced by c, with exact dual
    certificates (`toricip.cones`);
  * group relaxations of the programs min{c.x : Ax=b, x>=0} via lattice
    reformulations, exact branch-and-bound, and per-face solvability tests
    (`toricip.relaxations`);
  * the toric ideal of A, reduced Groebner bases under cost orders, initial
    ideals, standard-pair decompositions, and the Gomory-family and total
    dual integrality tests (`toricip.groebner`);
  * Hilbert bases of pointed rational cones and the normality ladder
    (`toricip.cones`);
  * the full census of initial ideals over all generic costs by Groebner
    fan traversal (`toricip.fan`);
  * a deterministic command line interface (`toricip.cli`).
"""

__version__ = "0.1.0"

from .errors import (
    ConeNotPointedError,
    ConsistencyError,
    InfeasibleError,
    InfeasibleUError,
    NonGenericCostError,
    NotAFacetError,
    NotDeltaNormalError,
    NotPointedError,
    NotPureError,
    OutsideConeError,
    RankDeficientError,
    SeedNotFoundError,
    SingularBasisError,
    ToricIPError,
    UnboundedRelaxationError,
    ValidationError,
)
from .lattice import ProblemInstance, kernel_lattice_basis, lattice_index, validate_problem
from .cones import (
    Face,
    HilbertBasis,
    Triangulation,
    construct_gomory_cost,
    hilbert_basis,
    is_delta_normal,
    is_normal,
    is_supernormal,
    is_unimodular,
    regular_subdivision,
    smallest_containing_face,
)
from .groebner import (
    Binomial,
    StandardPair,
    groebner_basis,
    initial_ideal,
    is_gomory_family,
    kernel_implementation,
    normal_form,
    radical,
    standard_pair_decomposition,
    standard_pairs,
    tdi_check,
    toric_ideal,
    triangulation_from_radical,
)
from .relaxations import (
    IPSolution,
    RelaxationResult,
    fiber_point,
    gomory_relaxation_face,
    group_relax_solve,
    in_order_ideal,
    ip_solve_bruteforce,
    is_standard_polytope,
    reduced_cost,
    relaxation_is_bounded,
)
from .fan import (
    CensusReport,
    FanCell,
    GroebnerCone,
    IdealRecord,
    TriangulationRecord,
    census,
    enumerate_initial_ideals,
    flip,
    groebner_cone,
    representative_cost,
)

__all__ = [
    "__version__",
    "ProblemInstance",
    "validate_problem",
    "kernel_lattice_basis",
    "lattice_index",
    "Face",
    "Triangulation",
    "HilbertBasis",
    "regular_subdivision",
    "smallest_containing_face",
    "hilbert_basis",
    "is_normal",
    "is_delta_normal",
    "is_supernormal",
    "is_unimodular",
    "construct_gomory_cost",
    "Binomial",
    "StandardPair",
    "kernel_implementation",
    "toric_ideal",
    "groebner_basis",
    "initial_ideal",
    "normal_form",
    "standard_pairs",
    "standard_pair_decomposition",
    "is_gomory_family",
    "radical",
    "triangulation_from_radical",
    "tdi_check",
    "IPSolution",
    "RelaxationResult",
    "reduced_cost",
    "ip_solve_bruteforce",
    "fiber_point",
    "group_relax_solve",
    "relaxation_is_bounded",
    "gomory_relaxation_face",
    "in_order_ideal",
    "is_standard_polytope",
    "GroebnerCone",
    "FanCell",
    "IdealRecord",
    "TriangulationRecord",
    "CensusReport",
    "groebner_cone",
    "flip",
    "representative_cost",
    "enumerate_initial_ideals",
    "census",
    "ToricIPError",
    "ValidationError",
    "RankDeficientError",
    "ConeNotPointedError",
    "SingularBasisError",
    "OutsideConeError",
    "NotPointedError",
    "NotDeltaNormalError",
    "NonGenericCostError",
    "UnboundedRelaxationError",
    "InfeasibleError",
    "InfeasibleUError",
    "NotAFacetError",
    "NotPureError",
    "SeedNotFoundError",
    "ConsistencyError",
]
