"""Exact verification toolkit for intersection-parity extremal problems.

Counts odd-intersection pairs in set families, builds the known extremal
and near-extremal constructions, runs exact minimum searches over whole
family classes at small ground sizes, and checks the resulting minima
against proven and conjectured bounds.
"""

from __future__ import annotations

from .constructions import (
    SteinerSystem,
    disjoint_k4_triples,
    eventown_pair,
    eventown_plus,
    example_f1,
    example_f2,
    example_x5,
    load_steiner,
    oddtown_plus,
    save_steiner,
    singletons,
    steiner_partition,
)
from .errors import (
    CapExceededError,
    DuplicateMemberError,
    FamilyFormatError,
    GroundSetMismatchError,
    InfeasibleSpecError,
    OddtownError,
    OracleSoundnessError,
    ParityError,
    SteinerValidationError,
    UniformityError,
)
from .gf2 import (
    BitSubset,
    Gf2Subspace,
    enumerate_subspace,
    inner_parity,
    kernel_of_functional,
    nullspace,
    orthogonal_complement,
    rank,
    span,
)
from .search import (
    SearchResult,
    SearchSpec,
    TheoremReport,
    local_search,
    min_ckt,
    min_op,
    minimize,
    verify_theorem,
)
from .setfamily import (
    ApplicationBound,
    LinkIdentity,
    OpReport,
    SetFamily,
    bipartite_oddtown_check,
    c_kt,
    check_application_bound,
    check_link_identity,
    is_eventown,
    is_oddtown,
    link,
    load_family,
    maximal_eventown_subfamily,
    op,
    op_count,
    op_density,
    save_family,
    shadow,
)

__version__ = "0.1.0"

__all__ = [
    "BitSubset",
    "Gf2Subspace",
    "SetFamily",
    "OpReport",
    "LinkIdentity",
    "ApplicationBound",
    "SteinerSystem",
    "SearchSpec",
    "SearchResult",
    "TheoremReport",
    "inner_parity",
    "span",
    "rank",
    "nullspace",
    "kernel_of_functional",
    "orthogonal_complement",
    "enumerate_subspace",
    "op",
    "op_count",
    "c_kt",
    "shadow",
    "link",
    "check_link_identity",
    "check_application_bound",
    "is_eventown",
    "is_oddtown",
    "maximal_eventown_subfamily",
    "bipartite_oddtown_check",
    "op_density",
    "load_family",
    "save_family",
    "eventown_pair",
    "eventown_plus",
    "singletons",
    "disjoint_k4_triples",
    "oddtown_plus",
    "example_x5",
    "example_f1",
    "example_f2",
    "steiner_partition",
    "load_steiner",
    "save_steiner",
    "minimize",
    "min_op",
    "min_ckt",
    "local_search",
    "verify_theorem",
    "OddtownError",
    "GroundSetMismatchError",
    "DuplicateMemberError",
    "UniformityError",
    "ParityError",
    "CapExceededError",
    "InfeasibleSpecError",
    "FamilyFormatError",
    "SteinerValidationError",
    "OracleSoundnessError",
]
