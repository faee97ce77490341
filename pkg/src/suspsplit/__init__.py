"""Degeneracy filtrations of simplicial spaces and their stable splittings, computed exactly."""
from .calculus import (
    chi,
    composite_degeneracy,
    composite_face,
    delta_components,
    delta_filtration_check,
    enumerate_admissible,
    triangularity_check,
)
from .constructions import (
    AbstractSimplicialComplex,
    FiniteGroup,
    InputError,
    builtin_spaces,
    cech_nerve,
    commuting_nerve,
    order_complex,
    product,
    read_complex,
    read_group,
    rep_nerve,
)
from .filtration import (
    FiltrationStage,
    PointedQuotient,
    degeneracy_degree,
    filtration_stage,
    intersection_check,
    stage_quotient,
    wedge_decomposition,
)
from .homology import ChainComplex, HomologyGroups, InducedMap, homology, induced_map, normalized_chains
from .realization import segal_E1, total_complex, verify_corollary_shift, verify_realization_quotients
from .reports import Report
from .simplicial import (
    FiniteSimplicialSet,
    SimplexRef,
    SimplicialMap,
    degeneracy,
    face,
    normal_form,
    simplices,
    validate_identities,
)
from .snf import smith_invariants, smith_normal_form
from .space import SimplicialSpace, SimplicialSpaceMap
from .splitting import (
    build_H,
    hopf_component,
    verify_block_triangularity,
    verify_naturality,
    verify_restriction,
    verify_theorem_splitting,
)

__version__ = "0.1.0"

__all__ = [
    "AbstractSimplicialComplex",
    "build_H",
    "builtin_spaces",
    "cech_nerve",
    "ChainComplex",
    "chi",
    "commuting_nerve",
    "composite_degeneracy",
    "composite_face",
    "degeneracy",
    "degeneracy_degree",
    "delta_components",
    "delta_filtration_check",
    "enumerate_admissible",
    "face",
    "filtration_stage",
    "FiltrationStage",
    "FiniteGroup",
    "FiniteSimplicialSet",
    "homology",
    "HomologyGroups",
    "hopf_component",
    "induced_map",
    "InducedMap",
    "InputError",
    "intersection_check",
    "normal_form",
    "normalized_chains",
    "order_complex",
    "PointedQuotient",
    "product",
    "read_complex",
    "read_group",
    "rep_nerve",
    "Report",
    "segal_E1",
    "SimplexRef",
    "simplices",
    "SimplicialMap",
    "SimplicialSpace",
    "SimplicialSpaceMap",
    "smith_invariants",
    "smith_normal_form",
    "stage_quotient",
    "total_complex",
    "triangularity_check",
    "validate_identities",
    "verify_block_triangularity",
    "verify_corollary_shift",
    "verify_naturality",
    "verify_realization_quotients",
    "verify_restriction",
    "verify_theorem_splitting",
    "wedge_decomposition",
]
