"""Finite posets with the set-valued operators Max L and Min U, the symmetric
difference and Sheffer operators on complemented posets, and duals of Boolean
posets.
"""
from .cones import associativity_witness, max_l, meets_exist, min_u
from .complemented import (
    ComplementedPoset,
    boolean_sd_identity,
    check_sd_identities,
    distributivity_conditions,
    distributivity_conditions_agree,
    distributivity_witness,
    find_complementations,
    is_boolean,
    is_distributive,
    sd_associativity_witness,
    strong_subset_distributivity,
    sym_diff,
    sym_diff_table,
    weak_distributivity,
)
from .dual import (
    DualStructure,
    boolean_from_dual,
    check_dual_axioms,
    dual_from_boolean,
    dual_roundtrip,
)
from .errors import *  # noqa: F401,F403
from .io import PosetFile, StructureFile, load_fixture, parse_poset, parse_structure
from .operator_structure import (
    OperatorStructure,
    check_axioms,
    poset_from_structure,
    roundtrip_structure,
    structure_from_poset,
)
from .poset import ElementSet, FinitePoset
from .report import AxiomReport, Verdict
from .sheffer import (
    ShefferStructure,
    check_sheffer_axioms,
    poset_from_sheffer,
    sheffer_from_poset,
    sheffer_roundtrip,
)
from .tables import OperatorTable

__version__ = "0.1.0"
