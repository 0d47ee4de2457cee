"""Connected Turan numbers for Berge paths in uniform hypergraphs.

Exact Berge path/cycle detection, generators for the extremal families,
closed-form value oracles, an exhaustive isomorphism-reduced search for
small parameters, and checkers for the sparse-neighborhood structural
lemma behind the upper-bound arguments.
"""

from .berge import (
    BergeWitness,
    contains_berge_cycle,
    contains_berge_path,
    longest_berge_path,
    verify_witness,
)
from .constructions import (
    FamilyParamError,
    bp3_free_family,
    bp4_free_family,
    clique_pendant_family,
    cycle_satellite_family,
    family_names,
    hub_family,
    make_family,
    multi_family,
    sunflower_family,
    verify_family_output,
)
from .formulas import (
    FormulaRangeError,
    FormulaResult,
    bc_value,
    classical_bound,
    conn_bp_value,
)
from .hypergraph import (
    Hypergraph,
    HypergraphError,
    build,
    canonical_form,
    canonical_key,
    from_canonical_string,
    from_json,
    from_text,
    hyperedge_neighborhood,
    induced_subhypergraph,
    is_connected,
)
from .search import (
    ConjectureReport,
    FamilySpec,
    SearchLimitError,
    SearchOutcome,
    SparseSetReport,
    conjecture_check,
    enumerate_connected_free,
    exact_ex_conn,
    sparse_set_check,
    sparse_set_constructive,
)

__version__ = "0.1.0"

__all__ = [
    "BergeWitness",
    "ConjectureReport",
    "FamilyParamError",
    "FamilySpec",
    "FormulaRangeError",
    "FormulaResult",
    "Hypergraph",
    "HypergraphError",
    "SearchLimitError",
    "SearchOutcome",
    "SparseSetReport",
    "bc_value",
    "bp3_free_family",
    "bp4_free_family",
    "build",
    "canonical_form",
    "canonical_key",
    "classical_bound",
    "clique_pendant_family",
    "conjecture_check",
    "conn_bp_value",
    "contains_berge_cycle",
    "contains_berge_path",
    "cycle_satellite_family",
    "enumerate_connected_free",
    "exact_ex_conn",
    "family_names",
    "from_canonical_string",
    "from_json",
    "from_text",
    "hub_family",
    "hyperedge_neighborhood",
    "induced_subhypergraph",
    "is_connected",
    "longest_berge_path",
    "make_family",
    "multi_family",
    "sparse_set_check",
    "sparse_set_constructive",
    "sunflower_family",
    "verify_family_output",
    "verify_witness",
]
