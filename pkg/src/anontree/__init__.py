"""Leader election with advice in anonymous port-labelled trees.

A library and CLI simulator for the synchronous LOCAL model on anonymous
trees: port-tree data model, radius-r views, election schemes across the
whole time/advice tradeoff range, adversarial tree families, a brute-force
feasibility oracle, and an advice-size measurement harness.
"""

from .oracles import FeasibilityResult, map_based_election, xi
from .schemes import (
    ALL_SCHEMES,
    AdviceScheme,
    diam_minus_1_scheme,
    even_elect_scheme,
    full_code_scheme,
    full_view_scheme,
    odd_elect_scheme,
    run_scheme,
    trie_scheme,
)
from .sim import ElectionOutcome, NodeProgram, run_election, simulate_rounds, verify_outcome
from .tree import (
    Centre,
    PortTree,
    TreeCode,
    canonical_code,
    centre,
    decode_code,
    is_symmetric,
    outgoing_ports,
    path_and_seq,
    rooted_code,
    validate,
)
from .views import (
    View,
    classify_paths,
    extract_view,
    gateway,
    reconstruct_tree,
    signature,
    views_equal,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_SCHEMES",
    "AdviceScheme",
    "Centre",
    "ElectionOutcome",
    "FeasibilityResult",
    "NodeProgram",
    "PortTree",
    "TreeCode",
    "View",
    "canonical_code",
    "centre",
    "classify_paths",
    "decode_code",
    "diam_minus_1_scheme",
    "even_elect_scheme",
    "extract_view",
    "full_code_scheme",
    "full_view_scheme",
    "gateway",
    "is_symmetric",
    "map_based_election",
    "odd_elect_scheme",
    "outgoing_ports",
    "path_and_seq",
    "reconstruct_tree",
    "rooted_code",
    "run_election",
    "run_scheme",
    "signature",
    "simulate_rounds",
    "trie_scheme",
    "validate",
    "verify_outcome",
    "views_equal",
    "xi",
]
