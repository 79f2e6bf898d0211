"""Structured argumentation and award checking for party-bounded disputes."""

from inventio.carneades import Audience, Labeling, ProofStandard, Status, evaluate, is_applicable, proof_subgraph
from inventio.dung import (
    AbstractFramework,
    admissible_sets,
    defends,
    derive_af,
    grounded_extension,
    is_admissible,
    is_conflict_free,
    preferred_extensions,
)
from inventio.model import (
    Argument,
    ArgumentGraph,
    Direction,
    Premise,
    PremiseKind,
    Statement,
    ValidationReport,
    topological_order,
    validate,
)
from inventio.pleadings import (
    Agent,
    Award,
    AwardItem,
    ComplianceReport,
    DispositiveItem,
    InventioMode,
    PatternLabel,
    PleadingsRecord,
    Proposal,
    Regime,
    Role,
    Solution,
    check_award,
    classify_pattern,
    enumerate_decisions,
    party_search_space,
)

__version__ = "0.1.0"
