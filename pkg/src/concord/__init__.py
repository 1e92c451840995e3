"""Reasoning about comparative preference statements from several stakeholders.

The package answers three kinds of question about statements like
"alternative a beats alternative b": whether a set of them can be satisfied by
an importance model, what a set entails, and whether several stakeholders
admit a middle ground (and if so, which ones).
"""

from .domain import (
    Alternative,
    Combiner,
    Profile,
    Stakeholder,
    Statement,
    Triviality,
    VariableSpace,
    binarize,
    complement,
    dedupe_statements,
)
from .dsl import parse_profile, render_profile
from .errors import (
    CapacityError,
    ConcordError,
    DomainMismatchError,
    IndeterminateError,
    ParseError,
    TrivialStakeholderError,
)
from .midground import (
    binary_language,
    check_postulates,
    construct_mgs,
    exists_mg_hier,
    exists_mg_lex,
    full_language,
    hier_candidates,
    lex_candidates,
)
from .models import (
    Comparison,
    HierarchicalModel,
    LexicographicModel,
    Model,
    compare,
    satisfies,
    satisfies_set,
)
from .reasoner import (
    DEFAULT_LIMITS,
    Limits,
    classify,
    classify_lex,
    entails,
    equivalent,
    is_consistent,
    is_consistent_hier,
    is_consistent_lex,
)
from .results import (
    ConsistencyResult,
    ExistenceResult,
    MiddleGroundSet,
    PostulateCheck,
    PostulateReport,
    SearchStats,
)

__version__ = "0.1.0"

__all__ = [
    "Alternative",
    "CapacityError",
    "Combiner",
    "Comparison",
    "ConcordError",
    "ConsistencyResult",
    "DEFAULT_LIMITS",
    "DomainMismatchError",
    "ExistenceResult",
    "HierarchicalModel",
    "IndeterminateError",
    "LexicographicModel",
    "Limits",
    "MiddleGroundSet",
    "Model",
    "ParseError",
    "PostulateCheck",
    "PostulateReport",
    "Profile",
    "SearchStats",
    "Stakeholder",
    "Statement",
    "Triviality",
    "TrivialStakeholderError",
    "VariableSpace",
    "binarize",
    "binary_language",
    "check_postulates",
    "classify",
    "classify_lex",
    "compare",
    "complement",
    "construct_mgs",
    "dedupe_statements",
    "entails",
    "equivalent",
    "exists_mg_hier",
    "exists_mg_lex",
    "full_language",
    "hier_candidates",
    "is_consistent",
    "is_consistent_hier",
    "is_consistent_lex",
    "lex_candidates",
    "parse_profile",
    "render_profile",
    "satisfies",
    "satisfies_set",
]
