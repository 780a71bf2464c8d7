"""
probcheck - exact and Monte Carlo probabilities for events over uniform draws

A library and command-line tool that:
- Parses a small DSL of sample spaces, named events and named forks
- Computes exact probabilities by enumeration and by compositional closed forms
- Estimates probabilities by seeded Monte Carlo with standard-error bars
- Checks estimates against exact values with a z-test
- Analyzes "not both" versus "neither" readings of negated conditions
"""

__version__ = "0.1.0"

from .ambiguity import ReadingPair, detect_ambiguity_sites, dual_readings, explain
from .core import (
    And,
    Atom,
    CategoricalFamily,
    Comparison,
    EventExpr,
    Not,
    Or,
    Outcome,
    ProbCheckError,
    SampleSpace,
    VarRef,
    evaluate,
    validate,
)
from .exact import ExactConfig, ExactResult, binomial_term, prob_compositional, prob_enumerate, to_repeating_decimal
from .logging_config import configure_logging
from .parsers import ProblemSet, load_problem, parse_problem, pretty_print
from .sampling import ConsistencyVerdict, McConfig, McEstimate, consistency_check, estimate


__all__ = [
    "And",
    "Atom",
    "CategoricalFamily",
    "Comparison",
    "ConsistencyVerdict",
    "EventExpr",
    "ExactConfig",
    "ExactResult",
    "McConfig",
    "McEstimate",
    "Not",
    "Or",
    "Outcome",
    "ProbCheckError",
    "ProblemSet",
    "ReadingPair",
    "SampleSpace",
    "VarRef",
    "__version__",
    "binomial_term",
    "configure_logging",
    "consistency_check",
    "detect_ambiguity_sites",
    "dual_readings",
    "estimate",
    "evaluate",
    "explain",
    "load_problem",
    "parse_problem",
    "pretty_print",
    "prob_compositional",
    "prob_enumerate",
    "to_repeating_decimal",
    "validate",
]
