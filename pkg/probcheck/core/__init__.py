"""
Core model: sample spaces, event expressions, evaluation and normalization.
"""

from .evaluation import evaluate, evaluate_columns
from .exceptions import (
    ConsistencyFailureError,
    ExpressionValidationError,
    InvalidBinomialTermError,
    InvalidReadingError,
    MethodMismatchError,
    ProbCheckError,
    ProblemParseError,
    SpaceTooLargeError,
    UnknownEventError,
    UnresolvedReferenceError,
)
from .models import (
    FALSE,
    TRUE,
    And,
    Atom,
    CategoricalFamily,
    Comparison,
    Diagnostic,
    EventExpr,
    FalseExpr,
    Not,
    Or,
    Outcome,
    Rational,
    SampleSpace,
    TrueExpr,
    VarRef,
    and_,
    eq,
    neq,
    not_,
    or_,
    space_size,
    var,
)
from .rational import format_fraction, is_probability, parse_fraction
from .transforms import complement, depth, free_vars, iter_atoms, iter_subexpressions, negate_atom, to_nnf
from .validation import validate, validate_atom


__all__ = [
    "FALSE",
    "TRUE",
    "And",
    "Atom",
    "CategoricalFamily",
    "Comparison",
    "ConsistencyFailureError",
    "Diagnostic",
    "EventExpr",
    "ExpressionValidationError",
    "FalseExpr",
    "InvalidBinomialTermError",
    "InvalidReadingError",
    "MethodMismatchError",
    "Not",
    "Or",
    "Outcome",
    "ProbCheckError",
    "ProblemParseError",
    "Rational",
    "SampleSpace",
    "SpaceTooLargeError",
    "TrueExpr",
    "UnknownEventError",
    "UnresolvedReferenceError",
    "VarRef",
    "and_",
    "complement",
    "depth",
    "eq",
    "evaluate",
    "evaluate_columns",
    "format_fraction",
    "free_vars",
    "is_probability",
    "iter_atoms",
    "iter_subexpressions",
    "negate_atom",
    "neq",
    "not_",
    "or_",
    "parse_fraction",
    "space_size",
    "to_nnf",
    "validate",
    "validate_atom",
    "var",
]
