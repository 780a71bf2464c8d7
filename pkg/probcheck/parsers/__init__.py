"""
Problem-file parsing and printing.

This package reads the textual problem format (sample space declarations,
named events and named forks) and renders expressions back to canonical text.
"""

from .lexer import Token, TokenKind, tokenize
from .models import Fork, NamedEvent, ParseDiagnostic, ProblemSet, Severity, SourceSpan
from .parser import MONTH_ALIASES, load_problem, parse_atoms, parse_problem
from .printer import format_atom, format_problem, pretty_print


__all__ = [
    "MONTH_ALIASES",
    "Fork",
    "NamedEvent",
    "ParseDiagnostic",
    "ProblemSet",
    "Severity",
    "SourceSpan",
    "Token",
    "TokenKind",
    "format_atom",
    "format_problem",
    "load_problem",
    "parse_atoms",
    "parse_problem",
    "pretty_print",
    "tokenize",
]
