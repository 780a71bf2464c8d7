"""
Exact evaluation: full enumeration, compositional closed forms, binomial terms
and repeating-decimal rendering.
"""

from .binomial import at_most, binomial_distribution, binomial_term
from .compositional import atom_probability, independent_groups, prob_compositional
from .enumeration import count_satisfying, iter_assignment_chunks, prob_enumerate
from .models import DEFAULT_MAX_ENUMERATION, ExactConfig, ExactMethod, ExactResult
from .repeating import from_repeating_decimal, to_repeating_decimal


__all__ = [
    "DEFAULT_MAX_ENUMERATION",
    "ExactConfig",
    "ExactMethod",
    "ExactResult",
    "at_most",
    "atom_probability",
    "binomial_distribution",
    "binomial_term",
    "count_satisfying",
    "from_repeating_decimal",
    "independent_groups",
    "iter_assignment_chunks",
    "prob_compositional",
    "prob_enumerate",
    "to_repeating_decimal",
]
