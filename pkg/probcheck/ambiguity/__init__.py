"""
Ambiguity analysis of negated conditions ("not both" versus "neither").
"""

from .analyzer import build_readings, detect_ambiguity_sites, dual_readings, explain
from .models import AmbiguitySite, ReadingPair, ReadingReport


__all__ = [
    "AmbiguitySite",
    "ReadingPair",
    "ReadingReport",
    "build_readings",
    "detect_ambiguity_sites",
    "dual_readings",
    "explain",
]
