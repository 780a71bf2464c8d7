"""
Text form of exact probabilities.

Reports carry fractions as ``"num/den"`` strings so they round-trip without
loss; ``1`` is written ``"1/1"``.
"""

import re
from fractions import Fraction


_FRACTION_PATTERN = re.compile(r"^\s*(-?\d+)\s*/\s*(\d+)\s*$")


def format_fraction(value: Fraction) -> str:
    """Render `value` as ``num/den`` in lowest terms, denominator always present."""
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text: str) -> Fraction:
    """
    Parse a ``num/den`` string (or a bare integer) into a reduced Fraction.

    Parameters:
        text (str): The text, e.g. ``"143/144"``.

    Returns:
        Fraction: The reduced value.

    Raises:
        ValueError: If the text is not a fraction or the denominator is zero.
    """
    match = _FRACTION_PATTERN.match(text)
    if match:
        denominator = int(match.group(2))
        if denominator == 0:
            raise ValueError(f"Zero denominator in '{text}'")
        return Fraction(int(match.group(1)), denominator)
    if re.fullmatch(r"\s*-?\d+\s*", text):
        return Fraction(int(text))
    raise ValueError(f"Not a fraction: '{text}'")


def is_probability(value: Fraction) -> bool:
    """True when 0 <= value <= 1."""
    return 0 <= value <= 1
