"""
Repeating-decimal notation for exact fractions: 11/12 is ``0.91(6)``.
"""

import re
from fractions import Fraction


_REPEATING_PATTERN = re.compile(r"^(\d+)(?:\.(\d*)(?:\((\d+)\))?)?$")
_DIGIT_CHUNK = 1000


def to_repeating_decimal(value: Fraction) -> str:
    """
    Render a non-negative fraction with its repetend in parentheses.

    Long division tracks the position at which each remainder first appears;
    the first repeated remainder marks the start of the cycle, so the
    non-repeating prefix is as short as possible. Terminating expansions have no
    parentheses, and whole numbers have no decimal point.

    Parameters:
        value (Fraction): The number, value >= 0.

    Returns:
        str: e.g. ``"0.91(6)"``, ``"0.25"``, ``"1"``.
    """
    value = Fraction(value)
    if value < 0:
        raise ValueError(f"Expected a non-negative value, got {value}")
    whole, remainder = divmod(value.numerator, value.denominator)
    if remainder == 0:
        return str(whole)

    digits: list[str] = []
    seen: dict[int, int] = {}
    while remainder and remainder not in seen:
        seen[remainder] = len(digits)
        digit, remainder = divmod(remainder * 10, value.denominator)
        digits.append(str(digit))

    if remainder == 0:
        return f"{whole}.{''.join(digits)}"
    start = seen[remainder]
    return f"{whole}.{''.join(digits[:start])}({''.join(digits[start:])})"


def _digits_value(digits: str) -> int:
    """Integer value of a digit string of any length, converted a chunk at a time."""
    value = 0
    for start in range(0, len(digits), _DIGIT_CHUNK):
        chunk = digits[start : start + _DIGIT_CHUNK]
        value = value * 10 ** len(chunk) + int(chunk)
    return value


def from_repeating_decimal(text: str) -> Fraction:
    """
    Parse repeating-decimal notation back into a fraction.

    Parameters:
        text (str): e.g. ``"0.9930(5)"``.

    Returns:
        Fraction: The exact value.

    Raises:
        ValueError: If `text` is not in the notation.
    """
    match = _REPEATING_PATTERN.match(text.strip())
    if not match:
        raise ValueError(f"Not a repeating decimal: '{text}'")
    whole, prefix, cycle = match.group(1), match.group(2) or "", match.group(3) or ""
    value = Fraction(_digits_value(whole))
    if prefix:
        value += Fraction(_digits_value(prefix), 10 ** len(prefix))
    if cycle:
        value += Fraction(_digits_value(cycle), 10 ** len(prefix) * (10 ** len(cycle) - 1))
    return value
