"""
Binomial decomposition of counts over independent draws.

"At least one of the two people was not born in May" splits into "neither was
born in May" plus "exactly one was": C(2,0)(11/12)^2 + C(2,1)(1/12)(11/12).
"""

from fractions import Fraction
from math import comb

from ..core.exceptions import InvalidBinomialTermError


def binomial_term(k: int, n: int, p: Fraction) -> Fraction:
    """
    Probability of exactly `k` successes in `n` independent trials of probability `p`.

    Parameters:
        k (int): Number of successes, 0 <= k <= n.
        n (int): Number of trials.
        p (Fraction): Success probability in [0, 1].

    Returns:
        Fraction: C(n, k) * p**k * (1 - p)**(n - k), reduced.

    Raises:
        InvalidBinomialTermError: If k is negative or exceeds n.
        ValueError: If p is outside [0, 1].
    """
    if k < 0 or k > n:
        raise InvalidBinomialTermError(k, n)
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"Success probability {p} outside [0, 1]")
    return comb(n, k) * p**k * (1 - p) ** (n - k)


def binomial_distribution(n: int, p: Fraction) -> list[Fraction]:
    """All n + 1 terms, indexed by the number of successes; they sum to 1."""
    return [binomial_term(k, n, p) for k in range(n + 1)]


def at_most(k: int, n: int, p: Fraction) -> Fraction:
    """
    Probability of at most `k` successes in `n` trials.

    ``at_most(1, 2, Fraction(1, 12))`` is the chance two people were not both born in May.
    """
    if k < 0 or k > n:
        raise InvalidBinomialTermError(k, n)
    return sum((binomial_term(i, n, p) for i in range(k + 1)), Fraction(0))
