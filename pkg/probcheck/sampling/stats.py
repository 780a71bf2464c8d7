"""
Bernoulli standard error of a Monte Carlo proportion.
"""

import math


def std_error(p_hat: float, trials: int) -> float:
    """
    Plug-in standard error ``sqrt(p_hat * (1 - p_hat) / trials)``.

    Parameters:
        p_hat (float): Observed proportion in [0, 1].
        trials (int): Number of trials, at least 1.

    Returns:
        float: The standard error; 0 when p_hat is 0 or 1.
    """
    if not 0 <= p_hat <= 1:
        raise ValueError(f"Proportion {p_hat} outside [0, 1]")
    if trials < 1:
        raise ValueError(f"Need at least one trial, got {trials}")
    return math.sqrt(p_hat * (1 - p_hat) / trials)
