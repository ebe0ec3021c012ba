"""a-adic scale selection."""

import math


def a_adic_level(a: int, value: float) -> int:
    """
    The unique integer l with value in (a^-(l+1), a^-l].

    The logarithm gives a first guess; exact power comparisons settle
    values at or near the endpoints.
    """
    if not value > 0 or not math.isfinite(value):
        raise ValueError(f"Scale value must be positive and finite, got {value}")
    level = math.floor(-math.log(value) / math.log(a))
    while float(a) ** (-level) < value:
        level -= 1
    while float(a) ** (-(level + 1)) >= value:
        level += 1
    return level
