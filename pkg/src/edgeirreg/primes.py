"""Small prime utilities (trial division; desk-scale inputs only)."""

from __future__ import annotations

import math


def is_prime(k: int) -> bool:
    if k < 2:
        return False
    if k < 4:
        return True
    if k % 2 == 0:
        return False
    for d in range(3, math.isqrt(k) + 1, 2):
        if k % d == 0:
            return False
    return True


def next_prime(k: int) -> int:
    """Least prime strictly greater than k."""
    if k < 0:
        raise ValueError("k must be non-negative")
    c = k + 1
    while not is_prime(c):
        c += 1
    return c
