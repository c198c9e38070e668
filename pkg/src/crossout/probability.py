"""Exact odds that Alice eats a given set of her rankings.

For a uniformly random preference permutation of {1,...,2n}, the chance
that the items Alice ranks k_1 < ... < k_m all end up on her side of the
crossout assignment is the product of (k_i - 2i + 1) / (2n - 2i + 1).  The
product is 0 as soon as any numerator factor drops to 0 or below, which is
exactly when the rank set is too bottom-heavy to be eaten by one player.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import ValidationError


def alice_probability(n: int, ranks: Sequence[int]) -> Fraction:
    """P(all of ranks land on Alice's side) for a random w over {1,...,2n}.

    >>> alice_probability(2, [4])
    Fraction(1, 1)
    >>> alice_probability(2, [3, 4])
    Fraction(2, 3)
    """
    if not isinstance(n, int) or n < 1:
        raise ValidationError(f"n must be a positive integer, got {n!r}")
    ranks = list(ranks)
    if not 1 <= len(ranks) <= n:
        raise ValidationError(f"need between 1 and {n} ranks, got {len(ranks)}")
    if any(not isinstance(k, int) or not 1 <= k <= 2 * n for k in ranks):
        raise ValidationError(f"ranks must be integers in 1..{2 * n}")
    if any(a >= b for a, b in zip(ranks, ranks[1:])):
        raise ValidationError("ranks must be strictly increasing")
    result = Fraction(1)
    for i, k in enumerate(ranks, start=1):
        if k - 2 * i + 1 <= 0:
            return Fraction(0)
        result *= Fraction(k - 2 * i + 1, 2 * n - 2 * i + 1)
    return result


def fraction_to_json(value: Fraction) -> dict:
    return {"num": str(value.numerator), "den": str(value.denominator)}


def fraction_from_json(data: dict) -> Fraction:
    try:
        return Fraction(int(data["num"]), int(data["den"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"bad rational JSON: {exc}") from exc
