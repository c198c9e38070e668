"""Inversion statistics taken relative to the crossout marking.

An XY inversion of w is a pair i < j with w(i) > w(j) where position i is
marked X and position j is marked Y.  BA inversions never occur: when the
later position j gets its A mark it holds the leftmost unmarked value, so
any earlier B position i was marked while holding the smallest unmarked
value, forcing w(i) < w(j).

The z statistic counts the non-inverted pairs whose left position is
marked B.  For even length 2n it satisfies

    z = n^2 + sum_i (h_i(p_A) - 1) - ab - bb

where the h_i are the down-step heights of Alice's path.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ValidationError
from .marking import crossout_mark, validate_permutation

_MARKS = ("A", "B")


@dataclass(frozen=True)
class StatBundle:
    """All marking statistics of one permutation in a single pass.

    z is None for odd lengths, where the identity above is not defined.
    """

    aa: int
    ab: int
    ba: int
    bb: int
    z: int | None
    inv: int

    def to_json(self) -> dict:
        return {
            "aa": self.aa,
            "ab": self.ab,
            "ba": self.ba,
            "bb": self.bb,
            "z": self.z,
            "inv": self.inv,
        }


def stat_bundle(w: Sequence[int]) -> StatBundle:
    """Count every XY inversion class, z, and inv of w at once."""
    w = validate_permutation(w)
    marks = crossout_mark(w).marks
    counts = {(x, y): 0 for x in _MARKS for y in _MARKS}
    z = 0
    size = len(w)
    for i in range(size):
        for j in range(i + 1, size):
            if w[i] > w[j]:
                counts[(marks[i], marks[j])] += 1
            elif marks[i] == "B":
                z += 1
    return StatBundle(
        aa=counts[("A", "A")],
        ab=counts[("A", "B")],
        ba=counts[("B", "A")],
        bb=counts[("B", "B")],
        z=z if size % 2 == 0 else None,
        inv=sum(counts.values()),
    )


def xy_inversions(w: Sequence[int], x: str, y: str) -> int:
    """Number of XY inversions of w; the marking is recomputed from w."""
    if x not in _MARKS or y not in _MARKS:
        raise ValidationError(f"marks must be 'A' or 'B', got {x!r}, {y!r}")
    w = validate_permutation(w)
    marks = crossout_mark(w).marks
    return sum(
        1
        for i in range(len(w))
        for j in range(i + 1, len(w))
        if w[i] > w[j] and marks[i] == x and marks[j] == y
    )


def z_stat(w: Sequence[int]) -> int:
    """Non-inverted pairs with the left position marked B; even length only."""
    w = validate_permutation(w)
    if len(w) % 2:
        raise ValidationError("z is defined for even-length permutations only")
    bundle = stat_bundle(w)
    assert bundle.z is not None
    return bundle.z
