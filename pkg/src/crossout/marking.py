"""Permutations and the crossout marking procedure.

A permutation w of {1,...,N} is handled in one-line notation as a sequence
of values, 1-based in every external format.  The crossout procedure marks
positions alternately: B below the smallest unmarked value, then A below
the leftmost unmarked position, until every position is marked.  The B/A
row assigns each item to the player who eats it under optimal alternating
play, and the marking order reversed is the play order.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import GUARD_MAX_N, GuardLimitError, ValidationError

ALICE = "A"
BOB = "B"


def validate_permutation(w: Sequence[int]) -> tuple[int, ...]:
    """Return w as a tuple after checking it permutes {1,...,len(w)}.

    >>> validate_permutation([2, 1])
    (2, 1)
    """
    values = tuple(w)
    n = len(values)
    if n < 1:
        raise ValidationError("permutation must have at least one value")
    seen = [False] * (n + 1)
    for v in values:
        if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= n:
            raise ValidationError(f"value {v!r} is not an integer in 1..{n}")
        if seen[v]:
            raise ValidationError(f"value {v} appears more than once")
        seen[v] = True
    return values


def random_permutation(n: int, seed=None) -> tuple[int, ...]:
    """A uniform random permutation of {1,...,n} from a seeded shuffle."""
    if not isinstance(n, int) or n < 1:
        raise ValidationError(f"size must be a positive integer, got {n!r}")
    values = list(range(1, n + 1))
    random.Random(seed).shuffle(values)
    return tuple(values)


def iter_permutations(n: int, force: bool = False) -> Iterator[tuple[int, ...]]:
    """All permutations of {1,...,n} in lexicographic order.

    Refuses n > GUARD_MAX_N unless force is set: beyond 10 items the sweep
    leaves desk scale.
    """
    if n > GUARD_MAX_N and not force:
        raise GuardLimitError(
            f"sweeping all {n}! permutations exceeds the n <= {GUARD_MAX_N} "
            "guard; pass force=True to override"
        )
    return itertools.permutations(range(1, n + 1))


@dataclass(frozen=True)
class Marking:
    """The crossout assignment of a whole permutation.

    marks[i-1] is 'A' or 'B' for position i; order lists the positions in
    the order they were marked (alternating B, A, B, A, ...).
    """

    marks: str
    order: tuple[int, ...]

    def alice_positions(self) -> tuple[int, ...]:
        return tuple(i for i, m in enumerate(self.marks, start=1) if m == ALICE)

    def bob_positions(self) -> tuple[int, ...]:
        return tuple(i for i, m in enumerate(self.marks, start=1) if m == BOB)


def crossout_sequence(
    w: Sequence[int], positions: Iterable[int] | None = None
) -> tuple[tuple[int, str], ...]:
    """Run the crossout procedure over a subset of positions.

    Returns ((position, mark), ...) in marking order.  With the default
    positions (the whole board) this is the plain crossout procedure; on a
    subset it is the backward-induction assignment of the remaining subgame,
    which is the same alternation because the last mover is always Bob.
    """
    if positions is None:
        pos_list = list(range(1, len(w) + 1))
    else:
        pos_list = sorted(positions)
    by_value = sorted(pos_list, key=lambda p: w[p - 1])
    marked = set()
    seq: list[tuple[int, str]] = []
    vi = pi = 0
    total = len(pos_list)
    while len(seq) < total:
        while by_value[vi] in marked:
            vi += 1
        p = by_value[vi]
        marked.add(p)
        seq.append((p, BOB))
        if len(seq) == total:
            break
        while pos_list[pi] in marked:
            pi += 1
        p = pos_list[pi]
        marked.add(p)
        seq.append((p, ALICE))
    return tuple(seq)


def crossout_mark(w: Sequence[int]) -> Marking:
    """Mark every position of w by the crossout procedure.

    >>> crossout_mark([2, 1]).marks
    'AB'
    """
    w = validate_permutation(w)
    marks = [""] * len(w)
    order = []
    for p, m in crossout_sequence(w):
        marks[p - 1] = m
        order.append(p)
    return Marking("".join(marks), tuple(order))
