"""Labeled Dyck paths as perfect matchings.

A path of length 2n with one label per down step (each between 1 and the
down step's height) encodes a perfect matching of {1,...,2n}: walk the
steps left to right and match each down step with an earlier, still
unmatched up step.  A label of L picks the L-th such up step counting from
the down step leftward, nearest first.  That counting direction is a fixed
convention here; any fixed choice gives a bijection.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .dyck import DyckPath, LabeledDyckPath
from .errors import ConstraintError, ValidationError

Matching = tuple[tuple[int, int], ...]


def normalize_matching(pairs: Iterable[Sequence[int]]) -> Matching:
    """Canonical form: each pair (lo, hi), pairs sorted by lo; validates
    that the pairs partition {1,...,2n}."""
    norm = []
    seen = set()
    for pair in pairs:
        if len(pair) != 2:
            raise ValidationError(f"pair {pair!r} does not have two elements")
        a, b = pair
        if a == b:
            raise ValidationError(f"pair ({a}, {b}) repeats an element")
        for x in (a, b):
            if not isinstance(x, int) or x < 1:
                raise ValidationError(f"element {x!r} is not a positive integer")
            if x in seen:
                raise ValidationError(f"element {x} appears in two pairs")
            seen.add(x)
        norm.append((min(a, b), max(a, b)))
    if seen != set(range(1, len(seen) + 1)):
        raise ValidationError("pairs do not cover an initial segment 1..2n")
    return tuple(sorted(norm))


def enumerate_matchings(size: int) -> Iterator[Matching]:
    """All perfect matchings of {1,...,size}; there are (size-1)!! of them."""
    if size < 0 or size % 2:
        raise ValidationError(f"size must be even and non-negative, got {size}")

    def rec(items: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
        if not items:
            yield ()
            return
        first, rest = items[0], items[1:]
        for i, partner in enumerate(rest):
            for sub in rec(rest[:i] + rest[i + 1 :]):
                yield ((first, partner),) + sub

    for pairing in rec(tuple(range(1, size + 1))):
        yield tuple(sorted(pairing))


def hermite_to_matching(hh: LabeledDyckPath) -> Matching:
    """Convert a plain labeled path to the matching it encodes."""
    if hh.starred:
        raise ValidationError("matchings are defined for plain labeled paths")
    pairs = []
    open_ups: list[int] = []
    label_iter = iter(hh.labels)
    for pos, step in enumerate(hh.path.steps, start=1):
        if step == "U":
            open_ups.append(pos)
        else:
            label = next(label_iter)
            if label > len(open_ups):
                raise ConstraintError(
                    f"label {label} at down step {pos} exceeds the "
                    f"{len(open_ups)} unmatched up steps"
                )
            pairs.append((open_ups.pop(-label), pos))
    return tuple(sorted(pairs))


def matching_to_hermite(matching: Iterable[Sequence[int]]) -> LabeledDyckPath:
    """Convert a perfect matching of {1,...,2n} back to a labeled path."""
    pairs = normalize_matching(matching)
    size = 2 * len(pairs)
    partner = {}
    for lo, hi in pairs:
        partner[lo] = hi
        partner[hi] = lo
    steps = "".join("U" if partner[k] > k else "D" for k in range(1, size + 1))
    path = DyckPath(steps)
    labels = []
    open_ups: list[int] = []
    for pos, step in enumerate(steps, start=1):
        if step == "U":
            open_ups.append(pos)
        else:
            # nearest-first rank of the partner among unmatched up steps
            labels.append(len(open_ups) - open_ups.index(partner[pos]))
            open_ups.remove(partner[pos])
    return LabeledDyckPath(path, tuple(labels))
