"""Dyck paths, down-step heights, and labeled paths.

A Dyck path of length 2n is a string over {U, D} with n of each letter
such that every prefix contains at least as many U as D.  It is equally
determined by its set of down steps, the 1-based step indices holding a D.

Each down step has a height h_i, the level it descends from.  The starred
height h*_i equals h_i - 1 when no up step occurs anywhere to the right of
the i-th down step, and h_i otherwise.  The last down step of a nonempty
path always has starred height 0; every earlier one has starred height >= 1.

A labeled path attaches one positive integer per down step, bounded by the
plain heights; in starred form the final down step carries no label and the
remaining labels are bounded by the starred heights.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import ValidationError


@dataclass(frozen=True)
class DyckPath:
    """A Dyck path stored as its step string, e.g. "UUDD".

    >>> DyckPath("UUDD").down_steps
    (3, 4)
    >>> DyckPath("UUDD").heights()
    ((2, 1), (1, 0))
    """

    steps: str

    def __post_init__(self):
        level = 0
        for k, s in enumerate(self.steps, start=1):
            if s == "U":
                level += 1
            elif s == "D":
                level -= 1
            else:
                raise ValidationError(f"step {k} is {s!r}, expected 'U' or 'D'")
            if level < 0:
                raise ValidationError(f"path dips below the axis at step {k}")
        if level != 0:
            raise ValidationError("path does not return to the axis")

    @classmethod
    def from_down_steps(cls, down_steps: Iterable[int], length: int) -> "DyckPath":
        downs = set(down_steps)
        if not all(isinstance(k, int) and 1 <= k <= length for k in downs):
            raise ValidationError(f"down steps must be integers in 1..{length}")
        steps = "".join("D" if k in downs else "U" for k in range(1, length + 1))
        return cls(steps)

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return self.steps

    @cached_property
    def down_steps(self) -> tuple[int, ...]:
        return tuple(k for k, s in enumerate(self.steps, start=1) if s == "D")

    @cached_property
    def _heights(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        h = []
        level = 0
        for s in self.steps:
            if s == "U":
                level += 1
            else:
                h.append(level)
                level -= 1
        last_up = self.steps.rfind("U")  # -1 for the empty path
        h_star = [
            hi if pos < last_up else hi - 1
            for hi, pos in zip(h, (k - 1 for k in self.down_steps))
        ]
        return tuple(h), tuple(h_star)

    def heights(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Return (h, h*) indexed by down-step order."""
        return self._heights

    def to_json(self) -> str:
        return self.steps

    @classmethod
    def from_json(cls, data) -> "DyckPath":
        """Accept a step string or a sorted list of down steps with no length
        ambiguity (the largest down step must be the final step, which holds
        for every complete Dyck path)."""
        if isinstance(data, str):
            return cls(data)
        if isinstance(data, (list, tuple)):
            downs = list(data)
            if not downs:
                return cls("")
            return cls.from_down_steps(downs, max(downs))
        raise ValidationError(f"cannot read a Dyck path from {type(data).__name__}")


@dataclass(frozen=True)
class LabeledDyckPath:
    """A Dyck path with down-step labels.

    Plain form (``starred=False``): one label per down step with
    1 <= label_i <= h_i.  Starred form: one label per down step except the
    last, with 1 <= label_i <= h*_i.
    """

    path: DyckPath
    labels: tuple[int, ...]
    starred: bool = False

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        h, h_star = self.path.heights()
        bounds = h_star[:-1] if self.starred else h
        kind = "h*" if self.starred else "h"
        if len(self.labels) != len(bounds):
            raise ValidationError(
                f"expected {len(bounds)} labels, got {len(self.labels)}"
            )
        for i, (label, bound) in enumerate(zip(self.labels, bounds), start=1):
            if not isinstance(label, int) or not 1 <= label <= bound:
                raise ValidationError(
                    f"label {i} is {label}, outside 1..{kind}_{i} = {bound}"
                )


def enumerate_dyck_paths(length: int) -> Iterator[DyckPath]:
    """Yield every Dyck path of the given even length once, in lexicographic
    step order with U < D.

    >>> [p.steps for p in enumerate_dyck_paths(4)]
    ['UUDD', 'UDUD']
    """
    if length < 0 or length % 2:
        raise ValidationError(f"length must be even and non-negative, got {length}")
    n = length // 2

    def rec(prefix: list[str], ups: int, downs: int) -> Iterator[DyckPath]:
        if ups + downs == length:
            yield DyckPath("".join(prefix))
            return
        if ups < n:
            prefix.append("U")
            yield from rec(prefix, ups + 1, downs)
            prefix.pop()
        if downs < ups:
            prefix.append("D")
            yield from rec(prefix, ups, downs + 1)
            prefix.pop()

    yield from rec([], 0, 0)


def catalan(n: int) -> int:
    """The n-th Catalan number, the count of Dyck paths of length 2n."""
    return math.comb(2 * n, n) // (n + 1)


def hermite_labelings(
    path: DyckPath, starred: bool = False
) -> Iterator[tuple[int, ...]]:
    """Yield every admissible label vector for the path.

    Plain form ranges over 1..h_i for every down step; starred form over
    1..h*_i for every down step but the last.  The count is the product of
    the respective bounds.
    """
    h, h_star = path.heights()
    bounds: Sequence[int] = h_star[:-1] if starred else h
    yield from itertools.product(*(range(1, b + 1) for b in bounds))


def enumerate_hermite(path: DyckPath, starred: bool = False) -> Iterator[LabeledDyckPath]:
    """Yield every labeled form of the path (see ``hermite_labelings``)."""
    for labels in hermite_labelings(path, starred):
        yield LabeledDyckPath(path, labels, starred)
