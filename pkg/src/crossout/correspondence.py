"""The crossout correspondence between permutations and labeled path pairs.

encode(w) produces the 4-tuple (p_A, p_B, ell, em):

* Even length N = 2n.  p_A has length 2n with down steps at the values
  marked A; p_B has length 2n+2 with down steps at the B positions shifted
  right by one, plus a final down step at 2n+2 that carries no label.  The
  label on the down step holding the i-th marked A value counts, plus one,
  the earlier-marked A values exceeding it; the label on the down step for
  the B position with the i-th smallest value counts, plus one, the
  earlier-in-value B positions lying to its right.

* Odd length N = 2n-1.  Both paths get length 2n: Alice's path gains an
  unlabeled final down step at 2n, Bob's path gains an initial up step via
  the same +1 shift.  Label rules are unchanged; the height bounds swap the
  star between the paths.

decode is the exact inverse, filling N empty boxes: B boxes sit at the
shifted-down-steps of p_B; the sorted down steps of p_A are written into
A boxes chosen by the ell labels; the remaining values are written into B
boxes left to right, each picked from the shrinking sorted pool by its em
label.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .dyck import DyckPath
from .errors import ConstraintError, ValidationError
from .marking import crossout_mark, validate_permutation

EVEN = "even"
ODD = "odd"


@dataclass(frozen=True)
class CrossoutTuple:
    """A labeled path pair in the image of the correspondence.

    Even parity: |p_A| = 2n, |p_B| = 2n+2, n labels each side, with
    1 <= ell_i <= h_i(p_A) and 1 <= em_i <= h*_i(p_B).
    Odd parity: |p_A| = |p_B| = 2n, n-1 ell labels and n em labels, with
    1 <= ell_i <= h*_i(p_A) and 1 <= em_i <= h_i(p_B).
    """

    pa: DyckPath
    pb: DyckPath
    ell: tuple[int, ...]
    em: tuple[int, ...]
    parity: str

    def __post_init__(self):
        object.__setattr__(self, "ell", tuple(self.ell))
        object.__setattr__(self, "em", tuple(self.em))
        la, lb = len(self.pa), len(self.pb)
        if self.parity == EVEN:
            if la < 2 or lb != la + 2:
                raise ValidationError(
                    f"even tuple needs |p_B| = |p_A| + 2 >= 4, got {la} and {lb}"
                )
            n = la // 2
            if len(self.ell) != n or len(self.em) != n:
                raise ValidationError(
                    f"even tuple needs {n} labels each side, got "
                    f"{len(self.ell)} and {len(self.em)}"
                )
            if lb not in self.pb.down_steps:
                raise ValidationError(f"p_B must end with a down step at {lb}")
            ha, _ = self.pa.heights()
            _, hsb = self.pb.heights()
            _check_labels("ell", self.ell, ha, "h")
            _check_labels("em", self.em, hsb[:-1], "h*")
        elif self.parity == ODD:
            if la < 2 or lb != la:
                raise ValidationError(
                    f"odd tuple needs |p_A| = |p_B| >= 2, got {la} and {lb}"
                )
            n = la // 2
            if len(self.ell) != n - 1 or len(self.em) != n:
                raise ValidationError(
                    f"odd tuple needs {n - 1} ell and {n} em labels, got "
                    f"{len(self.ell)} and {len(self.em)}"
                )
            if la not in self.pa.down_steps:
                raise ValidationError(f"p_A must end with a down step at {la}")
            _, hsa = self.pa.heights()
            hb, _ = self.pb.heights()
            _check_labels("ell", self.ell, hsa[:-1], "h*")
            _check_labels("em", self.em, hb, "h")
        else:
            raise ValidationError(f"parity must be 'even' or 'odd', got {self.parity!r}")

    @property
    def n(self) -> int:
        """Half the size of Alice's path, the scale every identity is
        parameterized by."""
        return len(self.pa) // 2

    def to_json(self) -> dict:
        return {
            "pa": self.pa.steps,
            "pb": self.pb.steps,
            "ell": list(self.ell),
            "em": list(self.em),
            "parity": self.parity,
        }

    @classmethod
    def from_json(cls, data: dict) -> "CrossoutTuple":
        if not isinstance(data, dict):
            raise ValidationError("tuple JSON must be an object")
        missing = {"pa", "pb", "ell", "em", "parity"} - set(data)
        if missing:
            raise ValidationError(f"tuple JSON missing {sorted(missing)}")
        return cls(
            DyckPath.from_json(data["pa"]),
            DyckPath.from_json(data["pb"]),
            tuple(data["ell"]),
            tuple(data["em"]),
            data["parity"],
        )


def _check_labels(name, labels, bounds, kind):
    for i, (label, bound) in enumerate(zip(labels, bounds), start=1):
        if not isinstance(label, int) or isinstance(label, bool) or label < 1:
            raise ValidationError(f"{name}_{i} = {label!r} is not a positive integer")
        if label > bound:
            raise ConstraintError(
                f"{name}_{i} = {label} exceeds {kind}_{i} = {bound}"
            )


def _alice_labels(values_in_mark_order: Sequence[int]) -> list[int]:
    """Label for each A value, indexed by the value's rank among all A values."""
    order = sorted(values_in_mark_order)
    rank = {v: j for j, v in enumerate(order)}
    labels = [0] * len(order)
    for i, v in enumerate(values_in_mark_order):
        labels[rank[v]] = 1 + sum(1 for u in values_in_mark_order[:i] if u > v)
    return labels


def _bob_labels(positions_in_value_order: Sequence[int]) -> list[int]:
    """Label for each B position, indexed by the position's rank."""
    order = sorted(positions_in_value_order)
    rank = {p: j for j, p in enumerate(order)}
    labels = [0] * len(order)
    for i, p in enumerate(positions_in_value_order):
        labels[rank[p]] = 1 + sum(1 for o in positions_in_value_order[:i] if o > p)
    return labels


def encode(w: Sequence[int]) -> CrossoutTuple:
    """Map a permutation to its labeled path pair."""
    w = validate_permutation(w)
    size = len(w)
    marking = crossout_mark(w)
    # A marks happen in increasing position, B marks in increasing value,
    # so the sorted position sets already list both marking orders.
    a_positions = marking.alice_positions()
    b_positions = marking.bob_positions()
    a_values = [w[p - 1] for p in a_positions]
    b_by_value = sorted(b_positions, key=lambda p: w[p - 1])
    ell = _alice_labels(a_values)
    em = _bob_labels(b_by_value)
    if size % 2 == 0:
        pa = DyckPath.from_down_steps(a_values, size)
        pb = DyckPath.from_down_steps(
            [p + 1 for p in b_positions] + [size + 2], size + 2
        )
        return CrossoutTuple(pa, pb, tuple(ell), tuple(em), EVEN)
    pa = DyckPath.from_down_steps(a_values + [size + 1], size + 1)
    pb = DyckPath.from_down_steps([p + 1 for p in b_positions], size + 1)
    return CrossoutTuple(pa, pb, tuple(ell), tuple(em), ODD)


def decode(t: CrossoutTuple) -> tuple[int, ...]:
    """Invert encode by the box-filling construction."""
    if t.parity == EVEN:
        size = len(t.pa)
        b_boxes = [k - 1 for k in t.pb.down_steps if k != size + 2]
        a_values = list(t.pa.down_steps)
    else:
        size = len(t.pa) - 1
        b_boxes = [k - 1 for k in t.pb.down_steps]
        a_values = [k for k in t.pa.down_steps if k != len(t.pa)]
    w = [0] * (size + 1)
    b_set = set(b_boxes)
    a_boxes = [p for p in range(1, size + 1) if p not in b_set]
    empty_a = list(a_boxes)
    for value, label in zip(a_values, t.ell):
        w[empty_a.pop(label - 1)] = value
    pool = sorted(set(range(1, size + 1)) - set(a_values))
    for box, label in zip(b_boxes, t.em):
        w[box] = pool.pop(label - 1)
    return tuple(w[1:])
