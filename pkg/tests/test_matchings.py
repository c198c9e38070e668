import pytest

from crossout.dyck import DyckPath, LabeledDyckPath, enumerate_dyck_paths, enumerate_hermite
from crossout.errors import ValidationError
from crossout.matchings import (
    enumerate_matchings,
    hermite_to_matching,
    matching_to_hermite,
    normalize_matching,
)


def odd_double_factorial(n):
    out = 1
    for k in range(1, 2 * n, 2):
        out *= k
    return out


class TestNormalize:
    def test_sorts_pairs(self):
        assert normalize_matching([(4, 1), (3, 2)]) == ((1, 4), (2, 3))

    @pytest.mark.parametrize(
        "pairs",
        [
            [(1, 2), (2, 3)],       # reused element
            [(1, 3)],               # gap: not an initial segment
            [(1, 1)],               # self-pair
            [(0, 1)],               # below 1
            [(1, 2, 3)],            # not a pair
        ],
    )
    def test_rejects_bad_input(self, pairs):
        with pytest.raises(ValidationError):
            normalize_matching(pairs)


class TestEnumerate:
    @pytest.mark.parametrize("n", range(6))
    def test_counts(self, n):
        ms = list(enumerate_matchings(2 * n))
        assert len(ms) == odd_double_factorial(n)
        assert len(set(ms)) == len(ms)

    def test_odd_size_rejected(self):
        with pytest.raises(ValidationError):
            list(enumerate_matchings(3))


class TestHermiteToMatching:
    def test_single_arc(self):
        hh = LabeledDyckPath(DyckPath("UD"), (1,))
        assert hermite_to_matching(hh) == ((1, 2),)

    def test_nested_vs_crossing(self):
        # nearest-first counting: label 1 picks the adjacent up step
        assert hermite_to_matching(LabeledDyckPath(DyckPath("UUDD"), (1, 1))) == (
            (1, 4),
            (2, 3),
        )
        assert hermite_to_matching(LabeledDyckPath(DyckPath("UUDD"), (2, 1))) == (
            (1, 3),
            (2, 4),
        )

    def test_partner_always_left(self):
        for p in enumerate_dyck_paths(8):
            for hh in enumerate_hermite(p):
                for lo, hi in hermite_to_matching(hh):
                    assert lo < hi
                    assert p.steps[lo - 1] == "U" and p.steps[hi - 1] == "D"

    def test_starred_input_rejected(self):
        hh = LabeledDyckPath(DyckPath("UUDD"), (1,), starred=True)
        with pytest.raises(ValidationError):
            hermite_to_matching(hh)

    def test_label_out_of_bounds_is_non_constructible(self):
        # LabeledDyckPath validation already blocks labels above the height,
        # so the conversion never sees them
        with pytest.raises(ValidationError):
            LabeledDyckPath(DyckPath("UDUD"), (1, 2))


class TestRoundTrip:
    @pytest.mark.parametrize("size", [0, 2, 4, 6, 8])
    def test_both_directions_exhaustive(self, size):
        histories = [
            hh for p in enumerate_dyck_paths(size) for hh in enumerate_hermite(p)
        ]
        matchings = list(enumerate_matchings(size))
        assert len(histories) == len(matchings) == odd_double_factorial(size // 2)
        for hh in histories:
            assert matching_to_hermite(hermite_to_matching(hh)) == hh
        image = {hermite_to_matching(hh) for hh in histories}
        assert image == set(matchings)
        for m in matchings:
            assert hermite_to_matching(matching_to_hermite(m)) == m
