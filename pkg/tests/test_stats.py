import itertools

import pytest

from crossout.correspondence import encode
from crossout.errors import ValidationError
from crossout.stats import stat_bundle, xy_inversions, z_stat

DEMO_W = (2, 6, 4, 1, 3, 11, 5, 7, 10, 12, 9, 8)


def inversions_by_scan(w, marks, x, y):
    return sum(
        1
        for i in range(len(w))
        for j in range(i + 1, len(w))
        if w[i] > w[j] and marks[i] == x and marks[j] == y
    )


class TestXYInversions:
    def test_worked_example(self):
        assert xy_inversions(DEMO_W, "B", "A") == 0
        assert xy_inversions(DEMO_W, "A", "A") == 2
        assert xy_inversions(DEMO_W, "B", "B") == 3

    def test_identity_permutation(self):
        for x in "AB":
            for y in "AB":
                assert xy_inversions((1, 2, 3, 4), x, y) == 0

    def test_bad_marks_rejected(self):
        with pytest.raises(ValidationError):
            xy_inversions((1, 2), "A", "C")


class TestZStat:
    def test_small_examples(self):
        assert z_stat((1, 2)) == 1
        assert z_stat((2, 1)) == 0
        assert z_stat((1, 2, 3, 4)) == 4

    def test_odd_length_rejected(self):
        with pytest.raises(ValidationError):
            z_stat((1, 2, 3))


class TestBundleInvariants:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_exhaustive_even_boards(self, n):
        for w in itertools.permutations(range(1, 2 * n + 1)):
            b = stat_bundle(w)
            assert b.ba == 0
            assert b.inv == b.aa + b.ab + b.bb
            t = encode(w)
            h, _ = t.pa.heights()
            assert b.z == n * n + sum(hi - 1 for hi in h) - b.ab - b.bb
            # the proof's label identities, used here only as a cross-check
            assert b.aa == sum(l - 1 for l in t.ell)
            assert b.bb == sum(m - 1 for m in t.em)

    def test_exhaustive_n4_single_sweep(self):
        # the n = 4 board is the big one, so all five facts share one sweep
        n = 4
        for w in itertools.permutations(range(1, 2 * n + 1)):
            b = stat_bundle(w)
            t = encode(w)
            h, _ = t.pa.heights()
            assert b.ba == 0
            assert b.inv == b.aa + b.ab + b.bb
            assert b.z == n * n + sum(hi - 1 for hi in h) - b.ab - b.bb
            assert b.aa == sum(l - 1 for l in t.ell)
            assert b.bb == sum(m - 1 for m in t.em)

    def test_odd_boards_have_no_z(self):
        b = stat_bundle((3, 1, 2))
        assert b.z is None
        assert b.ba == 0

    def test_inv_matches_plain_count(self):
        for w in itertools.permutations(range(1, 6)):
            expected = sum(
                1
                for i in range(5)
                for j in range(i + 1, 5)
                if w[i] > w[j]
            )
            assert stat_bundle(w).inv == expected

    def test_json_shape(self):
        data = stat_bundle(DEMO_W).to_json()
        assert set(data) == {"aa", "ab", "ba", "bb", "z", "inv"}
        assert data["ba"] == 0
        assert data["inv"] == data["aa"] + data["ab"] + data["bb"]
