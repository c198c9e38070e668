"""Brute-force verification of the enumerative identities.

Every check pits a definition-level enumeration (sweep permutations, mark,
count inversions) against a closed form (double factorials, products of
q-integers, Catalan numbers).  Left sides always come from the definitions;
the labels produced by encode enter only as cross-checks in the test suite,
never as the primary left side.  Comparisons are exact: polynomials are
compared in canonical form, counts as integers, probabilities as fractions.
"""
from __future__ import annotations

import itertools
import math
import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .correspondence import CrossoutTuple, decode, encode
from .dyck import DyckPath, catalan, enumerate_dyck_paths, hermite_labelings
from .errors import GUARD_MAX_N, GuardLimitError, ValidationError
from .marking import crossout_mark, iter_permutations
from .probability import alice_probability
from .qpoly import Polynomial, monomial, product, q_integer
from .stats import stat_bundle

EQUAL = "equal"
UNEQUAL = "unequal"


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    n: int
    params: dict = field(default_factory=dict)
    left: object = None
    right: object = None
    verdict: str = UNEQUAL
    elapsed: float = 0.0

    @classmethod
    def build(cls, identity, n, left, right, started, **params) -> "IdentityReport":
        return cls(
            identity=identity,
            n=n,
            params=params,
            left=left,
            right=right,
            verdict=EQUAL if left == right else UNEQUAL,
            elapsed=time.perf_counter() - started,
        )

    @property
    def equal(self) -> bool:
        return self.verdict == EQUAL

    def to_json(self, include_elapsed: bool = True) -> dict:
        out = {
            "identity": self.identity,
            "n": self.n,
            "params": dict(self.params),
            "left": str(self.left),
            "right": str(self.right),
            "verdict": self.verdict,
        }
        if include_elapsed:
            out["elapsed"] = round(self.elapsed, 6)
        return out


def odd_double_factorial(n: int) -> int:
    """1 * 3 * ... * (2n-1)."""
    out = 1
    for k in range(1, 2 * n, 2):
        out *= k
    return out


def even_double_factorial(n: int) -> int:
    """2 * 4 * ... * 2n."""
    out = 1
    for k in range(2, 2 * n + 1, 2):
        out *= k
    return out


def _guard_sweep(size: int, force: bool):
    if size > GUARD_MAX_N and not force:
        raise GuardLimitError(
            f"sweeping all {size}! permutations exceeds the n <= {GUARD_MAX_N} "
            "guard; pass force=True to override"
        )


# ---------------------------------------------------------------------------
# Fibers of the correspondence


def fiber(alpha: DyckPath, beta: DyckPath) -> Iterator[tuple[int, ...]]:
    """All even-length w whose paths are exactly (alpha, beta), generated by
    decoding every admissible label pair."""
    if len(beta) != len(alpha) + 2:
        raise ValidationError(
            f"need |beta| = |alpha| + 2, got {len(alpha)} and {len(beta)}"
        )
    for ell in hermite_labelings(alpha):
        for em in hermite_labelings(beta, starred=True):
            yield decode(CrossoutTuple(alpha, beta, ell, em, "even"))


def fiber_size(alpha: DyckPath, beta: DyckPath) -> int:
    ha, _ = alpha.heights()
    _, hsb = beta.heights()
    return math.prod(ha) * math.prod(hsb[:-1])


def generate_alice_fiber(alpha: DyckPath) -> Iterator[tuple[int, ...]]:
    """Every w with Alice path alpha, via the circled-box write-in process.

    Walk the steps of alpha writing 1, 2, ... into empty boxes: a down step
    writes into any empty circled box; an up step writes into any empty
    uncircled box and then circles the leftmost empty uncircled box.  Each
    sequence of choices yields a distinct permutation and together they are
    exactly the fiber.
    """
    size = len(alpha)
    steps = alpha.steps
    values = [0] * (size + 1)
    circled = [False] * (size + 1)

    def rec(k: int) -> Iterator[tuple[int, ...]]:
        if k > size:
            yield tuple(values[1:])
            return
        if steps[k - 1] == "D":
            for pos in range(1, size + 1):
                if circled[pos] and not values[pos]:
                    values[pos] = k
                    yield from rec(k + 1)
                    values[pos] = 0
        else:
            for pos in range(1, size + 1):
                if not circled[pos] and not values[pos]:
                    values[pos] = k
                    ring = next(
                        p
                        for p in range(1, size + 1)
                        if not circled[p] and not values[p]
                    )
                    circled[ring] = True
                    yield from rec(k + 1)
                    circled[ring] = False
                    values[pos] = 0

    yield from rec(1)


# ---------------------------------------------------------------------------
# Single-identity checks


def check_theorem2(alpha: DyckPath, beta: DyckPath) -> IdentityReport:
    """Fiber inversion generating function against the q/r product."""
    started = time.perf_counter()
    n = len(alpha) // 2
    terms: dict[tuple[int, int, int], int] = {}
    for w in fiber(alpha, beta):
        b = stat_bundle(w)
        key = (b.aa, b.bb, 0)
        terms[key] = terms.get(key, 0) + 1
    left = Polynomial(terms)
    ha, _ = alpha.heights()
    _, hsb = beta.heights()
    right = product(q_integer(h, "q") for h in ha) * product(
        q_integer(h, "r") for h in hsb[:-1]
    )
    return IdentityReport.build(
        "thm2", n, left, right, started, alpha=alpha.steps, beta=beta.steps
    )


def alice_marginal_closed_form(alpha: DyckPath) -> int:
    ha, _ = alpha.heights()
    return even_double_factorial(len(alpha) // 2) * math.prod(ha)


def bob_marginal_closed_form(beta: DyckPath) -> int:
    _, hsb = beta.heights()
    return odd_double_factorial(len(beta) // 2 - 1) * math.prod(hsb[:-1])


def check_alice_marginal(alpha: DyckPath, force: bool = False) -> IdentityReport:
    """Brute-force count of {w : p_A(w) = alpha} against the closed form."""
    started = time.perf_counter()
    size = len(alpha)
    count = sum(1 for w in iter_permutations(size, force) if encode(w).pa == alpha)
    return IdentityReport.build(
        "thm3", size // 2, count, alice_marginal_closed_form(alpha), started,
        alpha=alpha.steps,
    )


def check_bob_marginal(beta: DyckPath, force: bool = False) -> IdentityReport:
    """Brute-force count of {w : p_B(w) = beta} against the closed form."""
    started = time.perf_counter()
    size = len(beta) - 2
    count = sum(1 for w in iter_permutations(size, force) if encode(w).pb == beta)
    return IdentityReport.build(
        "thm4", size // 2, count, bob_marginal_closed_form(beta), started,
        beta=beta.steps,
    )


def check_corollary5(n: int) -> tuple[IdentityReport, IdentityReport]:
    """Both height-product sums against the double factorials; path sums
    only, no permutation sweep."""
    started = time.perf_counter()
    total_h = 0
    for p in enumerate_dyck_paths(2 * n):
        h, _ = p.heights()
        total_h += math.prod(h)
    first = IdentityReport.build(
        "cor5", n, total_h, odd_double_factorial(n), started, side="h"
    )
    started = time.perf_counter()
    total_hs = 0
    for p in enumerate_dyck_paths(2 * n + 2):
        _, hs = p.heights()
        total_hs += math.prod(hs[:-1])
    second = IdentityReport.build(
        "cor5", n, total_hs, even_double_factorial(n), started, side="h*"
    )
    return first, second


def check_theorem6(alpha: DyckPath, force: bool = False) -> IdentityReport:
    """The q^aa t^z generating function of one Alice fiber."""
    started = time.perf_counter()
    size = len(alpha)
    n = size // 2
    terms: dict[tuple[int, int, int], int] = {}
    for w in iter_permutations(size, force):
        if encode(w).pa != alpha:
            continue
        b = stat_bundle(w)
        key = (b.aa, 0, b.z)
        terms[key] = terms.get(key, 0) + 1
    left = Polynomial(terms)
    right = theorem6_closed_form(alpha)
    return IdentityReport.build("thm6", n, left, right, started, alpha=alpha.steps)


def theorem6_closed_form(alpha: DyckPath) -> Polynomial:
    n = len(alpha) // 2
    ha, _ = alpha.heights()
    return product(q_integer(2 * k, "t") for k in range(1, n + 1)) * product(
        q_integer(h, "q") for h in ha
    )


def check_lemma_z(n: int, force: bool = False) -> IdentityReport:
    """Per-permutation z identity over the whole symmetric group: counts how
    many w satisfy z = n^2 + sum(h_i - 1) - ab - bb, against (2n)!."""
    started = time.perf_counter()
    good = 0
    total = 0
    for w in iter_permutations(2 * n, force):
        total += 1
        b = stat_bundle(w)
        h, _ = encode(w).pa.heights()
        if b.z == n * n + sum(hi - 1 for hi in h) - b.ab - b.bb:
            good += 1
    return IdentityReport.build("lemma_z", n, good, total, started)


def corollary7_closed_form(n: int) -> Polynomial:
    return product(q_integer(2 * k - 1, "q") for k in range(1, n + 1))


def check_corollary7(n: int) -> IdentityReport:
    """Path-sum of q^(h-1)[h]_q products against the odd q-double factorial."""
    started = time.perf_counter()
    left = Polynomial.zero()
    for p in enumerate_dyck_paths(2 * n):
        h, _ = p.heights()
        left = left + product(
            monomial("q", hi - 1) * q_integer(hi, "q") for hi in h
        )
    return IdentityReport.build("cor7", n, left, corollary7_closed_form(n), started)


def eq_qq_closed_form(alpha: DyckPath) -> Polynomial:
    n = len(alpha) // 2
    h, _ = alpha.heights()
    return product(q_integer(2 * k, "q") for k in range(1, n + 1)) * product(
        monomial("q", hi - 1) * q_integer(hi, "q") for hi in h
    )


def check_eq_qq(alpha: DyckPath, force: bool = False) -> IdentityReport:
    """Fiber inversion generating function q^inv against its closed form."""
    started = time.perf_counter()
    size = len(alpha)
    terms: dict[tuple[int, int, int], int] = {}
    for w in iter_permutations(size, force):
        if encode(w).pa != alpha:
            continue
        b = stat_bundle(w)
        terms[(b.inv, 0, 0)] = terms.get((b.inv, 0, 0), 0) + 1
    left = Polynomial(terms)
    return IdentityReport.build(
        "eq_qq", size // 2, left, eq_qq_closed_form(alpha), started,
        alpha=alpha.steps,
    )


def check_classical_inv(n: int, force: bool = False) -> IdentityReport:
    """The textbook sum of q^inv over all of S_2n against [1]_q...[2n]_q."""
    started = time.perf_counter()
    terms: dict[tuple[int, int, int], int] = {}
    for w in iter_permutations(2 * n, force):
        b = stat_bundle(w)
        terms[(b.inv, 0, 0)] = terms.get((b.inv, 0, 0), 0) + 1
    left = Polynomial(terms)
    right = product(q_integer(k, "q") for k in range(1, 2 * n + 1))
    return IdentityReport.build("classical_inv", n, left, right, started)


def check_probability(n: int, force: bool = False) -> list[IdentityReport]:
    """Exact sweep counts against the rank-product formula, one report per
    increasing rank subset of every size up to n."""
    started = time.perf_counter()
    counts: Counter = Counter()
    total = 0
    for w in iter_permutations(2 * n, force):
        total += 1
        downs = encode(w).pa.down_steps
        for m in range(1, n + 1):
            for ranks in itertools.combinations(downs, m):
                counts[ranks] += 1
    reports = []
    for m in range(1, n + 1):
        for ranks in itertools.combinations(range(1, 2 * n + 1), m):
            left = Fraction(counts.get(ranks, 0), total)
            right = alice_probability(n, ranks)
            reports.append(
                IdentityReport.build(
                    "prob", n, left, right, started,
                    ranks=",".join(map(str, ranks)),
                )
            )
            started = time.perf_counter()
    return reports


def outcome_sets(n: int, force: bool = False):
    """Distinct Alice outcomes (as rank sets, equivalently the down-step set
    of her path) and distinct Bob outcomes (as position sets)."""
    alice = set()
    bob = set()
    for w in iter_permutations(2 * n, force):
        marking = crossout_mark(w)
        alice.add(frozenset(w[p - 1] for p in marking.alice_positions()))
        bob.add(frozenset(marking.bob_positions()))
    return alice, bob


def outcome_counts(n: int, force: bool = False) -> tuple[int, int]:
    alice, bob = outcome_sets(n, force)
    return len(alice), len(bob)


def check_outcomes(n: int, force: bool = False) -> IdentityReport:
    started = time.perf_counter()
    left = outcome_counts(n, force)
    return IdentityReport.build(
        "outcomes", n, left, (catalan(n), catalan(n + 1)), started
    )


def check_independence(n: int, force: bool = False) -> list[IdentityReport]:
    """Counting content of the independence claim: every realized labeled
    Alice path occurs 2*4*...*2n times, every realized labeled Bob path
    occurs (2n-1)!! times, and the two counts multiply to (2n)!."""
    started = time.perf_counter()
    alice_counts: Counter = Counter()
    bob_counts: Counter = Counter()
    for w in iter_permutations(2 * n, force):
        t = encode(w)
        alice_counts[(t.pa.steps, t.ell)] += 1
        bob_counts[(t.pb.steps, t.em)] += 1
    even_df = even_double_factorial(n)
    odd_df = odd_double_factorial(n)
    reports = [
        IdentityReport.build(
            "independence", n,
            (len(alice_counts), min(alice_counts.values()), max(alice_counts.values())),
            (odd_df, even_df, even_df),
            started, side="alice",
        )
    ]
    started = time.perf_counter()
    reports.append(
        IdentityReport.build(
            "independence", n,
            (len(bob_counts), min(bob_counts.values()), max(bob_counts.values())),
            (even_df, odd_df, odd_df),
            started, side="bob",
        )
    )
    started = time.perf_counter()
    products = {a * b for a in set(alice_counts.values()) for b in set(bob_counts.values())}
    reports.append(
        IdentityReport.build(
            "independence", n,
            (min(products), max(products)),
            (math.factorial(2 * n), math.factorial(2 * n)),
            started, side="product",
        )
    )
    return reports


def check_roundtrip(size: int, force: bool = False) -> IdentityReport:
    """decode(encode(w)) = w over all of S_size; left counts successes."""
    started = time.perf_counter()
    good = 0
    total = 0
    for w in iter_permutations(size, force):
        total += 1
        if decode(encode(w)) == w:
            good += 1
    return IdentityReport.build("roundtrip", size, good, total, started, size=size)


# ---------------------------------------------------------------------------
# Bulk runners: one permutation sweep shared across all paths of a size


def marginal_reports(n: int, force: bool = False) -> Iterator[IdentityReport]:
    """Marginal-count (thm3/thm4) reports for every path of the right
    length, from a single sweep of the symmetric group."""
    started = time.perf_counter()
    _guard_sweep(2 * n, force)
    pa_counts: Counter = Counter()
    pb_counts: Counter = Counter()
    for w in iter_permutations(2 * n, force):
        t = encode(w)
        pa_counts[t.pa.steps] += 1
        pb_counts[t.pb.steps] += 1
    for alpha in enumerate_dyck_paths(2 * n):
        yield IdentityReport.build(
            "thm3", n, pa_counts.get(alpha.steps, 0),
            alice_marginal_closed_form(alpha), started, alpha=alpha.steps,
        )
        started = time.perf_counter()
    for beta in enumerate_dyck_paths(2 * n + 2):
        yield IdentityReport.build(
            "thm4", n, pb_counts.get(beta.steps, 0),
            bob_marginal_closed_form(beta), started, beta=beta.steps,
        )
        started = time.perf_counter()


def alice_fiber_reports(n: int, force: bool = False) -> Iterator[IdentityReport]:
    """Circled-box generator against the brute-force fiber, per path."""
    started = time.perf_counter()
    _guard_sweep(2 * n, force)
    fibers: dict[str, set] = {}
    for w in iter_permutations(2 * n, force):
        fibers.setdefault(encode(w).pa.steps, set()).add(w)
    for alpha in enumerate_dyck_paths(2 * n):
        generated = list(generate_alice_fiber(alpha))
        left = (len(generated), len(set(generated) - fibers.get(alpha.steps, set())))
        right = (len(fibers.get(alpha.steps, set())), 0)
        yield IdentityReport.build(
            "thm3_generator", n, left, right, started, alpha=alpha.steps
        )
        started = time.perf_counter()


def theorem6_reports(n: int, force: bool = False) -> Iterator[IdentityReport]:
    started = time.perf_counter()
    _guard_sweep(2 * n, force)
    per_alpha: dict[str, dict] = {}
    for w in iter_permutations(2 * n, force):
        b = stat_bundle(w)
        terms = per_alpha.setdefault(encode(w).pa.steps, {})
        key = (b.aa, 0, b.z)
        terms[key] = terms.get(key, 0) + 1
    for alpha in enumerate_dyck_paths(2 * n):
        left = Polynomial(per_alpha.get(alpha.steps, {}))
        yield IdentityReport.build(
            "thm6", n, left, theorem6_closed_form(alpha), started,
            alpha=alpha.steps,
        )
        started = time.perf_counter()


def eq_qq_reports(n: int, force: bool = False) -> Iterator[IdentityReport]:
    started = time.perf_counter()
    _guard_sweep(2 * n, force)
    per_alpha: dict[str, dict] = {}
    for w in iter_permutations(2 * n, force):
        b = stat_bundle(w)
        terms = per_alpha.setdefault(encode(w).pa.steps, {})
        terms[(b.inv, 0, 0)] = terms.get((b.inv, 0, 0), 0) + 1
    for alpha in enumerate_dyck_paths(2 * n):
        left = Polynomial(per_alpha.get(alpha.steps, {}))
        yield IdentityReport.build(
            "eq_qq", n, left, eq_qq_closed_form(alpha), started,
            alpha=alpha.steps,
        )
        started = time.perf_counter()


# ---------------------------------------------------------------------------
# Suite registry for the CLI and service

QQ_SWEEP_MAX_N = 3


def _suite_thm2(n: int, force: bool) -> Iterator[IdentityReport]:
    _guard_sweep(2 * n, force)  # fiber totals scale like (2n)!
    for k in range(1, n + 1):
        for alpha in enumerate_dyck_paths(2 * k):
            for beta in enumerate_dyck_paths(2 * k + 2):
                yield check_theorem2(alpha, beta)


def _suite_thm3(n: int, force: bool) -> Iterator[IdentityReport]:
    _guard_sweep(2 * n, force)
    for k in range(1, n + 1):
        for report in marginal_reports(k, force):
            if report.identity == "thm3":
                yield report
        if k <= QQ_SWEEP_MAX_N:
            yield from alice_fiber_reports(k, force)


def _suite_thm4(n: int, force: bool) -> Iterator[IdentityReport]:
    _guard_sweep(2 * n, force)
    for k in range(1, n + 1):
        for report in marginal_reports(k, force):
            if report.identity == "thm4":
                yield report


def _suite_cor5(n: int, force: bool) -> Iterator[IdentityReport]:
    for k in range(1, n + 1):
        yield from check_corollary5(k)


def _suite_thm6(n: int, force: bool) -> Iterator[IdentityReport]:
    _guard_sweep(2 * n, force)
    for k in range(1, n + 1):
        yield from theorem6_reports(k, force)
        yield check_lemma_z(k, force)


def _suite_cor7(n: int, force: bool) -> Iterator[IdentityReport]:
    # the permutation-sweep parts are capped at QQ_SWEEP_MAX_N, so the
    # path-only sum runs at any n without tripping the guard
    for k in range(1, n + 1):
        yield check_corollary7(k)
        if k <= QQ_SWEEP_MAX_N:
            yield from eq_qq_reports(k, force)
            yield check_classical_inv(k, force)


def _suite_prob(n: int, force: bool) -> Iterator[IdentityReport]:
    _guard_sweep(2 * n, force)
    for k in range(1, n + 1):
        yield from check_probability(k, force)


def _suite_outcomes(n: int, force: bool) -> Iterator[IdentityReport]:
    _guard_sweep(2 * n, force)
    for k in range(1, n + 1):
        yield check_outcomes(k, force)


def _suite_independence(n: int, force: bool) -> Iterator[IdentityReport]:
    _guard_sweep(2 * n, force)
    for k in range(1, n + 1):
        yield from check_independence(k, force)


def _suite_roundtrip(n: int, force: bool) -> Iterator[IdentityReport]:
    _guard_sweep(2 * n, force)
    for size in range(1, 2 * n + 1):
        yield check_roundtrip(size, force)


SUITES = {
    "thm2": _suite_thm2,
    "thm3": _suite_thm3,
    "thm4": _suite_thm4,
    "cor5": _suite_cor5,
    "thm6": _suite_thm6,
    "cor7": _suite_cor7,
    "prob": _suite_prob,
    "outcomes": _suite_outcomes,
    "independence": _suite_independence,
    "roundtrip": _suite_roundtrip,
}

ALIASES = {
    "theorem2": "thm2",
    "theorem3": "thm3",
    "theorem4": "thm4",
    "corollary5": "cor5",
    "theorem6": "thm6",
    "corollary7": "cor7",
    "probability": "prob",
}


def resolve_suites(names: Sequence[str]) -> list[str]:
    resolved = []
    for name in names:
        name = name.strip().lower()
        if name == "all":
            return list(SUITES)
        name = ALIASES.get(name, name)
        if name not in SUITES:
            raise ValidationError(
                f"unknown suite {name!r}; choose from {', '.join(SUITES)} or 'all'"
            )
        if name not in resolved:
            resolved.append(name)
    return resolved


def run_suites(names: Sequence[str], n: int, force: bool = False) -> Iterator[IdentityReport]:
    if not isinstance(n, int) or n < 1:
        raise ValidationError(f"n must be a positive integer, got {n!r}")
    for name in resolve_suites(names):
        yield from SUITES[name](n, force)
