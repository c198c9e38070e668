"""Sparse polynomials over the integers in the formal variables q, r, t.

Terms live in a map from exponent triples (e_q, e_r, e_t) to non-zero
arbitrary-precision coefficients, so equality is term-map equality and the
canonical form is unique.  Serialization orders terms by descending graded
lexicographic exponent.  There is deliberately no division: the one place a
q -> 1/q substitution would be needed is replaced by the equivalent
coefficient-reversal statement, keeping exponents non-negative.
"""
from __future__ import annotations

from typing import Iterator, Mapping

from .errors import ValidationError

VARIABLES = ("q", "r", "t")

Expt = tuple[int, int, int]


def _grlex_key(e: Expt):
    return (sum(e), e)


class Polynomial:
    """An immutable element of Z[q, r, t].

    >>> str(q_integer(3) * q_integer(2))
    'q^3 + 2*q^2 + 2*q + 1'
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Expt, int] | None = None):
        clean: dict[Expt, int] = {}
        for expt, coeff in (terms or {}).items():
            expt = tuple(expt)
            if len(expt) != 3 or any(not isinstance(e, int) or e < 0 for e in expt):
                raise ValidationError(
                    f"exponent {expt!r} is not a triple of non-negative integers"
                )
            if not isinstance(coeff, int):
                raise ValidationError(f"coefficient {coeff!r} is not an integer")
            if coeff:
                clean[expt] = clean.get(expt, 0) + coeff
                if not clean[expt]:
                    del clean[expt]
        self._terms = clean

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def one(cls) -> "Polynomial":
        return cls({(0, 0, 0): 1})

    def terms(self) -> Iterator[tuple[Expt, int]]:
        """Terms in canonical order (descending graded lexicographic)."""
        for expt in sorted(self._terms, key=_grlex_key, reverse=True):
            yield expt, self._terms[expt]

    def coefficient(self, e_q: int = 0, e_r: int = 0, e_t: int = 0) -> int:
        return self._terms.get((e_q, e_r, e_t), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other) -> "Polynomial":
        if isinstance(other, int):
            other = constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        out = dict(self._terms)
        for expt, coeff in other._terms.items():
            new = out.get(expt, 0) + coeff
            if new:
                out[expt] = new
            else:
                out.pop(expt, None)
        result = Polynomial.__new__(Polynomial)
        result._terms = out
        return result

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        result = Polynomial.__new__(Polynomial)
        result._terms = {e: -c for e, c in self._terms.items()}
        return result

    def __sub__(self, other) -> "Polynomial":
        return self + (-other if isinstance(other, Polynomial) else -constant(other))

    def __rsub__(self, other) -> "Polynomial":
        return constant(other) + (-self)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, int):
            other = constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        out: dict[Expt, int] = {}
        for (a1, a2, a3), c in self._terms.items():
            for (b1, b2, b3), d in other._terms.items():
                expt = (a1 + b1, a2 + b2, a3 + b3)
                new = out.get(expt, 0) + c * d
                if new:
                    out[expt] = new
                else:
                    del out[expt]
        result = Polynomial.__new__(Polynomial)
        result._terms = out
        return result

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValidationError(f"exponent must be a non-negative integer, got {exponent!r}")
        result = Polynomial.one()
        for _ in range(exponent):
            result = result * self
        return result

    def eval_at(self, q0: int, r0: int, t0: int) -> int:
        """Exact big-integer evaluation; at (1, 1, 1) this is the coefficient sum."""
        return sum(
            c * q0**e1 * r0**e2 * t0**e3 for (e1, e2, e3), c in self._terms.items()
        )

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for i, (expt, coeff) in enumerate(self.terms()):
            factors = []
            for var, e in zip(VARIABLES, expt):
                if e == 1:
                    factors.append(var)
                elif e > 1:
                    factors.append(f"{var}^{e}")
            magnitude = abs(coeff)
            if magnitude != 1 or not factors:
                factors.insert(0, str(magnitude))
            body = "*".join(factors)
            if i == 0:
                chunks.append(body if coeff > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def to_json(self) -> list[dict]:
        return [
            {"eq": e1, "er": e2, "et": e3, "c": str(c)}
            for (e1, e2, e3), c in self.terms()
        ]

    @classmethod
    def from_json(cls, data) -> "Polynomial":
        if not isinstance(data, list):
            raise ValidationError("polynomial JSON must be a list of terms")
        terms: dict[Expt, int] = {}
        for item in data:
            try:
                expt = (int(item["eq"]), int(item["er"]), int(item["et"]))
                coeff = int(item["c"])
            except (KeyError, TypeError, ValueError) as exc:
                raise ValidationError(f"bad polynomial term {item!r}") from exc
            terms[expt] = terms.get(expt, 0) + coeff
        return cls(terms)


def constant(value: int) -> Polynomial:
    return Polynomial({(0, 0, 0): value})


def monomial(var: str, exponent: int, coeff: int = 1) -> Polynomial:
    """coeff * var**exponent as a polynomial."""
    if var not in VARIABLES:
        raise ValidationError(f"unknown variable {var!r}, expected one of {VARIABLES}")
    if not isinstance(exponent, int) or exponent < 0:
        raise ValidationError(f"exponent must be a non-negative integer, got {exponent!r}")
    expt = tuple(exponent if v == var else 0 for v in VARIABLES)
    return Polynomial({expt: coeff})


def q_integer(h: int, var: str = "q") -> Polynomial:
    """1 + var + ... + var^(h-1); the empty sum 0 when h = 0.

    >>> str(q_integer(3))
    'q^2 + q + 1'
    """
    if not isinstance(h, int) or h < 0:
        raise ValidationError(f"h must be a non-negative integer, got {h!r}")
    if var not in VARIABLES:
        raise ValidationError(f"unknown variable {var!r}, expected one of {VARIABLES}")
    idx = VARIABLES.index(var)
    terms = {}
    for e in range(h):
        expt = [0, 0, 0]
        expt[idx] = e
        terms[tuple(expt)] = 1
    return Polynomial(terms)


def product(factors) -> Polynomial:
    """Product of an iterable of polynomials (1 when empty)."""
    result = Polynomial.one()
    for f in factors:
        result = result * f
    return result
