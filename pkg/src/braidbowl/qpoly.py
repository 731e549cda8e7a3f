"""Exact univariate polynomials in q with integer coefficients, plus the
q-combinatorial quantities built from them.

A polynomial is stored as a tuple of coefficients, index i holding the
coefficient of q^i, with trailing zeros stripped (the zero polynomial is the
empty tuple).  Coefficients are Python ints, so products of quantum factorials
never overflow.  Rational evaluation points use ``fractions.Fraction``, which
already is the reduced-fraction scalar we need.

The combinatorial layer provides quantum integers [k] = 1 + q + ... + q^{k-1}
(the positive-exponent convention, not the one symmetric under q -> 1/q),
q-factorials, Gaussian binomials, inversion counters, and the closed-form
distribution of how many balls fall at a single cabled crossing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence


@dataclass(frozen=True)
class QPoly:
    """A polynomial in q with int coefficients, canonical (no trailing zeros)."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        coeffs = tuple(self.coeffs)
        if any(not isinstance(c, int) for c in coeffs):
            raise TypeError(f"integer coefficients required, got {coeffs!r}")
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def of(cls, *coeffs: int) -> QPoly:
        return cls(coeffs)

    @classmethod
    def constant(cls, c: int) -> QPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> QPoly:
        if power < 0:
            raise ValueError("negative powers of q are not representable")
        return cls((0,) * power + (coeff,))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: QPoly | int) -> QPoly:
        if isinstance(other, int):
            other = QPoly((other,))
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return QPoly(tuple(x + y for x, y in zip(a, b)) + a[len(b):])

    __radd__ = __add__

    def __neg__(self) -> QPoly:
        return QPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: QPoly | int) -> QPoly:
        if isinstance(other, int):
            other = QPoly((other,))
        if not isinstance(other, QPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> QPoly:
        return QPoly((other,)) + (-self)

    def __mul__(self, other: QPoly | int) -> QPoly:
        if isinstance(other, int):
            return QPoly(tuple(other * c for c in self.coeffs))
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> QPoly:
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def eval_at(self, x: Fraction | int) -> Fraction:
        """Exact rational Horner evaluation at q = x."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "1" if i == 0 else ("q" if i == 1 else f"q^{i}")
            mag = abs(c)
            body = mono if (mag == 1 and i > 0) else (str(mag) if i == 0 else f"{mag}*{mono}")
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data: dict) -> QPoly:
        return cls(tuple(int(c) for c in data["coeffs"]))


ZERO = QPoly()
ONE = QPoly((1,))
Q = QPoly((0, 1))
ONE_MINUS_Q = QPoly((1, -1))


def fraction_to_json(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator}


def fraction_from_json(data: dict) -> Fraction:
    return Fraction(int(data["num"]), int(data["den"]))


def quantum_int(k: int) -> QPoly:
    """[k] = 1 + q + ... + q^{k-1}, the formal quotient (1 - q^k)/(1 - q)."""
    if k < 0:
        raise ValueError(f"quantum integer needs k >= 0, got {k}")
    return QPoly((1,) * k)


def q_factorial(k: int) -> QPoly:
    """[k]! = [k][k-1]...[1], with [0]! = 1."""
    if k < 0:
        raise ValueError(f"q-factorial needs k >= 0, got {k}")
    out = ONE
    for i in range(1, k + 1):
        out = out * quantum_int(i)
    return out


@lru_cache(maxsize=None)
def gauss_binom(k: int, r: int) -> QPoly:
    """Gaussian binomial [k]! / ([r]! [k-r]!), and 0 when r < 0 or r > k.

    Computed by the q-Pascal recursion, which stays in Z[q] throughout:
    choosing whether the last slot of a 0/1 sequence holds a 1 gives
    gauss(k, r) = gauss(k-1, r-1) + q^r * gauss(k-1, r).
    """
    if k < 0:
        raise ValueError(f"Gaussian binomial needs k >= 0, got {k}")
    if r < 0 or r > k:
        return ZERO
    if r == 0 or r == k:
        return ONE
    return gauss_binom(k - 1, r - 1) + QPoly.monomial(r) * gauss_binom(k - 1, r)


def inversions_perm(w: Sequence[int]) -> int:
    """Number of pairs i < j with w(i) > w(j)."""
    return sum(
        1
        for i, j in itertools.combinations(range(len(w)), 2)
        if w[i] > w[j]
    )


def inversions_binary(s: Sequence[int]) -> int:
    """Number of pairs i < j with s_i = 1 and s_j = 0."""
    ones = 0
    count = 0
    for e in s:
        if e == 1:
            ones += 1
        elif e == 0:
            count += ones
        else:
            raise ValueError(f"binary sequence expected, got entry {e!r}")
    return count


def falling_probability(K: int, a: int, b: int, c: int) -> QPoly:
    """Probability, as a polynomial in q, that exactly c balls fall at one
    cabled crossing of width K when a balls enter the over group and b the
    under group.

    Closed form:

        gauss(a, c) * gauss(K - b, c) * [c]! * (1 - q)^c * q^{(a-c)(K-b-c)}

    The division by the formal infinite binomial 1/([c]!(1-q)^c) is folded in
    as multiplication, so the result stays in Z[q].  Vanishes when c > a or
    c > K - b (no way to pick the falling balls or the lanes they land in).
    """
    if K < 1:
        raise ValueError(f"cable width must be >= 1, got {K}")
    if not 0 <= a <= K:
        raise ValueError(f"need 0 <= a <= K, got a={a}, K={K}")
    if not 0 <= b <= K:
        raise ValueError(f"need 0 <= b <= K, got b={b}, K={K}")
    if c < 0:
        raise ValueError(f"need c >= 0, got c={c}")
    if c > a or c > K - b:
        return ZERO
    out = gauss_binom(a, c) * gauss_binom(K - b, c) * q_factorial(c)
    out = out * ONE_MINUS_Q**c
    return out * QPoly.monomial((a - c) * (K - b - c))


def poly_sum(polys: Iterable[QPoly]) -> QPoly:
    total = ZERO
    for p in polys:
        total = total + p
    return total
