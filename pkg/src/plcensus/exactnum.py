"""Exact arithmetic building blocks.

Dense integer polynomials, linear recurrences with constant coefficients,
power-series expansion of rational functions, and integer characteristic
polynomials.  No floating point anywhere: rationals are stdlib
``fractions.Fraction`` and integers are Python's arbitrary-precision ``int``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import zip_longest
from typing import Iterable, Sequence, Union

# Exact rationals throughout the package.  Fraction already guarantees the
# canonical form (reduced, positive denominator), so equality is structural.
Rational = Fraction


class ExactnessError(ArithmeticError):
    """A computation would have required leaving the integers."""


class Poly:
    """Dense univariate polynomial with integer coefficients.

    Coefficients are little-endian (index = degree) with trailing zeros
    trimmed; the zero polynomial has an empty coefficient tuple and degree -1.
    Instances are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __add__(self, other: "Poly") -> "Poly":
        return Poly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __sub__(self, other: "Poly") -> "Poly":
        return Poly(a - b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __neg__(self) -> "Poly":
        return Poly(-a for a in self.coeffs)

    def __mul__(self, other: "Poly") -> "Poly":
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if mag == 1 else f"{mag}{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = (first_sign if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


PolyLike = Union[Poly, Sequence[int]]


def _as_poly(p: PolyLike) -> Poly:
    return p if isinstance(p, Poly) else Poly(p)


@dataclass(frozen=True)
class RecurrenceSpec:
    """Linear recurrence t_k = sum_i coefficients[i-1] * t_{k-i}.

    ``initial_terms`` is the explicit starting segment (it may be longer than
    the order when early terms follow closed-form rules instead of the
    recurrence); the recurrence takes over immediately after it.
    ``start_index`` records the index of the first term (1 for everything in
    this package).
    """

    order: int
    coefficients: tuple[int, ...]
    initial_terms: tuple[int, ...]
    start_index: int = 1

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(self.coefficients))
        object.__setattr__(self, "initial_terms", tuple(self.initial_terms))
        if self.order < 1:
            raise ValueError("recurrence order must be >= 1")
        if len(self.coefficients) != self.order:
            raise ValueError("need exactly `order` coefficients")
        if self.start_index < 1:
            raise ValueError("start_index must be >= 1")


def recurrence_eval(spec: RecurrenceSpec, K: int) -> list[int]:
    """First K terms of the recurrence, starting at ``spec.start_index``.

    >>> recurrence_eval(RecurrenceSpec(2, (3, -1), (3, 7)), 4)
    [3, 7, 18, 47]
    """
    if K < 1:
        raise ValueError("K must be >= 1")
    prefix = spec.initial_terms
    if K <= len(prefix):
        return list(prefix[:K])
    if len(prefix) < spec.order:
        raise ValueError(
            f"prefix has {len(prefix)} terms but the order-{spec.order} "
            "recurrence needs at least that many to continue"
        )
    terms = list(prefix)
    for k in range(len(prefix), K):
        terms.append(sum(c * terms[k - i] for i, c in enumerate(spec.coefficients, 1)))
    return terms


def series_expand(numerator: PolyLike, denominator: PolyLike, K: int) -> list[int]:
    """Coefficients of z^1 .. z^K in numerator/denominator, exactly.

    The denominator must have a nonzero constant term; every coefficient of
    the expansion must come out an integer (guaranteed when the constant term
    is +-1), otherwise ExactnessError is raised.

    >>> series_expand([0, 3, -2], [1, -3, 1], 4)
    [3, 7, 18, 47]
    """
    if K < 1:
        raise ValueError("K must be >= 1")
    num = _as_poly(numerator)
    den = _as_poly(denominator)
    d0 = den[0]
    if d0 == 0:
        raise ZeroDivisionError("denominator has a zero constant term (pole at the origin)")
    coeffs: list[int] = []
    for k in range(K + 1):
        acc = num[k]
        for i in range(1, min(k, den.degree) + 1):
            acc -= den[i] * coeffs[k - i]
        q, r = divmod(acc, d0)
        if r:
            raise ExactnessError(f"coefficient of z^{k} is not an integer")
        coeffs.append(q)
    return coeffs[1:]


def _mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[list[int]]:
    n, mid, m = len(a), len(b), len(b[0]) if b else 0
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        row = a[i]
        acc = out[i]
        for t in range(mid):
            v = row[t]
            if v:
                brow = b[t]
                for j in range(m):
                    acc[j] += v * brow[j]
    return out


def charpoly(matrix: Sequence[Sequence[int]]) -> Poly:
    """det(xI - M) of a square integer matrix, with exact integer coefficients.

    Uses the Faddeev-LeVerrier recursion: every division it performs is by a
    small integer and provably exact, so the computation never leaves Z.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square")
    if n == 0:
        return Poly([1])
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    aux = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        aux = _mat_mul(matrix, aux)
        tr = sum(aux[i][i] for i in range(n))
        q, r = divmod(tr, k)
        if r:
            raise ArithmeticError("inexact division; matrix entries must be integers")
        c = -q
        coeffs[n - k] = c
        for i in range(n):
            aux[i][i] += c
    return Poly(coeffs)
