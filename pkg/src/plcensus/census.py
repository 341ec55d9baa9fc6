"""Number-theoretic layer: factorization, the inclusion-exclusion operators
phi1/phi2 over prime divisors, congruence verification, independent
least-period censuses, and the conjecture explorers.

phi1(m, f) turns fixed-point counts f(k) = #{x : g^k(x) = x} into the exact
number of points of least period m; phi2(m, f) does the same for symmetric
periodic points of odd maps (least period 2m) from f(k) = #{x : g^k(x) = -x}.
The censuses recompute those numbers by brute-force enumeration and orbit
inspection, independently of the operators, which is what makes the
congruence checks meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import prod
from typing import Callable, Iterable, NamedTuple

from .plmap import PLMap
from .sequences import SequenceSpec, terms


class CensusInvariantError(RuntimeError):
    """An enumerated count failed orbit divisibility; something is deeply
    wrong (or the map violates the finiteness hypothesis undetected)."""


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality check (desk scale)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


@dataclass(frozen=True)
class FactoredInt:
    """A positive integer with its sorted prime factorization."""

    value: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def recompose(self) -> int:
        return prod(p**e for p, e in self.factors)


def factorize(m: int) -> FactoredInt:
    """Complete prime factorization by trial division; factorize(1) is empty.

    >>> factorize(12).factors
    ((2, 2), (3, 1))
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    rem = m
    factors = []
    f = 2
    while f * f <= rem:
        if rem % f == 0:
            e = 0
            while rem % f == 0:
                rem //= f
                e += 1
            factors.append((f, e))
        f += 1 if f == 2 else 2
    if rem > 1:
        factors.append((rem, 1))
    return FactoredInt(m, tuple(factors))


Accessor = Callable[[int], int]


def phi1(m: int, phi: Accessor) -> int:
    """Inclusion-exclusion over the distinct primes of m:
    sum over subsets T of (-1)^|T| * phi(m / prod(T)); phi1(1, .) = phi(1)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    primes = factorize(m).primes
    total = 0
    for r in range(len(primes) + 1):
        for combo in combinations(primes, r):
            total += (-1) ** r * phi(m // prod(combo))
    return total


def phi2(m: int, psi: Accessor) -> int:
    """Like phi1 but over the distinct odd primes of m (the power of two in
    m stays fixed); for m a power of two, including m = 1, it is psi(m) - 1
    (discounting the origin, which every odd map fixes)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    odd = [p for p in factorize(m).primes if p != 2]
    if not odd:
        return psi(m) - 1
    total = 0
    for r in range(len(odd) + 1):
        for combo in combinations(odd, r):
            total += (-1) ** r * psi(m // prod(combo))
    return total


OPERATORS = {"phi1": (phi1, 1), "phi2": (phi2, 2)}


@dataclass(frozen=True)
class CensusReport:
    """Per-k verification record for a congruence sweep."""

    k: int
    phi_value: int
    operator: str
    value: int
    modulus: int
    quotient: int | None
    passed: bool

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "term": self.phi_value,
            "operator": self.operator,
            "value": self.value,
            "modulus": self.modulus,
            "quotient": self.quotient,
            "pass": self.passed,
        }


def _congruence_reports(term_list: list[int], operator: str, K: int) -> list[CensusReport]:
    op, mod_factor = OPERATORS[operator]
    acc = lambda k: term_list[k - 1]
    out = []
    for k in range(1, K + 1):
        value = op(k, acc)
        modulus = mod_factor * k
        ok = value % modulus == 0
        out.append(
            CensusReport(k, term_list[k - 1], operator, value, modulus, value // modulus if ok else None, ok)
        )
    return out


def verify_congruence(spec: SequenceSpec, operator: str, K: int) -> list[CensusReport]:
    """One report per k <= K checking operator(k, sequence) == 0 mod k
    (phi1) or mod 2k (phi2).  Failures are data, never swallowed."""
    if K < 1:
        raise ValueError("K must be >= 1")
    if operator not in OPERATORS:
        raise ValueError("operator must be 'phi1' or 'phi2'")
    return _congruence_reports(terms(spec, K), operator, K)


class CensusCount(NamedTuple):
    count: int
    orbit_count: int


# above this many solutions of f^m(x) = x the census stops walking every
# point and takes |S_m| minus the union of the proper-divisor solution sets
# (the same number, computed on exact sets)
ENUMERATE_LIMIT = 3000


def periodic_census(pl_map: PLMap, m: int, enumerate_limit: int = ENUMERATE_LIMIT) -> CensusCount:
    """Exact number of points of least period m, counted independently of
    phi1: enumerate solutions of f^m(x) = x and determine each point's least
    period over the divisors of m.  Returns (count, count // m); raises
    CensusInvariantError if m does not divide the count."""
    if m < 1:
        raise ValueError("m must be >= 1")
    total = pl_map.count_solutions(m, sign=1)
    if total <= enumerate_limit:
        divisors = {d for d in range(1, m + 1) if m % d == 0}
        count = 0
        for x in pl_map.solution_set(m, sign=1).points:
            y = x
            least = None
            for step in range(1, m + 1):
                y = pl_map(y)
                if step in divisors and y == x:
                    least = step
                    break
            count += least == m
    else:
        lower: set[Fraction] = set()
        for p in factorize(m).primes:
            lower.update(pl_map.solution_set(m // p, sign=1).points)
        count = total - len(lower)
    if count % m:
        raise CensusInvariantError(f"{count} least-period-{m} points, not divisible by {m}")
    return CensusCount(count, count // m)


def _is_odd_map(pl_map: PLMap) -> bool:
    lo, hi = pl_map.domain
    if lo != -hi:
        return False
    # two piecewise-linear maps agree iff they agree on the union of their
    # breakpoints; x -> -f(-x) has breakpoints at the negated anchors
    return all(pl_map(-x) == -y for x, y in pl_map.anchors)


def symmetric_census(pl_map: PLMap, m: int) -> CensusCount:
    """Exact number of symmetric periodic points of least period 2m of an
    odd map: enumerate solutions of f^m(x) = -x, keep those whose orbit has
    least period exactly 2m and equals its own negation.  Returns
    (count, count // (2m))."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if not _is_odd_map(pl_map):
        raise ValueError("symmetric census needs an odd map on a symmetric domain")
    count = 0
    for x in pl_map.solution_set(m, sign=-1).points:
        orbit = [x]
        y = pl_map(x)
        while y != x and len(orbit) <= 2 * m:
            orbit.append(y)
            y = pl_map(y)
        if y != x:
            continue  # least period beyond 2m; cannot qualify
        if len(orbit) == 2 * m and {-z for z in orbit} == set(orbit):
            count += 1
    if count % (2 * m):
        raise CensusInvariantError(f"{count} symmetric points, not divisible by {2 * m}")
    return CensusCount(count, count // (2 * m))


@dataclass(frozen=True)
class QRSFinding:
    q: int
    r: int
    s: int
    holds: bool
    first_failure: int | None

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "r": self.r,
            "s": self.s,
            "holds_through_K": self.holds,
            "first_failure_k": self.first_failure,
        }


def qrs_terms(n: int, q: int, r: int, s: int, K: int) -> list[int]:
    """t_1 = 2n+1, t_2 = (2n+1)^2 - 2q, t_3 = (2n+1)^3 - 6r, then
    t_k = (2n+1)t_{k-1} - q*t_{k-2} - s*t_{k-3}."""
    base = 2 * n + 1
    t = [base, base**2 - 2 * q, base**3 - 6 * r]
    while len(t) < K:
        t.append(base * t[-1] - q * t[-2] - s * t[-3])
    return t[:K]


def qrs_triple_for_c(j: int, m: int, n: int) -> tuple[int, int, int]:
    """The (q, r, s) triple whose generalized sequence coincides with the
    c-family instance (j, m, n)."""
    w = j - m
    return (2 * n - w, n * (2 * n + 1 - w), w)


def explore_qrs(
    n: int,
    q_range: Iterable[int],
    r_range: Iterable[int],
    s_range: Iterable[int],
    K: int,
) -> list[QRSFinding]:
    """Check phi1(k, t) == 0 mod k for k <= K over a (q, r, s) grid of
    generalized third-order sequences; failures are findings, not errors."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if K < 1:
        raise ValueError("K must be >= 1")
    findings = []
    for q in sorted(set(q_range)):
        for r in sorted(set(r_range)):
            for s in sorted(set(s_range)):
                t = qrs_terms(n, q, r, s, K)
                acc = lambda k: t[k - 1]
                first = next((k for k in range(1, K + 1) if phi1(k, acc) % k != 0), None)
                findings.append(QRSFinding(q, r, s, first is None, first))
    return findings


def check_phi1_on_s(n: int, K: int) -> list[CensusReport]:
    """phi1 congruence sweep over the s-family (conjecture status: the
    operator matching these counts is phi2; phi1 passing as well is only
    numerically suggested)."""
    from .sequences import spec_s

    return verify_congruence(spec_s(n), "phi1", K)


def oracle_congruence(pl_map: PLMap, operator: str, K: int) -> list[CensusReport]:
    """Congruence sweep with the accessor taken from the map itself:
    phi(k) = count of f^k(x) = x (phi1) or f^k(x) = -x (phi2)."""
    if operator not in OPERATORS:
        raise ValueError("operator must be 'phi1' or 'phi2'")
    sign = 1 if operator == "phi1" else -1
    counts = pl_map.count_sequence(K, sign=sign)
    return _congruence_reports(counts, operator, K)
