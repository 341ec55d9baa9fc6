"""The five integer-sequence families as executable specs.

Each family packs a closed-form initial segment, a linear recurrence, and a
rational generating function into a ``SequenceSpec``; terms can be produced
from either the recurrence or the series expansion and the two must agree
(the tests check this).  Terms are indexed from k = 1.

Correspondence with the map families (fixed-point counts of iterates):

* ``a(n)``  <- base2 (n = 3) and fmn maps (n >= 4, any valid m)
* ``b(n)``  <- gn maps
* ``c(j,m,n)`` <- hjmn maps
* ``s(n)``  <- pn maps, solutions of f^k(x) = -x
* ``d(m,n)`` has no map oracle here; it is checked through its recurrence,
  generating function, and congruence sweeps only.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactnum import Poly, RecurrenceSpec, recurrence_eval

S2_NOTE = (
    "numerator for n=2 recovered from the terms as trunc(S(z)*D(z)) = "
    "z + 2z^2 - z^3; the drop-the-2z^2-term shortcut would leave z + 2z^2 - 2z^3, "
    "which does not reproduce the terms, and was not used"
)
S3_NOTE = (
    "numerator for n=3 recovered from the terms as trunc(S(z)*D(z)); it matches "
    "the drop-the-z^3-term shortcut exactly"
)


@dataclass(frozen=True)
class SequenceSpec:
    """A named sequence: family tag, parameters, closed-form prefix,
    recurrence, and generating function numerator/denominator."""

    family: str
    params: tuple[tuple[str, int], ...]
    prefix: tuple[int, ...]
    recurrence: RecurrenceSpec
    gf_num: Poly
    gf_den: Poly
    note: str | None = None

    def param(self, name: str) -> int:
        return dict(self.params)[name]

    @property
    def label(self) -> str:
        inner = ", ".join(f"{k}={v}" for k, v in self.params)
        return f"{self.family}({inner})"


def spec_a(n: int) -> SequenceSpec:
    """2^{k+1} - 1 through k = n-1, then t_k = 3t_{k-1} - sum(t_{k-2}..t_{k-n+1})."""
    if n < 3:
        raise ValueError("n must be >= 3")
    prefix = [2 ** (k + 1) - 1 for k in range(1, n)]
    rec = RecurrenceSpec(n - 1, (3,) + (-1,) * (n - 2), tuple(prefix))
    num = Poly([0, 3] + [-k for k in range(2, n)])
    den = Poly([1, -3] + [1] * (n - 2))
    return SequenceSpec("a", (("n", n),), tuple(prefix), rec, num, den)


def spec_b(n: int) -> SequenceSpec:
    """Odd-index and even-index closed forms through k = 4n, then the lag-2
    recurrence t_k = 3t_{k-2} - sum(t_{k-4}, t_{k-6}, ..., t_{k-4n})."""
    if n < 1:
        raise ValueError("n must be >= 1")
    prefix = [0] * (4 * n)
    for k in range(1, n + 1):
        prefix[2 * k - 2] = 1
    for k in range(n + 1, 2 * n + 1):
        prefix[2 * k - 2] = 2 ** (k - n - 1) * (2 * k - 1) + 1
    for k in range(1, 2 * n + 1):
        prefix[2 * k - 1] = 2 ** (k + 1) - 1
    coeffs = [0] * (4 * n)
    coeffs[1] = 3
    for lag in range(4, 4 * n + 1, 2):
        coeffs[lag - 1] = -1
    rec = RecurrenceSpec(4 * n, tuple(coeffs), tuple(prefix))
    num = Poly([0, 1] + [(-1) ** k * k for k in range(2, 2 * n + 1)])
    den = Poly([1, -1] + [-((-1) ** k) for k in range(2, 2 * n + 1)])
    return SequenceSpec("b", (("n", n),), tuple(prefix), rec, num, den)


def spec_c(j: int, m: int, n: int) -> SequenceSpec:
    """Three closed-form terms, then
    t_k = (2n+1)t_{k-1} - [2n-(j-m)]t_{k-2} - (j-m)t_{k-3}."""
    if n < 2:
        raise ValueError("n must be >= 2")
    top = 2 * n + 1
    if not (2 <= j <= top):
        raise ValueError("j must satisfy 2 <= j <= 2n+1")
    if not (2 <= m <= top):
        raise ValueError("m must satisfy 2 <= m <= 2n+1")
    w = j - m
    prefix = (
        top,
        top**2 - 2 * (2 * n - w),
        top**3 - 6 * n * (top - w),
    )
    rec = RecurrenceSpec(3, (top, -(2 * n - w), -w), prefix)
    num = Poly([0, top, -2 * (2 * n - w), -3 * w])
    den = Poly([1, -top, 2 * n - w, w])
    return SequenceSpec("c", (("j", j), ("m", m), ("n", n)), prefix, rec, num, den)


def spec_d(m: int, n: int) -> SequenceSpec:
    """d_1 = n, d_2 = n^2 + 2m, then t_k = n*t_{k-1} + m*t_{k-2}."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if not (1 - n <= m <= n):
        raise ValueError("m must satisfy 1-n <= m <= n")
    prefix = (n, n * n + 2 * m)
    rec = RecurrenceSpec(2, (n, m), prefix)
    num = Poly([0, n, 2 * m])
    den = Poly([1, -n, -m])
    return SequenceSpec("d", (("m", m), ("n", n)), prefix, rec, num, den)


def _s_prefix(n: int) -> list[int]:
    return [1] * (n - 1) + [2 ** (k - n) * 2 * k + 1 for k in range(n, 2 * n)]


def _s_numerator_formula(n: int, drop_degree: int | None = None) -> Poly:
    """The closed-form numerator of the s-family generating function.

    ``drop_degree`` omits the base -2z^2 (drop_degree=2) or -z^3
    (drop_degree=3) contribution, the advertised shortcut for the n = 2 and
    n = 3 special cases.
    """
    arr = [0] * (2 * n)
    arr[1] += 1
    if drop_degree != 2:
        arr[2] -= 2
    if drop_degree != 3 and 2 * n - 1 >= 3:
        arr[3] -= 1
    for k in range(5, n):
        arr[k] += k - 4
    arr[n] += 3 * n - 4
    for k in range(n + 1, 2 * n):
        arr[k] -= 2 * n - k
    return Poly(arr)


def _numerator_from_terms(terms: list[int], den: Poly, degree: int) -> Poly:
    """trunc(S(z) * D(z)) through the given degree, where S has the supplied
    coefficients on z^1.. and zero constant term."""
    s = [0] + list(terms)
    out = [0] * (degree + 1)
    for d in range(degree + 1):
        out[d] = sum(s[i] * den[d - i] for i in range(min(d, len(s) - 1) + 1))
    return Poly(out)


def spec_s(n: int) -> SequenceSpec:
    """1 through k = n-1, 2^{k-n}(2k) + 1 through k = 2n-1, then
    t_k = 3t_{k-1} - sum(t_{k-2}..t_{k-2n+1}).

    For n in {2, 3} the generating-function numerator is computed from the
    terms (the advertised shortcut is checked against it: exact for n = 3,
    off by one z^3 term for n = 2; see the spec note on the instance).
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    prefix = _s_prefix(n)
    rec = RecurrenceSpec(2 * n - 1, (3,) + (-1,) * (2 * n - 2), tuple(prefix))
    den = Poly([1, -3] + [1] * (2 * n - 2))
    note = None
    if n in (2, 3):
        num = _numerator_from_terms(prefix, den, 2 * n - 1)
        note = S2_NOTE if n == 2 else S3_NOTE
    else:
        num = _s_numerator_formula(n)
    return SequenceSpec("s", (("n", n),), tuple(prefix), rec, num, den, note)


def terms(spec: SequenceSpec, K: int) -> list[int]:
    """First K terms of the sequence (prefix, then recurrence)."""
    return recurrence_eval(spec.recurrence, K)


def gf_of(spec: SequenceSpec) -> tuple[Poly, Poly]:
    """(numerator, denominator) of the sequence's generating function."""
    return (spec.gf_num, spec.gf_den)


def seq_a(n: int, K: int) -> list[int]:
    return terms(spec_a(n), K)


def seq_b(n: int, K: int) -> list[int]:
    return terms(spec_b(n), K)


def seq_c(j: int, m: int, n: int, K: int) -> list[int]:
    return terms(spec_c(j, m, n), K)


def seq_d(m: int, n: int, K: int) -> list[int]:
    return terms(spec_d(m, n), K)


def seq_s(n: int, K: int) -> list[int]:
    return terms(spec_s(n), K)


def build_spec(family: str, **params: int) -> SequenceSpec:
    """Spec from a family tag and keyword parameters (the CLI vocabulary)."""
    builders = {
        "a": (spec_a, ("n",)),
        "b": (spec_b, ("n",)),
        "c": (spec_c, ("j", "m", "n")),
        "d": (spec_d, ("m", "n")),
        "s": (spec_s, ("n",)),
    }
    if family not in builders:
        raise ValueError(f"unknown sequence family {family!r}")
    fn, names = builders[family]
    missing = [a for a in names if params.get(a) is None]
    if missing:
        raise ValueError(f"family {family!r} needs parameters: {', '.join(missing)}")
    extra = [a for a, v in params.items() if v is not None and a not in names]
    if extra:
        raise ValueError(f"family {family!r} does not take: {', '.join(extra)}")
    return fn(*(params[a] for a in names))


SEQ_FAMILIES = ("a", "b", "c", "d", "s")
