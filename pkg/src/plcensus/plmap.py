"""Piecewise-linear interval maps with exact rational arithmetic.

A map is a "connect-the-dots" function: anchor points (x, y) with strictly
increasing x, linear interpolation in between, and every value inside the
domain interval (a continuous self-map).  Iterates of such a map stay
piecewise affine with rational breakpoints, so the solutions of
``f^k(x) = x`` and ``f^k(x) = -x`` can be counted and enumerated exactly.

Counting runs on one of two interchangeable engines:

* ``pieces`` materializes the affine pieces of f^k by repeated splitting and
  composition and solves each piece against the (anti)diagonal; it works for
  every map but the piece list grows exponentially with k.
* ``markov`` applies to maps that send integers to integers and are therefore
  Markov over the unit-interval partition.  Diagonal crossings then biject
  with closed walks of the transition graph, up to corrections for solutions
  sitting on integer points, whose orbits are finite and cheap to inspect.
  This engine needs time polynomial in k.

Both engines are exact and agree wherever both apply (the test suite checks
them against each other); ``method="auto"`` picks per call based on the
projected piece count.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction

DEFAULT_MAX_PIECES = 10_000_000
# auto method: above this many projected pieces, eligible maps switch to the
# transition-matrix engine
AUTO_PIECE_THRESHOLD = 10_000


class DomainError(ValueError):
    """Argument outside the map's interval, or a sign=-1 query on a domain
    that does not contain 0."""


class NotMarkovError(ValueError):
    """The map is not Markov over the integer unit partition."""


class PieceLimitError(RuntimeError):
    """The piece budget was exhausted before the iterate was fully built."""

    def __init__(self, limit: int, k: int):
        self.limit = limit
        self.k = k
        super().__init__(f"building the pieces of f^{k} exceeded the budget of {limit} pieces")


class InfiniteSolutions(Exception):
    """f^k(x) = sign*x holds identically on a nondegenerate interval."""

    def __init__(self, lo: Fraction, hi: Fraction, k: int, sign: int):
        self.witness = (lo, hi)
        self.k = k
        self.sign = sign
        rhs = "x" if sign == 1 else "-x"
        super().__init__(f"f^{k}(x) = {rhs} holds identically on [{lo}, {hi}]")

    @property
    def solution_set(self) -> "SolutionSet":
        return SolutionSet((), infinite=True, witness=self.witness)


@dataclass(frozen=True)
class AffinePiece:
    """One affine lap of an iterate: x -> slope*x + intercept on [lo, hi]."""

    lo: Fraction
    hi: Fraction
    slope: Fraction
    intercept: Fraction

    def __call__(self, x: Fraction) -> Fraction:
        return self.slope * x + self.intercept


@dataclass(frozen=True)
class SolutionSet:
    """Exact solution set of f^k(x) = sign*x.

    When ``infinite`` is set the equation holds on the whole ``witness``
    interval and ``points`` is meaningless.
    """

    points: tuple[Fraction, ...]
    infinite: bool = False
    witness: tuple[Fraction, Fraction] | None = None

    def __len__(self) -> int:
        return len(self.points)


class _MarkovData:
    """Unit-partition view of an integer map: values at integers, slopes per
    unit interval, transition matrix, and a growing cache of its powers."""

    __slots__ = ("lo", "values", "slopes", "intercepts", "A", "counting_ok", "_pows")

    def __init__(self, lo: int, values: list[int]):
        self.lo = lo
        self.values = values
        n = len(values) - 1
        self.slopes = [values[i + 1] - values[i] for i in range(n)]
        # f restricted to [lo+i, lo+i+1] is x -> slopes[i]*x + intercepts[i]
        self.intercepts = [values[i] - self.slopes[i] * (lo + i) for i in range(n)]
        self.A = [
            [
                1
                if min(values[i], values[i + 1]) <= lo + j
                and lo + j + 1 <= max(values[i], values[i + 1])
                else 0
                for j in range(n)
            ]
            for i in range(n)
        ]
        # zero slopes break the walk/piece correspondence; the matrix itself
        # is still well defined
        self.counting_ok = all(s != 0 for s in self.slopes)
        self._pows = [self.A]

    @property
    def n(self) -> int:
        return len(self.values) - 1

    def power(self, k: int) -> list[list[int]]:
        from .exactnum import _mat_mul

        while len(self._pows) < k:
            self._pows.append(_mat_mul(self._pows[-1], self.A))
        return self._pows[k - 1]

    def total_walks(self, k: int) -> int:
        return sum(map(sum, self.power(k)))

    def nbr(self, q: int) -> list[int]:
        """Indices of the unit intervals containing the integer q."""
        j = q - self.lo
        return [i for i in (j - 1, j) if 0 <= i < self.n]

    def mirror(self, j: int) -> int | None:
        """Index of -I_j = [-(lo+j+1), -(lo+j)], or None if it falls outside
        the partition (solutions of f^k(x) = -x cannot land there)."""
        j2 = -2 * self.lo - j - 1
        return j2 if 0 <= j2 < self.n else None

    def target(self, j: int, sign: int) -> int | None:
        return j if sign == 1 else self.mirror(j)

    def f_int(self, p: int) -> int:
        return self.values[p - self.lo]


class PLMap:
    """Continuous piecewise-linear self-map of an interval, from anchors.

    Anchors may be ints, Fractions, or anything ``Fraction`` accepts.
    Instances are immutable; all operations are pure and safe to share
    across threads (internal caches are append-only memos).
    """

    __slots__ = ("anchors", "_xs", "_ys", "_laps", "_markov")

    def __init__(self, anchors):
        pts = [(Fraction(x), Fraction(y)) for x, y in anchors]
        if len(pts) < 2:
            raise ValueError("a map needs at least 2 anchors")
        xs = [p[0] for p in pts]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise ValueError("anchor x-coordinates must be strictly increasing")
        lo, hi = xs[0], xs[-1]
        if any(not (lo <= y <= hi) for _, y in pts):
            raise ValueError(f"anchor values leave [{lo}, {hi}]; not a self-map")
        object.__setattr__(self, "anchors", tuple(pts))
        object.__setattr__(self, "_xs", xs)
        object.__setattr__(self, "_ys", [p[1] for p in pts])
        object.__setattr__(self, "_laps", None)
        object.__setattr__(self, "_markov", None)

    def __setattr__(self, name, value):
        raise AttributeError("PLMap is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, PLMap) and self.anchors == other.anchors

    def __hash__(self):
        return hash(self.anchors)

    def __repr__(self) -> str:
        pts = ", ".join(f"({x}, {y})" for x, y in self.anchors)
        return f"PLMap([{pts}])"

    @property
    def domain(self) -> tuple[Fraction, Fraction]:
        return (self._xs[0], self._xs[-1])

    # -- evaluation ---------------------------------------------------------

    def __call__(self, x) -> Fraction:
        """Exact value at x; raises DomainError outside the interval."""
        x = Fraction(x)
        xs = self._xs
        if not (xs[0] <= x <= xs[-1]):
            raise DomainError(f"{x} outside the domain [{xs[0]}, {xs[-1]}]")
        i = bisect_right(xs, x) - 1
        if i == len(xs) - 1:
            return self._ys[-1]
        x0, y0 = self.anchors[i]
        if x == x0:
            return y0
        x1, y1 = self.anchors[i + 1]
        return y0 + (y1 - y0) * (x - x0) / (x1 - x0)

    def iterate(self, x, k: int) -> Fraction:
        """f^k(x) by k-fold evaluation."""
        v = Fraction(x)
        for _ in range(k):
            v = self(v)
        return v

    # -- symbolic pieces ----------------------------------------------------

    def laps(self) -> list[AffinePiece]:
        """The affine pieces of f itself, one per adjacent anchor pair."""
        if self._laps is None:
            out = []
            for (x0, y0), (x1, y1) in zip(self.anchors, self.anchors[1:]):
                s = (y1 - y0) / (x1 - x0)
                out.append(AffinePiece(x0, x1, s, y0 - s * x0))
            object.__setattr__(self, "_laps", tuple(out))
        return list(self._laps)

    def _lap_index_at(self, v: Fraction) -> int:
        i = bisect_right(self._xs, v) - 1
        return min(max(i, 0), len(self._xs) - 2)

    def _compose_with_base(self, pieces: list[AffinePiece], max_pieces: int, k: int) -> list[AffinePiece]:
        """Pieces of f∘g from the pieces of g: split each piece of g at the
        exact preimages of this map's anchor x's, then compose lap by lap."""
        xs = self._xs
        laps = self.laps()
        out: list[AffinePiece] = []
        for p in pieces:
            s, t = p.slope, p.intercept
            if s == 0:
                lap = laps[self._lap_index_at(t)]
                out.append(AffinePiece(p.lo, p.hi, Fraction(0), lap(t)))
            else:
                va, vb = p(p.lo), p(p.hi)
                a, b = (va, vb) if va <= vb else (vb, va)
                cuts = [(xs[i] - t) / s for i in range(bisect_right(xs, a), bisect_left(xs, b))]
                if s < 0:
                    cuts.reverse()
                bounds = [p.lo, *cuts, p.hi]
                for u, v in zip(bounds, bounds[1:]):
                    mid = (p(u) + p(v)) / 2
                    lap = laps[self._lap_index_at(mid)]
                    out.append(AffinePiece(u, v, lap.slope * s, lap.slope * t + lap.intercept))
            if len(out) > max_pieces:
                raise PieceLimitError(max_pieces, k)
        return out

    def iterate_pieces(self, k: int, max_pieces: int = DEFAULT_MAX_PIECES) -> list[AffinePiece]:
        """The affine pieces of f^k, tiling the domain in ascending order.

        All endpoints are exact rationals.  Raises PieceLimitError as soon as
        the piece list would exceed ``max_pieces``.
        """
        if k < 1:
            raise ValueError("k must be >= 1")
        pieces = self.laps()
        if len(pieces) > max_pieces:
            raise PieceLimitError(max_pieces, k)
        for _ in range(k - 1):
            pieces = self._compose_with_base(pieces, max_pieces, k)
        return pieces

    # -- Markov structure ---------------------------------------------------

    def _markov_data(self) -> _MarkovData | None:
        if self._markov is None:
            data: _MarkovData | bool = False
            xs = self._xs
            if all(x.denominator == 1 for x in xs):
                lo, hi = int(xs[0]), int(xs[-1])
                values = []
                for q in range(lo, hi + 1):
                    v = self(q)
                    if v.denominator != 1:
                        break
                    values.append(int(v))
                else:
                    data = _MarkovData(lo, values)
            object.__setattr__(self, "_markov", data)
        return self._markov or None

    def transition_matrix(self) -> list[list[int]]:
        """0/1 matrix over unit intervals: entry (i, j) is 1 iff the image of
        the i-th unit interval contains the j-th.  Requires integer anchors
        with integer values at every integer point."""
        md = self._markov_data()
        if md is None:
            raise NotMarkovError(
                "transition matrix needs integer anchor coordinates and integer "
                "values at every integer of the domain"
            )
        return [row[:] for row in md.A]

    # -- solution counting --------------------------------------------------

    def _check_sign_domain(self, sign: int) -> None:
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if sign == -1 and not (self._xs[0] <= 0 <= self._xs[-1]):
            raise DomainError("f^k(x) = -x needs 0 inside the domain")

    def _resolve_method(self, k: int, method: str) -> str:
        if method == "pieces":
            return "pieces"
        md = self._markov_data()
        usable = md is not None and md.counting_ok
        if method == "markov":
            if not usable:
                raise NotMarkovError(
                    "transition-matrix counting needs an integer Markov map "
                    "with nonzero slope on every unit interval"
                )
            return "markov"
        if method != "auto":
            raise ValueError("method must be 'auto', 'pieces', or 'markov'")
        if usable and md.total_walks(k) > AUTO_PIECE_THRESHOLD:
            return "markov"
        return "pieces"

    def _pieces_solve(self, k: int, sign: int, max_pieces: int) -> set[Fraction]:
        sgn = Fraction(sign)
        sols: set[Fraction] = set()
        for p in self.iterate_pieces(k, max_pieces):
            # slope*x + intercept = sign*x on [lo, hi]
            if p.slope == sgn:
                if p.intercept == 0:
                    raise InfiniteSolutions(p.lo, p.hi, k, sign)
            else:
                x = p.intercept / (sgn - p.slope)
                if p.lo <= x <= p.hi:
                    sols.add(x)
        return sols

    def _markov_check_finite(self, md: _MarkovData, k: int, sign: int) -> None:
        """Detect words on which f^k equals sign*x identically: closed (or
        mirror-closed) walks staying in unit intervals of slope +-1 whose
        slope product is sign."""
        unit = [j for j in range(md.n) if abs(md.slopes[j]) == 1]
        if not unit:
            return
        A = md.A
        for j0 in unit:
            target = md.target(j0, sign)
            if target is None:
                continue
            frontier = {(j0, 1)}
            for _ in range(k):
                nxt = set()
                for j, prod in frontier:
                    if abs(md.slopes[j]) != 1:
                        continue
                    prod2 = prod * md.slopes[j]
                    row = A[j]
                    for j2 in range(md.n):
                        if row[j2]:
                            nxt.add((j2, prod2))
                frontier = nxt
                if not frontier:
                    break
            if (target, sign) in frontier:
                lo = Fraction(md.lo + j0)
                raise InfiniteSolutions(lo, lo + 1, k, sign)

    def _int_solutions(self, md: _MarkovData, k: int, sign: int) -> list[int]:
        out = []
        for p in range(md.lo, md.lo + md.n + 1):
            q = p
            for _ in range(k):
                q = md.f_int(q)
            if q == sign * p:
                out.append(p)
        return out

    def _walks_containing(self, md: _MarkovData, p: int, k: int, sign: int) -> int:
        """Number of admissible length-k words whose closed piece contains the
        integer point p and whose diagonal solution is p itself."""
        layers = []
        q = p
        for _ in range(k):
            layers.append(md.nbr(q))
            q = md.f_int(q)
        A = md.A
        count = 0
        for j0 in layers[0]:
            target = md.target(j0, sign)
            if target is None:
                continue
            cur = {j0: 1}
            for layer in layers[1:]:
                nxt: dict[int, int] = {}
                for j, c in cur.items():
                    row = A[j]
                    for j2 in layer:
                        if row[j2]:
                            nxt[j2] = nxt.get(j2, 0) + c
                cur = nxt
                if not cur:
                    break
            count += sum(c for j, c in cur.items() if A[j][target])
        return count

    def _markov_count(self, md: _MarkovData, k: int, sign: int) -> int:
        self._markov_check_finite(md, k, sign)
        Ak = md.power(k)
        total = 0
        for j in range(md.n):
            target = md.target(j, sign)
            if target is not None:
                total += Ak[j][target]
        ints = self._int_solutions(md, k, sign)
        overlap = sum(self._walks_containing(md, p, k, sign) for p in ints)
        return total - overlap + len(ints)

    def _markov_enumerate(self, md: _MarkovData, k: int, sign: int) -> set[Fraction]:
        self._markov_check_finite(md, k, sign)
        sols = {Fraction(p) for p in self._int_solutions(md, k, sign)}
        A, slopes, intercepts, n = md.A, md.slopes, md.intercepts, md.n
        for j0 in range(n):
            target = md.target(j0, sign)
            if target is None:
                continue
            # DFS over words (j0, ..., j_{k-1}) carrying the composite x -> s*x + t
            stack = [(j0, slopes[j0], intercepts[j0], 1)]
            while stack:
                j, s, t, depth = stack.pop()
                if depth == k:
                    if A[j][target]:
                        # the finite check above rules out s == sign here
                        x = Fraction(t, sign - s)
                        if x.denominator != 1:
                            sols.add(x)
                    continue
                row = A[j]
                for j2 in range(n):
                    if row[j2]:
                        stack.append((j2, slopes[j2] * s, slopes[j2] * t + intercepts[j2], depth + 1))
        return sols

    def count_solutions(
        self,
        k: int,
        sign: int = 1,
        method: str = "auto",
        max_pieces: int = DEFAULT_MAX_PIECES,
    ) -> int:
        """Number of distinct x in the domain with f^k(x) = sign*x.

        Solutions on shared piece endpoints are counted once.  Raises
        InfiniteSolutions (with a witness interval) when the equation holds
        identically on a piece, and PieceLimitError when the ``pieces``
        engine would exceed ``max_pieces``.
        """
        if k < 1:
            raise ValueError("k must be >= 1")
        self._check_sign_domain(sign)
        if self._resolve_method(k, method) == "markov":
            return self._markov_count(self._markov_data(), k, sign)
        return len(self._pieces_solve(k, sign, max_pieces))

    def solution_set(
        self,
        k: int,
        sign: int = 1,
        method: str = "auto",
        max_pieces: int = DEFAULT_MAX_PIECES,
    ) -> SolutionSet:
        """The exact, sorted, deduplicated solution set of f^k(x) = sign*x."""
        if k < 1:
            raise ValueError("k must be >= 1")
        self._check_sign_domain(sign)
        if self._resolve_method(k, method) == "markov":
            sols = self._markov_enumerate(self._markov_data(), k, sign)
        else:
            sols = self._pieces_solve(k, sign, max_pieces)
        return SolutionSet(tuple(sorted(sols)))

    def count_sequence(
        self,
        K: int,
        sign: int = 1,
        method: str = "auto",
        max_pieces: int = DEFAULT_MAX_PIECES,
    ) -> list[int]:
        """[count_solutions(k) for k = 1..K]; the matrix powers are shared."""
        return [self.count_solutions(k, sign, method, max_pieces) for k in range(1, K + 1)]
