import pytest
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from plcensus.exactnum import Poly, charpoly
from plcensus.families import make_base_map, make_fmn, make_gn, make_hjmn, make_pn
from plcensus.plmap import (
    AffinePiece,
    DomainError,
    InfiniteSolutions,
    NotMarkovError,
    PieceLimitError,
    PLMap,
)

F = Fraction


# -- construction and evaluation ---------------------------------------------

def test_constructor_validation():
    with pytest.raises(ValueError):
        PLMap([(0, 0)])
    with pytest.raises(ValueError):
        PLMap([(0, 0), (0, 1)])  # x not strictly increasing
    with pytest.raises(ValueError):
        PLMap([(0, 5), (1, 0)])  # value leaves [0, 1]
    with pytest.raises(AttributeError):
        m = PLMap([(0, 0), (1, 1)])
        m.anchors = ()


def test_eval_examples():
    f24 = make_fmn(2, 4)
    assert f24(2) == 1
    assert f24(F(3, 2)) == 2
    for x, y in f24.anchors:
        assert f24(x) == y
    with pytest.raises(DomainError):
        f24(5)
    with pytest.raises(DomainError):
        f24(F(1, 2))


def test_eval_accepts_strings_and_ints():
    g1 = make_gn(1)
    assert g1("7/3") == F(7, 3)
    assert g1(3) == 1


# -- iterate_pieces -----------------------------------------------------------

def test_g1_pieces_k1():
    g1 = make_gn(1)
    assert g1.iterate_pieces(1) == [
        AffinePiece(F(1), F(2), F(1), F(1)),
        AffinePiece(F(2), F(3), F(-2), F(7)),
    ]


def test_g1_pieces_k2():
    pieces = g1_pieces = make_gn(1).iterate_pieces(2)
    assert len(pieces) == 3
    first = pieces[0]
    assert (first.lo, first.hi) == (F(1), F(2))
    assert (first.slope, first.intercept) == (F(-2), F(5))


def test_piece_count_at_k1_equals_lap_count():
    for m in (make_base_map(), make_gn(2), make_hjmn(3, 4, 2)):
        assert len(m.iterate_pieces(1)) == len(m.anchors) - 1


def _assert_tiling(pl_map, pieces):
    lo, hi = pl_map.domain
    assert pieces[0].lo == lo and pieces[-1].hi == hi
    for a, b in zip(pieces, pieces[1:]):
        assert a.hi == b.lo
        assert a(a.hi) == b(b.lo)  # continuity at the shared endpoint
    for p in pieces:
        assert p.lo < p.hi


def test_tiling_and_composition_soundness():
    for m in (make_base_map(), make_gn(1), make_gn(2), make_fmn(2, 5), make_pn(2)):
        for k in (1, 2, 3, 4):
            pieces = m.iterate_pieces(k)
            _assert_tiling(m, pieces)
            # evaluating the piece containing x equals k-fold eval
            for p in pieces:
                for x in (p.lo, (p.lo + p.hi) / 2, p.hi):
                    assert p(x) == m.iterate(x, k)


@given(
    ix=st.integers(0, 60),
    k=st.integers(1, 6),
    which=st.sampled_from(["base", "g2", "f25", "p3"]),
)
@settings(max_examples=60, deadline=None)
def test_composition_soundness_random_points(ix, k, which):
    m = {
        "base": make_base_map(),
        "g2": make_gn(2),
        "f25": make_fmn(2, 5),
        "p3": make_pn(3),
    }[which]
    lo, hi = m.domain
    x = lo + (hi - lo) * F(ix, 60)
    pieces = m.iterate_pieces(k)
    piece = next(p for p in pieces if p.lo <= x <= p.hi)
    assert piece(x) == m.iterate(x, k)


def test_piece_limit_guard():
    with pytest.raises(PieceLimitError):
        make_gn(1).iterate_pieces(40, max_pieces=1000)
    with pytest.raises(PieceLimitError):
        make_gn(1).count_solutions(40, method="pieces", max_pieces=1000)


# -- counting and solution sets ----------------------------------------------

def test_count_examples():
    assert make_gn(1).count_solutions(1) == 1
    assert make_base_map().count_solutions(1) == 3
    assert make_base_map().count_solutions(2) == 7
    assert make_pn(2).count_solutions(1, sign=-1) == 1


def test_solution_set_examples():
    assert make_gn(1).solution_set(1).points == (F(7, 3),)
    assert make_pn(2).solution_set(1).points == (F(-5, 4), F(0), F(5, 4))


def test_odd_map_sign_minus_contains_origin():
    for n in (2, 3, 4):
        p = make_pn(n)
        for k in (1, 2, 3):
            assert F(0) in p.solution_set(k, sign=-1).points


def test_identity_map_infinite():
    ident = PLMap([(0, 0), (1, 1)])
    with pytest.raises(InfiniteSolutions) as exc:
        ident.count_solutions(1)
    lo, hi = exc.value.witness
    assert lo < hi
    # the equation really does hold on the witness
    for x in (lo, (lo + hi) / 2, hi):
        assert ident(x) == x


def test_sign_minus_needs_zero_in_domain():
    with pytest.raises(DomainError):
        make_base_map().count_solutions(1, sign=-1)


def test_count_matches_solution_set_len():
    for m in (make_base_map(), make_gn(2), make_hjmn(4, 3, 2), make_pn(3)):
        for k in (1, 2, 3, 4):
            assert m.count_solutions(k) == len(m.solution_set(k).points)


def test_dedup_under_artificial_split():
    # adding a collinear anchor must not change any count
    for m in (make_gn(1), make_base_map(), make_pn(2)):
        anchors = list(m.anchors)
        x = (anchors[0][0] + anchors[1][0]) / 2
        split = PLMap(sorted(anchors + [(x, m(x))]))
        for k in (1, 2, 3, 4, 5):
            assert split.count_solutions(k) == m.count_solutions(k)


def test_solutions_really_solve():
    for m in (make_base_map(), make_gn(2), make_pn(3)):
        for k in (1, 2, 3):
            for x in m.solution_set(k).points:
                assert m.iterate(x, k) == x
    p3 = make_pn(3)
    for x in p3.solution_set(2, sign=-1).points:
        assert p3.iterate(x, 2) == -x


# -- engine agreement ---------------------------------------------------------

ALL_SMALL_MAPS = [
    make_base_map(),
    make_gn(1),
    make_gn(2),
    make_gn(3),
    make_fmn(2, 4),
    make_fmn(2, 5),
    make_fmn(3, 5),
    make_hjmn(3, 2, 2),
    make_hjmn(4, 4, 2),
    make_hjmn(2, 5, 2),
    make_pn(2),
    make_pn(3),
]


def test_markov_engine_equals_pieces_engine():
    for m in ALL_SMALL_MAPS:
        for k in range(1, 6):
            signs = (1, -1) if m.domain[0] < 0 else (1,)
            for sign in signs:
                try:
                    a = m.count_solutions(k, sign=sign, method="pieces")
                except InfiniteSolutions:
                    with pytest.raises(InfiniteSolutions):
                        m.count_solutions(k, sign=sign, method="markov")
                    continue
                assert a == m.count_solutions(k, sign=sign, method="markov")
                sa = m.solution_set(k, sign=sign, method="pieces").points
                sb = m.solution_set(k, sign=sign, method="markov").points
                assert sa == sb


def test_markov_engine_rejects_non_markov():
    bent = PLMap([(0, 0), (F(1, 2), 1), (1, 0)])
    with pytest.raises(NotMarkovError):
        bent.count_solutions(1, method="markov")
    # auto still works through the pieces engine
    assert bent.count_solutions(1) == 2


@given(st.data())
@settings(max_examples=80, deadline=None)
def test_markov_engine_equals_pieces_engine_random_maps(data):
    lo = data.draw(st.integers(-4, 2))
    n = data.draw(st.integers(2, 5))
    hi = lo + n
    vals = data.draw(
        st.lists(st.integers(lo, hi), min_size=n + 1, max_size=n + 1).filter(
            lambda vs: all(a != b for a, b in zip(vs, vs[1:]))
        )
    )
    m = PLMap([(lo + i, vals[i]) for i in range(n + 1)])
    k = data.draw(st.integers(1, 5))
    sign = data.draw(st.sampled_from([1, -1])) if lo <= 0 <= hi else 1
    try:
        a = m.count_solutions(k, sign=sign, method="pieces")
    except InfiniteSolutions:
        with pytest.raises(InfiniteSolutions):
            m.count_solutions(k, sign=sign, method="markov")
        return
    assert a == m.count_solutions(k, sign=sign, method="markov")
    pts = m.solution_set(k, sign=sign, method="markov").points
    assert m.solution_set(k, sign=sign, method="pieces").points == pts
    for x in pts:
        assert m.iterate(x, k) == sign * x


def test_markov_engine_asymmetric_domain_sign_minus():
    # 0 inside an asymmetric integer domain: the mirrored unit interval is
    # not simply index-reversed and may fall outside the partition
    asym = PLMap([(-1, 3), (0, -1), (1, 2), (2, 0), (3, 1)])
    for k in range(1, 6):
        for sign in (1, -1):
            a = asym.count_solutions(k, sign=sign, method="pieces")
            b = asym.count_solutions(k, sign=sign, method="markov")
            assert a == b, (k, sign, a, b)
            sa = asym.solution_set(k, sign=sign, method="pieces").points
            sb = asym.solution_set(k, sign=sign, method="markov").points
            assert sa == sb, (k, sign)


# -- transition matrix ---------------------------------------------------------

def test_transition_matrix_examples():
    assert make_gn(1).transition_matrix() == [[0, 1], [1, 1]]
    assert make_base_map().transition_matrix() == [[1, 1, 1], [1, 1, 1], [0, 1, 1]]
    # a single lap covering the whole domain gives an all-ones row
    tent = PLMap([(0, 0), (1, 2), (2, 0)])
    assert tent.transition_matrix() == [[1, 1], [1, 1]]


def test_transition_matrix_not_markov():
    with pytest.raises(NotMarkovError):
        PLMap([(0, 0), (F(1, 2), 1), (1, 0)]).transition_matrix()
    with pytest.raises(NotMarkovError):
        PLMap([(0, 1), (2, 0)]).transition_matrix()  # value 1/2 at x=1


def test_sparse_anchor_maps_are_markov():
    # collinear spans evaluate to integers at every interior integer
    assert make_fmn(3, 6).transition_matrix()
    assert make_gn(4).transition_matrix()


# -- annihilation property -----------------------------------------------------

def test_recurrence_annihilates_oracle_g1():
    # the lag-2/lag-4 recurrence annihilates the oracle counts from k = 5 on
    counts = make_gn(1).count_sequence(12)
    for k in range(5, 13):
        assert counts[k - 1] == 3 * counts[k - 3] - counts[k - 5]
    # and its characteristic polynomial factors through the minimal one
    assert Poly([-1, -1, 1]) * Poly([-1, 1, 1]) == Poly([1, 0, -3, 0, 1])
    assert charpoly(make_gn(1).transition_matrix()) == Poly([-1, -1, 1])


def test_recurrence_annihilates_oracle_base():
    counts = make_base_map().count_sequence(10)
    for k in range(3, 11):
        assert counts[k - 1] == 3 * counts[k - 2] - counts[k - 3]
    # charpoly of the transition matrix is divisible by x^2 - 3x + 1
    assert charpoly(make_base_map().transition_matrix()) == Poly([0, 1]) * Poly([1, -3, 1])
