import random

import pytest
from hypothesis import given, settings, strategies as st

from combhomotopy.core import (as_truncated, build_space, circle, codiscrete, dir_line_window,
                               line_window, two_skeleton)
from combhomotopy.core.spaces import Complex
from combhomotopy.core.truncated import TruncMap
from combhomotopy.errors import InputError, UnsupportedOperation
from combhomotopy.paths import (Delay, PathGrid, PathSeq, Support, apply_delay,
                                bounded_homotopy_reachable, caterpillar_grid, caterpillar_indices,
                                cofilter_witness, concatenate, congruent, connection_grid,
                                delay_normal_form, delay_related, immediate_homotopy, map_path,
                                regression, reverse, standard_support, strong_normal_form,
                                telescopic_stage, translate, validate_grid)

C5 = two_skeleton(circle(5))


def walk(space, vertices, base=0):
    return PathSeq.from_vertices(space, vertices, base)


def random_walk(space, rng, start=None, length=None):
    v = rng.randrange(space.n_vertices) if start is None else start
    vertices = [v]
    for _ in range(rng.randrange(0, 6) if length is None else length):
        v = rng.choice(space.out_edges[v] and [space.dst[e] for e in space.out_edges[v]] or [v])
        vertices.append(v)
    return walk(space, vertices, rng.randrange(-3, 4))


# -- supports ---------------------------------------------------------------------

def test_standard_support_examples():
    assert standard_support(PathSeq.constant(C5, 2)) == Support(0, 0)
    e1, e2 = C5.edge_between(0, 1), C5.edge_between(1, 2)
    assert standard_support(PathSeq(C5, 0, (e1, 1, e2))) == Support(0, 3)
    assert standard_support(PathSeq(C5, 0, (0, e1, 1))) == Support(1, 2)


def test_support_monoid():
    assert Support(0, 2) + Support(0, 3) == Support(0, 5)
    assert -Support(1, 4) == Support(-4, -1)
    with pytest.raises(InputError):
        Support(2, 1)


def test_path_rejects_inconsistent_edges():
    with pytest.raises(InputError):
        PathSeq(C5, 0, (C5.edge_between(2, 3),))


# -- concatenation and reversal ---------------------------------------------------------

def test_concatenation_adds_supports():
    a = walk(C5, [0, 1, 2])
    b = walk(C5, [2, 3, 4, 0])
    c = concatenate(a, b)
    assert standard_support(c) == standard_support(a) + standard_support(b)
    assert c.vertices() == [0, 1, 2, 3, 4, 0]


def test_concatenation_with_constants():
    a = walk(C5, [1, 2, 3], base=2)
    left, right = PathSeq.constant(C5, 1), PathSeq.constant(C5, 3)
    assert concatenate(left, a) == concatenate(a, right) == a.trimmed()


def test_concatenation_needs_consecutive_paths():
    with pytest.raises(InputError):
        concatenate(walk(C5, [0, 1]), walk(C5, [2, 3]))


def test_reverse_examples():
    a = walk(C5, [0, 1, 2, 3], base=1)
    assert reverse(reverse(a)) == a
    assert reverse(PathSeq.constant(C5, 3)) == PathSeq.constant(C5, 3)
    r = standard_support(a)
    assert standard_support(reverse(a)) == Support(-r.hi, -r.lo)


def test_reverse_needs_symmetric_context():
    d = as_truncated(build_space("dline:0:2"))
    with pytest.raises(UnsupportedOperation):
        reverse(walk(d, [0, 1]))


def check_involutive_laws(space, rng):
    a = random_walk(space, rng)
    b = random_walk(space, rng, start=a.end)
    c = random_walk(space, rng, start=b.end)
    assert concatenate(concatenate(a, b), c) == concatenate(a, concatenate(b, c))
    zero_l, zero_r = PathSeq.constant(space, a.start), PathSeq.constant(space, a.end)
    assert concatenate(zero_l, a) == a.trimmed() == concatenate(a, zero_r)
    assert reverse(reverse(a)) == a
    assert reverse(concatenate(a, b)) == concatenate(reverse(b), reverse(a))
    assert reverse(zero_l) == zero_l


@pytest.mark.parametrize("space", [C5, two_skeleton(codiscrete(3))], ids=["circle5", "codiscrete3"])
def test_involutive_category_laws_on_random_triples(space):
    rng = random.Random(7)
    for _ in range(200):
        check_involutive_laws(space, rng)


def test_maps_preserve_concatenation_up_to_delays():
    rng = random.Random(3)
    c3 = two_skeleton(circle(3))
    fold = TruncMap.from_vertex_map(C5, c3, [0, 1, 2, 1, 2])
    for _ in range(50):
        a = random_walk(C5, rng)
        b = random_walk(C5, rng, start=a.end)
        lhs = map_path(fold, concatenate(a, b))
        rhs = concatenate(map_path(fold, a), map_path(fold, b))
        assert congruent(lhs, rhs)


# -- delays ---------------------------------------------------------------------------

def test_elementary_delay_values():
    d = Delay.elementary(2)
    assert [d(t) for t in range(-1, 6)] == [-1, 0, 1, 2, 2, 3, 4]


@pytest.mark.parametrize("i", range(-5, 11))
def test_simplicial_identity_pointwise(i):
    for j in range(i, 11):
        lhs = Delay.elementary(i) * Delay.elementary(j + 1)
        rhs = Delay.elementary(j) * Delay.elementary(i)
        assert all(lhs(t) == rhs(t) for t in range(-12, 20))
        assert lhs == rhs


@st.composite
def delays(draw):
    lo = draw(st.integers(-4, 4))
    mult = draw(st.lists(st.integers(1, 3), min_size=1, max_size=5))
    return Delay(Support(lo, lo + len(mult) - 1), mult)


@given(delays(), delays(), delays())
def test_delay_composition_is_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(delays(), delays())
def test_cofilter_witness_equalizes(d1, d2):
    e1, e2 = cofilter_witness(d1, d2)
    assert d1 * e1 == d2 * e2


def test_cofilter_witness_examples():
    i = Delay.elementary(3)
    assert cofilter_witness(i, i) == (Delay.identity(), Delay.identity())
    e1, e2 = cofilter_witness(Delay.elementary(1), Delay.elementary(5))
    assert Delay.elementary(1) * e1 == Delay.elementary(5) * e2


def test_from_function_rejects_non_surjections():
    with pytest.raises(InputError):
        Delay.from_function(lambda t: 2 * t, 0, 3)


def test_regression_back_steps():
    g = regression(1)
    assert [g(t) for t in range(0, 5)] == [0, 1, 0, 1, 2]


# -- normal forms -----------------------------------------------------------------------

def test_delay_normal_form_examples():
    a = walk(C5, [0, 1, 2])
    assert delay_normal_form(a) == a
    assert delay_normal_form(apply_delay(a, Delay.elementary(1))) == a
    assert delay_normal_form(PathSeq.constant(C5, 4)).edges == ()


def test_apply_delay_inserts_one_hold():
    a = walk(C5, [0, 1, 2, 3])
    held = apply_delay(a, Delay.elementary(1))
    assert held.vertices()[:5] == [0, 1, 1, 2, 3]
    assert apply_delay(a, Delay.identity()).same_line(a)


def test_congruence_examples():
    a = walk(C5, [0, 1, 2])
    assert congruent(a, translate(a, 4))
    assert not congruent(walk(C5, [0, 1, 2, 3, 4, 0]), walk(C5, [0, 4, 3, 2, 1, 0]))


@settings(max_examples=60)
@given(st.integers(0, 10_000), st.lists(st.integers(-3, 6), max_size=4))
def test_delayed_paths_are_congruent(seed, holds):
    a = random_walk(C5, random.Random(seed))
    b = a
    for i in holds:
        b = apply_delay(b, Delay.elementary(i))
    assert congruent(a, b)


def test_strong_normal_form_examples():
    a = walk(C5, [0, 1, 2])
    assert strong_normal_form(concatenate(a, reverse(a))).edges == ()
    back = walk(C5, [0, 1, 2, 1, 2, 3])
    assert strong_normal_form(back) == walk(C5, [0, 1, 2, 3])
    assert strong_normal_form(a) == a


@settings(max_examples=60)
@given(st.integers(0, 10_000))
def test_strong_reduction_is_confluent(seed):
    rng = random.Random(seed)
    a = random_walk(C5, rng, length=8)
    edges = list(delay_normal_form(a).edges)
    # cancel backtracks in a random order until none is left
    while True:
        spots = [k for k in range(len(edges) - 1) if edges[k + 1] == C5.rev[edges[k]]]
        if not spots:
            break
        k = rng.choice(spots)
        del edges[k:k + 2]
    assert tuple(edges) == strong_normal_form(a).edges


# -- grids -----------------------------------------------------------------------------

LINE = line_window(0, 4)
LINE_T = two_skeleton(LINE)


def test_caterpillar_matches_its_index_table():
    a = walk(LINE_T, [0, 1, 2, 3])
    grid = caterpillar_grid(a, 1, 4)
    table = caterpillar_indices(1, 4, range(0, 6))
    assert grid.rows == tuple(tuple(a.vertex_at(x) for x in row) for row in table)
    # row t == i is a.delta_i; the last row is a.delta_j
    assert list(grid.rows[0]) == [a.vertex_at(Delay.elementary(1)(s)) for s in range(0, 6)]
    assert list(grid.rows[-1]) == [a.vertex_at(Delay.elementary(4)(s)) for s in range(0, 6)]
    assert validate_grid(grid, LINE)


def test_caterpillar_of_constant_path_is_constant():
    grid = caterpillar_grid(PathSeq.constant(LINE_T, 2), 0, 2)
    assert {v for row in grid.rows for v in row} == {2}


def test_caterpillar_precondition():
    with pytest.raises(InputError):
        caterpillar_grid(walk(LINE_T, [0, 1, 2, 3]), 0, 1)


def test_connection_grids():
    a = walk(LINE_T, [0, 1, 2, 3])
    join = connection_grid(a, "join")
    assert [join.rows[k][k] for k in range(join.width)] == a.vertices()
    assert list(join.rows[0]) == a.vertices()
    assert join.columns()[0] == tuple(a.vertices())
    assert join.transpose() == join
    assert validate_grid(join, LINE) and validate_grid(connection_grid(a, "meet"), LINE)


def test_validate_grid_detects_a_broken_corner():
    assert validate_grid(PathGrid((0, 0), [[0, 1, 2]]), LINE)
    assert not validate_grid(PathGrid((0, 0), [[0, 1], [1, 3]]), LINE)


def test_directed_grid_validation():
    d = dir_line_window(0, 3)
    assert validate_grid(PathGrid((0, 0), [[0, 0], [0, 1]]), d)
    assert not validate_grid(PathGrid((0, 0), [[1, 0], [1, 1]]), d)


def test_product_grids_are_not_congruence_pairs():
    x, y, z = 0, 1, 2
    space = Complex(3, [{x, y}, {y, z}])
    short = PathGrid((0, 0), [[x, y], [y, y], [y, z]])
    wide = PathGrid((0, 0), [[x, x, y], [y, y, y], [y, z, z]])
    assert validate_grid(short, space) and validate_grid(wide, space)
    sp = two_skeleton(space)
    for r1, r2 in zip(short.rows, wide.rows):
        assert congruent(walk(sp, list(r1)), walk(sp, list(r2)))
    assert not delay_related(short, wide, 6, 6)
    assert delay_related(wide, wide, 4, 4)


# -- homotopy relations ---------------------------------------------------------------

def test_immediate_homotopy_examples():
    for m in range(2, 6):
        win = dir_line_window(0, m)
        zero, ident = (0,) * (m + 1), tuple(range(m + 1))
        assert immediate_homotopy(win, win, ident, ident)
        assert not immediate_homotopy(win, win, zero, ident)
        for t in range(m):
            assert immediate_homotopy(win, win, telescopic_stage(m, t), telescopic_stage(m, t + 1))


@pytest.mark.parametrize("m", range(1, 6))
def test_telescopic_chain_reaches_identity(m):
    win = dir_line_window(0, m)
    zero, ident = (0,) * (m + 1), tuple(range(m + 1))
    assert bounded_homotopy_reachable(win, win, zero, ident, m) is True
    if m >= 2:
        assert bounded_homotopy_reachable(win, win, zero, ident, m - 1) is False


@pytest.mark.parametrize("m", range(1, 4))
def test_identity_never_reaches_zero(m):
    win = dir_line_window(0, m)
    zero, ident = (0,) * (m + 1), tuple(range(m + 1))
    assert bounded_homotopy_reachable(win, win, ident, zero) is False


def test_reachability_reports_unknown_on_budget():
    win = dir_line_window(0, 4)
    assert bounded_homotopy_reachable(win, win, tuple(range(5)), (0,) * 5, budget=2) is None
    assert bounded_homotopy_reachable(win, win, (0,) * 5, (0,) * 5, 0) is True


def test_homotopy_inputs_must_be_maps():
    win = dir_line_window(0, 2)
    with pytest.raises(InputError):
        immediate_homotopy(win, win, (2, 1, 0), (0, 1, 2))
