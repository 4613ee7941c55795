from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import assume, given, settings, strategies as st

from combhomotopy.core import as_truncated, build_space, circle, two_skeleton
from combhomotopy.core.spaces import Complex
from combhomotopy.errors import InputError
from combhomotopy.fundamental import (AbelianInvariants, CosetLimitExceeded,
                                      GroupoidPresentation, GroupPresentation, WordProblem,
                                      abelianization, brute_force_classes, canonical_relator,
                                      cyclic_reduce, edge_path_groupoid, enumerate_cosets,
                                      free_reduce, fundamental_category, group_order,
                                      groupoid_hom_count, hom_count, invariants_of_rows, pi0,
                                      pi_monoid, presentation_count, smith_diagonal, substitute,
                                      tietze_reduce, tietze_simplify, vertex_group,
                                      vertex_group_data)

from oracles import complex_h1, truncated_h1


def space(spec):
    return as_truncated(build_space(spec))


def group_of(spec, base=0):
    return vertex_group(edge_path_groupoid(space(spec)), base)


# -- words ------------------------------------------------------------------------------

def test_word_reductions():
    assert free_reduce((1, 2, -2, -1, 3)) == (3,)
    assert cyclic_reduce((-1, 2, 3, 1)) == (2, 3)
    assert canonical_relator((2, 1)) == canonical_relator((1, 2)) == canonical_relator((-2, -1))
    assert substitute((1, -2), [(3, 3), (1,)]) == (3, 3, -1)


# -- Smith form ---------------------------------------------------------------------

def det(m):
    m = [[Fraction(x) for x in row] for row in m]
    n, sign, out = len(m), 1, Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c]), None)
        if p is None:
            return 0
        if p != c:
            m[c], m[p] = m[p], m[c]
            sign = -sign
        out *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return int(sign * out)


def determinantal_divisors(m):
    """gcd of all k x k minors, for k = 1.. until it vanishes."""
    from math import gcd
    rows, cols = len(m), len(m[0])
    out = []
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for rs in combinations(range(rows), k):
            for cs in combinations(range(cols), k):
                g = gcd(g, det([[m[r][c] for c in cs] for r in rs]))
        if g == 0:
            break
        out.append(g)
    return out


def test_smith_examples():
    assert smith_diagonal([[2, 4], [6, 8]]) == [2, 4]
    assert smith_diagonal([[0, 0], [0, 0]]) == []
    assert smith_diagonal([[2, 0], [0, 3]]) == [1, 6]


small_matrices = st.integers(1, 4).flatmap(lambda r: st.integers(1, 4).flatmap(
    lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c),
                       min_size=r, max_size=r)))


@settings(max_examples=150)
@given(small_matrices)
def test_smith_diagonal_matches_minor_gcds(m):
    diag = smith_diagonal(m)
    divisors = determinantal_divisors(m)
    assert len(diag) == len(divisors)
    prod = 1
    for d, want in zip(diag, divisors):
        prod *= d
        assert prod == want
    assert all(b % a == 0 for a, b in zip(diag, diag[1:]))


@settings(max_examples=100)
@given(small_matrices)
def test_sparse_and_dense_invariants_agree(m):
    n = len(m[0])
    sparse = invariants_of_rows(n, [{c: v for c, v in enumerate(r)} for r in m])
    diag = smith_diagonal(m)
    assert sparse == AbelianInvariants(n - len(diag), tuple(d for d in diag if d > 1))


def test_abelianization_examples():
    assert abelianization(GroupPresentation(2, [(1, 2, -1, -2)])) == AbelianInvariants(2)
    assert abelianization(GroupPresentation(1, [(1,) * 6])) == AbelianInvariants(0, (6,))
    assert abelianization(GroupPresentation(2, [(1, 1), (2, 2, 2)])) == AbelianInvariants(0, (6,))
    assert str(AbelianInvariants(2, (2,))) == "Z^2 + Z/2"
    assert str(AbelianInvariants(0)) == "0"


# -- Todd-Coxeter ------------------------------------------------------------------

presentations = st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.lists(st.integers(1, n).flatmap(lambda g: st.sampled_from([g, -g])),
                      min_size=1, max_size=5), max_size=4)))


S3 = GroupPresentation(2, [(1, 1), (2, 2, 2), (1, 2, 1, 2)])
Q8 = GroupPresentation(2, [(1,) * 4, (1, 1, -2, -2), (-2, 1, 2, 1)])


@pytest.mark.parametrize("p, order", [
    (GroupPresentation(1, [(1,) * 5]), 5),
    (S3, 6),
    (GroupPresentation(2, [(1, 1), (2, 2), (1, 2, -1, -2)]), 4),
    (Q8, 8),
    (GroupPresentation(0), 1),
])
def test_group_orders(p, order):
    assert group_order(p) == order


@settings(max_examples=80, deadline=None)
@given(presentations)
def test_abelian_group_orders_match_invariants(data):
    n, rels = data
    commutators = [(a, b, -a, -b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    p = GroupPresentation(n, [tuple(r) for r in rels] + commutators)
    inv = abelianization(p)
    expected = None
    if inv.rank == 0:
        expected = 1
        for t in inv.torsion:
            expected *= t
    assume(expected is None or expected <= 200)
    assert group_order(p, limit=3000) == expected


def test_unreduced_relators():
    assert group_order(GroupPresentation(3, [(1,), (-3, 1, 2), (2, 2, -2, 3)])) == 2


def test_infinite_group_hits_the_limit():
    assert group_order(GroupPresentation(1), limit=200) is None
    with pytest.raises(CosetLimitExceeded):
        enumerate_cosets(GroupPresentation(2, [(1, 2, -1, -2)]), limit=100)


def test_subgroup_index():
    assert len(enumerate_cosets(S3, subgroup=[(1,)]).table) == 3


def test_word_problem_in_s3():
    wp = WordProblem(S3)
    assert wp.solved
    assert wp.normal_form((1, 2, 1)) == wp.normal_form((-2,))
    assert wp.normal_form((2,)) != wp.normal_form((-2,))


def test_word_problem_in_free_group_uses_free_reduction():
    wp = WordProblem(GroupPresentation(2))
    assert wp.solved
    assert wp.normal_form((1, 2, -2)) == wp.normal_form((1,))


# -- Tietze ---------------------------------------------------------------------------

def test_tietze_examples():
    assert tietze_simplify(GroupPresentation(2, [(1, 2), (1,)])).is_trivial_presentation()
    assert tietze_simplify(GroupPresentation(3, [(1, -2), (2, -3)])).n_generators == 1


def test_tietze_keeps_finite_groups():
    for p in (S3, Q8):
        small = tietze_simplify(p)
        assert group_order(small) == group_order(p)


@settings(max_examples=80, deadline=None)
@given(presentations)
def test_tietze_preserves_abelianization_and_images(data):
    n, rels = data
    p = GroupPresentation(n, [tuple(r) for r in rels])
    result = tietze_reduce(p)
    assert abelianization(result.presentation) == abelianization(p)
    # original relators map to the identity of the simplified group
    small = result.presentation
    order = group_order(small, limit=2000)
    assume(order is not None)
    wp = WordProblem(small, coset_limit=2000)
    for r in p.relators:
        assert wp.normal_form(result.translate(r)) == wp.normal_form(())
    assert order == group_order(p, limit=5000)


# -- presentations of spaces -----------------------------------------------------------

def test_edge_path_groupoid_of_small_spaces():
    p = edge_path_groupoid(space("circle:3"))
    assert len(p.generators) == 3 and p.relations == ()
    q = edge_path_groupoid(space("codiscrete:2"))
    assert len(q.generators) == 3 and len(q.relations) >= 1
    c1 = edge_path_groupoid(space("circle:1"))
    assert c1.generators == ((0, 0),)


def test_fundamental_category_of_simplex():
    p = fundamental_category(space("simplex:2"))
    assert p.generators == ((0, 1), (0, 2), (1, 2))
    assert len(p.relations) == 1


def test_presentation_rejects_bad_relations():
    with pytest.raises(InputError):
        GroupoidPresentation(2, [(0, 1)], [((1,), ())])


@pytest.mark.parametrize("spec, components", [
    ("discrete:3", 3), ("circle:4", 1), ("line:0:3", 1), ("csphere:2:2", 1), ("dcircle:3", 1),
])
def test_pi0(spec, components):
    assert len(pi0(build_space(spec))) == components
    assert len(pi0(space(spec))) == components


@pytest.mark.parametrize("spec", ["circle:1", "circle:2", "circle:3", "circle:5", "circle:8",
                                  "csphere:1:2", "csphere:1:3", "csphere:2:2", "csphere:2:3",
                                  "codiscrete:3", "line:0:4", "wedge(circle:3,circle:3)",
                                  "wedge(circle:2,circle:4)"])
def test_abelian_rank_matches_chain_homology(spec):
    x = space(spec)
    _, b1 = truncated_h1(x)
    _, b1_mod2 = truncated_h1(x, 2)
    inv = abelianization(group_of(spec))
    assert inv.rank == b1
    assert any(t % 2 == 0 for t in inv.torsion) == (b1_mod2 > b1)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 6).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.sets(st.integers(0, n - 1), min_size=2, max_size=3), max_size=7))))
def test_vertex_groups_of_random_complexes(data):
    n, facets = data
    cx = Complex(n, facets)
    comps, b1 = complex_h1(n, cx.facets)
    x = two_skeleton(cx)
    p = edge_path_groupoid(x)
    blocks = pi0(x)
    assert len(blocks) == comps
    assert sum(abelianization(vertex_group(p, b[0])).rank for b in blocks) == b1


def test_vertex_group_data_translates_loops():
    x = space("circle:4")
    data = vertex_group_data(edge_path_groupoid(x), 0)
    assert data.component == (0, 1, 2, 3)
    loop = tuple(edge_path_groupoid(x).edge_words[x.edge_between(v, (v + 1) % 4)][0]
                 for v in range(4))
    assert len(data.element(loop)) == 1


# -- hom counts ---------------------------------------------------------------------

@pytest.mark.parametrize("n", range(0, 5))
def test_directed_simplex_hom_counts(n):
    p = fundamental_category(space(f"simplex:{n}"))
    for i in range(n + 1):
        for j in range(n + 1):
            h = hom_count(p, i, j, max(n, 1))
            assert h.saturated
            assert h.count == (1 if i <= j else 0)


@pytest.mark.parametrize("length", [3, 6, 9])
def test_directed_circle_loop_counts(length):
    p = fundamental_category(space("dcircle:3"))
    h = hom_count(p, 0, 0, length)
    assert h.count == length // 3 + 1
    assert h.exact and not h.saturated


def test_directed_circle_monoid_is_truncated_naturals():
    table = pi_monoid(space("dcircle:3"), 0, 9)
    k = len(table.elements)
    assert [len(w) // 3 for w in table.elements] == list(range(k))
    for i in range(k):
        for j in range(k):
            assert table.table[i][j] == (i + j if i + j < k else None)


def test_groupoid_count_on_triangle():
    x = space("circle:3")
    assert groupoid_hom_count(edge_path_groupoid(x), 0, 0, 6).count == 5
    assert brute_force_classes(x, 0, 0, 6).count == 5


def test_hom_count_budget():
    from combhomotopy.fundamental import BudgetExceeded
    with pytest.raises(BudgetExceeded):
        hom_count(fundamental_category(space("dcsphere:2:2")), 0, 0, 8, budget=50)


@pytest.mark.parametrize("spec", ["circle:2", "circle:4", "codiscrete:2", "line:0:2",
                                  "dcircle:2", "simplex:3", "dline:0:3", "csphere:1:2"])
def test_oracle_agrees_where_both_settle(spec):
    x = space(spec)
    checked = 0
    for bound in (1, 2, 3):
        for a in range(x.n_vertices):
            for b in range(x.n_vertices):
                brute = brute_force_classes(x, a, b, bound)
                count, exact = presentation_count(x, a, b, bound)
                if brute.saturated and exact:
                    assert brute.count == count
                    checked += 1
    assert checked


def test_oracle_rejects_bad_vertices():
    with pytest.raises(InputError):
        brute_force_classes(space("circle:3"), 0, 5, 2)
