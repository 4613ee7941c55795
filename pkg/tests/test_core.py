from itertools import combinations, product as iproduct

import pytest
from hypothesis import given, settings, strategies as st

from combhomotopy.core import (Complex, DirectedComplex, as_truncated, build_space, circle,
                               codiscrete, coequalizer, collapsed_sphere, dir_circle,
                               dir_line_window, dir_two_skeleton, discrete, enumerate_maps,
                               find_isomorphism, identity_map, is_map, line_window, membership,
                               parse_spec, point, product, projections, pushout, reflect_u,
                               simplex_dir, sym_forget, tol_of, two_skeleton, vertex_inclusion,
                               wedge)
from combhomotopy.core.truncated import TruncMap, TruncSymSet, truncated_from_json
from combhomotopy.errors import InputError


def nondegenerate_pairs(space):
    return sorted((space.src[e], space.dst[e]) for e in space.edges())


def brute_linked_pairs(cx):
    return sorted((a, b) for a in range(cx.n_vertices) for b in range(cx.n_vertices)
                  if a != b and cx.is_linked({a, b}))


# -- membership -----------------------------------------------------------------

def test_membership_examples():
    assert membership(codiscrete(2), {0, 1, 2})
    assert not membership(circle(3), {0, 1, 2})
    assert membership(dir_line_window(0, 3), (1, 1, 2))
    assert not membership(dir_line_window(0, 3), (2, 1))


def test_membership_rejects_unknown_vertex():
    with pytest.raises(InputError):
        membership(circle(3), {0, 7})


@st.composite
def complexes(draw, max_vertices=6):
    n = draw(st.integers(1, max_vertices))
    facets = draw(st.lists(st.sets(st.integers(0, n - 1), min_size=1, max_size=3), max_size=6))
    return Complex(n, facets)


@given(complexes(), st.data())
def test_membership_is_downward_closed(cx, data):
    f = sorted(data.draw(st.sampled_from(cx.facets)))
    sub = data.draw(st.sets(st.sampled_from(f)))
    assert cx.is_linked(sub)


@st.composite
def directed_complexes(draw):
    n = draw(st.integers(1, 5))
    gens = draw(st.lists(st.lists(st.integers(0, n - 1), min_size=1, max_size=4), max_size=4))
    return DirectedComplex(n, gens)


@given(directed_complexes(), st.data())
def test_directed_membership_closed_under_omit_and_repeat(dc, data):
    g = list(data.draw(st.sampled_from(dc.generators)))
    keep = [x for x in g if data.draw(st.booleans())] or g[:1]
    doubled = [y for x in keep for y in [x] * data.draw(st.integers(1, 3))]
    assert dc.is_linked(doubled)


# -- truncation -----------------------------------------------------------------

def test_two_skeleton_of_codiscrete_two():
    x = two_skeleton(codiscrete(2))
    assert x.n_vertices == 3
    assert len(x.edges()) == 6
    corners = {frozenset((x.src[a], x.dst[a], x.dst[b])) for a, b, _ in x.triangles}
    assert corners == {frozenset({0, 1, 2})}


def test_two_skeleton_of_circle_five_matches_pair_scan():
    cx = circle(5)
    x = two_skeleton(cx)
    assert nondegenerate_pairs(x) == brute_linked_pairs(cx)
    assert len(x.edges()) == 10
    assert not any(cx.is_linked(set(t)) for t in combinations(range(5), 3))
    assert x.triangles == ()


def test_two_skeleton_of_line_window():
    x = two_skeleton(line_window(0, 2))
    assert nondegenerate_pairs(x) == [(0, 1), (1, 0), (1, 2), (2, 1)]
    assert x.triangles == ()


def test_dir_two_skeleton_examples():
    s = dir_two_skeleton(simplex_dir(2))
    assert nondegenerate_pairs(s) == [(0, 1), (0, 2), (1, 2)]
    assert len(s.triangles) == 1
    a, b, c = s.triangles[0]
    assert (s.src[a], s.dst[a], s.dst[b], s.dst[c]) == (0, 1, 2, 2)
    c3 = dir_two_skeleton(dir_circle(3))
    assert nondegenerate_pairs(c3) == [(0, 1), (1, 2), (2, 0)]
    assert c3.triangles == ()
    assert dir_two_skeleton(dir_line_window(0, 2)).triangles == ()


def test_reflect_u_examples():
    assert reflect_u(two_skeleton(codiscrete(2))) == codiscrete(2)
    assert reflect_u(circle(2)).facets == (frozenset({0, 1}),)
    assert reflect_u(circle(1)).facets == (frozenset({0}),)


@given(complexes())
def test_reflector_retracts_the_embedding(cx):
    assert reflect_u(two_skeleton(cx)) == cx


def test_tol_of_examples():
    assert tol_of(codiscrete(2)).edges == {frozenset(p) for p in combinations(range(3), 2)}
    assert tol_of(circle(4)).edges == {frozenset({v, (v + 1) % 4}) for v in range(4)}
    assert tol_of(discrete(3)).edges == frozenset()


def test_sym_forget_examples():
    assert sym_forget(simplex_dir(2)) == codiscrete(2)
    assert sym_forget(dir_line_window(0, 5)) == line_window(0, 5)
    for k in range(3, 9):
        assert sym_forget(dir_circle(k)) == circle(k)


# -- named spaces -------------------------------------------------------------------

def test_small_circles_are_truncated_sets():
    c2 = circle(2)
    assert isinstance(c2, TruncSymSet)
    assert c2.n_vertices == 2 and len(c2.edges()) == 4 and c2.triangles == ()
    c1 = circle(1)
    assert c1.n_vertices == 1 and len(c1.edges()) == 2 and c1.triangles == ()


def test_collapsed_sphere_two_two_has_pyramids():
    cs = collapsed_sphere(2, 2)
    assert cs.n_vertices == 5
    # inner 2x2 grid is one linked square; each boundary pair of it spans a triangle with the base
    assert cs.is_linked({1, 2, 3, 4})
    for a, b in ((1, 2), (1, 3), (2, 4), (3, 4)):
        assert cs.is_linked({0, a, b})
    assert not cs.is_linked({0, 1, 4})


@pytest.mark.parametrize("text", ["circle:0", "nope:3", "circle:x", "csphere:3:2", "wedge(circle:3)"])
def test_bad_specs_are_input_errors(text):
    with pytest.raises(InputError):
        build_space(text)


def test_parse_spec_round_trip():
    for text in ("circle:3", "csphere:2:2", "wedge(circle:3,circle:3)", "line:-1:2"):
        assert str(parse_spec(text)) == text


# -- products ---------------------------------------------------------------------

def test_product_of_intervals_is_a_square():
    sq = product(line_window(0, 1), line_window(0, 1))
    assert sq.facets == (frozenset(range(4)),)


def test_product_with_a_point_is_the_space():
    pt = Complex(1, [{0}])
    assert product(circle(4), pt) == circle(4)


def test_directed_square_links_componentwise_chains():
    i = dir_line_window(0, 1)
    sq = product(i, i)
    pr1, pr2 = projections(i, i)
    for n in (2, 3):
        for word in iproduct(range(4), repeat=n):
            expect = i.is_linked([pr1[v] for v in word]) and i.is_linked([pr2[v] for v in word])
            assert sq.is_linked(word) == expect


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([line_window(0, 1), circle(3), codiscrete(1)]),
       st.sampled_from([line_window(0, 2), discrete(2), codiscrete(1)]),
       st.sampled_from([line_window(0, 1), discrete(1), circle(3)]))
def test_product_universal_property(x, y, test):
    p = product(x, y)
    pr1, pr2 = projections(x, y)
    assert is_map(p, x, pr1) and is_map(p, y, pr2)
    for f in list(enumerate_maps(test, x))[:4]:
        for g in list(enumerate_maps(test, y))[:4]:
            mediating = [h for h in enumerate_maps(test, p)
                         if [pr1[v] for v in h] == list(f) and [pr2[v] for v in h] == list(g)]
            assert len(mediating) == 1


# -- colimits -----------------------------------------------------------------------

def elementary_interval():
    return two_skeleton(line_window(0, 1))


def endpoints_span():
    iv = elementary_interval()
    ends = two_skeleton(discrete(2))
    f = TruncMap.from_vertex_map(ends, iv, [0, 1])
    return f, f


def test_pasting_two_intervals_gives_two_point_circle():
    f, g = endpoints_span()
    glued = pushout(f, g).obj
    assert find_isomorphism(glued, circle(2)) is not None


def test_coequalizer_of_faces_gives_one_point_circle():
    iv = elementary_interval()
    out = coequalizer(vertex_inclusion(iv, 0), vertex_inclusion(iv, 1)).obj
    assert find_isomorphism(out, circle(1)) is not None


def test_directed_coequalizer_of_faces_gives_directed_circle():
    for k in (3, 4):
        win = dir_two_skeleton(dir_line_window(0, k))
        out = coequalizer(vertex_inclusion(win, 0), vertex_inclusion(win, k)).obj
        assert find_isomorphism(out, dir_two_skeleton(dir_circle(k))) is not None


def test_trivial_colimits():
    y = two_skeleton(circle(4))
    assert find_isomorphism(pushout(identity_map(y), identity_map(y)).obj, y) is not None
    f = vertex_inclusion(y, 2)
    assert find_isomorphism(coequalizer(f, f).obj, y) is not None


def test_wedge_of_two_triangles_identifies_one_vertex():
    w = wedge(circle(3), circle(3))
    assert w.n_vertices == 5
    assert len(w.edges()) == 12


def test_pushout_legs_commute():
    f, g = endpoints_span()
    col = pushout(f, g)
    left, right = col.legs
    assert [left.vmap[v] for v in f.vmap] == [right.vmap[v] for v in g.vmap]
    assert [left.emap[e] for e in f.emap] == [right.emap[e] for e in g.emap]


def test_pushout_rejects_maps_from_different_sources():
    y = two_skeleton(circle(3))
    with pytest.raises(InputError):
        pushout(vertex_inclusion(y, 0), identity_map(y))


def test_truncated_json_round_trip():
    for spec in ("circle:1", "circle:2", "csphere:2:2", "dcircle:3", "simplex:2"):
        x = as_truncated(build_space(spec))
        assert truncated_from_json(x.to_json()).to_json() == x.to_json()


def test_point_has_one_vertex():
    assert point().n_vertices == 1 and point(False).n_edges == 1


@pytest.mark.parametrize("target", ["circle:3", "codiscrete:1", "circle:2"])
def test_pushout_universal_property(target):
    from combhomotopy.core import enumerate_truncated_maps
    t = as_truncated(build_space(target))
    f, g = endpoints_span()
    col = pushout(f, g)
    left, right = col.legs
    cocones = 0
    for u in enumerate_truncated_maps(f.target, t):
        for v in enumerate_truncated_maps(g.target, t):
            if f.then(u) != g.then(v):
                continue
            cocones += 1
            mediating = [h for h in enumerate_truncated_maps(col.obj, t)
                         if left.then(h) == u and right.then(h) == v]
            assert len(mediating) == 1
    assert cocones > 0
