import random
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minitri.complexes import SimplicialComplex, from_facets
from minitri.errors import (
    FacetInputError,
    MissingSimplexError,
    VertexSetError,
)
from minitri import facetio, fixtures

from oracles import random_complex


def test_facets_form_an_antichain():
    K = from_facets([(1, 2, 3), (2, 3), (3,), (4, 5)])
    assert K.facets == ((1, 2, 3), (4, 5))
    assert K.dimension == 2
    assert K.n_vertices == 5


def test_facet_order_within_simplex_is_canonical():
    K = from_facets([(3, 1, 2)])
    L = from_facets([(1, 2, 3)])
    assert K == L
    assert K.facets == ((3, 1, 2),) or K.facets == ((1, 2, 3),)


def test_duplicate_vertex_rejected():
    with pytest.raises(FacetInputError):
        from_facets([(1, 1, 2)])


def test_empty_complex_convention():
    # the empty complex is never built from a facet list; it shows up as
    # a link of a facet or an induced subcomplex on no vertices
    with pytest.raises(FacetInputError):
        from_facets([()])
    K = fixtures.rp2_6()
    E = K.full_subcomplex(())
    assert E.dimension == -1
    assert E.n_vertices == 0
    assert E.facets == ((),)
    assert K.link(K.facets[0]) == E


def test_faces_counts_boundary_simplex():
    # every proper subset of the d+2 vertices is a face
    d = 4
    K = fixtures.boundary_simplex(d)
    for i in range(d + 1):
        assert len(K.faces(i)) == comb(d + 2, i + 1)


def test_f_vector_fixtures():
    assert fixtures.boundary_simplex(2).f_vector() == (4, 6, 4)
    assert fixtures.cross_polytope(2).f_vector() == (6, 12, 8)
    assert fixtures.cross_polytope(3).f_vector() == (8, 24, 32, 16)
    assert fixtures.rp2_6().f_vector() == (6, 15, 10)
    assert fixtures.torus_7().f_vector() == (7, 21, 14)
    assert fixtures.cp2_9().f_vector() == (9, 36, 84, 90, 36)
    assert fixtures.cyclic_polytope(9, 4).f_vector() == (9, 36, 54, 27)


def test_has_simplex_ignores_order():
    K = fixtures.rp2_6()
    assert K.has_simplex((4, 2, 1)) == K.has_simplex((1, 2, 4))
    assert K.has_simplex(())
    assert not K.has_simplex((1, 99))


def test_all_simplices_count_matches_f_vector():
    K = fixtures.rp2_6()
    fv = K.f_vector()
    sims = K.all_simplices()
    assert len(sims) == sum(fv)
    assert len(K.all_simplices(include_empty=True)) == sum(fv) + 1


def test_link_of_vertex_in_octahedron():
    K = fixtures.cross_polytope(2)
    v = K.vertices[0]
    lk = K.link((v,))
    # equatorial square
    assert lk.dimension == 1
    assert lk.n_vertices == 4
    assert len(lk.facets) == 4


def test_link_missing_simplex_raises():
    K = fixtures.rp2_6()
    with pytest.raises(MissingSimplexError):
        K.link((1, 99))


def test_link_of_empty_simplex_is_whole_complex():
    K = fixtures.rp2_6()
    assert K.link(()) == K


def test_star_contains_link_join_simplex():
    K = fixtures.cross_polytope(3)  # 3-sphere, 16 facets
    s = K.faces(1)[0]
    star = K.star(s)
    lk = K.link(s)
    for f in lk.facets:
        assert star.has_simplex(tuple(s) + f)


def test_join_with_point_is_cone():
    K = fixtures.boundary_simplex(2)
    C = K.join(from_facets([(99,)]))
    assert C.dimension == K.dimension + 1
    assert C.n_vertices == K.n_vertices + 1
    assert len(C.facets) == len(K.facets)


def test_join_homotopy_boundary():
    # join of two circle complexes multiplies facet counts
    A = fixtures.boundary_simplex(1)
    B = from_facets([(10, 11), (11, 12), (10, 12)])
    J = A.join(B)
    assert len(J.facets) == len(A.facets) * len(B.facets)
    assert J.dimension == 3


def test_join_rejects_shared_labels():
    K = from_facets([(1, 2)])
    with pytest.raises(VertexSetError):
        K.join(from_facets([(2, 3)]))


def test_empty_complex_is_join_neutral():
    K = fixtures.rp2_6()
    E = K.full_subcomplex(())
    assert K.join(E) == K
    assert E.join(K) == K


def test_full_subcomplex_is_induced():
    K = fixtures.rp2_6()
    V = (1, 2, 3, 4)
    L = K.full_subcomplex(V)
    for f in L.facets:
        assert set(f) <= set(V)
        assert K.has_simplex(f)
    # induced: any K-simplex inside V must appear in L
    for i in range(K.dimension + 1):
        for s in K.faces(i):
            if set(s) <= set(V):
                assert L.has_simplex(s)


def test_full_subcomplex_bad_vertex():
    K = fixtures.rp2_6()
    with pytest.raises(VertexSetError):
        K.full_subcomplex((1, 99))


def test_incremental_law_matches_direct():
    # adding one vertex to an induced subcomplex, two ways
    rng = random.Random(12021)
    for _ in range(200):
        K = random_complex(rng)
        verts = list(K.vertices)
        if len(verts) < 2:
            continue
        size = rng.randint(1, len(verts) - 1)
        V = rng.sample(verts, size)
        v = rng.choice([u for u in verts if u not in V])
        direct = K.full_subcomplex(tuple(V) + (v,))
        stepped = K.incremental_full_subcomplex(tuple(V), v)
        assert direct == stepped
        assert direct.facets == stepped.facets


def test_open_star_support_partitions_facets():
    # every facet either meets V or lies in the complement subcomplex
    rng = random.Random(77)
    for _ in range(50):
        K = random_complex(rng)
        verts = list(K.vertices)
        size = rng.randint(0, len(verts))
        V = tuple(rng.sample(verts, size))
        inside = K.open_star_support(V)
        rest = set(verts) - set(V)
        for f in K.facets:
            if set(f) & set(V):
                assert f in inside
            else:
                assert set(f) <= rest


def test_pseudomanifold_fixtures():
    for K in (
        fixtures.boundary_simplex(3),
        fixtures.cross_polytope(4),
        fixtures.rp2_6(),
        fixtures.torus_7(),
        fixtures.cp2_9(),
        fixtures.cyclic_polytope(8, 4),
    ):
        assert K.is_closed_pseudomanifold().is_closed_pseudomanifold

    # a 3-sphere with one extra facet glued on a free ridge
    broken = from_facets(
        [
            (1, 2, 3, 4),
            (1, 2, 3, 5),
            (1, 2, 4, 5),
            (1, 3, 4, 5),
            (2, 3, 4, 5),
            (1, 2, 3, 6),
        ]
    )
    rep = broken.is_closed_pseudomanifold()
    assert not rep.is_closed_pseudomanifold
    assert not rep.ridge_degree_two


def test_orientability():
    assert fixtures.boundary_simplex(4).is_orientable()
    assert fixtures.cross_polytope(3).is_orientable()
    assert fixtures.torus_7().is_orientable()
    assert fixtures.cp2_9().is_orientable()
    assert not fixtures.rp2_6().is_orientable()


def test_connectedness():
    assert fixtures.rp2_6().is_connected()
    assert not from_facets([(1, 2), (3, 4)]).is_connected()


def test_relabeling_preserves_structure():
    rng = random.Random(31)
    K = fixtures.rp2_6()
    names = "abcdef"
    relabel = dict(zip(K.vertices, names))
    L = from_facets([tuple(relabel[v] for v in f) for f in K.facets])
    assert L.f_vector() == K.f_vector()
    assert L.is_closed_pseudomanifold().is_closed_pseudomanifold
    assert L.is_orientable() == K.is_orientable()
    lkK = K.link((1,))
    lkL = L.link((relabel[1],))
    assert lkK.f_vector() == lkL.f_vector()


@settings(max_examples=80, deadline=None)
@given(st.integers(min_value=0, max_value=2**32 - 1))
def test_incremental_law_property(seed):
    rng = random.Random(seed)
    K = random_complex(rng)
    verts = list(K.vertices)
    if len(verts) < 2:
        return
    size = rng.randint(1, len(verts) - 1)
    V = rng.sample(verts, size)
    v = rng.choice([u for u in verts if u not in V])
    assert (
        K.full_subcomplex(tuple(V) + (v,)).facets
        == K.incremental_full_subcomplex(tuple(V), v).facets
    )


def test_facet_file_round_trip():
    for K in (fixtures.rp2_6(), fixtures.cyclic_polytope(7, 4), fixtures.cross_polytope(2)):
        assert facetio.loads(facetio.dumps(K)) == K


def test_facet_file_line_numbers():
    with pytest.raises(FacetInputError, match="line 2"):
        facetio.loads("1 2 3\n4 4 5\n")


def test_assertions_parse():
    d = facetio.parse_assertions("pi1 = not-free\n# comment\nsimply-connected=true\n")
    assert d == {"pi1": "not-free", "simply-connected": "true"}
    with pytest.raises(FacetInputError, match="line 1"):
        facetio.parse_assertions("just-a-word\n")
