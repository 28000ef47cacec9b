"""Built-in complexes used as test beds and CLI starting points.

Parametric families are generated on demand; the small named surfaces
are frozen facet lists that were derived by exhaustive search and
verified against their homology, orientability, and pseudomanifold
invariants.  The 9-vertex complex projective plane ships as a data
file; see ``data/cp2_9.facets``.
"""

from __future__ import annotations

import itertools
from importlib import resources

from .complexes import SimplicialComplex, from_facets
from .errors import FixtureError

# 6-vertex projective plane: the lexicographically least labelling that
# contains the facet (1,2,4).  Every edge on {1..6} is present and the
# complement of each facet spans an empty triangle.
RP2_6_FACETS = (
    (1, 2, 3),
    (1, 2, 4),
    (1, 3, 5),
    (1, 4, 6),
    (1, 5, 6),
    (2, 3, 6),
    (2, 4, 5),
    (2, 5, 6),
    (3, 4, 5),
    (3, 4, 6),
)


def boundary_simplex(d: int) -> SimplicialComplex:
    """Boundary of the (d+1)-simplex: the minimal triangulation of S^d."""
    if d < 0:
        raise FixtureError("boundary_simplex needs d >= 0")
    verts = range(d + 2)
    return from_facets(itertools.combinations(verts, d + 1))


def cross_polytope(d: int) -> SimplicialComplex:
    """Boundary of the (d+1)-dimensional cross polytope, a d-sphere.

    Vertices 2i and 2i+1 are antipodal; the 2^(d+1) facets pick one
    vertex from each pair.  d = 2 is the octahedron.
    """
    if d < 0:
        raise FixtureError("cross_polytope needs d >= 0")
    pairs = [(2 * i, 2 * i + 1) for i in range(d + 1)]
    return from_facets(itertools.product(*pairs))


def cyclic_polytope(n: int, d: int) -> SimplicialComplex:
    """Boundary complex of the cyclic polytope C(n, d), a (d-1)-sphere.

    Facets are the d-subsets S of {0..n-1} passing Gale's evenness
    condition: between any two vertices outside S there is an even
    number of members of S.
    """
    if d < 2:
        raise FixtureError("cyclic_polytope needs d >= 2")
    if n < d + 1:
        raise FixtureError("cyclic_polytope needs n >= d + 1")
    verts = range(n)
    facets = []
    for S in itertools.combinations(verts, d):
        inside = set(S)
        ok = True
        outside = [v for v in verts if v not in inside]
        for a, b in itertools.combinations(outside, 2):
            between = sum(1 for v in S if a < v < b)
            if between % 2:
                ok = False
                break
        if ok:
            facets.append(S)
    return from_facets(facets)


def rp2_6() -> SimplicialComplex:
    """The 6-vertex projective plane."""
    return from_facets(RP2_6_FACETS)


def torus_7() -> SimplicialComplex:
    """The 7-vertex torus: orbits of {1,2,4} and {1,3,4} under i -> i+1 mod 7."""
    facets = []
    for i in range(7):
        facets.append(tuple(sorted((i % 7 + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1))))
        facets.append(tuple(sorted((i % 7 + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1))))
    return from_facets(sorted(facets))


def cp2_9() -> SimplicialComplex:
    """The 9-vertex complex projective plane, loaded from the data file."""
    from . import facetio

    text = resources.files(__package__).joinpath("data/cp2_9.facets").read_text("utf-8")
    return facetio.loads(text)


_REGISTRY = {
    "boundary_simplex": (boundary_simplex, ("d",)),
    "cross_polytope": (cross_polytope, ("d",)),
    "cyclic_polytope": (cyclic_polytope, ("n", "d")),
    "rp2_6": (rp2_6, ()),
    "torus_7": (torus_7, ()),
    "cp2_9": (cp2_9, ()),
}


def fixture_names():
    return tuple(sorted(_REGISTRY))


def fixture(name: str, **params) -> SimplicialComplex:
    """Look up a fixture by name, e.g. fixture('cross_polytope', d=3)."""
    try:
        fn, wanted = _REGISTRY[name]
    except KeyError:
        raise FixtureError(
            f"unknown fixture {name!r}; available: {', '.join(fixture_names())}"
        ) from None
    missing = [k for k in wanted if k not in params]
    extra = [k for k in params if k not in wanted]
    if missing or extra:
        raise FixtureError(
            f"fixture {name!r} takes parameters {wanted}, got {tuple(params)}"
        )
    return fn(**params)
