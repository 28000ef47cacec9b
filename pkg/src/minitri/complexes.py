"""Facet-based immutable simplicial complexes.

A complex is described by the antichain of its maximal faces (facets).
Vertex labels are arbitrary hashable values, in practice ints or
strings; they are mapped to dense integer ids in order of first
appearance, and all public output is translated back to labels.  A
simplex appears in the public API as a tuple of labels, internally as a
tuple of strictly increasing ids.  Face enumeration is sorted
lexicographically by id tuple, which makes every derived quantity
deterministic for a fixed input order.

The empty complex is representable: it has no vertices, its only face
is the empty simplex, and its dimension is -1.  It arises as the full
subcomplex on an empty vertex set and as the link of a facet, and it
behaves as the neutral element for joins.  Constructing it directly
through ``from_facets`` is rejected, since an empty facet file is far
more often a mistake than a request for the empty complex.

Instances are immutable; derived data (skeleta, pseudomanifold reports,
homology profiles) is memoized on the instance.  Mutation of a cached
value never happens after it is stored, so sharing instances between
threads is safe under CPython's memory model: the worst case is
recomputing an identical value twice.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    DimensionError,
    FacetInputError,
    MissingSimplexError,
    NotPseudomanifoldError,
    VertexSetError,
)

# Public simplices are tuples of vertex labels.
Simplex = tuple


def _antichain(id_facets):
    """Reduce a family of id tuples to its maximal elements.

    Input tuples must be sorted.  Output is lexicographically sorted and
    duplicate free.  The empty tuple survives only if it is the sole
    member, matching the convention for the empty complex.
    """
    unique = sorted(set(id_facets), key=lambda f: (-len(f), f))
    kept = []
    kept_sets = []
    for f in unique:
        fs = frozenset(f)
        if any(fs <= k for k in kept_sets):
            continue
        kept.append(f)
        kept_sets.append(fs)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class PseudomanifoldReport:
    """Outcome of the closed-pseudomanifold check, one flag per condition."""

    dimension: int
    pure: bool
    ridge_degree_two: bool
    strongly_connected: bool

    @property
    def is_closed_pseudomanifold(self) -> bool:
        return self.pure and self.ridge_degree_two and self.strongly_connected

    def as_dict(self):
        return {
            "dimension": self.dimension,
            "pure": self.pure,
            "ridge_degree_two": self.ridge_degree_two,
            "strongly_connected": self.strongly_connected,
            "is_closed_pseudomanifold": self.is_closed_pseudomanifold,
        }


class SimplicialComplex:
    """Immutable simplicial complex, constructed via :func:`from_facets`."""

    __slots__ = ("labels", "dimension", "_id_of", "_id_facets", "_facet_sets", "_cache")

    def __init__(self, labels, id_facets):
        # Trusted constructor: labels is a tuple, id_facets a sorted
        # antichain of sorted id tuples ( ((),) encodes the empty complex ).
        self.labels = labels
        self._id_of = {lab: i for i, lab in enumerate(labels)}
        self._id_facets = id_facets
        self._facet_sets = tuple(frozenset(f) for f in id_facets)
        self.dimension = max((len(f) - 1 for f in id_facets), default=-1)
        self._cache = {}

    # -- basic accessors -------------------------------------------------

    @property
    def vertices(self):
        """Vertex labels in id order (first appearance order)."""
        return self.labels

    @property
    def n_vertices(self) -> int:
        return len(self.labels)

    @property
    def facets(self):
        """Facets as label tuples, sorted by id tuple."""
        try:
            return self._cache["facets"]
        except KeyError:
            out = tuple(self._to_labels(f) for f in self._id_facets)
            self._cache["facets"] = out
            return out

    def _to_labels(self, sids):
        return tuple(self.labels[i] for i in sids)

    def _simplex_ids(self, simplex, error_cls=MissingSimplexError):
        ids = []
        for lab in simplex:
            i = self._id_of.get(lab)
            if i is None:
                raise error_cls(f"vertex {lab!r} is not in the complex")
            ids.append(i)
        t = tuple(sorted(ids))
        if len(set(t)) != len(t):
            raise error_cls(f"repeated vertex in simplex {tuple(simplex)!r}")
        return t

    def _vertex_ids(self, vertex_set):
        ids = set()
        for lab in vertex_set:
            i = self._id_of.get(lab)
            if i is None:
                raise VertexSetError(f"vertex {lab!r} is not in the complex")
            ids.add(i)
        return ids

    def _ifaces(self, i):
        """All i-faces as sorted id tuples, lexicographically sorted."""
        key = ("ifaces", i)
        try:
            return self._cache[key]
        except KeyError:
            pass
        if i == -1:
            out = ((),)
        else:
            seen = set()
            for f in self._id_facets:
                if len(f) >= i + 1:
                    seen.update(itertools.combinations(f, i + 1))
            out = tuple(sorted(seen))
        self._cache[key] = out
        return out

    def faces(self, i):
        """Every i-face exactly once, as label tuples in id order.

        i = -1 yields the empty simplex.  Out-of-range dimensions raise
        DimensionError rather than returning an empty list, so a typo in
        the dimension argument fails loudly.
        """
        if not -1 <= i <= self.dimension:
            raise DimensionError(
                f"face dimension {i} out of range for a {self.dimension}-complex"
            )
        return tuple(self._to_labels(f) for f in self._ifaces(i))

    def f_vector(self):
        """(f_0, ..., f_dim); the empty complex has the empty f-vector."""
        return tuple(len(self._ifaces(i)) for i in range(self.dimension + 1))

    def has_simplex(self, simplex) -> bool:
        try:
            sids = self._simplex_ids(simplex)
        except MissingSimplexError:
            return False
        fs = frozenset(sids)
        return any(fs <= f for f in self._facet_sets)

    def all_simplices(self, include_empty=False):
        """Every face of the complex as a label tuple."""
        out = [()] if include_empty else []
        for i in range(self.dimension + 1):
            out.extend(self.faces(i))
        return tuple(out)

    # -- derived complexes -----------------------------------------------

    def _child(self, id_facets):
        """Build a subquotient complex from parent-id facets, inheriting labels."""
        reduced = _antichain(id_facets) if id_facets else ((),)
        used = sorted({v for f in reduced for v in f})
        labels = tuple(self.labels[v] for v in used)
        remap = {v: j for j, v in enumerate(used)}
        child_facets = tuple(sorted(tuple(remap[v] for v in f) for f in reduced))
        if not child_facets:
            child_facets = ((),)
        return SimplicialComplex(labels, child_facets)

    def _facets_containing(self, sids):
        fs = frozenset(sids)
        return [f for f, s in zip(self._id_facets, self._facet_sets) if fs <= s]

    def link(self, simplex):
        """The link of a face: all tau with tau ∩ sigma = ∅, tau ∪ sigma ∈ K.

        The link of a facet is the empty complex; the link of the empty
        simplex is the complex itself.
        """
        sids = self._simplex_ids(simplex)
        cofacets = self._facets_containing(sids)
        if not cofacets:
            raise MissingSimplexError(f"{tuple(simplex)!r} is not a face")
        s = set(sids)
        return self._child([tuple(v for v in f if v not in s) for f in cofacets])

    def star(self, simplex):
        """The closed star: subcomplex generated by every facet containing sigma."""
        sids = self._simplex_ids(simplex)
        cofacets = self._facets_containing(sids)
        if not cofacets:
            raise MissingSimplexError(f"{tuple(simplex)!r} is not a face")
        return self._child(cofacets)

    def open_star_support(self, vertex_set):
        """The set of faces meeting the given vertices.

        This is the combinatorial support of the union of open stars; it
        is not a subcomplex.  Together with the faces of the full
        subcomplex on the complementary vertices it partitions the
        nonempty faces of the complex.
        """
        vids = self._vertex_ids(vertex_set)
        out = set()
        for i in range(self.dimension + 1):
            for f in self._ifaces(i):
                if any(v in vids for v in f):
                    out.add(self._to_labels(f))
        return out

    def full_subcomplex(self, vertex_set):
        """All faces whose vertices lie inside the given vertex set."""
        vids = self._vertex_ids(vertex_set)
        return self._child([tuple(v for v in f if v in vids) for f in self._id_facets])

    def incremental_full_subcomplex(self, vertex_set, vertex):
        """Full subcomplex on V ∪ {v}, grown from the one on V.

        Computed as K(V) ∪ v * (lk(v) ∩ K(V)) rather than by filtering
        facets directly, so it exercises the incremental growth law; the
        result is facet-identical to ``full_subcomplex(V ∪ {v})``.
        """
        vids = self._vertex_ids(vertex_set)
        wid = self._id_of.get(vertex)
        if wid is None:
            raise VertexSetError(f"vertex {vertex!r} is not in the complex")
        if wid in vids:
            raise VertexSetError(f"vertex {vertex!r} is already in the vertex set")
        base = self.full_subcomplex(self._to_labels(sorted(vids)))
        lk = self.link((vertex,))
        meet = _intersect_label_facets(lk, base)
        cone = [(vertex,) + f for f in meet]
        combined = list(base.facets) + cone
        return _from_label_facets(combined, self.labels)

    def join(self, other):
        """Simplicial join; label sets must be disjoint.

        The empty complex is the neutral element.  Facet-wise unions of
        two antichains on disjoint vertex sets are again an antichain.
        """
        overlap = set(self.labels) & set(other.labels)
        if overlap:
            raise VertexSetError(f"join operands share vertex labels: {sorted(map(repr, overlap))}")
        facets = [
            f + g
            for f in self.facets
            for g in other.facets
        ]
        return _from_label_facets(facets, self.labels + other.labels)

    # -- global structure -------------------------------------------------

    def is_connected(self) -> bool:
        """Connectivity through shared vertices (equivalently, edge paths)."""
        try:
            return self._cache["connected"]
        except KeyError:
            pass
        n = self.n_vertices
        if n == 0:
            out = True
        else:
            parent = list(range(n))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for f in self._id_facets:
                for a, b in zip(f, f[1:]):
                    ra, rb = find(a), find(b)
                    if ra != rb:
                        parent[ra] = rb
            out = len({find(v) for v in range(n)}) == 1
        self._cache["connected"] = out
        return out

    def is_closed_pseudomanifold(self) -> PseudomanifoldReport:
        """Check purity, ridge degree 2, and strong connectivity.

        Results are reported, not raised: callers that require a closed
        pseudomanifold inspect the report.  Requires dimension >= 1.
        """
        try:
            return self._cache["pm_report"]
        except KeyError:
            pass
        d = self.dimension
        if d < 1:
            raise DimensionError("pseudomanifold check needs a complex of dimension >= 1")
        top = [f for f in self._id_facets if len(f) == d + 1]
        pure = len(top) == len(self._id_facets)

        # Count, for every (d-1)-face of the complex, the top facets above
        # it; a ridge inside no top facet (pendant lower facet) counts 0.
        ridge_to_facets = {r: [] for r in self._ifaces(d - 1)}
        for idx, f in enumerate(top):
            for ridge in itertools.combinations(f, d):
                ridge_to_facets[ridge].append(idx)
        ridge_ok = all(len(v) == 2 for v in ridge_to_facets.values())

        # Strong connectivity: walk the ridge-adjacency graph of top facets.
        strongly_connected = False
        if top:
            adj = {i: set() for i in range(len(top))}
            for members in ridge_to_facets.values():
                for a, b in itertools.combinations(members, 2):
                    adj[a].add(b)
                    adj[b].add(a)
            seen = {0}
            stack = [0]
            while stack:
                cur = stack.pop()
                for nxt in adj[cur]:
                    if nxt not in seen:
                        seen.add(nxt)
                        stack.append(nxt)
            strongly_connected = len(seen) == len(top)

        report = PseudomanifoldReport(
            dimension=d,
            pure=pure,
            ridge_degree_two=ridge_ok,
            strongly_connected=strongly_connected,
        )
        self._cache["pm_report"] = report
        return report

    def is_orientable(self) -> bool:
        """Coherent orientation propagation over the facet adjacency graph.

        Only defined for closed pseudomanifolds.  Success means every
        ridge receives opposite induced orientations from its two facets.
        """
        try:
            return self._cache["orientable"]
        except KeyError:
            pass
        report = self.is_closed_pseudomanifold()
        if not report.is_closed_pseudomanifold:
            raise NotPseudomanifoldError("orientability needs a closed pseudomanifold")
        d = self.dimension
        facets = self._id_facets
        ridge_to_facets = {}
        for idx, f in enumerate(facets):
            for j in range(d + 1):
                ridge = f[:j] + f[j + 1 :]
                # (-1)^j is the sign of the ridge inside the sorted facet.
                ridge_to_facets.setdefault(ridge, []).append((idx, -1 if j % 2 else 1))
        orientation = {0: 1}
        stack = [0]
        ok = True
        while stack and ok:
            cur = stack.pop()
            f = facets[cur]
            for j in range(d + 1):
                ridge = f[:j] + f[j + 1 :]
                pair = ridge_to_facets[ridge]
                for other, sign_other in pair:
                    if other == cur:
                        continue
                    sign_cur = -1 if j % 2 else 1
                    needed = -orientation[cur] * sign_cur * sign_other
                    if other in orientation:
                        if orientation[other] != needed:
                            ok = False
                            break
                    else:
                        orientation[other] = needed
                        stack.append(other)
                if not ok:
                    break
        self._cache["orientable"] = ok
        return ok

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._label_facet_key() == other._label_facet_key()

    def __hash__(self):
        return hash(self._label_facet_key())

    def _label_facet_key(self):
        try:
            return self._cache["facet_key"]
        except KeyError:
            key = frozenset(frozenset(f) for f in self.facets)
            self._cache["facet_key"] = key
            return key

    def __repr__(self):
        return f"SimplicialComplex(dim={self.dimension}, f={self.f_vector()})"


def from_facets(facets):
    """Build a complex from an iterable of facets (iterables of labels).

    Non-maximal and duplicate entries are dropped.  Vertex ids are
    assigned by first appearance, scanning facets in input order.
    """
    facet_list = [tuple(f) for f in facets]
    if not facet_list:
        raise FacetInputError("empty facet list does not describe a complex")
    id_of = {}
    id_facets = []
    for f in facet_list:
        if not f:
            raise FacetInputError("empty facet")
        ids = []
        for lab in f:
            if lab not in id_of:
                id_of[lab] = len(id_of)
            ids.append(id_of[lab])
        t = tuple(sorted(ids))
        if len(set(t)) != len(t):
            raise FacetInputError(f"facet {f!r} repeats a vertex")
        id_facets.append(t)
    labels = tuple(sorted(id_of, key=id_of.get))
    return SimplicialComplex(labels, _antichain(id_facets))


def _from_label_facets(label_facets, label_order):
    """Internal: complex from label facets, ids following ``label_order``.

    Accepts the empty facet (used by complexes derived from the empty
    complex); plain empty input yields the empty complex.
    """
    order = {lab: i for i, lab in enumerate(label_order)}
    id_facets = []
    for f in label_facets:
        id_facets.append(tuple(sorted(order[lab] for lab in f)))
    reduced = _antichain(id_facets) if id_facets else ((),)
    used = sorted({v for f in reduced for v in f})
    labels = tuple(label_order[v] for v in used)
    remap = {v: j for j, v in enumerate(used)}
    out_facets = tuple(sorted(tuple(remap[v] for v in f) for f in reduced))
    if not out_facets:
        out_facets = ((),)
    return SimplicialComplex(labels, out_facets)


def _intersect_label_facets(a, b):
    """Facets of the intersection of two subcomplexes of a common parent.

    Every common face lies in some pairwise intersection of facets, so
    the antichain of those intersections generates the meet.  Returned
    as label tuples (possibly the lone empty tuple), ordered by the
    first operand's vertex order.
    """
    meets = {frozenset(f) & frozenset(g) for f in a.facets for g in b.facets}
    kept = []
    for s in sorted(meets, key=len, reverse=True):
        if not any(s <= k for k in kept):
            kept.append(s)
    order = {lab: i for i, lab in enumerate(a.labels)}
    out = [tuple(sorted(s, key=order.get)) for s in kept]
    out.sort(key=lambda t: tuple(order[x] for x in t))
    return out if out else [()]
