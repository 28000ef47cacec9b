"""Combinatoriality certificates plus low-dimension sphere recognizers.

The certificate sweeps links by codimension.  Links of dimension 1 and 2
go to direct recognizers; higher links must be integer homology spheres
and must fit a 3k vertex budget, k the link dimension.  For d >= 3 the
sweep ends at the empty simplex, whose link is the complex itself: the
same budget applied there means a CERTIFIED complex that is also a
homology sphere is a PL-sphere outright, which is what
``alexander_duality_check`` relies on.

Size violations and homology violations are kept apart on purpose.  An
oversized link only exits the hypothesis of the certification criterion
(INCONCLUSIVE); a link with wrong homology cannot sit inside any
manifold triangulation (REJECTED).
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .complexes import SimplicialComplex, from_facets
from .errors import DimensionError, HypothesisError, NotPseudomanifoldError
from .homology import homology


def recognize_circle(K: SimplicialComplex) -> bool:
    """True iff K is a triangulated circle: connected, every vertex degree 2."""
    if K.dimension != 1:
        raise DimensionError(f"circle recognition needs dimension 1, got {K.dimension}")
    degree = dict.fromkeys(K.vertices, 0)
    for f in K.facets:
        if len(f) != 2:
            return False
        degree[f[0]] += 1
        degree[f[1]] += 1
    return all(c == 2 for c in degree.values()) and K.is_connected()


def recognize_2sphere(K: SimplicialComplex) -> bool:
    """True iff K is a triangulated 2-sphere.

    Closed pseudomanifold, connected, all vertex links circles, Euler
    characteristic 2.  These conditions characterize S^2 exactly.
    """
    if K.dimension != 2:
        raise DimensionError(f"2-sphere recognition needs dimension 2, got {K.dimension}")
    if not K.is_closed_pseudomanifold().is_closed_pseudomanifold:
        return False
    if not K.is_connected():
        return False
    for v in K.vertices:
        lk = K.link((v,))
        if lk.dimension != 1 or not recognize_circle(lk):
            return False
    f0, f1, f2 = K.f_vector()
    return f0 - f1 + f2 == 2


@dataclass(frozen=True)
class LevelSummary:
    """One codimension level of the certificate sweep."""

    sphere_dim: int
    simplices_checked: int
    max_link_vertices: int
    allowed_vertices: Optional[int]
    size_violations: int
    rejections: int
    method: str

    def as_dict(self):
        return {
            "sphere_dim": self.sphere_dim,
            "simplices_checked": self.simplices_checked,
            "max_link_vertices": self.max_link_vertices,
            "allowed_vertices": self.allowed_vertices,
            "size_violations": self.size_violations,
            "rejections": self.rejections,
            "method": self.method,
        }


@dataclass(frozen=True)
class CombinatorialityCertificate:
    verdict: str  # CERTIFIED | INCONCLUSIVE | REJECTED
    dimension: int
    levels: tuple
    witness: Optional[tuple]
    witness_reason: Optional[str]
    pl_sphere: bool

    def as_dict(self):
        return {
            "verdict": self.verdict,
            "dimension": self.dimension,
            "levels": [lv.as_dict() for lv in self.levels],
            "witness": list(self.witness) if self.witness is not None else None,
            "witness_reason": self.witness_reason,
            "pl_sphere": self.pl_sphere,
        }


def _level_simplices(K, k):
    # Simplices whose link should be a k-sphere; the empty simplex for k = dim.
    if k == K.dimension:
        return ((),)
    return K.faces(K.dimension - k - 1)


def small_link_certificate(K: SimplicialComplex, threads: int = 1) -> CombinatorialityCertificate:
    """Certify combinatoriality by checking that every link is a small sphere.

    Levels run over link dimension k = 1 .. d.  k <= 2 links go to the
    recognizers and any failure is a REJECTED verdict (such a link cannot
    occur in a manifold).  k >= 3 links must be Z-homology k-spheres
    (REJECTED otherwise) on at most 3k vertices (INCONCLUSIVE otherwise).
    The k = d level is the complex itself; only its size budget counts
    toward the verdict, and passing it together with the homology-sphere
    test upgrades a CERTIFIED complex to a certified PL-sphere.
    """
    report = K.is_closed_pseudomanifold()
    if not report.is_closed_pseudomanifold:
        raise NotPseudomanifoldError("certification needs a closed pseudomanifold")
    d = K.dimension

    levels = []
    first_rejection = None
    first_size = None
    top_is_homology_sphere = False
    top_size_ok = True

    for k in range(1, d + 1):
        whole_complex = k == d
        simplices = _level_simplices(K, k)
        if whole_complex and d < 3:
            # Dimension 1 and 2 need no top-level budget: closed
            # pseudomanifolds there are certified by their links alone.
            prof = homology(K, reduced=True)
            top_is_homology_sphere = prof.is_sphere(d)
            continue
        links = [(s, K if whole_complex else K.link(s)) for s in simplices]
        size_hits = []
        reject_hits = []
        max_seen = 0
        allowed = 3 * k if (k >= 3 or whole_complex) else None

        if k == 1:
            method = "circle recognizer"
            for s, lk in links:
                max_seen = max(max_seen, lk.n_vertices)
                if lk.dimension != 1 or not recognize_circle(lk):
                    reject_hits.append((s, "link is not a circle"))
        elif k == 2:
            method = "2-sphere recognizer"
            for s, lk in links:
                max_seen = max(max_seen, lk.n_vertices)
                if lk.dimension != 2 or not recognize_2sphere(lk):
                    reject_hits.append((s, "link is not a 2-sphere"))
        else:
            method = "homology k-sphere + 3k vertex budget"

            def check(item):
                s, lk = item
                if lk.dimension != k:
                    return s, lk.n_vertices, False, False
                prof = homology(lk, reduced=True)
                return s, lk.n_vertices, prof.is_sphere(k), True

            if threads > 1 and len(links) > 1:
                with ThreadPoolExecutor(max_workers=threads) as pool:
                    results = list(pool.map(check, links))
            else:
                results = [check(item) for item in links]
            for s, nv, sphere_ok, dim_ok in results:
                max_seen = max(max_seen, nv)
                if nv > allowed:
                    size_hits.append((s, f"link has {nv} vertices, budget {allowed}"))
                if whole_complex:
                    top_is_homology_sphere = sphere_ok
                elif not (dim_ok and sphere_ok):
                    reject_hits.append((s, f"link is not a homology {k}-sphere"))

        if whole_complex:
            top_size_ok = not size_hits
        levels.append(
            LevelSummary(
                sphere_dim=k,
                simplices_checked=len(links),
                max_link_vertices=max_seen,
                allowed_vertices=allowed,
                size_violations=len(size_hits),
                rejections=len(reject_hits),
                method=method if not whole_complex else "whole complex: 3d vertex budget",
            )
        )
        if reject_hits and first_rejection is None:
            first_rejection = reject_hits[0]
        if size_hits and first_size is None:
            first_size = size_hits[0]

    if first_rejection is not None:
        witness, reason = first_rejection
        verdict = "REJECTED"
    elif first_size is not None:
        witness, reason = first_size
        verdict = "INCONCLUSIVE"
    else:
        witness, reason = None, None
        verdict = "CERTIFIED"

    pl_sphere = verdict == "CERTIFIED" and top_is_homology_sphere and top_size_ok
    cert = CombinatorialityCertificate(
        verdict=verdict,
        dimension=d,
        levels=tuple(levels),
        witness=witness,
        witness_reason=reason,
        pl_sphere=pl_sphere,
    )
    return cert


def certified_sphere(K: SimplicialComplex) -> bool:
    """True when the certificate proves K is a PL-sphere; cached per complex."""
    try:
        return K._cache["pl_sphere"]
    except KeyError:
        pass
    try:
        flag = small_link_certificate(K).pl_sphere
    except NotPseudomanifoldError:
        flag = False
    K._cache["pl_sphere"] = flag
    return flag


# -- bistellar flips -------------------------------------------------------


@dataclass(frozen=True)
class BistellarMove:
    """Replace face * boundary(cofacet) by boundary(face) * cofacet."""

    face: tuple
    cofacet: tuple

    def as_dict(self):
        return {"face": list(self.face), "cofacet": list(self.cofacet)}


@dataclass(frozen=True)
class BistellarResult:
    success: bool
    moves: tuple
    restarts_used: int
    final_facets: tuple
    detail: str

    def as_dict(self):
        return {
            "success": self.success,
            "moves": [m.as_dict() for m in self.moves],
            "restarts_used": self.restarts_used,
            "detail": self.detail,
        }


def _is_simplex_boundary(L: SimplicialComplex) -> bool:
    # Boundary of the simplex on its vertex set: n facets of size n-1.
    n = L.n_vertices
    facets = L.facets
    return len(facets) == n and all(len(f) == n - 1 for f in facets)


def bistellar_moves(K: SimplicialComplex):
    """All legal flips: faces whose link is the boundary of a missing simplex.

    Moves that would introduce a fresh vertex label are not generated;
    the search only ever shrinks or reshuffles the vertex set.
    """
    d = K.dimension
    out = []
    for fdim in range(d):
        for s in K.faces(fdim):
            lk = K.link(s)
            if not _is_simplex_boundary(lk):
                continue
            w = lk.vertices
            if K.has_simplex(w):
                continue
            sset = set(s)
            wset = set(w)
            # Defensive: a replacement facet already present would make
            # the flip collapse two facets into one.
            if any(K.has_simplex(tuple((sset - {x}) | wset)) for x in s):
                continue
            out.append(BistellarMove(face=s, cofacet=w))
    return out


def apply_bistellar_move(K: SimplicialComplex, move: BistellarMove) -> SimplicialComplex:
    """Carry out one flip, returning the new complex."""
    s = set(move.face)
    w = set(move.cofacet)
    if not K.has_simplex(move.face):
        raise HypothesisError(f"move face {move.face!r} is not a simplex")
    if K.has_simplex(move.cofacet):
        raise HypothesisError(f"move cofacet {move.cofacet!r} is already a simplex")
    kept = [f for f in K.facets if not s <= set(f)]
    by_id = K._id_of.get
    added = [tuple(sorted((s - {x}) | w, key=by_id)) for x in s]
    return from_facets(kept + added)


def _is_boundary_of_simplex_complex(K: SimplicialComplex) -> bool:
    n = K.n_vertices
    if n != K.dimension + 2:
        return False
    want = {tuple(sorted(c)) for c in combinations(K.vertices, n - 1)}
    return {tuple(sorted(f)) for f in K.facets} == want


def _move_score(move):
    # (vertex delta, facet delta): vertex removals first, then moves that
    # shrink the facet count; ties broken lexicographically for determinism.
    dv = -1 if len(move.face) == 1 else 0
    df = len(move.face) - len(move.cofacet)
    return dv, df


def bistellar_sphere_heuristic(
    K: SimplicialComplex,
    move_budget: int = 300,
    seed: int = 0,
    restarts: int = 10,
) -> BistellarResult:
    """Try to flip K down to the boundary of a simplex.

    Success is a proof that K is a PL-sphere, since every move preserves
    the PL type.  Exhaustion of the budget proves nothing.  Greedy on
    (vertex count, facet count) with seeded random plateau steps and
    deterministic restarts.
    """
    if not K.is_closed_pseudomanifold().is_closed_pseudomanifold:
        raise NotPseudomanifoldError("bistellar search needs a closed pseudomanifold")
    prof = homology(K, reduced=True)
    if not prof.is_sphere(K.dimension):
        raise HypothesisError("bistellar search needs sphere homology")

    for r in range(restarts):
        rng = random.Random((seed << 16) ^ r)
        current = K
        applied = []
        last = None
        for _ in range(move_budget):
            if _is_boundary_of_simplex_complex(current):
                return BistellarResult(
                    success=True,
                    moves=tuple(applied),
                    restarts_used=r + 1,
                    final_facets=current.facets,
                    detail=f"reduced to the boundary simplex in {len(applied)} moves",
                )
            moves = bistellar_moves(current)
            if last is not None and len(moves) > 1:
                undo = BistellarMove(face=last.cofacet, cofacet=last.face)
                moves = [m for m in moves if m != undo]
            if not moves:
                break
            best = min(moves, key=lambda m: (_move_score(m), m.face, m.cofacet))
            if _move_score(best) < (0, 0):
                pick = best
            else:
                pick = rng.choice(moves)
            current = apply_bistellar_move(current, pick)
            applied.append(pick)
            last = pick
        if _is_boundary_of_simplex_complex(current):
            return BistellarResult(
                success=True,
                moves=tuple(applied),
                restarts_used=r + 1,
                final_facets=current.facets,
                detail=f"reduced to the boundary simplex in {len(applied)} moves",
            )
    return BistellarResult(
        success=False,
        moves=(),
        restarts_used=restarts,
        final_facets=K.facets,
        detail="move budget exhausted without reaching the boundary simplex",
    )
