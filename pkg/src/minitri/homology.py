"""Simplicial homology and cohomology with exact integer arithmetic.

Boundary matrices follow the alternating-sum convention over sorted
vertex tuples: the column of an i-face sigma has entry (-1)^j in the
row of the face obtained by deleting sigma's j-th vertex.  Faces are
indexed in lexicographic id order, so matrices are reproducible.

Over Z, Betti numbers come from Smith normal form ranks and torsion
from the invariant factors of the next boundary map.  Over a prime
field Z_p, ranks come from Gaussian elimination mod p and there is no
torsion.  Reduced homology augments the chain complex with the empty
simplex; the empty complex then has a single reduced group Z in
dimension -1, which keeps duality bookkeeping uniform.

Cohomology is computed from transposed boundary matrices with its own
eliminations, then asserted consistent with homology via universal
coefficients; the assertion is a real cross-check because none of the
transposed reductions are shared with the homology side.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

import numpy as np

from .complexes import SimplicialComplex
from .errors import CoefficientError, DimensionError, HypothesisError, NotPseudomanifoldError
from .snf import DENSE_COLUMN_LIMIT, SparseColumns, is_prime, rank_mod_p, smith_normal_form

_COEFF_RE = re.compile(r"[Zz](?:/)?(\d+)\Z")


def parse_coeff(coeff) -> tuple:
    """Normalize a coefficient spec to ('Z', None) or ('Zp', p)."""
    if isinstance(coeff, str):
        if coeff in ("Z", "z"):
            return "Z", None
        m = _COEFF_RE.match(coeff)
        if m:
            p = int(m.group(1))
            if not is_prime(p):
                raise CoefficientError(f"Z{p} is not a field: {p} is not prime")
            return f"Z{p}", p
    raise CoefficientError(f"unknown coefficient ring {coeff!r}; use 'Z' or 'Zp' with p prime")


@dataclass(frozen=True)
class HomologyProfile:
    """Betti numbers and torsion per dimension, for one coefficient ring.

    ``groups`` lists only the nontrivial dimensions as (dim, betti,
    torsion factors); ``group(i)`` fills in (0, ()) elsewhere.  Torsion
    factors are >1 and in divisibility order.
    """

    coeff: str
    reduced: bool
    kind: str
    dimension: int
    groups: tuple

    def group(self, i) -> tuple:
        for dim, betti, torsion in self.groups:
            if dim == i:
                return betti, torsion
        return 0, ()

    def betti(self, i) -> int:
        return self.group(i)[0]

    def torsion(self, i) -> tuple:
        return self.group(i)[1]

    def is_sphere(self, k: int) -> bool:
        """True when the reduced profile is exactly that of a k-sphere.

        k = -1 means the empty complex, whose lone reduced group sits in
        dimension -1.
        """
        if not self.reduced:
            raise HypothesisError("sphere profiles are defined for reduced homology")
        return self.groups == ((k, 1, ()),)

    def is_trivial(self) -> bool:
        return self.groups == ()

    def as_dict(self):
        return {
            "coefficients": self.coeff,
            "reduced": self.reduced,
            "kind": self.kind,
            "dimension": self.dimension,
            "groups": {
                str(dim): {"betti": betti, "torsion": list(torsion)}
                for dim, betti, torsion in self.groups
            },
        }

    def describe(self, i) -> str:
        """Human-readable group, e.g. 'Z^2 + Z/2' or '0'."""
        betti, torsion = self.group(i)
        unit = "Z" if self.coeff == "Z" else self.coeff
        parts = []
        if betti == 1:
            parts.append(unit)
        elif betti > 1:
            parts.append(f"{unit}^{betti}")
        parts.extend(f"Z/{t}" for t in torsion)
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class BoundaryMatrix:
    """Boundary map from i-chains to (i-1)-chains with its face indexing."""

    i: int
    reduced: bool
    row_simplices: tuple
    col_simplices: tuple
    matrix: object  # numpy int64 array or SparseColumns

    @property
    def shape(self):
        return (len(self.row_simplices), len(self.col_simplices))


def _build_boundary(K: SimplicialComplex, i: int, reduced: bool):
    """Matrix of the boundary map at chain degree i (id-level, cached)."""
    key = ("bmatrix", i, reduced if i == 0 else False)
    try:
        return K._cache[key]
    except KeyError:
        pass
    cols = K._ifaces(i)
    if i == 0:
        if reduced:
            M = np.ones((1, len(cols)), dtype=np.int64)
        else:
            M = np.zeros((0, len(cols)), dtype=np.int64)
    else:
        rows = K._ifaces(i - 1)
        index = {s: r for r, s in enumerate(rows)}
        if len(cols) > DENSE_COLUMN_LIMIT:
            entries = []
            for c, s in enumerate(cols):
                for j in range(i + 1):
                    entries.append((index[s[:j] + s[j + 1 :]], c, -1 if j % 2 else 1))
            M = SparseColumns.from_entries((len(rows), len(cols)), entries)
        else:
            M = np.zeros((len(rows), len(cols)), dtype=np.int64)
            for c, s in enumerate(cols):
                for j in range(i + 1):
                    M[index[s[:j] + s[j + 1 :]], c] = -1 if j % 2 else 1
    K._cache[key] = M
    return M


def boundary_matrix(K: SimplicialComplex, i: int, reduced: bool = False) -> BoundaryMatrix:
    """Public boundary matrix with label-level face indexing."""
    if not 0 <= i <= max(K.dimension, 0):
        raise DimensionError(f"no boundary map at degree {i} for a {K.dimension}-complex")
    M = _build_boundary(K, i, reduced)
    if i == 0:
        rows = ((),) if reduced else ()
    else:
        rows = K.faces(i - 1)
    return BoundaryMatrix(i, reduced, rows, K.faces(i), M)


def _boundary_snf(K, i, reduced):
    key = ("bsnf", i, reduced if i == 0 else False)
    try:
        return K._cache[key]
    except KeyError:
        res = smith_normal_form(_build_boundary(K, i, reduced))
        K._cache[key] = res
        return res


def _coboundary_snf(K, i, reduced):
    key = ("cbsnf", i, reduced if i == 0 else False)
    try:
        return K._cache[key]
    except KeyError:
        M = _build_boundary(K, i, reduced)
        Mt = M.transpose() if isinstance(M, SparseColumns) else M.T
        res = smith_normal_form(Mt)
        K._cache[key] = res
        return res


def _boundary_rank_p(K, i, reduced, p, transposed=False):
    key = ("brankp", i, reduced if i == 0 else False, p, transposed)
    try:
        return K._cache[key]
    except KeyError:
        M = _build_boundary(K, i, reduced)
        if transposed:
            M = M.transpose() if isinstance(M, SparseColumns) else M.T
        r = rank_mod_p(M, p)
        K._cache[key] = r
        return r


def homology(K: SimplicialComplex, coeff="Z", reduced: bool = False) -> HomologyProfile:
    """Homology profile of the complex over Z or a prime field."""
    label, p = parse_coeff(coeff)
    key = ("hprof", label, reduced)
    try:
        return K._cache[key]
    except KeyError:
        pass
    dim = K.dimension
    lo = -1 if reduced else 0

    def rank(i):
        if i < 0 or i > dim or (i == 0 and not reduced):
            return 0
        if p is None:
            return _boundary_snf(K, i, reduced).rank
        return _boundary_rank_p(K, i, reduced, p)

    groups = []
    for i in range(lo, dim + 1):
        f_i = len(K._ifaces(i))
        betti = f_i - rank(i) - rank(i + 1)
        if p is None and 1 <= i + 1 <= dim:
            torsion = _boundary_snf(K, i + 1, reduced).torsion_factors
        else:
            torsion = ()
        if betti or torsion:
            groups.append((i, betti, torsion))
    profile = HomologyProfile(label, reduced, "homology", dim, tuple(groups))
    K._cache[key] = profile
    return profile


def cohomology(K: SimplicialComplex, coeff="Z", reduced: bool = False) -> HomologyProfile:
    """Cohomology profile from transposed boundary maps.

    Asserts the universal-coefficient relations against homology: equal
    Betti numbers in each degree, and degree-i cohomology torsion equal
    to degree-(i-1) homology torsion.
    """
    label, p = parse_coeff(coeff)
    key = ("cprof", label, reduced)
    try:
        return K._cache[key]
    except KeyError:
        pass
    dim = K.dimension
    lo = -1 if reduced else 0

    def rank_t(i):
        if i < 0 or i > dim or (i == 0 and not reduced):
            return 0
        if p is None:
            return _coboundary_snf(K, i, reduced).rank
        return _boundary_rank_p(K, i, reduced, p, transposed=True)

    groups = []
    for i in range(lo, dim + 1):
        f_i = len(K._ifaces(i))
        betti = f_i - rank_t(i) - rank_t(i + 1)
        if p is None and 1 <= i <= dim:
            torsion = _coboundary_snf(K, i, reduced).torsion_factors
        else:
            torsion = ()
        if betti or torsion:
            groups.append((i, betti, torsion))
    profile = HomologyProfile(label, reduced, "cohomology", dim, tuple(groups))

    hom = homology(K, coeff, reduced)
    for i in range(lo, dim + 1):
        cb, ct = profile.group(i)
        hb, _ = hom.group(i)
        assert cb == hb, f"universal coefficients violated at degree {i}: betti {cb} != {hb}"
        assert ct == hom.group(i - 1)[1], (
            f"universal coefficients violated at degree {i}: torsion {ct} != {hom.group(i - 1)[1]}"
        )
    K._cache[key] = profile
    return profile


def euler_characteristic(K: SimplicialComplex) -> int:
    """Alternating face-count sum, asserted against rational Betti numbers."""
    chi = 0
    for i in range(K.dimension + 1):
        chi += len(K._ifaces(i)) if i % 2 == 0 else -len(K._ifaces(i))
    prof = homology(K, "Z", reduced=False)
    betti_chi = sum(
        (betti if dim % 2 == 0 else -betti) for dim, betti, _ in prof.groups
    )
    assert chi == betti_chi, f"euler characteristic mismatch: faces {chi}, betti {betti_chi}"
    return chi


def is_homology_sphere(K: SimplicialComplex, d: int | None = None, coeff="Z") -> bool:
    """Whether a closed pseudomanifold has the reduced homology of S^d."""
    report = K.is_closed_pseudomanifold()
    if not report.is_closed_pseudomanifold:
        raise NotPseudomanifoldError("homology sphere test needs a closed pseudomanifold")
    if d is None:
        d = K.dimension
    if d != K.dimension:
        raise HypothesisError(f"complex has dimension {K.dimension}, not {d}")
    return homology(K, coeff, reduced=True).is_sphere(d)
