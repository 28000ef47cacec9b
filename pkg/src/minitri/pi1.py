"""Edge-path presentations of the fundamental group and freeness verdicts.

Only the 2-skeleton matters for pi_1, so presentations are read off a
spanning tree: one generator per non-tree edge, one relator per
triangle.  Freeness is undecidable in general; ``freeness_verdict`` is
three-valued and every NOT_FREE answer carries a certificate that can be
re-validated independently (a torsion coefficient of the abelianization,
or an explicit homomorphism onto a nontrivial permutation group).
"""

from __future__ import annotations

import random
import string
from collections import deque
from dataclasses import dataclass
from itertools import permutations
from typing import Optional

from .complexes import SimplicialComplex
from .errors import ConnectivityError, DimensionError, HypothesisError
from .snf import smith_normal_form


def _free_reduce(word):
    out = []
    for g in word:
        if out and out[-1] == -g:
            out.pop()
        else:
            out.append(g)
    return tuple(out)


def _cyclic_reduce(word):
    w = list(_free_reduce(word))
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    return tuple(w)


def _gen_name(i):
    # 1-based generator index to a short name: a..z, then g27, g28, ...
    if i <= 26:
        return string.ascii_lowercase[i - 1]
    return f"g{i}"


def _word_text(word):
    if not word:
        return "1"
    parts = []
    j = 0
    while j < len(word):
        g = word[j]
        run = 1
        while j + run < len(word) and word[j + run] == g:
            run += 1
        exp = run if g > 0 else -run
        name = _gen_name(abs(g))
        parts.append(name if exp == 1 else f"{name}^{exp}")
        j += run
    return " ".join(parts)


@dataclass(frozen=True)
class GroupPresentation:
    """Finite presentation with relators as tuples of signed 1-based indices."""

    ngens: int
    relators: tuple
    gen_edges: tuple = ()
    tree_edges: tuple = ()

    def __post_init__(self):
        for r in self.relators:
            for g in r:
                if g == 0 or abs(g) > self.ngens:
                    raise HypothesisError(f"relator index {g} out of range 1..{self.ngens}")
            if _free_reduce(r) != tuple(r):
                raise HypothesisError(f"relator {r!r} is not freely reduced")

    def __str__(self):
        gens = ", ".join(_gen_name(i + 1) for i in range(self.ngens))
        rels = ", ".join(_word_text(r) for r in self.relators)
        return f"< {gens} | {rels} >"

    def as_dict(self):
        return {
            "generators": self.ngens,
            "relators": [list(r) for r in self.relators],
            "text": str(self),
        }


def edge_path_presentation(K: SimplicialComplex, rng=None) -> GroupPresentation:
    """Presentation of pi_1 from a breadth-first spanning tree.

    Deterministic by default (BFS from the smallest vertex id, neighbors
    in id order); pass an int seed or a random.Random to shuffle the
    neighbor order and get a different spanning tree for the same group.
    """
    if K.dimension < 1:
        raise DimensionError("pi_1 needs a complex of dimension at least 1")
    if not K.is_connected():
        raise ConnectivityError("pi_1 presentation needs a connected complex")
    if isinstance(rng, int):
        rng = random.Random(rng)

    edges = [tuple(e) for e in K.faces(1)]
    idx = {lab: i for i, lab in enumerate(K.labels)}
    eids = sorted(tuple(sorted((idx[a], idx[b]))) for a, b in edges)
    adj = {}
    for a, b in eids:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)

    tree = set()
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        nbrs = sorted(adj.get(u, ()))
        if rng is not None:
            rng.shuffle(nbrs)
        for v in nbrs:
            if v not in seen:
                seen.add(v)
                tree.add(tuple(sorted((u, v))))
                queue.append(v)

    gen_of = {}
    gen_edges = []
    for e in eids:
        if e not in tree:
            gen_of[e] = len(gen_edges) + 1
            gen_edges.append((K.labels[e[0]], K.labels[e[1]]))

    def letter(u, v):
        # Signed generator for the directed edge u -> v; 0 for tree edges.
        e = tuple(sorted((u, v)))
        g = gen_of.get(e)
        if g is None:
            return 0
        return g if (u, v) == e else -g

    relators = []
    if K.dimension >= 2:
        for tri in K.faces(2):
            a, b, c = sorted(idx[x] for x in tri)
            word = [letter(a, b), letter(b, c), letter(c, a)]
            relators.append(_free_reduce([g for g in word if g]))

    return GroupPresentation(
        ngens=len(gen_edges),
        relators=tuple(relators),
        gen_edges=tuple(gen_edges),
        tree_edges=tuple(
            (K.labels[a], K.labels[b]) for a, b in sorted(tree)
        ),
    )


def _substitute(word, target, replacement):
    # Replace every occurrence of the generator `target` by the word
    # `replacement` (and inverses accordingly), then freely reduce.
    inv = tuple(-g for g in reversed(replacement))
    out = []
    for g in word:
        if g == target:
            out.extend(replacement)
        elif g == -target:
            out.extend(inv)
        else:
            out.append(g)
    return _free_reduce(out)


def _drop_generator(relators, target):
    # Reindex generators above `target` down by one.
    def shift(g):
        a = abs(g)
        if a > target:
            a -= 1
        return a if g > 0 else -a

    return [tuple(shift(g) for g in r) for r in relators]


def _canonical_cyclic(word):
    # Least rotation of the word or its inverse, for duplicate detection.
    if not word:
        return ()
    best = None
    for w in (word, tuple(-g for g in reversed(word))):
        for s in range(len(w)):
            rot = w[s:] + w[:s]
            if best is None or rot < best:
                best = rot
    return best


def tietze_simplify(P: GroupPresentation, effort_budget: int = 10000) -> GroupPresentation:
    """Shrink a presentation without changing the group.

    Moves: cyclic/free reduction, dropping empty and duplicate relators,
    killing generators with length-1 relators, and eliminating a
    generator that occurs exactly once in some relator (substituting the
    solved word elsewhere).  Runs to a fixpoint or until the budget of
    individual moves is spent.
    """
    ngens = P.ngens
    relators = [_cyclic_reduce(r) for r in P.relators]
    budget = effort_budget

    changed = True
    while changed and budget > 0:
        changed = False

        # Empty and duplicate relators say nothing.
        seen = set()
        kept = []
        for r in relators:
            if not r:
                changed = True
                continue
            key = _canonical_cyclic(r)
            if key in seen:
                changed = True
                continue
            seen.add(key)
            kept.append(r)
        relators = kept

        # Pick the cheapest elimination: a relator containing some
        # generator exactly once; solving for it substitutes a word of
        # length len(r) - 1 at every other occurrence.
        best = None
        for ri, r in enumerate(relators):
            counts = {}
            for g in r:
                counts[abs(g)] = counts.get(abs(g), 0) + 1
            for g, c in counts.items():
                if c != 1:
                    continue
                elsewhere = sum(
                    sum(1 for x in rr if abs(x) == g)
                    for rj, rr in enumerate(relators)
                    if rj != ri
                )
                cost = (len(r) - 1, elsewhere, ri, g)
                if best is None or cost < best:
                    best = cost
        if best is not None and budget > 0:
            _, _, ri, g = best
            r = relators[ri]
            pos = next(i for i, x in enumerate(r) if abs(x) == g)
            # Rotate the occurrence to the front; r ~ g w  =>  g = w^-1
            # (or g^-1 w => g = w).
            rot = r[pos:] + r[:pos]
            rest = rot[1:]
            word = tuple(-x for x in reversed(rest)) if rot[0] == g else rest
            relators = [
                _cyclic_reduce(_substitute(rr, g, word))
                for rj, rr in enumerate(relators)
                if rj != ri
            ]
            relators = _drop_generator(relators, g)
            ngens -= 1
            budget -= 1
            changed = True

    relators = [r for r in relators if r]
    return GroupPresentation(ngens=ngens, relators=tuple(sorted(set(relators))))


@dataclass(frozen=True)
class AbelianInvariants:
    """H_1-style invariants of a presented group: free rank plus torsion."""

    rank: int
    torsion: tuple

    def as_dict(self):
        return {"rank": self.rank, "torsion": list(self.torsion)}

    def describe(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"

    @property
    def trivial(self):
        return self.rank == 0 and not self.torsion


def abelianization(P: GroupPresentation) -> AbelianInvariants:
    """Invariants of the abelianized group, by SNF of the exponent matrix."""
    if P.ngens == 0:
        return AbelianInvariants(0, ())
    rows = []
    for r in P.relators:
        row = [0] * P.ngens
        for g in r:
            row[abs(g) - 1] += 1 if g > 0 else -1
        rows.append(row)
    if not rows:
        return AbelianInvariants(P.ngens, ())
    res = smith_normal_form(rows)
    return AbelianInvariants(P.ngens - res.rank, res.torsion_factors)


# -- finite quotients --------------------------------------------------------


def _perm_mul(p, q):
    return tuple(p[j] for j in q)


def _perm_inv(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def _relator_image(word, images, n):
    acc = tuple(range(n))
    for g in word:
        p = images[abs(g) - 1]
        acc = _perm_mul(acc, p if g > 0 else _perm_inv(p))
    return acc


def find_symmetric_quotient(
    P: GroupPresentation, max_degree: int = 5, node_budget: int = 500000
):
    """Search for a nontrivial homomorphism to S_n, n <= max_degree.

    Backtracking over generator images in index order; a relator is
    checked as soon as its highest generator is assigned.  Returns
    (n, images) or None.  The homomorphism is nontrivial when at least
    one image is not the identity.
    """
    if P.ngens == 0:
        return None
    by_max = {}
    for r in P.relators:
        if r:
            by_max.setdefault(max(abs(g) for g in r), []).append(r)

    for n in range(2, max_degree + 1):
        ident = tuple(range(n))
        perms = list(permutations(range(n)))
        images = [ident] * P.ngens
        nodes = 0

        def assign(i):
            nonlocal nodes
            if i == P.ngens:
                return any(img != ident for img in images)
            for p in perms:
                nodes += 1
                if nodes > node_budget:
                    return False
                images[i] = p
                ok = all(
                    _relator_image(r, images, n) == ident for r in by_max.get(i + 1, ())
                )
                if ok and assign(i + 1):
                    return True
            images[i] = ident
            return False

        if assign(0):
            return n, tuple(images)
        if nodes > node_budget:
            return None
    return None


@dataclass(frozen=True)
class FreenessVerdict:
    status: str  # FREE | NOT_FREE | UNKNOWN
    rank: Optional[int]
    reason: Optional[str]
    certificate: Optional[dict]
    presentation: GroupPresentation

    def as_dict(self):
        cert = None
        if self.certificate is not None:
            cert = {
                k: (list(v) if isinstance(v, tuple) else v)
                for k, v in self.certificate.items()
                if k != "presentation"
            }
        return {
            "status": self.status,
            "rank": self.rank,
            "reason": self.reason,
            "certificate": cert,
            "presentation": self.presentation.as_dict(),
        }


def freeness_verdict(
    P: GroupPresentation,
    effort_budget: int = 10000,
    max_degree: int = 5,
    node_budget: int = 500000,
) -> FreenessVerdict:
    """Three-valued freeness decision with machine-checkable certificates.

    FREE when simplification removes every relator.  NOT_FREE when the
    abelianization has torsion (free groups have torsion-free H_1), or
    when it is trivial yet a nontrivial finite permutation quotient
    exists (a nontrivial perfect group is not free).  UNKNOWN otherwise.
    """
    Q = tietze_simplify(P, effort_budget=effort_budget)
    if not Q.relators:
        return FreenessVerdict("FREE", Q.ngens, None, None, Q)
    ab = abelianization(Q)
    if ab.torsion:
        cert = {"kind": "torsion-in-H1", "torsion": ab.torsion, "presentation": Q}
        return FreenessVerdict("NOT_FREE", None, "torsion-in-H1", cert, Q)
    if ab.trivial:
        hit = find_symmetric_quotient(Q, max_degree=max_degree, node_budget=node_budget)
        if hit is not None:
            n, images = hit
            cert = {
                "kind": "perfect-and-nontrivial-quotient",
                "degree": n,
                "images": images,
                "presentation": Q,
            }
            return FreenessVerdict(
                "NOT_FREE", None, "perfect-and-nontrivial-quotient", cert, Q
            )
    return FreenessVerdict("UNKNOWN", None, None, None, Q)


def validate_not_free_certificate(verdict: FreenessVerdict) -> bool:
    """Re-check a NOT_FREE certificate from scratch."""
    if verdict.status != "NOT_FREE" or verdict.certificate is None:
        return False
    cert = verdict.certificate
    Q = cert["presentation"]
    if cert["kind"] == "torsion-in-H1":
        factors = abelianization(Q).torsion
        return all(
            any(t == f or f % t == 0 for f in factors) for t in cert["torsion"]
        ) and bool(cert["torsion"])
    if cert["kind"] == "perfect-and-nontrivial-quotient":
        n, images = cert["degree"], cert["images"]
        ident = tuple(range(n))
        if len(images) != Q.ngens:
            return False
        if all(p == ident for p in images):
            return False
        return all(_relator_image(r, list(images), n) == ident for r in Q.relators)
    return False
