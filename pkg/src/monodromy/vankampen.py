"""Zariski-van Kampen presentations from braid monodromy, and computable
invariants of finitely presented groups.

For a factorization ``b_1 o ... o b_m`` in ``B_d`` the complement group is
``<g1..gd | g_j = b_k(g_j) for all j, k>``, with the extra relation
``g1 g2 ... gd = 1`` in the projective case.  Isomorphism of the resulting
groups is not attempted; they are compared through the abelianization and
the number of homomorphisms into small symmetric groups.
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .braid import BraidWord, StrandMismatchError, artin_action
from .factorization import CuspidalFactorization
from .freegroup import FreeWord, GroupPresentation, apply_endomorphism
from .smith import abelian_invariants

MAX_SYMMETRIC_DEGREE = 6


@dataclass(frozen=True)
class MonodromyInput:
    degree: int
    factors: tuple[BraidWord, ...]
    projective: bool = False

    def __post_init__(self):
        fs = tuple(self.factors)
        for k, b in enumerate(fs, start=1):
            if b.n != self.degree:
                raise StrandMismatchError(f"factor {k} lies in B_{b.n}, expected B_{self.degree}")
        object.__setattr__(self, "factors", fs)

    @classmethod
    def from_cuspidal(cls, cf: CuspidalFactorization, projective: bool = False) -> MonodromyInput:
        """Each factor enters as the single braid ``w^-1 s1^e w`` (no regeneration)."""
        return cls(cf.degree, tuple(cf.factor_braids()), projective)


def presentation(m: MonodromyInput) -> GroupPresentation:
    d = m.degree
    relators: list[FreeWord] = []
    for b in m.factors:
        action = artin_action(b)
        for j, img in enumerate(action.images, start=1):
            relators.append(FreeWord.gen(j) * img.inverse())
    if m.projective:
        relators.append(FreeWord((j, 1) for j in range(1, d + 1)))
    return GroupPresentation(d, tuple(relators))


def abelianization(p: GroupPresentation) -> tuple[int, ...]:
    """Invariant factors of ``G^ab``: torsion coefficients then one 0 per free rank."""
    return abelian_invariants(p.relation_matrix(), p.ngens)


# ---------------------------------------------------------------- hom counting


def _compose(a, b):
    return tuple(b[x] for x in a)


def _inverse(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def _evaluate(relator: FreeWord, images, inverses, identity):
    out = identity
    for i, s in relator.letters:
        out = _compose(out, images[i - 1] if s > 0 else inverses[i - 1])
    return out


def count_homs(p: GroupPresentation, k: int, threads: int = 1) -> int:
    """Exact number of homomorphisms ``G -> S_k`` by backtracking over
    generator images, checking each relator as soon as its generators are set."""
    if not 1 <= k <= MAX_SYMMETRIC_DEGREE:
        raise ValueError(f"k must lie in 1..{MAX_SYMMETRIC_DEGREE}")
    n = p.ngens
    if n == 0:
        return 1
    perms = list(itertools.permutations(range(k)))
    inv = {q: _inverse(q) for q in perms}
    identity = tuple(range(k))
    # relators checked once their highest generator is assigned
    due: list[list[FreeWord]] = [[] for _ in range(n)]
    for r in p.relators:
        due[r.max_generator() - 1].append(r)

    def search(level, images, inverses):
        count = 0
        for q in perms:
            images[level] = q
            inverses[level] = inv[q]
            if all(_evaluate(r, images, inverses, identity) == identity for r in due[level]):
                count += 1 if level == n - 1 else search(level + 1, images, inverses)
        return count

    def branch(q0):
        images = [None] * n
        inverses = [None] * n
        images[0], inverses[0] = q0, inv[q0]
        if not all(_evaluate(r, images, inverses, identity) == identity for r in due[0]):
            return 0
        return 1 if n == 1 else search(1, images, inverses)

    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            return sum(pool.map(branch, perms))
    return sum(branch(q) for q in perms)


# ---------------------------------------------------------------- Tietze moves


def _cyclic_reduce(w: FreeWord) -> FreeWord:
    letters = list(w.letters)
    while len(letters) > 1 and letters[0][0] == letters[-1][0] and letters[0][1] == -letters[-1][1]:
        letters = letters[1:-1]
    return FreeWord(letters)


def _canonical_relator(w: FreeWord) -> FreeWord:
    """Least cyclic rotation of ``w`` or ``w^-1``; all of these are equivalent relators."""
    w = _cyclic_reduce(w)
    if not w:
        return w
    options = []
    for v in (w, w.inverse()):
        ls = v.letters
        options += [ls[i:] + ls[:i] for i in range(len(ls))]
    return FreeWord(min(options, key=lambda ls: [(i, -s) for i, s in ls]))


def _normalize(relators) -> list[FreeWord]:
    seen: dict[FreeWord, None] = {}
    for r in relators:
        c = _canonical_relator(r)
        if c:
            seen.setdefault(c, None)
    return list(seen)


def _eliminate(ngens: int, relators: list[FreeWord], r: FreeWord, x: int):
    """Solve ``r`` for generator ``x`` (occurring once) and substitute it away."""
    ls = r.letters
    pos = next(i for i, (j, _) in enumerate(ls) if j == x)
    rotated = ls[pos + 1 :] + ls[:pos]  # r ~ x^e * rest, so x^e = rest^-1
    rest = FreeWord(rotated)
    sign = ls[pos][1]
    value = rest.inverse() if sign > 0 else rest
    images = {j: FreeWord.gen(j) for j in range(1, ngens + 1)}
    images[x] = value
    renumber = {j: FreeWord.gen(j if j < x else j - 1) for j in range(1, ngens + 1) if j != x}
    out = []
    for s in relators:
        if s is r:
            continue
        s = apply_endomorphism(images, s)
        out.append(apply_endomorphism(renumber, s))
    return ngens - 1, out


def tietze_simplify(p: GroupPresentation, budget: int = 100, growth: float = 1.5) -> GroupPresentation:
    """Simplify by sound Tietze moves.

    Relators are cyclically reduced and deduplicated up to rotation and
    inversion; then, at most ``budget`` times, a generator occurring exactly
    once in some relator is solved for and substituted away, provided the total
    relator length stays within ``growth`` times the starting length.
    Deterministic for fixed input and budget.
    """
    ngens = p.ngens
    relators = _normalize(p.relators)
    limit = max(1, int(growth * sum(len(r) for r in relators)))
    for _ in range(max(0, budget)):
        best = None
        for r in sorted(relators, key=lambda w: (len(w), [(i, -s) for i, s in w.letters])):
            counts: dict[int, int] = {}
            for j, _ in r.letters:
                counts[j] = counts.get(j, 0) + 1
            for x in sorted((j for j, c in counts.items() if c == 1), reverse=True):
                n2, rels2 = _eliminate(ngens, relators, r, x)
                rels2 = _normalize(rels2)
                total = sum(len(w) for w in rels2)
                if total <= limit and (best is None or total < best[0]):
                    best = (total, n2, rels2)
        if best is None:
            break
        _, ngens, relators = best
    return GroupPresentation(ngens, tuple(relators))


# ---------------------------------------------------------------- fingerprints


@dataclass(frozen=True)
class FingerprintRecord:
    abelianization: tuple[int, ...]
    hom_counts: tuple[tuple[int, int], ...]

    def as_tuple(self) -> tuple:
        return (self.abelianization, self.hom_counts)

    def to_dict(self) -> dict:
        return {
            "abelianization": list(self.abelianization),
            "hom_counts": {str(k): c for k, c in self.hom_counts},
        }


def fingerprint(p: GroupPresentation, ks: Sequence[int] = (2, 3), threads: int = 1) -> FingerprintRecord:
    return FingerprintRecord(abelianization(p), tuple((k, count_homs(p, k, threads)) for k in ks))
