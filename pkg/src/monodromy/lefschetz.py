"""Lefschetz fibrations given by their monodromy factorization.

Over a disk the vanishing-cycle twists multiply to the boundary monodromy
``phi``; over the sphere they multiply to the identity.  A factor is a twist
about the image of the first chain curve under a conjugator ``c``, i.e. the
word ``c^-1 x1^(+-1) c``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .contexts import MCGContext
from .factorization import Factorization, compose_conjugated
from .mcg import MCGWord, identity_matrix, puncture_permutation
from .search import EquivalenceVerdict, hurwitz_equivalent

DISK = "disk"
SPHERE = "sphere"


@dataclass(frozen=True)
class TwistFactor:
    conjugator: MCGWord
    orientation: int = 1

    def __post_init__(self):
        if self.orientation not in (1, -1):
            raise ValueError("orientation must be +1 or -1")

    def word(self) -> MCGWord:
        g = self.conjugator.genus
        return MCGWord.twist(g, 1, self.orientation).conjugate(self.conjugator)


def twist_about(genus: int, i: int, orientation: int = 1) -> TwistFactor:
    """Twist factor equal in the group to ``x_i^(orientation)``.

    Uses ``x_{j+1} = c^-1 x_j c`` with ``c = x_{j+1}^-1 x_j^-1`` (a consequence
    of the braid relation).
    """
    if not 1 <= i <= 2 * genus + 1:
        raise ValueError(f"no chain curve {i} in genus {genus}")
    c = MCGWord(genus)
    for j in range(1, i):
        c = c * MCGWord(genus, [(j + 1, -1), (j, -1)])
    return TwistFactor(c, orientation)


@dataclass(frozen=True)
class LefschetzFibration:
    genus: int
    base: str
    factors: tuple[TwistFactor, ...] = ()
    phi: MCGWord | None = None

    def __post_init__(self):
        if self.base not in (DISK, SPHERE):
            raise ValueError(f"base must be {DISK!r} or {SPHERE!r}")
        phi = self.phi if self.phi is not None else MCGWord(self.genus)
        if phi.genus != self.genus:
            raise ValueError("phi has the wrong genus")
        if self.base == SPHERE and not phi.is_identity_word():
            raise ValueError("a fibration over the sphere has trivial boundary monodromy")
        fs = tuple(self.factors)
        for k, t in enumerate(fs, start=1):
            if not isinstance(t, TwistFactor) or t.conjugator.genus != self.genus:
                raise ValueError(f"factor {k} is not a genus-{self.genus} twist factor")
        object.__setattr__(self, "factors", fs)
        object.__setattr__(self, "phi", phi)

    @property
    def context(self) -> MCGContext:
        return MCGContext(self.genus)

    def as_factorization(self) -> Factorization:
        return Factorization(self.context, [t.word() for t in self.factors])

    def target(self) -> MCGWord:
        return self.phi


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[tuple[str, bool], ...]

    @property
    def ok(self) -> bool:
        return all(passed for _, passed in self.checks)

    def to_dict(self) -> dict:
        return {"ok": self.ok, "checks": {name: passed for name, passed in self.checks}}


def validate(f: LefschetzFibration) -> ValidationReport:
    """Necessary conditions: the factor product agrees with ``phi`` (disk) or
    the identity (sphere) in every available quotient representation."""
    ctx = f.context
    prod = f.as_factorization().product
    target = f.phi
    M = ctx.matrix(prod)
    T = ctx.matrix(target) if f.base == DISK else identity_matrix(f.genus)
    sym_ok = bool((M == T).all())
    perm_ok = puncture_permutation(prod) == puncture_permutation(target)
    return ValidationReport((("symplectic", sym_ok), ("puncture permutation", perm_ok)))


def is_symplectic_type(f: LefschetzFibration) -> bool:
    """Every twist positively oriented."""
    return all(t.orientation == 1 for t in f.factors)


def fiber_sum(f1: LefschetzFibration, f2: LefschetzFibration, psi: MCGWord) -> LefschetzFibration:
    """Glue along a fiber with gluing class ``psi``.

    The factor list is ``f1`` followed by ``f2`` conjugated by ``psi``; over
    a disk the new boundary monodromy is ``phi1 * psi^-1 phi2 psi``.
    """
    if f1.genus != f2.genus or psi.genus != f1.genus:
        raise ValueError(f"genus mismatch: {f1.genus}, {f2.genus}, psi {psi.genus}")
    if f1.base != f2.base:
        raise ValueError(f"cannot fiber-sum a {f1.base} fibration with a {f2.base} fibration")
    words = compose_conjugated(f1.as_factorization(), f2.as_factorization(), psi)
    # (c^-1 x c)_psi = (c psi)^-1 x (c psi): carry the twist form along
    moved = tuple(TwistFactor(t.conjugator * psi, t.orientation) for t in f2.factors)
    factors = f1.factors + moved
    assert [t.word() for t in factors] == list(words.factors)
    phi = f1.phi * f2.phi.conjugate(psi) if f1.base == DISK else None
    return LefschetzFibration(f1.genus, f1.base, factors, phi)


def kas_equivalent(
    f1: LefschetzFibration,
    f2: LefschetzFibration,
    budget: int = 10_000,
    conjugators=None,
    rotation: bool = False,
    threads: int = 1,
) -> EquivalenceVerdict:
    """Hurwitz moves plus simultaneous conjugation on the twist words.

    ``conjugators`` restricts conjugation to the subgroup they generate
    (default: all twist generators).  An equivalent verdict certifies
    equivalent fibrations; inequivalence is only ever shown by a mismatch of
    quotient invariants.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    if f1.genus != f2.genus or f1.base != f2.base:
        raise ValueError("fibrations must have the same genus and base")
    return hurwitz_equivalent(
        f1.as_factorization(),
        f2.as_factorization(),
        conjugation=True,
        conjugators=conjugators,
        rotation=rotation,
        budget=budget,
        threads=threads,
    )


def product_image(f: LefschetzFibration) -> np.ndarray:
    return f.context.matrix(f.as_factorization().product)
