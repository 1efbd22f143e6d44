"""Factorizations of group elements and the moves acting on them.

A factorization is an ordered tuple ``g1 o g2 o ... o gn`` in some group
context; its product is ``g1 g2 ... gn`` (left to right).  The Hurwitz move
at position ``i`` sends ``(g_i, g_{i+1})`` to ``(g_{i+1}, g_{i+1}^-1 g_i g_{i+1})``
and preserves the product; simultaneous conjugation by ``b`` replaces every
factor ``a`` by ``b^-1 a b``.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from .braid import BraidWord, compose_all
from .contexts import BraidGroup, GroupContext, cycle_type, multiset

FORWARD = 1
INVERSE = -1


class ContextMismatchError(ValueError):
    pass


class InvariantUnavailable(ValueError):
    """The requested invariant needs structure the context does not provide."""


@dataclass(frozen=True)
class Factorization:
    context: GroupContext
    factors: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))

    def __len__(self) -> int:
        return len(self.factors)

    @cached_property
    def product(self):
        return self.context.product(self.factors)

    @cached_property
    def key(self) -> tuple:
        return tuple(self.context.key(x) for x in self.factors)

    def replace(self, factors: Iterable) -> Factorization:
        return Factorization(self.context, tuple(factors))

    def format(self) -> list[str]:
        return [self.context.format(x) for x in self.factors]

    def __str__(self) -> str:
        return " o ".join(f"[{s}]" for s in self.format()) or "(empty)"


def product(f: Factorization):
    return f.product


def hurwitz_move(f: Factorization, i: int, direction: int = FORWARD) -> Factorization:
    """Hurwitz move at 1-based position ``i``; only slots ``i, i+1`` change."""
    n = len(f)
    if not 1 <= i <= n - 1:
        raise IndexError(f"move index {i} outside 1..{n - 1}")
    ctx = f.context
    fs = list(f.factors)
    a, b = fs[i - 1], fs[i]
    if direction == FORWARD:
        fs[i - 1], fs[i] = b, ctx.conjugate(a, b)
    elif direction == INVERSE:
        fs[i - 1], fs[i] = ctx.multiply(ctx.multiply(a, b), ctx.invert(a)), a
    else:
        raise ValueError("direction must be +1 (forward) or -1 (inverse)")
    return f.replace(fs)


def simultaneous_conjugate(f: Factorization, b) -> Factorization:
    ctx = f.context
    return f.replace(ctx.conjugate(x, b) for x in f.factors)


def rotate(f: Factorization, direction: int = FORWARD) -> Factorization:
    """Cyclic relabeling; forward sends ``(g1, ..., gn)`` to ``(g2, ..., gn, g1)``."""
    if not f.factors:
        return f
    fs = f.factors
    return f.replace(fs[1:] + fs[:1] if direction == FORWARD else fs[-1:] + fs[:-1])


def compose_conjugated(f1: Factorization, f2: Factorization, psi) -> Factorization:
    """``f1`` followed by ``f2`` conjugated by ``psi``; product ``phi1 * psi^-1 phi2 psi``."""
    if f1.context != f2.context:
        raise ContextMismatchError(f"{f1.context.name} vs {f2.context.name}")
    return f1.replace(f1.factors + simultaneous_conjugate(f2, psi).factors)


# ---------------------------------------------------------------- invariants

CONJUGATION_STABLE = frozenset({"length", "product_class", "conjugacy", "abelianization", "symplectic", "vankampen"})
ALL_MODES = ("length", "product", "product_class", "conjugacy", "abelianization", "symplectic", "vankampen")


def invariants(
    f: Factorization,
    modes: Sequence[str] = ("length", "product"),
    quotient: Callable | None = None,
    vankampen_ks: Sequence[int] = (2, 3),
) -> dict:
    """Move-stable invariants of ``f``.

    Every mode is preserved by Hurwitz moves; modes in ``CONJUGATION_STABLE``
    are also preserved by simultaneous conjugation.  ``quotient`` maps an
    element to a permutation (one-line tuple) and overrides the context's own
    finite quotient for the ``conjugacy`` and ``product_class`` modes.
    """
    ctx = f.context
    q = quotient or ctx.quotient
    out: dict = {}
    for mode in modes:
        if mode == "length":
            out[mode] = len(f)
        elif mode == "product":
            out[mode] = ctx.key(f.product)
        elif mode == "product_class":
            image = q(f.product)
            value = [cycle_type(image) if image is not None else None, ctx.abelian(f.product)]
            fp = ctx.class_fingerprint(f.product)
            if fp is not None:
                value.append(fp)
            out[mode] = tuple(value)
        elif mode == "conjugacy":
            images = [q(x) for x in f.factors]
            if any(img is None for img in images):
                raise InvariantUnavailable(f"{ctx.name} has no finite quotient; pass quotient=")
            out[mode] = multiset(cycle_type(img) for img in images)
        elif mode == "abelianization":
            values = [ctx.abelian(x) for x in f.factors]
            if any(v is None for v in values):
                raise InvariantUnavailable(f"{ctx.name} has no abelianization map")
            out[mode] = multiset(values)
        elif mode == "symplectic":
            if ctx.class_fingerprint(ctx.identity()) is None:
                raise InvariantUnavailable(f"{ctx.name} has no symplectic representation")
            out[mode] = multiset(ctx.class_fingerprint(x) for x in f.factors)
        elif mode == "vankampen":
            if not isinstance(ctx, BraidGroup):
                raise InvariantUnavailable("van Kampen fingerprint needs braid factors")
            from .vankampen import MonodromyInput, fingerprint, presentation

            p = presentation(MonodromyInput(ctx.n, f.factors, projective=False))
            out[mode] = fingerprint(p, vankampen_ks).as_tuple()
        else:
            raise ValueError(f"unknown invariant mode {mode!r}")
    return out


def available_modes(ctx: GroupContext, conjugation: bool, rotation: bool = False) -> list[str]:
    """Cheap invariants that are stable under the moves in force and defined on ``ctx``."""
    modes = ["length"]
    if not (conjugation or rotation):
        modes.append("product")
    modes.append("product_class")
    if ctx.quotient(ctx.identity()) is not None:
        modes.append("conjugacy")
    if ctx.abelian(ctx.identity()) is not None:
        modes.append("abelianization")
    if ctx.class_fingerprint(ctx.identity()) is not None:
        modes.append("symplectic")
    return modes


# ---------------------------------------------------------------- cuspidal


@dataclass(frozen=True)
class CuspidalFactorization:
    """Factors ``w^-1 s1^e w`` with ``e`` in {1, 2, 3}, stored as ``(w, e)`` pairs.

    Exponent 1 is a tangency, 2 a node, 3 a cusp.
    """

    degree: int
    factors: tuple[tuple[BraidWord, int], ...] = field(default=())

    def __post_init__(self):
        fs = tuple((w, int(e)) for w, e in self.factors)
        for w, e in fs:
            if e not in (1, 2, 3):
                raise ValueError(f"cuspidal exponent must be 1, 2 or 3, got {e}")
            if not isinstance(w, BraidWord) or w.n != self.degree:
                raise ValueError(f"conjugator must be a braid in B_{self.degree}")
        object.__setattr__(self, "factors", fs)

    @classmethod
    def from_braid_words(cls, degree: int, words):
        raise NotImplementedError(
            "recognizing a raw braid as a conjugate of s1^e needs a conjugacy solver; "
            "supply (conjugator, exponent) pairs instead"
        )

    def factor_braids(self) -> list[BraidWord]:
        s1 = BraidWord.generator(self.degree, 1)
        return [(s1**e).conjugate(w) for w, e in self.factors]

    def as_factorization(self) -> Factorization:
        return Factorization(BraidGroup(self.degree), self.factor_braids())

    def total_product(self) -> BraidWord:
        return compose_all(self.factor_braids(), self.degree)


def regenerate(cf: CuspidalFactorization) -> Factorization:
    """Replace each ``w^-1 s1^e w`` by ``e`` copies of the half-twist ``w^-1 s1 w``."""
    s1 = BraidWord.generator(cf.degree, 1)
    out = []
    for w, e in cf.factors:
        out.extend([s1.conjugate(w)] * e)
    return Factorization(BraidGroup(cf.degree), out)
