"""Artin braid groups.

Equality of braids is decided through the (faithful) Hurwitz action of
``B_n`` on the free group ``F_n = <g1..gn>``:

    s_i:  g_i -> g_{i+1},  g_{i+1} -> g_{i+1}^-1 g_i g_{i+1},  g_j -> g_j

Letters of a braid word act left to right: in ``s1 s2`` the automorphism of
``s1`` is applied first.  Consequently ``action(a * b) = action(b) o action(a)``
and the same holds for the induced permutation of the punctures.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import lru_cache

from .freegroup import FreeWord, Letter, WordSyntaxError, apply_endomorphism, format_letters, free_reduce, parse_letters

_HEADER = re.compile(r"^\s*braid\s+n\s*=\s*(\d+)\s*:(.*)$", re.S)


class StrandMismatchError(ValueError):
    pass


class BraidWord:
    """A freely reduced word in the Artin generators ``s1..s_{n-1}`` of ``B_n``.

    Free reduction is only a storage normalization; use :func:`braid_equals`
    (or ``==``) for equality in the group.
    """

    __slots__ = ("n", "letters", "_key")

    def __init__(self, n: int, letters: Iterable[Letter] = ()):
        if n < 1:
            raise ValueError("strand count must be positive")
        letters = free_reduce(letters)
        for i, _ in letters:
            if i >= n:
                raise ValueError(f"generator s{i} does not exist in B_{n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "_key", None)

    def __setattr__(self, name, value):
        raise AttributeError("BraidWord is immutable")

    @classmethod
    def identity(cls, n: int) -> BraidWord:
        return cls(n)

    @classmethod
    def generator(cls, n: int, i: int, power: int = 1) -> BraidWord:
        """The half-twist ``s_i`` exchanging punctures ``i`` and ``i + 1``."""
        return cls(n, [(i, 1 if power > 0 else -1)] * abs(power))

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> BraidWord:
        """Parse ``"braid n=3: s1 s2^-1"`` or, given ``n``, a bare ``"s1 s2^-1"``."""
        m = _HEADER.match(text)
        if m:
            header_n = int(m.group(1))
            if n is not None and n != header_n:
                raise StrandMismatchError(f"header says n={header_n}, expected n={n}")
            n, text = header_n, m.group(2)
        if n is None:
            raise WordSyntaxError("braid word without 'braid n=<n>:' header")
        return cls(n, parse_letters(text, "s", max_index=n - 1))

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        _check_same(self, other)
        return BraidWord(self.n, self.letters + other.letters)

    def __pow__(self, k: int) -> BraidWord:
        base = self if k >= 0 else self.inverse()
        return BraidWord(self.n, base.letters * abs(k))

    def inverse(self) -> BraidWord:
        return BraidWord(self.n, [(i, -s) for i, s in reversed(self.letters)])

    def conjugate(self, by: BraidWord) -> BraidWord:
        """``by^-1 * self * by``."""
        return by.inverse() * self * by

    def exponent_sum(self) -> int:
        return sum(s for _, s in self.letters)

    def key(self) -> tuple:
        """Canonical hashable key: the reduced images of the Artin action."""
        if self._key is None:
            object.__setattr__(self, "_key", (self.n, artin_action(self).key()))
        return self._key

    def __eq__(self, other) -> bool:
        if not isinstance(other, BraidWord):
            return NotImplemented
        return self.n == other.n and (self.letters == other.letters or self.key() == other.key())

    def __hash__(self) -> int:
        return hash(self.key())

    def format(self, header: bool = False) -> str:
        body = format_letters(self.letters, "s")
        return f"braid n={self.n}: {body}" if header else body

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"BraidWord.parse({self.format(header=True)!r})"


def _check_same(a: BraidWord, b: BraidWord) -> None:
    if a.n != b.n:
        raise StrandMismatchError(f"strand counts differ: {a.n} vs {b.n}")


@dataclass(frozen=True)
class BraidAction:
    """Images of ``g1..gn`` under a braid automorphism of ``F_n``."""

    images: tuple[FreeWord, ...]

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, w: FreeWord) -> FreeWord:
        return apply_endomorphism(self.images, w)

    def then(self, other: BraidAction) -> BraidAction:
        """The action of ``self`` followed by ``other``."""
        return BraidAction(tuple(other(img) for img in self.images))

    def key(self) -> tuple:
        return tuple(img.letters for img in self.images)

    def is_identity(self) -> bool:
        return all(img.letters == ((j + 1, 1),) for j, img in enumerate(self.images))


@lru_cache(maxsize=None)
def _generator_images(n: int, i: int, sign: int) -> tuple[FreeWord, ...]:
    images = [FreeWord.gen(j) for j in range(1, n + 1)]
    a, b = FreeWord.gen(i), FreeWord.gen(i + 1)
    if sign > 0:
        images[i - 1] = b
        images[i] = a.conjugate(b)
    else:
        images[i - 1] = a * b * a.inverse()
        images[i] = a
    return tuple(images)


def _apply_letter(word: FreeWord, i: int, sign: int, n: int) -> FreeWord:
    if not any(j == i or j == i + 1 for j, _ in word.letters):
        return word
    return apply_endomorphism(_generator_images(n, i, sign), word)


def artin_action(b: BraidWord) -> BraidAction:
    images = [FreeWord.gen(j) for j in range(1, b.n + 1)]
    for i, s in b.letters:
        images = [_apply_letter(img, i, s, b.n) for img in images]
    return BraidAction(tuple(images))


def braid_equals(a: BraidWord, b: BraidWord) -> bool:
    _check_same(a, b)
    if a.letters == b.letters:
        return True
    return artin_action(a).key() == artin_action(b).key()


def permutation(b: BraidWord) -> tuple[int, ...]:
    """Induced permutation of the punctures, one-line form on ``1..n``.

    ``p[k - 1]`` is where puncture ``k`` is sent; ``s_i`` gives ``(i i+1)``.
    """
    p = list(range(1, b.n + 1))
    for i, _ in b.letters:
        # relabel positions: whatever sat at i now sits at i+1 and vice versa
        p = [i + 1 if x == i else i if x == i + 1 else x for x in p]
    return tuple(p)


def full_twist(n: int) -> BraidWord:
    """``(s_{n-1} ... s_1)^n``, the generator of the centre of ``B_n``."""
    if n < 2:
        raise ValueError("full twist needs n >= 2")
    cycle = [(i, 1) for i in range(n - 1, 0, -1)]
    return BraidWord(n, cycle * n)


def artin_relations(n: int) -> list[tuple[str, BraidWord, BraidWord]]:
    """Both families of defining relations of ``B_n`` as (name, lhs, rhs)."""
    rels = []
    s = lambda i: BraidWord.generator(n, i)  # noqa: E731
    for i in range(1, n - 1):
        rels.append((f"s{i} s{i+1} s{i} = s{i+1} s{i} s{i+1}", s(i) * s(i + 1) * s(i), s(i + 1) * s(i) * s(i + 1)))
    for i in range(1, n):
        for j in range(i + 2, n):
            rels.append((f"s{i} s{j} = s{j} s{i}", s(i) * s(j), s(j) * s(i)))
    return rels


def random_braid(n: int, length: int, rng) -> BraidWord:
    """A random word of at most ``length`` letters (free reduction may shorten it)."""
    if n < 2:
        return BraidWord(n)
    return BraidWord(n, [(rng.randrange(1, n), rng.choice((1, -1))) for _ in range(length)])


def product_word(n: int) -> FreeWord:
    return FreeWord((j, 1) for j in range(1, n + 1))


def compose_all(words: Sequence[BraidWord], n: int) -> BraidWord:
    out: list[Letter] = []
    for w in words:
        if w.n != n:
            raise StrandMismatchError(f"factor in B_{w.n}, expected B_{n}")
        out.extend(w.letters)
    return BraidWord(n, out)
