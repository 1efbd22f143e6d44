"""Reduced words in finitely generated free groups, and finite presentations.

Generators are 1-based: ``g1, g2, ...``.  A letter is a pair
``(index, sign)`` with ``sign`` in ``{+1, -1}``.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass

Letter = tuple[int, int]

_TOKEN = re.compile(r"^([A-Za-z]+)(\d+)(?:\^(-?\d+))?$")


class WordSyntaxError(ValueError):
    """A token in a textual word could not be parsed."""

    def __init__(self, message: str, token: str | None = None, column: int | None = None):
        self.token = token
        self.column = column
        where = f" at column {column}" if column is not None else ""
        super().__init__(f"{message}{where}")


class MissingImageError(KeyError):
    pass


def free_reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for index, sign in letters:
        if index < 1 or sign not in (1, -1):
            raise ValueError(f"bad letter {(index, sign)!r}")
        if stack and stack[-1][0] == index and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((index, sign))
    return tuple(stack)


class FreeWord:
    """An element of a free group stored as a freely reduced word.

    Instances are immutable and hashable; two words are equal exactly when
    they represent the same group element.
    """

    __slots__ = ("letters", "_hash")

    def __init__(self, letters: Iterable[Letter] = ()):
        object.__setattr__(self, "letters", free_reduce(letters))
        object.__setattr__(self, "_hash", hash(self.letters))

    def __setattr__(self, name, value):
        raise AttributeError("FreeWord is immutable")

    @classmethod
    def identity(cls) -> FreeWord:
        return cls()

    @classmethod
    def gen(cls, index: int, power: int = 1) -> FreeWord:
        sign = 1 if power > 0 else -1
        return cls([(index, sign)] * abs(power))

    @classmethod
    def parse(cls, text: str, prefix: str = "g") -> FreeWord:
        return cls(parse_letters(text, prefix))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FreeWord):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self) -> int:
        return self._hash

    def __mul__(self, other: FreeWord) -> FreeWord:
        return FreeWord(self.letters + other.letters)

    def __pow__(self, n: int) -> FreeWord:
        base = self if n >= 0 else self.inverse()
        return FreeWord(base.letters * abs(n))

    def inverse(self) -> FreeWord:
        return FreeWord((i, -s) for i, s in reversed(self.letters))

    def conjugate(self, by: FreeWord) -> FreeWord:
        """Return ``by^-1 * self * by``."""
        return FreeWord(by.inverse().letters + self.letters + by.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def max_generator(self) -> int:
        return max((i for i, _ in self.letters), default=0)

    def exponent_sums(self, ngens: int) -> list[int]:
        sums = [0] * ngens
        for i, s in self.letters:
            sums[i - 1] += s
        return sums

    def format(self, prefix: str = "g") -> str:
        return format_letters(self.letters, prefix)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"FreeWord({self.format()!r})"


def reduce(raw: Iterable[Letter]) -> FreeWord:
    return FreeWord(raw)


def multiply(a: FreeWord, b: FreeWord) -> FreeWord:
    return a * b


def invert(a: FreeWord) -> FreeWord:
    return a.inverse()


def conjugate(a: FreeWord, b: FreeWord) -> FreeWord:
    return a.conjugate(b)


def apply_endomorphism(images: Mapping[int, FreeWord] | Sequence[FreeWord], w: FreeWord) -> FreeWord:
    """Substitute every letter of ``w`` by its image and reduce.

    ``images`` is either a mapping from generator index or a sequence whose
    entry ``k`` is the image of generator ``k + 1``.
    """
    if not isinstance(images, Mapping):
        images = {k + 1: img for k, img in enumerate(images)}
    inverses: dict[int, FreeWord] = {}
    out: list[Letter] = []
    for index, sign in w.letters:
        try:
            img = images[index]
        except KeyError:
            raise MissingImageError(f"no image for generator {index}") from None
        if sign < 0:
            if index not in inverses:
                inverses[index] = img.inverse()
            img = inverses[index]
        out.extend(img.letters)
    return FreeWord(out)


def parse_letters(text: str, prefix: str = "g", max_index: int | None = None) -> list[Letter]:
    """Parse ``"g1 g2^-1 g3^2"``; ``""`` and ``"e"`` denote the identity."""
    letters: list[Letter] = []
    for match in re.finditer(r"\S+", text):
        token = match.group()
        column = match.start() + 1
        if token == "e":
            continue
        m = _TOKEN.match(token)
        if m is None or m.group(1) != prefix:
            raise WordSyntaxError(f"malformed token {token!r}", token, column)
        index = int(m.group(2))
        power = int(m.group(3)) if m.group(3) is not None else 1
        if index < 1 or (max_index is not None and index > max_index):
            raise WordSyntaxError(f"generator index out of range in token {token!r}", token, column)
        if power == 0:
            raise WordSyntaxError(f"zero exponent in token {token!r}", token, column)
        letters.extend([(index, 1 if power > 0 else -1)] * abs(power))
    return letters


def format_letters(letters: Sequence[Letter], prefix: str = "g") -> str:
    if not letters:
        return "e"
    return " ".join(f"{prefix}{i}" if s > 0 else f"{prefix}{i}^-1" for i, s in letters)


@dataclass(frozen=True)
class GroupPresentation:
    """A finite presentation ``<g1..gn | relators>``.

    Relators are kept in insertion order with duplicates and empty words
    dropped, so that equal inputs print identically.
    """

    ngens: int
    relators: tuple[FreeWord, ...] = ()

    def __post_init__(self):
        if self.ngens < 0:
            raise ValueError("generator count must be non-negative")
        seen: dict[FreeWord, None] = {}
        for r in self.relators:
            if not isinstance(r, FreeWord):
                r = FreeWord(r)
            if r.max_generator() > self.ngens:
                raise ValueError(f"relator {r} uses a generator beyond {self.ngens}")
            if r:
                seen.setdefault(r, None)
        object.__setattr__(self, "relators", tuple(seen))

    def relation_matrix(self) -> list[list[int]]:
        return [r.exponent_sums(self.ngens) for r in self.relators]

    def format(self, prefix: str = "g") -> str:
        lines = [f"gens: {self.ngens}"]
        lines.extend(r.format(prefix) for r in self.relators)
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        gens = ", ".join(f"g{i}" for i in range(1, self.ngens + 1))
        rels = ", ".join(str(r) for r in self.relators)
        return f"<{gens} | {rels}>"


def punctured_sphere_presentation(k: int) -> GroupPresentation:
    """``<g1..gk | g1 g2 ... gk>``, the sphere minus ``k`` points."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return GroupPresentation(k, (FreeWord((i, 1) for i in range(1, k + 1)),))


def surface_presentation(g: int) -> GroupPresentation:
    """Closed genus-``g`` surface; ``alpha_i = g(2i-1)``, ``beta_i = g(2i)``."""
    if g < 0:
        raise ValueError("genus must be non-negative")
    if g == 0:
        return GroupPresentation(0, ())
    letters: list[Letter] = []
    for i in range(1, g + 1):
        a, b = 2 * i - 1, 2 * i
        letters += [(a, 1), (b, 1), (a, -1), (b, -1)]
    return GroupPresentation(2 * g, (FreeWord(letters),))
