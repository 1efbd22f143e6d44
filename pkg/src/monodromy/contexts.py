"""Group contexts: the abstract group interface factorizations live in.

A context supplies the group operations, a canonical hashable ``key`` (equal
keys iff equal elements), a text syntax, default conjugators, and optional
move-stable class functions used as inequivalence witnesses.
"""

from __future__ import annotations

import re
from collections import Counter
from collections.abc import Sequence

from . import braid as _braid
from . import mcg as _mcg
from .freegroup import FreeWord, WordSyntaxError


def compose_perms(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """``a`` then ``b`` (left to right) on one-line forms over ``1..n``."""
    return tuple(b[x - 1] for x in a)


def invert_perm(a: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(a)
    for i, x in enumerate(a, start=1):
        out[x - 1] = i
    return tuple(out)


def cycle_type(p: Sequence[int]) -> tuple[int, ...]:
    seen = [False] * len(p)
    lengths = []
    for start in range(len(p)):
        if seen[start]:
            continue
        k, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = p[x] - 1
            k += 1
        lengths.append(k)
    return tuple(sorted(lengths, reverse=True))


def cycles(p: Sequence[int]) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for start in range(1, len(p) + 1):
        if start in seen or p[start - 1] == start:
            continue
        cyc = [start]
        seen.add(start)
        x = p[start - 1]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = p[x - 1]
        out.append(tuple(cyc))
    return out


class GroupContext:
    """Interface; subclasses override what their group supports."""

    name: str = "abstract"
    exact: bool = True  # False when ``key`` equality is only sufficient for group equality

    def identity(self):
        raise NotImplementedError

    def multiply(self, a, b):
        raise NotImplementedError

    def invert(self, a):
        raise NotImplementedError

    def key(self, a):
        raise NotImplementedError

    def equal(self, a, b) -> bool:
        return self.key(a) == self.key(b)

    def conjugate(self, a, b):
        """``b^-1 a b``."""
        return self.multiply(self.multiply(self.invert(b), a), b)

    def product(self, elements):
        out = self.identity()
        for x in elements:
            out = self.multiply(out, x)
        return out

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, a) -> str:
        return str(a)

    def generators(self) -> list:
        return []

    def contains(self, a) -> bool:
        return True

    # move-stable class functions; ``None`` when the context has no such map

    def quotient(self, a) -> tuple[int, ...] | None:
        """Image under a homomorphism to a symmetric group (one-line form)."""
        return None

    def abelian(self, a):
        """Image in the abelianization, as a hashable value."""
        return None

    def class_fingerprint(self, a):
        """A conjugacy-class invariant richer than the quotient cycle type."""
        return None

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupContext) and self.name == other.name

    def __hash__(self) -> int:
        return hash(self.name)

    def __repr__(self) -> str:
        return f"<context {self.name}>"


_CYCLE = re.compile(r"\(([^()]*)\)")


class SymmetricGroup(GroupContext):
    """``S_n`` with elements as one-line tuples; products are left to right.

    Text syntax is cycle notation, e.g. ``"(1 2)(3 4)"``; ``"e"`` or ``"()"``
    is the identity.  Cycles in one string are multiplied left to right.
    """

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n
        self.name = f"symmetric:{n}"

    def identity(self):
        return tuple(range(1, self.n + 1))

    def multiply(self, a, b):
        return compose_perms(a, b)

    def invert(self, a):
        return invert_perm(a)

    def key(self, a):
        return tuple(a)

    def contains(self, a) -> bool:
        return sorted(a) == list(range(1, self.n + 1))

    def transposition(self, i: int, j: int):
        p = list(range(1, self.n + 1))
        p[i - 1], p[j - 1] = j, i
        return tuple(p)

    def cycle(self, *points: int):
        p = list(range(1, self.n + 1))
        for k, x in enumerate(points):
            p[x - 1] = points[(k + 1) % len(points)]
        return tuple(p)

    def parse(self, text: str):
        stripped = text.strip()
        if stripped in ("", "e"):
            return self.identity()
        pos = 0
        out = self.identity()
        for m in _CYCLE.finditer(stripped):
            if stripped[pos : m.start()].strip():
                bad = stripped[pos : m.start()].strip()
                raise WordSyntaxError(f"malformed cycle text {bad!r}", bad, pos + 1)
            pos = m.end()
            body = m.group(1).replace(",", " ").split()
            try:
                points = [int(x) for x in body]
            except ValueError:
                raise WordSyntaxError(f"malformed cycle {m.group()!r}", m.group(), m.start() + 1) from None
            if len(set(points)) != len(points) or any(not 1 <= x <= self.n for x in points):
                raise WordSyntaxError(f"invalid cycle {m.group()!r} in S_{self.n}", m.group(), m.start() + 1)
            if points:
                out = self.multiply(out, self.cycle(*points))
        if stripped[pos:].strip():
            bad = stripped[pos:].strip()
            raise WordSyntaxError(f"malformed cycle text {bad!r}", bad, pos + 1)
        return out

    def format(self, a) -> str:
        cs = cycles(a)
        if not cs:
            return "e"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cs)

    def generators(self):
        return [self.transposition(i, i + 1) for i in range(1, self.n)]

    def quotient(self, a):
        return tuple(a)

    def abelian(self, a):
        # sign of the permutation
        return (len(a) - len(cycle_type(a))) % 2


class FreeGroupContext(GroupContext):
    def __init__(self, n: int):
        self.n = n
        self.name = f"free:{n}"

    def identity(self):
        return FreeWord()

    def multiply(self, a, b):
        return a * b

    def invert(self, a):
        return a.inverse()

    def conjugate(self, a, b):
        return a.conjugate(b)

    def key(self, a):
        return a.letters

    def contains(self, a) -> bool:
        return isinstance(a, FreeWord) and a.max_generator() <= self.n

    def parse(self, text: str):
        from .freegroup import parse_letters

        return FreeWord(parse_letters(text, "g", max_index=self.n))

    def format(self, a) -> str:
        return a.format()

    def generators(self):
        return [FreeWord.gen(i) for i in range(1, self.n + 1)]

    def abelian(self, a):
        return tuple(a.exponent_sums(self.n))


class BraidGroup(GroupContext):
    """``B_n``; keys are the reduced Artin-action images, so equality is exact."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n
        self.name = f"braid:{n}"

    def identity(self):
        return _braid.BraidWord(self.n)

    def multiply(self, a, b):
        return a * b

    def invert(self, a):
        return a.inverse()

    def conjugate(self, a, b):
        return a.conjugate(b)

    def key(self, a):
        return a.key()

    def contains(self, a) -> bool:
        return isinstance(a, _braid.BraidWord) and a.n == self.n

    def parse(self, text: str):
        return _braid.BraidWord.parse(text, self.n)

    def format(self, a) -> str:
        return a.format()

    def generators(self):
        return [_braid.BraidWord.generator(self.n, i) for i in range(1, self.n)]

    def quotient(self, a):
        return _braid.permutation(a)

    def abelian(self, a):
        return a.exponent_sum()


class MCGContext(GroupContext):
    """``Map_g^h`` on words.

    Keys are normalized words, so key equality implies group equality but not
    conversely (``exact`` is False): orbit enumeration may not terminate and
    certificates replay to equal words.
    """

    exact = False

    def __init__(self, genus: int, chain: _mcg.ChainCurves | None = None):
        self.genus = genus
        self.chain = chain or _mcg.ChainCurves.standard(genus)
        self.name = f"mcg:{genus}"

    def identity(self):
        return _mcg.MCGWord(self.genus)

    def multiply(self, a, b):
        return a * b

    def invert(self, a):
        return a.inverse()

    def conjugate(self, a, b):
        return a.conjugate(b)

    def key(self, a):
        return a.key()

    def contains(self, a) -> bool:
        return isinstance(a, _mcg.MCGWord) and a.genus == self.genus

    def parse(self, text: str):
        return _mcg.MCGWord.parse(text, self.genus)

    def format(self, a) -> str:
        return a.format()

    def generators(self):
        return [_mcg.MCGWord.twist(self.genus, i) for i in range(1, 2 * self.genus + 2)]

    def quotient(self, a):
        return _mcg.puncture_permutation(a)

    def abelian(self, a):
        return _mcg.abelian_image(a)

    def matrix(self, a):
        return _mcg.symplectic_rep(a, self.chain)

    def class_fingerprint(self, a):
        from .fingerprints import symplectic_class_fingerprint

        return symplectic_class_fingerprint(self.matrix(a), self.genus)


def context_from_name(name: str) -> GroupContext:
    """``"symmetric:<n>"``, ``"braid:<n>"``, ``"mcg:<g>"`` or ``"free:<n>"``."""
    kind, _, arg = name.partition(":")
    try:
        value = int(arg)
    except ValueError:
        raise ValueError(f"unknown context {name!r}") from None
    factories = {"symmetric": SymmetricGroup, "braid": BraidGroup, "mcg": MCGContext, "free": FreeGroupContext}
    if kind not in factories:
        raise ValueError(f"unknown context {name!r}")
    return factories[kind](value)


def multiset(values) -> tuple:
    """Order-independent, deterministic encoding of a multiset of hashables."""
    counts = Counter(values)
    return tuple(sorted(counts.items(), key=lambda kv: repr(kv[0])))
