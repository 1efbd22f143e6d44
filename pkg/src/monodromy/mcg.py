"""The hyperelliptic mapping class group and its computable quotients.

``Map_g^h`` is generated by the Dehn twists ``x1..x_{2g+1}`` (lifts of the
half-twists ``s1..s_{2g+1}`` of ``B_{2g+2}``) and the hyperelliptic
involution ``H``.  Word equality in this group is not decided here; words
are compared through two quotient representations:

* the symplectic action on ``H_1(C_g; Z)``, each ``x_i`` acting as the
  transvection ``v -> v + <v, c_i> c_i`` along a fixed chain of curves;
* the permutation of the ``2g + 2`` branch points.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .braid import BraidWord, artin_relations, braid_equals
from .freegroup import Letter, WordSyntaxError, format_letters, free_reduce, parse_letters

_HEADER = re.compile(r"^\s*mcg\s+g\s*=\s*(\d+)\s*:(.*)$", re.S)


class MCGWord:
    """A word in ``x1..x_{2g+1}`` and the central involution ``H``.

    ``H`` commutes with everything and squares to one, so it is stored as a
    single flag (printed first); the remaining letters are freely reduced.
    """

    __slots__ = ("genus", "letters", "h")

    def __init__(self, genus: int, letters: Iterable[Letter] = (), h: bool = False):
        if genus < 0:
            raise ValueError("genus must be non-negative")
        letters = free_reduce(letters)
        for i, _ in letters:
            if i > 2 * genus + 1:
                raise ValueError(f"generator x{i} does not exist in genus {genus}")
        object.__setattr__(self, "genus", genus)
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "h", bool(h))

    def __setattr__(self, name, value):
        raise AttributeError("MCGWord is immutable")

    @classmethod
    def identity(cls, genus: int) -> MCGWord:
        return cls(genus)

    @classmethod
    def twist(cls, genus: int, i: int, power: int = 1) -> MCGWord:
        return cls(genus, [(i, 1 if power > 0 else -1)] * abs(power))

    @classmethod
    def involution(cls, genus: int) -> MCGWord:
        return cls(genus, (), h=True)

    @classmethod
    def parse(cls, text: str, genus: int | None = None) -> MCGWord:
        """Parse ``"mcg g=2: H x1 x3^-1"`` or, given ``genus``, the bare body."""
        m = _HEADER.match(text)
        if m:
            g = int(m.group(1))
            if genus is not None and genus != g:
                raise ValueError(f"header says g={g}, expected g={genus}")
            genus, text = g, m.group(2)
        if genus is None:
            raise WordSyntaxError("mcg word without 'mcg g=<g>:' header")
        h = False
        chars = list(text)
        for tok in re.finditer(r"\S+", text):
            if tok.group() == "H":
                h = not h
                # blank the token out so error columns stay meaningful
                chars[tok.start()] = " "
        letters = parse_letters("".join(chars), "x", max_index=2 * genus + 1)
        return cls(genus, letters, h)

    def __len__(self) -> int:
        return len(self.letters) + int(self.h)

    def __eq__(self, other) -> bool:
        """Syntactic equality of normalized words (sound, not complete)."""
        if not isinstance(other, MCGWord):
            return NotImplemented
        return (self.genus, self.letters, self.h) == (other.genus, other.letters, other.h)

    def __hash__(self) -> int:
        return hash((self.genus, self.letters, self.h))

    def key(self) -> tuple:
        return (self.genus, self.h, self.letters)

    def __mul__(self, other: MCGWord) -> MCGWord:
        if self.genus != other.genus:
            raise ValueError(f"genus mismatch: {self.genus} vs {other.genus}")
        return MCGWord(self.genus, self.letters + other.letters, self.h ^ other.h)

    def __pow__(self, k: int) -> MCGWord:
        base = self if k >= 0 else self.inverse()
        return MCGWord(self.genus, base.letters * abs(k), base.h and k % 2 == 1)

    def inverse(self) -> MCGWord:
        return MCGWord(self.genus, [(i, -s) for i, s in reversed(self.letters)], self.h)

    def conjugate(self, by: MCGWord) -> MCGWord:
        return by.inverse() * self * by

    def is_identity_word(self) -> bool:
        return not self.letters and not self.h

    def format(self, header: bool = False) -> str:
        if self.h:
            body = "H" if not self.letters else "H " + format_letters(self.letters, "x")
        else:
            body = format_letters(self.letters, "x")
        return f"mcg g={self.genus}: {body}" if header else body

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"MCGWord.parse({self.format(header=True)!r})"


def lift_braid(b: BraidWord, genus: int | None = None) -> MCGWord:
    """The canonical lift ``s_j -> x_j`` of a braid in ``B_{2g+2}``."""
    if b.n % 2 or b.n < 2:
        raise ValueError(f"B_{b.n} is not B_(2g+2) for any genus")
    g = (b.n - 2) // 2
    if genus is not None and genus != g:
        raise ValueError(f"B_{b.n} lifts to genus {g}, not {genus}")
    return MCGWord(g, b.letters)


def symplectic_form(genus: int) -> np.ndarray:
    """Standard form on the basis ``a1, b1, ..., ag, bg`` with ``<a_i, b_i> = 1``."""
    J = np.zeros((2 * genus, 2 * genus), dtype=object)
    for i in range(genus):
        J[2 * i, 2 * i + 1] = 1
        J[2 * i + 1, 2 * i] = -1
    return J


def pairing(x, y, J) -> int:
    return int(np.dot(x, J.dot(y)))


@dataclass(frozen=True)
class ChainCurves:
    """Homology classes of the chain ``c1..c_{2g+1}`` lying over the segments
    ``[j, j+1]`` of the hyperelliptic model ``w^2 = prod (z - i)``."""

    genus: int
    classes: tuple[tuple[int, ...], ...]

    @classmethod
    def standard(cls, genus: int) -> ChainCurves:
        g = genus
        dim = 2 * g
        def a(i):
            v = [0] * dim
            v[2 * (i - 1)] = 1
            return v
        def b(i):
            v = [0] * dim
            v[2 * (i - 1) + 1] = 1
            return v
        vecs = []
        for j in range(1, 2 * g + 2):
            if j == 1:
                v = a(1)
            elif j == 2 * g + 1:
                v = a(g)
            elif j % 2 == 0:
                v = b(j // 2)
            else:
                i = (j - 1) // 2
                v = [x - y for x, y in zip(a(i + 1), a(i))]
            vecs.append(tuple(v))
        return cls(genus, tuple(vecs))

    @property
    def form(self) -> np.ndarray:
        return symplectic_form(self.genus)

    def gram(self) -> np.ndarray:
        J = self.form
        V = np.array(self.classes, dtype=object).reshape(len(self.classes), 2 * self.genus)
        return V.dot(J).dot(V.T)

    def validate(self) -> list[str]:
        """Return a list of violated conditions (empty when the chain is valid)."""
        problems = []
        if len(self.classes) != 2 * self.genus + 1:
            problems.append("need 2g+1 curves")
            return problems
        G = self.gram()
        n = len(self.classes)
        for i in range(n):
            for j in range(n):
                if abs(i - j) == 1 and abs(G[i, j]) != 1:
                    problems.append(f"<c{i+1}, c{j+1}> = {G[i, j]}, expected +-1")
                if abs(i - j) >= 2 and G[i, j] != 0:
                    problems.append(f"<c{i+1}, c{j+1}> = {G[i, j]}, expected 0")
        if self.genus:
            from .smith import invariant_factors

            if invariant_factors([list(v) for v in self.classes]) != [1] * (2 * self.genus):
                problems.append("classes do not span the homology lattice")
        return problems


@lru_cache(maxsize=None)
def _transvections(genus: int, chain: ChainCurves) -> dict[tuple[int, int], np.ndarray]:
    J = symplectic_form(genus)
    out = {}
    for idx, v in enumerate(chain.classes, start=1):
        v = np.array(v, dtype=object)
        # x -> x + <x, v> v  with  <x, v> = x^T J v
        outer = np.outer(v, J.dot(v))
        I = np.identity(2 * genus, dtype=object)
        out[(idx, 1)] = I + outer
        out[(idx, -1)] = I - outer
    return out


def identity_matrix(genus: int) -> np.ndarray:
    return np.identity(2 * genus, dtype=object)


def symplectic_rep(w: MCGWord, chain: ChainCurves | None = None) -> np.ndarray:
    """Integer matrix of the action of ``w`` on first homology.

    The map is a homomorphism: the matrix of ``x1 x2`` is ``M1 @ M2``
    (functional composition on column vectors).
    """
    chain = chain or ChainCurves.standard(w.genus)
    mats = _transvections(w.genus, chain)
    M = identity_matrix(w.genus)
    for letter in w.letters:
        M = M.dot(mats[letter])
    if w.h:
        M = -M
    return M


def is_symplectic(M: np.ndarray, genus: int) -> bool:
    J = symplectic_form(genus)
    return bool((M.T.dot(J).dot(M) == J).all())


def puncture_permutation(w: MCGWord) -> tuple[int, ...]:
    """Permutation of the ``2g + 2`` branch points (``H`` acts trivially)."""
    p = list(range(1, 2 * w.genus + 3))
    for i, _ in w.letters:
        p = [i + 1 if x == i else i if x == i + 1 else x for x in p]
    return tuple(p)


def abelianization_order(genus: int) -> int:
    """Order of the cyclic abelianization of ``Map_g^h`` (all ``x_i`` map to one class)."""
    from math import gcd

    return gcd(4 * (2 * genus + 1), (2 * genus + 1) * (2 * genus + 2))


def abelian_image(w: MCGWord) -> int:
    """Image in ``Z/N``; ``H`` equals the palindrome word of length ``2(2g+1)``."""
    n = abelianization_order(w.genus)
    total = sum(s for _, s in w.letters) + (2 * (2 * w.genus + 1) if w.h else 0)
    return total % n


def coxeter_element(chain: Sequence[int], genus: int) -> MCGWord:
    """``(T1)(T2 T1)(T3 T2 T1)...(Tn ... T1)`` for the chain of twists ``x_{i1}..x_{in}``."""
    chain = list(chain)
    if not chain:
        raise ValueError("empty chain")
    for i in chain:
        if not 1 <= i <= 2 * genus + 1:
            raise ValueError(f"chain index {i} outside 1..{2 * genus + 1}")
    letters: list[Letter] = []
    for k in range(1, len(chain) + 1):
        letters.extend((chain[j], 1) for j in range(k - 1, -1, -1))
    return MCGWord(genus, letters)


def hyperelliptic_relator(genus: int) -> MCGWord:
    """``x1 ... x_{2g+1} x_{2g+1} ... x1``, equal to ``H`` in ``Map_g^h``."""
    up = [(i, 1) for i in range(1, 2 * genus + 2)]
    return MCGWord(genus, up + up[::-1])


def chain_cycle(genus: int) -> MCGWord:
    return MCGWord(genus, [(i, 1) for i in range(1, 2 * genus + 2)])


@dataclass(frozen=True)
class RelatorCheck:
    group: str
    relator: str
    representation: str
    expected: str
    holds: bool


@dataclass(frozen=True)
class RelatorReport:
    genus: int
    checks: tuple[RelatorCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.holds for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "genus": self.genus,
            "ok": self.ok,
            "checks": [
                {
                    "group": c.group,
                    "relator": c.relator,
                    "representation": c.representation,
                    "expected": c.expected,
                    "holds": c.holds,
                }
                for c in self.checks
            ],
        }


def verify_presentation_relators(genus: int, chain: ChainCurves | None = None) -> RelatorReport:
    """Evaluate the relators of ``B_{2g+2}``, ``Map_{0,2g+2}`` and ``Map_g^h``
    in every available representation."""
    if genus < 1:
        raise ValueError("genus must be at least 1")
    g = genus
    n = 2 * g + 2
    chain = chain or ChainCurves.standard(g)
    I = identity_matrix(g)
    checks: list[RelatorCheck] = []
    B = f"B_{n}"
    M0 = f"Map_0,{n}"
    Mh = f"Map_{g}^h"

    def sym(w):
        return symplectic_rep(w, chain)

    def eq(A, C):
        return bool((A == C).all())

    for name, lhs, rhs in artin_relations(n):
        checks.append(RelatorCheck(B, name, "artin action", "equal", braid_equals(lhs, rhs)))
        ml, mr = MCGWord(g, lhs.letters), MCGWord(g, rhs.letters)
        checks.append(
            RelatorCheck(Mh, name.replace("s", "x"), "symplectic", "equal", eq(sym(ml), sym(mr)))
        )
        checks.append(
            RelatorCheck(
                Mh, name.replace("s", "x"), "puncture permutation", "equal",
                puncture_permutation(ml) == puncture_permutation(mr),
            )
        )

    pal_braid = BraidWord(n, hyperelliptic_relator(g).letters)
    cyc_braid = BraidWord(n, chain_cycle(g).letters) ** n
    pal_name = f"s1 ... s{n - 1} s{n - 1} ... s1"
    cyc_name = f"(s1 ... s{n - 1})^{n}"
    ident = tuple(range(1, n + 1))
    for name, word in ((pal_name, pal_braid), (cyc_name, cyc_braid)):
        lifted = MCGWord(g, word.letters)
        checks.append(
            RelatorCheck(M0, name, "puncture permutation", "identity", puncture_permutation(lifted) == ident)
        )
        M = sym(lifted)
        checks.append(RelatorCheck(M0, name, "symplectic mod +-1", "+-identity", eq(M, I) or eq(M, -I)))
        # relator of the quotient only: must not vanish in the braid group
        checks.append(
            RelatorCheck(B, name, "artin action", "not identity", not braid_equals(word, BraidWord(n)))
        )

    pal = hyperelliptic_relator(g)
    checks.append(RelatorCheck(Mh, pal_name.replace("s", "x") + " = H", "symplectic", "-identity", eq(sym(pal), -I)))
    checks.append(
        RelatorCheck(Mh, cyc_name.replace("s", "x") + " = 1", "symplectic", "identity", eq(sym(chain_cycle(g) ** n), I))
    )
    Hw = MCGWord.involution(g)
    checks.append(RelatorCheck(Mh, "H^2 = 1", "symplectic", "identity", eq(sym(Hw) .dot(sym(Hw)), I)))
    for i in range(1, 2 * g + 2):
        x = MCGWord.twist(g, i)
        checks.append(
            RelatorCheck(Mh, f"H x{i} = x{i} H", "symplectic", "equal", eq(sym(Hw).dot(sym(x)), sym(x).dot(sym(Hw))))
        )
    for i in range(1, 2 * g + 2):
        checks.append(RelatorCheck(Mh, f"x{i} preserves the form", "symplectic", "symplectic", is_symplectic(sym(MCGWord.twist(g, i)), g)))
    return RelatorReport(genus, tuple(checks))
