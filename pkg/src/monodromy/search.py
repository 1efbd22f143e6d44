"""Budgeted breadth-first search over Hurwitz orbits.

Moves are generated in a fixed order: Hurwitz moves by (position, direction),
then conjugations by (conjugator index, direction), then rotations.  Nodes are
expanded in batches whose size does not depend on the worker count, and the
results of a batch are merged in queue order, so node counts, orbit listings
and certificates are identical for any number of threads.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .factorization import (
    FORWARD,
    INVERSE,
    ContextMismatchError,
    Factorization,
    available_modes,
    hurwitz_move,
    invariants,
    rotate,
    simultaneous_conjugate,
)

BATCH = 64


@dataclass(frozen=True)
class Move:
    """One step of a certificate.

    ``kind`` is ``"hurwitz"`` (``index``, ``direction``), ``"conjugate"``
    (``by``: a group element) or ``"rotate"`` (``direction``).
    """

    kind: str
    index: int = 0
    direction: int = FORWARD
    by: object = None

    def apply(self, f: Factorization) -> Factorization:
        if self.kind == "hurwitz":
            return hurwitz_move(f, self.index, self.direction)
        if self.kind == "conjugate":
            return simultaneous_conjugate(f, self.by)
        if self.kind == "rotate":
            return rotate(f, self.direction)
        raise ValueError(f"unknown move kind {self.kind!r}")

    def inverse(self, ctx) -> Move:
        if self.kind == "conjugate":
            return Move("conjugate", by=ctx.invert(self.by))
        return Move(self.kind, self.index, -self.direction)

    def to_dict(self, ctx) -> dict:
        if self.kind == "hurwitz":
            return {"kind": "hurwitz", "index": self.index, "direction": _dirname(self.direction)}
        if self.kind == "conjugate":
            return {"kind": "conjugate", "by": ctx.format(self.by)}
        return {"kind": "rotate", "direction": _dirname(self.direction)}

    @classmethod
    def from_dict(cls, data: dict, ctx) -> Move:
        kind = data["kind"]
        if kind == "conjugate":
            return cls("conjugate", by=ctx.parse(data["by"]))
        direction = {"forward": FORWARD, "inverse": INVERSE}[data.get("direction", "forward")]
        return cls(kind, int(data.get("index", 0)), direction)


def _dirname(d: int) -> str:
    return "forward" if d == FORWARD else "inverse"


def replay(f: Factorization, moves: Sequence[Move]) -> Factorization:
    for m in moves:
        f = m.apply(f)
    return f


@dataclass(frozen=True)
class MoveSet:
    conjugators: tuple = ()
    rotation: bool = False

    @classmethod
    def build(cls, ctx, conjugation: bool, conjugators=None, rotation: bool = False) -> MoveSet:
        if not conjugation:
            return cls((), rotation)
        gens = list(ctx.generators() if conjugators is None else conjugators)
        seen = set()
        out = []
        for c in gens:
            for x in (c, ctx.invert(c)):
                k = ctx.key(x)
                if k not in seen and k != ctx.key(ctx.identity()):
                    seen.add(k)
                    out.append(x)
        return cls(tuple(out), rotation)

    def moves(self, n: int) -> list[Move]:
        out = [Move("hurwitz", i, d) for i in range(1, n) for d in (FORWARD, INVERSE)]
        out += [Move("conjugate", by=c) for c in self.conjugators]
        if self.rotation and n > 1:
            out += [Move("rotate", direction=d) for d in (FORWARD, INVERSE)]
        return out


def _expand(node: Factorization, moves: list[Move]) -> list[tuple[Move, Factorization]]:
    return [(m, m.apply(node)) for m in moves]


class _Expander:
    def __init__(self, threads: int):
        self.threads = max(1, int(threads))
        self.pool = ThreadPoolExecutor(self.threads) if self.threads > 1 else None

    def __call__(self, nodes, moves):
        if self.pool is None:
            return [_expand(x, moves) for x in nodes]
        return list(self.pool.map(_expand, nodes, [moves] * len(nodes)))

    def close(self):
        if self.pool is not None:
            self.pool.shutdown()

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()


@dataclass
class OrbitResult:
    members: list[Factorization]
    exhausted: bool
    explored: int

    @property
    def keys(self) -> frozenset:
        return frozenset(m.key for m in self.members)

    def __len__(self) -> int:
        return len(self.members)


def orbit_enumerate(
    f: Factorization,
    budget: int,
    *,
    conjugation: bool = False,
    conjugators=None,
    rotation: bool = False,
    threads: int = 1,
) -> OrbitResult:
    """Everything reachable from ``f`` while expanding at most ``budget`` nodes.

    ``exhausted`` is True iff every discovered node was expanded, i.e. the
    returned set is closed under the moves.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    moves = MoveSet.build(f.context, conjugation, conjugators, rotation).moves(len(f))
    seen = {f.key}
    members = [f]
    queue = deque([f])
    explored = 0
    with _Expander(threads) as expand:
        while queue and explored < budget:
            batch = [queue.popleft() for _ in range(min(len(queue), budget - explored, BATCH))]
            explored += len(batch)
            for results in expand(batch, moves):
                for _, g in results:
                    if g.key not in seen:
                        seen.add(g.key)
                        members.append(g)
                        queue.append(g)
    return OrbitResult(members, not queue, explored)


@dataclass(frozen=True)
class Witness:
    invariant: str
    first: object
    second: object


@dataclass(frozen=True)
class EquivalenceVerdict:
    """``status`` is ``"equivalent"``, ``"inequivalent"`` or ``"unknown"``."""

    status: str
    certificate: tuple[Move, ...] = ()
    witness: Witness | None = None
    explored: int = 0

    @property
    def equivalent(self) -> bool:
        return self.status == "equivalent"

    def to_dict(self, ctx) -> dict:
        out = {"status": self.status, "explored": self.explored}
        if self.status == "equivalent":
            out["certificate"] = [m.to_dict(ctx) for m in self.certificate]
        if self.witness is not None:
            out["witness"] = {
                "invariant": self.witness.invariant,
                "first": _jsonable(self.witness.first),
                "second": _jsonable(self.witness.second),
            }
        return out


def _jsonable(x):
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (int, str, float, bool)) or x is None:
        return x
    return repr(x)


def witness_for(f1: Factorization, f2: Factorization, modes: Sequence[str]) -> Witness | None:
    for mode in modes:
        a = invariants(f1, [mode])[mode]
        b = invariants(f2, [mode])[mode]
        if a != b:
            return Witness(mode, a, b)
    return None


def hurwitz_equivalent(
    f1: Factorization,
    f2: Factorization,
    *,
    conjugation: bool = False,
    conjugators=None,
    rotation: bool = False,
    budget: int = 10_000,
    threads: int = 1,
    witness_modes: Sequence[str] | None = None,
) -> EquivalenceVerdict:
    """Decide, within ``budget`` node expansions, whether ``f2`` lies in the
    orbit of ``f1``.

    ``conjugation`` adds simultaneous conjugation by ``conjugators`` (default:
    the context's generators, which generate all conjugations); passing a
    list restricts conjugators to the subgroup it generates.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    ctx = f1.context
    if ctx != f2.context:
        raise ContextMismatchError(f"{ctx.name} vs {f2.context.name}")
    if len(f1) != len(f2):
        return EquivalenceVerdict("inequivalent", witness=Witness("length", len(f1), len(f2)))
    if f1.key == f2.key:
        return EquivalenceVerdict("equivalent", ())

    modes = witness_modes if witness_modes is not None else available_modes(ctx, conjugation, rotation)
    w = witness_for(f1, f2, modes)
    if w is not None:
        return EquivalenceVerdict("inequivalent", witness=w)

    moves = MoveSet.build(ctx, conjugation, conjugators, rotation).moves(len(f1))
    # parent[key] = (parent key, move applied to the parent)
    parents = ({f1.key: None}, {f2.key: None})
    queues = (deque([f1]), deque([f2]))
    explored = 0
    meet = None
    with _Expander(threads) as expand:
        while explored < budget and meet is None:
            if not queues[0] or not queues[1]:
                break
            side = 0 if len(queues[0]) <= len(queues[1]) else 1
            q, mine, other = queues[side], parents[side], parents[1 - side]
            batch = [q.popleft() for _ in range(min(len(q), budget - explored, BATCH))]
            explored += len(batch)
            for node, results in zip(batch, expand(batch, moves)):
                for m, g in results:
                    if g.key in mine:
                        continue
                    mine[g.key] = (node.key, m)
                    q.append(g)
                    if g.key in other:
                        meet = g.key
                        break
                if meet is not None:
                    break

    if meet is not None:
        forward = _path(parents[0], meet)
        backward = [m.inverse(ctx) for m in reversed(_path(parents[1], meet))]
        return EquivalenceVerdict("equivalent", tuple(forward + backward), explored=explored)

    for side in (0, 1):
        if not queues[side] and ctx.exact:
            # the orbit of f is closed and misses the other factorization
            sizes = [None, None]
            sizes[side] = len(parents[side])
            return EquivalenceVerdict(
                "inequivalent", witness=Witness("orbit exhaustion", sizes[0], sizes[1]), explored=explored
            )
    return EquivalenceVerdict("unknown", explored=explored)


def _path(parents: dict, key) -> list[Move]:
    out = []
    while parents[key] is not None:
        key, m = parents[key]
        out.append(m)
    out.reverse()
    return out
