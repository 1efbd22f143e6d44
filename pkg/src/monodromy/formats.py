"""JSON file formats for factorizations, fibrations, monodromy inputs and
certificates."""

from __future__ import annotations

import json
from pathlib import Path

from .braid import BraidWord, compose_all
from .contexts import BraidGroup, GroupContext, context_from_name
from .factorization import CuspidalFactorization, Factorization, regenerate
from .freegroup import WordSyntaxError
from .lefschetz import LefschetzFibration, TwistFactor
from .mcg import MCGWord
from .search import Move
from .vankampen import MonodromyInput


class InputError(ValueError):
    """Malformed input file; the message names the offending location."""


def read_json(path) -> dict:
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise InputError(f"{path}: top-level JSON value must be an object")
    return data


def dumps(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _parse(parse, text, where: str):
    if not isinstance(text, str):
        raise InputError(f"{where}: expected a word string, got {text!r}")
    try:
        return parse(text)
    except WordSyntaxError as exc:
        raise InputError(f"{where}: {exc}") from None
    except ValueError as exc:
        raise InputError(f"{where}: {exc}") from None


def _require(data: dict, field: str, where: str):
    if field not in data:
        raise InputError(f"{where}: missing field {field!r}")
    return data[field]


# ---------------------------------------------------------------- factorizations


def load_factorization(data: dict, where: str = "input") -> tuple[Factorization, object | None]:
    """``{"context": ..., "factors": [...], "expected_product": ...}``."""
    try:
        ctx = context_from_name(_require(data, "context", where))
    except ValueError as exc:
        raise InputError(f"{where}: {exc}") from None
    factors = [_parse(ctx.parse, s, f"{where}: factors[{k}]") for k, s in enumerate(_require(data, "factors", where))]
    expected = None
    if data.get("expected_product") is not None:
        expected = _parse(ctx.parse, data["expected_product"], f"{where}: expected_product")
    return Factorization(ctx, factors), expected


def dump_factorization(f: Factorization, expected=None) -> dict:
    out = {"context": f.context.name, "factors": f.format()}
    if expected is not None:
        out["expected_product"] = f.context.format(expected)
    return out


# ---------------------------------------------------------------- fibrations


def load_fibration(data: dict, where: str = "input") -> LefschetzFibration:
    """``{"genus": g, "base": "disk"|"sphere", "phi": word, "factors": [{"conjugator", "orientation"}]}``."""
    genus = _require(data, "genus", where)
    if not isinstance(genus, int) or genus < 0:
        raise InputError(f"{where}: genus must be a non-negative integer")
    parse = lambda s: MCGWord.parse(s, genus)  # noqa: E731
    phi = _parse(parse, data.get("phi") or "e", f"{where}: phi")
    factors = []
    for k, item in enumerate(_require(data, "factors", where)):
        loc = f"{where}: factors[{k}]"
        if not isinstance(item, dict):
            raise InputError(f"{loc}: expected an object with conjugator and orientation")
        conj = _parse(parse, item.get("conjugator") or "e", f"{loc}.conjugator")
        orientation = item.get("orientation", 1)
        if orientation not in (1, -1):
            raise InputError(f"{loc}.orientation: must be 1 or -1")
        factors.append(TwistFactor(conj, orientation))
    try:
        return LefschetzFibration(genus, _require(data, "base", where), tuple(factors), phi)
    except ValueError as exc:
        raise InputError(f"{where}: {exc}") from None


def dump_fibration(f: LefschetzFibration) -> dict:
    return {
        "genus": f.genus,
        "base": f.base,
        "phi": f.phi.format(),
        "factors": [{"conjugator": t.conjugator.format(), "orientation": t.orientation} for t in f.factors],
    }


# ---------------------------------------------------------------- monodromy


def load_monodromy(data: dict, where: str = "input") -> tuple[MonodromyInput, BraidWord | None]:
    """Either ``{"degree", "factors": [braid words]}`` or
    ``{"degree", "cuspidal": [{"conjugator", "exponent"}], "regenerate": bool}``;
    ``"projective"`` defaults to false.  A ``"context": "braid:<d>"`` factorization file is also accepted.
    """
    if "context" in data:
        f, expected = load_factorization(data, where)
        if not isinstance(f.context, BraidGroup):
            raise InputError(f"{where}: van Kampen input needs a braid context")
        return MonodromyInput(f.context.n, f.factors, bool(data.get("projective", False))), expected
    d = _require(data, "degree", where)
    if not isinstance(d, int) or d < 1:
        raise InputError(f"{where}: degree must be a positive integer")
    parse = lambda s: BraidWord.parse(s, d)  # noqa: E731
    projective = bool(data.get("projective", False))
    if "cuspidal" in data:
        pairs = []
        for k, item in enumerate(data["cuspidal"]):
            loc = f"{where}: cuspidal[{k}]"
            w = _parse(parse, item.get("conjugator") or "e", f"{loc}.conjugator")
            pairs.append((w, item.get("exponent", 1)))
        try:
            cf = CuspidalFactorization(d, tuple(pairs))
        except ValueError as exc:
            raise InputError(f"{where}: {exc}") from None
        if data.get("regenerate"):
            m = MonodromyInput(d, regenerate(cf).factors, projective)
        else:
            m = MonodromyInput.from_cuspidal(cf, projective)
    else:
        factors = [_parse(parse, s, f"{where}: factors[{k}]") for k, s in enumerate(_require(data, "factors", where))]
        m = MonodromyInput(d, tuple(factors), projective)
    expected = None
    if data.get("expected_product") is not None:
        expected = _parse(parse, data["expected_product"], f"{where}: expected_product")
    return m, expected


def monodromy_product(m: MonodromyInput) -> BraidWord:
    return compose_all(m.factors, m.degree)


# ---------------------------------------------------------------- certificates


def dump_certificate(source: Factorization, target: Factorization, moves) -> dict:
    ctx = source.context
    return {
        "context": ctx.name,
        "source": source.format(),
        "target": target.format(),
        "moves": [m.to_dict(ctx) for m in moves],
    }


def load_certificate(data: dict, where: str = "input") -> tuple[Factorization, Factorization, list[Move]]:
    try:
        ctx: GroupContext = context_from_name(_require(data, "context", where))
    except ValueError as exc:
        raise InputError(f"{where}: {exc}") from None
    src = [_parse(ctx.parse, s, f"{where}: source[{k}]") for k, s in enumerate(_require(data, "source", where))]
    tgt = [_parse(ctx.parse, s, f"{where}: target[{k}]") for k, s in enumerate(_require(data, "target", where))]
    moves = []
    for k, item in enumerate(_require(data, "moves", where)):
        try:
            moves.append(Move.from_dict(item, ctx))
        except (KeyError, ValueError, TypeError, WordSyntaxError) as exc:
            raise InputError(f"{where}: moves[{k}]: {exc}") from None
    return Factorization(ctx, src), Factorization(ctx, tgt), moves
