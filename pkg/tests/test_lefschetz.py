import random

import numpy as np
import pytest

from monodromy.factorization import hurwitz_move
from monodromy.fingerprints import symplectic_class_fingerprint
from monodromy.lefschetz import (
    LefschetzFibration,
    TwistFactor,
    fiber_sum,
    is_symplectic_type,
    kas_equivalent,
    product_image,
    twist_about,
    validate,
)
from monodromy.mcg import MCGWord, hyperelliptic_relator, symplectic_rep
from monodromy.search import replay


def rand_fibration(rng, g=2, base="disk", max_factors=6):
    factors = []
    for _ in range(rng.randrange(0, max_factors + 1)):
        c = MCGWord(g, [(rng.randrange(1, 2 * g + 2), rng.choice((1, -1))) for _ in range(rng.randrange(0, 4))])
        factors.append(TwistFactor(c, rng.choice((1, -1))))
    phi = MCGWord(g, [(rng.randrange(1, 2 * g + 2), 1) for _ in range(3)]) if base == "disk" else None
    return LefschetzFibration(g, base, tuple(factors), phi)


def test_validate_examples():
    assert validate(LefschetzFibration(2, "sphere")).ok
    one = LefschetzFibration(2, "sphere", (TwistFactor(MCGWord(2)),))
    report = validate(one)
    assert dict(report.checks)["symplectic"] is False
    fs = tuple(twist_about(2, i) for i, _ in hyperelliptic_relator(2).letters)
    disk = LefschetzFibration(2, "disk", fs, MCGWord.involution(2))
    assert dict(validate(disk).checks)["symplectic"] is True
    assert validate(disk).ok


def test_twist_factor_word():
    c = MCGWord.parse("x2 x3", 2)
    assert TwistFactor(c, -1).word() == MCGWord.twist(2, 1, -1).conjugate(c)
    with pytest.raises(ValueError):
        TwistFactor(c, 0)


def test_sphere_needs_trivial_phi():
    with pytest.raises(ValueError):
        LefschetzFibration(2, "sphere", (), MCGWord.twist(2, 1))
    with pytest.raises(ValueError):
        LefschetzFibration(2, "torus")


def test_symplectic_type():
    pos = LefschetzFibration(2, "disk", (twist_about(2, 1), twist_about(2, 3)))
    assert is_symplectic_type(pos)
    assert is_symplectic_type(LefschetzFibration(2, "sphere"))
    neg = LefschetzFibration(2, "disk", (twist_about(2, 1), twist_about(2, 3, -1)))
    assert not is_symplectic_type(neg)


def test_fiber_sum_identity_psi_concatenates():
    rng = random.Random(0)
    f1, f2 = rand_fibration(rng), rand_fibration(rng)
    out = fiber_sum(f1, f2, MCGWord(2))
    assert out.factors == f1.factors + f2.factors
    assert out.phi == f1.phi * f2.phi


def test_fiber_sum_errors():
    rng = random.Random(1)
    with pytest.raises(ValueError):
        fiber_sum(rand_fibration(rng, g=2), rand_fibration(rng, g=3), MCGWord(2))
    with pytest.raises(ValueError):
        fiber_sum(rand_fibration(rng), rand_fibration(rng, base="sphere"), MCGWord(2))


def test_fiber_sum_preserves_orientation_and_product_contract():
    rng = random.Random(7)
    for _ in range(30):
        f1, f2 = rand_fibration(rng), rand_fibration(rng)
        psi = MCGWord(2, [(rng.randrange(1, 6), rng.choice((1, -1))) for _ in range(4)], rng.random() < 0.5)
        out = fiber_sum(f1, f2, psi)
        assert [t.orientation for t in out.factors] == [t.orientation for t in f1.factors + f2.factors]
        if is_symplectic_type(f1) and is_symplectic_type(f2):
            assert is_symplectic_type(out)
        P, Pinv = symplectic_rep(psi), symplectic_rep(psi.inverse())
        expected = product_image(f1).dot(Pinv).dot(product_image(f2)).dot(P)
        assert (product_image(out) == expected).all()


def test_fiber_sum_associative_for_identity_psi():
    rng = random.Random(3)
    e = MCGWord(2)
    for _ in range(10):
        a, b, c = (rand_fibration(rng) for _ in range(3))
        left = fiber_sum(fiber_sum(a, b, e), c, e)
        right = fiber_sum(a, fiber_sum(b, c, e), e)
        assert left.factors == right.factors


def test_validate_of_valid_sum():
    fs = tuple(twist_about(2, i) for i, _ in hyperelliptic_relator(2).letters)
    f = LefschetzFibration(2, "disk", fs, MCGWord.involution(2))
    psi = MCGWord.parse("x2 x4^-1", 2)
    assert validate(fiber_sum(f, f, psi)).ok


def test_kas_examples():
    f = LefschetzFibration(2, "disk", (twist_about(2, 1), twist_about(2, 2), twist_about(2, 4)))
    v = kas_equivalent(f, f)
    assert v.status == "equivalent" and v.certificate == ()
    moved = hurwitz_move(f.as_factorization(), 2)
    g = LefschetzFibration(2, "disk", (f.factors[0], TwistFactor(f.factors[2].conjugator), TwistFactor(f.factors[1].conjugator * f.factors[2].word())))
    assert g.as_factorization().key == moved.key
    v = kas_equivalent(f, g, budget=1000)
    assert v.status == "equivalent" and len(v.certificate) == 1
    assert replay(f.as_factorization(), v.certificate).key == g.as_factorization().key
    with pytest.raises(ValueError):
        kas_equivalent(f, g, budget=0)


def test_kas_inequivalent_by_fingerprint():
    # twist curves c1, c2 meet once; c1, c3 are disjoint
    a = LefschetzFibration(2, "disk", (twist_about(2, 1), twist_about(2, 2)))
    b = LefschetzFibration(2, "disk", (twist_about(2, 1), twist_about(2, 3)))
    # oracle: the two products have different characteristic polynomials
    Pa = symplectic_rep(a.as_factorization().product)
    Pb = symplectic_rep(b.as_factorization().product)
    assert symplectic_class_fingerprint(Pa, 2)[0] != symplectic_class_fingerprint(Pb, 2)[0]
    v = kas_equivalent(a, b, budget=100)
    assert v.status == "inequivalent" and v.witness.invariant == "product_class"
    # one negative twist: factor fingerprints differ
    c = LefschetzFibration(2, "disk", (twist_about(2, 1), twist_about(2, 2, -1)))
    v = kas_equivalent(a, c, budget=100)
    assert v.status == "inequivalent"


def test_kas_conjugation_by_restricted_subgroup():
    a = LefschetzFibration(2, "disk", (twist_about(2, 1),))
    x2 = MCGWord.twist(2, 2)
    b = LefschetzFibration(2, "disk", (TwistFactor(x2),))
    v = kas_equivalent(a, b, budget=100, conjugators=[x2])
    assert v.status == "equivalent"
    v = kas_equivalent(a, b, budget=100, conjugators=[MCGWord.twist(2, 4)])
    assert v.status == "unknown"
