import random

import pytest

from oracles import brute_hom_count, determinantal_invariants
from monodromy.braid import BraidWord
from monodromy.contexts import BraidGroup
from monodromy.factorization import CuspidalFactorization, Factorization, hurwitz_move, simultaneous_conjugate
from monodromy.freegroup import FreeWord, GroupPresentation, surface_presentation
from monodromy.smith import abelian_invariants, smith_diagonal
from monodromy.vankampen import (
    MonodromyInput,
    abelianization,
    count_homs,
    fingerprint,
    presentation,
    tietze_simplify,
)

s1 = BraidWord.generator(2, 1)


def conic():
    return presentation(MonodromyInput(2, (s1, s1), projective=True))


def rand_presentation(rng, ngens=2, nrel=2, maxlen=5):
    rels = []
    for _ in range(nrel):
        rels.append(FreeWord((rng.randrange(1, ngens + 1), rng.choice((1, -1))) for _ in range(rng.randrange(1, maxlen + 1))))
    return GroupPresentation(ngens, tuple(rels))


def test_free_presentation():
    p = presentation(MonodromyInput(3, ()))
    assert p.ngens == 3 and p.relators == ()
    assert abelianization(p) == (0, 0, 0)


def test_conic():
    p = conic()
    assert abelianization(p) == (2,)
    assert count_homs(p, 3) == 4
    # oracle: brute-force assignment over S3
    assert brute_hom_count(p.ngens, [r.letters for r in p.relators], 3) == 4


def test_affine_single_half_twist():
    p = presentation(MonodromyInput(2, (s1,)))
    assert abelianization(p) == (0,)
    simple = tietze_simplify(p)
    assert simple.ngens == 1 and simple.relators == ()


def test_strand_mismatch():
    with pytest.raises(ValueError):
        MonodromyInput(3, (s1,))


@pytest.mark.parametrize("g", [1, 2, 3])
def test_surface_group(g):
    assert abelianization(surface_presentation(g)) == (0,) * (2 * g)


def test_count_homs_examples():
    assert count_homs(GroupPresentation(2, ()), 3) == 36
    a2 = GroupPresentation(1, (FreeWord.gen(1, 2),))
    assert count_homs(a2, 3) == 4
    with pytest.raises(ValueError):
        count_homs(a2, 7)
    with pytest.raises(ValueError):
        count_homs(a2, 0)


def test_count_homs_matches_brute_force():
    rng = random.Random(3)
    for _ in range(25):
        p = rand_presentation(rng, ngens=rng.choice((1, 2, 3)), nrel=rng.randrange(0, 3))
        k = rng.choice((2, 3))
        expected = brute_hom_count(p.ngens, [r.letters for r in p.relators], k)
        assert count_homs(p, k) == expected
        assert count_homs(p, k, threads=4) == expected


def test_smith_known_matrix():
    assert smith_diagonal([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == [2, 6, 12]


def test_smith_against_minor_oracle():
    rng = random.Random(8)
    for _ in range(200):
        r, c = rng.randrange(1, 5), rng.randrange(1, 5)
        M = [[rng.randrange(-6, 7) for _ in range(c)] for _ in range(r)]
        assert tuple(abelian_invariants(M, c)) == determinantal_invariants(M, c)


def test_tietze_examples():
    p = GroupPresentation(2, (FreeWord.parse("g1 g2^-1"),))
    assert tietze_simplify(p) == GroupPresentation(1, ())
    a2 = FreeWord.gen(1, 2)
    dup = GroupPresentation(2, (a2, FreeWord.gen(2) * a2 * FreeWord.gen(2, -1), a2.inverse()))
    # the conjugate and the inverse are the same relator up to cyclic reduction
    assert tietze_simplify(dup, budget=0).relators == (a2,)


def test_tietze_preserves_fingerprints():
    rng = random.Random(12)
    for _ in range(40):
        p = rand_presentation(rng, ngens=rng.choice((2, 3)), nrel=rng.randrange(1, 4))
        q = tietze_simplify(p)
        assert q.ngens <= p.ngens
        assert fingerprint(q).as_tuple() == fingerprint(p).as_tuple()


def test_tietze_deterministic():
    p = conic()
    assert tietze_simplify(p) == tietze_simplify(p)


def rand_cuspidal(rng, d=3, max_factors=4):
    pairs = []
    for _ in range(rng.randrange(1, max_factors + 1)):
        w = BraidWord(d, [(rng.randrange(1, d), rng.choice((1, -1))) for _ in range(rng.randrange(0, 3))])
        pairs.append((w, rng.choice((1, 2, 3))))
    return CuspidalFactorization(d, tuple(pairs))


def test_fingerprint_hurwitz_invariant():
    rng = random.Random(21)
    B = BraidGroup(3)
    for _ in range(30):
        cf = rand_cuspidal(rng)
        proj = rng.random() < 0.5
        f = Factorization(B, cf.factor_braids())
        base = fingerprint(presentation(MonodromyInput(3, f.factors, proj)))
        neighbors = [hurwitz_move(f, i, d) for i in range(1, len(f)) for d in (1, -1)]
        neighbors.append(simultaneous_conjugate(f, BraidWord.generator(3, rng.randrange(1, 3))))
        for g in neighbors:
            assert fingerprint(presentation(MonodromyInput(3, g.factors, proj))) == base


def test_from_cuspidal_is_unregenerated():
    cf = CuspidalFactorization(2, ((BraidWord(2), 3),))
    m = MonodromyInput.from_cuspidal(cf)
    assert len(m.factors) == 1 and m.factors[0] == BraidWord.generator(2, 1) ** 3


def test_fingerprint_json():
    rec = fingerprint(conic())
    assert rec.to_dict() == {"abelianization": [2], "hom_counts": {"2": 2, "3": 4}}
