"""Pairing oracle values, worked out by hand from the generator table and the
two extension laws, then frozen here."""

import random

import pytest

from qsl2.bigon import BigonElement, coproduct, from_word, gen, one
from qsl2.pairing import (
    E,
    F,
    K,
    KINV,
    hopf_pair,
    lusztig_frobenius,
    pair_alt,
    parse_uword,
    render_uword,
    u_coproduct,
    u_coproduct_word,
    u_counit,
    verify_pairing_tables,
    verify_dual_frobenius,
)
from qsl2.scalars import GENERIC, cyclotomic_ring

R = GENERIC


def q(e):
    return R.q_power(e)


def test_generator_table_frozen():
    assert hopf_pair(gen(R, "a"), (K,)) == q(2)
    assert hopf_pair(gen(R, "d"), (K,)) == q(-2)
    assert hopf_pair(gen(R, "a"), (KINV,)) == q(-2)
    assert hopf_pair(gen(R, "d"), (KINV,)) == q(2)
    assert hopf_pair(gen(R, "b"), (E(1),)) == R.one()
    assert hopf_pair(gen(R, "c"), (F(1),)) == R.one()
    assert hopf_pair(gen(R, "b"), (K,)).is_zero()
    assert hopf_pair(gen(R, "a"), (E(1),)).is_zero()
    assert hopf_pair(gen(R, "b"), (F(1),)).is_zero()
    assert hopf_pair(gen(R, "b"), (E(2),)).is_zero()
    assert hopf_pair(gen(R, "c"), (F(3),)).is_zero()


def test_empty_word_is_counit():
    assert hopf_pair(gen(R, "a"), ()) == R.one()
    assert hopf_pair(gen(R, "d"), ()) == R.one()
    assert hopf_pair(gen(R, "b"), ()).is_zero()
    assert hopf_pair(one(R), ()) == R.one()
    assert u_counit(R, (K, KINV)) == R.one()
    assert u_counit(R, (K, E(2))).is_zero()


def test_k_times_kinv_acts_like_counit():
    for letter in "abcd":
        x = gen(R, letter)
        want = R.one() if letter in ("a", "d") else R.zero()
        assert hopf_pair(x, (K, KINV)) == want
        assert hopf_pair(x, (KINV, K)) == want
    x = from_word(R, ("d", "a", "b")) + gen(R, "c", 2)
    # counit kills every monomial containing b or c
    assert hopf_pair(x, (K, KINV)).is_zero()


def test_power_closed_forms_frozen():
    assert hopf_pair(gen(R, "a", 3), (K,)) == q(6)
    assert hopf_pair(gen(R, "d", 2), (K,)) == q(-4)
    assert hopf_pair(gen(R, "a", 3), (KINV,)) == q(-6)
    assert hopf_pair(gen(R, "b", 2), (E(2),)) == R.one()
    assert hopf_pair(gen(R, "b", 2), (E(1),)).is_zero()
    assert hopf_pair(gen(R, "b", 2), (E(3),)).is_zero()
    assert hopf_pair(gen(R, "c", 3), (F(3),)) == R.one()
    assert hopf_pair(gen(R, "c", 3), (E(3),)).is_zero()


def test_divided_power_from_repeated_generator():
    # E(1)^2 = (q^2 + q^-2) E(2), visible through the pairing against b^2
    assert hopf_pair(gen(R, "b", 2), (E(1), E(1))) == q(2) + q(-2)
    assert hopf_pair(gen(R, "c", 2), (F(1), F(1))) == q(2) + q(-2)


def test_word_order_matches_weight_relation():
    # K E = q^4 E K in the dual algebra, so the paired values differ by q^4
    lhs = hopf_pair(gen(R, "b"), (K, E(1)))
    rhs = hopf_pair(gen(R, "b"), (E(1), K))
    assert lhs == q(2)
    assert rhs == q(-2)
    assert lhs == q(4) * rhs


def test_ef_commutator_relation():
    # (q^2 - q^-2)(<x,EF> - <x,FE>) = <x,K> - <x,K^-1>
    factor = q(2) - q(-2)
    for x in (gen(R, "a"), gen(R, "d"), gen(R, "b"), from_word(R, ("a", "d", "b", "c"))):
        lhs = factor * (hopf_pair(x, (E(1), F(1))) - hopf_pair(x, (F(1), E(1))))
        rhs = hopf_pair(x, (K,)) - hopf_pair(x, (KINV,))
        assert lhs == rhs
    assert hopf_pair(gen(R, "a"), (E(1), F(1))) == R.one()
    assert hopf_pair(gen(R, "d"), (F(1), E(1))) == R.one()


def test_u_coproduct_frozen():
    assert u_coproduct(K) == [(0, (K,), (K,))]
    assert u_coproduct(KINV) == [(0, (KINV,), (KINV,))]
    assert u_coproduct(E(1)) == [(0, (E(1),), (K,)), (0, (), (E(1),))]
    assert u_coproduct(F(1)) == [(0, (KINV,), (F(1),)), (0, (F(1),), ())]
    assert u_coproduct(E(2)) == [
        (0, (E(2),), (K, K)),
        (2, (E(1),), (E(1), K)),
        (0, (), (E(2),)),
    ]
    assert u_coproduct(F(2)) == [
        (0, (KINV, KINV), (F(2),)),
        (2, (F(1), KINV), (F(1),)),
        (0, (F(2),), ()),
    ]


def test_word_coproduct_concatenates_legs():
    terms = u_coproduct_word((K, E(1)))
    assert (0, (K, E(1)), (K, K)) in terms
    assert (0, (K,), (K, E(1))) in terms
    assert len(terms) == 2


def test_pairing_splits_across_word_concatenation():
    rng = random.Random(7)
    words = [(), (K,), (E(1),), (F(2), K), (KINV, E(2))]
    for _ in range(25):
        x = from_word(R, tuple(rng.choice("abcd") for _ in range(rng.randint(0, 3))))
        w1 = rng.choice(words)
        w2 = rng.choice(words)
        total = R.zero()
        for (m1, m2), c in coproduct(x).terms.items():
            lv = hopf_pair(BigonElement(R, {m1: R.one()}), w1)
            if lv.is_zero():
                continue
            rv = hopf_pair(BigonElement(R, {m2: R.one()}), w2)
            total = total + c * lv * rv
        assert total == hopf_pair(x, w1 + w2)


def test_evaluation_orders_agree_random():
    rng = random.Random(11)
    for _ in range(60):
        x = from_word(R, tuple(rng.choice("abcd") for _ in range(rng.randint(0, 3))))
        w = []
        for _ in range(rng.randint(0, 3)):
            g = rng.choice(("K", "Kinv", "E", "F"))
            if g == "K":
                w.append(K)
            elif g == "Kinv":
                w.append(KINV)
            else:
                w.append((g, rng.randint(1, 3)))
        assert hopf_pair(x, tuple(w)) == pair_alt(x, tuple(w))


def test_lusztig_frobenius_frozen():
    assert lusztig_frobenius((K,), 2) == (-1, (K,))
    assert lusztig_frobenius((K,), 3) == (1, (K,))
    assert lusztig_frobenius((KINV, K), 2) == (1, (KINV, K))
    assert lusztig_frobenius((E(3),), 3) == (1, (E(1),))
    assert lusztig_frobenius((E(4),), 3) is None
    assert lusztig_frobenius((E(6), F(3), K), 3) == (1, (E(2), F(1), K))
    assert lusztig_frobenius((), 5) == (1, ())
    assert lusztig_frobenius((F(2), K, K), 2) == (1, (F(1), K, K))


def test_uword_text_roundtrip():
    w = (K, KINV, E(2), F(10))
    assert render_uword(w) == "K K^-1 E(2) F(10)"
    assert parse_uword(render_uword(w)) == w
    assert parse_uword("1") == ()
    assert render_uword(()) == "1"
    with pytest.raises(ValueError):
        parse_uword("E(0)")
    with pytest.raises(ValueError):
        parse_uword("G(2)")


def test_pairing_tables_suite():
    report = verify_pairing_tables(m_max=4, p_max=4)
    assert report.failed == 0
    assert report.passed == len(report.cases) > 0


def test_dual_frobenius_direct_small_case():
    # n = 3 has N = 3: pairing a^3 with K at w equals pairing a with K at w^9
    n, N = 3, 3
    cyclo = cyclotomic_ring(n)
    lhs_generic = hopf_pair(gen(R, "a", N), (K,))
    rhs_generic = hopf_pair(gen(R, "a"), (K,))
    lhs = sum(
        (cyclo.omega(e % n) * c for e, c in lhs_generic.data.items()), cyclo.zero()
    )
    rhs = sum(
        (cyclo.omega(N * N * e % n) * c for e, c in rhs_generic.data.items()),
        cyclo.zero(),
    )
    assert lhs == rhs == cyclo.one()


def test_dual_frobenius_suite_small():
    report = verify_dual_frobenius([1, 3, 4, 16], samples=25, seed=1)
    assert report.failed == 0
    assert report.passed == len(report.cases) == 12
