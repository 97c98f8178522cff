"""Quantum torus oracles: reordering scalars, power map, reflection, suites."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qsl2.qcomb import chebyshev_eval
from qsl2.scalars import GENERIC, RootSpec, Scalar, cyclotomic_ring
from qsl2.torus import (
    TorusAlgebra,
    frobenius_F_N,
    normal_mul,
    reflect,
    verify_freshman_dream,
    verify_monogon_noncentrality,
    verify_torus_chebyshev,
    weyl_coefficients,
)

V = GENERIC.omega(8)  # the unit used throughout: v = q^4 = w^8


def two_gen(central=0, v=V):
    """x2 x1 = v x1 x2, i.e. P[1][2] = -1."""
    return TorusAlgebra([[0, -1], [1, 0]], v, central=central)


# -- construction validation ---------------------------------------------------


def test_rejects_bad_P_and_units():
    with pytest.raises(ValueError):
        TorusAlgebra([[0, 1], [1, 0]], V)  # not antisymmetric
    with pytest.raises(ValueError):
        TorusAlgebra([[0, 1, 0], [-1, 0, 0]], V)  # not square
    with pytest.raises(ZeroDivisionError):
        TorusAlgebra([[0, 1], [-1, 0]], GENERIC.one() + GENERIC.omega(2))


# -- frozen reordering oracles --------------------------------------------------


def test_single_swap_picks_up_v():
    alg = two_gen()
    x1, x2 = alg.gen(1), alg.gen(2)
    assert normal_mul(x2, x1) == V * (x1 * x2)
    assert normal_mul(x1, x2) == alg.monomial((1, 1))


def test_generator_inverses():
    alg = two_gen()
    assert alg.gen(1) * alg.gen(1, -1) == alg.one()
    assert alg.gen(1, -1) * alg.gen(1) == alg.one()


def test_multi_swap_exponent():
    # x^(1,2) * x^(2,1): two x2's cross two x1's, so v^4 total.
    alg = two_gen()
    lhs = alg.monomial((1, 2)) * alg.monomial((2, 1))
    assert lhs == alg.monomial((3, 3), coeff=V ** 4)


def test_binomial_square():
    alg = two_gen()
    x, y = alg.gen(1), alg.gen(2)
    sq = (x + y) ** 2
    assert sq == x ** 2 + (1 + V) * (x * y) + y ** 2
    assert sq.terms[((1, 1), ())] == GENERIC.one() + V


def test_central_variables_commute():
    alg = two_gen(central=1)
    x, z = alg.gen(1), alg.central_var(1)
    assert x * z == z * x
    assert (x + z) ** 2 == x ** 2 + 2 * (x * z) + z ** 2


def test_rendering():
    alg = two_gen(central=1)
    el = alg.monomial((2, -1), (3,), coeff=GENERIC.from_int(2)) + alg.one()
    assert str(el) == "(1*w^0) * x1^0 x2^0 + (2*w^0) * x1^2 x2^-1 z1^3"
    assert str(alg.zero()) == "0"


# -- algebra laws (randomized) ---------------------------------------------------


def random_element(alg, rng, size=3):
    out = alg.zero()
    for _ in range(size):
        exps = [rng.randint(-2, 2) for _ in range(alg.r)]
        degs = [rng.randint(0, 1) for _ in range(alg.central)]
        coeff = Scalar(GENERIC, {rng.randint(-4, 4): rng.randint(-3, 3)})
        out = out + alg.monomial(exps, degs, coeff)
    return out


def test_associativity_and_distributivity():
    rng = random.Random(7)
    alg = TorusAlgebra([[0, -1, 2], [1, 0, 1], [-2, -1, 0]], V, central=1)
    for _ in range(40):
        a, b, c = (random_element(alg, rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


# -- power map -------------------------------------------------------------------


def test_frobenius_on_generators_and_centrals():
    N = 3
    target = two_gen(central=1)
    source = TorusAlgebra([[0, -1], [1, 0]], V ** (N * N), central=1)
    assert frobenius_F_N(source.gen(1), N, target) == target.gen(1, N)
    assert frobenius_F_N(source.one(), N, target) == target.one()
    z = target.central_var(1)
    # T_3(z) = z^3 - 3z, so z^2 maps to (z^3 - 3z)^2 = z^6 - 6 z^4 + 9 z^2.
    img = frobenius_F_N(source.central_var(1, 2), N, target)
    assert img == z ** 6 - 6 * (z ** 4) + 9 * (z ** 2)
    assert img == chebyshev_eval(3, z, target.one()) ** 2


def test_frobenius_is_multiplicative():
    rng = random.Random(11)
    for N in (2, 3, 5):
        target = two_gen(central=1)
        source = TorusAlgebra([[0, -1], [1, 0]], V ** (N * N), central=1)
        for _ in range(20):
            m1 = random_element(source, rng, size=2)
            m2 = random_element(source, rng, size=2)
            lhs = frobenius_F_N(m1 * m2, N, target)
            rhs = frobenius_F_N(m1, N, target) * frobenius_F_N(m2, N, target)
            assert lhs == rhs


def test_frobenius_rejects_wrong_unit():
    target = two_gen()
    source = TorusAlgebra([[0, -1], [1, 0]], V ** 3)
    with pytest.raises(ValueError):
        frobenius_F_N(source.gen(1), 2, target)


# -- reflection and Weyl normalization ---------------------------------------------


def test_reflect_frozen():
    alg = two_gen()
    x1, x2 = alg.gen(1), alg.gen(2)
    assert reflect(x1) == alg.gen(1, -1)
    # sigma(x1 x2) = x2^-1 x1^-1 = v * x1^-1 x2^-1
    assert reflect(x1 * x2) == V * alg.monomial((-1, -1))
    assert reflect(alg.monomial((1, 0), coeff=GENERIC.omega(3))) == alg.monomial(
        (-1, 0), coeff=GENERIC.omega(-3)
    )


def test_reflect_is_an_anti_involution():
    rng = random.Random(23)
    alg = TorusAlgebra([[0, 2], [-2, 0]], GENERIC.omega(4), central=1)
    for _ in range(30):
        a, b = random_element(alg, rng), random_element(alg, rng)
        assert reflect(a * b) == reflect(b) * reflect(a)
        assert reflect(reflect(a)) == a


def test_weyl_coefficients_frozen():
    alg = TorusAlgebra([[0, -1], [1, 0]], GENERIC.omega(4))
    x1, x2 = alg.gen(1), alg.gen(2)
    # S((1,1)) = -1 and v = w^4, so the Weyl coefficient of x1 x2 is w^-2.
    assert weyl_coefficients(x1 * x2) == {((1, 1), ()): GENERIC.omega(-2)}
    assert weyl_coefficients(x1) == {((1, 0), ()): GENERIC.one()}


def test_weyl_coefficients_bar_invariance():
    # Reflection acts on Weyl coefficients purely by the bar involution.
    rng = random.Random(31)
    alg = TorusAlgebra([[0, -1], [1, 0]], GENERIC.omega(4), central=1)
    for _ in range(30):
        a = random_element(alg, rng)
        wa = weyl_coefficients(a)
        wra = weyl_coefficients(reflect(a))
        assert set(wra) == {((tuple(-t for t in e)), d) for (e, d) in wa}
        for (e, d), c in wa.items():
            assert wra[(tuple(-t for t in e), d)] == c.conj()


def test_weyl_rejects_half_integral_exponent():
    alg = TorusAlgebra([[0, -1], [1, 0]], GENERIC.omega(3))
    with pytest.raises(ValueError):
        weyl_coefficients(alg.gen(1) * alg.gen(2))


# -- root-of-unity collapse suites ----------------------------------------------


def test_freshman_dream_small_orders():
    report = verify_freshman_dream(range(1, 17))
    assert report.failed == 0
    by_id = {c.id: c.status for c in report.cases}
    assert by_id["n=16/binomial-collapse"] == "pass"
    assert by_id["n=16/collapse-control"] == "skip"  # N = 2, no exponent to test
    assert by_id["n=5/collapse-control-M=2"] == "pass"


def test_freshman_dream_n5_has_controls():
    report = verify_freshman_dream([5])
    ids = {c.id: c.status for c in report.cases}
    assert ids["n=5/binomial-collapse"] == "pass"
    assert ids["n=5/collapse-control-M=2"] == "pass"
    assert ids["n=5/collapse-control-M=4"] == "pass"


def test_freshman_dream_explicit_n3():
    # n=3: N=3, u = w^8 = w^2 has order 3; interior Gauss binomials vanish.
    spec = RootSpec.for_order(3)
    ring = spec.ring
    alg = TorusAlgebra([[0, -1], [1, 0]], ring.omega(8))
    x, y = alg.gen(1), alg.gen(2)
    assert (x + y) ** 3 == x ** 3 + y ** 3
    assert (x + y) ** 2 != x ** 2 + y ** 2


def test_torus_chebyshev_small_orders():
    report = verify_torus_chebyshev(range(1, 13))
    assert report.failed == 0
    assert report.passed >= 24


def test_torus_chebyshev_n16_explicit():
    # N = 2, so T_2(s) = s^2 - 2 and q^4 = -1: the mixed terms of
    # (x + 1/x + y)^2 cancel against the -2.
    spec = RootSpec.for_order(16)
    ring = spec.ring
    alg = TorusAlgebra([[0, -1], [1, 0]], ring.omega(8))
    x, xinv, y = alg.gen(1), alg.gen(1, -1), alg.gen(2)
    X = x + xinv + y
    assert X * X - 2 * alg.one() == alg.gen(1, 2) + alg.gen(1, -2) + alg.gen(2, 2)


def test_monogon_commutator():
    report = verify_monogon_noncentrality(4)
    assert report.failed == 0
    assert {c.status for c in report.cases} == {"pass"}


def test_monogon_m1_frozen():
    # x w - w x = (1 - q^4) y w for x = y + z.
    alg = TorusAlgebra([[0, 1], [-1, 0]], V, central=1)
    w_, y_, z_ = alg.gen(1), alg.gen(2), alg.central_var(1)
    x_ = y_ + z_
    lhs = x_ * w_ - w_ * x_
    assert lhs == (GENERIC.one() - V) * (y_ * w_)
    assert not (w_ * x_ - x_ * w_).is_zero()
