"""Ground ring oracles: cyclotomic polynomials, exact scalar arithmetic, roots."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qsl2.intpoly import IntPolynomial
from qsl2.scalars import (
    GENERIC,
    RootSpec,
    Scalar,
    cyclic_ring,
    cyclotomic_polynomial,
    cyclotomic_ring,
    multiplicative_order,
    order_of_power,
    parse_scalar,
    specialize,
)

# -- IntPolynomial ------------------------------------------------------------


def test_intpoly_basic_arithmetic():
    x = IntPolynomial.monomial(1)
    p = (x + IntPolynomial.constant(1)) * (x - IntPolynomial.constant(1))
    assert p == IntPolynomial([-1, 0, 1])
    assert p.degree == 2
    assert p.eval_int(3) == 8
    assert (p - p).is_zero()


def test_intpoly_divexact_exactness():
    a = IntPolynomial([2, 3, 1])   # (x+1)(x+2)
    b = IntPolynomial([1, 1])
    assert a.divexact(b) == IntPolynomial([2, 1])
    with pytest.raises(ValueError):
        IntPolynomial([1, 1, 1]).divexact(IntPolynomial([1, 1]))


@given(
    st.lists(st.integers(-9, 9), max_size=6),
    st.lists(st.integers(-9, 9), min_size=1, max_size=6),
)
def test_intpoly_mul_then_divexact(acs, bcs):
    a = IntPolynomial(acs)
    b = IntPolynomial(bcs)
    if b.is_zero():
        return
    assert (a * b).divexact(b) == a


# -- cyclotomic polynomials ---------------------------------------------------

FROZEN_CYCLOTOMICS = {
    1: [-1, 1],
    2: [1, 1],
    3: [1, 1, 1],
    4: [1, 0, 1],
    6: [1, -1, 1],
    8: [1, 0, 0, 0, 1],
    12: [1, 0, -1, 0, 1],
}


def test_cyclotomic_frozen_values():
    for n, coeffs in FROZEN_CYCLOTOMICS.items():
        assert cyclotomic_polynomial(n) == IntPolynomial(coeffs), f"Phi_{n}"


def _euler_phi(n):
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def test_cyclotomic_degree_and_product():
    for n in range(1, 65):
        phi = cyclotomic_polynomial(n)
        assert phi.degree == _euler_phi(n)
        assert phi.coeffs[-1] == 1  # monic
        # product of Phi_d over all divisors reassembles x^n - 1
        prod = IntPolynomial([1])
        for d in range(1, n + 1):
            if n % d == 0:
                prod = prod * cyclotomic_polynomial(d)
        assert prod == IntPolynomial.monomial(n) - IntPolynomial.constant(1)


# -- generic scalars ----------------------------------------------------------


def w(e):
    return GENERIC.omega(e)


def test_generic_scalar_basics():
    q = GENERIC.q_power(1)
    assert q == w(2)
    x = 3 * w(-2) + w(4)
    assert str(x) == "3*w^-2 + 1*w^4"
    assert x - x == GENERIC.zero()
    assert (w(2) * w(-2)).is_one()
    assert w(3) ** -2 == w(-6)
    assert x.conj() == 3 * w(2) + w(-4)


def test_generic_non_unit_rejected():
    with pytest.raises(ZeroDivisionError):
        (w(0) + w(2)).inverse()
    with pytest.raises(ZeroDivisionError):
        (2 * w(1)).inverse()


scalars_st = st.dictionaries(
    st.integers(-6, 6), st.integers(-5, 5), max_size=4
).map(lambda d: Scalar(GENERIC, d))


@given(scalars_st, scalars_st, scalars_st)
@settings(max_examples=60, deadline=None)
def test_generic_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)


@given(scalars_st, scalars_st, st.integers(1, 24))
@settings(max_examples=60, deadline=None)
def test_specialize_is_a_ring_hom(a, b, n):
    assert specialize(a + b, n) == specialize(a, n) + specialize(b, n)
    assert specialize(a * b, n) == specialize(a, n) * specialize(b, n)
    assert specialize(GENERIC.one(), n).is_one()


@given(scalars_st)
@settings(max_examples=40, deadline=None)
def test_conj_is_an_involution(a):
    assert a.conj().conj() == a


# -- cyclotomic scalars -------------------------------------------------------


def test_omega_squared_at_order_four_is_minus_one():
    got = specialize(GENERIC.q_power(1), 4)
    assert got == cyclotomic_ring(4).from_int(-1)
    assert str(got) == "cyc(4): -1"


def test_omega_has_exact_order_n():
    for n in range(1, 41):
        ring = cyclotomic_ring(n)
        assert multiplicative_order(ring.omega(1), n) == n


def test_cyclotomic_inverse_unit():
    ring = cyclotomic_ring(3)
    u = ring.from_int(1) + ring.omega(1)      # 1 + w, a unit: (1+w)(-w) = 1
    assert u.inverse() == -ring.omega(1)
    assert (u * u.inverse()).is_one()


def test_cyclotomic_non_unit_rejected():
    ring = cyclotomic_ring(4)
    with pytest.raises(ZeroDivisionError):
        (ring.from_int(1) + ring.omega(1)).inverse()   # 1 + i has norm 2


def test_conj_in_cyclotomic_ring():
    ring = cyclotomic_ring(12)
    x = ring.omega(5) + 2 * ring.omega(3)
    assert x.conj() == ring.omega(-5) + 2 * ring.omega(-3)
    assert x.conj().conj() == x


# -- order bookkeeping --------------------------------------------------------


def test_order_of_power_frozen_cases():
    assert order_of_power(12, 8) == 3
    assert order_of_power(5, 8) == 5
    assert order_of_power(16, 8) == 2
    assert order_of_power(8, 8) == 1
    assert order_of_power(24, 8) == 3
    assert order_of_power(1, 8) == 1


def test_order_of_power_matches_brute_force():
    for n in range(1, 65):
        ring = cyclotomic_ring(n)
        for k in (2, 4, 8):
            expected = multiplicative_order(ring.omega(1) ** k, n)
            assert order_of_power(n, k) == expected, (n, k)


def test_rootspec_fields():
    s = RootSpec.for_order(5)
    assert (s.N, s.Nprime, s.Nsecond) == (5, 5, 5)
    assert s.eta.is_one()   # eta = w^25 = 1 at n=5
    s = RootSpec.for_order(16)
    assert (s.N, s.Nprime, s.Nsecond) == (2, 4, 8)
    assert s.eta == s.ring.omega(4)
    s = RootSpec.for_order(8)
    assert (s.N, s.Nprime, s.Nsecond) == (1, 2, 4)
    assert s.eta == s.ring.omega(1)


def test_eta_eighth_power_is_always_one():
    # eta^4N = 1 fails (n=8: eta^4 = w^4 = -1); the robust relation is eta^8 = 1.
    for n in range(1, 65):
        s = RootSpec.for_order(n)
        assert s.eta_power(8).is_one(), n
    s8 = RootSpec.for_order(8)
    assert s8.eta_power(4 * s8.N) == s8.ring.from_int(-1)


# -- text round-trips ---------------------------------------------------------


@pytest.mark.parametrize(
    "text",
    [
        "0",
        "3*w^-2 + 1*w^4",
        "-2*w^0 + 1*w^3",
        "1*w^0",
        "cyc(6): 1 - 1*w",
        "cyc(1): 5",
        "cyc(12): 2 + 1*w - 3*w^3",
    ],
)
def test_scalar_text_round_trip(text):
    assert str(parse_scalar(text)) == text


def test_parse_tolerates_bare_powers():
    assert parse_scalar("w^4 - w") == w(4) - w(1)
    assert parse_scalar("cyc(5): w + 1") == cyclotomic_ring(5).omega(1) + 1


# -- cyclic staging ring --------------------------------------------------------


def test_cyclic_exponents_wrap():
    R = cyclic_ring(12)
    assert R.omega(1) ** 12 == 1
    assert R.omega(13) == R.omega(1)
    assert (R.omega(5) * 3 - R.omega(17) * 3).is_zero()
    assert R.omega(7).inverse() == R.omega(5)
    assert R.omega(7).conj() == R.omega(5)


@given(
    st.integers(2, 24),
    st.dictionaries(st.integers(-30, 30), st.integers(-4, 4), max_size=5),
    st.dictionaries(st.integers(-30, 30), st.integers(-4, 4), max_size=5),
)
@settings(max_examples=80, deadline=None)
def test_cyclic_to_cyclotomic_is_ring_hom(n, d1, d2):
    # Computing in Z[Z/n] and mapping the result into cyclotomic(n) must agree
    # with specializing the generic lifts directly.  This is what makes the
    # staging ring safe for final zero/equality checks.
    R = cyclic_ring(n)
    a_gen, b_gen = Scalar(GENERIC, d1), Scalar(GENERIC, d2)
    a_cyc, b_cyc = Scalar(R, d1), Scalar(R, d2)
    assert specialize(a_cyc * b_cyc, n) == specialize(a_gen * b_gen, n)
    assert specialize(a_cyc + b_cyc, n) == specialize(a_gen + b_gen, n)
    assert specialize(a_cyc.conj(), n) == specialize(a_gen.conj(), n)
