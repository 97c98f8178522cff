"""Oracles for q-integers, Gaussian binomials, and Chebyshev polynomials."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qsl2.intpoly import IntPolynomial
from qsl2.qcomb import (
    chebyshev_T,
    chebyshev_eval,
    gauss_row_at,
    qbinom,
    qbinom_at,
    qint,
    verify_root_identities,
)
from qsl2.scalars import GENERIC, RootSpec, cyclotomic_ring


def w(e):
    return GENERIC.omega(e)


def test_qint_frozen_values():
    assert qint(0).is_zero()
    assert qint(1).is_one()
    assert qint(2) == w(2) + w(-2)
    assert qint(3) == w(4) + w(0) + w(-4)
    assert qint(-3) == -qint(3)


def test_qbinom_frozen_values():
    assert qbinom(4, 2) == IntPolynomial([1, 1, 2, 1, 1])
    assert qbinom(3, 1) == IntPolynomial([1, 1, 1])
    assert qbinom(6, 0) == IntPolynomial([1])
    assert qbinom(6, 6) == IntPolynomial([1])
    assert qbinom(3, 5).is_zero()
    assert qbinom(3, -1).is_zero()


def test_qbinom_pascal_identity_as_polynomials():
    for n in range(1, 13):
        for k in range(0, n + 1):
            lhs = qbinom(n, k)
            rhs = IntPolynomial.monomial(k) * qbinom(n - 1, k) + qbinom(n - 1, k - 1)
            assert lhs == rhs, (n, k)


def test_qbinom_symmetry():
    for n in range(1, 10):
        for k in range(0, n + 1):
            assert qbinom(n, k) == qbinom(n, n - k)


def test_gauss_row_matches_product_formula_generic_base():
    q = GENERIC.q_power(1)
    for n in range(0, 9):
        row = gauss_row_at(n, q)
        for k in range(0, n + 1):
            assert row[k] == qbinom_at(n, k, q), (n, k)


def test_chebyshev_frozen_values():
    assert chebyshev_T(0) == IntPolynomial([2])
    assert chebyshev_T(1) == IntPolynomial([0, 1])
    assert chebyshev_T(2) == IntPolynomial([-2, 0, 1])
    assert chebyshev_T(3) == IntPolynomial([0, -3, 0, 1])
    assert chebyshev_T(4) == IntPolynomial([2, 0, -4, 0, 1])
    assert chebyshev_T(5) == IntPolynomial([0, 5, 0, -5, 0, 1])


@pytest.mark.parametrize("m", range(0, 21))
def test_chebyshev_power_sum_characterization(m):
    # T_m(x + 1/x) = x^m + x^-m, checked in the commutative Laurent ring Z[w, w^-1].
    val = chebyshev_eval(m, w(1) + w(-1), GENERIC.one())
    assert val == w(m) + w(-m)


@given(st.integers(0, 12), st.dictionaries(st.integers(-3, 3), st.integers(-3, 3), max_size=3))
@settings(max_examples=40, deadline=None)
def test_chebyshev_eval_agrees_with_coefficient_form(m, terms):
    from qsl2.scalars import Scalar

    x = Scalar(GENERIC, terms)
    one = GENERIC.one()
    assert chebyshev_eval(m, x, one) == chebyshev_T(m).evaluate(x, one)


def test_vanishing_row_at_order_five():
    spec = RootSpec.for_order(5)
    base = spec.ring.omega(8)
    row = gauss_row_at(spec.N, base)
    assert row[0].is_one() and row[spec.N].is_one()
    assert all(row[k].is_zero() for k in range(1, spec.N))


def test_vanishing_fails_at_wrong_base():
    # At base q'^2 (order N/2 when N is even) the interior does not vanish.
    ring = cyclotomic_ring(16)
    row = gauss_row_at(2, ring.omega(4))  # base of order 4, not 2
    assert not row[1].is_zero()


def test_root_identities_all_pass_small_orders():
    rep = verify_root_identities(list(range(1, 17)))
    assert rep.failed == 0, [c.id for c in rep.cases if c.status == "fail"]
    assert rep.passed == len(rep.cases)
