"""Quantum integers, Gaussian binomials, and power-sum Chebyshev polynomials.

Conventions (w is the ground variable with q = w^2):

* [m]_q = (q^m - q^-m) / (q - q^-1), a symmetric Laurent polynomial.
* The Gaussian binomial gauss(n, k) is taken in the product normalization
  prod_{i=0}^{k-1} (1 - q^(n-i)) / (1 - q^(i+1)); every division is exact, so
  the result is an honest polynomial in the base with nonnegative integer
  coefficients (e.g. gauss(4, 2) = 1 + q + 2q^2 + q^3 + q^4).
* chebyshev_T(m) is the power-sum normalization: T_0 = 2, T_1 = x,
  T_m = x T_(m-1) - T_(m-2), characterized by T_m(x + 1/x) = x^m + x^-m.
"""

from __future__ import annotations

from typing import Any, List

from .intpoly import IntPolynomial
from .report import Recorder, Report
from .scalars import GENERIC, RootSpec, Scalar, cyclic_ring, specialize

__all__ = [
    "IntPolynomial",
    "qint",
    "qbinom",
    "qbinom_at",
    "chebyshev_T",
    "chebyshev_eval",
    "gauss_row_at",
    "verify_root_identities",
]


def qint(m: int) -> Scalar:
    """The balanced q-integer [m] as a generic scalar; [-m] = -[m]."""
    if m < 0:
        return -qint(-m)
    return Scalar(GENERIC, {2 * (m - 1 - 2 * t): 1 for t in range(m)})


_one = IntPolynomial([1])


def qbinom(n: int, k: int) -> IntPolynomial:
    """Gaussian binomial as a polynomial in the base, by the exact product formula."""
    if k < 0 or k > n:
        return IntPolynomial()
    result = _one
    for i in range(k):
        result = result * (_one - IntPolynomial.monomial(n - i))
        result = result.divexact(_one - IntPolynomial.monomial(i + 1))
    return result


def qbinom_at(n: int, k: int, base: Scalar) -> Scalar:
    """gauss(n, k) evaluated at a concrete (or generic) base."""
    return qbinom(n, k).evaluate(base, base.ring.one())


def gauss_row_at(n: int, base: Scalar) -> List[Scalar]:
    """Row n of the Gaussian Pascal triangle at a fixed base.

    Uses gauss(n, k) = base^k * gauss(n-1, k) + gauss(n-1, k-1) row by row;
    this is an independent route to the same values as the product formula
    (the two are cross-checked in the test suite rather than merged).
    """
    one = base.ring.one()
    powers = [one]
    for _ in range(n):
        powers.append(powers[-1] * base)
    row = [one]
    for m in range(1, n + 1):
        prev = row
        row = [one]
        for k in range(1, m):
            row.append(powers[k] * prev[k] + prev[k - 1])
        row.append(one)
    return row


_cheb_cache: List[IntPolynomial] = [IntPolynomial([2]), IntPolynomial([0, 1])]


def chebyshev_T(m: int) -> IntPolynomial:
    """Power-sum Chebyshev polynomial T_m (T_0 = 2)."""
    if m < 0:
        raise ValueError("chebyshev_T expects m >= 0")
    x = _cheb_cache[1]
    while len(_cheb_cache) <= m:
        _cheb_cache.append(x * _cheb_cache[-1] - _cheb_cache[-2])
    return _cheb_cache[m]


def chebyshev_eval(m: int, x: Any, one: Any) -> Any:
    """T_m(x) for x in any associative algebra with the given unit.

    Runs the defining recursion directly on algebra elements, so it needs
    only +, -, * and int * element.
    """
    if m < 0:
        raise ValueError("chebyshev_eval expects m >= 0")
    t_prev = 2 * one
    if m == 0:
        return t_prev
    t_cur = x
    for _ in range(m - 1):
        t_prev, t_cur = t_cur, x * t_cur - t_prev
    return t_cur


def verify_root_identities(orders: List[int]) -> Report:
    """Scalar facts at each root order n (w primitive, q = w^2, q' = w^8).

    Per order: the Gaussian binomial vanishing row at base q', the Chebyshev
    evaluation T_N(-w^4 - w^-4) = -(eta^4 + eta^-4), two eta power identities,
    the sign identity w^(4N) = (-1)^(Nprime+1), and w^(2*Nsecond) = 1.
    """
    rec = Recorder("qfacts", {"orders": orders})
    for n in orders:
        spec = RootSpec.for_order(n)
        ring = spec.ring
        one = ring.one()
        qprime = ring.omega(8)

        # The Pascal-style row is built in the cyclic staging ring (monomial
        # products are O(1) there) and specialized once; specialization is a
        # ring hom, so the verdict agrees with computing in cyclotomic(n).
        stage = cyclic_ring(n)
        row = [specialize(v, n) for v in gauss_row_at(spec.N, stage.omega(8 % n))]
        spots = {k: qbinom_at(spec.N, k, qprime) for k in range(min(spec.N, 3) + 1)}
        row_ok = (
            row[0] == one
            and row[spec.N] == one
            and all(row[k].is_zero() for k in range(1, spec.N))
            and all(row[k] == v for k, v in spots.items())
        )
        bad = [k for k in range(1, spec.N) if not row[k].is_zero()]
        rec.check_true(
            f"n={n}/vanishing",
            row_ok,
            lhs=f"nonzero interior at k={bad}" if bad else "endpoint or cross-check mismatch",
            rhs="gauss(N,k) at base w^8 must vanish for 0<k<N and be 1 at k=0,N",
        )

        lhs = chebyshev_eval(spec.N, -(ring.omega(4) + ring.omega(-4)), one)
        rhs = -(spec.eta_power(4) + spec.eta_power(-4))
        rec.check_equal(f"n={n}/chebyshev-at-minus-q2-sum", lhs, rhs)

        half = spec.N * (spec.N - 1) // 2
        rec.check_equal(
            f"n={n}/eta-inverse-normalization",
            ring.q_power(1) ** (-half) * ring.omega(-spec.N),
            spec.eta_power(-1),
        )
        rec.check_equal(f"n={n}/eta-square", ring.q_power(1) ** (spec.N**2), spec.eta_power(2))
        rec.check_equal(
            f"n={n}/sign",
            ring.omega(4 * spec.N),
            ring.from_int((-1) ** (spec.Nprime + 1)),
        )
        rec.check_equal(f"n={n}/order-two-power", ring.omega(2 * spec.Nsecond), one)
    return rec.done()
