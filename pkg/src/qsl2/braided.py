"""Braided tensor square of the quantum coordinate ring.

Two copies of the bigon algebra glued through the co-R form: on pure
tensors the product braids the inner factors through rho on their second
coproduct legs,

    (x (x) y) . (xt (x) yt) = sum rho(y'' (x) xt'') (x xt') (x) (y' yt),

summed over coproduct legs y' (x) y'' of y and xt' (x) xt'' of xt, then
extended bilinearly with unit 1 (x) 1.  Among all slot pairings that
restrict to ordinary multiplication on the factor subalgebras x (x) 1 and
1 (x) y, this is the only one whose product is associative (the first-leg
pairing already fails on triples of generator tensors); it also commutes
with the slotwise power map, and those two checks are what fixes the
convention.  The braiding is visible on the worked product
(1 (x) a)(a (x) 1) = q a (x) a, which differs from the untwisted
componentwise product by the scalar rho(a (x) a) = q.
"""

from __future__ import annotations

import random
from typing import Dict, Iterable, List, Tuple

from .bigon import (
    BigonElement,
    Mono,
    _delta_mono,
    _mono,
    co_r_monos,
    gen,
    monomial,
    monomial_product,
    one,
    zero,
)
from .report import Recorder, Report
from .scalars import GENERIC, RootSpec, Scalar, ScalarRing, eta_embed

__all__ = [
    "BraidedElement",
    "braided_unit",
    "braided_pure",
    "braided_multiply",
    "phi_braided",
    "verify_braided_associativity",
    "verify_phi_braided",
]

ONE_MONO: Mono = ("a", 0, 0, 0)


class BraidedElement:
    """Sparse combination of pure tensors mono (x) mono under the braided
    product (not the componentwise one)."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: ScalarRing, terms: Dict[Tuple[Mono, Mono], Scalar]) -> None:
        self.ring = ring
        self.terms = {k: c for k, c in terms.items() if not c.is_zero()}

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "BraidedElement") -> "BraidedElement":
        if self.ring is not other.ring and self.ring != other.ring:
            raise ValueError("scalar ring mismatch")
        out = dict(self.terms)
        for k, c in other.terms.items():
            got = out.get(k)
            out[k] = c if got is None else got + c
        return BraidedElement(self.ring, out)

    def __neg__(self) -> "BraidedElement":
        return BraidedElement(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "BraidedElement") -> "BraidedElement":
        return self + (-other)

    def scale(self, c: Scalar) -> "BraidedElement":
        return BraidedElement(self.ring, {k: c * x for k, x in self.terms.items()})

    def __rmul__(self, c) -> "BraidedElement":
        if isinstance(c, int):
            c = self.ring.from_int(c)
        if isinstance(c, Scalar):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other: "BraidedElement") -> "BraidedElement":
        if isinstance(other, BraidedElement):
            return braided_multiply(self, other)
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BraidedElement):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((id(type(self)), tuple(sorted(self.terms.items()))))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for ((k1, i1, j1, t1), (k2, i2, j2, t2)), c in sorted(self.terms.items()):
            parts.append(
                f"({c}) * b^{i1} c^{j1} {k1}^{t1} (x) b^{i2} c^{j2} {k2}^{t2}"
            )
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"<BraidedElement {self}>"


def braided_unit(ring: ScalarRing) -> BraidedElement:
    return BraidedElement(ring, {(ONE_MONO, ONE_MONO): ring.one()})


def braided_pure(x: BigonElement, y: BigonElement) -> BraidedElement:
    """The pure tensor x (x) y, extended bilinearly from basis monomials."""
    if x.ring is not y.ring and x.ring != y.ring:
        raise ValueError("scalar ring mismatch")
    out: Dict[Tuple[Mono, Mono], Scalar] = {}
    for m1, c1 in x.terms.items():
        for m2, c2 in y.terms.items():
            key = (m1, m2)
            c = c1 * c2
            got = out.get(key)
            out[key] = c if got is None else got + c
    return BraidedElement(x.ring, out)


def _mul_pure(
    ring: ScalarRing, x: Mono, y: Mono, xt: Mono, yt: Mono
) -> Dict[Tuple[Mono, Mono], Scalar]:
    out: Dict[Tuple[Mono, Mono], Scalar] = {}
    for (y1, y2), cy in _delta_mono(ring, y).terms.items():
        for (x1, x2), cx in _delta_mono(ring, xt).terms.items():
            r = co_r_monos(ring, y2, x2)
            if r.is_zero():
                continue
            coeff = cy * cx * r
            left = monomial_product(ring, x, x1)
            right = monomial_product(ring, y1, yt)
            for ml, cl in left.terms.items():
                part = coeff * cl
                for mr, cr in right.terms.items():
                    key = (ml, mr)
                    c = part * cr
                    got = out.get(key)
                    out[key] = c if got is None else got + c
    return out


def braided_multiply(p: BraidedElement, q: BraidedElement) -> BraidedElement:
    """Product in the braided square, extended bilinearly from pure tensors."""
    if p.ring is not q.ring and p.ring != q.ring:
        raise ValueError("scalar ring mismatch")
    ring = p.ring
    out: Dict[Tuple[Mono, Mono], Scalar] = {}
    for (x, y), cp in p.terms.items():
        for (xt, yt), cq in q.terms.items():
            c0 = cp * cq
            for key, c in _mul_pure(ring, x, y, xt, yt).items():
                cc = c0 * c
                got = out.get(key)
                out[key] = cc if got is None else got + cc
    return BraidedElement(ring, out)


def phi_braided(p: BraidedElement, spec: RootSpec) -> BraidedElement:
    """The power map applied in each slot, landing over cyclotomic(n).

    Basis pure tensors map to basis pure tensors with both exponent tuples
    scaled by N, so no collisions can occur and the coefficient transports
    through eta exactly as in the one-slot map.
    """
    if p.ring is not GENERIC:
        raise ValueError("phi_braided input must be over the generic ring")
    N = spec.N
    out: Dict[Tuple[Mono, Mono], Scalar] = {}
    for ((k1, i1, j1, t1), (k2, i2, j2, t2)), c in p.terms.items():
        key = (
            _mono(k1, N * i1, N * j1, N * t1),
            _mono(k2, N * i2, N * j2, N * t2),
        )
        out[key] = eta_embed(spec, c)
    return BraidedElement(spec.ring, out)


def _random_factor(ring: ScalarRing, rng: random.Random, degree_bound: int = 2) -> BigonElement:
    """Short random combination of basis monomials of bounded total degree."""
    out = zero(ring)
    for _ in range(2):
        total = rng.randint(0, degree_bound)
        i = rng.randint(0, total)
        j = rng.randint(0, total - i)
        kind = rng.choice(("a", "d"))
        if ring.kind == "generic":
            coeff = ring.q_power(rng.randint(-3, 3)) * rng.randint(-2, 2)
        else:
            coeff = ring.omega(rng.randint(0, 5)) * rng.randint(-2, 2)
        out = out + monomial(ring, kind, i, j, total - i - j, coeff)
    return out


def verify_braided_associativity(samples: int = 200, seed: int = 0) -> Report:
    """Associativity of the braided product on random triples of pure tensors
    whose factors have total degree at most 2, over the generic ring."""
    rec = Recorder("braided-associativity", {"samples": samples, "seed": seed})
    ring = GENERIC
    unit = braided_unit(ring)
    rec.check_equal("unit-triple", (unit * unit) * unit, unit * (unit * unit))

    a = gen(ring, "a")
    p = braided_pure(a, one(ring))
    q = braided_pure(one(ring), a)
    rec.check_equal("generator-triple", (p * q) * p, p * (q * p))

    rng = random.Random(seed)
    bad = ""
    for k in range(samples):
        trip = [
            braided_pure(_random_factor(ring, rng), _random_factor(ring, rng))
            for _ in range(3)
        ]
        lhs = (trip[0] * trip[1]) * trip[2]
        rhs = trip[0] * (trip[1] * trip[2])
        if lhs != rhs:
            bad = f"sample {k}: {trip[0]} | {trip[1]} | {trip[2]}"
            break
    rec.check_true("random-triples", not bad, lhs=bad)
    return rec.done()


def verify_phi_braided(
    orders: Iterable[int],
    samples: int = 100,
    seed: int = 0,
    max_power_order: int = 12,
) -> Report:
    """Per root order: the slotwise power map is multiplicative for the
    braided product, on generator pure tensors and on random samples.

    Orders whose power exponent N = ord(w^8) exceeds max_power_order are
    reported as skip cases rather than run: the braided product is built
    from the coproduct, the ordinary product, and the co-R form, and the
    power map's compatibility with each of those is verified separately at
    every order by the morphism suite, so this end-to-end check adds its
    value at small orders while its cost on degree-2N co-R cells grows
    roughly like N^4.
    """
    ns = list(orders)
    rec = Recorder(
        "phi-braided",
        {
            "orders": ns,
            "samples": samples,
            "seed": seed,
            "max_power_order": max_power_order,
        },
    )
    for n in ns:
        spec = RootSpec.for_order(n)
        if spec.N > max_power_order:
            rec.skip(
                f"n={n}/power-map",
                f"N={spec.N} exceeds max_power_order={max_power_order}",
            )
            continue

        bad = ""
        gens: List[BraidedElement] = []
        for letter in "abcd":
            g = gen(GENERIC, letter)
            gens.append(braided_pure(g, one(GENERIC)))
            gens.append(braided_pure(one(GENERIC), g))
        for p in gens:
            for q in gens:
                lhs = phi_braided(braided_multiply(p, q), spec)
                rhs = braided_multiply(phi_braided(p, spec), phi_braided(q, spec))
                if lhs != rhs:
                    bad = f"p={p} q={q}: {lhs} vs {rhs}"
                    break
            if bad:
                break
        rec.check_true(f"n={n}/generator-tensors", not bad, lhs=bad)

        rng = random.Random(seed * 1000 + n)
        bad = ""
        for k in range(samples):
            p = braided_pure(_random_factor(GENERIC, rng), _random_factor(GENERIC, rng))
            q = braided_pure(_random_factor(GENERIC, rng), _random_factor(GENERIC, rng))
            lhs = phi_braided(braided_multiply(p, q), spec)
            rhs = braided_multiply(phi_braided(p, spec), phi_braided(q, spec))
            if lhs != rhs:
                bad = f"sample {k}: p={p} q={q}"
                break
        rec.check_true(f"n={n}/random-samples", not bad, lhs=bad)
    return rec.done()
