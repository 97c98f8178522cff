"""Ground scalars: exact Laurent polynomials in w and their cyclotomic images.

Everything downstream is linear over one of two rings:

* the generic ring Z[w, w^-1], with w an abstract invertible variable.  By
  convention w plays the role of a square root of the quantum parameter, so
  q = w^2 and all q-power coefficients appearing in the algebras have even
  w-exponent, while half-integer powers of q are odd w-exponents.  Elements
  are sparse exponent -> coefficient maps.

* cyclotomic(n) = Z[w] / Phi_n(w), where Phi_n is the n-th cyclotomic
  polynomial.  This is the image of the generic ring under "w is a primitive
  n-th root of unity".  Elements are integer coefficient vectors of length
  deg Phi_n in the basis 1, w, ..., w^(deg-1); the basis is free over Z, so
  equality of vectors is exact ring equality.  Using Phi_n (rather than
  w^n - 1) keeps the quotient an integral domain in which w has
  multiplicative order exactly n.

A third ring, cyclic(n) = Z[Z/n], is a private staging area: same sparse dict
representation as the generic ring but with exponents mod n.  Long root-of-
unity computations run there and get mapped into cyclotomic(n) (a ring
homomorphism) for the final equality check.

No floating point is used anywhere.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterator, Tuple

from .intpoly import IntPolynomial

__all__ = [
    "Scalar",
    "ScalarRing",
    "GenericRing",
    "CyclotomicRing",
    "CyclicRing",
    "GENERIC",
    "cyclotomic_ring",
    "cyclic_ring",
    "cyclotomic_polynomial",
    "specialize",
    "order_of_power",
    "multiplicative_order",
    "RootSpec",
    "eta_embed",
    "parse_scalar",
]

_cyclo_cache: Dict[int, IntPolynomial] = {}


def cyclotomic_polynomial(n: int) -> IntPolynomial:
    """The n-th cyclotomic polynomial, by exact division of w^n - 1.

    Phi_n = (w^n - 1) / prod(Phi_d for proper divisors d of n).  The division
    is exact by construction; IntPolynomial.divexact would raise otherwise.
    """
    if n < 1:
        raise ValueError("cyclotomic index must be >= 1")
    got = _cyclo_cache.get(n)
    if got is not None:
        return got
    num = IntPolynomial.monomial(n) - IntPolynomial.constant(1)
    for d in range(1, n):
        if n % d == 0:
            num = num.divexact(cyclotomic_polynomial(d))
    _cyclo_cache[n] = num
    return num


class ScalarRing:
    """Common interface for the scalar rings."""

    kind: str

    def zero(self) -> "Scalar":
        raise NotImplementedError

    def one(self) -> "Scalar":
        return self.from_int(1)

    def from_int(self, c: int) -> "Scalar":
        raise NotImplementedError

    def omega(self, e: int) -> "Scalar":
        """The monomial w^e."""
        raise NotImplementedError

    def q_power(self, e: int) -> "Scalar":
        """q^e = w^(2e)."""
        return self.omega(2 * e)

    def _norm_exp(self, e: int) -> int:
        """Canonical representative of a w-exponent (identity unless cyclic)."""
        return e


class GenericRing(ScalarRing):
    kind = "generic"

    _instance: "GenericRing | None" = None

    def __new__(cls) -> "GenericRing":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "GenericRing()"

    def zero(self) -> "Scalar":
        return Scalar(self, {})

    def from_int(self, c: int) -> "Scalar":
        return Scalar(self, {0: c} if c else {})

    def omega(self, e: int) -> "Scalar":
        return Scalar(self, {int(e): 1})


GENERIC = GenericRing()

_ring_cache: Dict[int, "CyclotomicRing"] = {}


class CyclotomicRing(ScalarRing):
    kind = "cyclotomic"

    def __init__(self, n: int) -> None:
        self.n = n
        self.modulus = cyclotomic_polynomial(n)
        self.dim = self.modulus.degree
        self._wpow: Dict[int, Tuple[int, ...]] = {}

    def __repr__(self) -> str:
        return f"CyclotomicRing({self.n})"

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, CyclotomicRing) and other.n == self.n

    def __hash__(self) -> int:
        return hash(("CyclotomicRing", self.n))

    def zero(self) -> "Scalar":
        return Scalar(self, (0,) * self.dim)

    def from_int(self, c: int) -> "Scalar":
        vec = [0] * self.dim
        vec[0] = c
        return Scalar(self, tuple(vec))

    def omega(self, e: int) -> "Scalar":
        return Scalar(self, self._basis_power(e % self.n))

    def _basis_power(self, j: int) -> Tuple[int, ...]:
        """w^j reduced mod Phi_n, for 0 <= j < n, cached."""
        got = self._wpow.get(j)
        if got is None:
            got = self.reduce({j: 1})
            self._wpow[j] = got
        return got

    def reduce(self, terms: Dict[int, int]) -> Tuple[int, ...]:
        """Reduce a Z[w] element (exponent -> coeff, exponents >= 0) mod Phi_n."""
        if not terms:
            return (0,) * self.dim
        top = max(terms)
        vec = [0] * (top + 1)
        for e, c in terms.items():
            if e < 0:
                raise ValueError("reduce expects nonnegative exponents")
            vec[e] += c
        mod = self.modulus.coeffs
        d = self.dim
        for k in range(top, d - 1, -1):
            lead = vec[k]
            if lead:
                vec[k] = 0
                base = k - d
                for i in range(d):
                    vec[base + i] -= lead * mod[i]
        out = vec[:d]
        out += [0] * (d - len(out))
        return tuple(out)


def cyclotomic_ring(n: int) -> CyclotomicRing:
    ring = _ring_cache.get(n)
    if ring is None:
        ring = CyclotomicRing(n)
        _ring_cache[n] = ring
    return ring


class CyclicRing(ScalarRing):
    """The group ring Z[Z/n]: the generic ring with only w^n = 1 imposed.

    Not an integral domain for n > 1, so it is never the ring of record.  It
    exists as a fast staging area for long computations at a root of unity:
    monomial products are O(1) instead of O(deg^2), and the quotient map down
    to cyclotomic(n) (specialize) is a ring homomorphism, so mapping the final
    result and comparing there gives the same verdict as computing in
    cyclotomic(n) throughout.
    """

    kind = "cyclic"

    def __init__(self, n: int) -> None:
        if n < 1:
            raise ValueError("cyclic order must be >= 1")
        self.n = n

    def __repr__(self) -> str:
        return f"CyclicRing({self.n})"

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, CyclicRing) and other.n == self.n

    def __hash__(self) -> int:
        return hash(("CyclicRing", self.n))

    def zero(self) -> "Scalar":
        return Scalar(self, {})

    def from_int(self, c: int) -> "Scalar":
        return Scalar(self, {0: c} if c else {})

    def omega(self, e: int) -> "Scalar":
        return Scalar(self, {e % self.n: 1})

    def _norm_exp(self, e: int) -> int:
        return e % self.n


_cyclic_cache: Dict[int, CyclicRing] = {}


def cyclic_ring(n: int) -> CyclicRing:
    ring = _cyclic_cache.get(n)
    if ring is None:
        ring = CyclicRing(n)
        _cyclic_cache[n] = ring
    return ring


class Scalar:
    """An element of one of the scalar rings.

    Generic and cyclic elements carry a dict {exponent: coeff} (exponents
    reduced mod n in the cyclic case); cyclotomic elements a coefficient tuple
    of length deg Phi_n.  Scalars are immutable in practice: no method mutates
    the payload.
    """

    __slots__ = ("ring", "data")

    def __init__(self, ring: ScalarRing, data: Any) -> None:
        self.ring = ring
        if ring.kind == "cyclotomic":
            vec = tuple(int(c) for c in data)
            if len(vec) != ring.dim:  # type: ignore[attr-defined]
                raise ValueError("coefficient vector has wrong length")
            self.data = vec
        else:
            norm = ring._norm_exp
            out: Dict[int, int] = {}
            for e, c in dict(data).items():
                c = int(c)
                if not c:
                    continue
                e = norm(int(e))
                c += out.get(e, 0)
                if c:
                    out[e] = c
                else:
                    del out[e]
            self.data = out

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        if self.ring.kind == "cyclotomic":
            return not any(self.data)
        return not self.data

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_one(self) -> bool:
        return self == self.ring.one()

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "Scalar") -> None:
        if self.ring is not other.ring and self.ring != other.ring:
            raise ValueError(f"scalar ring mismatch: {self.ring!r} vs {other.ring!r}")

    def __add__(self, other: "Scalar") -> "Scalar":
        if isinstance(other, int):
            other = self.ring.from_int(other)
        self._check(other)
        if self.ring.kind == "cyclotomic":
            return Scalar(self.ring, tuple(a + b for a, b in zip(self.data, other.data)))
        out = dict(self.data)
        for e, c in other.data.items():
            out[e] = out.get(e, 0) + c
        return Scalar(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        if self.ring.kind == "cyclotomic":
            return Scalar(self.ring, tuple(-c for c in self.data))
        return Scalar(self.ring, {e: -c for e, c in self.data.items()})

    def __sub__(self, other: "Scalar") -> "Scalar":
        if isinstance(other, int):
            other = self.ring.from_int(other)
        return self + (-other)

    def __mul__(self, other: Any) -> "Scalar":
        if isinstance(other, int):
            if self.ring.kind == "cyclotomic":
                return Scalar(self.ring, tuple(c * other for c in self.data))
            return Scalar(self.ring, {e: c * other for e, c in self.data.items()})
        if not isinstance(other, Scalar):
            return NotImplemented
        self._check(other)
        if self.ring.kind != "cyclotomic":
            out: Dict[int, int] = {}
            for e1, c1 in self.data.items():
                for e2, c2 in other.data.items():
                    e = e1 + e2
                    out[e] = out.get(e, 0) + c1 * c2
            return Scalar(self.ring, out)
        a, b = self.data, other.data
        conv: Dict[int, int] = {}
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        conv[i + j] = conv.get(i + j, 0) + ca * cb
        return Scalar(self.ring, self.ring.reduce(conv))  # type: ignore[attr-defined]

    def __rmul__(self, other: Any) -> "Scalar":
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def inverse(self) -> "Scalar":
        """Multiplicative inverse, if it exists in the ring; ZeroDivisionError otherwise."""
        if self.ring.kind != "cyclotomic":
            # Units recognized here are the monomials +-w^e; that covers every
            # coefficient the algebras divide by.
            if len(self.data) == 1:
                ((e, c),) = self.data.items()
                if c in (1, -1):
                    return Scalar(self.ring, {-e: c})
            raise ZeroDivisionError(f"{self} has no monomial inverse")
        # Extended Euclid over Q[x] against the cyclotomic modulus.
        mod = [Fraction(c) for c in self.ring.modulus.coeffs]  # type: ignore[attr-defined]
        a = [Fraction(c) for c in self.data]
        r0, r1 = mod, _qtrim(a)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        if not r1:
            raise ZeroDivisionError("0 is not invertible")
        while True:
            q, r = _qdivmod(r0, r1)
            if not r:
                break
            s0, s1 = s1, _qsub(s0, _qmul(q, s1))
            r0, r1 = r1, r
        if len(r1) != 1:
            raise ZeroDivisionError(f"{self} is not invertible in cyclotomic({self.ring.n})")  # type: ignore[attr-defined]
        g = r1[0]
        inv = [c / g for c in s1]
        terms: Dict[int, int] = {}
        for e, c in enumerate(inv):
            if c:
                if c.denominator != 1:
                    raise ZeroDivisionError(
                        f"{self} is a unit of Q[w]/Phi but not of Z[w]/Phi"
                    )
                terms[e] = int(c)
        return Scalar(self.ring, self.ring.reduce(terms))  # type: ignore[attr-defined]

    def __pow__(self, k: int) -> "Scalar":
        if k < 0:
            return self.inverse() ** (-k)
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> "Scalar":
        """The bar involution w -> w^-1."""
        if self.ring.kind != "cyclotomic":
            return Scalar(self.ring, {-e: c for e, c in self.data.items()})
        n = self.ring.n  # type: ignore[attr-defined]
        out = self.ring.zero()
        for e, c in enumerate(self.data):
            if c:
                out = out + self.ring.omega((n - e) % n) * c
        return out

    # -- equality / hashing ------------------------------------------------

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, int):
            return self == self.ring.from_int(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        if self.ring is not other.ring and self.ring != other.ring:
            return False
        return self.data == other.data

    def __hash__(self) -> int:
        if self.ring.kind == "cyclotomic":
            return hash(("Scalar", self.ring.n, self.data))  # type: ignore[attr-defined]
        tag = getattr(self.ring, "n", 0)
        return hash(("Scalar", self.ring.kind, tag, tuple(sorted(self.data.items()))))

    # -- views -------------------------------------------------------------

    def terms(self) -> Iterator[Tuple[int, int]]:
        """(exponent, coeff) pairs, ascending by exponent (generic/cyclic only)."""
        if self.ring.kind == "cyclotomic":
            raise ValueError("terms() is not defined for cyclotomic scalars")
        return iter(sorted(self.data.items()))

    # -- rendering ----------------------------------------------------------

    def __str__(self) -> str:
        if self.ring.kind != "cyclotomic":
            prefix = "" if self.ring.kind == "generic" else f"Z/{self.ring.n}: "  # type: ignore[attr-defined]
            if not self.data:
                return prefix + "0"
            parts = [(c, f"{abs(c)}*w^{e}") for e, c in sorted(self.data.items())]
        else:
            prefix = ""
            if self.is_zero():
                return f"cyc({self.ring.n}): 0"  # type: ignore[attr-defined]
            parts = []
            for e, c in enumerate(self.data):
                if c == 0:
                    continue
                if e == 0:
                    parts.append((c, str(abs(c))))
                elif e == 1:
                    parts.append((c, f"{abs(c)}*w"))
                else:
                    parts.append((c, f"{abs(c)}*w^{e}"))
        c0, body0 = parts[0]
        text = ("-" if c0 < 0 else "") + body0
        for c, body in parts[1:]:
            text += (" - " if c < 0 else " + ") + body
        if self.ring.kind == "cyclotomic":
            return f"cyc({self.ring.n}): {text}"  # type: ignore[attr-defined]
        return prefix + text

    def __repr__(self) -> str:
        return f"<Scalar {self}>"


# -- rational-coefficient helpers for the cyclotomic inverse -----------------


def _qtrim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _qsub(a: list, b: list) -> list:
    out = list(a) + [Fraction(0)] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return _qtrim(out)


def _qmul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _qtrim(out)


def _qdivmod(a: list, b: list) -> tuple[list, list]:
    rem = list(a)
    quot = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    for k in range(len(a) - len(b), -1, -1):
        if k + len(b) - 1 < len(rem) and rem[k + len(b) - 1] != 0:
            q = rem[k + len(b) - 1] / b[-1]
            quot[k] = q
            for i, c in enumerate(b):
                rem[k + i] -= q * c
    return _qtrim(quot), _qtrim(rem)


# -- specialization and root bookkeeping -------------------------------------


def specialize(x: Scalar, spec: "RootSpec | int") -> Scalar:
    """Push a generic or cyclic scalar into cyclotomic(n) by w -> primitive n-th root."""
    n = spec if isinstance(spec, int) else spec.n
    if x.ring.kind == "cyclotomic":
        raise ValueError("specialize expects a generic or cyclic scalar")
    if x.ring.kind == "cyclic" and x.ring.n != n:  # type: ignore[attr-defined]
        raise ValueError("cyclic scalar has a different root order")
    ring = cyclotomic_ring(n)
    out = ring.zero()
    for e, c in x.data.items():
        out = out + ring.omega(e % n) * c
    return out


def order_of_power(n: int, k: int) -> int:
    """Multiplicative order of w^k when w has order n."""
    if n < 1:
        raise ValueError("order must be positive")
    return n // math.gcd(n, k)


def multiplicative_order(x: Scalar, bound: int) -> int | None:
    """Smallest 1 <= m <= bound with x^m == 1, by direct search."""
    acc = x
    one = x.ring.one()
    for m in range(1, bound + 1):
        if acc == one:
            return m
        acc = acc * x
    return None


@dataclass(frozen=True)
class RootSpec:
    """Derived constants of a root of unity w of order n.

    N, Nprime, Nsecond are the multiplicative orders of w^8, w^4, w^2, and
    eta = w^(N*N).  eta always satisfies eta^8 = 1 (since w^(8N) = 1 implies
    w^(8N^2) = 1); its order is not constant in n.
    """

    n: int
    N: int
    Nprime: int
    Nsecond: int

    @staticmethod
    def for_order(n: int) -> "RootSpec":
        return RootSpec(
            n=n,
            N=order_of_power(n, 8),
            Nprime=order_of_power(n, 4),
            Nsecond=order_of_power(n, 2),
        )

    @property
    def ring(self) -> CyclotomicRing:
        return cyclotomic_ring(self.n)

    @property
    def omega(self) -> Scalar:
        return self.ring.omega(1)

    @property
    def eta(self) -> Scalar:
        return self.ring.omega(self.N * self.N % self.n)

    def eta_power(self, j: int) -> Scalar:
        return self.ring.omega(j * self.N * self.N % self.n)


def eta_embed(spec: RootSpec, x: Scalar) -> Scalar:
    """Push a generic scalar, read as a polynomial in eta^(+-1), into
    cyclotomic(n) by eta -> w^(N^2)."""
    if x.ring is not GENERIC:
        raise ValueError("eta_embed expects a generic scalar (a polynomial in eta)")
    ring = cyclotomic_ring(spec.n)
    k = spec.N * spec.N
    out = ring.zero()
    for e, c in x.data.items():
        out = out + ring.omega(k * e % spec.n) * c
    return out


# -- parsing ------------------------------------------------------------------

_TERM_RE = re.compile(
    r"""^
    (?P<coeff>[+-]?\d+)?          # optional integer coefficient
    (?P<star>\*)?                 # optional '*'
    (?P<w>w(\^(?P<exp>[+-]?\d+))?)?   # optional w or w^e
    $""",
    re.VERBOSE,
)


def _parse_terms(body: str) -> Dict[int, int]:
    """Parse 'c*w^e (+|-) ...' into {exponent: coeff}."""
    text = body.strip()
    if not text:
        raise ValueError("empty scalar text")
    # Tokenize on +/- that separate terms (exponent signs follow '^').
    terms: Dict[int, int] = {}
    chunks = []
    sign = 1
    cur = ""
    prev = ""
    for ch in text:
        if ch in "+-" and prev not in ("^", "", "+", "-") and not cur.endswith("^"):
            chunks.append((sign, cur.strip()))
            sign = 1 if ch == "+" else -1
            cur = ""
        else:
            cur += ch
        if not ch.isspace():
            prev = ch
    chunks.append((sign, cur.strip()))
    if chunks and chunks[0][1] == "" and len(chunks) > 1:
        # Leading sign was split off; fold it into the next chunk.
        lead_sign = chunks[0][0]
        chunks = [(lead_sign * chunks[1][0], chunks[1][1])] + chunks[2:]
    for sgn, chunk in chunks:
        if not chunk:
            raise ValueError(f"malformed scalar text: {body!r}")
        m = _TERM_RE.match(chunk.replace(" ", ""))
        if not m or (m.group("coeff") is None and m.group("w") is None):
            raise ValueError(f"malformed scalar term: {chunk!r}")
        coeff = int(m.group("coeff")) if m.group("coeff") is not None else 1
        if m.group("w"):
            exp = int(m.group("exp")) if m.group("exp") is not None else 1
        else:
            exp = 0
        coeff *= sgn
        terms[exp] = terms.get(exp, 0) + coeff
    return terms


_CYC_RE = re.compile(r"^cyc\((\d+)\)\s*:\s*(.*)$")


def parse_scalar(text: str) -> Scalar:
    """Inverse of Scalar.__str__ (and tolerant of omitted 1* coefficients)."""
    text = text.strip()
    m = _CYC_RE.match(text)
    if m:
        n = int(m.group(1))
        ring = cyclotomic_ring(n)
        terms = _parse_terms(m.group(2))
        out = ring.zero()
        for e, c in terms.items():
            out = out + ring.omega(e % n) * c
        return out
    return Scalar(GENERIC, _parse_terms(text))
