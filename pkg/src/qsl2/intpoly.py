"""Dense integer polynomials with exact arithmetic.

Coefficients are stored little-endian (index = degree) with trailing zeros
stripped, so equal polynomials always carry identical coefficient tuples and
``==`` / ``hash`` behave like value equality.  Division is only provided in
the exact form needed here: it raises if the quotient does not exist over Z.
"""

from __future__ import annotations

from collections.abc import Iterable
from typing import Any


def _strip(coeffs: tuple[int, ...]) -> tuple[int, ...]:
    end = len(coeffs)
    while end > 0 and coeffs[end - 1] == 0:
        end -= 1
    return coeffs[:end]


class IntPolynomial:
    """A polynomial in one variable over the integers."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        self.coeffs = _strip(tuple(int(c) for c in coeffs))

    @staticmethod
    def constant(c: int) -> "IntPolynomial":
        return IntPolynomial((c,))

    @staticmethod
    def monomial(degree: int, c: int = 1) -> "IntPolynomial":
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        return IntPolynomial((0,) * degree + (c,))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("IntPolynomial", self.coeffs))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] += ca * cb
        return IntPolynomial(out)

    def __pow__(self, k: int) -> "IntPolynomial":
        if k < 0:
            raise ValueError("negative powers are not defined for IntPolynomial")
        result = IntPolynomial((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by x**k."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def divexact(self, divisor: "IntPolynomial") -> "IntPolynomial":
        """Return self / divisor, raising ValueError unless the division is exact."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dcs = divisor.coeffs
        dlead = dcs[-1]
        ddeg = len(dcs) - 1
        qdeg = len(rem) - 1 - ddeg
        if self.is_zero():
            return IntPolynomial()
        if qdeg < 0:
            raise ValueError("division is not exact (degree too small)")
        quot = [0] * (qdeg + 1)
        for k in range(qdeg, -1, -1):
            lead = rem[k + ddeg]
            if lead % dlead != 0:
                raise ValueError("division is not exact (leading term)")
            q = lead // dlead
            quot[k] = q
            if q:
                for i, c in enumerate(dcs):
                    rem[k + i] -= q * c
        if any(rem):
            raise ValueError("division is not exact (nonzero remainder)")
        return IntPolynomial(quot)

    def eval_int(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def evaluate(self, x: Any, one: Any) -> Any:
        """Horner evaluation at an element of any ring with unit `one`.

        Requires the element type to support ``a + b``, ``a * b`` and
        ``int * a``.
        """
        acc = 0 * one
        for c in reversed(self.coeffs):
            acc = acc * x + c * one
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if e == 0:
                body = str(abs(c))
            elif e == 1:
                body = f"{abs(c)}*x"
            else:
                body = f"{abs(c)}*x^{e}"
            parts.append(("-" if c < 0 else "+", body))
        sign0, body0 = parts[0]
        text = ("-" if sign0 == "-" else "") + body0
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)!r})"
