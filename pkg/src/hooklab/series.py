"""Truncated formal power series in x whose coefficients are polynomials in t.

A SeriesQt of order N stores exactly N+1 coefficients, each a PolyQ in the
parameter t.  All operations truncate at order N and stay exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .exact import PolyQ, Rational


class SeriesQt:
    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[PolyQ | Rational] = ()):
        if order < 0:
            raise ValueError("series order must be >= 0")
        cs = [c if isinstance(c, PolyQ) else PolyQ((c,)) for c in coeffs]
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        cs.extend(PolyQ() for _ in range(order + 1 - len(cs)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def one(cls, order: int) -> "SeriesQt":
        return cls(order, (1,))

    @classmethod
    def x_power(cls, order: int, k: int, scale: Rational = 1) -> "SeriesQt":
        """The monomial scale * x^k, truncated to the given order."""
        cs = [Fraction(0)] * (order + 1)
        if 0 <= k <= order:
            cs[k] = Fraction(scale)
        return cls(order, cs)

    def coefficient(self, k: int) -> PolyQ:
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient index {k} outside truncation order {self.order}")
        return self.coeffs[k]

    def _match(self, other: "SeriesQt") -> None:
        if self.order != other.order:
            raise ValueError("series truncation orders differ")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SeriesQt):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __add__(self, other: "SeriesQt") -> "SeriesQt":
        self._match(other)
        return SeriesQt(self.order, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "SeriesQt") -> "SeriesQt":
        self._match(other)
        return SeriesQt(self.order, (a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "SeriesQt | PolyQ | Rational") -> "SeriesQt":
        if isinstance(other, (int, Fraction, PolyQ)):
            return SeriesQt(self.order, (c * other for c in self.coeffs))
        self._match(other)
        out = [PolyQ() for _ in range(self.order + 1)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return SeriesQt(self.order, out)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"SeriesQt(order={self.order}, coeffs={[list(c.coeffs) for c in self.coeffs]})"

    def log(self) -> "SeriesQt":
        """Series logarithm; the constant term must be exactly 1.

        Uses the exact recurrence n*l_n = n*s_n - sum_{k=1}^{n-1} k*l_k*s_{n-k}.
        """
        if self.coeffs[0] != PolyQ((1,)):
            raise ValueError("log requires constant term 1")
        l: list[PolyQ] = [PolyQ()]
        for n in range(1, self.order + 1):
            acc = self.coeffs[n] * n
            for k in range(1, n):
                acc = acc - l[k] * self.coeffs[n - k] * k
            l.append(acc / n)
        return SeriesQt(self.order, l)

    def exp(self) -> "SeriesQt":
        """Series exponential; the constant term must be exactly 0.

        Uses the exact recurrence n*e_n = sum_{k=1}^{n} k*g_k*e_{n-k}.
        """
        if not self.coeffs[0].is_zero():
            raise ValueError("exp requires constant term 0")
        e: list[PolyQ] = [PolyQ((1,))]
        for n in range(1, self.order + 1):
            acc = PolyQ()
            for k in range(1, n + 1):
                acc = acc + self.coeffs[k] * e[n - k] * k
            e.append(acc / n)
        return SeriesQt(self.order, e)

    def pow_affine_t(self, a: Rational, b: Rational) -> "SeriesQt":
        """Raise to the exponent a + b*t, i.e. exp((a + b*t) * log(self)).

        The base must have rational coefficients (t-degree <= 0) and constant
        term 1, so that the logarithm and the result are well defined.
        """
        if any(c.degree > 0 for c in self.coeffs):
            raise ValueError("pow_affine_t base must not involve t")
        exponent = PolyQ((a, b))
        return (self.log() * exponent).exp()

    def specialize_t(self, t0: Rational) -> list[Fraction]:
        """Evaluate every coefficient polynomial at t = t0."""
        return [c(t0) for c in self.coeffs]

    def to_json(self) -> dict:
        from .exact import poly_to_strings

        return {
            "truncation": self.order,
            "coeffs": [poly_to_strings(c) for c in self.coeffs],
        }


def series_from_rationals(order: int, coeffs: Sequence[Rational]) -> SeriesQt:
    return SeriesQt(order, coeffs)
