"""Exact rational arithmetic: polynomials over Q, interpolation, counting numbers.

Everything in this module is integer or Fraction arithmetic.  No floats.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial, lcm
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]


class PolyQ:
    """Dense univariate polynomial with Fraction coefficients.

    Coefficients are stored lowest degree first with no trailing zeros, so
    the zero polynomial is the empty tuple and ``degree`` is then -1.
    Instances are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rational] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @staticmethod
    def variable() -> "PolyQ":
        return PolyQ((0, 1))

    @staticmethod
    def constant(c: Rational) -> "PolyQ":
        return PolyQ((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PolyQ):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == PolyQ((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "PolyQ":
        return PolyQ(tuple(-c for c in self.coeffs))

    def __add__(self, other: "PolyQ | Rational") -> "PolyQ":
        if isinstance(other, (int, Fraction)):
            other = PolyQ((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PolyQ(out)

    __radd__ = __add__

    def __sub__(self, other: "PolyQ | Rational") -> "PolyQ":
        if isinstance(other, (int, Fraction)):
            other = PolyQ((other,))
        return self + (-other)

    def __rsub__(self, other: Rational) -> "PolyQ":
        return PolyQ((other,)) - self

    def __mul__(self, other: "PolyQ | Rational") -> "PolyQ":
        if isinstance(other, (int, Fraction)):
            return PolyQ(tuple(c * other for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return PolyQ()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return PolyQ(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar: Rational) -> "PolyQ":
        s = Fraction(scalar)
        if s == 0:
            raise ZeroDivisionError("division of polynomial by zero")
        return PolyQ(tuple(c / s for c in self.coeffs))

    def __pow__(self, k: int) -> "PolyQ":
        if k < 0:
            raise ValueError("negative polynomial power")
        out = PolyQ((1,))
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x: Rational) -> Fraction:
        # Horner evaluation.
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"PolyQ({list(self.coeffs)!r})"

    def pretty(self, var: str = "n") -> str:
        """Render as integer-coefficient terms over a common denominator."""
        if self.is_zero():
            return "0"
        den = lcm(*(c.denominator for c in self.coeffs))
        terms = []
        for k in range(self.degree, -1, -1):
            m = self.coeffs[k] * den
            if m == 0:
                continue
            mag = abs(int(m))
            if k == 0:
                body = str(mag)
            elif k == 1:
                body = var if mag == 1 else f"{mag}*{var}"
            else:
                body = f"{var}^{k}" if mag == 1 else f"{mag}*{var}^{k}"
            terms.append(("-" if m < 0 else "+", body))
        sign, first = terms[0]
        text = ("-" if sign == "-" else "") + first
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        if den != 1:
            text = f"({text})/{den}"
        return text


def poly_to_strings(p: PolyQ) -> list[str]:
    """Serialize coefficients lowest degree first; the zero polynomial is ["0"]."""
    if p.is_zero():
        return ["0"]
    return [str(c) for c in p.coeffs]


def poly_from_strings(items: Sequence[str]) -> PolyQ:
    return PolyQ(Fraction(s) for s in items)


def lagrange_interpolate(points: Sequence[tuple[Rational, Rational]]) -> PolyQ:
    """Exact Lagrange interpolation through the given (x, y) pairs.

    Abscissas must be pairwise distinct.  Returns the unique polynomial of
    degree < len(points) through all points (zero polynomial for no points).
    """
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation abscissas must be pairwise distinct")
    total = PolyQ()
    for i, (_, yi) in enumerate(points):
        y = Fraction(yi)
        if y == 0:
            continue
        num = PolyQ((1,))
        den = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            num = num * PolyQ((-xj, 1))
            den *= xs[i] - xj
        total = total + num * (y / den)
    return total


def binomial(a: Rational, k: int) -> Fraction:
    """Binomial coefficient C(a, k) for rational a and integer k >= 0."""
    if k < 0:
        return Fraction(0)
    num = Fraction(1)
    for j in range(k):
        num *= Fraction(a) - j
    return num / factorial(k)


def falling_factorial(x: "Rational | PolyQ", r: int) -> "Fraction | PolyQ":
    """x (x-1) ... (x-r+1); accepts a number or a polynomial argument."""
    if r < 0:
        raise ValueError("falling factorial needs r >= 0")
    if isinstance(x, PolyQ):
        out = PolyQ((1,))
        for j in range(r):
            out = out * (x - j)
        return out
    acc = Fraction(1)
    for j in range(r):
        acc *= Fraction(x) - j
    return acc


def rising_factorial(x: "Rational | PolyQ", r: int) -> "Fraction | PolyQ":
    """x (x+1) ... (x+r-1); accepts a number or a polynomial argument."""
    if r < 0:
        raise ValueError("rising factorial needs r >= 0")
    if isinstance(x, PolyQ):
        out = PolyQ((1,))
        for j in range(r):
            out = out * (x + j)
        return out
    acc = Fraction(1)
    for j in range(r):
        acc *= Fraction(x) + j
    return acc


@lru_cache(maxsize=None)
def signless_stirling(n: int, k: int) -> int:
    """Signless Stirling number of the first kind: permutations of n with k cycles."""
    if n < 0 or k < 0:
        raise ValueError("stirling numbers need n, k >= 0")
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0 or k > n:
        return 0
    return signless_stirling(n - 1, k - 1) + (n - 1) * signless_stirling(n - 1, k)


def central_factorial(k: int, j: int) -> Fraction:
    """Central factorial number T(k, j) = 2 sum_{i=1}^{j} (-1)^(j-i) i^(2k) / ((j-i)! (j+i)!).

    Defined for 1 <= j <= k.  These satisfy
    x^k = sum_j T(k, j) prod_{i=1}^{j-1} (x - i^2) * x, equivalently the
    generating identity sum_k T(k, j) x^k = x^j / prod_{i=1}^{j} (1 - i^2 x).
    """
    if not 1 <= j <= k:
        raise ValueError("central factorial numbers need 1 <= j <= k")
    total = Fraction(0)
    for i in range(1, j + 1):
        term = Fraction(i ** (2 * k), factorial(j - i) * factorial(j + i))
        total += -term if (j - i) % 2 else term
    return 2 * total


def det_fraction(rows: Sequence[Sequence[Rational]]) -> Fraction:
    """Determinant of a square matrix by Gaussian elimination over Fraction."""
    m = [[Fraction(v) for v in row] for row in rows]
    size = len(m)
    if any(len(row) != size for row in m):
        raise ValueError("determinant needs a square matrix")
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, size):
            if m[r][col] == 0:
                continue
            factor = m[r][col] * inv
            for c in range(col, size):
                m[r][c] -= factor * m[col][c]
    return det
