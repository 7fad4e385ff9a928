"""Truncated power series verification of the product identities.

Two series in x with polynomial-in-t coefficients are compared exactly:

* hook side:    sum_n x^n/n!^2 sum_{lam of n} f_lam^2 prod_u (t + h_u^2)
  against       prod_{i>=1} (1 - x^i)^(-1-t)
* content side: sum_n x^n/n!^2 sum_{lam of n} f_lam^2 prod_u (t + c_u^2)
  against       (1 - x)^(-t)

plus the two-parameter content variant
  sum_n x^n/n!^2 sum f^2 prod_u (t + c_u)(v + c_u) = (1 - x)^(-tv),
verified on rational (t0, v0) specializations, where the right side has
coefficients binom(t0*v0 + n - 1, n).

Factors (1 - x^i) with i > N are 1 modulo x^(N+1), so the infinite product
on the hook side truncates to i <= N exactly.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable, Sequence

from .exact import PolyQ, Rational, binomial
from .partitions import Partition, partitions_of, syt_count
from .series import SeriesQt

SERIES_TRUNCATION_GUARD = 30
TWO_PARAMETER_GUARD = 20


def _check_order(order: int, guard: int = SERIES_TRUNCATION_GUARD) -> None:
    if order < 0 or order > guard:
        raise ValueError(f"series truncation must lie in 0..{guard}")


def _weighted_cell_series(order: int, cell_values: Callable[[Partition], list[int]]) -> SeriesQt:
    """Coefficient of x^n is sum_{lam of n} f^2 prod(t + value) / n!^2."""
    coeffs: list[PolyQ] = []
    for n in range(order + 1):
        layer = PolyQ()
        for shape in partitions_of(n):
            f = syt_count(shape)
            prod = PolyQ((1,))
            for v in cell_values(shape):
                prod = prod * PolyQ((v, 1))
            layer = layer + prod * (f * f)
        coeffs.append(layer / factorial(n) ** 2)
    return SeriesQt(order, coeffs)


def hook_expansion_series(order: int) -> SeriesQt:
    """sum_n x^n/n!^2 sum_{lam of n} f^2 prod_u (t + h_u^2), truncated."""
    _check_order(order)
    return _weighted_cell_series(order, lambda s: [h * h for h in s.hook_lengths()])


def hook_product_series(order: int) -> SeriesQt:
    """prod_{i=1}^{order} (1 - x^i)^(-1-t), truncated."""
    _check_order(order)
    out = SeriesQt.one(order)
    for i in range(1, order + 1):
        base = SeriesQt.one(order) - SeriesQt.x_power(order, i)
        out = out * base.pow_affine_t(-1, -1)
    return out


def hook_series_check(order: int) -> bool:
    return hook_expansion_series(order) == hook_product_series(order)


def content_expansion_series(order: int) -> SeriesQt:
    """sum_n x^n/n!^2 sum_{lam of n} f^2 prod_u (t + c_u^2), truncated."""
    _check_order(order)
    return _weighted_cell_series(order, lambda s: [c * c for c in s.content_values()])


def content_product_series(order: int) -> SeriesQt:
    """(1 - x)^(-t), truncated."""
    _check_order(order)
    base = SeriesQt.one(order) - SeriesQt.x_power(order, 1)
    return base.pow_affine_t(0, -1)


def content_series_check(order: int) -> bool:
    return content_expansion_series(order) == content_product_series(order)


def two_parameter_check(order: int, grid: Sequence[tuple[Rational, Rational]]) -> bool:
    """Check sum_n x^n/n!^2 sum f^2 prod_u (t0 + c_u)(v0 + c_u) equals the
    binomial series of (1 - x)^(-t0*v0) for every grid point.

    A grid of (order+1) x (order+1) distinct abscissas pins down the
    bivariate coefficients completely (t- and v-degrees are at most n per
    x^n coefficient); callers choose the grid size they need.
    """
    _check_order(order, TWO_PARAMETER_GUARD)
    if not grid:
        raise ValueError("two parameter check needs a nonempty grid")
    layers = [
        [(syt_count(shape) ** 2, shape.content_values()) for shape in partitions_of(n)]
        for n in range(order + 1)
    ]
    for t0, v0 in grid:
        t0, v0 = Fraction(t0), Fraction(v0)
        for n, layer in enumerate(layers):
            lhs = Fraction(0)
            for f2, contents in layer:
                prod = Fraction(f2)
                for c in contents:
                    prod *= (t0 + c) * (v0 + c)
                lhs += prod
            lhs /= factorial(n) ** 2
            if lhs != binomial(t0 * v0 + n - 1, n):
                return False
    return True
