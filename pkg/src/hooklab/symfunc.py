"""Symmetric function expressions and exact evaluation on finite alphabets.

An expression is a Q-linear combination of products of basis generators
e/h/p/m/s, each attached to a named alphabet slot (x, y, or z).  Evaluation
substitutes a finite multiset of rational values for each slot and sets all
remaining variables to zero, so e_k vanishes for k larger than the alphabet
and p_k is a plain power sum.

The module also houses the small representation-theoretic toolkit built on
top of evaluation: Murnaghan-Nakayama characters, the shift transform
polynomials in v attached to Schur functions and power sums, and exact
checks of the Cauchy, dual Cauchy, permutation-product, and single-row
expansion identities.
"""

from __future__ import annotations

import itertools
import re
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping, Sequence

from .exact import PolyQ, Rational, binomial, det_fraction, rising_factorial
from .partitions import (
    Alphabet,
    Partition,
    SkewShape,
    partitions_of,
    skew_syt_count,
    syt_count,
)

BASES = "ehpms"
SLOTS = ("x", "y", "z")
MONOMIAL_ALPHABET_LIMIT = 12
PRODUCT_TUPLE_GUARD = 10**7

# A factor is (slot, basis, parts); a term is a sorted tuple of factors.
Factor = tuple[str, str, tuple[int, ...]]
Term = tuple[Factor, ...]


class SymExprParseError(ValueError):
    pass


def _validated_factor(slot: str, basis: str, parts: Iterable[int]) -> Factor:
    if basis not in BASES:
        raise SymExprParseError(f"unknown basis tag {basis!r}")
    if slot not in SLOTS:
        raise SymExprParseError(f"unknown alphabet slot {slot!r}; use one of {SLOTS}")
    ps = tuple(sorted((int(p) for p in parts), reverse=True))
    if any(p < 1 for p in ps):
        raise SymExprParseError(f"basis index parts must be >= 1: {ps}")
    return (slot, basis, ps)


def _canonical_term(factors: Iterable[Factor]) -> Term:
    # e/h/p factors in the same slot merge into one index; m/s stay separate.
    merged: dict[tuple[str, str], tuple[int, ...]] = {}
    rest: list[Factor] = []
    for slot, basis, parts in factors:
        if not parts:
            continue
        if basis in "ehp":
            key = (slot, basis)
            merged[key] = merged.get(key, ()) + parts
        else:
            rest.append((slot, basis, parts))
    out = [
        (slot, basis, tuple(sorted(parts, reverse=True)))
        for (slot, basis), parts in merged.items()
    ]
    out.extend(rest)
    return tuple(sorted(out))


_FACTOR_RE = re.compile(r"^([a-z])\[(\d+(?:,\d+)*)\](?:\((\w+)\))?$")
_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


class SymExpr:
    """Q-linear combination of products of basis generators on named slots."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Term, Rational] | None = None):
        clean: dict[Term, Fraction] = {}
        for term, coeff in (terms or {}).items():
            c = Fraction(coeff)
            if c == 0:
                continue
            key = _canonical_term(term)
            clean[key] = clean.get(key, Fraction(0)) + c
            if clean[key] == 0:
                del clean[key]
        self._terms = clean

    @property
    def terms(self) -> dict[Term, Fraction]:
        return dict(self._terms)

    @classmethod
    def zero(cls) -> "SymExpr":
        return cls()

    @classmethod
    def constant(cls, c: Rational) -> "SymExpr":
        return cls({(): c})

    @classmethod
    def one(cls) -> "SymExpr":
        return cls.constant(1)

    @classmethod
    def generator(cls, basis: str, parts: Iterable[int], slot: str = "x") -> "SymExpr":
        return cls({(_validated_factor(slot, basis, parts),): 1})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymExpr):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "SymExpr | Rational") -> "SymExpr":
        if isinstance(other, (int, Fraction)):
            other = SymExpr.constant(other)
        out = dict(self._terms)
        for term, coeff in other._terms.items():
            out[term] = out.get(term, Fraction(0)) + coeff
        return SymExpr(out)

    __radd__ = __add__

    def __neg__(self) -> "SymExpr":
        return SymExpr({t: -c for t, c in self._terms.items()})

    def __sub__(self, other: "SymExpr | Rational") -> "SymExpr":
        if isinstance(other, (int, Fraction)):
            other = SymExpr.constant(other)
        return self + (-other)

    def __mul__(self, other: "SymExpr | Rational") -> "SymExpr":
        if isinstance(other, (int, Fraction)):
            return SymExpr({t: c * other for t, c in self._terms.items()})
        out: dict[Term, Fraction] = {}
        for t1, c1 in self._terms.items():
            for t2, c2 in other._terms.items():
                key = _canonical_term(t1 + t2)
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return SymExpr(out)

    __rmul__ = __mul__

    def slots(self) -> set[str]:
        return {slot for term in self._terms for slot, _, _ in term}

    def weight(self) -> int:
        """Largest total degree over the terms (0 for constants and zero)."""
        best = 0
        for term in self._terms:
            best = max(best, sum(sum(parts) for _, _, parts in term))
        return best

    def slot_weight(self, slot: str) -> int:
        """Largest degree carried by one slot over the terms."""
        best = 0
        for term in self._terms:
            best = max(
                best, sum(sum(parts) for s, _, parts in term if s == slot)
            )
        return best

    def text(self) -> str:
        if not self._terms:
            return "0"
        out = ""
        for term in sorted(self._terms):
            coeff = self._terms[term]
            sign = "-" if coeff < 0 else "+"
            magnitude = abs(coeff)
            pieces = [] if magnitude == 1 and term else [str(magnitude)]
            for slot, basis, parts in term:
                pieces.append(f"{basis}[{','.join(map(str, parts))}]({slot})")
            chunk = "*".join(pieces)
            if not out:
                out = chunk if sign == "+" else f"-{chunk}"
            else:
                out += f" {sign} {chunk}"
        return out

    def __repr__(self) -> str:
        return f"SymExpr({self.text()!r})"

    @classmethod
    def parse(cls, source: str) -> "SymExpr":
        """Parse the CLI grammar: '+'-separated products of rational
        coefficients and factors like e[2,1](x); the slot defaults to x."""
        text = source.replace(" ", "")
        if not text:
            raise SymExprParseError("empty expression")
        total = cls.zero()
        sign = Fraction(1)
        pos = 0
        if text[0] in "+-":
            sign = Fraction(-1 if text[0] == "-" else 1)
            pos = 1
        start = pos
        spans: list[tuple[Fraction, str]] = []
        while pos <= len(text):
            if pos == len(text) or text[pos] in "+-":
                if start == pos:
                    raise SymExprParseError(f"empty term in {source!r}")
                spans.append((sign, text[start:pos]))
                if pos < len(text):
                    sign = Fraction(-1 if text[pos] == "-" else 1)
                start = pos + 1
            pos += 1
        for sign, chunk in spans:
            coeff = sign
            factors: list[Factor] = []
            for piece in chunk.split("*"):
                if _RATIONAL_RE.match(piece):
                    coeff *= Fraction(piece)
                    continue
                m = _FACTOR_RE.match(piece)
                if not m:
                    raise SymExprParseError(f"cannot parse factor {piece!r} in {source!r}")
                basis, parts_text, slot = m.group(1), m.group(2), m.group(3) or "x"
                factors.append(
                    _validated_factor(slot, basis, (int(p) for p in parts_text.split(",")))
                )
            total = total + cls({tuple(factors): coeff})
        return total


class AlphabetEvaluator:
    """Evaluates basis generators on one fixed finite alphabet, with caching.

    e_k comes from the coefficients of prod(1 + a_i t); h_k from the Newton
    recurrence h_k = sum_{i>=1} (-1)^(i-1) e_i h_{k-i}; s_lambda from the
    Jacobi-Trudi determinant det(h_{lambda_i - i + j}); m_mu as the sum over
    distinct rearrangements of the exponent multiset (guarded alphabet size).
    """

    def __init__(self, alphabet: Alphabet | Iterable[Rational]):
        self.values: list[Rational] = list(alphabet)
        self._elementary: list[Fraction] | None = None
        self._complete: list[Fraction] = [Fraction(1)]
        self._power: dict[int, Fraction] = {}
        self._schur: dict[tuple[int, ...], Fraction] = {}

    def elementary(self, k: int) -> Fraction:
        if k < 0:
            raise ValueError("elementary index must be >= 0")
        if self._elementary is None:
            coeffs = [Fraction(1)] + [Fraction(0)] * len(self.values)
            seen = 0
            for a in self.values:
                seen += 1
                for i in range(seen, 0, -1):
                    coeffs[i] += a * coeffs[i - 1]
            self._elementary = coeffs
        if k >= len(self._elementary):
            return Fraction(0)
        return self._elementary[k]

    def complete(self, k: int) -> Fraction:
        if k < 0:
            raise ValueError("complete index must be >= 0")
        while len(self._complete) <= k:
            m = len(self._complete)
            acc = Fraction(0)
            for i in range(1, min(m, len(self.values)) + 1):
                term = self.elementary(i) * self._complete[m - i]
                acc += -term if i % 2 == 0 else term
            self._complete.append(acc)
        return self._complete[k]

    def power_sum(self, k: int) -> Fraction:
        if k < 1:
            raise ValueError("power sum index must be >= 1")
        if k not in self._power:
            self._power[k] = Fraction(sum(Fraction(a) ** k for a in self.values))
        return self._power[k]

    def schur(self, parts: Sequence[int]) -> Fraction:
        key = tuple(parts)
        if key not in self._schur:
            rows = len(key)
            if rows == 0:
                self._schur[key] = Fraction(1)
            else:
                matrix = [
                    [self.complete(key[i] - i + j) if key[i] - i + j >= 0 else Fraction(0)
                     for j in range(rows)]
                    for i in range(rows)
                ]
                self._schur[key] = det_fraction(matrix)
        return self._schur[key]

    def monomial(self, parts: Sequence[int]) -> Fraction:
        if len(self.values) > MONOMIAL_ALPHABET_LIMIT:
            raise ValueError(
                f"monomial evaluation limited to alphabets of size {MONOMIAL_ALPHABET_LIMIT}"
            )
        if len(parts) > len(self.values):
            return Fraction(0)
        exponents = Counter(parts)
        exponents[0] += len(self.values) - len(parts)
        vals = self.values

        def assign(i: int) -> Fraction:
            if i == len(vals):
                return Fraction(1)
            total = Fraction(0)
            for e in list(exponents):
                if exponents[e] == 0:
                    continue
                exponents[e] -= 1
                total += Fraction(vals[i]) ** e * assign(i + 1)
                exponents[e] += 1
            return total

        return assign(0)

    def factor_value(self, basis: str, parts: Sequence[int]) -> Fraction:
        if basis == "p":
            acc = Fraction(1)
            for k in parts:
                acc *= self.power_sum(k)
            return acc
        if basis == "e":
            acc = Fraction(1)
            for k in parts:
                acc *= self.elementary(k)
            return acc
        if basis == "h":
            acc = Fraction(1)
            for k in parts:
                acc *= self.complete(k)
            return acc
        if basis == "s":
            return self.schur(parts)
        if basis == "m":
            return self.monomial(parts)
        raise ValueError(f"unknown basis tag {basis!r}")


def eval_term(basis: str, parts: Iterable[int], alphabet: Alphabet | Iterable[Rational]) -> Fraction:
    """Evaluate one basis generator (product over its index parts for e/h/p)."""
    slot, basis, ps = _validated_factor("x", basis, parts)
    return AlphabetEvaluator(alphabet).factor_value(basis, ps)


def eval_expr(
    expr: SymExpr, assignment: Mapping[str, Alphabet | Iterable[Rational]]
) -> Fraction:
    """Evaluate an expression with one alphabet per slot."""
    missing = expr.slots() - set(assignment)
    if missing:
        raise ValueError(f"no alphabet assigned to slots {sorted(missing)}")
    evaluators = {slot: AlphabetEvaluator(alpha) for slot, alpha in assignment.items()}
    total = Fraction(0)
    for term, coeff in expr.terms.items():
        acc = coeff
        for slot, basis, parts in term:
            acc *= evaluators[slot].factor_value(basis, parts)
            if acc == 0:
                break
        total += acc
    return total


# ---------------------------------------------------------------------------
# Murnaghan-Nakayama characters


def _border_strip_removals(parts: tuple[int, ...], size: int):
    """Yield (smaller partition, strip height) for every removable border
    strip of the given size, via first-column hook lengths (beta numbers)."""
    rows = len(parts)
    beta = [parts[i] + rows - 1 - i for i in range(rows)]
    present = set(beta)
    for b in beta:
        if b >= size and b - size not in present:
            height = sum(1 for c in beta if b - size < c < b)
            replaced = sorted(present - {b} | {b - size}, reverse=True)
            smaller = tuple(
                v - (rows - 1 - i) for i, v in enumerate(replaced) if v - (rows - 1 - i) > 0
            )
            yield smaller, height


@lru_cache(maxsize=None)
def _character(lam_parts: tuple[int, ...], mu_parts: tuple[int, ...]) -> int:
    if not mu_parts:
        return 1
    size, rest = mu_parts[0], mu_parts[1:]
    total = 0
    for smaller, height in _border_strip_removals(lam_parts, size):
        sign = -1 if height % 2 else 1
        total += sign * _character(smaller, rest)
    return total


def mn_character(lam: Partition, mu: Partition | Iterable[int]) -> int:
    """Irreducible symmetric group character chi^lam on the class mu,
    by the Murnaghan-Nakayama border strip recursion (memoized).

    Strips are removed for the largest part of mu first.
    """
    mu_parts = tuple(sorted(mu, reverse=True))
    if sum(mu_parts) != lam.weight:
        raise ValueError(f"class {mu_parts} and shape {lam.parts} have different weights")
    return _character(lam.parts, mu_parts)


def z_mu(mu: Partition | Iterable[int]) -> int:
    """Centralizer order of the class mu: prod_i i^m_i * m_i!."""
    acc = 1
    for part, mult in Counter(tuple(mu)).items():
        acc *= part**mult * factorial(mult)
    return acc


def epsilon_sign(mu: Partition | Iterable[int]) -> int:
    parts = tuple(mu)
    return -1 if (sum(parts) - len(parts)) % 2 else 1


# ---------------------------------------------------------------------------
# Shift transform polynomials in v


def a_poly(shape: Partition) -> PolyQ:
    """The transform of s_shape: a degree-n polynomial in v, computed as
    prod_i (v + part_i + n - i) over rows padded to n, divided by the hook
    product."""
    n = shape.weight
    padded = shape.padded(n)
    out = PolyQ((1,))
    for i in range(n):
        out = out * PolyQ((padded[i] + n - (i + 1), 1))
    hook_product = 1
    for h in shape.hook_lengths():
        hook_product *= h
    return out / hook_product


def a_poly_by_tableaux(shape: Partition) -> PolyQ:
    """Independent form of a_poly: sum_i binom(v+i-1, i) * (number of
    standard tableaux of the skew shape obtained by removing a column of
    n - i cells)."""
    n = shape.weight
    v = PolyQ.variable()
    out = PolyQ()
    for i in range(n + 1):
        column = n - i
        if column > len(shape.parts):
            continue
        count = skew_syt_count(SkewShape(shape, Partition((1,) * column)))
        if count:
            out = out + (rising_factorial(v, i) / factorial(i)) * count
    return out


def phi_p(mu: Partition | Iterable[int]) -> PolyQ:
    """The transform of the power sum p_mu, closed form:
    (-1)^(n - length) * sum_{i<=m} binom(m, i) (v)(v+1)...(v+i-1),
    with m the multiplicity of 1 in mu.  Requires mu nonempty."""
    parts = tuple(sorted(mu, reverse=True))
    if not parts:
        raise ValueError("phi_p needs a nonempty partition")
    ones = sum(1 for p in parts if p == 1)
    v = PolyQ.variable()
    out = PolyQ()
    for i in range(ones + 1):
        out = out + rising_factorial(v, i) * binomial(ones, i)
    return out * epsilon_sign(parts)


def phi_p_by_characters(mu: Partition | Iterable[int]) -> PolyQ:
    """Oracle for phi_p: expand p_mu in the Schur basis by characters and
    push the transform through linearly, sum_lam chi^lam(mu) * a_poly(lam)."""
    parts = tuple(sorted(mu, reverse=True))
    out = PolyQ()
    for lam in partitions_of(sum(parts)):
        chi = _character(lam.parts, parts)
        if chi:
            out = out + a_poly(lam) * chi
    return out


# ---------------------------------------------------------------------------
# Identity checks on explicit alphabets


def single_row_expansion_check(
    n: int, v0: Rational, alphabet: Alphabet | Iterable[Rational]
) -> bool:
    """Check sum_{i=0}^n binom(v0+i-1, i) p_1^i e_{n-i} = sum_{lam of n}
    a_poly(lam)(v0) * s_lam, both sides evaluated on the alphabet."""
    ev = AlphabetEvaluator(alphabet)
    v = Fraction(v0)
    lhs = Fraction(0)
    p1 = Fraction(sum(Fraction(a) for a in ev.values))
    for i in range(n + 1):
        lhs += binomial(v + i - 1, i) * p1**i * ev.elementary(n - i)
    rhs = Fraction(0)
    for lam in partitions_of(n):
        rhs += a_poly(lam)(v) * ev.schur(lam.parts)
    return lhs == rhs


def cauchy_check(
    n: int,
    alphabet_x: Alphabet | Iterable[Rational],
    alphabet_y: Alphabet | Iterable[Rational],
) -> bool:
    """Degree-n Cauchy identity: sum_lam s_lam(x) s_lam(y) equals
    sum_mu p_mu(x) p_mu(y) / z_mu."""
    ex, ey = AlphabetEvaluator(alphabet_x), AlphabetEvaluator(alphabet_y)
    lhs = Fraction(0)
    rhs = Fraction(0)
    for lam in partitions_of(n):
        lhs += ex.schur(lam.parts) * ey.schur(lam.parts)
        rhs += (
            ex.factor_value("p", lam.parts)
            * ey.factor_value("p", lam.parts)
            / z_mu(lam)
        )
    return lhs == rhs


def dual_cauchy_check(
    n: int,
    alphabet_x: Alphabet | Iterable[Rational],
    alphabet_y: Alphabet | Iterable[Rational],
) -> bool:
    """Degree-n dual Cauchy identity: sum_lam s_lam(x) s_{lam'}(y) equals
    sum_mu epsilon_mu p_mu(x) p_mu(y) / z_mu."""
    ex, ey = AlphabetEvaluator(alphabet_x), AlphabetEvaluator(alphabet_y)
    lhs = Fraction(0)
    rhs = Fraction(0)
    for lam in partitions_of(n):
        lhs += ex.schur(lam.parts) * ey.schur(lam.conjugate().parts)
        rhs += (
            epsilon_sign(lam)
            * ex.factor_value("p", lam.parts)
            * ey.factor_value("p", lam.parts)
            / z_mu(lam)
        )
    return lhs == rhs


# ---------------------------------------------------------------------------
# Permutation tuple enumeration (shared oracle)


def cycle_type(perm: Sequence[int]) -> tuple[int, ...]:
    """Cycle type of a permutation given in one-line notation on 0..n-1."""
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


@lru_cache(maxsize=None)
def product_type_histogram(n: int, k: int) -> Counter:
    """Histogram of cycle-type tuples over all (w_1, ..., w_k) in S_n^k with
    w_1 ... w_k = identity.  The first k-1 factors range freely and determine
    the last one.  Guarded by n!^(k-1) <= 10^7."""
    if k < 1:
        raise ValueError("need at least one factor")
    if factorial(n) ** (k - 1) > PRODUCT_TUPLE_GUARD:
        raise ValueError(f"tuple enumeration guard exceeded: {n}!^{k - 1} > {PRODUCT_TUPLE_GUARD}")
    identity = tuple(range(n))
    perms = list(itertools.permutations(range(n))) if k > 1 else [identity]
    hist: Counter = Counter()
    for prefix in itertools.product(perms, repeat=k - 1):
        product = identity
        for w in prefix:
            product = tuple(product[w[i]] for i in range(n))
        # the inverse of the running product closes the tuple, and a
        # permutation shares its cycle type with its inverse
        types = tuple(cycle_type(w) for w in prefix) + (cycle_type(product),)
        hist[types] += 1
    return hist


def permutation_product_check(
    k: int, n: int, alphabets: Sequence[Alphabet | Iterable[Rational]]
) -> bool:
    """Check sum_lam H_lam^(k-2) prod_i s_lam(X_i) = (1/n!) sum over
    identity-product tuples of prod_i p_{type(w_i)}(X_i), where H_lam is the
    hook product.  Guarded to k <= 3 and n <= 5."""
    if k > 3 or n > 5:
        raise ValueError("permutation product check guarded to k <= 3, n <= 5")
    if len(alphabets) != k:
        raise ValueError(f"need exactly {k} alphabets")
    evs = [AlphabetEvaluator(a) for a in alphabets]
    lhs = Fraction(0)
    for lam in partitions_of(n):
        hook_product = factorial(n) // syt_count(lam)
        acc = Fraction(hook_product) ** (k - 2)
        for ev in evs:
            acc *= ev.schur(lam.parts)
        lhs += acc
    rhs = Fraction(0)
    for types, count in product_type_histogram(n, k).items():
        acc = Fraction(count)
        for ev, tp in zip(evs, types):
            acc *= ev.factor_value("p", tp)
        rhs += acc
    return lhs == rhs / factorial(n)


def power_sum_schur_expansion_check(n: int, alphabet: Alphabet | Iterable[Rational]) -> bool:
    """Check p_mu(A) = sum_lam chi^lam(mu) s_lam(A) for every mu of n."""
    ev = AlphabetEvaluator(alphabet)
    for mu in partitions_of(n):
        direct = ev.factor_value("p", mu.parts)
        expanded = Fraction(0)
        for lam in partitions_of(n):
            chi = _character(lam.parts, mu.parts)
            if chi:
                expanded += chi * ev.schur(lam.parts)
        if direct != expanded:
            return False
    return True
