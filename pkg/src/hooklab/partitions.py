"""Integer partitions, their cell statistics, and standard tableau counts.

A partition of n is a weakly decreasing tuple of positive integers summing
to n.  The statistics exposed here are the ones the functional machinery
feeds on: hook lengths, contents, shifted parts, and padded part lists,
each packaged as a finite multiset of exact values (an Alphabet).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator

from .exact import Rational, det_fraction

BRUTE_FORCE_CELLS = 12
SKEW_BRUTE_FORCE_CELLS = 8


class Alphabet:
    """A finite multiset of exact rational values, kept sorted."""

    __slots__ = ("values",)

    def __init__(self, values: Iterable[Rational] = ()):
        object.__setattr__(self, "values", tuple(sorted(values)))

    def __iter__(self) -> Iterator[Rational]:
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Alphabet):
            return NotImplemented
        return self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        return f"Alphabet({list(self.values)!r})"

    def counter(self) -> Counter:
        return Counter(self.values)

    def union(self, other: "Alphabet") -> "Alphabet":
        return Alphabet(self.values + other.values)


@dataclass(frozen=True)
class Partition:
    """An integer partition, stored as a weakly decreasing tuple of parts."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        ps = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", ps)
        if any(p <= 0 for p in ps):
            raise ValueError(f"parts must be positive: {ps}")
        if any(ps[i] < ps[i + 1] for i in range(len(ps) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {ps}")

    @classmethod
    def of(cls, parts: Iterable[int]) -> "Partition":
        return cls(tuple(parts))

    @classmethod
    def from_text(cls, text: str) -> "Partition":
        """Parse "3+1" (the empty string is the empty partition)."""
        text = text.strip()
        if not text:
            return cls()
        return cls(tuple(int(p) for p in text.split("+")))

    def to_text(self) -> str:
        return "+".join(str(p) for p in self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        cols = [sum(1 for p in self.parts if p > j) for j in range(self.parts[0])]
        return Partition(tuple(cols))

    def contains(self, other: "Partition") -> bool:
        if len(other) > len(self):
            return False
        return all(self.parts[i] >= other.parts[i] for i in range(len(other)))

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, p in enumerate(self.parts):
            for j in range(p):
                yield (i, j)

    def hook_lengths(self) -> list[int]:
        """Hook length of each cell: arm + leg + 1."""
        conj = self.conjugate().parts
        return [
            self.parts[i] - j + conj[j] - i - 1
            for i, j in self.cells()
        ]

    def content_values(self) -> list[int]:
        """Content of each cell (i, j): j - i."""
        return [j - i for i, j in self.cells()]

    def hooks(self) -> Alphabet:
        return Alphabet(self.hook_lengths())

    def contents(self) -> Alphabet:
        return Alphabet(self.content_values())

    def padded(self, n: int) -> tuple[int, ...]:
        if n < len(self.parts):
            raise ValueError(f"cannot pad {len(self.parts)} parts down to {n}")
        return self.parts + (0,) * (n - len(self.parts))

    def shifted_parts(self, n: int) -> Alphabet:
        """The multiset {part_i + n - i : 1 <= i <= n} with parts padded by zeros to length n."""
        pad = self.padded(n)
        return Alphabet(pad[i] + n - (i + 1) for i in range(n))


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n in reverse lexicographic order, (n) first, (1,...,1) last."""
    if n < 0:
        raise ValueError("partitions need n >= 0")
    out: list[Partition] = []

    def descend(remaining: int, cap: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(Partition(tuple(prefix)))
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            descend(remaining - part, part, prefix)
            prefix.pop()

    descend(n, n, [])
    return out


def partition_counts(n_max: int) -> list[int]:
    """p(0), ..., p(n_max) by Euler's pentagonal number recurrence."""
    p = [1] + [0] * n_max
    for n in range(1, n_max + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p


@lru_cache(maxsize=None)
def syt_count(shape: Partition) -> int:
    """Number of standard Young tableaux, by the hook length formula."""
    n = shape.weight
    prod = 1
    for h in shape.hook_lengths():
        prod *= h
    count, rem = divmod(factorial(n), prod)
    if rem:
        raise ArithmeticError(f"hook product does not divide {n}! for {shape.parts}")
    return count


def syt_count_bruteforce(shape: Partition) -> int:
    """Count standard fillings directly by placing 1..n row by row.

    Independent of the hook length formula; refuses shapes with more than
    BRUTE_FORCE_CELLS cells.
    """
    n = shape.weight
    if n > BRUTE_FORCE_CELLS:
        raise ValueError(f"brute force tableau count limited to {BRUTE_FORCE_CELLS} cells")
    parts = shape.parts
    filled = [0] * len(parts)

    def place(done: int) -> int:
        if done == n:
            return 1
        total = 0
        for i in range(len(parts)):
            if filled[i] < parts[i] and (i == 0 or filled[i - 1] > filled[i]):
                filled[i] += 1
                total += place(done + 1)
                filled[i] -= 1
        return total

    return place(0)


@dataclass(frozen=True)
class SkewShape:
    """A skew shape outer/inner; the inner partition must fit in the outer one."""

    outer: Partition
    inner: Partition

    def __post_init__(self) -> None:
        if not self.outer.contains(self.inner):
            raise ValueError(
                f"inner shape {self.inner.parts} not contained in outer {self.outer.parts}"
            )

    @property
    def size(self) -> int:
        return self.outer.weight - self.inner.weight


def skew_syt_count(shape: SkewShape) -> int:
    """Standard tableaux of a skew shape via the determinant
    f = N! * det( 1 / (outer_i - inner_j - i + j)! ), with 1/k! = 0 for k < 0."""
    rows = len(shape.outer)
    if rows == 0:
        return 1
    inner = shape.inner.padded(rows)
    matrix = []
    for i in range(rows):
        line = []
        for j in range(rows):
            arg = shape.outer.parts[i] - inner[j] - i + j
            line.append(Fraction(1, factorial(arg)) if arg >= 0 else Fraction(0))
        matrix.append(line)
    value = det_fraction(matrix) * factorial(shape.size)
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(f"skew tableau determinant was not a count: {value}")
    return int(value)


def skew_syt_count_bruteforce(shape: SkewShape) -> int:
    """Count skew tableaux as corner-removal chains from outer down to inner."""
    if shape.size > SKEW_BRUTE_FORCE_CELLS:
        raise ValueError(
            f"brute force skew count limited to {SKEW_BRUTE_FORCE_CELLS} cells"
        )
    inner = shape.inner.parts

    def chains(parts: tuple[int, ...]) -> int:
        if sum(parts) == sum(inner):
            return 1
        total = 0
        for i in range(len(parts)):
            # (i, parts[i]-1) is a removable corner if the next row is shorter.
            if parts[i] > 0 and (i + 1 == len(parts) or parts[i] > parts[i + 1]):
                floor = inner[i] if i < len(inner) else 0
                if parts[i] - 1 >= floor:
                    total += chains(parts[:i] + (parts[i] - 1,) + parts[i + 1 :])
        return total

    return chains(shape.outer.parts)


def staircase_alphabet(n: int, squared: bool = False) -> Alphabet:
    """The multiset with i (or i^2) appearing n - i times, for 1 <= i <= n-1."""
    vals: list[int] = []
    for i in range(1, n):
        v = i * i if squared else i
        vals.extend([v] * (n - i))
    return Alphabet(vals)


def hook_difference_alphabet(shape: Partition, n: int) -> Alphabet:
    """The multiset {hooks} union {part_a - part_b - a + b : 1 <= a < b <= n}
    built from parts padded with zeros to length n."""
    pad = shape.padded(n)
    diffs = [
        pad[a] - pad[b] + (b - a)
        for a in range(n)
        for b in range(a + 1, n)
    ]
    return Alphabet(shape.hook_lengths() + diffs)


def multiset_identity_check(shape: Partition) -> bool:
    """Check {hooks} u {part differences} == {n + contents} u {staircase} as multisets."""
    n = shape.weight
    left = hook_difference_alphabet(shape, n)
    right = Alphabet([n + c for c in shape.content_values()]).union(staircase_alphabet(n))
    return left == right


@lru_cache(maxsize=None)
def _partitions_cached(n: int) -> tuple[Partition, ...]:
    return tuple(enumerate_partitions(n))


def partitions_of(n: int) -> tuple[Partition, ...]:
    """Cached variant of enumerate_partitions for the hot evaluation loops."""
    return _partitions_cached(n)
