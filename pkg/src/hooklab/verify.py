"""Named verification suites over the whole package.

Every suite is a pure function (bound, rng) -> (cases, failures) registered
under a short name; run_checks executes a selection, optionally in a thread
pool, and always returns results in registry order so output is
byte-identical for a fixed seed regardless of the jobs setting.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from time import perf_counter
from typing import Callable, Iterable, Sequence

from .exact import binomial
from .functionals import (
    FunctionalSpec,
    content_moment_check,
    content_power_check,
    fit_functional,
    functional_value,
    hook_moment_check,
    hook_power_check,
    permutation_tuple_count,
)
from .goldens import content_elementary_reference, hook_elementary_reference
from .partitions import (
    multiset_identity_check,
    partition_counts,
    partitions_of,
    syt_count,
    syt_count_bruteforce,
)
from .series_identities import (
    content_expansion_series,
    content_product_series,
    hook_expansion_series,
    hook_product_series,
    two_parameter_check,
)
from .symfunc import (
    SymExpr,
    a_poly,
    a_poly_by_tableaux,
    cauchy_check,
    dual_cauchy_check,
    mn_character,
    permutation_product_check,
    phi_p,
    phi_p_by_characters,
    power_sum_schur_expansion_check,
    single_row_expansion_check,
)

CheckFn = Callable[[int, random.Random], tuple[int, list[str]]]


@dataclass(frozen=True)
class CheckResult:
    name: str
    description: str
    passed: bool
    cases: int
    failures: tuple[str, ...]
    elapsed: float

    def to_json(self) -> dict:
        # elapsed stays out: reports must be byte-identical across runs
        return {
            "name": self.name,
            "description": self.description,
            "passed": self.passed,
            "cases": self.cases,
            "failures": list(self.failures),
        }


def _random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def _random_alphabet(rng: random.Random, size: int) -> list[Fraction]:
    return [_random_rational(rng) for _ in range(size)]


def _distinct_rationals(rng: random.Random, count: int) -> list[Fraction]:
    out: list[Fraction] = []
    while len(out) < count:
        v = _random_rational(rng)
        if v not in out:
            out.append(v)
    return out


def _check_squared_tableaux(bound: int, rng: random.Random) -> tuple[int, list[str]]:
    failures = []
    for n in range(bound + 1):
        total = sum(syt_count(shape) ** 2 for shape in partitions_of(n))
        if total != factorial(n):
            failures.append(f"sum of squared tableau counts at n={n}: {total} != {n}!")
    return bound + 1, failures


def _check_tableau_bruteforce(bound: int, rng: random.Random) -> tuple[int, list[str]]:
    failures, cases = [], 0
    for n in range(min(bound, 12) + 1):
        for shape in partitions_of(n):
            cases += 1
            formula, brute = syt_count(shape), syt_count_bruteforce(shape)
            if formula != brute:
                failures.append(f"tableau count mismatch at {shape.parts}: {formula} != {brute}")
    return cases, failures


def _check_multiset_lemma(bound: int, rng: random.Random) -> tuple[int, list[str]]:
    failures, cases = [], 0
    for n in range(bound + 1):
        for shape in partitions_of(n):
            cases += 1
            if not multiset_identity_check(shape):
                failures.append(f"multiset identity fails at {shape.parts}")
    return cases, failures


def _content_spec(mu: Sequence[int]) -> FunctionalSpec:
    return FunctionalSpec(SymExpr.generator("e", mu, "x"), {"x": "contents"})


def _check_content_table(bound: int, rng: random.Random) -> tuple[int, list[str]]:
    failures, cases = [], 0
    for mu, golden in content_elementary_reference.items():
        spec = _content_spec(mu)
        report = fit_functional(spec)
        cases += 1
        if not report.verified or report.polynomial != golden:
            failures.append(f"content table fit mismatch at mu={mu}")
            continue
        if report.polynomial.degree != sum(mu):
            failures.append(f"content table degree law fails at mu={mu}")
        for n in range(bound + 1):
            cases += 1
            value = functional_value(spec, n)
            if value != golden(n):
                failures.append(f"content functional at mu={mu}, n={n}: got {value}")
            elif n < 1 + mu[0] and value != 0:
                failures.append(f"content functional must vanish at mu={mu}, n={n}")
    return cases, failures


def _check_hook_table(bound: int, rng: random.Random) -> tuple[int, list[str]]:
    failures, cases = [], 0
    for mu, golden in hook_elementary_reference.items():
        spec = FunctionalSpec(SymExpr.generator("e", mu, "x"), {"x": "hooks_squared"})
        report = fit_functional(spec)
        cases += 1
        if not report.verified or report.polynomial != golden:
            failures.append(f"hook table fit mismatch at mu={mu}")
    return cases, failures


def _check_hook_series(bound: int, rng: random.Random) -> tuple[int, list[str]]:
    order = min(bound, 30)
    failures = []
    lhs, rhs = hook_expansion_series(order), hook_product_series(order)
    cases = 1
    if lhs != rhs:
        failures.append(f"hook series mismatch at truncation {order}")
    counts = partition_counts(order)
    for n, value in enumerate(lhs.specialize_t(0)):
        cases += 1
        if value != counts[n]:
            failures.append(f"hook series at t=0, x^{n}: {value} != p({n})")
    for n in range(order + 1):
        layer = lhs.coefficient(n)
        cases += 1
        if layer.degree != n or layer[n] != Fraction(1, factorial(n)):
            failures.append(f"hook series t-degree or leading coefficient wrong at x^{n}")
    return cases, failures


def _check_content_series(bound: int, rng: random.Random) -> tuple[int, list[str]]:
    order = min(bound, 30)
    failures = []
    lhs, rhs = content_expansion_series(order), content_product_series(order)
    cases = 1
    if lhs != rhs:
        failures.append(f"content series mismatch at truncation {order}")
    t0 = 3
    for n, value in enumerate(lhs.specialize_t(t0)):
        cases += 1
        if value != binomial(t0 + n - 1, n):
            failures.append(f"content series at t={t0}, x^{n}: {value}")
    return cases, failures


def _check_two_parameter(bound: int, rng: random.Random) -> tuple[int, list[str]]:
    order = min(bound, 20)
    ts = _distinct_rationals(rng, 5)
    vs = _distinct_rationals(rng, 5)
    grid = [(t0, v0) for t0 in ts for v0 in vs]
    ok = two_parameter_check(order, grid)
    return len(grid), [] if ok else [f"two parameter identity fails on seeded grid at N={order}"]


def _check_content_moments(bound: int, rng: random.Random) -> tuple[int, list[str]]:
    failures, cases = [], 0
    top = min(bound, 14)
    for r in range(5):
        for n in range(top + 1):
            cases += 1
            if not content_moment_check(r, n):
                failures.append(f"content moment identity fails at r={r}, n={n}")
    for k in range(1, 5):
        for n in range(top + 1):
            cases += 1
            if not content_power_check(k, n):
                failures.append(f"content power identity fails at k={k}, n={n}")
    return cases, failures


def _check_hook_moments(bound: int, rng: random.Random) -> tuple[int, list[str]]:
    failures, cases = [], 0
    top = min(bound, 14)
    for r in range(4):
        for n in range(top + 1):
            cases += 1
            if not hook_moment_check(r, n):
                failures.append(f"hook moment identity fails at r={r}, n={n}")
    for k in range(1, 4):
        for n in range(top + 1):
            cases += 1
            if not hook_power_check(k, n):
                failures.append(f"hook power identity fails at k={k}, n={n}")
    return cases, failures


def _check_tuple_counts(bound: int, rng: random.Random) -> tuple[int, list[str]]:
    failures, cases = [], 0
    mus = [mu for w in range(1, 5) for mu in partitions_of(w)]
    for k, top in ((2, min(bound, 10)), (3, min(bound, 6))):
        for n in range(top + 1):
            for mu in mus:
                if len(mu) > k:
                    continue
                cases += 1
                count = permutation_tuple_count(mu, n, k)
                value = functional_value(_content_spec(mu.parts), n)
                if count != value:
                    failures.append(
                        f"tuple count mismatch at mu={mu.parts}, n={n}, k={k}: {count} != {value}"
                    )
    return cases, failures


def _check_single_row_expansion(bound: int, rng: random.Random) -> tuple[int, list[str]]:
    failures, cases = [], 0
    vs = [_random_rational(rng) for _ in range(5)]
    alphabets = [_random_alphabet(rng, 7) for _ in range(3)]
    for n in range(bound + 1):
        for v0 in vs:
            for alpha in alphabets:
                cases += 1
                if not single_row_expansion_check(n, v0, alpha):
                    failures.append(f"row expansion fails at n={n}, v0={v0}, alphabet={alpha}")
    return cases, failures


def _check_shift_transform(bound: int, rng: random.Random) -> tuple[int, list[str]]:
    failures, cases = [], 0
    for n in range(1, bound + 1):
        for mu in partitions_of(n):
            cases += 1
            if phi_p(mu) != phi_p_by_characters(mu):
                failures.append(f"power sum transform mismatch at mu={mu.parts}")
    for n in range(bound + 1):
        identity_class = (1,) * n
        for lam in partitions_of(n):
            poly = a_poly(lam)
            cases += 1
            if poly != a_poly_by_tableaux(lam):
                failures.append(f"transform polynomial forms differ at {lam.parts}")
            if any(poly(v).denominator != 1 for v in range(-5, 6)):
                failures.append(f"transform polynomial not integer-valued at {lam.parts}")
            if mn_character(lam, identity_class) != syt_count(lam):
                failures.append(f"character at the identity class wrong for {lam.parts}")
    return cases, failures


def _check_permutation_products(bound: int, rng: random.Random) -> tuple[int, list[str]]:
    failures, cases = [], 0
    for k in (2, 3):
        for n in range(min(bound, 5) + 1):
            alphabets = [_random_alphabet(rng, 3) for _ in range(k)]
            cases += 1
            if not permutation_product_check(k, n, alphabets):
                failures.append(f"permutation product identity fails at k={k}, n={n}")
    return cases, failures


def _check_cauchy(bound: int, rng: random.Random) -> tuple[int, list[str]]:
    failures, cases = [], 0
    for n in range(bound + 1):
        x = _random_alphabet(rng, 3)
        y = _random_alphabet(rng, 3)
        cases += 2
        if not cauchy_check(n, x, y):
            failures.append(f"Cauchy identity fails at n={n}")
        if not dual_cauchy_check(n, x, y):
            failures.append(f"dual Cauchy identity fails at n={n}")
        if n <= 6:
            cases += 1
            if not power_sum_schur_expansion_check(n, x):
                failures.append(f"power sum Schur expansion fails at n={n}")
    return cases, failures


def _check_negative_control(bound: int, rng: random.Random) -> tuple[int, list[str]]:
    failures = []
    squares = FunctionalSpec(SymExpr.generator("p", (2,), "y"), {"y": "parts"})
    value = functional_value(squares, 3)
    if value != Fraction(16, 3):
        failures.append(f"squared parts functional at n=3: {value} != 16/3")
    report = fit_functional(squares)
    if report.verified:
        failures.append("squared parts functional unexpectedly fit a polynomial")
    shifted = FunctionalSpec(SymExpr.generator("p", (2,), "y"), {"y": "parts_minus_index"})
    report = fit_functional(shifted)
    if not report.verified:
        failures.append("squared parts-minus-index functional failed to fit")
    linear = FunctionalSpec(SymExpr.generator("e", (1,), "y"), {"y": "parts_minus_index"})
    report = fit_functional(linear)
    expected = [functional_value(linear, n) for n in range(9)]
    if not report.verified or any(report.polynomial(n) != expected[n] for n in range(9)):
        failures.append("linear parts-minus-index functional failed to fit")
    if any(expected[n] != Fraction(n) - Fraction(n * (n + 1), 2) for n in range(9)):
        failures.append("linear parts-minus-index functional is not n - n(n+1)/2")
    pairs = FunctionalSpec(SymExpr.generator("e", (1, 1), "y"), {"y": "parts_minus_index"})
    if not fit_functional(pairs).verified:
        failures.append("pairwise parts-minus-index functional failed to fit")
    return 5, failures


@dataclass(frozen=True)
class CheckEntry:
    fn: CheckFn
    default_bound: int
    description: str


REGISTRY: dict[str, CheckEntry] = {
    "fsquared": CheckEntry(
        _check_squared_tableaux, 20, "squared tableau counts sum to n factorial"
    ),
    "sytbrute": CheckEntry(
        _check_tableau_bruteforce, 8, "hook length formula matches brute force enumeration"
    ),
    "mset": CheckEntry(
        _check_multiset_lemma, 12, "hook and part-difference multiset identity"
    ),
    "nmu": CheckEntry(
        _check_content_table, 12, "content functional table: fits, goldens, values, degrees"
    ),
    "phimu": CheckEntry(
        _check_hook_table, 12, "squared-hook functional table: fits against goldens"
    ),
    "no": CheckEntry(
        _check_hook_series, 12, "hook expansion series equals the triple product side"
    ),
    "cno": CheckEntry(
        _check_content_series, 14, "content expansion series equals the binomial side"
    ),
    "twoparam": CheckEntry(
        _check_two_parameter, 10, "two-parameter content series on a seeded rational grid"
    ),
    "okada": CheckEntry(
        _check_content_moments, 12, "content moment and power identities"
    ),
    "panova": CheckEntry(
        _check_hook_moments, 12, "squared hook moment and power identities"
    ),
    "conid": CheckEntry(
        _check_tuple_counts, 8, "permutation tuple counts equal the content functional"
    ),
    "spid": CheckEntry(
        _check_single_row_expansion, 7, "single-row expansion identity on seeded alphabets"
    ),
    "vphi": CheckEntry(
        _check_shift_transform, 8, "shift transform polynomials: closed forms vs oracles"
    ),
    "hkm2": CheckEntry(
        _check_permutation_products, 5, "hook-power permutation product identity"
    ),
    "cauchy": CheckEntry(
        _check_cauchy, 7, "Cauchy and dual Cauchy identities on seeded alphabets"
    ),
    "negcontrol": CheckEntry(
        _check_negative_control, 8, "parts alphabet fails to fit; parts minus index fits"
    ),
}

CHECK_NAMES = tuple(REGISTRY)


def resolve_check_names(names: Iterable[str]) -> list[str]:
    requested = list(names) or ["all"]
    if "all" in requested:
        return list(CHECK_NAMES)
    unknown = [n for n in requested if n not in REGISTRY]
    if unknown:
        raise ValueError(f"unknown checks {unknown}; available: {', '.join(CHECK_NAMES)} or all")
    # registry order, deduplicated
    wanted = set(requested)
    return [n for n in CHECK_NAMES if n in wanted]


def run_check(name: str, max_n: int | None = None, seed: int = 0) -> CheckResult:
    entry = REGISTRY[name]
    bound = entry.default_bound if max_n is None else max_n
    if bound < 0:
        raise ValueError("max_n must be >= 0")
    rng = random.Random(f"{seed}:{name}")
    start = perf_counter()
    cases, failures = entry.fn(bound, rng)
    elapsed = perf_counter() - start
    return CheckResult(
        name=name,
        description=entry.description,
        passed=not failures,
        cases=cases,
        failures=tuple(failures),
        elapsed=elapsed,
    )


def run_checks(
    names: Iterable[str],
    max_n: int | None = None,
    seed: int = 0,
    jobs: int = 1,
) -> list[CheckResult]:
    selected = resolve_check_names(names)
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    if jobs == 1 or len(selected) <= 1:
        return [run_check(name, max_n, seed) for name in selected]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(run_check, name, max_n, seed) for name in selected]
        return [f.result() for f in futures]
