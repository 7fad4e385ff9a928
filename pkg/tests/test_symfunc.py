import itertools
from collections import Counter
from fractions import Fraction
from math import factorial, prod

import pytest

from hooklab.exact import PolyQ, det_fraction
from hooklab.partitions import Alphabet, Partition, enumerate_partitions, syt_count
from hooklab.symfunc import (
    AlphabetEvaluator,
    SymExpr,
    SymExprParseError,
    a_poly,
    a_poly_by_tableaux,
    cauchy_check,
    cycle_type,
    dual_cauchy_check,
    epsilon_sign,
    eval_expr,
    eval_term,
    mn_character,
    permutation_product_check,
    phi_p,
    phi_p_by_characters,
    power_sum_schur_expansion_check,
    product_type_histogram,
    single_row_expansion_check,
    z_mu,
)

F = Fraction


# --- parsing ---------------------------------------------------------------

def test_parse_basic_forms():
    assert SymExpr.parse("e[1]") == SymExpr.generator("e", [1])
    assert SymExpr.parse("p[2,1](y)") == SymExpr.generator("p", [2, 1], slot="y")
    assert SymExpr.parse("2") == SymExpr.constant(2)
    assert SymExpr.parse("-3/4") == SymExpr.constant(F(-3, 4))
    assert SymExpr.parse("e[1] - e[1]") == SymExpr.zero()


def test_parse_signs_and_coefficients():
    expr = SymExpr.parse("3/2*e[2](x) - p[1](y)*2")
    terms = expr.terms
    assert terms[(("x", "e", (2,)),)] == F(3, 2)
    assert terms[(("y", "p", (1,)),)] == -2


def test_parse_merges_like_factors_per_slot():
    assert SymExpr.parse("e[2](x)*e[1](x)") == SymExpr.generator("e", [2, 1])
    # different slots stay separate factors
    expr = SymExpr.parse("e[1](x)*e[1](y)")
    assert len(next(iter(expr.terms))) == 2


def test_parse_round_trip_through_text():
    expr = SymExpr.parse("e[2,1](x)*p[3](y) + 1/2*h[2] - m[1,1](z)")
    assert SymExpr.parse(expr.text()) == expr
    assert SymExpr.zero().text() == "0"


@pytest.mark.parametrize("bad", ["", "e[", "q[1]", "e[0]", "e[1](w)", "e[1]+", "e[1]**2"])
def test_parse_rejects_malformed(bad):
    with pytest.raises(SymExprParseError):
        SymExpr.parse(bad)


def test_expression_algebra():
    a = SymExpr.generator("e", [1])
    b = SymExpr.generator("p", [2], slot="y")
    assert (a + b) - b == a
    assert a * SymExpr.zero() == SymExpr.zero()
    assert 2 * a + a == 3 * a
    assert (a + 1) * (a - 1) == a * a - 1


def test_weight_and_slots():
    expr = SymExpr.parse("e[2,2](x)*p[1](y) + h[3](x)")
    assert expr.weight() == 5
    assert expr.slot_weight("x") == 4
    assert expr.slot_weight("y") == 1
    assert expr.slot_weight("z") == 0
    assert expr.slots() == {"x", "y"}
    assert SymExpr.constant(7).weight() == 0


# --- evaluation against brute-force oracles --------------------------------

ALPHABETS = [
    Alphabet([1, 2, 3]),
    Alphabet([F(1, 2), -1, 3, 2]),
    Alphabet([0, 1, 1, -2]),
    Alphabet(()),
]


def brute_elementary(values, k):
    return sum((prod(c, start=F(1)) for c in itertools.combinations(values, k)), F(0))


def brute_complete(values, k):
    return sum(
        (prod(c, start=F(1)) for c in itertools.combinations_with_replacement(values, k)),
        F(0),
    )


def brute_monomial(values, parts):
    exps = tuple(parts) + (0,) * (len(values) - len(parts))
    if len(parts) > len(values):
        return F(0)
    return sum(
        (prod((F(v) ** e for v, e in zip(values, p)), start=F(1))
         for p in set(itertools.permutations(exps))),
        F(0),
    )


def brute_schur(values, parts):
    # bialternant ratio, valid when the alphabet values are pairwise distinct
    m = len(values)
    if len(parts) > m:
        return F(0)
    lam = tuple(parts) + (0,) * (m - len(parts))
    num = det_fraction([[F(v) ** (lam[i] + m - 1 - i) for i in range(m)] for v in values])
    den = det_fraction([[F(v) ** (m - 1 - i) for i in range(m)] for v in values])
    return num / den


@pytest.mark.parametrize("alphabet", ALPHABETS)
def test_elementary_and_complete_match_bruteforce(alphabet):
    ev = AlphabetEvaluator(alphabet)
    values = list(alphabet)
    for k in range(7):
        assert ev.elementary(k) == brute_elementary(values, k)
        assert ev.complete(k) == brute_complete(values, k)
    assert ev.elementary(len(values) + 1) == 0


@pytest.mark.parametrize("alphabet", ALPHABETS)
def test_power_sums(alphabet):
    ev = AlphabetEvaluator(alphabet)
    for k in range(1, 5):
        assert ev.power_sum(k) == sum((F(v) ** k for v in alphabet), F(0))
    with pytest.raises(ValueError):
        ev.power_sum(0)


@pytest.mark.parametrize("alphabet", ALPHABETS)
def test_monomial_matches_rearrangement_sum(alphabet):
    ev = AlphabetEvaluator(alphabet)
    for n in range(5):
        for lam in enumerate_partitions(n):
            assert ev.monomial(lam.parts) == brute_monomial(list(alphabet), lam.parts)


def test_monomial_guard():
    ev = AlphabetEvaluator(Alphabet(range(13)))
    with pytest.raises(ValueError):
        ev.monomial((1,))


def test_schur_matches_bialternant():
    for values in ([1, 2, 3], [F(1, 2), 2, -3]):
        ev = AlphabetEvaluator(Alphabet(values))
        for n in range(6):
            for lam in enumerate_partitions(n):
                assert ev.schur(lam.parts) == brute_schur(values, lam.parts)


def test_schur_hook_content_specialization():
    # s_lam evaluated on t copies of 1 equals prod_u (t + content(u)) / hook product
    for lam in enumerate_partitions(6):
        hooks = prod(lam.hook_lengths())
        for t in range(7):
            ev = AlphabetEvaluator(Alphabet([1] * t))
            expected = F(prod(t + c for c in lam.content_values()), hooks)
            assert ev.schur(lam.parts) == expected


def test_basis_relations():
    # e_k = m_(1^k) and h_k = sum over all monomial symmetric functions of degree k
    ev = AlphabetEvaluator(Alphabet([F(2, 3), -1, 4, 5]))
    for k in range(1, 5):
        assert ev.elementary(k) == ev.monomial((1,) * k)
        assert ev.complete(k) == sum(
            (ev.monomial(lam.parts) for lam in enumerate_partitions(k)), F(0)
        )


def test_eval_term_examples():
    assert eval_term("p", [1], Partition((3, 1)).hooks()) == 8
    squared = Alphabet([h * h for h in Partition((3, 1)).hook_lengths()])
    assert eval_term("p", [1], squared) == 22
    assert eval_term("e", [1, 1], Partition((2, 1)).contents()) == 0
    assert eval_term("e", [5], Alphabet([1, 2, 3, 4])) == 0
    assert eval_term("h", [2], Alphabet([1, 2])) == 7
    assert eval_term("s", [2, 1], Alphabet([1, 2])) == 6


def test_eval_expr():
    expr = SymExpr.parse("e[1](x)*e[1](y)")
    assert eval_expr(expr, {"x": Alphabet([1, 2]), "y": Alphabet([3])}) == 9
    assert eval_expr(SymExpr.constant(F(5, 3)), {}) == F(5, 3)
    assert eval_expr(SymExpr.zero(), {}) == 0
    with pytest.raises(ValueError):
        eval_expr(expr, {"x": Alphabet([1, 2])})


# --- characters -------------------------------------------------------------

def test_character_examples():
    assert mn_character(Partition((2, 1)), (1, 1, 1)) == 2
    assert mn_character(Partition((2, 1)), (3,)) == -1
    assert mn_character(Partition((2, 2)), (2, 2)) == 2
    assert mn_character(Partition(()), ()) == 1


def test_character_row_and_column_shapes():
    for n in range(1, 7):
        for mu in enumerate_partitions(n):
            assert mn_character(Partition((n,)), mu) == 1
            assert mn_character(Partition((1,) * n), mu) == epsilon_sign(mu)


def test_character_at_identity_is_tableau_count():
    for n in range(1, 8):
        for lam in enumerate_partitions(n):
            assert mn_character(lam, (1,) * n) == syt_count(lam)


def test_character_weight_mismatch():
    with pytest.raises(ValueError):
        mn_character(Partition((2, 1)), (2, 2))


def test_character_column_orthogonality():
    n = 5
    classes = enumerate_partitions(n)
    for mu in classes:
        for nu in classes:
            total = sum(
                mn_character(lam, mu) * mn_character(lam, nu)
                for lam in classes
            )
            assert total == (z_mu(mu) if mu == nu else 0)


def test_z_mu_and_sign():
    assert z_mu((1, 1, 1)) == 6
    assert z_mu((2, 1)) == 2
    assert z_mu((3, 3)) == 18
    assert z_mu(()) == 1
    assert epsilon_sign((1, 1, 1, 1)) == 1
    assert epsilon_sign((2,)) == -1
    assert epsilon_sign((3,)) == 1
    assert epsilon_sign((4, 3)) == -1


def test_class_sizes_sum_to_group_order():
    for n in range(1, 8):
        assert sum(factorial(n) // z_mu(mu) for mu in enumerate_partitions(n)) == factorial(n)


# --- shift transform polynomials --------------------------------------------

def test_a_poly_small_shapes():
    v = PolyQ.variable()
    assert a_poly(Partition(())) == PolyQ((1,))
    assert a_poly(Partition((1,))) == v + 1
    assert a_poly(Partition((2,))) == PolyQ((0, F(3, 2), F(1, 2)))
    assert a_poly(Partition((1, 1))) == PolyQ((1, F(3, 2), F(1, 2)))


def test_a_poly_two_forms_agree():
    for n in range(7):
        for lam in enumerate_partitions(n):
            assert a_poly(lam) == a_poly_by_tableaux(lam)


def test_a_poly_integer_valued():
    for n in range(7):
        for lam in enumerate_partitions(n):
            p = a_poly(lam)
            for v0 in range(-5, 6):
                assert p(v0).denominator == 1


def test_phi_p_small_cases():
    v = PolyQ.variable()
    assert phi_p((1,)) == v + 1
    assert phi_p((2,)) == PolyQ((-1,))
    assert phi_p((1, 1)) == PolyQ((1, 3, 1))
    assert phi_p((2, 1)) == -(v + 1)
    with pytest.raises(ValueError):
        phi_p(())


def test_phi_p_matches_character_expansion():
    for n in range(1, 7):
        for mu in enumerate_partitions(n):
            assert phi_p(mu) == phi_p_by_characters(mu)


def test_single_row_expansion():
    for alphabet in (Alphabet([1, 2, 3]), Alphabet([F(1, 2), -1, 3])):
        for v0 in (0, 1, -2, F(5, 2)):
            for n in range(6):
                assert single_row_expansion_check(n, v0, alphabet)


# --- product and Cauchy identities -------------------------------------------

def test_cycle_type():
    assert cycle_type((0, 1, 2)) == (1, 1, 1)
    assert cycle_type((1, 0, 2)) == (2, 1)
    assert cycle_type((1, 2, 0)) == (3,)
    assert cycle_type(()) == ()


def test_product_type_histogram_small():
    hist = product_type_histogram(2, 2)
    assert hist[((1, 1), (1, 1))] == 1
    assert hist[((2,), (2,))] == 1
    assert sum(hist.values()) == 2
    solo = product_type_histogram(3, 1)
    assert solo == Counter({((1, 1, 1),): 1})


def test_product_histogram_counts_commutator_free_pairs():
    # for k = 2 the partner must be the inverse, so the diagonal carries
    # exactly the class sizes
    hist = product_type_histogram(4, 2)
    for mu in enumerate_partitions(4):
        assert hist[(mu.parts, mu.parts)] == factorial(4) // z_mu(mu)
    assert sum(hist.values()) == factorial(4)


def test_permutation_product_check_and_guards():
    assert permutation_product_check(2, 3, [Alphabet([1, 1]), Alphabet([1, 1, 1])])
    assert permutation_product_check(3, 3, [Alphabet([1]), Alphabet([1, 2]), Alphabet([2])])
    assert permutation_product_check(2, 4, [Alphabet([F(1, 2), 1]), Alphabet([2, 3])])
    with pytest.raises(ValueError):
        permutation_product_check(4, 3, [Alphabet([1])] * 4)
    with pytest.raises(ValueError):
        permutation_product_check(2, 6, [Alphabet([1])] * 2)
    with pytest.raises(ValueError):
        permutation_product_check(2, 3, [Alphabet([1])])


def test_cauchy_identities():
    x, y = Alphabet([1, 2]), Alphabet([F(1, 3), -1, 2])
    for n in range(6):
        assert cauchy_check(n, x, y)
        assert dual_cauchy_check(n, x, y)
    assert cauchy_check(3, Alphabet([1, 2]), Alphabet([1]))
    assert dual_cauchy_check(2, Alphabet([1]), Alphabet([1, 1]))


def test_power_sum_schur_expansion():
    for n in range(6):
        assert power_sum_schur_expansion_check(n, Alphabet([1, 2, 3]))
        assert power_sum_schur_expansion_check(n, Alphabet([F(1, 2), -2]))
