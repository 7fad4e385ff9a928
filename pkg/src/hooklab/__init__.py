"""hooklab: exact arithmetic for hook length, content, and shifted-part identities."""

__version__ = "0.1.0"

from .exact import (
    PolyQ,
    binomial,
    central_factorial,
    falling_factorial,
    lagrange_interpolate,
    poly_from_strings,
    poly_to_strings,
    rising_factorial,
    signless_stirling,
)
from .functionals import (
    FitReport,
    FunctionalSpec,
    alphabet_for,
    fit_functional,
    functional_value,
    permutation_tuple_count,
)
from .partitions import (
    Alphabet,
    Partition,
    SkewShape,
    enumerate_partitions,
    multiset_identity_check,
    partition_counts,
    skew_syt_count,
    staircase_alphabet,
    syt_count,
    syt_count_bruteforce,
)
from .series import SeriesQt
from .symfunc import SymExpr, eval_expr, eval_term, mn_character, z_mu
from .verify import CheckResult, run_checks

__all__ = [
    "Alphabet",
    "CheckResult",
    "FitReport",
    "FunctionalSpec",
    "Partition",
    "PolyQ",
    "SeriesQt",
    "SkewShape",
    "SymExpr",
    "__version__",
    "alphabet_for",
    "binomial",
    "central_factorial",
    "enumerate_partitions",
    "eval_expr",
    "eval_term",
    "falling_factorial",
    "fit_functional",
    "functional_value",
    "lagrange_interpolate",
    "mn_character",
    "multiset_identity_check",
    "partition_counts",
    "permutation_tuple_count",
    "poly_from_strings",
    "poly_to_strings",
    "rising_factorial",
    "run_checks",
    "signless_stirling",
    "skew_syt_count",
    "staircase_alphabet",
    "syt_count",
    "syt_count_bruteforce",
    "z_mu",
]
