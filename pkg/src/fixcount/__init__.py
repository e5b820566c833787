"""Realizable integer sequences: periodic-point counts, time-changes and zeta series.

Sequences are 1-indexed finite prefixes held as tuples of Python ints, so the
term ``a_n`` lives at ``a[n - 1]``.
"""

from fixcount.arith import (
    dirichlet_convolve,
    divisors,
    factorize,
    is_prime,
    mobius,
    mobius_convolve,
    mobius_table,
)
from fixcount.realizability import (
    WitnessReport,
    check_realizable,
    e_sum_cross_check,
    fix_from_orbits,
    orbit_counts,
)
from fixcount.seqgen import (
    constant_system,
    full_shift,
    golden_mean,
    lehmer_pierce,
    negated_shift,
    pointwise_product,
    pointwise_sum,
    sigma_system,
    single_orbit,
)
from fixcount.timechange import (
    Composition,
    GP,
    GS,
    Monomial,
    Polynomial,
    Table,
    TimeChange,
    apply,
    compose,
    counterexample_for_polynomial,
    evaluate,
    monomial_preservation_suite,
    parse_timechange,
    preservation_suite,
)
from fixcount.zeta import (
    RationalFunction,
    eta,
    euler_product,
    expand_rational,
    integrality_check,
    zeta_exp,
)

__version__ = "0.1.0"
