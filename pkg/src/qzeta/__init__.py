"""Exact q-analog identities for nested harmonic sums.

The package builds, evaluates and verifies expansion identities for
weak-descent (star) multiple harmonic sums and their infinite-sum and
q -> 1 limits: signed index algebra, exact rational q-arithmetic, finite
and certified-infinite evaluators, an identity compiler with closed-form
families, and a verification harness behind the ``qzeta`` command line.
"""

from .evaluators import (
    ClassicalValue,
    SeriesValue,
    classical_zeta,
    frakz,
    mhs,
    mhs_many,
    mollified_mhs,
    mollified_mhs_many,
    q_zeta,
)
from .expansion import Triple, expand, is_admissible, iter_expansion
from .indices import (
    THETA,
    SignedIndex,
    Theta,
    bar,
    boxplus,
    boxplus_fold,
    delta,
    idx,
    oplus,
    oplus_fold,
    parse_shift,
    proj,
    quad_exponent,
    shift_latex,
    shift_str,
    signed_string,
)
from .qarith import QContext, as_q
from .rules import (
    CLOSED_FAMILIES,
    Block,
    ClassicalTerm,
    Compiled,
    Composition,
    Twos,
    TwosC,
    TwosOnes,
    attach,
    base_state,
    classical_expand,
    closed_2c2,
    closed_2c21,
    closed_2c212,
    closed_212c21,
    closed_212c212,
    closed_c_ones,
    closed_pattern,
    closed_twos,
    closed_twos_ones,
    compose,
    parse_composition,
    tokenize,
    zeta_admissible,
)
from .verify import (
    DEFAULT_SEED,
    LEMMA_PARTS,
    VerificationReport,
    all_passed,
    classical_battery,
    family_equivalence,
    family_instances,
    head_reduction_pattern,
    inverse_power_pattern,
    lemma_suite,
    qmzsv_battery,
    rational_repr,
    run_family,
    sample_compositions,
    symmetric_pair_check,
    thread_count,
    verify_classical,
    verify_mhs,
    verify_qmzsv,
)

__version__ = "0.1.0"

__all__ = [
    "THETA",
    "Block",
    "CLOSED_FAMILIES",
    "ClassicalTerm",
    "ClassicalValue",
    "Compiled",
    "Composition",
    "DEFAULT_SEED",
    "LEMMA_PARTS",
    "QContext",
    "SeriesValue",
    "SignedIndex",
    "Theta",
    "Triple",
    "Twos",
    "TwosC",
    "TwosOnes",
    "VerificationReport",
    "all_passed",
    "as_q",
    "attach",
    "bar",
    "base_state",
    "boxplus",
    "boxplus_fold",
    "classical_battery",
    "classical_expand",
    "classical_zeta",
    "closed_2c2",
    "closed_2c21",
    "closed_2c212",
    "closed_212c21",
    "closed_212c212",
    "closed_c_ones",
    "closed_pattern",
    "closed_twos",
    "closed_twos_ones",
    "compose",
    "delta",
    "expand",
    "family_equivalence",
    "family_instances",
    "frakz",
    "head_reduction_pattern",
    "idx",
    "inverse_power_pattern",
    "is_admissible",
    "iter_expansion",
    "lemma_suite",
    "mhs",
    "mhs_many",
    "mollified_mhs",
    "mollified_mhs_many",
    "oplus",
    "oplus_fold",
    "parse_composition",
    "parse_shift",
    "proj",
    "q_zeta",
    "qmzsv_battery",
    "rational_repr",
    "quad_exponent",
    "run_family",
    "sample_compositions",
    "shift_latex",
    "shift_str",
    "signed_string",
    "symmetric_pair_check",
    "thread_count",
    "tokenize",
    "verify_classical",
    "verify_mhs",
    "verify_qmzsv",
    "zeta_admissible",
]
