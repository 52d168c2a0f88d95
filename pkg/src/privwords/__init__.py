"""Privileged words, palindromic richness and Q-complexity of words."""

from .generators import (
    Directive,
    MorphismSpec,
    WordSource,
    alpha_fixed_point_prefix,
    episturmian_prefix,
    fibonacci_prefix,
    morphic_prefix,
    parse_source,
    periodic_prefix,
    standard_sturmian_prefix,
    thue_morse_prefix,
)
from .palindromes import (
    RichnessReport,
    is_rich,
    palindromic_complexity,
    palindromic_factors,
    pri_equals_pal,
    rich_via_returns,
    richness_report,
)
from .privileged import (
    ComplexityProfile,
    PrivilegedPrefixTable,
    introduced_privileged_factor,
    is_privileged,
    privileged_complexity,
    privileged_factors,
    privileged_prefix_table,
)
from .qcomplexity import (
    LETTER_POWER,
    PALINDROME,
    PRIVILEGED,
    PropertyFlags,
    QProperty,
    UnbalancedPair,
    classify_periodic_tail,
    factor_complexity,
    find_minimal_unbalanced_pair,
    jsp_check,
    ppal_check,
    profile_source,
    property_flags,
    q_complexity,
    validate_q_axioms,
    vanishing_indices,
)
from .returns import (
    ClosedFactorReport,
    all_returns_privileged,
    binary_c_poor_via_conjugate,
    c_poor_via_xy,
    complete_return_factors,
    is_c_poor,
)
from .words import (
    Alphabet,
    FactorSet,
    border_lengths,
    conjugates,
    factors_of_length,
    is_complete_first_return,
    is_palindrome,
    occurrences,
    reverse,
)

__version__ = "0.1.0"
