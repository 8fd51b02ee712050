"""Exact Egyptian-fraction expansions and the identities that transform them."""

from egyfrac.expansion import (
    ExpansionTooLarge,
    GreedyStep,
    GreedyTrace,
    MixedForm,
    binary_remainder_expand,
    divmod_split,
    enumerate_one_representations,
    expand_full,
    expand_one_from,
    greedy_expand,
)
from egyfrac.operators import (
    CollisionError,
    OperatorInstance,
    OperatorKind,
    RewriteParams,
    apply_to_repr,
    classify_operator,
    inequality_chain_check,
    is_parity_preserving,
    merge_pair,
    odd_preserving_check,
    parity_signature,
    rewrite_match,
    rewrite_pair,
    split_basic,
    split_even,
    split_odd3,
    split_product,
)
from egyfrac.rational_core import (
    DomainError,
    EgyptianRepr,
    Parity,
    ParityVector,
    QClass,
    UnitFraction,
    classify_q,
    format_rational,
    is_strict_egyptian,
    make_rational,
    parse_rational,
    parse_repr,
    repr_sum,
)
from egyfrac.search import (
    SearchConstraints,
    enumerate_reprs,
    search_all_odd,
    two_term_odd_split_exists,
    verify_instance,
    verify_repr,
)

__version__ = "0.1.0"
