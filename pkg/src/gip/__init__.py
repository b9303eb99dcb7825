"""Graded monomial identities of block-triangular matrix algebras.

The algebra BT(d_1,...,d_m) of block-triangular n-by-n matrices inherits
the cyclic grading that gives the matrix unit e_{ij} the degree (j-i) mod n.
This package decides which products of graded variables vanish identically
on such an algebra, enumerates them, reduces long ones to short ones, and
checks derivations between them.
"""

from .algebra import (
    AlgebraSpec,
    ElementaryMatrix,
    GradedMonomial,
    SupportPattern,
    block_of,
    component_support,
    compose_patterns,
    composed_pattern,
    empty_line_count,
    fall,
    full_shift_pattern,
    make_algebra_spec,
)
from .consequence import (
    CONFIRMED,
    UNRESOLVED,
    ConjectureReport,
    ConsequenceVerdict,
    Derivation,
    IndependenceEntry,
    LabeledMonomialPair,
    RearrangementStep,
    conjecture_report,
    equivalence_class,
    equivalence_witness,
    evaluate_ordering,
    independence_check,
    is_consequence,
    replay_derivation,
)
from .errors import (
    CapExceeded,
    GeneratorNotIdentity,
    GipError,
    LabelMismatch,
    LengthMismatch,
    NotAnIdentity,
    OutOfRange,
    SizeMismatch,
    SumMismatch,
    TargetNotIdentity,
    UnsupportedEntry,
    ZeroBlock,
    ZeroDegreeVariable,
)
from .evaluation import (
    FallDecomposition,
    GenericMatrix,
    MonomialSegment,
    ProfileStep,
    StandardSubstitution,
    collapse,
    collapse_with_blocks,
    evaluate_standard,
    fall_decomposition,
    fall_profile,
    find_witness,
    generic_evaluate,
    generic_matrix,
    integer_evaluation,
    reduction_candidates,
)
from .identities import (
    BasisBT_n11,
    IdentityReport,
    bt_n11_criterion,
    check_identity,
    enumerate_identities,
    identities_with_prefix,
    is_identity,
    minimal_basis_bt_n11,
    short_monomial_is_identity,
    strip_zero_degrees,
)

__version__ = "0.1.0"
