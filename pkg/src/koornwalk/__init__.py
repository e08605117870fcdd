"""koornwalk: exact non-symmetric Koornwinder and Macdonald polynomials by
alcove-walk enumeration, with machine verification of the specialization
table relating the Koornwinder family to the Macdonald families of the
classical subsystems of type (C_n^v, C_n).

All arithmetic is exact (arbitrary-precision rationals, half-integer
exponents); there is no floating point anywhere.
"""

from .laurent import BadPoint, Laurent, NotDivisible, Rat, RingError, XPoly
from .roots import (
    AffineRoot,
    NotARoot,
    SUBSYSTEMS,
    enumerate_positive,
    is_positive,
    orbit_of,
    reflect_root,
    simple_roots,
    subsystem_contains,
    subsystem_orbit,
)
from .weyl import (
    Affine,
    NotInGroup,
    Presentation,
    embed_b,
    length,
    length_ball,
    min_coset_rep,
    normal_form,
    phi_c,
    phi_d,
    presentation,
    reduced_word,
    reflection,
    word_element,
)
from .walks import (
    Walk,
    beta_roots,
    classify_step,
    endpoint,
    endpoint_decompose,
    enumerate_walks,
    format_walk,
    walk_partials,
)
from .ramyip import (
    NSPoly,
    SingularFoldWeight,
    WalkBudgetExceeded,
    direction_factor,
    fold_weight_argument,
    folding_factor,
    nonsymmetric_poly,
    system,
)
from .specialize import (
    MACDONALD_RING,
    NOUMI_RING,
    TABLE1,
    TABLE2,
    SpecRule,
    bcb_rule_from_koornwinder,
    koornwinder_to_noumi,
    macdonald_from_noumi,
    noumi_from_macdonald,
    random_sqrt_point,
    spec_rule,
    verify_ry_proposition,
)
from .hecke import BasicRep, eigencheck
from .weights import check_delta_specialization, delta_factors

__version__ = "0.1.0"
