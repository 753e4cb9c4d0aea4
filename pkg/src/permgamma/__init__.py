"""Exact h-polynomials and gamma vectors of partitioned permutohedra, with the
valley-hopping bijection and tableau machinery that explains them.
"""
from .exceptions import (
    BoundExceededError,
    DomainError,
    InvariantViolation,
    NotFreeLetterError,
    PermGammaError,
    RankMismatchError,
)
from .hopping import HopClass, canonical_rep, class_descent_poly, hop_class, hop_set, hop_single
from .parabolic import (
    KSubset,
    all_subsets,
    composition_mu,
    enumerate_w_of_k,
    enumerate_w_upper_k,
    is_in_w_of_k,
    is_min_rep,
    k_star,
    orbits,
)
from .polynomials import (
    GammaVector,
    eulerian,
    f_to_h,
    gamma_expand,
    gamma_partitioned,
    gamma_reconstruct,
    h_poly_partitioned,
    is_palindromic,
    permutohedron_f_vector,
)
from .tableaux import (
    YoungTableau,
    dim_irreducible,
    enumerate_syt,
    evacuation,
    kostka,
    phi,
    rep_gamma,
    rsk,
    rsk_inverse,
    tableau_descent_set,
)
from .theta import (
    EffectiveExpression,
    PeakString,
    effective_expression,
    extract_strings,
    j_full,
    j_single,
    l_full,
    theta,
    theta_inverse,
)
from .words import (
    Position,
    classify_positions,
    coxeter_length,
    des,
    descent_flags,
    descent_set,
    parse_permutation,
    parse_word,
    star,
)

__version__ = "0.1.0"
