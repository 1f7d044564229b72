"""Central numeric tolerance defaults.

Every floating-point comparison threshold used across the toolkit lives in
this one record so that test and library code agree on the same numbers.
Exact-integer checks (dimensions, Fourier coefficients, the beta/alpha
relations) have no tolerance and do not appear here.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    # reject theta closer than this to the singular endpoints 0 and 2*pi
    theta_cutoff: float = 1e-6
    # |character ratio| may exceed 1 by at most this much
    ratio_slack: float = 1e-9
    # |weyl character - cosine series| <= character_match_rel * dimension
    character_match_rel: float = 1e-8
    # closed-form integrated ratio vs adaptive quadrature
    quadrature_abs: float = 1e-6
    # sum of the reference step-weight terms must be 1 within this
    mu_sum_abs: float = 1e-9
    # slack allowed in the per-index step-weight comparison T(j) <= mu(j)
    term_dominance_slack: float = 1e-12
    # walk coefficients this close to 1 in modulus are flagged as non-mixing
    coefficient_unit_slack: float = 1e-12
    # orthogonality defect allowed for a freshly sampled rotation
    orthogonality_defect: float = 1e-12
    # |det - 1| allowed along simulated trajectories
    determinant_defect: float = 1e-9
    # re-orthonormalize a trajectory when ||X^T X - I||_max exceeds this
    drift_reorthonormalize: float = 1e-10


DEFAULT_TOLERANCES = Tolerances()
