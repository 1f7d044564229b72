"""Exact dimensions and character values of SO(2n+1) irreps at R(1,2;theta).

The dimension is the limit form of the Weyl formula,

    d_a = 2^n / (1! 3! ... (2n-1)!)
          * prod_q (a_q + q - 1/2)
          * prod_{s<r} [(a_r + r - 1/2)^2 - (a_s + s - 1/2)^2],

computed entirely in integers via the doubled coordinates L_q = 2a_q + 2q - 1:
the numerator prod L_q * prod (L_r^2 - L_s^2) is divided exactly by
4^{n(n-1)/2} * prod_k (2k-1)!.  A non-exact division is impossible for a
correct transcription and raises InternalConsistencyError.

The character at a planar rotation comes from the limit form

    (2n-1)! / (2 sin(theta/2))^{2n-1}
        * sum_j sin(h_j theta) / (h_j * prod_{r != j} (h_r^2 - h_j^2)),

with h_j = a_j + j - 1/2.  Evaluated as written this expression is the
normalized ratio chi_a(theta) / d_a (it is identically 1 for the zero
label); `character_value` multiplies by the exact dimension.  Near the
singular endpoints the prefactor blows up like theta^-(2n-1) while the
ratio stays bounded, so the alternating sum loses about (2n-1) log10(1/theta)
digits to cancellation; the sum is therefore evaluated in mpmath at a
working precision chosen from n and theta, and only the final result is
rounded to a double.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from mpmath import mp

from . import branching
from .errors import DomainError, InternalConsistencyError
from .labels import OddLabel, require_valid_odd
from .tolerances import DEFAULT_TOLERANCES

__all__ = [
    "CharacterValue",
    "dimension",
    "character_value",
    "character_ratio",
    "integrated_ratio",
]

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class CharacterValue:
    theta: float
    value: float
    ratio: float


def dimension(label: OddLabel) -> int:
    """Exact dimension of the irrep; arbitrary-precision integer."""
    require_valid_odd(label)
    coords = label.doubled_coords()
    n = label.n
    num = math.prod(coords)
    for r in range(1, n):
        for s in range(r):
            num *= coords[r] ** 2 - coords[s] ** 2
    den = 4 ** (n * (n - 1) // 2)
    for k in range(1, n + 1):
        den *= math.factorial(2 * k - 1)
    q, rem = divmod(num, den)
    if rem:
        raise InternalConsistencyError(
            f"dimension of {label.parts} is not an integer: {num}/{den}"
        )
    return q


def _check_theta(theta: float, cutoff: float) -> None:
    if not (0.0 < theta < TWO_PI):
        raise DomainError(f"theta={theta!r} outside (0, 2*pi)")
    if theta < cutoff or TWO_PI - theta < cutoff:
        raise DomainError(
            f"theta={theta!r} within cutoff {cutoff} of a singular endpoint"
        )


def _limit_ratio(label: OddLabel, theta: float) -> "mp.mpf":
    """Character ratio via the limit formula, at adaptive mpmath precision.

    Caller must wrap in mp.workdps or convert the result immediately.
    """
    n = label.n
    sin_half = 2.0 * math.sin(theta / 2.0)
    lost = 0 if sin_half >= 1.0 else (2 * n - 1) * math.ceil(-math.log10(sin_half))
    with mp.workdps(40 + 5 * n + lost):
        th = mp.mpf(theta)
        halves = [mp.mpf(c) / 2 for c in label.doubled_coords()]
        total = mp.mpf(0)
        for j, h in enumerate(halves):
            denom = h
            for r, hr in enumerate(halves):
                if r != j:
                    denom *= hr * hr - h * h
            total += mp.sin(h * th) / denom
        prefactor = mp.factorial(2 * n - 1) / (2 * mp.sin(th / 2)) ** (2 * n - 1)
        return prefactor * total


def character_value(
    label: OddLabel,
    theta: float,
    cutoff: float = DEFAULT_TOLERANCES.theta_cutoff,
) -> CharacterValue:
    """Character value and ratio of the irrep at R(1,2;theta)."""
    require_valid_odd(label)
    _check_theta(theta, cutoff)
    d = dimension(label)
    with mp.workdps(30):
        ratio_mp = _limit_ratio(label, theta)
        value = float(ratio_mp * d)
        ratio = float(ratio_mp)
    return CharacterValue(theta=theta, value=value, ratio=ratio)


def character_ratio(
    label: OddLabel,
    theta: float,
    cutoff: float = DEFAULT_TOLERANCES.theta_cutoff,
) -> float:
    """Character ratio chi_a(theta) / d_a."""
    require_valid_odd(label)
    _check_theta(theta, cutoff)
    with mp.workdps(30):
        return float(_limit_ratio(label, theta))


def integrated_ratio(
    label: OddLabel,
    eps: float,
    profile: "branching.FourierProfile | None" = None,
) -> float:
    """Average of the character ratio over theta in [eps, 2*pi - eps].

    Closed form from the cosine expansion: integrating cos(j theta) over the
    window gives -2 sin(j eps) / j, hence

        alpha~_0 - sum_{j>=1} alpha~_j sin(j eps) / (j (pi - eps)).
    """
    if not (0.0 < eps < math.pi - 1.0):
        raise DomainError(f"eps={eps!r} outside (0, pi - 1)")
    if profile is None:
        profile = branching.fourier_profile(label)
    tilde = profile.alpha_tilde
    head = float(tilde[0])
    tail = math.fsum(
        float(tilde[j]) * math.sin(j * eps) / (j * (math.pi - eps))
        for j in range(1, len(tilde))
    )
    return head - tail
