"""Restriction chains SO(2n+1) -> SO(2n) -> ... -> SO(2) and Fourier data.

Restricting an irrep down the orthogonal tower is multiplicity-free at every
step, with interlacing conditions between consecutive labels.  A chain of
labels all the way down to SO(2) therefore identifies one one-dimensional
summand, and counting chains by their SO(2) endpoint gives the integer
coefficients alpha_j of the cosine expansion

    chi_a(R(1,2;theta)) = sum_j alpha_j cos(j theta),

where alpha_0 counts chains ending at 0 and alpha_j (j >= 1) counts chains
ending at +j or -j.  In particular sum_j alpha_j equals the dimension.  The
coefficient beta_j counts chains down to the SO(3) level with label j.

`fourier_profile` computes these counts by dynamic programming over
per-level multiplicity maps; `brute_force_profile` enumerates every chain
explicitly and exists purely as an independent oracle for the DP.
"""

from __future__ import annotations

import itertools
import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from .errors import ResourceLimitError
from .labels import EvenLabel, OddLabel, require_valid_odd

__all__ = [
    "FourierProfile",
    "restrict_odd_to_even",
    "restrict_even_to_odd",
    "fourier_profile",
    "brute_force_profile",
    "DEFAULT_PATH_CAP",
]

DEFAULT_PATH_CAP = 10**7


@dataclass(frozen=True)
class FourierProfile:
    """Exact cosine-expansion data of one SO(2n+1) irrep at planar rotations.

    alpha has length a_n + 1 (index j runs 0..a_n); alpha_j already includes
    both SO(2) endpoints +j and -j, so sum(alpha) == d with no extra factor.
    beta has the same length; beta_j is the multiplicity of the SO(3) irrep
    labeled j in the full restriction.
    """

    label: OddLabel
    d: int
    alpha: tuple[int, ...]
    beta: tuple[int, ...]

    @property
    def alpha_tilde(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a, self.d) for a in self.alpha)

    @property
    def beta_tilde(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(b, self.d) for b in self.beta)

    def value_at(self, theta: float) -> float:
        """Character value sum_j alpha_j cos(j theta)."""
        return math.fsum(a * math.cos(j * theta) for j, a in enumerate(self.alpha))

    def ratio_at(self, theta: float) -> float:
        """Character ratio sum_j alpha_tilde_j cos(j theta)."""
        return self.value_at(theta) / self.d

    def ratio_at_pi(self) -> Fraction:
        """Exact alternating sum, the character ratio at theta = pi."""
        total = sum(a if j % 2 == 0 else -a for j, a in enumerate(self.alpha))
        return Fraction(total, self.d)

    def as_record(self) -> dict:
        """JSON-ready record; exact integers become decimal strings."""
        return {
            "label": self.label.to_text(),
            "d": str(self.d),
            "alpha": [str(a) for a in self.alpha],
            "beta": [str(b) for b in self.beta],
        }


def restrict_odd_to_even(a: OddLabel) -> list[EvenLabel]:
    """Multiplicity-one restriction SO(2n+1) -> SO(2n).

    The summands are the b interlacing a: b_1 in [-a_1, a_1] and
    b_j in [a_{j-1}, a_j] for j >= 2.
    """
    require_valid_odd(a)
    return [EvenLabel(a.n, parts) for parts in _even_children(a.parts)]


def restrict_even_to_odd(b: EvenLabel) -> list[OddLabel]:
    """Multiplicity-one restriction SO(2n) -> SO(2n-1).

    The summands are the (n-1)-tuples c interlacing b: c_1 in [|b_1|, b_2]
    and c_j in [b_j, b_{j+1}] for 2 <= j <= n-1.  SO(2) (n = 1) is the end
    of the chain and restricts to nothing.
    """
    if b.n == 1:
        return []
    return [OddLabel(b.n - 1, parts) for parts in _odd_children(b.parts)]


def _even_children(parts: tuple[int, ...]):
    ranges = [range(-parts[0], parts[0] + 1)]
    ranges += [range(parts[j - 1], parts[j] + 1) for j in range(1, len(parts))]
    return itertools.product(*ranges)


def _odd_children(parts: tuple[int, ...]):
    m = len(parts)
    ranges = [range(abs(parts[0]), parts[1] + 1)]
    ranges += [range(parts[j], parts[j + 1] + 1) for j in range(1, m - 1)]
    return itertools.product(*ranges)


def fourier_profile(a: OddLabel) -> FourierProfile:
    """Fourier profile by dynamic programming down the restriction tower.

    State: map from level label to exact multiplicity.  Levels descend
    SO(2n+1), SO(2n), ..., SO(3), SO(2); beta is read off at SO(3) and
    alpha at SO(2), all in the same pass.
    """
    require_valid_odd(a)
    level: dict[tuple[int, ...], int] = {a.parts: 1}
    for m in range(a.n, 1, -1):
        even: dict[tuple[int, ...], int] = defaultdict(int)
        for parts, mult in level.items():
            for child in _even_children(parts):
                even[child] += mult
        nxt: dict[tuple[int, ...], int] = defaultdict(int)
        for parts, mult in even.items():
            for child in _odd_children(parts):
                nxt[child] += mult
        level = nxt

    width = a.top + 1
    beta = [0] * width
    endpoint = [0] * width  # endpoint[k] = multiplicity of SO(2) label +k
    zero_count = 0
    for (j,), mult in level.items():
        beta[j] += mult
        zero_count += mult
        for k in range(1, j + 1):
            endpoint[k] += mult

    alpha = [zero_count] + [2 * endpoint[k] for k in range(1, width)]
    return FourierProfile(
        label=a, d=sum(alpha), alpha=tuple(alpha), beta=tuple(beta)
    )


def brute_force_profile(a: OddLabel, max_paths: int = DEFAULT_PATH_CAP) -> FourierProfile:
    """Same profile by explicit enumeration of every restriction chain.

    Exponential in the label size; oracle use only.  Raises
    ResourceLimitError once more than ``max_paths`` chains have been
    visited.  The interlacing ranges are written out inline rather than via
    the restriction helpers so this stays an independent check of the DP.
    """
    require_valid_odd(a)
    width = a.top + 1
    beta = [0] * width
    so2 = defaultdict(int)
    visited = 0

    def down_odd(parts: tuple[int, ...]) -> None:
        nonlocal visited
        if len(parts) == 1:
            j = parts[0]
            beta[j] += 1
            for k in range(-j, j + 1):
                visited += 1
                if visited > max_paths:
                    raise ResourceLimitError(
                        f"chain count exceeded cap {max_paths} for label {a.parts}"
                    )
                so2[k] += 1
            return
        first = range(-parts[0], parts[0] + 1)
        rest = [range(parts[j - 1], parts[j] + 1) for j in range(1, len(parts))]
        for b in itertools.product(first, *rest):
            down_even(b)

    def down_even(parts: tuple[int, ...]) -> None:
        m = len(parts)
        first = range(abs(parts[0]), parts[1] + 1)
        rest = [range(parts[j], parts[j + 1] + 1) for j in range(1, m - 1)]
        for c in itertools.product(first, *rest):
            down_odd(c)

    down_odd(a.parts)
    alpha = [so2[0]] + [so2[k] + so2[-k] for k in range(1, width)]
    return FourierProfile(
        label=a, d=sum(alpha), alpha=tuple(alpha), beta=tuple(beta)
    )
