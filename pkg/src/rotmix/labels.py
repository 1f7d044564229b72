"""Irrep labels for the odd and even special orthogonal groups.

Irreducible representations of SO(2n+1) are indexed by nondecreasing
nonnegative integer n-tuples (a_1, ..., a_n); those of SO(2n) by n-tuples
whose first entry may be negative, |b_1| <= b_2 <= ... <= b_n.  All
Weyl-formula arithmetic uses the shifted coordinates a_q + q - 1/2, which we
store doubled (L_q = 2 a_q + 2q - 1) so every computation stays in exact
integer arithmetic.

Labels serialize as comma-separated integers ("0,1,3"); the rank n is
implied by the tuple length.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError

__all__ = [
    "OddLabel",
    "EvenLabel",
    "LabelBudget",
    "validate_odd",
    "validate_even",
    "enumerate_odd",
]


@dataclass(frozen=True, order=True)
class OddLabel:
    """Dominant-weight label of an SO(2n+1) irrep.

    Construction only checks structure (length, integrality); use
    :func:`validate_odd` for the ordering invariant, so that invalid
    candidates such as (2, 1) can be represented and rejected explicitly.
    """

    n: int
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainError(f"rank must be positive, got n={self.n}")
        parts = tuple(int(p) for p in self.parts)
        if len(parts) != self.n:
            raise DomainError(
                f"label length {len(parts)} does not match rank n={self.n}"
            )
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_parts(cls, parts) -> "OddLabel":
        parts = tuple(int(p) for p in parts)
        return cls(n=len(parts), parts=parts)

    @classmethod
    def parse(cls, text: str) -> "OddLabel":
        """Parse the serialized form, e.g. "0,1,3"."""
        try:
            parts = tuple(int(p) for p in text.split(","))
        except ValueError as exc:
            raise DomainError(f"cannot parse label {text!r}") from exc
        return cls.from_parts(parts)

    def to_text(self) -> str:
        return ",".join(str(p) for p in self.parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def top(self) -> int:
        return self.parts[-1]

    @property
    def is_trivial(self) -> bool:
        return all(p == 0 for p in self.parts)

    def doubled_coords(self) -> tuple[int, ...]:
        """Doubled shifted coordinates L_q = 2 a_q + 2q - 1.

        For a valid label these are strictly increasing positive odd
        integers; L_q / 2 is the half-integer shift a_q + q - 1/2.
        """
        return tuple(2 * a + 2 * q - 1 for q, a in enumerate(self.parts, start=1))


@dataclass(frozen=True, order=True)
class EvenLabel:
    """Label of an SO(2n) irrep; the first entry may be negative."""

    n: int
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainError(f"rank must be positive, got n={self.n}")
        parts = tuple(int(p) for p in self.parts)
        if len(parts) != self.n:
            raise DomainError(
                f"label length {len(parts)} does not match rank n={self.n}"
            )
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_parts(cls, parts) -> "EvenLabel":
        parts = tuple(int(p) for p in parts)
        return cls(n=len(parts), parts=parts)

    def to_text(self) -> str:
        return ",".join(str(p) for p in self.parts)


@dataclass(frozen=True)
class LabelBudget:
    """Finite truncation of the (infinite) set of odd labels.

    ``max_total`` caps the coordinate sum, which is the quantity the
    dimension grows fastest in; ``max_top`` caps the largest coordinate as a
    safety valve.
    """

    n: int
    max_total: int
    max_top: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainError(f"rank must be positive, got n={self.n}")
        if self.max_total < 0 or self.max_top < 0:
            raise DomainError("budget caps must be nonnegative")


def validate_odd(label: OddLabel) -> bool:
    """True iff 0 <= a_1 <= a_2 <= ... <= a_n. Total function."""
    parts = label.parts
    if parts[0] < 0:
        return False
    return all(parts[i] <= parts[i + 1] for i in range(len(parts) - 1))


def validate_even(label: EvenLabel) -> bool:
    """True iff |b_1| <= b_2 <= ... <= b_n (no constraint when n = 1)."""
    parts = label.parts
    if label.n == 1:
        return True
    if abs(parts[0]) > parts[1]:
        return False
    return all(parts[i] <= parts[i + 1] for i in range(1, len(parts) - 1))


def require_valid_odd(label: OddLabel) -> None:
    if not validate_odd(label):
        raise DomainError(f"invalid odd-group label {label.parts}")


def enumerate_odd(budget: LabelBudget) -> list[OddLabel]:
    """All valid labels with sum <= max_total and top <= max_top.

    Returned in lexicographic order and including the zero label.
    """
    n, cap_total, cap_top = budget.n, budget.max_total, budget.max_top
    out: list[OddLabel] = []

    def extend(prefix: list[int], lo: int, left: int) -> None:
        slot = len(prefix)
        if slot == n:
            out.append(OddLabel(n, tuple(prefix)))
            return
        remaining_slots = n - slot - 1
        for v in range(lo, min(cap_top, left) + 1):
            # the later coordinates are all >= v, so prune on v * slots
            if v * (remaining_slots + 1) > left:
                break
            prefix.append(v)
            extend(prefix, v, left - v)
            prefix.pop()

    extend([], 0, cap_total)
    return out
