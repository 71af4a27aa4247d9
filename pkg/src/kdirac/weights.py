"""Weights and roots of so(2k+4, C) in the standard e-basis.

Coordinates are half-integers. A :class:`Weight` stores them doubled, so
``Weight(3, (-3, -3, -3, -3, 3))`` is the weight 1/2[-3,-3,-3,-3,3]. All
arithmetic and comparisons are on integers.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidParameterError

__all__ = [
    "Weight",
    "RootKind",
    "RootLabel",
    "ParabolicMarking",
    "delta",
    "fundamental_weight",
    "root_vector",
    "positive_roots",
    "dominance_violations",
    "is_dominant",
    "affine_last_reflection",
    "parse_weight2",
]


def _check_rank(k: int) -> None:
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise InvalidParameterError(f"number of variables must be a positive integer, got {k!r}")


class ParabolicMarking(enum.Enum):
    """Crossed nodes of the D_{k+2} Dynkin diagram.

    P crosses node k, Q crosses nodes k and k+1, R crosses node k+1 and
    G crosses nothing.
    """

    P = "p"
    Q = "q"
    R = "r"
    G = "g"


@dataclass(frozen=True)
class Weight:
    """A weight with ``k + 2`` half-integer coordinates stored doubled."""

    k: int
    coords2: tuple[int, ...]

    def __post_init__(self):
        _check_rank(self.k)
        coords = tuple(int(c) for c in self.coords2)
        if len(coords) != self.k + 2:
            raise InvalidParameterError(
                f"weight for k={self.k} needs {self.k + 2} coordinates, got {len(coords)}"
            )
        object.__setattr__(self, "coords2", coords)

    @classmethod
    def from_half(cls, k: int, coords: Iterable) -> "Weight":
        """Build a weight from true (possibly half-integer) coordinates."""
        doubled = []
        for c in coords:
            c2 = Fraction(c) * 2
            if c2.denominator != 1:
                raise InvalidParameterError(f"coordinate {c} is not a half-integer")
            doubled.append(int(c2))
        return cls(k, tuple(doubled))

    @classmethod
    def zero(cls, k: int) -> "Weight":
        return cls(k, (0,) * (k + 2))

    @property
    def coords(self) -> tuple[Fraction, ...]:
        """True coordinates as fractions."""
        return tuple(Fraction(c, 2) for c in self.coords2)

    def _same_rank(self, other: "Weight") -> None:
        if not isinstance(other, Weight):
            raise TypeError(f"expected Weight, got {type(other).__name__}")
        if other.k != self.k:
            raise InvalidParameterError(f"cannot combine weights of rank {self.k} and {other.k}")

    def __add__(self, other: "Weight") -> "Weight":
        self._same_rank(other)
        return Weight(self.k, tuple(a + b for a, b in zip(self.coords2, other.coords2)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._same_rank(other)
        return Weight(self.k, tuple(a - b for a, b in zip(self.coords2, other.coords2)))

    def __neg__(self) -> "Weight":
        return Weight(self.k, tuple(-a for a in self.coords2))

    def format(self, marking: ParabolicMarking = ParabolicMarking.Q, half: bool = False) -> str:
        """Bracket notation with the bars placed according to ``marking``.

        By default the doubled integers are printed, i.e. the factor 1/2 is
        omitted. ``half=True`` prints the true coordinates.
        """
        if half:
            items = [str(Fraction(c, 2)) for c in self.coords2]
        else:
            items = [str(c) for c in self.coords2]
        k = self.k
        head = ",".join(items[:k])
        a, b = items[k], items[k + 1]
        if marking is ParabolicMarking.Q:
            return f"[{head}|{a}|{b}]"
        if marking is ParabolicMarking.P:
            return f"[{head}|{a},{b}]"
        if marking is ParabolicMarking.R:
            return f"[{head},{a}|{b}]"
        return f"[{head},{a},{b}]"

    def __str__(self) -> str:
        return self.format()


class RootKind(enum.Enum):
    ALPHA = "a"
    BETA = "b"


@functools.total_ordering
@dataclass(frozen=True)
class RootLabel:
    """The positive root alpha_ij = e_i - e_j or beta_ij = e_i + e_j (1-based, i < j)."""

    kind: RootKind
    i: int
    j: int

    def __post_init__(self):
        if not (1 <= self.i < self.j):
            raise InvalidParameterError(f"root indices must satisfy 1 <= i < j, got ({self.i}, {self.j})")

    def check_rank(self, k: int) -> None:
        _check_rank(k)
        if self.j > k + 2:
            raise InvalidParameterError(f"root index {self.j} exceeds k+2={k + 2}")

    @property
    def name(self) -> str:
        return f"{self.kind.value}({self.i},{self.j})"

    @property
    def tex(self) -> str:
        greek = r"\alpha" if self.kind is RootKind.ALPHA else r"\beta"
        return f"{greek}_{{{self.i},{self.j}}}"

    def __str__(self) -> str:
        return self.name

    def __lt__(self, other):
        if not isinstance(other, RootLabel):
            return NotImplemented
        return (self.kind.value, self.i, self.j) < (other.kind.value, other.i, other.j)


def delta(k: int) -> Weight:
    """Sum of the fundamental weights, ``[k+1, k, ..., 1, 0]``."""
    _check_rank(k)
    return Weight(k, tuple(2 * (k + 1 - m) for m in range(k + 2)))


def fundamental_weight(k: int, m: int) -> Weight:
    _check_rank(k)
    if not (1 <= m <= k + 2):
        raise InvalidParameterError(f"fundamental weight index must be in 1..{k + 2}, got {m}")
    n = k + 2
    if m <= k:
        return Weight(k, tuple(2 if idx < m else 0 for idx in range(n)))
    last = -1 if m == k + 1 else 1
    return Weight(k, (1,) * (n - 1) + (last,))


def root_vector(label: RootLabel, k: int) -> Weight:
    """Doubled coordinates of ``e_i - e_j`` or ``e_i + e_j``."""
    label.check_rank(k)
    coords = [0] * (k + 2)
    coords[label.i - 1] = 2
    coords[label.j - 1] = -2 if label.kind is RootKind.ALPHA else 2
    return Weight(k, tuple(coords))


def positive_roots(k: int) -> list[RootLabel]:
    _check_rank(k)
    n = k + 2
    return [RootLabel(kind, i, j) for kind in RootKind for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def dominance_violations(w: Weight, marking: ParabolicMarking) -> list[str]:
    """Return the failed inequalities of ``marking``'s dominance condition.

    An empty list means ``w`` is dominant. Indices in the messages are 1-based.
    """
    c = w.coords2
    k = w.k
    lam = [None] + list(c)  # 1-based view
    failed = []

    def chain(upto):
        for m in range(1, upto):
            if lam[m] < lam[m + 1]:
                failed.append(f"lambda_{m} >= lambda_{m + 1}")

    a, b = lam[k + 1], lam[k + 2]
    if marking is ParabolicMarking.P:
        chain(k)
        if a < abs(b):
            failed.append(f"lambda_{k + 1} >= |lambda_{k + 2}|")
    elif marking is ParabolicMarking.Q:
        chain(k)
        if a < -b:
            failed.append(f"lambda_{k + 1} >= -lambda_{k + 2}")
    elif marking is ParabolicMarking.R:
        chain(k + 1)
        if a < -b:
            failed.append(f"lambda_{k + 1} >= -lambda_{k + 2}")
    elif marking is ParabolicMarking.G:
        chain(k + 1)
        if a < abs(b):
            failed.append(f"lambda_{k + 1} >= |lambda_{k + 2}|")
    else:  # pragma: no cover
        raise InvalidParameterError(f"unknown marking {marking!r}")
    return failed


def is_dominant(w: Weight, marking: ParabolicMarking) -> bool:
    return not dominance_violations(w, marking)


def affine_last_reflection(w: Weight) -> Weight:
    """``w . lam = s(lam + delta) - delta`` for the reflection in alpha_{k+1,k+2}.

    The reflection swaps the last two coordinates of ``lam + delta``.
    """
    shifted = list((w + delta(w.k)).coords2)
    shifted[-2], shifted[-1] = shifted[-1], shifted[-2]
    return Weight(w.k, tuple(shifted)) - delta(w.k)


def parse_weight2(k: int, values: Sequence[int] | str) -> Weight:
    """Parse doubled coordinates given as a sequence or a comma-separated string."""
    if isinstance(values, str):
        try:
            values = [int(v) for v in values.replace(" ", "").split(",") if v != ""]
        except ValueError as exc:
            raise InvalidParameterError(f"cannot parse weight {values!r}: {exc}") from None
    return Weight(k, tuple(values))
