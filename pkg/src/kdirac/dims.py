"""Dimensions of sl_n and so_4 = sl_2 x sl_2 modules (Weyl dimension formula)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import InvalidParameterError


def normalize_sl(hw: Sequence[int]) -> tuple[int, ...]:
    """Shift a nonincreasing sl_n weight so that its last entry is zero."""
    hw = tuple(int(x) for x in hw)
    if any(a < b for a, b in zip(hw, hw[1:])):
        raise InvalidParameterError(f"sl highest weight must be nonincreasing, got {list(hw)}")
    if not hw:
        return hw
    low = hw[-1]
    return tuple(x - low for x in hw)


def weyl_dim_sl(hw: Sequence[int]) -> int:
    r"""Dimension of the irreducible sl_n module with highest weight ``hw``.

    ``hw`` is given in e-coordinates ``(lambda_1 >= ... >= lambda_n)``; a common
    shift of all entries does not change the result.

    .. math:: \prod_{a<b} \frac{\lambda_a - \lambda_b + b - a}{b - a}
    """
    hw = normalize_sl(hw)
    n = len(hw)
    dim = Fraction(1)
    for a in range(n):
        for b in range(a + 1, n):
            dim *= Fraction(hw[a] - hw[b] + b - a, b - a)
    if dim.denominator != 1:  # pragma: no cover
        raise ArithmeticError(f"non-integral dimension {dim} for {hw}")
    return int(dim)


def dim_so4(a: int, b: int) -> int:
    """Dimension of the so_4 module ``a*w'_{k+1} + b*w'_{k+2}``."""
    if a < 0 or b < 0:
        raise InvalidParameterError(f"so4 weight coefficients must be nonnegative, got ({a}, {b})")
    return (a + 1) * (b + 1)


def dim_module(m) -> int:
    """Dimension of ``V tensor W`` for a :class:`~kdirac.pushdown.ModuleDescriptor`."""
    return weyl_dim_sl(m.slk_hw) * dim_so4(*m.so4_hw)
