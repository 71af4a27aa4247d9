"""Direct images along tau: G/Q -> G/P and the pushed-down complex.

Only one Weyl group element matters for this fibration, the reflection in
alpha_{k+1,k+2}. A q-dominant weight either is already p-dominant (image in
degree 0), becomes p-dominant after the affine reflection (degree 1), or is
fixed by it (no image).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .bgg import BggDiagram, build_bgg, canonical_seed
from .dims import dim_so4, weyl_dim_sl
from .errors import DominanceError, InvalidParameterError, StructuralError
from .hasse import HasseVertex, check_rank
from .weights import ParabolicMarking, Weight, affine_last_reflection, dominance_violations, is_dominant

EMPTY_SYMBOL = "∅"


@dataclass(frozen=True)
class DirectImage:
    """Image of a q-weight: ``degree`` 0 or 1 with a p-dominant ``weight``,
    or ``degree is None`` when there is no direct image."""

    degree: Optional[int]
    weight: Optional[Weight]

    @classmethod
    def none(cls) -> "DirectImage":
        return cls(None, None)

    @property
    def exists(self) -> bool:
        return self.degree is not None

    def format(self, half: bool = False) -> str:
        if not self.exists:
            return EMPTY_SYMBOL
        return f"{self.weight.format(ParabolicMarking.P, half=half)}_{self.degree}"

    def __str__(self) -> str:
        return self.format()


NO_IMAGE = DirectImage.none()


def direct_image(lam: Weight) -> DirectImage:
    failed = dominance_violations(lam, ParabolicMarking.Q)
    if failed:
        raise DominanceError(f"{lam} is not q-dominant: fails {', '.join(failed)}", failed)
    if is_dominant(lam, ParabolicMarking.P):
        return DirectImage(0, lam)
    reflected = affine_last_reflection(lam)
    if reflected == lam:
        return NO_IMAGE
    if is_dominant(reflected, ParabolicMarking.P):
        return DirectImage(1, reflected)
    # q-dominance leaves only the three cases above
    raise StructuralError(f"no case of the direct-image rule applies to {lam}")  # pragma: no cover


@dataclass(frozen=True)
class ModuleDescriptor:
    """The sl_k x so_4 module ``V tensor W``.

    ``slk_hw`` is the normalized sl_k highest weight (last entry 0) and
    ``so4_hw = (a, b)`` are the coefficients on w'_{k+1}, w'_{k+2}. As for all
    inducing modules here, the bundle is induced by the dual of this module.
    """

    slk_hw: tuple[int, ...]
    so4_hw: tuple[int, int]
    dim: int

    @classmethod
    def make(cls, slk_hw, so4_hw) -> "ModuleDescriptor":
        slk = tuple(int(x) for x in slk_hw)
        if slk:
            low = min(slk)
            slk = tuple(x - low for x in slk)
        if any(x < y for x, y in zip(slk, slk[1:])):
            raise DominanceError(f"sl_k weight {list(slk)} is not dominant")
        a, b = (int(x) for x in so4_hw)
        if a < 0 or b < 0:
            raise DominanceError(f"so4 weight ({a}, {b}) is not dominant")
        return cls(slk, (a, b), weyl_dim_sl(slk) * dim_so4(a, b))

    @property
    def k(self) -> int:
        return len(self.slk_hw)

    @property
    def so4_name(self) -> str:
        if self.so4_hw == (1, 0):
            return "Sp_-"
        if self.so4_hw == (0, 1):
            return "Sp_+"
        if self.so4_hw == (0, 0):
            return "C"
        return f"({self.so4_hw[0]},{self.so4_hw[1]})"

    @property
    def slk_name(self) -> str:
        k = self.k
        if all(x == 0 for x in self.slk_hw):
            return "1"
        if self.slk_hw == (1,) * (k - 1) + (0,):
            return f"C^{k}"
        return "[" + ",".join(map(str, self.slk_hw)) + "]"

    @property
    def name(self) -> str:
        if self.slk_name == "1":
            return self.so4_name
        return f"{self.slk_name}(x){self.so4_name}"


def descriptor_from_weight(lam_p: Weight) -> ModuleDescriptor:
    """Read off ``V tensor W`` from a p-weight.

    The sl_k part is the first ``k`` coordinates shifted to end in zero; the
    so_4 part solves ``(lam_{k+1}, lam_{k+2}) = a*w'_{k+1} + b*w'_{k+2}``.
    """
    k = lam_p.k
    c = lam_p.coords2
    head = c[:k]
    low = min(head)
    shifted = [x - low for x in head]
    if any(x % 2 for x in shifted):
        raise InvalidParameterError(f"sl_k part of {lam_p} is not integral up to a shift")
    slk = [x // 2 for x in shifted]
    # doubled coordinates: a = lam_{k+1} - lam_{k+2} = (c_{k+1} - c_{k+2}) / 2
    a2, b2 = c[k] - c[k + 1], c[k] + c[k + 1]
    if a2 % 2 or b2 % 2:
        raise InvalidParameterError(f"so4 part of {lam_p} is not integral")
    return ModuleDescriptor.make(slk, (a2 // 2, b2 // 2))


def _check_position(i: int, j: int, k: int) -> None:
    if not (0 <= i <= 2 * k) or j < 0 or j > min(i, 2 * k - i) or (i - j) % 2:
        raise InvalidParameterError(f"(i, j) = ({i}, {j}) is not a vertex for k={k}")


def closed_descriptor(i: int, j: int, k: int) -> ModuleDescriptor:
    """Closed form of ``U_ij``.

    Rows 0 and 1 give ``Sp_-`` and ``C^k (x) Sp_+``; row 2 has no module.
    For ``i >= 3`` the sl_k weight is ``[2]*(k-(i+j)/2) + [1]*j + [0]*((i-j)/2)``
    and the so_4 weight is ``(i-3, j)``.
    """
    check_rank(k)
    _check_position(i, j, k)
    if i == 0:
        return ModuleDescriptor.make([0] * k, (1, 0))
    if i == 1:
        return ModuleDescriptor.make([1] * (k - 1) + [0], (0, 1))
    if i == 2:
        raise InvalidParameterError("row 2 has no direct image")
    twos = k - (i + j) // 2
    zeros = (i - j) // 2
    return ModuleDescriptor.make([2] * twos + [1] * j + [0] * zeros, (i - 3, j))


def operator_order(src: Weight, dst: Weight) -> int:
    """Order of the operator between two terms: drop of the sl_k coordinate sum."""
    if src.k != dst.k:
        raise InvalidParameterError(f"weights of rank {src.k} and {dst.k} cannot be compared")
    k = src.k
    drop2 = sum(src.coords2[:k]) - sum(dst.coords2[:k])
    if drop2 <= 0 or drop2 % 2:
        raise StructuralError(f"grading does not drop by a positive integer from {src} to {dst}")
    return drop2 // 2


@dataclass(frozen=True)
class ComplexTerm:
    position: int
    vertices: tuple[HasseVertex, ...]
    weights: tuple[Weight, ...]
    modules: tuple[ModuleDescriptor, ...]


@dataclass(frozen=True)
class ComplexDescriptor:
    k: int
    terms: tuple[ComplexTerm, ...]
    orders: tuple[int, ...]

    @property
    def positions(self) -> list[int]:
        return [t.position for t in self.terms]

    @property
    def widths(self) -> list[int]:
        return [len(t.modules) for t in self.terms]


def direct_images(d: BggDiagram) -> dict[HasseVertex, DirectImage]:
    return {v: direct_image(w) for v, w in d.assignment.items()}


def _expected_degree(row: int) -> Optional[int]:
    if row <= 1:
        return 1
    if row == 2:
        return None
    return 0


def build_complex(k: int) -> ComplexDescriptor:
    """Push the relative BGG diagram of the canonical seed down to G/P.

    Every module is computed twice, from the image weight and from the closed
    form, and the two must agree.
    """
    d = build_bgg(k, canonical_seed(k))
    images = direct_images(d)

    terms = []
    for i in range(2 * k + 1):
        row = d.hasse.row(i)
        for v in row:
            if images[v].degree != _expected_degree(i):
                raise StructuralError(f"{v.label}: image {images[v]} in unexpected degree")
        if i == 2:
            continue
        weights = tuple(images[v].weight for v in row)
        modules = []
        for v, w in zip(row, weights):
            m = descriptor_from_weight(w)
            closed = closed_descriptor(v.row, v.col, k)
            if m != closed:
                raise StructuralError(f"{v.label}: weight gives {m}, closed form gives {closed}")
            modules.append(m)
        terms.append(ComplexTerm(i, tuple(row), weights, tuple(modules)))

    orders = []
    for src, dst in zip(terms, terms[1:]):
        found = {operator_order(a, b) for a in src.weights for b in dst.weights}
        if len(found) != 1:
            raise StructuralError(f"inconsistent orders {sorted(found)} between {src.position} and {dst.position}")
        orders.append(found.pop())
    return ComplexDescriptor(k, tuple(terms), tuple(orders))
