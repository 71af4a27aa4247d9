"""Weight-labelled relative BGG diagram on G/Q and its row bundles V_j."""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

from .errors import DominanceError, StructuralError
from .hasse import HasseDiagram, HasseVertex, build_hasse, check_rank, inversion_set
from .weights import ParabolicMarking, Weight, dominance_violations, root_vector


def canonical_seed(k: int) -> Weight:
    """The line-bundle weight 1/2[-3,...,-3|-3|3] used for the k-Dirac complex."""
    check_rank(k)
    return Weight(k, (-3,) * (k + 1) + (3,))


@dataclass(frozen=True)
class RowBundle:
    j: int
    summands: tuple[tuple[HasseVertex, Weight], ...]

    @property
    def weights(self) -> list[Weight]:
        return [w for _, w in self.summands]


@dataclass(frozen=True)
class BggDiagram:
    k: int
    seed: Weight
    hasse: HasseDiagram
    assignment: Mapping[HasseVertex, Weight]

    def __getitem__(self, v: HasseVertex) -> Weight:
        return self.assignment[v]

    @property
    def edges(self):
        return self.hasse.edges


def weights_by_recurrence(hasse: HasseDiagram, seed: Weight) -> dict[HasseVertex, Weight]:
    """Propagate ``seed`` along edges in topological order, one root per arrow.

    Each vertex is reached through all its incoming arrows; disagreement means
    the labels are not path independent.
    """
    k = hasse.k
    out = {hasse.source: seed}
    for v in hasse.topological_order():
        if v == hasse.source:
            continue
        candidates = {out[e.source] - root_vector(e.root, k) for e in hasse.in_edges(v)}
        if len(candidates) != 1:
            raise StructuralError(f"incoming arrows disagree at {v.label}: {sorted(map(str, candidates))}")
        out[v] = candidates.pop()
    return out


def build_bgg(k: int, seed: Weight | None = None) -> BggDiagram:
    """Assign ``seed - sum(inversion set)`` to every vertex.

    Parameters
    ----------
    k : int
        Number of variables, at least 2.
    seed : Weight, optional
        Q-dominant weight at ``A00``; defaults to :func:`canonical_seed`.

    Raises
    ------
    DominanceError
        If ``seed`` is not Q-dominant.
    """
    hasse = build_hasse(k)
    if seed is None:
        seed = canonical_seed(k)
    if seed.k != k:
        raise DominanceError(f"seed has rank {seed.k}, expected {k}")
    failed = dominance_violations(seed, ParabolicMarking.Q)
    if failed:
        raise DominanceError(f"seed {seed} is not q-dominant: fails {', '.join(failed)}", failed)

    assignment = {}
    for v in hasse.vertices:
        w = seed
        for r in inversion_set(v, k):
            w = w - root_vector(r, k)
        assignment[v] = w

    if weights_by_recurrence(hasse, seed) != assignment:
        raise StructuralError("inversion-set weights disagree with the edge recurrence")
    return BggDiagram(k, seed, hasse, MappingProxyType(assignment))


def row_bundles(d: BggDiagram) -> list[RowBundle]:
    return [
        RowBundle(j, tuple((v, d.assignment[v]) for v in d.hasse.row(j)))
        for j in range(d.hasse.n_rows)
    ]
