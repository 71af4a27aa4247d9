"""Relative Hasse diagram of the fibre Gr_2(C^{k+2}).

Vertices are parameterized by ``(s, t)`` with ``0 <= t <= s <= k``: ``s``
counts alpha-type roots in the inversion set and ``t`` beta-type roots. The
displayed labels ``A_ij`` use ``i = s + t`` (row) and ``j = s - t`` (column).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator

from .errors import InvalidParameterError, UnsupportedRankError
from .weights import RootKind, RootLabel

MIN_RANK = 2


def check_rank(k) -> None:
    if not isinstance(k, int) or isinstance(k, bool):
        raise InvalidParameterError(f"number of variables must be an integer, got {k!r}")
    if k < MIN_RANK:
        raise UnsupportedRankError(f"number of variables k must be at least {MIN_RANK} (minimum rank), got {k}")


@dataclass(frozen=True, order=True)
class HasseVertex:
    s: int
    t: int

    @property
    def row(self) -> int:
        return self.s + self.t

    @property
    def col(self) -> int:
        return self.s - self.t

    def is_valid(self, k: int) -> bool:
        return 0 <= self.t <= self.s <= k

    @property
    def label(self) -> str:
        """``A31`` style label; a comma separates two-digit indices (``A10,0``)."""
        i, j = self.row, self.col
        if i < 10 and j < 10:
            return f"A{i}{j}"
        return f"A{i},{j}"

    @classmethod
    def from_row_col(cls, i: int, j: int) -> "HasseVertex":
        if (i - j) % 2 or j < 0:
            raise InvalidParameterError(f"no vertex at row {i}, column {j}")
        return cls((i + j) // 2, (i - j) // 2)

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class HasseEdge:
    source: HasseVertex
    target: HasseVertex
    root: RootLabel


def alpha_step_root(k: int, s: int) -> RootLabel:
    """Label of the arrow ``(s, t) -> (s + 1, t)``."""
    return RootLabel(RootKind.ALPHA, k - s, k + 1)


def beta_step_root(k: int, t: int) -> RootLabel:
    """Label of the arrow ``(s, t) -> (s, t + 1)``."""
    return RootLabel(RootKind.BETA, k - t, k + 2)


@dataclass(frozen=True)
class HasseDiagram:
    k: int
    vertices: tuple[HasseVertex, ...]
    edges: tuple[HasseEdge, ...] = field(repr=False)

    @cached_property
    def source(self) -> HasseVertex:
        return HasseVertex(0, 0)

    @cached_property
    def sink(self) -> HasseVertex:
        return HasseVertex(self.k, self.k)

    @cached_property
    def _out(self) -> dict:
        out = {v: [] for v in self.vertices}
        for e in self.edges:
            out[e.source].append(e)
        return out

    @cached_property
    def _in(self) -> dict:
        inc = {v: [] for v in self.vertices}
        for e in self.edges:
            inc[e.target].append(e)
        return inc

    def out_edges(self, v: HasseVertex) -> list[HasseEdge]:
        return list(self._out[v])

    def in_edges(self, v: HasseVertex) -> list[HasseEdge]:
        return list(self._in[v])

    def row(self, i: int) -> list[HasseVertex]:
        """Vertices of row ``i`` ordered by increasing column."""
        return sorted((v for v in self.vertices if v.row == i), key=lambda v: v.col)

    @property
    def n_rows(self) -> int:
        return 2 * self.k + 1

    def rows(self) -> list[list[HasseVertex]]:
        return [self.row(i) for i in range(self.n_rows)]

    def topological_order(self) -> list[HasseVertex]:
        return sorted(self.vertices, key=lambda v: (v.row, v.col))

    def paths_to(self, v: HasseVertex) -> Iterator[list[HasseEdge]]:
        """Yield every directed path from the source to ``v`` as a list of edges."""
        if v == self.source:
            yield []
            return
        for e in self._in[v]:
            for p in self.paths_to(e.source):
                yield p + [e]


def build_hasse(k: int) -> HasseDiagram:
    check_rank(k)
    vertices = tuple(HasseVertex(s, t) for s in range(k + 1) for t in range(s + 1))
    edges = []
    for v in vertices:
        s, t = v.s, v.t
        if s + 1 <= k:
            edges.append(HasseEdge(v, HasseVertex(s + 1, t), alpha_step_root(k, s)))
        if t + 1 <= s:
            edges.append(HasseEdge(v, HasseVertex(s, t + 1), beta_step_root(k, t)))
    return HasseDiagram(k, vertices, tuple(edges))


def inversion_set(v: HasseVertex, k: int) -> frozenset[RootLabel]:
    """Roots met on any path from ``A00`` to ``v``."""
    check_rank(k)
    if not v.is_valid(k):
        raise InvalidParameterError(f"vertex {v!r} is not in the diagram for k={k}")
    alphas = {RootLabel(RootKind.ALPHA, m, k + 1) for m in range(k - v.s + 1, k + 1)}
    betas = {RootLabel(RootKind.BETA, m, k + 2) for m in range(k - v.t + 1, k + 1)}
    return frozenset(alphas | betas)
