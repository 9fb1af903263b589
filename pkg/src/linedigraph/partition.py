"""
Regular (equitable) vertex partitions and their quotient matrices.

Regularity is judged on out-arcs only: a partition is regular when the number
of arcs from a vertex u in cell i into cell j (counted with multiplicity)
depends only on (i, j).
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .digraph import Digraph, adjacency_matrix
from .errors import DimensionMismatch, NotRegular, PartitionMismatch
from .linalg import Matrix, mat_mul, mat_pow


@dataclass(frozen=True)
class Partition:
    """``cell_of[v]`` is the cell index of vertex ``v``; cells are 0..m-1, all nonempty."""

    cell_of: Tuple[int, ...]
    m: int

    def __post_init__(self):
        object.__setattr__(self, "cell_of", tuple(int(c) for c in self.cell_of))
        seen = set(self.cell_of)
        if seen != set(range(self.m)):
            raise PartitionMismatch(f"cell indices must be exactly 0..{self.m - 1} with no empty cell")

    @property
    def n(self) -> int:
        return len(self.cell_of)

    @property
    def sizes(self) -> Tuple[int, ...]:
        sizes = [0] * self.m
        for c in self.cell_of:
            sizes[c] += 1
        return tuple(sizes)

    @property
    def cells(self) -> Tuple[Tuple[int, ...], ...]:
        cells = [[] for _ in range(self.m)]
        for v, c in enumerate(self.cell_of):
            cells[c].append(v)
        return tuple(tuple(c) for c in cells)

    @classmethod
    def from_cells(cls, cells: Sequence[Sequence[int]], n: Optional[int] = None) -> "Partition":
        """Build from an explicit list of cells; cell order is kept, empty cells are rejected."""
        total = sum(len(c) for c in cells)
        if n is None:
            n = total
        cell_of = [-1] * n
        for i, cell in enumerate(cells):
            if not cell:
                raise PartitionMismatch(f"cell {i} is empty")
            for v in cell:
                if not 0 <= v < n or cell_of[v] != -1:
                    raise PartitionMismatch(f"vertex {v} is out of range or listed twice")
                cell_of[v] = i
        if total != n:
            raise PartitionMismatch(f"cells cover {total} vertices, expected {n}")
        return cls(tuple(cell_of), len(cells))

    @classmethod
    def from_labels(cls, keys: Sequence) -> "Partition":
        """Group vertices with equal keys; cells numbered by smallest member."""
        index: dict = {}
        cell_of = []
        for k in keys:
            if k not in index:
                index[k] = len(index)
            cell_of.append(index[k])
        return cls(tuple(cell_of), len(index))

    def as_set(self) -> frozenset:
        return frozenset(frozenset(c) for c in self.cells)

    def to_dict(self) -> dict:
        return {"cells": [list(c) for c in self.cells]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict, n: Optional[int] = None) -> "Partition":
        return cls.from_cells(d["cells"], n)


def characteristic_matrix(pi: Partition) -> Matrix:
    """n x m 0/1 matrix S with S[u][i] = 1 iff u is in cell i."""
    return [[int(c == i) for i in range(pi.m)] for c in pi.cell_of]


def _profiles(G: Digraph, cell_of: Sequence[int], m: int) -> list:
    """profile[u][j] = number of arcs from u into cell j."""
    prof = [[0] * m for _ in range(G.n)]
    for u, v in G.arcs:
        prof[u][cell_of[v]] += 1
    return prof


@dataclass(frozen=True)
class RegularityCheck:
    """Outcome of :func:`is_regular_partition`.

    On failure ``witness`` is ``(u, v, j)``: vertices u and v share a cell but
    send different numbers of arcs into cell j.
    """

    regular: bool
    witness: Optional[Tuple[int, int, int]] = None

    def __bool__(self):
        return self.regular


def _check_cover(G: Digraph, pi: Partition) -> None:
    if pi.n != G.n:
        raise PartitionMismatch(f"partition covers {pi.n} vertices, digraph has {G.n}")


def is_regular_partition(G: Digraph, pi: Partition) -> RegularityCheck:
    _check_cover(G, pi)
    prof = _profiles(G, pi.cell_of, pi.m)
    first = [None] * pi.m
    for u, c in enumerate(pi.cell_of):
        rep = first[c]
        if rep is None:
            first[c] = u
            continue
        if prof[u] != prof[rep]:
            j = next(j for j in range(pi.m) if prof[u][j] != prof[rep][j])
            return RegularityCheck(False, (rep, u, j))
    return RegularityCheck(True)


def quotient_matrix(G: Digraph, pi: Partition) -> Matrix:
    """m x m intersection-number matrix B of a regular partition."""
    check = is_regular_partition(G, pi)
    if not check:
        u, v, j = check.witness
        raise NotRegular(f"vertices {u} and {v} share a cell but differ in arcs into cell {j}")
    prof = _profiles(G, pi.cell_of, pi.m)
    B = [None] * pi.m
    for u, c in enumerate(pi.cell_of):
        if B[c] is None:
            B[c] = prof[u]
    return B


def check_commutation(A: Sequence[Sequence[int]], S: Sequence[Sequence[int]],
                      B: Sequence[Sequence[int]]) -> bool:
    """True iff S B == A S exactly."""
    n = len(A)
    m = len(B)
    if len(S) != n or any(len(row) != n for row in A):
        raise DimensionMismatch("A must be n x n and S must have n rows")
    if any(len(row) != m for row in S) or any(len(row) != m for row in B):
        raise DimensionMismatch("S must be n x m and B must be m x m")
    return mat_mul(S, B) == mat_mul(A, S)


def walk_count_check(G: Digraph, pi: Partition, k: int) -> bool:
    """True iff, for every u in cell i, the number of k-walks from u into cell j is (B^k)[i][j]."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    Bk = mat_pow(quotient_matrix(G, pi), k)
    arcs = G.arcs
    for j in range(pi.m):
        # counts[u] = number of t-walks from u ending in cell j
        counts = [int(c == j) for c in pi.cell_of]
        for _ in range(k):
            nxt = [0] * G.n
            for u, v in arcs:
                nxt[u] += counts[v]
            counts = nxt
        for u, c in enumerate(pi.cell_of):
            if counts[u] != Bk[c][j]:
                return False
    return True


def coarsest_regular_partition(G: Digraph) -> Partition:
    """Coarsest regular partition, by signature refinement from the trivial partition.

    Each round splits cells by the vector of arc counts into the current cells;
    the fixpoint is regular and every regular partition refines it.
    """
    if G.n == 0:
        return Partition((), 0)
    cell_of = [0] * G.n
    m = 1
    while True:
        prof = _profiles(G, cell_of, m)
        new = Partition.from_labels([(cell_of[u], tuple(prof[u])) for u in range(G.n)])
        if new.m == m:
            return new
        cell_of, m = list(new.cell_of), new.m


def quotient_dot(B: Sequence[Sequence[int]], sizes: Optional[Sequence[int]] = None,
                 name: str = "Q") -> str:
    """Weighted quotient digraph in DOT, one edge per nonzero b_ij labelled with its value."""
    lines = [f"digraph {name} {{"]
    for i in range(len(B)):
        label = f"V{i + 1}" if sizes is None else f"V{i + 1} ({sizes[i]})"
        lines.append(f'  V{i + 1} [label="{label}"];')
    for i, row in enumerate(B):
        for j, b in enumerate(row):
            if b:
                lines.append(f'  V{i + 1} -> V{j + 1} [label="{b}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
