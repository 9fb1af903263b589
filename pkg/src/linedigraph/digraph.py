"""
Finite digraphs with loops and parallel arcs, the line-digraph operator and
brute-force order oracles.

Arcs are stored as two parallel int64 arrays (tails, heads) kept in
lexicographic order, so two digraphs with the same arc multiset compare equal.
Vertex ``i`` of ``line_digraph(G)`` is the ``i``-th arc of ``G`` in that order.
"""
from __future__ import annotations

import json
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

from .errors import IndexOutOfRange, SizeLimitExceeded

DEFAULT_VERTEX_BUDGET = 10**6

# separator between base vertex labels inside a walk label
WALK_SEP = ","

IntMatrix = list[list[int]]  # exact Python integers


class Digraph:
    """Immutable digraph on vertices ``0..n-1``.

    Equality and hashing use ``n`` and the arc multiset only; ``labels`` are
    carried for display and debugging.
    """

    __slots__ = ("n", "tails", "heads", "labels", "_hash")

    def __init__(self, n: int, tails: np.ndarray, heads: np.ndarray,
                 labels: Optional[Tuple[str, ...]] = None):
        # trusted constructor: use build_digraph() for unchecked input
        tails.setflags(write=False)
        heads.setflags(write=False)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "tails", tails)
        object.__setattr__(self, "heads", heads)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Digraph is immutable")

    @property
    def num_arcs(self) -> int:
        return int(self.tails.shape[0])

    @property
    def arcs(self) -> list[tuple[int, int]]:
        return list(zip(self.tails.tolist(), self.heads.tolist()))

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def out_degrees(self) -> np.ndarray:
        return np.bincount(self.tails, minlength=self.n)

    def in_degrees(self) -> np.ndarray:
        return np.bincount(self.heads, minlength=self.n)

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return (self.n == other.n
                and np.array_equal(self.tails, other.tails)
                and np.array_equal(self.heads, other.heads))

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.n, self.tails.tobytes(), self.heads.tobytes())))
        return self._hash

    def __repr__(self):
        return f"Digraph(n={self.n}, arcs={self.num_arcs})"

    # -- serialization -----------------------------------------------------

    def to_dict(self) -> dict:
        d = {"n": self.n, "arcs": [[u, v] for u, v in self.arcs]}
        if self.labels is not None:
            d["labels"] = list(self.labels)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "Digraph":
        return build_digraph(d["n"], [tuple(a) for a in d["arcs"]], d.get("labels"))

    def to_dot(self, name: str = "G") -> str:
        lines = [f"digraph {name} {{"]
        if self.labels is not None:
            for v, lab in enumerate(self.labels):
                lines.append(f'  {v} [label="{lab}"];')
        else:
            for v in range(self.n):
                lines.append(f"  {v};")
        for u, v in self.arcs:
            lines.append(f"  {u} -> {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_digraph(n: int, arcs: Iterable[Sequence[int]],
                  labels: Optional[Sequence[str]] = None) -> Digraph:
    """Validate and normalize ``arcs`` (with multiplicity) into a Digraph."""
    if n < 0:
        raise IndexOutOfRange(f"vertex count must be nonnegative, got {n}")
    pairs = sorted((int(u), int(v)) for u, v in arcs)
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"arc ({u}, {v}) has an endpoint outside [0, {n})")
    if labels is not None:
        labels = tuple(str(x) for x in labels)
        if len(labels) != n:
            raise IndexOutOfRange(f"expected {n} labels, got {len(labels)}")
    arr = np.array(pairs, dtype=np.int64).reshape(-1, 2)
    return Digraph(n, np.ascontiguousarray(arr[:, 0]), np.ascontiguousarray(arr[:, 1]), labels)


def adjacency_matrix(G: Digraph) -> IntMatrix:
    """Entry (u, v) is the number of arcs u -> v."""
    A = [[0] * G.n for _ in range(G.n)]
    for u, v in G.arcs:
        A[u][v] += 1
    return A


def line_digraph(G: Digraph, budget: int = DEFAULT_VERTEX_BUDGET,
                 labels: bool = True) -> Digraph:
    """Line digraph L(G): one vertex per arc, arc a=(u,v) -> b=(w,z) iff v == w.

    Parallel arcs are distinct vertices and every ordered pair of adjacent
    arcs contributes exactly one arc. A loop at v becomes a vertex with a loop.
    """
    m = G.num_arcs
    if m > budget:
        raise SizeLimitExceeded(f"L(G) would have {m} vertices (budget {budget})")
    outdeg = G.out_degrees()
    # arcs are sorted by tail, so arcs leaving v occupy [start[v], start[v] + outdeg[v])
    start = np.zeros(G.n + 1, dtype=np.int64)
    np.cumsum(outdeg, out=start[1:])
    counts = outdeg[G.heads]
    total = int(counts.sum())
    new_tails = np.repeat(np.arange(m, dtype=np.int64), counts)
    block_offset = np.repeat(np.cumsum(counts) - counts, counts)
    new_heads = np.repeat(start[G.heads], counts) + (np.arange(total, dtype=np.int64) - block_offset)

    new_labels = None
    if labels:
        tails = G.tails.tolist()
        heads = G.heads.tolist()
        new_labels = tuple(
            G.label(u) + WALK_SEP + G.label(v).rsplit(WALK_SEP, 1)[-1]
            for u, v in zip(tails, heads)
        )
    return Digraph(m, new_tails, new_heads, new_labels)


def iterate_line_digraph(G: Digraph, k: int, budget: int = DEFAULT_VERTEX_BUDGET,
                         labels: bool = True) -> Digraph:
    """L^k(G), with L^0(G) = G."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    for _ in range(k):
        G = line_digraph(G, budget=budget, labels=labels)
    return G


def order_bruteforce(G: Digraph, k: int) -> int:
    """Number of k-walks in G, i.e. j A^k j^T, in exact integer arithmetic."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    arcs = G.arcs
    walks = [1] * G.n  # walks[v] = number of t-walks starting at v
    for _ in range(k):
        nxt = [0] * G.n
        for u, v in arcs:
            nxt[u] += walks[v]
        walks = nxt
    return sum(walks)


def regular_degree(G: Digraph) -> Optional[int]:
    """d if every vertex has in- and out-degree d (with multiplicity), else None."""
    if G.n == 0:
        return None
    out = G.out_degrees()
    inn = G.in_degrees()
    d = int(out[0])
    if np.all(out == d) and np.all(inn == d):
        return d
    return None
