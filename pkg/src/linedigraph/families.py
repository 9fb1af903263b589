"""
Digraph families, reference quotient fixtures, and independent combinatorial oracles.

Family spec strings (used by the CLI)::

    ck:d=2,l=4            cyclic Kautz CK(d, l)
    kautz:d=2,l=3         Kautz K(d, l)
    uni:n=3,d=2           unicyclic G_{n,d}
    cycle:n=5             directed cycle C_n
    rand:n=10,p=0.25,seed=42
    dag:n=10,p=0.25,seed=42
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Dict, Optional, Tuple

from .digraph import Digraph, build_digraph
from .errors import ParameterOutOfRange, ParseError, SizeLimitExceeded
from .linalg import Matrix
from .partition import Partition

SQUAREFREE_MAX_LENGTH = 20


def _word_label(word: Tuple[int, ...], d: int) -> str:
    sep = "" if d < 10 else "."
    return sep.join(str(a) for a in word)


def _shift_digraph(words: list, d: int) -> Digraph:
    index = {w: i for i, w in enumerate(words)}
    arcs = []
    for i, w in enumerate(words):
        for a in range(d + 1):
            j = index.get(w[1:] + (a,))
            if j is not None:
                arcs.append((i, j))
    return build_digraph(len(words), arcs, [_word_label(w, d) for w in words])


def _kautz_words(d: int, length: int):
    for w in product(range(d + 1), repeat=length):
        if all(w[i] != w[i + 1] for i in range(length - 1)):
            yield w


def cyclic_kautz(d: int, length: int) -> Digraph:
    """CK(d, l): words over {0..d} with adjacent letters distinct and first != last.

    Arcs are the shifts a_1..a_l -> a_2..a_l a_{l+1} whose target is itself a vertex.
    Vertices are indexed in lexicographic word order.
    """
    if d < 1 or length < 2:
        raise ParameterOutOfRange(f"CK(d, l) needs d >= 1 and l >= 2, got d={d}, l={length}")
    words = [w for w in _kautz_words(d, length) if w[0] != w[-1]]
    return _shift_digraph(words, d)


def kautz(d: int, length: int) -> Digraph:
    """Kautz digraph K(d, l); d-regular on (d+1) d^(l-1) vertices."""
    if d < 1 or length < 2:
        raise ParameterOutOfRange(f"K(d, l) needs d >= 1 and l >= 2, got d={d}, l={length}")
    return _shift_digraph(list(_kautz_words(d, length)), d)


def cycle(n: int) -> Digraph:
    if n < 1:
        raise ParameterOutOfRange(f"C_n needs n >= 1, got {n}")
    return build_digraph(n, [(i, (i + 1) % n) for i in range(n)])


def unicyclic(n: int, d: int) -> Digraph:
    """G_{n,d}: C_n with an out-tree (one center, d leaves) hung on every cycle vertex.

    Cycle vertices are 0..n-1, centers n..2n-1, the leaves of center n+i are
    2n + i*d .. 2n + (i+1)*d - 1.
    """
    if n < 1 or d < 0:
        raise ParameterOutOfRange(f"G_(n,d) needs n >= 1 and d >= 0, got n={n}, d={d}")
    arcs = []
    for i in range(n):
        arcs.append((i, (i + 1) % n))
        arcs.append((i, n + i))
        for j in range(d):
            arcs.append((n + i, 2 * n + i * d + j))
    return build_digraph(n * (d + 2), arcs)


def unicyclic_partition(n: int, d: int) -> Partition:
    """(cycle, centers, leaves); the leaf cell is dropped when d = 0."""
    cells = [list(range(n)), list(range(n, 2 * n))]
    if d:
        cells.append(list(range(2 * n, n * (d + 2))))
    return Partition.from_cells(cells)


def _ck4_shape(label: str, d: int) -> Tuple[bool, bool]:
    w = label.split(".") if d >= 10 else list(label)
    return w[0] == w[2], w[1] == w[3]


def ck24_partition(G: Digraph) -> Partition:
    """Three word shapes of CK(2, 4) in the order abcb, abab, abac."""
    order = {(False, True): 0, (True, True): 1, (True, False): 2}
    return Partition(tuple(order[_ck4_shape(G.label(v), 2)] for v in range(G.n)), 3)


def ck4_shape_partition(G: Digraph, d: int) -> Partition:
    """Word shapes of CK(d, 4) in the order abab, abac, abcb, abcd.

    For d = 2 no word has shape abcd, so only the first three cells appear.
    """
    order = {(True, True): 0, (True, False): 1, (False, True): 2, (False, False): 3}
    cell_of = tuple(order[_ck4_shape(G.label(v), d)] for v in range(G.n))
    return Partition(cell_of, 4 if d > 2 else 3)


def squarefree_count(length: int, max_length: int = SQUAREFREE_MAX_LENGTH) -> int:
    """Number of ternary words of the given length with no factor xx and no factor xyxy.

    Exhaustive depth-first enumeration; a word is extended only while every
    prefix stays admissible, so only the newest suffix needs checking.
    """
    if length < 0:
        raise ParameterOutOfRange("length must be nonnegative")
    if length > max_length:
        raise SizeLimitExceeded(f"length {length} exceeds enumeration limit {max_length}")
    word = []

    def admissible() -> bool:
        if len(word) >= 2 and word[-1] == word[-2]:
            return False
        if len(word) >= 4 and word[-4:-2] == word[-2:]:
            return False
        return True

    def count(remaining: int) -> int:
        if remaining == 0:
            return 1
        total = 0
        for a in range(3):
            word.append(a)
            if admissible():
                total += count(remaining - 1)
            word.pop()
        return total

    return count(length)


def ckd4_closed_form(d: int, k: int) -> float:
    """Floating-point closed formula for |V(L^k(CK(d, 4)))|; a cross-check only."""
    if d < 2 or k < 0:
        raise ParameterOutOfRange(f"closed form needs d >= 2 and k >= 0, got d={d}, k={k}")
    disc = d * d - 2 * d + 5
    root = math.sqrt(disc)
    a = (d * d + d) * root - d ** 3 - d - 2
    b = (d * d + d) * root + d ** 3 + d + 2
    return 2 ** k * d / root * (a / (1 - d - root) ** (k + 1) + b / (1 - d + root) ** (k + 1))


@dataclass(frozen=True)
class QuotientFixture:
    B: Matrix
    s: Optional[Tuple[int, ...]] = None  # None when the cell sizes are not known


def ckd4_fixture(d: int) -> QuotientFixture:
    B = [[1, d - 1, 0, 0],
         [0, 0, 1, d - 2],
         [1, d - 1, 0, 0],
         [0, 0, 1, d - 2]]
    s = ((d + 1) * d, (d + 1) * d * (d - 1), (d + 1) * d * (d - 1), (d + 1) * d * (d - 1) * (d - 2))
    return QuotientFixture(B, s)


def unicyclic_fixture(n: int, d: int) -> QuotientFixture:
    return QuotientFixture([[1, 1, 0], [0, 0, d], [0, 0, 0]], (n, n, n * d))


def fixture_quotients(d: int = 3, n: int = 3) -> Dict[str, QuotientFixture]:
    """The four reference quotient matrices; ``d`` and ``n`` parameterize the families."""
    acyclic6 = [[0, 3, 0, 0, 0, 0],
                [0, 0, 1, 1, 0, 0],
                [0, 0, 0, 0, 1, 0],
                [0, 0, 0, 0, 0, 1],
                [0, 0, 0, 0, 0, 1],
                [0, 0, 0, 0, 0, 0]]
    return {
        "ck24": QuotientFixture([[0, 1, 1], [0, 1, 1], [1, 0, 0]], (6, 6, 6)),
        "ckd4": ckd4_fixture(d),
        "unicyclic": unicyclic_fixture(n, d),
        "acyclic6": QuotientFixture(acyclic6),
    }


def random_digraph(n: int, arc_prob, seed) -> Digraph:
    """Each ordered pair (u, v), loops included, gets an arc with probability ``arc_prob``.

    Uses Python's ``random.Random`` (Mersenne Twister MT19937) seeded with
    ``seed``, drawing one ``random()`` per pair in row-major order and keeping
    the arc when the draw is below ``arc_prob``.
    """
    p = Fraction(arc_prob)
    if not 0 <= p <= 1 or n < 0:
        raise ParameterOutOfRange(f"need n >= 0 and 0 <= p <= 1, got n={n}, p={arc_prob}")
    rng = random.Random(seed)
    arcs = [(u, v) for u in range(n) for v in range(n) if rng.random() < p]
    return build_digraph(n, arcs)


def random_dag(n: int, arc_prob, seed) -> Digraph:
    """Acyclic variant of :func:`random_digraph`: only pairs u < v are drawn."""
    p = Fraction(arc_prob)
    if not 0 <= p <= 1 or n < 0:
        raise ParameterOutOfRange(f"need n >= 0 and 0 <= p <= 1, got n={n}, p={arc_prob}")
    rng = random.Random(seed)
    arcs = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return build_digraph(n, arcs)


def longest_walk(G: Digraph) -> Optional[int]:
    """Length of the longest walk in an acyclic digraph; None if G has a cycle."""
    succ = [[] for _ in range(G.n)]
    indeg = [0] * G.n
    for u, v in G.arcs:
        succ[u].append(v)
        indeg[v] += 1
    order = [v for v in range(G.n) if indeg[v] == 0]
    for u in order:
        for v in succ[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                order.append(v)
    if len(order) < G.n:
        return None
    depth = [0] * G.n  # longest walk starting at v
    for u in reversed(order):
        depth[u] = max((depth[v] + 1 for v in succ[u]), default=0)
    return max(depth, default=-1)


# ---------------------------------------------------------------------------
# family spec strings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FamilySpec:
    tag: str
    params: Dict[str, object] = field(default_factory=dict)

    def __str__(self):
        body = ",".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.tag}:{body}" if body else self.tag


_FAMILY_PARAMS = {
    "ck": ("d", "l"),
    "kautz": ("d", "l"),
    "uni": ("n", "d"),
    "cycle": ("n",),
    "rand": ("n", "p", "seed"),
    "dag": ("n", "p", "seed"),
}


def parse_family_spec(text: str) -> FamilySpec:
    tag, _, body = text.strip().partition(":")
    if tag not in _FAMILY_PARAMS:
        raise ParseError(f"unknown family {tag!r}; expected one of {sorted(_FAMILY_PARAMS)}")
    params: Dict[str, object] = {}
    for item in filter(None, body.split(",")):
        key, eq, value = item.partition("=")
        key = key.strip()
        if not eq or key not in _FAMILY_PARAMS[tag]:
            raise ParseError(f"bad parameter {item!r} for family {tag!r}")
        try:
            params[key] = Fraction(value.strip()) if key == "p" else int(value)
        except ValueError as exc:
            raise ParseError(f"bad value in {item!r}") from exc
    if tag in ("rand", "dag"):
        params.setdefault("seed", 0)
    missing = [k for k in _FAMILY_PARAMS[tag] if k not in params]
    if missing:
        raise ParseError(f"family {tag!r} is missing parameters {missing}")
    return FamilySpec(tag, params)


def build_family(spec: FamilySpec) -> Digraph:
    p = spec.params
    if spec.tag == "ck":
        return cyclic_kautz(p["d"], p["l"])
    if spec.tag == "kautz":
        return kautz(p["d"], p["l"])
    if spec.tag == "uni":
        return unicyclic(p["n"], p["d"])
    if spec.tag == "cycle":
        return cycle(p["n"])
    if spec.tag == "rand":
        return random_digraph(p["n"], p["p"], p["seed"])
    if spec.tag == "dag":
        return random_dag(p["n"], p["p"], p["seed"])
    raise ParseError(f"unknown family {spec.tag!r}")
