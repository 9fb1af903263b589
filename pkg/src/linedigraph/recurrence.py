"""
Linear recurrences for the order sequence n_k = |V(L^k(G))|.

Two routes produce a :class:`LinearRecurrence`:

* :func:`theorem_recurrence` reads the coefficients off the minimal polynomial
  of a quotient matrix and the initial terms off ``s B^k j^T``;
* :func:`shortest_recurrence` runs Berlekamp-Massey over the rationals on a
  finite prefix of terms.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .digraph import Digraph
from .errors import HorizonTooSmall, InsufficientPrefix
from .linalg import MonicPolynomial, fraction_str, minimal_polynomial, sandwich_sequence
from .partition import Partition, quotient_matrix


def _exact(q):
    q = Fraction(q)
    return q.numerator if q.denominator == 1 else q


@dataclass(frozen=True)
class LinearRecurrence:
    """n_k = alpha[0] n_{k-1} + ... + alpha[r-1] n_{k-r}.

    The identity holds for every k >= effective_start; terms with index below
    ``order`` are taken from ``initial``.
    """

    alpha: Tuple[Fraction, ...]
    initial: Tuple[int, ...]
    effective_start: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(Fraction(a) for a in self.alpha))
        object.__setattr__(self, "initial", tuple(_exact(x) for x in self.initial))
        if len(self.initial) != len(self.alpha):
            raise ValueError("need exactly `order` initial terms")
        if not 0 <= self.effective_start <= self.order:
            raise ValueError("effective_start must lie in [0, order]")

    @property
    def order(self) -> int:
        return len(self.alpha)

    @property
    def polynomial(self) -> MonicPolynomial:
        return MonicPolynomial(self.alpha)

    @property
    def support(self) -> int:
        """Largest lag with a nonzero coefficient (0 if all coefficients vanish)."""
        nz = [i + 1 for i, a in enumerate(self.alpha) if a != 0]
        return nz[-1] if nz else 0

    def step(self, window: Sequence) -> object:
        """Next term from the ``order`` most recent terms (oldest first)."""
        r = self.order
        return _exact(sum(self.alpha[i] * window[r - 1 - i] for i in range(r)))

    def holds_at(self, terms: Sequence, k: int) -> bool:
        """Whether n_k matches the recurrence, using only lags with nonzero coefficient."""
        lag = self.support
        if k - lag < 0 or k >= len(terms):
            return False
        rhs = sum(a * terms[k - 1 - i] for i, a in enumerate(self.alpha) if a != 0)
        return terms[k] == rhs

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "alpha": [fraction_str(a) for a in self.alpha],
            "initial": [fraction_str(x) for x in self.initial],
            "effective_start": self.effective_start,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "LinearRecurrence":
        rec = cls(tuple(Fraction(a) for a in d["alpha"]),
                  tuple(Fraction(x) for x in d["initial"]),
                  int(d["effective_start"]))
        if rec.order != d["order"]:
            raise ValueError("alpha length does not match order")
        return rec

    def pretty(self) -> str:
        parts = []
        for i, a in enumerate(self.alpha):
            if a == 0:
                continue
            term = f"n_{{k-{i + 1}}}"
            mag = abs(a)
            if mag == 1:
                body = term
            elif mag.denominator == 1:
                body = f"{mag.numerator}{term}"
            else:
                body = f"({fraction_str(mag)}){term}"
            sign = "-" if a < 0 else "+"
            parts.append((sign, body))
        if parts:
            rhs = ("-" if parts[0][0] == "-" else "") + parts[0][1]
            rhs += "".join(f" {s} {b}" for s, b in parts[1:])
        else:
            rhs = "0"
        s = f"n_k = {rhs} (k ≥ {self.effective_start})"
        inits = ", ".join(f"n_{i} = {fraction_str(self.initial[i])}" for i in range(self.effective_start))
        return f"{s}, {inits}" if inits else s

    def __str__(self):
        return self.pretty()


def _effective_start(rec_alpha: Sequence[Fraction], terms: Sequence) -> int:
    """Smallest e such that the recurrence identity holds at every k in [e, r).

    Walks down from k = r-1 and stops at the first failure or at the first
    index where a nonzero lag would reach below n_0.
    """
    probe = LinearRecurrence(tuple(rec_alpha), tuple(terms[:len(rec_alpha)]), len(rec_alpha))
    e = probe.order
    while e > 0 and probe.holds_at(terms, e - 1):
        e -= 1
    return e


def recurrence_from_quotient(s: Sequence[int], B: Sequence[Sequence[int]]) -> LinearRecurrence:
    """Recurrence with coefficients from the minimal polynomial of B and initial terms s B^k j^T."""
    mp = minimal_polynomial(B)
    r = mp.degree
    terms = sandwich_sequence(s, B, max(r - 1, 0)) if len(B) else [0]
    return LinearRecurrence(mp.alpha, tuple(terms[:r]), _effective_start(mp.alpha, terms[:r]))


def theorem_recurrence(G: Digraph, pi: Partition) -> LinearRecurrence:
    """Recurrence for n_k derived from a regular partition of G.

    Raises NotRegular if ``pi`` is not regular.
    """
    B = quotient_matrix(G, pi)
    return recurrence_from_quotient(pi.sizes, B)


def shortest_recurrence(prefix: Sequence) -> LinearRecurrence:
    """Minimal-order recurrence satisfied by ``prefix``, via Berlekamp-Massey over Q.

    The result is certified only when the prefix holds at least twice as many
    terms as the recurrence order; otherwise InsufficientPrefix is raised.
    """
    seq = [Fraction(x) for x in prefix]
    N = len(seq)
    # connection polynomials C(z) = 1 + c_1 z + ..., stored ascending
    C = [Fraction(1)]
    Bpoly = [Fraction(1)]
    L = 0
    shift = 1
    b = Fraction(1)
    for i in range(N):
        d = seq[i]
        for j in range(1, L + 1):
            if j < len(C):
                d += C[j] * seq[i - j]
        if d == 0:
            shift += 1
            continue
        coef = d / b
        T = list(C)
        need = len(Bpoly) + shift
        if len(C) < need:
            C = C + [Fraction(0)] * (need - len(C))
        for j, x in enumerate(Bpoly):
            C[j + shift] -= coef * x
        if 2 * L <= i:
            L = i + 1 - L
            Bpoly = T
            b = d
            shift = 1
        else:
            shift += 1
    if N < 2 * L or N == 0:
        raise InsufficientPrefix(f"{N} terms cannot certify a recurrence of order {L}")
    C = C + [Fraction(0)] * (L + 1 - len(C))
    alpha = tuple(-C[j] for j in range(1, L + 1))
    initial = tuple(seq[:L])
    return LinearRecurrence(alpha, initial, _effective_start(alpha, seq))


def extend(rec: LinearRecurrence, upto_k: int) -> list:
    """Terms n_0..n_{upto_k}."""
    if upto_k < 0:
        return []
    r = rec.order
    terms = list(rec.initial[:upto_k + 1])
    while len(terms) <= upto_k:
        if r == 0:
            terms.append(0)
        else:
            terms.append(rec.step(terms[-r:]))
    return terms


class Behaviour(enum.Enum):
    VANISHING = "Vanishing"
    CONSTANT = "Constant"
    INCREASING = "Increasing"
    OTHER = "Other"


@dataclass(frozen=True)
class Classification:
    behaviour: Behaviour
    value: Optional[int] = None
    since: Optional[int] = None  # index from which the certificate applies

    def __str__(self):
        if self.behaviour is Behaviour.CONSTANT:
            return f"Constant({self.value})"
        return self.behaviour.value

    def to_dict(self) -> dict:
        d = {"behaviour": self.behaviour.value, "since": self.since}
        if self.value is not None:
            d["value"] = str(self.value)
        return d


def classify(rec: LinearRecurrence, horizon: int) -> Classification:
    """Long-run behaviour of the sequence, decided by exact certificates.

    * Vanishing: all coefficients are zero, or r consecutive zero terms occur.
    * Constant(c): r consecutive terms equal c > 0 and the coefficients sum to 1.
    * Increasing: all coefficients are >= 0 (one > 0) and r+1 consecutive terms
      strictly increase; every later difference is then a positive combination
      of positive differences.
    """
    r = rec.order
    if horizon < rec.effective_start + r:
        raise HorizonTooSmall(f"horizon {horizon} < effective_start + order = {rec.effective_start + r}")
    terms = extend(rec, horizon)

    if r == 0 or all(a == 0 for a in rec.alpha):
        if all(x == 0 for x in terms[r:]):
            return Classification(Behaviour.VANISHING, since=r)
    for t in range(0, horizon - r + 2):
        window = terms[t:t + r]
        if len(window) == r and all(x == 0 for x in window):
            return Classification(Behaviour.VANISHING, since=t)

    if r and sum(rec.alpha) == 1:
        for t in range(0, horizon - r + 2):
            window = terms[t:t + r]
            if len(window) == r and window[0] > 0 and all(x == window[0] for x in window):
                return Classification(Behaviour.CONSTANT, value=window[0], since=t)

    if r and all(a >= 0 for a in rec.alpha) and any(a > 0 for a in rec.alpha):
        for t in range(0, horizon - r + 1):
            run = terms[t:t + r + 1]
            if all(x < y for x, y in zip(run, run[1:])):
                return Classification(Behaviour.INCREASING, since=t)

    return Classification(Behaviour.OTHER)
