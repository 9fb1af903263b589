"""
Exact integer/rational matrix arithmetic: powers, minimal and characteristic
polynomials, and the ``s B^k j^T`` evaluator.

Matrices are plain lists of rows holding Python ints (or Fractions where an
algorithm needs them transiently). Nothing here touches floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Sequence, Tuple

from .errors import DimensionMismatch

Matrix = List[List[int]]


def _shape(A: Sequence[Sequence]) -> Tuple[int, int]:
    rows = len(A)
    cols = len(A[0]) if rows else 0
    for row in A:
        if len(row) != cols:
            raise DimensionMismatch("ragged matrix")
    return rows, cols


def _square_size(B: Sequence[Sequence]) -> int:
    r, c = _shape(B)
    if r and r != c:
        raise DimensionMismatch(f"expected a square matrix, got {r}x{c}")
    return r


def identity(m: int) -> Matrix:
    return [[int(i == j) for j in range(m)] for i in range(m)]


def mat_mul(A: Sequence[Sequence], B: Sequence[Sequence]) -> Matrix:
    ra, ca = _shape(A)
    rb, cb = _shape(B)
    if ca != rb and ra:
        raise DimensionMismatch(f"cannot multiply {ra}x{ca} by {rb}x{cb}")
    Bt = list(zip(*B)) if rb else [()] * cb
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def mat_add(A: Sequence[Sequence], B: Sequence[Sequence]) -> Matrix:
    if _shape(A) != _shape(B):
        raise DimensionMismatch("matrix sizes differ")
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(c, A: Sequence[Sequence]) -> Matrix:
    return [[c * a for a in row] for row in A]


def mat_pow(B: Sequence[Sequence[int]], k: int) -> Matrix:
    """Exact B^k by binary powering; B^0 is the identity."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    m = _square_size(B)
    result = identity(m)
    base = [list(row) for row in B]
    while k:
        if k & 1:
            result = mat_mul(result, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return result


def is_zero(A: Sequence[Sequence]) -> bool:
    return all(x == 0 for row in A for x in row)


# ---------------------------------------------------------------------------
# polynomials (ascending coefficient lists, exact)
# ---------------------------------------------------------------------------

def poly_trim(p: Sequence) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_divmod(num: Sequence, den: Sequence) -> Tuple[list, list]:
    """Exact polynomial long division over the rationals (ascending coefficients)."""
    num = [Fraction(c) for c in poly_trim(num)]
    den = [Fraction(c) for c in poly_trim(den)]
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    lead = den[-1]
    while len(num) >= len(den) and num:
        shift = len(num) - len(den)
        c = num[-1] / lead
        q[shift] = c
        for i, d in enumerate(den):
            num[shift + i] -= c * d
        num = poly_trim(num)
    return poly_trim(q), num


def poly_at_matrix(coeffs: Sequence, B: Sequence[Sequence]) -> Matrix:
    """Evaluate sum_i coeffs[i] B^i by Horner's rule."""
    m = _square_size(B)
    acc = [[0] * m for _ in range(m)]
    I = identity(m)
    for c in reversed(list(coeffs)):
        acc = mat_add(mat_mul(acc, B), mat_scale(c, I))
    return acc


@dataclass(frozen=True)
class MonicPolynomial:
    """m(x) = x^r - alpha[0] x^(r-1) - ... - alpha[r-1].

    ``alpha`` is ordered from the x^(r-1) coefficient down to the constant
    term, so ``alpha[i]`` multiplies ``n_{k-1-i}`` in the derived recurrence.
    """

    alpha: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(Fraction(a) for a in self.alpha))

    @property
    def degree(self) -> int:
        return len(self.alpha)

    def coefficients(self) -> list:
        """Ascending coefficients c_0..c_r of m(x), with c_r = 1."""
        return [-a for a in reversed(self.alpha)] + [Fraction(1)]

    @classmethod
    def from_coefficients(cls, coeffs: Sequence) -> "MonicPolynomial":
        coeffs = [Fraction(c) for c in poly_trim(coeffs)]
        if not coeffs:
            raise ValueError("zero polynomial is not monic")
        lead = coeffs[-1]
        coeffs = [c / lead for c in coeffs]
        return cls(tuple(-c for c in reversed(coeffs[:-1])))

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.alpha)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients()):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        return format_polynomial(self.coefficients())

    def to_dict(self) -> dict:
        return {"r": self.degree, "alpha": [fraction_str(a) for a in self.alpha]}

    @classmethod
    def from_dict(cls, d: dict) -> "MonicPolynomial":
        alpha = tuple(Fraction(a) for a in d["alpha"])
        if len(alpha) != d["r"]:
            raise ValueError("alpha length does not match r")
        return cls(alpha)


def fraction_str(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_polynomial(coeffs: Sequence, var: str = "x") -> str:
    """Render ascending coefficients as e.g. ``x^3 - 2x^2 - x``."""
    terms = []
    for power in range(len(coeffs) - 1, -1, -1):
        c = Fraction(coeffs[power])
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if power == 0:
            body = fraction_str(mag)
        else:
            mono = var if power == 1 else f"{var}^{power}"
            if mag == 1:
                body = mono
            elif mag.denominator == 1:
                body = f"{mag.numerator}{mono}"
            else:
                body = f"({fraction_str(mag)}){mono}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# minimal / characteristic polynomial
# ---------------------------------------------------------------------------

def _primitive(vec: list) -> list:
    g = 0
    for x in vec:
        g = gcd(g, x)
        if g == 1:
            return vec
    if g > 1:
        return [x // g for x in vec]
    return vec


def minimal_polynomial(B: Sequence[Sequence[int]]) -> MonicPolynomial:
    """Monic polynomial of least degree annihilating B.

    Walks the Krylov sequence I, B, B^2, ... (flattened) and stops at the
    first power that is an integer combination of the earlier ones. The
    elimination is fraction-free: each reduced row carries the integer
    combination of powers that produced it.
    """
    m = _square_size(B)
    if m == 0:
        return MonicPolynomial(())
    # basis rows: (pivot column, reduced vector, combination over powers)
    basis: list = []
    power = identity(m)
    for t in range(m + 1):
        vec = [x for row in power for x in row]
        comb = [0] * t + [1]
        for piv, bvec, bcomb in basis:
            if vec[piv] == 0:
                continue
            a, b = bvec[piv], vec[piv]
            g = gcd(a, b)
            fa, fb = a // g, b // g
            vec = [fa * x - fb * y for x, y in zip(vec, bvec)]
            comb = [fa * x - fb * (bcomb[i] if i < len(bcomb) else 0) for i, x in enumerate(comb)]
            content = 0
            for x in vec + comb:
                content = gcd(content, x)
            if content > 1:
                vec = [x // content for x in vec]
                comb = [x // content for x in comb]
        piv = next((i for i, x in enumerate(vec) if x != 0), None)
        if piv is None:
            # comb[t] != 0 because earlier powers are independent
            return MonicPolynomial.from_coefficients(comb)
        basis.append((piv, vec, comb))
        power = mat_mul(power, B)
    raise AssertionError("Cayley-Hamilton violated")  # pragma: no cover


def characteristic_polynomial(B: Sequence[Sequence[int]]) -> list:
    """Ascending coefficients of det(xI - B) via Faddeev-LeVerrier (exact)."""
    m = _square_size(B)
    coeffs = [Fraction(0)] * (m + 1)
    coeffs[m] = Fraction(1)
    M = [[Fraction(0)] * m for _ in range(m)]
    I = identity(m)
    for k in range(1, m + 1):
        M = mat_add(mat_mul(B, M), mat_scale(coeffs[m - k + 1], I))
        BM = mat_mul(B, M)
        coeffs[m - k] = -Fraction(sum(BM[i][i] for i in range(m))) / k
    return coeffs


# ---------------------------------------------------------------------------
# s B^k j^T
# ---------------------------------------------------------------------------

def sandwich(s: Sequence[int], B: Sequence[Sequence[int]], k: int) -> int:
    """Exact s B^k j^T, with j the all-ones column."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    m = _square_size(B)
    if len(s) != m:
        raise DimensionMismatch(f"s has length {len(s)}, B is {m}x{m}")
    col = [1] * m
    for _ in range(k):
        col = [sum(b * c for b, c in zip(row, col)) for row in B]
    return sum(a * c for a, c in zip(s, col))


def sandwich_sequence(s: Sequence[int], B: Sequence[Sequence[int]], upto: int) -> list:
    """[s B^k j^T for k = 0..upto]."""
    m = _square_size(B)
    if len(s) != m:
        raise DimensionMismatch(f"s has length {len(s)}, B is {m}x{m}")
    out = []
    col = [1] * m
    for k in range(upto + 1):
        if k:
            col = [sum(b * c for b, c in zip(row, col)) for row in B]
        out.append(sum(a * c for a, c in zip(s, col)))
    return out
