"""Legendre polynomials by repeated differentiation, and permutation inversions."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Sequence

MAX_LEGENDRE_DEGREE = 30
MAX_INVERSION_N = 12


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial in ``q``; ``coefficients[k]`` multiplies ``q**k``.

    Trailing zeros are stripped, so equal polynomials compare equal.
    """

    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = [int(c) for c in self.coefficients]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs or [0]))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def __call__(self, q):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * q + c
        return acc

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)


def legendre_coefficients(n: int) -> list[Fraction]:
    """Exact power-basis coefficients of ``P_n = d^n/dx^n (x^2 - 1)^n / (2^n n!)``."""
    if not isinstance(n, int) or not 0 <= n <= MAX_LEGENDRE_DEGREE:
        raise ValueError(f"degree must be an integer in [0, {MAX_LEGENDRE_DEGREE}], got {n!r}")
    # (x^2 - 1)^n = sum_k C(n, k) (-1)^(n-k) x^(2k)
    expanded = [0] * (2 * n + 1)
    for k in range(n + 1):
        expanded[2 * k] = math.comb(n, k) * (-1) ** (n - k)
    # n-th derivative of x^m is m!/(m-n)! x^(m-n)
    derived = [expanded[m] * math.perm(m, n) for m in range(n, 2 * n + 1)]
    scale = 2**n * math.factorial(n)
    return [Fraction(c, scale) for c in derived]


def legendre(n: int, x: float) -> float:
    """``P_n(x)`` evaluated exactly in rationals and rounded once at the end."""
    xr = Fraction(x)
    acc = Fraction(0)
    for c in reversed(legendre_coefficients(n)):
        acc = acc * xr + c
    return float(acc)


def _check_permutation(sigma: Sequence[int]) -> list[int]:
    s = [int(v) for v in sigma]
    if sorted(s) != list(range(1, len(s) + 1)):
        raise ValueError(f"not a permutation of 1..{len(s)}: {list(sigma)!r}")
    return s


def inversion_count(sigma: Sequence[int]) -> int:
    """Number of pairs ``i < j`` with ``sigma(i) > sigma(j)``; ``sigma`` is one-line notation on 1..n."""
    s = _check_permutation(sigma)
    return sum(1 for i in range(len(s)) for j in range(i + 1, len(s)) if s[i] > s[j])


def q_integer(n: int) -> IntPolynomial:
    """``1 + q + ... + q^(n-1)``."""
    return IntPolynomial((1,) * n)


def inversion_generating_polynomial(n: int) -> IntPolynomial:
    """``sum_k N_n(k) q^k`` where ``N_n(k)`` counts permutations of 1..n with k inversions.

    Built by induction: inserting ``n`` into a permutation of ``1..n-1`` adds
    between 0 and ``n-1`` inversions, one way each, so
    ``R_n = R_{n-1} (1 + q + ... + q^(n-1))``.
    """
    if not isinstance(n, int) or not 1 <= n <= MAX_INVERSION_N:
        raise ValueError(f"n must be an integer in [1, {MAX_INVERSION_N}], got {n!r}")
    poly = IntPolynomial((1,))
    for m in range(2, n + 1):
        poly = poly * q_integer(m)
    return poly


def inversion_histogram(n: int) -> IntPolynomial:
    """Brute-force count of inversions over all ``n!`` permutations."""
    counts = Counter(inversion_count(p) for p in permutations(range(1, n + 1)))
    top = n * (n - 1) // 2
    return IntPolynomial(tuple(counts.get(k, 0) for k in range(top + 1)))
