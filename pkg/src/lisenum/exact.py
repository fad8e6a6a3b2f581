"""Exact integer and rational scalar arithmetic.

The counts handled by this package overflow 64-bit integers quickly, so
every quantity is a Python ``int`` (unbounded precision) or a
``fractions.Fraction``, which is always stored in lowest terms with a
positive denominator.  No float appears anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction

Scalar = int | Fraction


def exact_div(a: int, b: int) -> int:
    """Integer division that insists on a zero remainder."""
    q, r = divmod(a, b)
    if r:
        raise ValueError(f"inexact division: {a} / {b} leaves remainder {r}")
    return q


def binomial(c: int, d: int) -> int:
    """Generalized binomial coefficient for arbitrary integer arguments.

    Returns 0 whenever ``d < 0``.  Otherwise evaluates the degree-d
    product c(c-1)...(c-d+1) / d!, which vanishes automatically for
    0 <= c < d and takes signed nonzero values for negative c, e.g.
    ``binomial(-2, 1) == -2``.
    """
    if d < 0:
        return 0
    if c >= 0:
        return math.comb(c, d)
    num = 1
    for t in range(d):
        num *= c - t
    # a product of d consecutive integers is divisible by d!
    return exact_div(num, math.factorial(d))


def falling_factorial(n: int, i: int) -> int:
    """n(n-1)...(n-i+1), the number of ordered i-selections from n items."""
    if n < 0 or i < 0:
        raise ValueError(f"falling_factorial needs nonnegative arguments, got ({n}, {i})")
    if i > n:
        raise ValueError(f"falling_factorial undefined for i > n: ({n}, {i})")
    return math.perm(n, i)


def scalar_str(x: Scalar) -> str:
    """Decimal string for integers, lowest-terms ``p/q`` for true rationals."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def parse_scalar(s: str) -> Scalar:
    """Inverse of :func:`scalar_str`."""
    if "/" in s:
        p, q = s.split("/", 1)
        return Fraction(int(p), int(q))
    return int(s)
