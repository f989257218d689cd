"""Zero-weight counting for one-parameter torus actions, with a tail bound.

A diagonal torus action on an m-dimensional module is a tuple of integer
weights k = (k_1, ..., k_m).  The invariants of the n-th tensor power are
spanned by the basis tensors whose weights sum to zero, so counting them is
exact lattice combinatorics.  When the weights sum to a positive number, a
Bernstein concentration bound gives an upper estimate for the probability
that a uniformly random basis tensor is invariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import exp, factorial


class InapplicableBoundError(ValueError):
    """Raised when the weights do not sum to a positive number."""


@dataclass(frozen=True)
class BernsteinInput:
    """Exact rational parameters fed into the Bernstein tail bound.

    t: threshold n*sum(k)/(m+1); v: variance proxy n*E[(mean - k_i)**2];
    b: almost-sure bound max_i(mean - k_i), where mean = sum(k)/m.
    """

    t: Fraction
    v: Fraction
    b: Fraction


@dataclass(frozen=True)
class BernsteinBound:
    value: float
    inputs: BernsteinInput


def _clean_weights(weights) -> tuple[int, ...]:
    weights = tuple(int(k) for k in weights)
    if not weights:
        raise ValueError("need at least one weight")
    return weights


def zero_weight_count(weights, n: int) -> int:
    """Number of basis tensors of weight 0 in the n-th tensor power.

    Counts functions f: {1..n} -> {1..m} with sum k_{f(i)} = 0 by dynamic
    programming over partial sums.
    """
    weights = _clean_weights(weights)
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    sums = {0: 1}
    for _ in range(n):
        step: dict[int, int] = {}
        for s, c in sums.items():
            for k in weights:
                step[s + k] = step.get(s + k, 0) + c
        sums = step
    return sums.get(0, 0)


def zero_weight_probability(weights, n: int) -> Fraction:
    """Exact probability that a uniform basis tensor has weight zero."""
    weights = _clean_weights(weights)
    return Fraction(zero_weight_count(weights, n), len(weights) ** n)


def bernstein_zero_bound(weights, n: int) -> BernsteinBound:
    """Bernstein upper bound on the zero-weight probability, for sum(k) > 0.

    Center: with K uniform on the weights and Y = sum(k)/m - K, the sum of n
    i.i.d. copies of Y exceeding t = n*sum(k)/(m+1) is necessary for a zero
    total weight, and Pr[sum Y_i > t] <= exp(-t**2 / (2*(v + b*t/3))) with
    v = n*E[Y**2] and b = max Y.  All parameters are exact rationals; only
    the final exponential is floating point.
    """
    weights = _clean_weights(weights)
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    m = len(weights)
    total = sum(weights)
    if total <= 0:
        raise InapplicableBoundError(
            f"weights {weights} sum to {total}; the bound needs a positive sum"
        )
    mean = Fraction(total, m)
    t = Fraction(n * total, m + 1)
    v = n * Fraction(sum((mean - k) ** 2 for k in weights), m)
    b = max(mean - k for k in weights)
    denominator = 2 * (v + b * t / 3)
    if denominator == 0:
        # All weights equal (and positive): the centered variable is
        # identically zero, so the tail probability is 0 for t > 0.
        value = 1.0 if t == 0 else 0.0
    else:
        value = exp(-float(t * t / denominator))
    return BernsteinBound(value, BernsteinInput(t, v, b))


def diagonal_zero_count(m: int, n: int) -> int:
    """Invariant count for the full diagonal torus of SL_m on V^(x)(m*n).

    Only the perfectly balanced basis tensors survive: (m*n)!/(n!)**m.
    """
    if m < 1 or n < 0:
        raise ValueError(f"need m >= 1 and n >= 0, got m={m}, n={n}")
    return factorial(m * n) // factorial(n) ** m
