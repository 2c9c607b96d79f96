"""Exact q-analog arithmetic: subspace counts, Gaussian binomials, scaled limits.

All counts are plain Python ints (arbitrary precision).  The scaled
quantities u_n = G(n,q) * q^(-n^2/4) and the tail product bounding them are
carried as mpmath floats at a configurable decimal precision.
"""

from __future__ import annotations

from functools import lru_cache

import mpmath

DEFAULT_PRECISION = 60

# guard digits added on top of the requested precision for intermediate work
_GUARD_DIGITS = 10


def _validate_prime_power(q: int) -> None:
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    p = 2
    m = q
    while p * p <= m:
        if m % p == 0:
            break
        p += 1
    else:
        p = m
    while m % p == 0:
        m //= p
    if m != 1:
        raise ValueError(f"q must be a prime power, got {q}")


@lru_cache(maxsize=None)
def gauss_total(n: int, q: int) -> int:
    """Number of subspaces of an n-dimensional space over the q-element field.

    Computed by the recurrence G(n+1) = 2 G(n) + (q^n - 1) G(n-1) with
    G(0) = 1, G(1) = 2.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    _validate_prime_power(q)
    if n == 0:
        return 1
    if n == 1:
        return 2
    return 2 * gauss_total(n - 1, q) + (q ** (n - 1) - 1) * gauss_total(n - 2, q)


@lru_cache(maxsize=None)
def gauss_binomial(n: int, d: int, q: int) -> int:
    """Number of d-dimensional subspaces of an n-dimensional space over GF(q).

    Exact iterative product; every intermediate quotient is itself a
    Gaussian binomial, so the integer divisions are exact.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    _validate_prime_power(q)
    if d < 0 or d > n:
        return 0
    d = min(d, n - d)
    result = 1
    for i in range(d):
        result = result * (q ** (n - i) - 1) // (q ** (i + 1) - 1)
    return result


def scaled_u(n: int, q: int, precision: int = DEFAULT_PRECISION) -> mpmath.mpf:
    """The scaled subspace count G(n,q) * q^(-n^2/4)."""
    if precision < 30:
        raise ValueError(f"precision must be >= 30, got {precision}")
    g = gauss_total(n, q)
    with mpmath.workdps(precision + _GUARD_DIGITS):
        u = mpmath.mpf(g) * mpmath.mpf(q) ** (-mpmath.mpf(n * n) / 4)
        return +u


def lemma1_tail_product(terms: int, precision: int = DEFAULT_PRECISION) -> mpmath.mpf:
    """1.7 times the partial product of (2^(5/4-k/2) + 1 - 2^(1-k)), k >= 2.

    Monotone increasing in `terms`; the infinite product is finite and the
    value stays below 23 for every truncation.
    """
    if terms < 10:
        raise ValueError(f"terms must be >= 10, got {terms}")
    with mpmath.workdps(precision + _GUARD_DIGITS):
        acc = mpmath.mpf("1.7")
        for k in range(2, terms + 2):
            acc *= mpmath.mpf(2) ** (mpmath.mpf(5) / 4 - mpmath.mpf(k) / 2) \
                + 1 - mpmath.mpf(2) ** (1 - k)
        return +acc
