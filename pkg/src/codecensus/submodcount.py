"""Exact submodule counting for the invariant-subspace lattice.

A primary block is a finite module over a local ring with residue field of
size Q, described by a partition (its module type).  The number of
submodules of type mu inside a module of type lam is given, in conjugate
coordinates, by

    N(lam, mu; Q) = prod_i Q^(mu'_{i+1} (lam'_i - mu'_i))
                        * qbinom(lam'_i - mu'_{i+1}, mu'_i - mu'_{i+1}; Q).

The paper-facing quantities are the lattice size of a cycle type (product
over its primary blocks) and the same count graded by GF(2)-dimension.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .cyclestruct import CycleType, primary_components
from .qarith import gauss_binomial


def conjugate(parts: tuple[int, ...]) -> tuple[int, ...]:
    """Conjugate partition (column lengths of the Young diagram)."""
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= i) for i in range(1, parts[0] + 1))


def count_submodules_by_type(lam: tuple[int, ...], mu: tuple[int, ...], Q: int) -> int:
    """Number of type-mu submodules of a type-lam module, residue field size Q.

    Returns 0 when mu does not embed (some mu'_i > lam'_i).
    """
    return _count_conj(conjugate(lam), conjugate(mu), Q)


def _count_conj(lc: tuple[int, ...], mc: tuple[int, ...], Q: int) -> int:
    if len(mc) > len(lc):
        return 0
    result = 1
    for i in range(len(lc)):
        m_i = mc[i] if i < len(mc) else 0
        m_next = mc[i + 1] if i + 1 < len(mc) else 0
        l_i = lc[i]
        if m_i > l_i:
            return 0
        result *= Q ** (m_next * (l_i - m_i))
        result *= gauss_binomial(l_i - m_next, m_i - m_next, Q)
    return result


def _sub_conjugates(lc: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    # nonincreasing sequences mc with mc[i] <= lc[i], trailing zeros trimmed
    def rec(i: int, cap: int, prefix: tuple[int, ...]):
        if i == len(lc) or cap == 0:
            yield prefix
            return
        for v in range(min(cap, lc[i]), 0, -1):
            yield from rec(i + 1, v, prefix + (v,))
        yield prefix  # stop here (zeros from position i on)

    yield from rec(0, lc[0] if lc else 0, ())


@lru_cache(maxsize=None)
def component_lattice(lam: tuple[int, ...], Q: int, d: int) -> tuple[int, ...]:
    """Submodule counts of a type-lam block graded by GF(2)-dimension.

    Entry k counts submodules whose type mu has d * |mu| = k; the block
    itself has GF(2)-dimension d * |lam|.  Q must equal 2^d.
    """
    if not lam:
        raise ValueError("lam must be nonempty")
    if Q != 1 << d:
        raise ValueError(f"Q={Q} does not match residue degree d={d}")
    lc = conjugate(lam)
    size = sum(lam)
    coeffs = [0] * (d * size + 1)
    for mc in _sub_conjugates(lc):
        coeffs[d * sum(mc)] += _count_conj(lc, mc, Q)
    assert coeffs[0] == 1 and coeffs[-1] == 1
    return tuple(coeffs)


def component_total(lam: tuple[int, ...], Q: int, d: int) -> int:
    return sum(component_lattice(lam, Q, d))


def lattice_size(ct: CycleType) -> int:
    """Number of invariant subspaces of (any permutation with) this cycle
    type: product of the per-block submodule counts."""
    result = 1
    for comp in primary_components(ct):
        result *= component_total(comp.module_type, comp.residue_size, comp.deg)
    return result


def lattice_dim_poly(ct: CycleType) -> tuple[int, ...]:
    """Invariant-subspace counts graded by dimension (index = dimension).

    Convolution of the per-block graded counts; entries sum to
    lattice_size(ct) and the length is n + 1.
    """
    poly = (1,)
    for comp in primary_components(ct):
        block = component_lattice(comp.module_type, comp.residue_size, comp.deg)
        new = [0] * (len(poly) + len(block) - 1)
        for i, a in enumerate(poly):
            if a:
                for j, b in enumerate(block):
                    if b:
                        new[i + j] += a * b
        poly = tuple(new)
    assert len(poly) == ct.n + 1
    return poly
