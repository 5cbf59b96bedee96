"""Irreducible character values of the symmetric group, Kronecker
coefficients, and the Schur <-> power-sum transition data.

Character values come from the Murnaghan-Nakayama border-strip recursion,
memoized on (shape, class); everything downstream (basis changes, Hall
pairings, Kronecker coefficients) reads from the same cache.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .partitions import (
    MultiPartition,
    Partition,
    enumerate_partitions,
    size,
    z_lambda,
)


@lru_cache(maxsize=None)
def character_value(lam: Partition, rho: Partition) -> int:
    """chi^lam at a permutation of cycle type rho."""
    if size(lam) != size(rho):
        raise ValueError(f"shape {lam} and class {rho} have different sizes")
    if not lam:
        return 1
    strip = rho[0]
    rest = rho[1:]
    # beta-numbers of lam; removing a border strip of length `strip` moves
    # one beta-number down by `strip` into an unoccupied slot
    ell = len(lam)
    beta = [lam[i] + (ell - 1 - i) for i in range(ell)]
    occupied = set(beta)
    total = 0
    for pos, b in enumerate(beta):
        nb = b - strip
        if nb < 0 or nb in occupied:
            continue
        sign = -1 if sum(1 for c in beta if nb < c < b) % 2 else 1
        new_beta = sorted((x for x in beta if x != b), reverse=True)
        new_beta.append(nb)
        new_beta.sort(reverse=True)
        new_lam = tuple(x - (ell - 1 - i) for i, x in enumerate(new_beta))
        while new_lam and new_lam[-1] == 0:
            new_lam = new_lam[:-1]
        total += sign * character_value(new_lam, rest)
    return total


class CharTable:
    """Full character table of S_n, materialized on first use."""

    def __init__(self, n: int):
        self.n = n
        self.shapes = enumerate_partitions(n)
        self.values = {
            (lam, rho): character_value(lam, rho)
            for lam in self.shapes
            for rho in self.shapes
        }

    def chi(self, lam: Partition, rho: Partition) -> int:
        return self.values[(lam, rho)]


@lru_cache(maxsize=None)
def char_table(n: int) -> CharTable:
    return CharTable(n)


def kronecker(mu: MultiPartition) -> int:
    """Multiplicity of the trivial character in chi^{mu^1} x ... x chi^{mu^k}."""
    if not mu:
        raise ValueError("empty multipartition")
    n = size(mu[0])
    if any(size(m) != n for m in mu):
        raise ValueError(f"components of {mu} have different sizes")
    total = Fraction(0)
    for rho in enumerate_partitions(n):
        prod = 1
        for m in mu:
            prod *= character_value(m, rho)
            if prod == 0:
                break
        if prod:
            total += Fraction(prod, z_lambda(rho))
    if total.denominator != 1 or total < 0:
        raise AssertionError(f"Kronecker coefficient for {mu} came out {total}")
    return int(total)


def schur_to_powersum(lam: Partition) -> dict[Partition, Fraction]:
    """Coefficients of s_lam = sum_rho z_rho^{-1} chi^lam_rho p_rho."""
    out = {}
    for rho in enumerate_partitions(size(lam)):
        chi = character_value(lam, rho)
        if chi:
            out[rho] = Fraction(chi, z_lambda(rho))
    return out


def powersum_to_schur(rho: Partition) -> dict[Partition, int]:
    """Coefficients of p_rho = sum_lam chi^lam_rho s_lam."""
    out = {}
    for lam in enumerate_partitions(size(rho)):
        chi = character_value(lam, rho)
        if chi:
            out[lam] = chi
    return out
