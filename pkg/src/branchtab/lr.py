"""Littlewood-Richardson coefficients by direct enumeration of LR tableaux.

Correctness over speed: a coefficient is literally the number of lattice-word
skew tableaux of the right shape and content, produced by the pruned
backtracking enumerator.  Products of many Schur functions are folded one
factor at a time.
"""

from functools import lru_cache

from .partitions import (
    as_partition,
    contains,
    is_strip,
    partitions_containing,
    skew_size,
)
from .tableaux import enumerate_ssyt, is_lr_tableau


def _lattice_row_cap(rows, r, c, v):
    # every lattice filling has entries <= r+1 in (0-indexed) row r
    return v <= r + 1


def lr_tableaux(lam, mu, nu):
    """Yield the LR tableaux of shape lam/mu and content nu."""
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    if not contains(lam, mu) or skew_size(lam, mu) != sum(nu):
        return
    for tab in enumerate_ssyt(lam, mu, len(nu), max_content=nu,
                              cell_filter=_lattice_row_cap):
        if is_lr_tableau(tab):
            yield tab


@lru_cache(maxsize=None)
def _lr_count(lam, mu, nu) -> int:
    return sum(1 for _ in lr_tableaux(lam, mu, nu))


def lr_coefficient(lam, mu, nu) -> int:
    """Multiplicity of lam in the product of mu and nu; symmetric in mu, nu."""
    return _lr_count(as_partition(lam), as_partition(mu), as_partition(nu))


def pieri_coefficient(lam, mu, m: int) -> int:
    """Multiplicity of lam in mu times a single row of m boxes (0 or 1)."""
    lam, mu = as_partition(lam), as_partition(mu)
    return 1 if is_strip(lam, mu) and skew_size(lam, mu) == m else 0


def schur_multiply(expansion: dict, mu, max_length=None) -> dict:
    """Multiply a Schur expansion by one more Schur function.

    Terms whose partition exceeds max_length rows are dropped when the bound
    is supplied.  Zero coefficients are never stored.
    """
    mu = as_partition(mu)
    out = {}
    for kappa, coeff in expansion.items():
        kappa = as_partition(kappa)
        for gamma in partitions_containing(kappa, sum(kappa) + sum(mu),
                                           max_length=max_length):
            c = lr_coefficient(gamma, kappa, mu)
            if c:
                out[gamma] = out.get(gamma, 0) + coeff * c
    return out


def generalized_lr(lam, mus) -> int:
    """Coefficient of lam in the product of the Schur functions in mus.

    Intermediate terms not contained in lam can never reach it (multiplying
    only adds boxes), so the expansion is pruned to subshapes of lam.
    """
    lam = as_partition(lam)
    if sum(lam) != sum(sum(as_partition(mu)) for mu in mus):
        return 0
    current = {(): 1}
    for mu in mus:
        mu = as_partition(mu)
        nxt = {}
        for kappa, coeff in current.items():
            for gamma in partitions_containing(kappa, sum(kappa) + sum(mu),
                                               row_caps=lam):
                c = lr_coefficient(gamma, kappa, mu)
                if c:
                    nxt[gamma] = nxt.get(gamma, 0) + coeff * c
        if not nxt:
            return 0
        current = nxt
    return current.get(lam, 0)
