"""Borel-Weil-Bott on Gr(k, n) for the bundles S_mu A (x) S_alpha B^vee.

A is the rank-k tautological subbundle and B the rank n-k quotient. Two
routes to the cohomological degree are provided: the inversion count of the
shifted weight (bwb_mixed) and the closed form through the crossing indices
i_l (bwb_indices). For S_nu B^vee alone there is also the staircase criterion
with its witness j (bwb_quot_dual).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import PreconditionError
from .partitions import Partition


@dataclass(frozen=True)
class BWBOutcome:
    """``degree`` is None when all cohomology vanishes."""
    degree: Optional[int]

    @property
    def vanishes(self) -> bool:
        return self.degree is None

    def __str__(self):
        return "vanishes" if self.degree is None else f"H^{self.degree}"


VANISHES = BWBOutcome(None)


@dataclass(frozen=True)
class BWBIndices:
    """Crossing indices of the first factor; ``j`` is the staircase witness
    of the second factor when one is attached (see quotvanish)."""
    i: Tuple[int, ...]
    j: Optional[int]
    d1: int


def _grass(k, n):
    if k < 1 or n <= k:
        raise PreconditionError(f"need 1 <= k < n for Gr(k, n), got k={k}, n={n}")


def _padded(p, length, what):
    p = Partition(p)
    if len(p) > length:
        raise PreconditionError(f"{what}={tuple(p)} has more than {length} parts")
    return tuple(p) + (0,) * (length - len(p))


def fg_values(k: int, n: int, mu, alpha) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """f_1..f_k and g_1..g_{n-k}: f_i = n-k+i-1-mu_i, g_j = n-k-j+alpha_j."""
    _grass(k, n)
    mu = _padded(mu, k, "mu")
    alpha = _padded(alpha, n - k, "alpha")
    f = tuple(n - k + i - 1 - mu[i - 1] for i in range(1, k + 1))
    g = tuple(n - k - j + alpha[j - 1] for j in range(1, n - k + 1))
    return f, g


def _inversions(seq) -> int:
    # pairs out of strictly descending order
    return sum(1 for p in range(len(seq)) for q in range(p + 1, len(seq)) if seq[p] < seq[q])


def bwb_mixed(k: int, n: int, mu, alpha) -> BWBOutcome:
    f, g = fg_values(k, n, mu, alpha)
    seq = f[::-1] + g
    if len(set(seq)) < len(seq):
        return VANISHES
    return BWBOutcome(_inversions(seq))


def quot_dual_witness(k: int, n: int, nu) -> Optional[int]:
    """The j with nu_j >= k+j and nu_{j+1} <= j, if any."""
    _grass(k, n)
    nu = _padded(nu, n - k, "nu") + (0,)
    hits = [j for j in range(1, n - k + 1) if nu[j - 1] >= k + j and nu[j] <= j]
    if len(hits) > 1:
        raise AssertionError(f"staircase witness not unique for {nu}: {hits}")
    return hits[0] if hits else None


def bwb_quot_dual(k: int, n: int, nu) -> Tuple[BWBOutcome, Optional[int]]:
    """Cohomology of S_nu B^vee on Gr(k, n) with the staircase witness j."""
    _grass(k, n)
    nu = Partition(nu)
    _padded(nu, n - k, "nu")
    if not nu:
        return BWBOutcome(0), None
    j = quot_dual_witness(k, n, nu)
    if j is None:
        return VANISHES, None
    return BWBOutcome(j * k), j


def bwb_indices(k: int, n: int, mu, alpha) -> BWBIndices:
    """Crossing indices i_1 <= ... <= i_{n-k} and the closed-form degree D1.

    i_l is the number of f's below g_{n-k-l+1} (f is increasing), and
    D1 = sum_l (i_l - i_{l-1})(n-k-l+1).
    """
    if bwb_mixed(k, n, mu, alpha).vanishes:
        raise PreconditionError(
            f"S_{tuple(mu)}A (x) S_{tuple(alpha)}B^vee has no cohomology on Gr({k},{n})")
    f, g = fg_values(k, n, mu, alpha)
    q = n - k
    idx = tuple(sum(1 for x in f if x < g[q - l]) for l in range(1, q + 1))
    d1 = 0
    prev = 0
    for l, il in enumerate(idx, start=1):
        d1 += (il - prev) * (q - l + 1)
        prev = il
    return BWBIndices(i=idx, j=None, d1=d1)
