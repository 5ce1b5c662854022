"""Partition arithmetic, Littlewood-Richardson coefficients and the Schur
functor decompositions built from them (tensor products, S_lambda(V + W),
Cauchy's formula for exterior powers, Schur complex terms).

Multisets are returned as dicts ``{key: multiplicity}`` whose insertion order
is the lexicographic order of the keys, so iteration is deterministic.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterable, Iterator, Optional

from .errors import PreconditionError


class Partition(tuple):
    """Weakly decreasing tuple of positive integers (trailing zeros dropped)."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise PreconditionError(f"partition parts must be weakly decreasing, got {tuple(parts)}")
        if parts and parts[-1] < 0:
            raise PreconditionError(f"partition parts must be nonnegative, got {tuple(parts)}")
        return super().__new__(cls, parts)

    def __repr__(self):
        return f"Partition({tuple(self)!r})"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """1-indexed part, zero past the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def padded(self, n: int) -> tuple:
        if len(self) > n:
            raise PreconditionError(f"{tuple(self)} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def contains(self, other) -> bool:
        """Young diagram containment other <= self."""
        other = Partition(other)
        return len(other) <= len(self) and all(o <= s for o, s in zip(other, self))


EMPTY = Partition()


def _as_partition(p) -> Partition:
    return p if isinstance(p, Partition) else Partition(p)


def conjugate(lam) -> Partition:
    lam = _as_partition(lam)
    if not lam:
        return EMPTY
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def partitions_of(n: int, max_length: Optional[int] = None,
                  max_part: Optional[int] = None) -> Iterator[Partition]:
    """All partitions of n, optionally capped in length and largest part,
    in reverse lexicographic order."""
    if n < 0:
        return
    max_part = n if max_part is None else max_part
    max_length = n if max_length is None else max_length

    def rec(rest, cap, slots):
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(rest, cap), 0, -1):
            if first * slots < rest:
                break
            for tail in rec(rest - first, first, slots - 1):
                yield (first,) + tail

    for parts in rec(n, max_part, max_length):
        yield Partition(parts)


def partitions_up_to(n: int, max_length: Optional[int] = None,
                     max_part: Optional[int] = None) -> Iterator[Partition]:
    for k in range(n + 1):
        yield from partitions_of(k, max_length, max_part)


def sub_partitions(lam) -> Iterator[Partition]:
    """All partitions contained in lam (as diagrams)."""
    lam = _as_partition(lam)

    def rec(i, cap):
        if i == len(lam):
            yield ()
            return
        yield ()
        for x in range(min(cap, lam[i]), 0, -1):
            for tail in rec(i + 1, x):
                yield (x,) + tail

    for parts in rec(0, lam[0] if lam else 0):
        yield Partition(parts)


def dominates(lam, mu) -> bool:
    """Dominance order on partitions of possibly different sizes: every partial
    sum of lam is at least the matching partial sum of mu."""
    lam, mu = _as_partition(lam), _as_partition(mu)
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam.part(i + 1)
        b += mu.part(i + 1)
        if a < b:
            return False
    return True


def _sorted_multiset(counter) -> dict:
    return {key: counter[key] for key in sorted(counter) if counter[key]}


# ---------------------------------------------------------------------------
# Littlewood-Richardson tableaux


@lru_cache(maxsize=None)
def _skew_lr_contents(outer: Partition, inner: Partition,
                      content: Optional[Partition]) -> tuple:
    """Enumerate LR tableaux of shape outer/inner by backtracking.

    Cells are filled in reverse reading order (rows top to bottom, each row
    right to left) so the lattice condition can be checked on the fly.
    Returns a tuple of (content, count) pairs.
    """
    cells = [(r, c) for r in range(len(outer))
             for c in range(outer[r] - 1, inner.part(r + 1) - 1, -1)]
    filling = {}
    counts = [0] * (len(outer) + 2)
    found = Counter()
    limit = list(content) if content is not None else None

    def rec(idx, used):
        if idx == len(cells):
            key = Partition(counts[1:used + 1])
            if limit is None or tuple(key) == tuple(limit):
                found[key] += 1
            return
        r, c = cells[idx]
        lo = 1
        if r > 0 and c >= inner.part(r):
            lo = filling[(r - 1, c)] + 1
        hi = used + 1
        if (r, c + 1) in filling:
            hi = min(hi, filling[(r, c + 1)])
        for v in range(lo, hi + 1):
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            if limit is not None and (v > len(limit) or counts[v] + 1 > limit[v - 1]):
                continue
            counts[v] += 1
            filling[(r, c)] = v
            rec(idx + 1, max(used, v))
            del filling[(r, c)]
            counts[v] -= 1

    rec(0, 0)
    return tuple(sorted(found.items()))


def lr_coefficient(lam, mu, nu) -> int:
    """c^nu_{lam,mu}: the number of LR skew tableaux of shape nu/lam and content mu."""
    lam, mu, nu = _as_partition(lam), _as_partition(mu), _as_partition(nu)
    if nu.size != lam.size + mu.size or not nu.contains(lam) or not nu.contains(mu):
        return 0
    return dict(_skew_lr_contents(nu, lam, mu)).get(mu, 0)


def skew_decomposition(outer, inner, max_length: Optional[int] = None) -> dict:
    """s_{outer/inner} = sum_mu c^outer_{inner,mu} s_mu, as {mu: coefficient}."""
    outer, inner = _as_partition(outer), _as_partition(inner)
    if not outer.contains(inner):
        return {}
    res = Counter()
    for mu, n in _skew_lr_contents(outer, inner, None):
        if max_length is None or len(mu) <= max_length:
            res[mu] += n
    return _sorted_multiset(res)


@lru_cache(maxsize=None)
def _lr_product(lam: Partition, mu: Partition, max_length: Optional[int]) -> tuple:
    # Add mu_1 boxes labelled 1, then mu_2 labelled 2, ... as horizontal
    # strips. Reading each row right to left, label i precedes label i-1 in
    # the same row, so the lattice condition reduces to:
    # (#i in rows <= r) <= (#(i-1) in rows < r) for every row r.
    cap = max_length if max_length is not None else len(lam) + len(mu)
    results = Counter()

    def strips(shape, m, prev_counts):
        """Yield (new_shape, row_counts) for horizontal strips of size m."""
        rows = min(len(shape) + 1, cap)
        base = list(shape) + [0] * (rows - len(shape))

        def rec(r, left, cum, cum_prev, acc):
            if left == 0:
                yield acc + [0] * (rows - r)
                return
            if r == rows:
                return
            room = left if r == 0 else min(left, base[r - 1] - base[r])
            if prev_counts is not None:
                room = min(room, cum_prev - cum)
            for x in range(room, -1, -1):
                yield from rec(r + 1, left - x, cum + x,
                               cum_prev + (prev_counts[r] if prev_counts is not None and r < len(prev_counts) else 0),
                               acc + [x])

        yield from rec(0, m, 0, 0, [])

    def grow(shape, label, prev_counts):
        if label > len(mu):
            results[Partition(shape)] += 1
            return
        for added in strips(shape, mu[label - 1], prev_counts):
            new = [s + a for s, a in zip(list(shape) + [0] * (len(added) - len(shape)), added)]
            grow(tuple(new), label + 1, added)

    if len(lam) > cap:
        return ()
    grow(tuple(lam), 1, None)
    return tuple(sorted(results.items()))


def tensor_schur(lam, mu, max_length: Optional[int] = None) -> dict:
    """S_lam (x) S_mu = sum_nu c^nu_{lam,mu} S_nu, truncated to length <= max_length."""
    lam, mu = _as_partition(lam), _as_partition(mu)
    return dict(_lr_product(lam, mu, max_length))


@lru_cache(maxsize=None)
def _double(lam: Partition, rank: Optional[int]) -> tuple:
    res = Counter()
    for g1 in sub_partitions(lam):
        if rank is not None and len(g1) > rank:
            continue
        for g2, n in _skew_lr_contents(lam, g1, None):
            if rank is None or len(g2) <= rank:
                res[(g1, g2)] += n
    return tuple(sorted(res.items()))


def schur_of_double(lam, rank: Optional[int] = None) -> dict:
    """S_lam(V + W) = sum c^lam_{g1,g2} S_g1 V (x) S_g2 W, as {(g1, g2): c},
    dropping factors longer than rank."""
    return dict(_double(_as_partition(lam), rank))


def cauchy_wedge(n: int, rank_e: int, rank_f: int) -> list:
    """Lambda^n(E (x) F) = sum_{mu |- n} S_{mu^t} E (x) S_mu F; returns the
    surviving pairs (mu^t, mu) for rk E = rank_e, rk F = rank_f."""
    pairs = [(conjugate(mu), mu)
             for mu in partitions_of(n, max_length=rank_f, max_part=rank_e)]
    return sorted(pairs)


def schur_complex_terms(lam, t: int, source_rank: Optional[int] = None,
                        target_rank: Optional[int] = None) -> dict:
    """Degree-t term of the Schur complex of S_lam on a map E' -> E^{+2}:
    {(alpha^t, beta): c^lam_{alpha,beta}} over alpha |- t, beta |- |lam| - t.

    The first partition indexes the source bundle E', the second the doubled
    target. Optional ranks drop factors that vanish on bundles of that rank.
    """
    lam = _as_partition(lam)
    res = {}
    if t < 0 or t > lam.size:
        return res
    for (alpha, beta), c in schur_of_double(lam).items():
        if alpha.size != t:
            continue
        at = conjugate(alpha)
        if source_rank is not None and len(at) > source_rank:
            continue
        if target_rank is not None and len(beta) > target_rank:
            continue
        res[(at, beta)] = res.get((at, beta), 0) + c
    return _sorted_multiset(res)
