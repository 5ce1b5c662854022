"""Splitting types of vector bundles on P^1 and their numerics.

A splitting type ``e = (e_1 <= ... <= e_r)`` stands for O(e_1) + ... + O(e_r).
Everything here is integer arithmetic on these vectors: cohomology of twists,
Hom/Ext dimensions, the dominance order (three independent deciders),
Harder-Narasimhan data, admissible index sets, the maximal type admitting a
given subsheaf, and the dimension counts attached to subsheaf strata.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import PreconditionError


class SplittingType(tuple):
    """Weakly increasing tuple of integers."""

    def __new__(cls, entries: Iterable[int] = ()):
        entries = tuple(int(x) for x in entries)
        for a, b in zip(entries, entries[1:]):
            if a > b:
                raise PreconditionError(
                    f"splitting type entries must be weakly increasing, got {entries}")
        return super().__new__(cls, entries)

    def __repr__(self):
        return f"SplittingType({tuple(self)!r})"

    @property
    def rank(self) -> int:
        return len(self)

    @property
    def degree(self) -> int:
        return sum(self)


def _st(e) -> SplittingType:
    return e if isinstance(e, SplittingType) else SplittingType(e)


def balanced_type(r: int, d: int) -> SplittingType:
    """The unique balanced splitting type of rank r and degree d."""
    if r < 0:
        raise PreconditionError(f"rank must be nonnegative, got {r}")
    if r == 0:
        if d != 0:
            raise PreconditionError("a rank 0 type has degree 0")
        return SplittingType()
    q, rem = divmod(d, r)
    return SplittingType([q] * (r - rem) + [q + 1] * rem)


# -- cohomology and Hom/Ext --------------------------------------------------

def h0(e, m: int = 0) -> int:
    return sum(max(x + m + 1, 0) for x in e)


def h1(e, m: int = 0) -> int:
    return sum(max(-x - m - 1, 0) for x in e)


def u(e) -> int:
    """h^1 End O(e)."""
    return sum(max(ej - ei - 1, 0) for ei in e for ej in e)


def hom(a, b) -> int:
    """dim Hom(O(a), O(b))."""
    return sum(max(bi - aj + 1, 0) for aj in a for bi in b)


def ext1(a, b) -> int:
    """dim Ext^1(O(a), O(b))."""
    return sum(max(aj - bi - 1, 0) for aj in a for bi in b)


def chi_hom(a_rank: int, a_deg: int, b_rank: int, b_deg: int) -> int:
    """Euler characteristic of Hom(A, B) from ranks and degrees alone."""
    return a_rank * b_deg - a_deg * b_rank + a_rank * b_rank


# -- predicates ----------------------------------------------------------------

def is_balanced(e) -> bool:
    return len(e) == 0 or e[-1] - e[0] <= 1


def is_perfectly_balanced(e) -> bool:
    return len(e) == 0 or e[-1] == e[0]


def is_tame(e) -> bool:
    e = _st(e)
    return any(is_balanced(e[:k]) and is_balanced(e[k:]) for k in range(1, len(e) + 1))


def admits_subsheaf(a, e) -> bool:
    """Whether O(e) has a subsheaf isomorphic to O(a)."""
    a, e = _st(a), _st(e)
    s, r = len(a), len(e)
    if s > r:
        raise PreconditionError(f"subsheaf rank {s} exceeds ambient rank {r}")
    return all(a[s - 1 - j] <= e[r - 1 - j] for j in range(s))


# -- dominance -----------------------------------------------------------------

def _same_class(e, f):
    if len(e) != len(f) or sum(e) != sum(f):
        raise PreconditionError(
            f"dominance compares types of equal rank and degree, got {tuple(e)} and {tuple(f)}")


def dominates(e, f) -> bool:
    """e >= f: every prefix sum of e is at least that of f."""
    e, f = _st(e), _st(f)
    _same_class(e, f)
    se = sf = 0
    for x, y in zip(e, f):
        se += x
        sf += y
        if se < sf:
            return False
    return True


def dominates_via_h1(e, f) -> bool:
    """e >= f iff h^1 O(e)(m) <= h^1 O(f)(m) for every twist m.

    Below the window every summand has h^1 linear in m with the same total
    slope, above it all h^1 vanish, so a finite scan suffices.
    """
    e, f = _st(e), _st(f)
    _same_class(e, f)
    if not e:
        return True
    both = e + f
    lo, hi = -max(both) - 1, -min(both) - 1
    return all(h1(e, m) <= h1(f, m) for m in range(lo, hi + 1))


def dominates_via_flag(e, f) -> bool:
    """Decide e >= f by building the subsheaf witness recursively.

    Write e = (Bal, a) with Bal the maximal balanced initial block. Then
    f <= e iff the explicit candidate a' (f's tail with the degree defect put
    in front) is a weakly increasing type that sits inside O(f) and a' <= a.
    """
    e, f = _st(e), _st(f)
    _same_class(e, f)
    return _flag_rec(tuple(e), tuple(f))


def _flag_rec(e, f) -> bool:
    if is_balanced(e):
        return True
    i = sum(1 for x in e if x <= e[0] + 1)
    a = e[i:]
    s, r = len(a), len(e)
    tail = f[i + 1:]
    a_prime = (sum(a) - sum(tail),) + tail
    if a_prime[0] > f[i]:
        return False
    if not all(a_prime[s - 1 - j] <= f[r - 1 - j] for j in range(s)):
        return False
    return _flag_rec(a, a_prime)


def flag_witness(e, f) -> List[SplittingType]:
    """Chain of subsheaf types a'_1 <- ... <- f realizing e >= f, innermost first.

    Raises PreconditionError when e does not dominate f.
    """
    e, f = _st(e), _st(f)
    _same_class(e, f)
    chain = [f]
    e, f = tuple(e), tuple(f)
    while not is_balanced(e):
        i = sum(1 for x in e if x <= e[0] + 1)
        a = e[i:]
        tail = f[i + 1:]
        a_prime = (sum(a) - sum(tail),) + tail
        if a_prime[0] > f[i]:
            raise PreconditionError(f"{e} does not dominate {f}")
        chain.append(SplittingType(a_prime))
        e, f = a, a_prime
    return chain[::-1]


def types_of(r: int, d: int, lo: int, hi: int) -> List[SplittingType]:
    """All rank-r degree-d splitting types with entries in [lo, hi]."""
    out = []

    def rec(prefix, start, left, slots):
        if slots == 0:
            if left == 0:
                out.append(SplittingType(prefix))
            return
        for x in range(start, hi + 1):
            # remaining slots are all >= x
            if x * slots > left:
                break
            if left - x > hi * (slots - 1):
                continue
            rec(prefix + (x,), x, left - x, slots - 1)

    rec((), lo, d, r)
    return out


# -- Harder-Narasimhan data -----------------------------------------------------

@dataclass(frozen=True)
class HNData:
    """Harder-Narasimhan flag E_1 < ... < E_{m+1} = O(e).

    quotient_ranks[i] and quotient_degrees[i] are rank and degree of
    O(e)/E_{i+1}, for the m proper flag members.
    """
    quotient_ranks: Tuple[int, ...]
    quotient_degrees: Tuple[int, ...]
    subbundle_types: Tuple[SplittingType, ...]

    @property
    def m(self) -> int:
        return len(self.subbundle_types) - 1


def hn_data(e) -> HNData:
    e = _st(e)
    values = sorted(set(e), reverse=True)
    members = []
    for v in values:
        members.append(SplittingType(x for x in e if x >= v))
    r, d = e.rank, e.degree
    proper = members[:-1]
    return HNData(
        quotient_ranks=tuple(r - t.rank for t in proper),
        quotient_degrees=tuple(d - t.degree for t in proper),
        subbundle_types=tuple(members),
    )


def _chosen_flag(e, indices) -> List[SplittingType]:
    hn = hn_data(e)
    return [hn.subbundle_types[i - 1] for i in indices] + [_st(e)]


def _quotient(big, small):
    rest = list(big)
    for x in small:
        rest.remove(x)
    return rest


def is_admissible(e, indices) -> bool:
    e = _st(e)
    m = hn_data(e).m
    idx = sorted(set(indices))
    if len(idx) != len(list(indices)) or any(not 1 <= i <= m for i in idx):
        return False
    prev: Sequence[int] = ()
    for member in _chosen_flag(e, idx):
        if not is_balanced(sorted(_quotient(member, prev))):
            return False
        prev = member
    return True


def admissible_sets(e) -> List[Tuple[int, ...]]:
    """All admissible I in [m], ordered by size then lexicographically.

    Every successive quotient of the chosen flag, the last one O(e)/E_{i_k}
    included, has to be balanced.
    """
    e = _st(e)
    m = hn_data(e).m
    out = []
    for size in range(m + 1):
        for idx in combinations(range(1, m + 1), size):
            if is_admissible(e, idx):
                out.append(idx)
    return out


# -- maximal type admitting a subsheaf ------------------------------------------

def eb(r: int, d: int, a) -> SplittingType:
    """The dominance-maximal rank-r degree-d type whose bundle contains O(a).

    It has the shape (Bal, a_+) with a_+ a tail of a; the tail length k is
    searched from len(a) down to 0.
    """
    a = _st(a)
    s = len(a)
    if r < 1:
        raise PreconditionError(f"rank must be positive, got {r}")
    if s > r:
        raise PreconditionError(f"subsheaf rank {s} exceeds ambient rank {r}")
    for k in range(s, -1, -1):
        tail = a[s - k:]
        rest = d - sum(tail)
        if k == r:
            if rest != 0:
                continue
            cand = SplittingType(tail)
        else:
            bal = balanced_type(r - k, rest)
            if k > 0 and bal[-1] > tail[0]:
                continue
            cand = SplittingType(tuple(bal) + tuple(tail))
        if admits_subsheaf(a, cand):
            return cand
    raise PreconditionError(f"no rank {r} degree {d} type admits an O{tuple(a)} subsheaf")


def gap(a, e) -> int:
    """u(e) - ext^1(O(a), O(e)); nonnegative whenever O(a) sits inside O(e)."""
    a, e = _st(a), _st(e)
    if not admits_subsheaf(a, e):
        raise PreconditionError(f"O{tuple(e)} has no O{tuple(a)} subsheaf")
    return u(e) - ext1(a, e)


# -- dimension counts -----------------------------------------------------------

def check_chain(chain) -> List[SplittingType]:
    chain = [_st(t) for t in chain]
    if not chain:
        raise PreconditionError("a flag chain needs at least one member")
    for small, big in zip(chain, chain[1:]):
        if len(small) >= len(big):
            raise PreconditionError("flag chain ranks must strictly increase")
        if not admits_subsheaf(small, big):
            raise PreconditionError(f"O{tuple(big)} has no O{tuple(small)} subsheaf")
    return chain


def flag_stratum_dim(chain) -> int:
    """Dimension of the stratum of flags whose members split as the chain."""
    chain = check_chain(chain)
    return sum(hom(s, b) - hom(s, s) for s, b in zip(chain, chain[1:]))


def stratum_codim(a, e, c: int, rkF: Optional[int] = None, rkG: Optional[int] = None) -> int:
    """Codimension of the (a, e) subsheaf stratum inside the relative Quot scheme
    of F(c), where F, G have ranks r(c+1)-d and rc-d by default."""
    a, e = _st(a), _st(e)
    if not admits_subsheaf(a, e):
        raise PreconditionError(f"O{tuple(e)} has no O{tuple(a)} subsheaf")
    if a and c < a[-1]:
        raise PreconditionError(f"twist c={c} must be at least the top subsheaf entry {a[-1]}")
    r, d = e.rank, e.degree
    if rkF is None:
        rkF = r * (c + 1) - d
    if rkG is None:
        rkG = r * c - d
    if rkF < 1 or rkG < 0:
        raise PreconditionError(f"bad ranks rkF={rkF}, rkG={rkG}")
    return u(a) + rkG * sum(c + 2 - x for x in a) + u(e) - ext1(a, e)


def tangent_check(e, indices, e_prime) -> Tuple[int, int]:
    """Both sides of the tangent dimension count for the resolution indexed by I.

    lhs sums chi Hom(E_i, E_{i+1}/E_i) over the chosen flag and adds u(e');
    rhs is u(e') - u(e).
    """
    e, e_prime = _st(e), _st(e_prime)
    if not is_admissible(e, indices):
        raise PreconditionError(f"{tuple(indices)} is not admissible for {tuple(e)}")
    _same_class(e, e_prime)
    if not dominates(e, e_prime):
        raise PreconditionError(f"{tuple(e_prime)} is not dominated by {tuple(e)}")
    flag = _chosen_flag(e, sorted(indices))
    total = u(e_prime)
    for small, big in zip(flag, flag[1:]):
        q_rank = big.rank - small.rank
        q_deg = big.degree - small.degree
        total += chi_hom(small.rank, small.degree, q_rank, q_deg)
    return total, u(e_prime) - u(e)


def gp_type(g: int, d: int, r: int, k: int) -> SplittingType:
    """Splitting type (-2)^(g-d+r), (-1)^(k-g+d-2r-1), 0^(r+1) of rank k."""
    exps = (g - d + r, k - g + d - 2 * r - 1, r + 1)
    if any(x < 0 for x in exps):
        raise PreconditionError(f"negative block length in {exps}")
    return SplittingType([-2] * exps[0] + [-1] * exps[1] + [0] * exps[2])
