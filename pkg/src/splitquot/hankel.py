"""Rank 2 splitting loci over Ext^1(O(d), O) as Hankel determinantal loci.

A point (a_0, ..., a_{d-2}) of Ext^1(O(d), O) gives an extension E of rank 2
and degree d. For each k the map A^{d-k} -> A^k computing Rpi_* E(-k-1) is the
Hankel matrix B_{k,d-k} with entries a_{i+j-2}, so ranks of Hankel matrices
read off the splitting type, and maximal minors cut out the closed loci.
All arithmetic is exact.
"""
from __future__ import annotations

import os
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from math import lcm
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import PreconditionError
from .splitting import SplittingType

DEFAULT_SEED = 1729
SEED_ENV = "SPLITQUOT_SEED"


def seed_from_env(default: int = DEFAULT_SEED) -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise PreconditionError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


# -- sparse integer polynomials ---------------------------------------------------

Monomial = Tuple[Tuple[int, int], ...]  # ((var, power), ...) with var increasing


def _mono_mul(x: Monomial, y: Monomial) -> Monomial:
    powers: Dict[int, int] = dict(x)
    for v, p in y:
        powers[v] = powers.get(v, 0) + p
    return tuple(sorted(powers.items()))


class IntegerPolynomial:
    """Polynomial over Z in a_0, a_1, ... stored as {monomial: coefficient}.

    Text form: terms ``coeff * a_i^p * a_j`` joined by `` + `` in increasing
    monomial order; exponent 1 is left implicit and the zero polynomial is "0".
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Monomial, int]] = None):
        clean = {}
        for mono, c in (terms or {}).items():
            mono = tuple(sorted((int(v), int(p)) for v, p in mono if p))
            c = int(c)
            if c:
                clean[mono] = clean.get(mono, 0) + c
        self.terms = {m: c for m, c in sorted(clean.items()) if c}

    @classmethod
    def var(cls, i: int) -> "IntegerPolynomial":
        return cls({((i, 1),): 1})

    @classmethod
    def const(cls, c: int) -> "IntegerPolynomial":
        return cls({(): c})

    def __add__(self, other):
        t = dict(self.terms)
        for m, c in other.terms.items():
            t[m] = t.get(m, 0) + c
        return IntegerPolynomial(t)

    def __neg__(self):
        return IntegerPolynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        t: Dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                t[m] = t.get(m, 0) + c1 * c2
        return IntegerPolynomial(t)

    def __eq__(self, other):
        return isinstance(other, IntegerPolynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for mono, c in self.terms.items():
            val = Fraction(c)
            for v, p in mono:
                val *= Fraction(point[v]) ** p
            total += val
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.terms.items():
            factors = [str(c)] + [f"a_{v}" if p == 1 else f"a_{v}^{p}" for v, p in mono]
            parts.append(" * ".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"IntegerPolynomial({str(self)!r})"

    _FACTOR = re.compile(r"^a_(\d+)(?:\^(\d+))?$")

    @classmethod
    def parse(cls, text: str) -> "IntegerPolynomial":
        text = text.strip()
        if text == "0":
            return cls()
        terms: Dict[Monomial, int] = {}
        for raw in text.split(" + "):
            pieces = [p.strip() for p in raw.split("*")]
            try:
                coeff = int(pieces[0])
            except ValueError:
                raise PreconditionError(f"term {raw!r} must start with an integer coefficient") from None
            mono: Monomial = ()
            for piece in pieces[1:]:
                m = cls._FACTOR.match(piece)
                if not m:
                    raise PreconditionError(f"bad factor {piece!r} in term {raw!r}")
                mono = _mono_mul(mono, ((int(m.group(1)), int(m.group(2) or 1)),))
            terms[mono] = terms.get(mono, 0) + coeff
        return cls(terms)


def determinant(rows: Sequence[Sequence[IntegerPolynomial]]) -> IntegerPolynomial:
    """Leibniz expansion; fine for the small minors used here."""
    n = len(rows)
    total = IntegerPolynomial()
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = IntegerPolynomial.const(sign)
        for i in range(n):
            term = term * rows[i][perm[i]]
        total = total + term
    return total


# -- exact rank ---------------------------------------------------------------------

def rational_rank(matrix: Sequence[Sequence]) -> int:
    """Rank of a rational matrix by fraction-free (Bareiss) elimination."""
    rows = []
    for row in matrix:
        fr = [Fraction(x) for x in row]
        den = lcm(*(x.denominator for x in fr)) if fr else 1
        rows.append([int(x * den) for x in fr])
    if not rows or not rows[0]:
        return 0
    m, n = len(rows), len(rows[0])
    rank = 0
    prev = 1
    for col in range(n):
        if rank == m:
            break
        pivot = next((r for r in range(rank, m) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank][col]
        for r in range(rank + 1, m):
            for c in range(col + 1, n):
                rows[r][c] = (rows[r][c] * p - rows[r][col] * rows[rank][c]) // prev
            rows[r][col] = 0
        prev = p
        rank += 1
    return rank


# -- Hankel matrices and points ---------------------------------------------------------

@dataclass(frozen=True)
class HankelMatrix:
    """k x (d-k) matrix whose (i, j) entry (1-indexed) is a_{i+j-2}."""
    k: int
    d: int

    @property
    def cols(self) -> int:
        return self.d - self.k

    def index(self, i: int, j: int) -> int:
        return i + j - 2

    def symbolic(self) -> List[List[IntegerPolynomial]]:
        return [[IntegerPolynomial.var(self.index(i, j)) for j in range(1, self.cols + 1)]
                for i in range(1, self.k + 1)]

    def labels(self) -> List[List[str]]:
        return [[f"a_{self.index(i, j)}" for j in range(1, self.cols + 1)]
                for i in range(1, self.k + 1)]

    def at(self, coords: Sequence) -> List[List[Fraction]]:
        return [[Fraction(coords[self.index(i, j)]) for j in range(1, self.cols + 1)]
                for i in range(1, self.k + 1)]


def hankel(k: int, d: int) -> HankelMatrix:
    if not 1 <= k <= d - 1:
        raise PreconditionError(f"need 1 <= k <= d-1, got k={k}, d={d}")
    return HankelMatrix(k, d)


@dataclass(frozen=True)
class HankelPoint:
    d: int
    coords: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.d < 2:
            raise PreconditionError(f"extension classes need d >= 2, got {self.d}")
        object.__setattr__(self, "coords", tuple(Fraction(x) for x in self.coords))
        if len(self.coords) != self.d - 1:
            raise PreconditionError(
                f"a point of Ext^1(O({self.d}), O) has {self.d - 1} coordinates, got {len(self.coords)}")


def _point(pt, d=None) -> HankelPoint:
    if isinstance(pt, HankelPoint):
        return pt
    coords = tuple(pt)
    return HankelPoint(len(coords) + 1 if d is None else d, coords)


def hankel_rank(pt, k: int) -> int:
    pt = _point(pt)
    if k == 0 or k == pt.d:
        return 0
    return rational_rank(hankel(k, pt.d).at(pt.coords))


def splitting_from_point(pt) -> SplittingType:
    """(e1, d - e1) with e1 the largest k <= d/2 where B_{k,d-k} has full rank k."""
    pt = _point(pt)
    d = pt.d
    e1 = 0
    for k in range(1, d // 2 + 1):
        if hankel_rank(pt, k) == k:
            e1 = k
    return SplittingType((e1, d - e1))


def fitting_generators(d: int, e: int) -> List[IntegerPolynomial]:
    """Maximal minors of B_{d-e+1, e-1}, ordered by column subset.

    They vanish at a point exactly when its splitting type is at most (d-e, e).
    """
    if not (2 * e >= d + 2 and e < d):
        raise PreconditionError(f"need d/2 + 1 <= e < d, got d={d}, e={e}")
    rows = d - e + 1
    mat = hankel(rows, d).symbolic()
    out = []
    for cols in combinations(range(e - 1), rows):
        out.append(determinant([[row[c] for c in cols] for row in mat]))
    return out


def numeric_minors(pt, e: int) -> List[Fraction]:
    """The same minors as fitting_generators, evaluated numerically."""
    pt = _point(pt)
    d = pt.d
    rows = d - e + 1
    mat = hankel(rows, d).at(pt.coords)
    out = []
    for cols in combinations(range(e - 1), rows):
        sub = [[row[c] for c in cols] for row in mat]
        out.append(_fraction_det(sub))
    return out


def _fraction_det(m: List[List[Fraction]]) -> Fraction:
    m = [list(r) for r in m]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            for cc in range(c, n):
                m[r][cc] -= f * m[c][cc]
    return det


def secant_point(d: int, s: int, nodes: Sequence, weights: Sequence) -> HankelPoint:
    """sum_l w_l (1, t_l, ..., t_l^{d-2}): a point on the s-secant variety of
    the rational normal curve."""
    if d < 2:
        raise PreconditionError(f"need d >= 2, got {d}")
    if not 0 <= s <= d // 2:
        raise PreconditionError(f"need 0 <= s <= d/2, got s={s}")
    nodes = [Fraction(t) for t in nodes]
    weights = [Fraction(w) for w in weights]
    if len(nodes) != s or len(weights) != s:
        raise PreconditionError(f"need exactly {s} nodes and weights")
    if len(set(nodes)) != len(nodes):
        raise PreconditionError("secant nodes must be distinct")
    if any(w == 0 for w in weights):
        raise PreconditionError("secant weights must be nonzero")
    coords = [sum((w * t ** i for t, w in zip(nodes, weights)), Fraction(0)) for i in range(d - 1)]
    return HankelPoint(d, tuple(coords))


def _random_fraction(rng: random.Random, span: int = 9) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def generic_secant_point(d: int, s: int, rng: random.Random, attempts: int = 50) -> HankelPoint:
    """Random point of the s-secant stratum whose splitting type is (s, d-s)."""
    for _ in range(attempts):
        nodes = set()
        while len(nodes) < s:
            nodes.add(_random_fraction(rng))
        weights = []
        while len(weights) < s:
            w = _random_fraction(rng)
            if w:
                weights.append(w)
        pt = secant_point(d, s, sorted(nodes), weights)
        if splitting_from_point(pt) == (s, d - s):
            return pt
    raise RuntimeError(f"no generic point found on the {s}-secant stratum for d={d}")


def sample_points(d: int, per_stratum: int, seed: Optional[int] = None) -> List[HankelPoint]:
    """Seeded generic points on every secant stratum s = 0..d/2."""
    rng = random.Random(seed_from_env() if seed is None else seed)
    pts = []
    for s in range(d // 2 + 1):
        for _ in range(per_stratum if s else 1):
            pts.append(generic_secant_point(d, s, rng))
    return pts
