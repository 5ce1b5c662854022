"""Cohomology bookkeeping for tautological bundles on Quot^{r,d}(O^N) over P^1.

The Quot scheme sits inside Gr(k1, n1) x Gr(k2, n2) via sections of two
consecutive twists. Koszul resolving the image produces the bundles

    V_{mu,alpha,beta} = (S_mu A1 (x) S_alpha B1^vee) [x] (S_{mu^t}(B2^vee + B2^vee) (x) S_beta B2^vee)

whose cohomology is computed here factor by factor (Borel-Weil-Bott and
Kunneth), and swept exhaustively to test the bound deg <= |mu|+|alpha|+|beta|.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .bwb import BWBIndices, bwb_indices, bwb_mixed, bwb_quot_dual
from .errors import PreconditionError
from .partitions import (Partition, conjugate, partitions_of,
                         schur_complex_terms, schur_of_double, tensor_schur)


@dataclass(frozen=True)
class QuotEmbedding:
    r: int
    d: int
    N: int
    m: int

    def __post_init__(self):
        r, d, N, m = self.r, self.d, self.N, self.m
        if d <= 0:
            raise PreconditionError(f"quotient degree d must be positive, got {d}")
        if not N >= r >= 0:
            raise PreconditionError(f"need N >= r >= 0, got N={N}, r={r}")
        if m < d:
            raise PreconditionError(f"the two-Grassmannian map is only an embedding for m >= d, got m={m}, d={d}")
        if not 1 <= self.k1 < self.n1:
            raise PreconditionError(f"first Grassmannian Gr({self.k1},{self.n1}) is degenerate")
        if not 1 <= self.k2 < self.n2:
            raise PreconditionError(f"second Grassmannian Gr({self.k2},{self.n2}) is degenerate")

    @property
    def k1(self) -> int:
        return (self.N - self.r) * self.m - self.d

    @property
    def n1(self) -> int:
        return self.N * self.m

    @property
    def k2(self) -> int:
        return (self.N - self.r) * (self.m + 1) - self.d

    @property
    def n2(self) -> int:
        return self.N * (self.m + 1)

    @property
    def q1(self) -> int:
        """rank of B1 = n1 - k1"""
        return self.n1 - self.k1

    @property
    def q2(self) -> int:
        return self.n2 - self.k2

    @property
    def dim(self) -> int:
        return self.k1 * self.q1 + self.k2 * self.q2

    def describe(self) -> str:
        return f"Gr({self.k1},{self.n1}) x Gr({self.k2},{self.n2})"


def stromme_embedding(r: int, d: int, N: int, m: int) -> QuotEmbedding:
    return QuotEmbedding(r, d, N, m)


def minimal_twist(r: int, d: int, D: int) -> int:
    """Smallest m >= d with D < n1 - k1 = rm + d."""
    if D < d:
        return d
    if r == 0:
        raise PreconditionError(f"for r = 0 no twist gives D={D} < n1-k1={d}")
    m = (D - d) // r + 1
    return max(m, d)


def taut_rank(r: int, d: int, m: int) -> int:
    """Rank of E_m = (p_* Q(m))^vee, i.e. chi of a rank r degree d sheaf twisted by m."""
    if m < -1:
        raise PreconditionError(f"p_*Q(m) is only a vector bundle for m >= -1, got m={m}")
    return r * (m + 1) + d


# -- second factor decomposition --------------------------------------------

def _acc(target, key, value):
    target[key] = target.get(key, 0) + value


def doubled_decomposition(mu, rank: int) -> Dict[Partition, int]:
    """S_{mu^t}(W + W) = sum_{nu'} m_{nu'} S_{nu'} W for rk W = rank."""
    res: Dict[Partition, int] = {}
    for (g1, g2), c in schur_of_double(conjugate(mu), rank).items():
        for nu1, c2 in tensor_schur(g1, g2, rank).items():
            _acc(res, nu1, c * c2)
    return dict(sorted(res.items()))


def contributing_pairs(mu, nu_prime, rank: int) -> Dict[Tuple[Partition, Partition], int]:
    """The (g1, g2) with c^{mu^t}_{g1 g2} c^{nu'}_{g1 g2} != 0, with that product."""
    nu_prime = Partition(nu_prime)
    res = {}
    for (g1, g2), c in schur_of_double(conjugate(mu), rank).items():
        c2 = tensor_schur(g1, g2, rank).get(nu_prime, 0)
        if c2:
            res[(g1, g2)] = c * c2
    return res


def second_factor(emb: QuotEmbedding, mu, beta) -> Dict[Partition, int]:
    """S_{mu^t}(B2^vee + B2^vee) (x) S_beta B2^vee = sum_nu mult * S_nu B2^vee."""
    q = emb.q2
    res: Dict[Partition, int] = {}
    for nu1, c in doubled_decomposition(mu, q).items():
        for nu, c3 in tensor_schur(nu1, beta, q).items():
            _acc(res, nu, c * c3)
    return dict(sorted(res.items()))


@dataclass
class CohomologyReport:
    """degrees: total multiplicity of irreducible summands with cohomology in
    each degree; terms: (nu, multiplicity, D1, D2) for every contributing nu."""
    degrees: Dict[int, int] = field(default_factory=dict)
    terms: List[Tuple[Partition, int, int, int]] = field(default_factory=list)

    @property
    def top_degree(self) -> Optional[int]:
        return max(self.degrees) if self.degrees else None


def _check_lengths(emb, mu, alpha, beta):
    mu, alpha, beta = Partition(mu), Partition(alpha), Partition(beta)
    if len(mu) > emb.k1:
        raise PreconditionError(f"mu={tuple(mu)} longer than rk A1={emb.k1}")
    if len(alpha) > emb.q1:
        raise PreconditionError(f"alpha={tuple(alpha)} longer than rk B1={emb.q1}")
    if len(beta) > emb.q2:
        raise PreconditionError(f"beta={tuple(beta)} longer than rk B2={emb.q2}")
    return mu, alpha, beta


def v_cohomology(emb: QuotEmbedding, mu, alpha, beta) -> CohomologyReport:
    mu, alpha, beta = _check_lengths(emb, mu, alpha, beta)
    report = CohomologyReport()
    first = bwb_mixed(emb.k1, emb.n1, mu, alpha)
    if first.vanishes:
        return report
    d1 = first.degree
    for nu, mult in second_factor(emb, mu, beta).items():
        out, _ = bwb_quot_dual(emb.k2, emb.n2, nu)
        if out.vanishes:
            continue
        _acc(report.degrees, d1 + out.degree, mult)
        report.terms.append((nu, mult, d1, out.degree))
    report.degrees = dict(sorted(report.degrees.items()))
    return report


def koszul_summands(emb: QuotEmbedding, k: int, alpha=(), beta=()) -> List[Partition]:
    """mu |- k indexing the summands V_{mu,alpha,beta} of the k-th Koszul term.

    Cauchy's formula for Lambda^k(A1 [x] (B2 + B2)^vee) keeps mu with at most
    rk A1 rows and at most 2 rk B2 columns.
    """
    if k < 0:
        return []
    return sorted(partitions_of(k, max_length=emb.k1, max_part=2 * emb.q2))


# -- exhaustive verification -----------------------------------------------------

@dataclass
class VerificationReport:
    embedding: QuotEmbedding
    D: int
    mu_cap: int
    checked: int = 0
    nonvanishing: int = 0
    counterexamples: List[dict] = field(default_factory=list)
    witnesses: List[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def _alpha_beta_pairs(emb: QuotEmbedding, D: int):
    # alpha_{n1-k1} = 0, i.e. alpha has fewer than rk B1 rows
    pairs = [(alpha, beta) for a in range(D + 1)
             for alpha in partitions_of(a, max_length=emb.q1 - 1)
             for beta in partitions_of(D - a, max_length=emb.q2)]
    return sorted(pairs)


def _sweep_block(args):
    emb, D, mus = args
    pairs = _alpha_beta_pairs(emb, D)
    checked = nonvan = 0
    bad, sharp = [], []
    for mu in mus:
        for alpha, beta in pairs:
            checked += 1
            rep = v_cohomology(emb, mu, alpha, beta)
            if not rep.degrees:
                continue
            nonvan += 1
            bound = mu.size + alpha.size + beta.size
            for deg, mult in rep.degrees.items():
                row = {"mu": tuple(mu), "alpha": tuple(alpha), "beta": tuple(beta),
                       "degree": deg, "bound": bound, "multiplicity": mult}
                if deg > bound:
                    bad.append(row)
                elif deg == bound:
                    sharp.append(row)
    return checked, nonvan, bad, sharp


def verify_vanishing(emb: QuotEmbedding, D: int, mu_cap: int, jobs: int = 1) -> VerificationReport:
    """Check H^{>|mu|+|alpha|+|beta|}(V_{mu,alpha,beta}) = 0 over all
    |alpha|+|beta| = D with alpha_{n1-k1} = 0 and |mu| <= mu_cap."""
    if D < 1:
        raise PreconditionError(f"D must be positive, got {D}")
    if D >= emb.q1:
        raise PreconditionError(f"need D < n1-k1={emb.q1}, got D={D}; increase m")
    if mu_cap < 0:
        raise PreconditionError("mu_cap must be nonnegative")
    mus = [mu for k in range(mu_cap + 1) for mu in koszul_summands(emb, k)]
    report = VerificationReport(emb, D, mu_cap)
    # one block per |mu|, so work is split without changing the merge order
    blocks = [(emb, D, [mu for mu in mus if mu.size == k]) for k in range(mu_cap + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_sweep_block, blocks))
    else:
        results = [_sweep_block(b) for b in blocks]
    for checked, nonvan, bad, sharp in results:
        report.checked += checked
        report.nonvanishing += nonvan
        report.counterexamples.extend(bad)
        report.witnesses.extend(sharp)
    return report


def lower_bound_check(emb: QuotEmbedding, mu, alpha, beta, nu) -> Tuple[int, int]:
    """(|mu|+|alpha|+|beta|, j k2 + i1 (n1-k1) + (i1-j)^2 + |alpha|) for a
    summand W_{mu,alpha,nu} of V_{mu,alpha,beta} that has cohomology."""
    mu, alpha, beta = _check_lengths(emb, mu, alpha, beta)
    nu = Partition(nu)
    if not mu:
        raise PreconditionError("the lower bound is stated for nonempty mu")
    if second_factor(emb, mu, beta).get(nu, 0) <= 0:
        raise PreconditionError(f"S_{tuple(nu)} does not occur in the second factor")
    out, j = bwb_quot_dual(emb.k2, emb.n2, nu)
    if out.vanishes or j is None:
        raise PreconditionError(f"S_{tuple(nu)}B2^vee has no cohomology")
    idx = indices_with_witness(emb, mu, alpha, nu)
    i1 = idx.i[0]
    lhs = mu.size + alpha.size + beta.size
    rhs = j * emb.k2 + i1 * emb.q1 + (i1 - j) ** 2 + alpha.size
    return lhs, rhs


def indices_with_witness(emb: QuotEmbedding, mu, alpha, nu) -> BWBIndices:
    """First-factor crossing indices with the second-factor witness j attached."""
    base = bwb_indices(emb.k1, emb.n1, mu, alpha)
    _, j = bwb_quot_dual(emb.k2, emb.n2, nu)
    return BWBIndices(i=base.i, j=j, d1=base.d1)


# -- Schur complex bookkeeping -------------------------------------------------------

def schur_resolution_terms(r: int, d: int, lambdas: Sequence, k: int) -> Dict[int, Dict[tuple, int]]:
    """Resolve S_{lambda_{k-1}} E_{k-1} in the tensor product of S_{lambda_i} E_i
    by the Schur complex of E_{k+1} -> E_k^{+2}.

    ``lambdas`` lists lambda_{-1}, lambda_0, ..., lambda_M (position p holds
    the partition on E_{p-1}). Returns {t: {new lambdas: multiplicity}} where
    the t-th term has lambda_{k-1} emptied, an alpha^t (|alpha| = t) merged
    into lambda_{k+1} and beta split over the two copies of E_k merged into
    lambda_k. Factors are truncated to the ranks of the E_i.
    """
    lams = [Partition(x) for x in lambdas]
    top = len(lams) - 2
    if not 0 <= k <= top - 1:
        raise PreconditionError(f"need 0 <= k < {top} so that E_(k-1), E_k, E_(k+1) all occur")
    pos = k + 1  # list position of E_k
    rk_k, rk_k1 = taut_rank(r, d, k), taut_rank(r, d, k + 1)
    source = lams[pos - 1]
    out: Dict[int, Dict[tuple, int]] = {}
    for t in range(source.size + 1):
        terms: Dict[tuple, int] = {}
        for (at, beta), c in schur_complex_terms(source, t, rk_k1, None).items():
            for (b1, b2), c2 in schur_of_double(beta, rk_k).items():
                for bb, c3 in tensor_schur(b1, b2, rk_k).items():
                    for new_k, c4 in tensor_schur(lams[pos], bb, rk_k).items():
                        for new_k1, c5 in tensor_schur(lams[pos + 1], at, rk_k1).items():
                            new = list(lams)
                            new[pos - 1] = Partition()
                            new[pos] = new_k
                            new[pos + 1] = new_k1
                            _acc(terms, tuple(new), c * c2 * c3 * c4 * c5)
        if terms:
            out[t] = dict(sorted(terms.items()))
    return out
