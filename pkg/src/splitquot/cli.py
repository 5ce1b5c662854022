"""Command line front end.

Every subcommand prints one JSON report with keys, in order: ``command``,
``inputs``, ``outputs``, ``counterexamples`` (and ``timing`` with --timing).
``--plain`` prints only the headline value. Exit status: 0 success,
1 verification found a counterexample, 2 usage or precondition error.
"""
from __future__ import annotations

import json
import re
import sys
import time
from functools import wraps
from typing import Callable, Dict, List, Optional

import click

from . import bwb as _bwb
from . import hankel as _hk
from . import partitions as _pt
from . import quotvanish as _qv
from . import splitting as _sp
from .errors import PreconditionError

# library operation -> subcommand exposing it
OPERATIONS: Dict[str, str] = {
    "partitions.conjugate": "conjugate",
    "partitions.lr_coefficient": "lr",
    "partitions.tensor_schur": "tensor",
    "partitions.schur_of_double": "schur-double",
    "partitions.cauchy_wedge": "cauchy",
    "partitions.schur_complex_terms": "schur-complex",
    "splitting.h0": "cohomology",
    "splitting.h1": "cohomology",
    "splitting.u": "u",
    "splitting.hom": "hom",
    "splitting.ext1": "hom",
    "splitting.dominates": "dominance",
    "splitting.dominates_via_h1": "dominance",
    "splitting.dominates_via_flag": "dominance",
    "splitting.flag_witness": "dominance",
    "splitting.is_balanced": "tame",
    "splitting.is_perfectly_balanced": "tame",
    "splitting.is_tame": "tame",
    "splitting.hn_data": "hn",
    "splitting.admissible_sets": "admissible",
    "splitting.is_admissible": "admissible",
    "splitting.admits_subsheaf": "admits",
    "splitting.eb": "eb",
    "splitting.gap": "gap",
    "splitting.flag_stratum_dim": "fiber-dim",
    "splitting.stratum_codim": "stratum-dim",
    "splitting.tangent_check": "tangent",
    "splitting.gp_type": "gp-type",
    "bwb.bwb_mixed": "bwb",
    "bwb.bwb_indices": "bwb",
    "bwb.bwb_quot_dual": "bwb-dual",
    "quotvanish.stromme_embedding": "embedding",
    "quotvanish.minimal_twist": "embedding",
    "quotvanish.taut_rank": "taut-rank",
    "quotvanish.v_cohomology": "vcoh",
    "quotvanish.second_factor": "vcoh",
    "quotvanish.contributing_pairs": "pairs",
    "quotvanish.koszul_summands": "koszul",
    "quotvanish.verify_vanishing": "verify-vanishing",
    "quotvanish.lower_bound_check": "lower-bound",
    "quotvanish.schur_resolution_terms": "resolve",
    "hankel.hankel": "hankel",
    "hankel.fitting_generators": "fitting",
    "hankel.splitting_from_point": "splitting-from-point",
    "hankel.secant_point": "secant-point",
}


class CounterexampleFound(Exception):
    pass


# -- argument parsing --------------------------------------------------------------

def _int_list(text: str, what: str) -> List[int]:
    text = text.strip()
    if text in ("", "()", "-"):
        return []
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        m = re.fullmatch(r"(-?\d+)(?:\^(\d+))?", tok)
        if not m:
            raise PreconditionError(f"cannot read {what} entry {tok!r} (expected integers like 3 or 1^5)")
        out.extend([int(m.group(1))] * int(m.group(2) or 1))
    return out


def parse_type(text: str) -> _sp.SplittingType:
    return _sp.SplittingType(_int_list(text, "splitting type"))


def parse_partition(text: str) -> _pt.Partition:
    return _pt.Partition(_int_list(text, "partition"))


def parse_indices(text: str) -> List[int]:
    return _int_list(text, "index set")


def parse_chain(text: str) -> List[_sp.SplittingType]:
    return [parse_type(t) for t in text.split(";")]


def parse_rationals(text: str) -> List:
    from fractions import Fraction
    text = text.strip()
    if text in ("", "()", "-"):
        return []
    try:
        return [Fraction(t.strip()) for t in text.split(",")]
    except ValueError as exc:
        raise PreconditionError(f"cannot read rational list {text!r}: {exc}") from None


# -- serialization -------------------------------------------------------------------

def _jsonable(x):
    from fractions import Fraction
    if isinstance(x, dict):
        return [{"key": _jsonable(k), "value": _jsonable(v)} for k, v in x.items()] \
            if any(not isinstance(k, (str, int)) for k in x) else {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, _bwb.BWBOutcome):
        return None if x.degree is None else x.degree
    if isinstance(x, _hk.IntegerPolynomial):
        return str(x)
    return x


def dump_json(obj, indent: int = 0) -> str:
    """json.dumps(indent=2) except that lists of scalars stay on one line."""
    pad, inner = " " * indent, " " * (indent + 2)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(k)}: {dump_json(v, indent + 2)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, list):
        if all(not isinstance(v, (dict, list)) for v in obj):
            return json.dumps(obj)
        items = [inner + dump_json(v, indent + 2) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(obj)


def _plain_text(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "vanishes"
    if isinstance(value, (list, tuple)):
        if all(isinstance(v, (list, tuple)) for v in value) and value:
            return "\n".join(_plain_text(v) for v in value)
        return ",".join(str(v) for v in value)
    return str(value)


def command(name: str, **kwargs):
    """Register a subcommand whose body returns (inputs, outputs, plain[, counterexamples])."""

    def deco(fn: Callable):
        @cli.command(name, **kwargs)
        @click.option("--plain", is_flag=True, help="print only the headline value")
        @click.option("--timing", is_flag=True, help="add wall-clock seconds to the report")
        @wraps(fn)
        def wrapper(plain, timing, **params):
            start = time.perf_counter()
            result = fn(**params)
            inputs, outputs, headline = result[:3]
            bad = result[3] if len(result) > 3 else []
            if plain:
                click.echo(_plain_text(_jsonable(headline)))
            else:
                report = {
                    "command": name,
                    "inputs": _jsonable(inputs),
                    "outputs": _jsonable(outputs),
                    "counterexamples": _jsonable(bad),
                }
                if timing:
                    report["timing"] = round(time.perf_counter() - start, 6)
                click.echo(dump_json(report))
            if bad:
                raise CounterexampleFound()
            return 0

        return wrapper

    return deco


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def cli():
    """Splitting types on P^1, Schur calculus, Borel-Weil-Bott and Hankel loci."""


# -- partitions ---------------------------------------------------------------------

@command("conjugate")
@click.option("--lam", required=True, help="partition, e.g. 7,2")
def _conjugate(lam):
    lam = parse_partition(lam)
    c = _pt.conjugate(lam)
    return {"lambda": lam}, {"conjugate": c}, c


@command("lr")
@click.option("--lam", required=True)
@click.option("--mu", required=True)
@click.option("--nu", required=True)
def _lr(lam, mu, nu):
    lam, mu, nu = parse_partition(lam), parse_partition(mu), parse_partition(nu)
    c = _pt.lr_coefficient(lam, mu, nu)
    return {"lambda": lam, "mu": mu, "nu": nu}, {"coefficient": c}, c


@command("tensor")
@click.option("--lam", required=True)
@click.option("--mu", required=True)
@click.option("--max-length", type=int, required=True)
def _tensor(lam, mu, max_length):
    lam, mu = parse_partition(lam), parse_partition(mu)
    res = _pt.tensor_schur(lam, mu, max_length)
    terms = [{"nu": k, "multiplicity": v} for k, v in res.items()]
    return {"lambda": lam, "mu": mu, "max_length": max_length}, {"terms": terms}, list(res)


@command("schur-double")
@click.option("--lam", required=True)
@click.option("--rank", type=int, required=True)
def _schur_double(lam, rank):
    lam = parse_partition(lam)
    res = _pt.schur_of_double(lam, rank)
    terms = [{"gamma1": g1, "gamma2": g2, "multiplicity": c} for (g1, g2), c in res.items()]
    return {"lambda": lam, "rank": rank}, {"terms": terms}, [[g1, g2] for g1, g2 in res]


@command("cauchy")
@click.option("--n", type=int, required=True)
@click.option("--rank-e", type=int, required=True)
@click.option("--rank-f", type=int, required=True)
def _cauchy(n, rank_e, rank_f):
    pairs = _pt.cauchy_wedge(n, rank_e, rank_f)
    terms = [{"mu_conjugate": a, "mu": b} for a, b in pairs]
    return {"n": n, "rank_e": rank_e, "rank_f": rank_f}, {"terms": terms}, [[a, b] for a, b in pairs]


@command("schur-complex")
@click.option("--lam", required=True)
@click.option("--t", type=int, required=True)
def _schur_complex(lam, t):
    lam = parse_partition(lam)
    res = _pt.schur_complex_terms(lam, t)
    terms = [{"alpha_conjugate": a, "beta": b, "multiplicity": c} for (a, b), c in res.items()]
    return {"lambda": lam, "t": t}, {"terms": terms}, [[a, b] for a, b in res]


# -- splitting types -----------------------------------------------------------------

@command("cohomology")
@click.option("--e", required=True, help="splitting type, e.g. -2,2")
@click.option("--m", type=int, default=0, show_default=True, help="twist")
def _cohomology(e, m):
    e = parse_type(e)
    h0, h1 = _sp.h0(e, m), _sp.h1(e, m)
    return {"e": e, "m": m}, {"h0": h0, "h1": h1}, [h0, h1]


@command("u")
@click.option("--e", required=True)
def _u(e):
    e = parse_type(e)
    v = _sp.u(e)
    return {"e": e}, {"u": v}, v


@command("hom")
@click.option("--a", required=True)
@click.option("--b", required=True)
def _hom(a, b):
    a, b = parse_type(a), parse_type(b)
    h, x = _sp.hom(a, b), _sp.ext1(a, b)
    return {"a": a, "b": b}, {"hom": h, "ext1": x}, [h, x]


@command("dominance")
@click.option("--e", required=True)
@click.option("--f", required=True)
def _dominance(e, f):
    e, f = parse_type(e), parse_type(f)
    ps = _sp.dominates(e, f)
    via_h1 = _sp.dominates_via_h1(e, f)
    via_flag = _sp.dominates_via_flag(e, f)
    out = {"dominates": ps, "via_h1": via_h1, "via_flag": via_flag,
           "flag_witness": _sp.flag_witness(e, f) if ps else None}
    bad = [] if ps == via_h1 == via_flag else [{"e": e, "f": f, "partial_sums": ps,
                                                "via_h1": via_h1, "via_flag": via_flag}]
    return {"e": e, "f": f}, out, ps, bad


@command("tame")
@click.option("--e", required=True)
def _tame(e):
    e = parse_type(e)
    out = {"tame": _sp.is_tame(e), "balanced": _sp.is_balanced(e),
           "perfectly_balanced": _sp.is_perfectly_balanced(e)}
    return {"e": e}, out, out["tame"]


@command("hn")
@click.option("--e", required=True)
def _hn(e):
    e = parse_type(e)
    hn = _sp.hn_data(e)
    out = {"m": hn.m, "r_hn": hn.quotient_ranks, "d_hn": hn.quotient_degrees,
           "flag": hn.subbundle_types}
    return {"e": e}, out, hn.subbundle_types


@command("admissible")
@click.option("--e", required=True)
@click.option("--I", "indices", default=None, help="check a single index set instead of listing")
def _admissible(e, indices):
    e = parse_type(e)
    if indices is not None:
        idx = parse_indices(indices)
        ok = _sp.is_admissible(e, idx)
        return {"e": e, "I": idx}, {"admissible": ok}, ok
    sets = _sp.admissible_sets(e)
    return {"e": e}, {"m": _sp.hn_data(e).m, "admissible_sets": sets}, [list(s) for s in sets] or [[]]


@command("admits")
@click.option("--a", required=True)
@click.option("--e", required=True)
def _admits(a, e):
    a, e = parse_type(a), parse_type(e)
    ok = _sp.admits_subsheaf(a, e)
    return {"a": a, "e": e}, {"admits": ok}, ok


@command("eb")
@click.option("--r", type=int, required=True)
@click.option("--d", type=int, required=True)
@click.option("--a", required=True)
def _eb(r, d, a):
    a = parse_type(a)
    res = _sp.eb(r, d, a)
    return {"r": r, "d": d, "a": a}, {"eb": res}, res


@command("gap")
@click.option("--a", required=True)
@click.option("--e", required=True)
def _gap(a, e):
    a, e = parse_type(a), parse_type(e)
    g = _sp.gap(a, e)
    return {"a": a, "e": e}, {"gap": g, "u": _sp.u(e), "ext1": _sp.ext1(a, e)}, g


@command("fiber-dim")
@click.option("--chain", required=True, help="types separated by ';', smallest first, e.g. '1;-1,2;-2,-1,3'")
def _fiber_dim(chain):
    ch = parse_chain(chain)
    v = _sp.flag_stratum_dim(ch)
    return {"chain": ch}, {"dimension": v}, v


@command("stratum-dim")
@click.option("--a", required=True)
@click.option("--e", required=True)
@click.option("--c", type=int, required=True)
@click.option("--rkF", "rk_f", type=int, default=None)
@click.option("--rkG", "rk_g", type=int, default=None)
def _stratum_dim(a, e, c, rk_f, rk_g):
    a, e = parse_type(a), parse_type(e)
    v = _sp.stratum_codim(a, e, c, rk_f, rk_g)
    inputs = {"a": a, "e": e, "c": c, "rkF": rk_f, "rkG": rk_g}
    return inputs, {"codimension": v}, v


@command("tangent")
@click.option("--e", required=True)
@click.option("--I", "indices", required=True)
@click.option("--e-prime", required=True)
def _tangent(e, indices, e_prime):
    e, idx, ep = parse_type(e), parse_indices(indices), parse_type(e_prime)
    lhs, rhs = _sp.tangent_check(e, idx, ep)
    bad = [] if lhs == rhs else [{"lhs": lhs, "rhs": rhs}]
    return {"e": e, "I": idx, "e_prime": ep}, {"lhs": lhs, "rhs": rhs, "equal": lhs == rhs}, [lhs, rhs], bad


@command("gp-type")
@click.option("--g", type=int, required=True)
@click.option("--d", type=int, required=True)
@click.option("--r", type=int, required=True)
@click.option("--k", type=int, required=True)
def _gp_type(g, d, r, k):
    t = _sp.gp_type(g, d, r, k)
    return {"g": g, "d": d, "r": r, "k": k}, {"type": t}, t


# -- Borel-Weil-Bott -------------------------------------------------------------------

@command("bwb")
@click.option("--k", type=int, required=True)
@click.option("--n", type=int, required=True)
@click.option("--mu", default="")
@click.option("--alpha", default="")
def _bwb_cmd(k, n, mu, alpha):
    mu, alpha = parse_partition(mu), parse_partition(alpha)
    res = _bwb.bwb_mixed(k, n, mu, alpha)
    out = {"degree": res.degree, "vanishes": res.vanishes}
    bad = []
    if not res.vanishes:
        idx = _bwb.bwb_indices(k, n, mu, alpha)
        out["i"] = idx.i
        out["d1"] = idx.d1
        if idx.d1 != res.degree:
            bad.append({"inversions": res.degree, "closed_form": idx.d1})
    return {"k": k, "n": n, "mu": mu, "alpha": alpha}, out, res.degree, bad


@command("bwb-dual")
@click.option("--k", type=int, required=True)
@click.option("--n", type=int, required=True)
@click.option("--nu", default="")
def _bwb_dual(k, n, nu):
    nu = parse_partition(nu)
    res, j = _bwb.bwb_quot_dual(k, n, nu)
    return {"k": k, "n": n, "nu": nu}, {"degree": res.degree, "vanishes": res.vanishes, "j": j}, res.degree


# -- Quot scheme ----------------------------------------------------------------------------

def _embedding_opts(fn):
    fn = click.option("--m", type=int, default=None, help="twist; default: smallest admissible for --D")(fn)
    fn = click.option("--N", "n_", type=int, required=True)(fn)
    fn = click.option("--d", type=int, required=True)(fn)
    fn = click.option("--r", type=int, required=True)(fn)
    return fn


def _make_embedding(r, d, n_, m, D=None):
    if m is None:
        m = _qv.minimal_twist(r, d, D if D is not None else 0)
    return _qv.stromme_embedding(r, d, n_, m)


def _emb_json(emb):
    return {"r": emb.r, "d": emb.d, "N": emb.N, "m": emb.m,
            "k1": emb.k1, "n1": emb.n1, "k2": emb.k2, "n2": emb.n2,
            "grassmannians": emb.describe()}


@command("embedding")
@_embedding_opts
@click.option("--D", "D", type=int, default=None, help="pick the smallest m with D < n1-k1")
def _embedding(r, d, n_, m, D):
    emb = _make_embedding(r, d, n_, m, D)
    return {"r": r, "d": d, "N": n_, "m": m, "D": D}, _emb_json(emb), [emb.k1, emb.n1, emb.k2, emb.n2]


@command("taut-rank")
@click.option("--r", type=int, required=True)
@click.option("--d", type=int, required=True)
@click.option("--m", type=int, required=True)
def _taut_rank(r, d, m):
    v = _qv.taut_rank(r, d, m)
    return {"r": r, "d": d, "m": m}, {"rank": v}, v


@command("vcoh")
@_embedding_opts
@click.option("--mu", default="")
@click.option("--alpha", default="")
@click.option("--beta", default="")
def _vcoh(r, d, n_, m, mu, alpha, beta):
    mu, alpha, beta = parse_partition(mu), parse_partition(alpha), parse_partition(beta)
    emb = _make_embedding(r, d, n_, m, alpha.size + beta.size)
    rep = _qv.v_cohomology(emb, mu, alpha, beta)
    degrees = [{"degree": k, "multiplicity": v} for k, v in rep.degrees.items()]
    terms = [{"nu": nu, "multiplicity": c, "d1": d1, "d2": d2} for nu, c, d1, d2 in rep.terms]
    return ({"embedding": _emb_json(emb), "mu": mu, "alpha": alpha, "beta": beta},
            {"degrees": degrees, "terms": terms}, list(rep.degrees))


@command("pairs")
@_embedding_opts
@click.option("--mu", required=True)
@click.option("--nu-prime", required=True)
def _pairs(r, d, n_, m, mu, nu_prime):
    mu, nu1 = parse_partition(mu), parse_partition(nu_prime)
    emb = _make_embedding(r, d, n_, m)
    res = _qv.contributing_pairs(mu, nu1, emb.q2)
    terms = [{"gamma1": g1, "gamma2": g2, "product": c} for (g1, g2), c in res.items()]
    return ({"embedding": _emb_json(emb), "mu": mu, "nu_prime": nu1}, {"pairs": terms},
            [[g1, g2] for g1, g2 in res])


@command("koszul")
@_embedding_opts
@click.option("--k", "kk", type=int, required=True)
def _koszul(r, d, n_, m, kk):
    emb = _make_embedding(r, d, n_, m)
    res = _qv.koszul_summands(emb, kk)
    return {"embedding": _emb_json(emb), "k": kk}, {"mu": res}, res


@command("verify-vanishing")
@_embedding_opts
@click.option("--D", "D", type=int, required=True)
@click.option("--mu-cap", type=int, required=True)
@click.option("--jobs", type=int, default=1, show_default=True)
def _verify(r, d, n_, m, D, mu_cap, jobs):
    emb = _make_embedding(r, d, n_, m, D)
    rep = _qv.verify_vanishing(emb, D, mu_cap, jobs=jobs)
    out = {"checked": rep.checked, "nonvanishing": rep.nonvanishing,
           "counterexample_count": len(rep.counterexamples), "witnesses": rep.witnesses}
    inputs = {"embedding": _emb_json(emb), "D": D, "mu_cap": mu_cap}
    return inputs, out, len(rep.counterexamples), rep.counterexamples


@command("lower-bound")
@_embedding_opts
@click.option("--mu", required=True)
@click.option("--alpha", default="")
@click.option("--beta", default="")
@click.option("--nu", required=True)
def _lower_bound(r, d, n_, m, mu, alpha, beta, nu):
    mu, alpha, beta, nu = map(parse_partition, (mu, alpha, beta, nu))
    emb = _make_embedding(r, d, n_, m, alpha.size + beta.size)
    lhs, rhs = _qv.lower_bound_check(emb, mu, alpha, beta, nu)
    bad = [] if lhs >= rhs else [{"lhs": lhs, "rhs": rhs}]
    return ({"embedding": _emb_json(emb), "mu": mu, "alpha": alpha, "beta": beta, "nu": nu},
            {"lhs": lhs, "rhs": rhs, "holds": lhs >= rhs}, [lhs, rhs], bad)


@command("resolve")
@click.option("--r", type=int, required=True)
@click.option("--d", type=int, required=True)
@click.option("--lambdas", required=True, help="partitions on E_-1, E_0, ... separated by ';'")
@click.option("--k", "kk", type=int, required=True)
def _resolve(r, d, lambdas, kk):
    lams = [parse_partition(t) for t in lambdas.split(";")]
    res = _qv.schur_resolution_terms(r, d, lams, kk)
    total = sum(p.size for p in lams)
    terms, bad = [], []
    for t, group in res.items():
        for new, c in group.items():
            terms.append({"t": t, "lambdas": new, "multiplicity": c})
            if sum(p.size for p in new) != total:
                bad.append({"t": t, "lambdas": new})
    return {"r": r, "d": d, "lambdas": lams, "k": kk}, {"D": total, "terms": terms}, len(terms), bad


# -- Hankel loci ----------------------------------------------------------------------------

@command("hankel")
@click.option("--k", type=int, required=True)
@click.option("--d", type=int, required=True)
def _hankel(k, d):
    h = _hk.hankel(k, d)
    rows = h.labels()
    return {"k": k, "d": d}, {"rows": rows}, "\n".join(" ".join(r) for r in rows)


@command("fitting")
@click.option("--d", type=int, required=True)
@click.option("--e", type=int, required=True)
def _fitting(d, e):
    gens = _hk.fitting_generators(d, e)
    return {"d": d, "e": e}, {"generators": [str(g) for g in gens]}, "\n".join(str(g) for g in gens)


@command("splitting-from-point")
@click.option("--coords", required=True, help="a_0,...,a_{d-2} as rationals, e.g. 1,2,4 or 1/2,0,3")
def _splitting_from_point(coords):
    pt = _hk.HankelPoint(len(parse_rationals(coords)) + 1, parse_rationals(coords))
    t = _hk.splitting_from_point(pt)
    ranks = {str(k): _hk.hankel_rank(pt, k) for k in range(1, pt.d)}
    return {"d": pt.d, "coords": pt.coords}, {"splitting": t, "hankel_ranks": ranks}, t


@command("secant-point")
@click.option("--d", type=int, required=True)
@click.option("--nodes", default="")
@click.option("--weights", default="")
def _secant_point(d, nodes, weights):
    ns, ws = parse_rationals(nodes), parse_rationals(weights)
    pt = _hk.secant_point(d, len(ns), ns, ws)
    t = _hk.splitting_from_point(pt)
    return {"d": d, "nodes": ns, "weights": ws}, {"coords": pt.coords, "splitting": t}, pt.coords


# -- entry points -------------------------------------------------------------------------------

def run(argv: Optional[List[str]] = None) -> int:
    try:
        return cli.main(args=argv, prog_name="splitquot", standalone_mode=False) or 0
    except CounterexampleFound:
        return 1
    except PreconditionError as exc:
        click.echo(f"error: {exc}", err=True)
        return 2
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return 2
    except click.Abort:
        return 2


def main() -> None:
    sys.exit(run())
