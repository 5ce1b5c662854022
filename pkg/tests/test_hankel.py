import random
from fractions import Fraction
from math import comb

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from splitquot.errors import PreconditionError
from splitquot.hankel import (DEFAULT_SEED, HankelPoint, IntegerPolynomial,
                              determinant, fitting_generators, generic_secant_point,
                              hankel, hankel_rank, numeric_minors, rational_rank,
                              sample_points, secant_point, seed_from_env,
                              splitting_from_point)
from splitquot.splitting import dominates, h1

IP = IntegerPolynomial


def a(i):
    return IP.var(i)


def points_for(d, seed):
    """Secant points of every stratum with the stratum recorded, plus plain
    random points."""
    rng = random.Random(seed)
    out = []
    for s in range(d // 2 + 1):
        for _ in range(6 if s else 1):
            out.append((generic_secant_point(d, s, rng), (s, d - s)))
    for _ in range(4):
        coords = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(d - 1)]
        out.append((HankelPoint(d, coords), None))
    return out


class TestPolynomial:
    def test_arithmetic(self):
        p = a(0) * a(2) - a(1) * a(1)
        assert str(p) == "1 * a_0 * a_2 + -1 * a_1^2"
        assert str(p - p) == "0"
        assert (a(0) + a(1)) * (a(0) - a(1)) == a(0) * a(0) - a(1) * a(1)
        assert p.evaluate([1, 2, 4]) == 0
        assert p.evaluate([Fraction(1, 2), 1, 3]) == Fraction(1, 2)

    def test_no_zero_terms(self):
        p = a(0) + IP.const(3) - a(0)
        assert p == IP.const(3)
        assert all(c != 0 for c in p.terms.values())

    def test_parse_roundtrip(self):
        for text in ["0", "1 * a_0 * a_2 + -1 * a_1^2", "7", "-2 * a_3^4 + 5 * a_0 * a_1"]:
            p = IP.parse(text)
            assert IP.parse(str(p)) == p
        assert str(IP.parse("1 * a_0 * a_2 + -1 * a_1^2")) == "1 * a_0 * a_2 + -1 * a_1^2"

    def test_parse_errors(self):
        with pytest.raises(PreconditionError):
            IP.parse("a_0 * 3")
        with pytest.raises(PreconditionError):
            IP.parse("1 * b_0")

    @given(st.dictionaries(
        st.lists(st.tuples(st.integers(0, 4), st.integers(1, 3)), max_size=3,
                 unique_by=lambda x: x[0]).map(lambda xs: tuple(sorted(xs))),
        st.integers(-20, 20), max_size=6))
    @settings(max_examples=100, deadline=None)
    def test_str_roundtrip_property(self, terms):
        p = IP(terms)
        assert IP.parse(str(p)) == p
        assert hash(IP.parse(str(p))) == hash(p)

    def test_determinant(self):
        m = [[a(0), a(1)], [a(1), a(2)]]
        assert determinant(m) == a(0) * a(2) - a(1) * a(1)
        assert determinant([[IP.const(2)]]) == IP.const(2)


class TestRank:
    def test_examples(self):
        assert rational_rank([[1, 2], [2, 4]]) == 1
        assert rational_rank([[0, 0], [0, 0]]) == 0
        assert rational_rank([[Fraction(1, 2), 1], [1, 3]]) == 2
        assert rational_rank([]) == 0

    def test_against_sympy(self):
        rng = random.Random(DEFAULT_SEED)
        for trial in range(150):
            m, n = rng.randint(1, 5), rng.randint(1, 5)
            if trial % 2:
                # low rank: product of thin factors
                k = rng.randint(0, min(m, n))
                left = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(k)] for _ in range(m)]
                right = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)] for _ in range(k)]
                mat = [[sum((left[i][t] * right[t][j] for t in range(k)), Fraction(0)) for j in range(n)]
                       for i in range(m)]
            else:
                mat = [[Fraction(rng.randint(-3, 3), rng.randint(1, 4)) for _ in range(n)] for _ in range(m)]
            expected = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row]
                                     for row in mat]).rank()
            assert rational_rank(mat) == expected


class TestHankelMatrix:
    def test_examples(self):
        assert hankel(2, 4).labels() == [["a_0", "a_1"], ["a_1", "a_2"]]
        assert hankel(1, 5).labels() == [["a_0", "a_1", "a_2", "a_3"]]
        assert hankel(3, 5).labels() == [["a_0", "a_1"], ["a_1", "a_2"], ["a_2", "a_3"]]

    def test_range(self):
        with pytest.raises(PreconditionError):
            hankel(0, 4)
        with pytest.raises(PreconditionError):
            hankel(4, 4)

    def test_anti_diagonals(self):
        for d in range(2, 9):
            for k in range(1, d):
                lab = hankel(k, d).labels()
                for i in range(k):
                    for j in range(d - k):
                        assert lab[i][j] == f"a_{i + j}"


class TestPoints:
    def test_wrong_length(self):
        with pytest.raises(PreconditionError, match="coordinates"):
            HankelPoint(4, (1, 2))
        with pytest.raises(PreconditionError):
            HankelPoint(1, ())

    def test_examples(self):
        assert splitting_from_point((0, 0, 0)) == (0, 4)
        for t in (1, -2, Fraction(3, 5)):
            assert splitting_from_point((1, t, t * t)) == (1, 3)
        assert splitting_from_point((1, 0, 1)) == (2, 2)
        assert splitting_from_point((3, -1, 7)) == (2, 2)

    def test_secant_examples(self):
        assert secant_point(5, 0, [], []).coords == (0, 0, 0, 0)
        assert splitting_from_point(secant_point(5, 0, [], [])) == (0, 5)
        p = secant_point(4, 1, [2], [1])
        assert p.coords == (1, 2, 4)
        assert splitting_from_point(p) == (1, 3)
        assert splitting_from_point(secant_point(6, 2, [1, 2], [1, 1])) == (2, 4)

    def test_secant_errors(self):
        with pytest.raises(PreconditionError, match="distinct"):
            secant_point(6, 2, [1, 1], [1, 1])
        with pytest.raises(PreconditionError):
            secant_point(6, 2, [1], [1])
        with pytest.raises(PreconditionError):
            secant_point(6, 4, [1, 2, 3, 4], [1, 1, 1, 1])
        with pytest.raises(PreconditionError, match="nonzero"):
            secant_point(6, 1, [1], [0])

    def test_secant_stratification(self):
        rng = random.Random(seed_from_env())
        for d in range(2, 9):
            for s in range(d // 2 + 1):
                for _ in range(5):
                    assert splitting_from_point(generic_secant_point(d, s, rng)) == (s, d - s)


class TestFitting:
    def test_examples(self):
        assert fitting_generators(4, 3) == [a(0) * a(2) - a(1) * a(1)]
        assert fitting_generators(5, 4) == [a(0) * a(2) - a(1) * a(1),
                                            a(0) * a(3) - a(1) * a(2),
                                            a(1) * a(3) - a(2) * a(2)]

    def test_counts(self):
        for d in range(3, 11):
            for e in range(d // 2 + 1, d):
                if 2 * e < d + 2:
                    continue
                assert len(fitting_generators(d, e)) == comb(e - 1, d - e + 1)

    def test_range(self):
        with pytest.raises(PreconditionError):
            fitting_generators(4, 2)
        with pytest.raises(PreconditionError):
            fitting_generators(4, 4)

    def test_evaluation_homomorphism(self):
        rng = random.Random(7)
        for d in range(3, 9):
            for e in range(d // 2 + 1, d):
                if 2 * e < d + 2:
                    continue
                gens = fitting_generators(d, e)
                for _ in range(3):
                    coords = [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(d - 1)]
                    assert [g.evaluate(coords) for g in gens] == numeric_minors(coords, e)

    def test_vanishing_iff_dominated(self):
        checked = 0
        for d in range(3, 9):
            for pt, _ in points_for(d, DEFAULT_SEED + d):
                t = splitting_from_point(pt)
                for e in range(d // 2 + 1, d):
                    if 2 * e < d + 2:
                        continue
                    vanish = all(g.evaluate(pt.coords) == 0 for g in fitting_generators(d, e))
                    assert vanish == dominates((d - e, e), t)
                    checked += 1
        assert checked > 50


class TestDuality:
    def test_rank_h1_duality(self):
        n_points = 0
        for d in range(2, 9):
            for pt, known in points_for(d, DEFAULT_SEED * 3 + d):
                n_points += 1
                t = splitting_from_point(pt)
                if known is not None:
                    assert t == known
                for k in range(1, d):
                    assert hankel_rank(pt, k) == k - h1(t, -k - 1)
        assert n_points > 100

    def test_many_points(self):
        pts = [p for d in range(2, 9) for p in sample_points(d, 14)]
        assert len(pts) >= 200
        for pt in pts:
            t = splitting_from_point(pt)
            for k in range(1, pt.d):
                assert hankel_rank(pt, k) == k - h1(t, -k - 1)


class TestSeed:
    def test_default(self, monkeypatch):
        monkeypatch.delenv("SPLITQUOT_SEED", raising=False)
        assert seed_from_env() == 1729

    def test_override(self, monkeypatch):
        monkeypatch.setenv("SPLITQUOT_SEED", "42")
        assert seed_from_env() == 42
        a_pts = sample_points(6, 3)
        assert a_pts == sample_points(6, 3, seed=42)

    def test_bad_seed(self, monkeypatch):
        monkeypatch.setenv("SPLITQUOT_SEED", "abc")
        with pytest.raises(PreconditionError, match="integer"):
            seed_from_env()
