import pytest
from hypothesis import given, settings, strategies as st

from splitquot.errors import PreconditionError
from splitquot.partitions import (Partition, cauchy_wedge, conjugate, dominates,
                                  lr_coefficient, partitions_of, partitions_up_to,
                                  schur_complex_terms, schur_of_double,
                                  skew_decomposition, sub_partitions, tensor_schur)

from oracles import (cauchy_dimension, dim_schur, lr_by_polynomials,
                     partitions as oracle_partitions)

P = Partition
ONE5 = (1, 1, 1, 1, 1)


def partition_strategy(max_size=8):
    return st.integers(0, max_size).flatmap(
        lambda n: st.sampled_from(oracle_partitions(n))).map(Partition)


class TestPartitionType:
    def test_normal_form(self):
        assert P((3, 1, 0, 0)) == P((3, 1))
        assert P((3, 1, 0)).length == 2
        assert P(()).size == 0 and P(()).length == 0

    def test_rejects_increasing(self):
        with pytest.raises(PreconditionError, match="weakly decreasing"):
            P((1, 2))

    def test_rejects_negative(self):
        with pytest.raises(PreconditionError, match="nonnegative"):
            P((2, -1))

    def test_part_is_one_indexed(self):
        lam = P((4, 2))
        assert [lam.part(i) for i in (1, 2, 3)] == [4, 2, 0]

    def test_enumeration_matches_oracle(self):
        for n in range(9):
            assert sorted(partitions_of(n)) == sorted(P(p) for p in oracle_partitions(n))

    def test_enumeration_caps(self):
        got = list(partitions_of(6, max_length=2, max_part=4))
        assert sorted(got) == [P((3, 3)), P((4, 2))]

    def test_sub_partitions(self):
        subs = set(sub_partitions((2, 1)))
        assert subs == {P(()), P((1,)), P((2,)), P((1, 1)), P((2, 1))}


class TestConjugate:
    def test_examples(self):
        assert conjugate((7, 2)) == P((2, 2, 1, 1, 1, 1, 1))
        assert conjugate(()) == P(())
        assert conjugate((3, 1)) == P((2, 1, 1))

    @given(partition_strategy(12))
    def test_involution(self, lam):
        assert conjugate(conjugate(lam)) == lam
        assert conjugate(lam).size == lam.size


class TestLR:
    def test_examples(self):
        assert lr_coefficient((1,), (1, 1), (2, 1)) == 1
        assert lr_coefficient((3, 1), (), (3, 1)) == 1
        assert lr_coefficient((2,), (2,) + ONE5, (2, 2) + ONE5) == 1

    def test_known_multiplicity_two(self):
        # s_21 * s_21 contains s_321 twice
        assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2

    def test_zero_outside_support(self):
        assert lr_coefficient((2,), (1,), (2, 2)) == 0
        assert lr_coefficient((3,), (1,), (2, 1, 1)) == 0

    def test_symmetry_and_support_exhaustive(self):
        for n in range(9):
            for nu in partitions_of(n):
                for a in range(n + 1):
                    for lam in partitions_of(a):
                        for mu in partitions_of(n - a):
                            c = lr_coefficient(lam, mu, nu)
                            assert c == lr_coefficient(mu, lam, nu)
                            if c:
                                assert nu.contains(lam) and nu.contains(mu)

    def test_against_polynomial_multiplication(self):
        for a in range(4):
            for b in range(4):
                for lam in partitions_of(a):
                    for mu in partitions_of(b):
                        n = a + b
                        expected = lr_by_polynomials(lam, mu, max(n, 1))
                        got = {tuple(k): v for k, v in tensor_schur(lam, mu).items()}
                        assert got == {k: v for k, v in expected.items()}
                        for nu, c in expected.items():
                            assert lr_coefficient(lam, mu, nu) == c

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_dimension_oracle(self, n):
        for a in range(5):
            for b in range(5):
                for lam in partitions_of(a):
                    for mu in partitions_of(b):
                        lhs = sum(c * dim_schur(nu, n) for nu, c in tensor_schur(lam, mu, n).items())
                        assert lhs == dim_schur(lam, n) * dim_schur(mu, n)

    def test_skew_decomposition_agrees(self):
        for n in range(7):
            for outer in partitions_of(n):
                for inner in sub_partitions(outer):
                    dec = skew_decomposition(outer, inner)
                    for mu, c in dec.items():
                        assert lr_coefficient(inner, mu, outer) == c


class TestTensor:
    def test_examples(self):
        assert tensor_schur((1,), (1,), 2) == {P((1, 1)): 1, P((2,)): 1}
        assert tensor_schur((1,), (1,), 1) == {P((2,)): 1}

    def test_example_cross_check(self):
        res = tensor_schur((2,) + ONE5, (2,), 7)
        assert P((4,) + ONE5) in res
        assert P((2, 2) + ONE5) in res
        for nu, c in res.items():
            assert c == lr_coefficient((2,) + ONE5, (2,), nu)

    @given(partition_strategy(5), partition_strategy(5), st.integers(1, 5))
    @settings(max_examples=60, deadline=None)
    def test_truncation_is_filter(self, lam, mu, cap):
        full = tensor_schur(lam, mu)
        capped = tensor_schur(lam, mu, cap)
        assert capped == {nu: c for nu, c in full.items() if len(nu) <= cap}


class TestDouble:
    def test_examples(self):
        assert schur_of_double((1,), 3) == {(P(()), P((1,))): 1, (P((1,)), P(())): 1}
        assert schur_of_double((1, 1), 1) == {(P((1,)), P((1,))): 1}

    def test_example_pairs(self):
        res = schur_of_double((2, 2) + ONE5, 7)
        for g1, g2 in [((2,), (2,) + ONE5), ((2, 1), (2, 1, 1, 1, 1)), ((2, 1, 1), (2, 1, 1, 1))]:
            assert res[(P(g1), P(g2))] == 1
            assert res[(P(g2), P(g1))] == 1

    @pytest.mark.parametrize("a,b", [(1, 1), (1, 2), (2, 2), (2, 1)])
    def test_dimension(self, a, b):
        # S_lam(V + W) has dimension dim S_lam(C^{a+b})
        for n in range(6):
            for lam in partitions_of(n):
                total = sum(c * dim_schur(g1, a) * dim_schur(g2, b)
                            for (g1, g2), c in schur_of_double(lam).items())
                assert total == dim_schur(lam, a + b)


class TestCauchy:
    def test_examples(self):
        assert cauchy_wedge(1, 2, 3) == [(P((1,)), P((1,)))]
        assert cauchy_wedge(2, 2, 2) == [(P((1, 1)), P((2,))), (P((2,)), P((1, 1)))]
        assert cauchy_wedge(2, 1, 2) == [(P((2,)), P((1, 1)))]

    def test_dimension_identity(self):
        for a in range(1, 4):
            for b in range(1, 4):
                for n in range(7):
                    total = sum(dim_schur(mt, a) * dim_schur(mu, b) for mt, mu in cauchy_wedge(n, a, b))
                    assert total == cauchy_dimension(n, a, b)


class TestSchurComplex:
    def test_examples(self):
        assert schur_complex_terms((1,), 0) == {(P(()), P((1,))): 1}
        assert schur_complex_terms((1,), 1) == {(P((1,)), P(())): 1}
        assert schur_complex_terms((2,), 1) == {(P((1,)), P((1,))): 1}
        assert schur_complex_terms((2,), 2) == {(P((1, 1)), P(())): 1}

    @given(partition_strategy(7))
    @settings(max_examples=40, deadline=None)
    def test_degree_conservation(self, lam):
        for t in range(lam.size + 1):
            for (at, beta), c in schur_complex_terms(lam, t).items():
                assert at.size == t and beta.size == lam.size - t
                assert at.size + beta.size == lam.size
                assert c == lr_coefficient(conjugate(at), beta, lam)


def _union(a, b):
    return Partition(sorted(list(a) + list(b), reverse=True))


def _sum(a, b):
    n = max(len(a), len(b))
    return Partition(a.part(i) + b.part(i) for i in range(1, n + 1))


class TestDominanceConsequences:
    def test_lr_support_between_union_and_sum(self):
        for n in range(7):
            for a in range(n + 1):
                for g1 in partitions_of(a):
                    for g2 in partitions_of(n - a):
                        for nu in tensor_schur(g1, g2):
                            assert dominates(_sum(g1, g2), nu)
                            assert dominates(nu, _union(g1, g2))

    def test_prefix_chain_used_in_lower_bound(self):
        # whenever mu^t and nu' share a pair (g1, g2), the first 2j columns
        # of mu^t carry at least as many boxes as the first j rows of nu'
        for n in range(1, 7):
            for mt in partitions_of(n):
                for (g1, g2), c in schur_of_double(mt).items():
                    for nu1 in tensor_schur(g1, g2):
                        for j in range(1, n + 1):
                            assert sum(mt[:2 * j]) >= sum(nu1[:j])
