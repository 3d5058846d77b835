"""A-hat, Chern characters, index densities and the generating-function identity."""

from fractions import Fraction

import pytest

from reflab.errors import MissingMoment, TruncationTooLow
from reflab.series import (
    CurvatureData,
    GradedSeries,
    LaurentQ,
    RootTerm,
    TraceFunctional,
    ahat_coefficients,
    generating_function_check,
    index_density,
    series_a_hat,
    series_a_hat_hbar,
    series_ch,
    series_ch_phi,
)


def ahat_division_oracle(order):
    """Independent route: long division of (x/2) by the sinh(x/2) expansion."""
    from math import factorial

    # numerator x/2 and denominator sinh(x/2) as coefficient lists in x
    num = [Fraction(0)] * (order + 2)
    num[1] = Fraction(1, 2)
    den = [Fraction(0)] * (order + 2)
    for k in range(0, (order + 1) // 2 + 1):
        den[2 * k + 1] = Fraction(1, 2 ** (2 * k + 1) * factorial(2 * k + 1))
    # both start at degree 1: divide term by term
    out = []
    for m in range(order + 1):
        acc = num[m + 1]
        for j in range(m):
            acc -= out[j] * den[m - j + 1]
        out.append(acc / den[1])
    return out


class TestAhat:
    def test_order_zero_is_one(self):
        s = series_a_hat(["x"], 0)
        assert s.constant_term == 1 and len(s.terms) == 1

    def test_one_root_matches_division_oracle_to_order_8(self):
        oracle = ahat_division_oracle(8)
        assert ahat_coefficients(8) == oracle
        s = series_a_hat(["x"], 8)
        for k in range(9):
            assert s.coefficient((k,)) == LaurentQ(oracle[k])

    def test_first_terms_frozen(self):
        s = series_a_hat(["x"], 4)
        assert s.coefficient((0,)) == 1
        assert s.coefficient((2,)) == LaurentQ(Fraction(-1, 24))
        assert s.coefficient((4,)) == LaurentQ(Fraction(7, 5760))

    def test_two_roots_product_and_symmetry(self):
        s = series_a_hat(["a", "b"], 4)
        one = series_a_hat(["a"], 4) * series_a_hat(["b"], 4)
        assert s == one
        for (ea, eb), coeff in s.terms.items():
            assert s.coefficient((eb, ea)) == coeff

    def test_only_even_degrees(self):
        s = series_a_hat(["x"], 7)
        assert all(sum(m) % 2 == 0 for m in s.terms)

    def test_multiplicative_over_disjoint_unions(self):
        both = series_a_hat(["a", "b"], 6)
        split = series_a_hat(["a"], 6) * series_a_hat(["b"], 6)
        assert both == split

    def test_scalar_root_truncated_evaluation(self):
        s = series_a_hat([Fraction(0)], 6)
        assert s.constant_term == 1 and len(s.terms) == 1


class TestCh:
    def test_no_roots_is_zero(self):
        assert series_ch([], 3).terms == {}

    def test_one_root_exponential(self):
        s = series_ch(["x"], 2)
        assert s.coefficient((0,)) == 1
        assert s.coefficient((1,)) == 1
        assert s.coefficient((2,)) == LaurentQ(Fraction(1, 2))

    def test_opposite_roots_cancel_odd_terms(self):
        s = series_ch([RootTerm("th"), RootTerm("th", LaurentQ(-1))], 2)
        assert s.coefficient((0,)) == 2
        assert s.coefficient((1,)) == LaurentQ(0)
        assert s.coefficient((2,)) == 1

    def test_additive_over_unions(self):
        u = series_ch(["a"], 4)
        v = series_ch(["b"], 4)
        uv = series_ch(["a", "b"], 4)
        assert uv == u + v

    def test_constant_term_counts_roots(self):
        assert series_ch(["a", "b", "c"], 1).constant_term == 3


class TestChPhi:
    def test_zero_symbol_gives_one(self):
        tf = TraceFunctional.trivial(4)
        s = series_ch_phi(tf, RootTerm(None, LaurentQ(0)), 4)
        assert s.constant_term == 1

    def test_all_moments_one_is_exp(self):
        tf = TraceFunctional.constant(4)
        assert series_ch_phi(tf, "z", 4) == series_ch(["z"], 4)

    def test_geometric_moments_closed_form(self):
        lam, mu = Fraction(3), Fraction(2)
        tf = TraceFunctional.geometric(lam, mu, 5)
        s = series_ch_phi(tf, "z", 5)
        # oracle: 1 + lam * (exp(mu z) - 1) summed directly
        from math import factorial

        for k in range(6):
            expected = Fraction(1) if k == 0 else lam * mu ** k / factorial(k)
            assert s.coefficient((k,)) == LaurentQ(expected)

    def test_missing_moment_raises(self):
        tf = TraceFunctional([Fraction(1), Fraction(1)])
        with pytest.raises(MissingMoment):
            series_ch_phi(tf, "z", 3)

    def test_normalization_enforced(self):
        with pytest.raises(ValueError):
            TraceFunctional([Fraction(2), Fraction(1)])

    def test_weighted_trace_combination(self):
        # two trace rows combined with weights, renormalized to m_0 = 1
        rows = [[Fraction(2), Fraction(4)], [Fraction(2), Fraction(0)]]
        tf = TraceFunctional.from_weighted_traces([Fraction(1, 2), Fraction(1, 2)], rows)
        assert tf.moment(0) == 1
        assert tf.moment(1) == LaurentQ(1)


class TestIndexDensity:
    def test_n_equals_l_is_one(self):
        cd = CurvatureData(tangent_roots=(), theta=None, normal_symbol=None)
        d = index_density(cd, 3, 3, TraceFunctional.trivial(1))
        assert d.constant_term == 1

    def test_theta_only_hbar_cancels(self):
        cd = CurvatureData(tangent_roots=(), theta="th", normal_symbol=None)
        d = index_density(cd, 1, 0, TraceFunctional.trivial(2))
        # oracle: hbar * (exp(-th/hbar))_1 = hbar * (-th/hbar) = -th
        assert d.terms == {(1,): LaurentQ(-1)}

    def test_tangent_only_ahat_coefficient(self):
        cd = CurvatureData(tangent_roots=("t",), theta=Fraction(0), normal_symbol=None)
        d = index_density(cd, 2, 0, TraceFunctional.trivial(3))
        # oracle: multiply truncations explicitly: hbar^2 * (-t^2/24)
        assert d.terms == {(2,): LaurentQ({2: Fraction(-1, 24)})}

    def test_rank_scales_ch_factor(self):
        cd = CurvatureData(tangent_roots=("t",), theta=Fraction(0),
                           normal_symbol=None, rank=5)
        d = index_density(cd, 2, 0, TraceFunctional.trivial(3))
        assert d.terms == {(2,): LaurentQ({2: Fraction(-5, 24)})}

    def test_symmetric_in_tangent_roots(self):
        cd = CurvatureData(tangent_roots=("a", "b"), theta=None, normal_symbol=None)
        d = index_density(cd, 3, 1, TraceFunctional.trivial(3))
        for mono, coeff in d.terms.items():
            swapped = (mono[1], mono[0])
            assert d.coefficient(swapped) == coeff

    def test_trivial_moments_reduce_to_ahat(self):
        cd = CurvatureData(tangent_roots=("t",), theta=None, normal_symbol="nu")
        d = index_density(cd, 2, 0, TraceFunctional.trivial(3))
        # moments delta_{k,0} and theta absent: only hbar^2 (A-hat)_2 survives
        assert d.terms == {(2, 0): LaurentQ({2: Fraction(-1, 24)})}

    def test_no_negative_total_hbar_order(self):
        tf = TraceFunctional.constant(4)
        cd = CurvatureData(tangent_roots=("t",), theta="th", normal_symbol="nu")
        d = index_density(cd, 3, 0, tf)
        for coeff in d.terms.values():
            assert coeff.min_order >= 0

    def test_truncation_too_low(self):
        cd = CurvatureData(tangent_roots=("t",), theta=None, normal_symbol=None)
        with pytest.raises(TruncationTooLow):
            index_density(cd, 3, 0, TraceFunctional.trivial(4), order=2)

    def test_hbar_grading_homogeneity(self):
        # scaling every degree-2 symbol by hbar multiplies the degree-k
        # component by hbar^k
        order = 3
        plain = series_a_hat(["t"], order) * series_ch(["th"], order)
        scaled = (series_a_hat([RootTerm("t", LaurentQ.hbar(1))], order)
                  * series_ch([RootTerm("th", LaurentQ.hbar(1))], order))
        for k in range(order + 1):
            lhs = scaled.homogeneous_component(k)
            rhs = plain.homogeneous_component(k).scale(LaurentQ.hbar(k))
            assert lhs == rhs


class TestGeneratingFunction:
    def test_order_zero(self):
        tf = TraceFunctional.trivial(0)
        report = generating_function_check([], ["g"], tf, 0)
        assert report.passed

    def test_order_two_one_variable_each(self):
        tf = TraceFunctional.constant(2)
        report = generating_function_check(["y"], ["g"], tf, 2)
        assert report.passed
        for _, path1, path2, equal in report.component_tables:
            assert equal and path1 == path2

    def test_order_six(self):
        tf = TraceFunctional.constant(6)
        report = generating_function_check(["y"], ["g"], tf, 6)
        assert report.passed

    def test_ahat_hbar_scaling_identity(self):
        direct = series_a_hat([RootTerm("x", LaurentQ.hbar(1))], 6)
        coeff_side = series_a_hat_hbar(["x"], 6)
        assert direct == coeff_side
