"""Identity verifiers against brute-force enumeration and exact binomials."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sierpinski.algebra import X, Y, binomial
from sierpinski.digits import carry_free, sum_of_digits
from sierpinski.errors import SizeLimitError
from sierpinski.identities import (
    Report,
    digital_expansion,
    exponent_pair_counts,
    pascal_mod,
    verify_additivity_form,
    verify_classical_reduction,
    verify_digital_binomial,
    verify_kummer,
    verify_triangle_matrix_correspondence,
)


def brute_force_expansion(m):
    # oracle: scan [0, m], long-addition carry test, digit sums from scratch
    return [
        (k, sum_of_digits(k), sum_of_digits(m - k))
        for k in range(m + 1)
        if carry_free(k, m - k)
    ]


class TestDigitalExpansion:
    def test_m_three(self):
        t = digital_expansion(3)
        assert [(k, a, b) for k, a, b in t.terms] == [(0, 0, 2), (1, 1, 1), (2, 1, 1), (3, 2, 0)]

    def test_m_zero(self):
        assert digital_expansion(0).terms == ((0, 0, 0),)

    def test_m_five(self):
        # brute-force derived; the final term is x^s(0) y^s(5), nothing else
        t = digital_expansion(5)
        assert [k for k, _, _ in t.terms] == [0, 1, 4, 5]
        assert [(a, b) for _, a, b in t.terms] == [(0, 2), (1, 1), (1, 1), (2, 0)]
        assert t.terms == tuple(brute_force_expansion(5))

    def test_against_brute_force(self):
        for m in range(300):
            assert digital_expansion(m).terms == tuple(brute_force_expansion(m))

    def test_structural_invariants(self):
        for m in range(1 << 10):
            t = digital_expansion(m)
            sigma = sum_of_digits(m)
            assert len(t) == 1 << sigma
            assert all(a + b == sigma for _, a, b in t.terms)
            ks = [k for k, _, _ in t.terms]
            assert sorted(m - k for k in ks) == ks  # complement is an involution


class TestExponentPairCounts:
    def test_matches_termlist_aggregation(self):
        rng = random.Random(31337)
        for _ in range(50):
            m = rng.randrange(1 << 16)
            counts = {}
            for _, a, b in digital_expansion(m).terms:
                counts[(a, b)] = counts.get((a, b), 0) + 1
            assert exponent_pair_counts(m) == counts

    def test_large_m_spot(self):
        # 2^39 + 2^17 + 1 has three bits; eight summands
        m = (1 << 39) | (1 << 17) | 1
        assert exponent_pair_counts(m) == {(0, 3): 1, (1, 2): 3, (2, 1): 3, (3, 0): 1}

    def test_zero(self):
        assert exponent_pair_counts(0) == {(0, 0): 1}


class TestVerifyDigitalBinomial:
    def test_m_three_both_sides(self):
        report = verify_digital_binomial(3)
        assert report.passed
        assert report.lhs == report.rhs == "1*X^2 + 2*X^1*Y^1 + 1*Y^2"

    def test_m_zero(self):
        report = verify_digital_binomial(0)
        assert report.passed and report.lhs == "1"

    def test_m_seven_is_cubic(self):
        report = verify_digital_binomial(7)
        assert report.passed
        assert report.lhs == str(X**3 + 3 * X**2 * Y + 3 * X * Y**2 + Y**3)

    def test_exhaustive_small(self):
        for m in range(1 << 10):
            assert verify_digital_binomial(m).passed

    def test_random_large(self):
        rng = random.Random(2718)
        done = 0
        while done < 25:
            m = rng.getrandbits(40)
            if sum_of_digits(m) > 24:
                continue
            assert verify_digital_binomial(m).passed
            done += 1

    def test_exponent_cap(self):
        with pytest.raises(SizeLimitError, match="cap"):
            verify_digital_binomial((1 << 25) - 1)
        assert verify_digital_binomial((1 << 25) - 1, exponent_cap=25).passed

    def test_report_text_fields(self):
        text = verify_digital_binomial(3).to_text()
        lines = text.splitlines()
        assert lines[0] == "identity: digital-binomial"
        assert lines[1] == "parameter: m=3"
        assert lines[2] == "status: pass"
        assert lines[3].startswith("lhs: ")
        assert lines[4].startswith("rhs: ")

    def test_failing_report_shape(self):
        report = Report(
            identity="digital-binomial",
            parameter="m=0",
            passed=False,
            lhs="1",
            rhs="0",
            first_mismatch="coefficient of X^0*Y^0 differs by 1",
        )
        assert not report
        assert report.status == "fail"
        assert "first_mismatch:" in report.to_text()


class TestVerifyAdditivityForm:
    def test_m_five(self):
        assert verify_additivity_form(5)

    def test_m_zero(self):
        assert verify_additivity_form(0)

    def test_powers_of_two(self):
        for j in range(12):
            assert verify_additivity_form(1 << j)

    def test_exhaustive_small(self):
        for m in range(1 << 10):
            assert verify_additivity_form(m)

    def test_is_oracle_for_summand_enumerator(self):
        from sierpinski.digits import carry_free_summands

        for m in range(256):
            by_scan = [k for k in range(m + 1) if carry_free(k, m - k)]
            by_sums = [
                k
                for k in range(m + 1)
                if sum_of_digits(k) + sum_of_digits(m - k) == sum_of_digits(m)
            ]
            assert by_scan == by_sums == carry_free_summands(m)


class TestClassicalReduction:
    def test_n_one(self):
        counts = exponent_pair_counts(1)
        assert counts == {(0, 1): 1, (1, 0): 1}
        assert verify_classical_reduction(1)

    def test_n_two_coefficients(self):
        counts = exponent_pair_counts(3)
        assert [counts[(k, 2 - k)] for k in range(3)] == [1, 2, 1]

    def test_n_five_pascal_row(self):
        counts = exponent_pair_counts(31)
        assert [counts[(k, 5 - k)] for k in range(6)] == [1, 5, 10, 10, 5, 1]

    def test_holds_through_twelve(self):
        for n in range(1, 13):
            assert verify_classical_reduction(n)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            verify_classical_reduction(0)


class TestVerifyKummer:
    def test_worked_example(self):
        from sierpinski.algebra import p_adic_valuation
        from sierpinski.digits import carry_count

        assert binomial(4, 2) == 6
        assert p_adic_valuation(6, 2) == 1 == carry_count(4, 2, 2)

    def test_central_even_entry(self):
        # row "1 0 1" of the mod-2 triangle: C(2,1) = 2 is even
        assert binomial(2, 1) == 2
        assert pascal_mod(3, 2).row(2) == (1, 0, 1)

    def test_passes_small(self):
        for p in (2, 3, 5, 7):
            report = verify_kummer(64, p)
            assert report.passed, report.to_text()

    def test_rejects_composite(self):
        with pytest.raises(ValueError):
            verify_kummer(16, 6)

    def test_practical_limit(self):
        with pytest.raises(SizeLimitError):
            verify_kummer(2048, 2)
        verify_kummer(16, 2, max_rows=16)


class TestPascalMod:
    def test_row_four(self):
        assert pascal_mod(8, 2).row(4) == (1, 0, 0, 0, 1)

    def test_row_zero(self):
        assert pascal_mod(1, 2).row(0) == (1,)

    def test_row_seven_all_ones(self):
        assert pascal_mod(8, 2).row(7) == (1, 1, 1, 1, 1, 1, 1, 1)

    def test_structural_invariants(self):
        for p in (2, 3, 5):
            tri = pascal_mod(40, p)
            assert tri.rows == 40
            for n in range(40):
                row = tri.row(n)
                assert len(row) == n + 1
                assert row[0] == row[-1] == 1
                assert all(0 <= c < p for c in row)

    def test_against_big_integer_binomials(self):
        # second route: reduce exact binomials, compare to the recurrence
        for p in (2, 3, 5, 7):
            tri = pascal_mod(64, p)
            for n in range(64):
                assert tri.row(n) == tuple(binomial(n, k) % p for k in range(n + 1))

    def test_rejects_composite_modulus(self):
        with pytest.raises(ValueError):
            pascal_mod(8, 9)

    def test_row_limit(self):
        with pytest.raises(SizeLimitError):
            pascal_mod((1 << 14) + 1, 2)


class TestTriangleMatrixCorrespondence:
    def test_order_three(self):
        assert verify_triangle_matrix_correspondence(3)

    def test_order_zero(self):
        assert verify_triangle_matrix_correspondence(0)

    def test_order_six(self):
        assert verify_triangle_matrix_correspondence(6)


class TestNumericCrossCheck:
    @settings(max_examples=30, deadline=None)
    @given(
        st.integers(0, 2**20 - 1),
        st.integers(-1000, 1000),
        st.integers(-1000, 1000),
    )
    def test_evaluations_agree(self, m, x0, y0):
        sigma = sum_of_digits(m)
        lhs = ((X + Y) ** sigma).eval(x0, y0)
        rhs = digital_expansion(m).collect().eval(x0, y0)
        assert lhs == rhs == (x0 + y0) ** sigma
