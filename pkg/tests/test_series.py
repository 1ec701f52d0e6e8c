"""
Seri analizi testleri.

Kapsam:
    - create_rational_function sadeleştirir ve q(0) = 1 yapar
    - find_recurrence ℚ üzerinde kesin; recurrence yoksa None
    - asymptotic_profile: λ, α, b_{i,j}, c_n ve C_emp/D_emp penceresi
    - Büyüme kararı, c_n ve yoğunluk denetimleri
    - H × K büyümesi: polylog sınırı ve eşit modül dalı
    - Örnek diziler (c_n döngüsü, digit-sum)
"""

from fractions import Fraction

import pytest
import sympy
from pytest import approx

from src.enumeration import sphere_sizes
from src.series import (
    EmptyDensityWindow,
    GrowthVerdict,
    ProductGrowthVerdict,
    SeriesError,
    asymptotic_profile,
    ball_alpha,
    c_sequence_check,
    convolve_spheres,
    create_rational_function,
    density_gap,
    digit_sum_sequence,
    example_c_cycle,
    example_series,
    expand,
    find_recurrence,
    min_linear_ratio,
    product_growth_check,
    theorem1_audit,
)


# -- Helpers -----------------------------------------------------------------

def _profile(p, q, horizon=30):
    return asymptotic_profile(create_rational_function(p, q), horizon)


def _coefficient(profile, modulus, power=0):
    return next(
        t for t in profile.coefficients
        if t.power == power and abs(profile.roots[t.root].value - modulus) < 1e-9
    )


# == 1. Rasyonel fonksiyon ==================================================

class TestRationalFunction:
    def test_common_factor_cancelled(self):
        rf = create_rational_function([1, -1], [1, -2, 1])
        assert rf.numerator == (1,)
        assert rf.denominator == (1, -1)

    def test_scaled_to_unit_constant(self):
        rf = create_rational_function([2], [2, -6])
        assert rf.numerator == (1,)
        assert rf.denominator == (1, -3)

    def test_zero_constant_denominator(self):
        with pytest.raises(SeriesError):
            create_rational_function([1], [0, 1])

    def test_expand(self):
        assert expand(create_rational_function([1, 1], [1, -3]), 4) == [1, 4, 12, 36, 108]
        assert expand(create_rational_function([1], [2]), 2) == [Fraction(1, 2), 0, 0]

    def test_order(self):
        rf = create_rational_function([1, 1], [1, -3])
        assert rf.order == 2
        assert not rf.is_polynomial


# == 2. Recurrence bulma ====================================================

class TestFindRecurrence:
    def test_free_group(self):
        rf = find_recurrence([1] + [4 * 3 ** (n - 1) for n in range(1, 11)], max_order=3)
        assert rf.numerator == (1, 1)
        assert rf.denominator == (1, -3)

    def test_constant_tail(self):
        rf = find_recurrence([1] + [2] * 11, max_order=4)
        assert rf.numerator == (1, 1)
        assert rf.denominator == (1, -1)

    def test_pentagon_from_enumeration(self, pentagon):
        rf = find_recurrence(sphere_sizes(pentagon, 8), max_order=3, confirm_terms=3)
        assert rf.numerator == (1, 2, 1)
        assert rf.denominator == (1, -3, 1)

    def test_example_fixture_recovered(self):
        rf = find_recurrence(expand(example_series(), 40), max_order=12)
        assert rf == example_series()

    def test_finite_group_polynomial(self):
        rf = find_recurrence([1, 2, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0], max_order=4)
        assert rf.is_polynomial
        assert rf.numerator == (1, 2, 2, 1)

    def test_digit_sum_has_no_short_recurrence(self):
        assert find_recurrence(digit_sum_sequence(64), max_order=8) is None

    def test_sequence_too_short(self):
        with pytest.raises(SeriesError):
            find_recurrence([1, 2, 3], max_order=4)


# == 3. Asimptotik profil ===================================================

class TestAsymptoticProfile:
    def test_free_group_profile(self):
        profile = _profile([1, 1], [1, -3])
        assert profile.dominant_modulus == approx(3)
        assert profile.dominant_degree == 0
        assert profile.start == 1
        assert profile.exact
        assert _coefficient(profile, 3).exact == sympy.Rational(4, 3)
        assert profile.c_emp == Fraction(4, 3)
        assert profile.d_emp == Fraction(4, 3)

    def test_two_simple_poles(self):
        profile = _profile([1], [1, -4, 3])
        assert profile.start == 0
        assert _coefficient(profile, 3).exact == sympy.Rational(3, 2)
        assert _coefficient(profile, 1).exact == sympy.Rational(-1, 2)

    def test_double_pole_at_one(self):
        profile = _profile([1, 2, 1], [1, -2, 1])
        assert profile.dominant_modulus == approx(1)
        assert profile.dominant_degree == 1
        assert ball_alpha(profile) == 2
        assert [float(c) for c in profile.real_c_samples()[:4]] == [4.0, 4.0, 4.0, 4.0]

    def test_ball_alpha_unshifted_when_modulus_above_one(self):
        assert ball_alpha(_profile([1, 1], [1, -3])) == 0

    def test_example_fixture(self):
        profile = asymptotic_profile(example_series(), 24)
        assert profile.dominant_modulus == approx(2)
        assert profile.dominant_degree == 0
        assert len(profile.dominant) == 3
        assert complex(_coefficient(profile, 2).value) == approx(4)
        assert complex(_coefficient(profile, complex(1, 3 ** 0.5)).value) == approx(-2)
        reals = [float(c) for c in profile.real_c_samples()[:12]]
        assert reals == approx(list(example_c_cycle()) * 2)

    def test_numeric_roots_for_cubic_factor(self):
        # 1 − t − t³: indirgenemez kübik payda, kökler sayısal
        profile = _profile([1], [1, -1, 0, -1], horizon=20)
        assert not profile.exact
        assert profile.dominant_modulus == approx(1.4655712318767682)
        seq = expand(create_rational_function([1], [1, -1, 0, -1]), 20)
        assert theorem1_audit(seq, profile).verdict is GrowthVerdict.BOUNDED_POSITIVE

    def test_polynomial_rejected(self):
        with pytest.raises(SeriesError):
            _profile([1, 2, 1], [1])


# == 4. Denetimler ==========================================================

class TestAudits:
    def test_theorem1_bounded_positive(self):
        seq = [1] + [4 * 3 ** (n - 1) for n in range(1, 11)]
        result = theorem1_audit(seq, _profile([1, 1], [1, -3]))
        assert result.verdict is GrowthVerdict.BOUNDED_POSITIVE
        assert result.c_emp == result.d_emp == Fraction(4, 3)

    def test_theorem1_liminf_zero(self):
        seq = expand(example_series(), 30)
        verdict = theorem1_audit(seq, asymptotic_profile(example_series(), 30)).verdict
        assert verdict is GrowthVerdict.LIMINF_ZERO

    def test_theorem1_without_profile(self):
        assert theorem1_audit([1, 2, 3], None).verdict is GrowthVerdict.NOT_APPLICABLE

    def test_c_check_passes_for_growth_series(self):
        assert c_sequence_check(_profile([1, 1], [1, -3]), 20).passed
        assert c_sequence_check(asymptotic_profile(example_series(), 12), 12).passed

    def test_c_check_fails_for_alternating_sign(self):
        check = c_sequence_check(_profile([1], [1, 2]), 10)
        assert not check.passed
        assert check.min_real == -1

    def test_density_gap(self):
        samples = list(example_c_cycle()) * 4
        assert density_gap(samples, 2).max_gap == 2
        assert density_gap(samples, 7).max_gap == 6
        assert density_gap(samples, 7).lead_in == 3

    def test_density_gap_empty(self):
        with pytest.raises(EmptyDensityWindow):
            density_gap([0, 1, 0], 5)


# == 5. Çarpım büyümesi =====================================================

class TestProductGrowth:
    def test_convolution_of_z_is_z_squared(self):
        z = [1] + [2] * 10
        assert convolve_spheres(z, z) == [1] + [4 * n for n in range(1, 11)]

    def test_convolution_commutes(self):
        a, b = [1, 4, 12, 36], [1, 2, 2, 2]
        assert convolve_spheres(a, b) == convolve_spheres(b, a)

    def test_length_mismatch(self):
        with pytest.raises(SeriesError):
            convolve_spheres([1, 2], [1])

    def test_free_times_z_is_bounded(self):
        f2 = [1] + [4 * 3 ** (n - 1) for n in range(1, 21)]
        z = [1] + [2] * 20
        result = product_growth_check(f2, z, _profile([1, 1], [1, -3]), _profile([1, 1], [1, -1]))
        assert result.verdict is ProductGrowthVerdict.BOUNDED
        assert result.bound == approx(8 / 3)
        assert result.ratios[1] == Fraction(8, 3) - Fraction(2, 9)
        assert max(result.ratios) < Fraction(8, 3)

    def test_equal_moduli_are_unbounded(self):
        z = [1] + [2] * 20
        profile = _profile([1, 1], [1, -1])
        result = product_growth_check(z, z, profile, profile)
        assert result.verdict is ProductGrowthVerdict.UNBOUNDED
        assert result.ratios[-1] == 80

    def test_arguments_must_be_ordered(self):
        z = [1] + [2] * 10
        f2 = [1] + [4 * 3 ** (n - 1) for n in range(1, 11)]
        with pytest.raises(SeriesError):
            product_growth_check(z, f2, _profile([1, 1], [1, -1]), _profile([1, 1], [1, -3]))


# == 6. Örnek diziler =======================================================

class TestExampleSequences:
    def test_example_fixture_values(self):
        a = expand(example_series(), 60)
        assert (a[1], a[6], a[7]) == (5, 1, 257)
        cycle = example_c_cycle()
        assert all(a[n] == cycle[n % 6] * 2**n + 1 for n in range(61))

    def test_digit_sum(self):
        seq = digit_sum_sequence(64)
        assert all(seq[2**m - 1] == 2**m for m in range(7))
        assert min_linear_ratio(seq) == (64, Fraction(1, 32))

    def test_min_linear_ratio_needs_two_terms(self):
        with pytest.raises(SeriesError):
            min_linear_ratio([1])


# == 7. Grup büyüme serileri ================================================

def _growth_profile(seq):
    order = (len(seq) - 1) // 2
    rf = find_recurrence(seq, max_order=order, confirm_terms=len(seq) - 2 * order)
    assert rf is not None and not rf.is_polynomial
    return asymptotic_profile(rf, len(seq) - 1)


class TestGroupGrowthSeries:
    @pytest.mark.parametrize("fixture", ["f2", "z2", "p3", "infinite_dihedral", "pentagon", "mixed"])
    def test_sphere_growth_is_bounded_positive(self, request, fixture):
        seq = sphere_sizes(request.getfixturevalue(fixture), 6)
        profile = _growth_profile(seq)
        result = theorem1_audit(seq, profile)
        assert result.verdict is GrowthVerdict.BOUNDED_POSITIVE
        assert result.c_emp > 0
        check = c_sequence_check(profile, profile.horizon)
        assert check.passed
        assert check.min_real >= 0
        gap = density_gap(profile.real_c_samples(), result.c_emp / 2)
        assert gap.members

    def test_mixed_series(self, mixed):
        rf = find_recurrence(sphere_sizes(mixed, 6), max_order=2, confirm_terms=3)
        assert rf.numerator == (1, 2)
        assert rf.denominator == (1, -4)

    def test_free_group_window(self, f2):
        seq = sphere_sizes(f2, 10)
        assert seq == [1] + [4 * 3 ** (n - 1) for n in range(1, 11)]
        result = theorem1_audit(seq, _growth_profile(seq))
        assert result.c_emp == result.d_emp == Fraction(4, 3)

    @pytest.mark.slow
    def test_complete_bipartite_ball_profile(self, k22):
        from src.enumeration import ball_sizes

        profile = _growth_profile(ball_sizes(k22, 6))
        assert profile.dominant_modulus == approx(3)
        assert profile.dominant_degree == 1
        assert abs(_coefficient(profile, 3, power=1).value - 8 / 3) < 1e-6
