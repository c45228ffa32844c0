"""Moment functionals, the GNS truncation, and the paired functionals."""

import math
import random
from fractions import Fraction

import pytest

from starbimod.algebra import P_ONE, Poly, Q, Scalar
from starbimod.bimodule import BimodElement, Generator
from starbimod.errors import (
    MomentMismatchError,
    MomentOutOfRangeError,
    NotPositiveError,
    UnsupportedVariantError,
    VariantMismatchError,
)
from starbimod.exactla import Matrix
from starbimod.gns import (
    Functional,
    build_gns,
    check_cauchy_schwarz,
    check_identity,
    check_intertwiner,
)
from starbimod.moments import MomentFunctional
from starbimod.sampling import (
    atoms012,
    mu3,
    rand_d2_element,
    rand_gauss_element,
    rand_poly,
)

D2 = BimodElement.d_squared()


class TestMoments:
    def test_atomic_counting(self):
        assert mu3().moment(0) == Scalar(3)
        assert mu3().moment(2) == Scalar(2)
        assert mu3().moment(3) == Scalar(0)

    def test_gaussian_closed_form(self):
        # independent oracle: m_{2n} = (2n)! / (2^n n!)
        mf = MomentFunctional.gaussian(20)
        for n in range(10):
            expected = Fraction(
                math.factorial(2 * n), 2**n * math.factorial(n)
            )
            assert mf.moment(2 * n) == Scalar(expected)
            if n:
                assert mf.moment(2 * n - 1) == Scalar(0)

    def test_lebesgue(self):
        mf = MomentFunctional.lebesgue_unit(8)
        assert mf.moment(3) == Scalar(Fraction(1, 4))

    def test_out_of_range(self):
        mf = MomentFunctional.from_moments([1, 0, 2])
        with pytest.raises(MomentOutOfRangeError):
            mf.moment(3)

    def test_negative_weight_rejected(self):
        with pytest.raises(ValueError):
            MomentFunctional.atomic([(0, -1)])

    def test_pairing_reproduces_moments(self):
        mf = mu3()
        for j in range(4):
            for k in range(4):
                assert mf.pairing(Poly.monomial(j), Poly.monomial(k)) == mf.moment(
                    j + k
                )

    def test_json_roundtrip(self):
        for mf in (mu3(), MomentFunctional.from_moments([3, 0, 2])):
            assert MomentFunctional.from_json(mf.to_json()) == mf


class TestBuildGns:
    def test_mu3_gram(self):
        realization = build_gns(mu3(), 2)
        assert realization.gram == Matrix([[3, 0, 2], [0, 2, 0], [2, 0, 2]])
        assert realization.kernel == ()
        assert realization.rank == 3

    def test_mu3_kernel_at_degree_3(self):
        realization = build_gns(mu3(), 3)
        assert realization.kernel == (Q**3 - Q,)

    def test_kernel_vectors_annihilate_gram(self):
        realization = build_gns(mu3(), 5)
        for v in realization.kernel:
            for k in range(6):
                assert mu3().pairing(v, Poly.monomial(k)).is_zero()

    def test_kernel_is_an_ideal_under_truncation(self):
        mf = mu3()
        realization = build_gns(mf, 5)
        for v in realization.kernel:
            shifted = v * Q
            if shifted.degree <= 5:
                for k in range(6):
                    assert mf.pairing(shifted, Poly.monomial(k)).is_zero()

    def test_indefinite_sequence_rejected(self):
        with pytest.raises(NotPositiveError):
            build_gns(MomentFunctional.from_moments([1, 0, -1]), 1)

    def test_zero_diagonal_rejected(self):
        with pytest.raises(NotPositiveError):
            build_gns(MomentFunctional.from_moments([0, 1, 0]), 1)

    def test_complex_moments_rejected(self):
        with pytest.raises(NotPositiveError):
            build_gns(MomentFunctional.from_moments([Scalar(1), Scalar(0, 1), Scalar(1)]), 1)

    def test_cyclic_vector_and_shift(self):
        realization = build_gns(mu3(), 4)
        assert realization.cyclic_vector() == P_ONE
        assert realization.shift_table == {0: 1, 1: 2, 2: 3, 3: 4}


class TestFunctionalValues:
    def test_f0_counts_mass(self):
        assert Functional.f0().value(D2, mu3()) == Scalar(3)

    def test_f1_example(self):
        x = BimodElement(Generator.D2, [(Q, Q)])
        assert Functional.f1().value(x, atoms012()) == Scalar(3)

    def test_f2_example(self):
        x = BimodElement(Generator.D2, [(P_ONE, Q * Q)])
        assert Functional.f2().value(x, mu3()) == Scalar(6)

    def test_gauss_poly_weight(self):
        func = Functional.gauss_poly(Q)
        assert func.value(BimodElement.gauss(Q), mu3()) == Scalar(2)

    def test_gauss_atoms(self):
        func = Functional.gauss_atoms([1, 2, 3])
        # sum w_i v_i p(x_i) with p = q at atoms -1, 0, 1
        assert func.value(BimodElement.gauss(Q), mu3()) == Scalar(2)

    def test_tag_mismatch(self):
        with pytest.raises(VariantMismatchError):
            Functional.f0().value(BimodElement.gauss(1), mu3())
        with pytest.raises(VariantMismatchError):
            Functional.gauss_poly(Q).value(D2, mu3())

    def test_gauss_atoms_needs_atomic(self):
        func = Functional.gauss_atoms([1, 2, 3])
        with pytest.raises(VariantMismatchError):
            func.value(BimodElement.gauss(1), MomentFunctional.gaussian(8))

    def test_value_is_class_function(self):
        rng = random.Random(83)
        for _ in range(80):
            x = rand_d2_element(rng, 3, 3)
            y = BimodElement.from_weyl(x.weyl())
            for func in (Functional.f0(), Functional.f1(), Functional.f2()):
                assert func.value(x, mu3()) == func.value(y, mu3())


class TestThetaPolynomials:
    def test_lowered_identity(self):
        b = rand_poly(random.Random(5), 4)
        assert Functional.f0().theta(D2, b) == b

    def test_lowered_derivative(self):
        assert Functional.f1().theta(D2, Q * Q) == 2 * Q

    def test_lowered_second_derivative(self):
        assert Functional.f2().theta(D2, Q**3) == 6 * Q

    def test_sandwiched_zero(self):
        x = BimodElement(Generator.D2, [(Q, Q)])
        assert Functional.f2().theta(x, P_ONE).is_zero()

    def test_atom_variant_has_no_polynomial_operator(self):
        with pytest.raises(UnsupportedVariantError):
            Functional.gauss_atoms([1, 2, 3]).theta(BimodElement.gauss(1), Q)

    def test_theta_respects_classes(self):
        rng = random.Random(89)
        for _ in range(80):
            x = rand_d2_element(rng, 3, 3)
            y = BimodElement.from_weyl(x.weyl())
            b = rand_poly(rng, 3)
            for func in (Functional.f0(), Functional.f1(), Functional.f2()):
                assert func.theta(x, b) == func.theta(y, b)


class TestIdentity:
    def test_pinned_d2_case(self):
        report = check_identity(Functional.f0(), Q, D2, Q, mu3())
        assert report.lhs == Scalar(2)
        assert report.rhs == Scalar(2)
        assert report.equal

    def test_pinned_f1_case(self):
        report = check_identity(Functional.f1(), P_ONE, D2, Q, atoms012())
        assert report.lhs == Scalar(3) and report.equal

    def test_pinned_gauss_case(self):
        report = check_identity(
            Functional.gauss_poly(Q), Q, BimodElement.gauss(1), P_ONE, mu3()
        )
        assert report.lhs == Scalar(2) and report.equal

    def test_random_exactness(self):
        rng = random.Random(97)
        measures = [mu3(), atoms012(), MomentFunctional.gaussian(40)]
        for _ in range(150):
            func = rng.choice(
                [Functional.f0(), Functional.f1(), Functional.f2()]
            )
            mf = rng.choice(measures)
            report = check_identity(
                func,
                rand_poly(rng, 4),
                rand_d2_element(rng, 3, 3),
                rand_poly(rng, 4),
                mf,
            )
            assert report.equal

    def test_atom_coordinate_identity(self):
        rng = random.Random(101)
        for _ in range(60):
            func = Functional.gauss_atoms(
                [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(3)]
            )
            report = check_identity(
                func,
                rand_poly(rng, 4),
                rand_gauss_element(rng, 3),
                rand_poly(rng, 4),
                mu3(),
            )
            assert report.equal


class TestHermiticity:
    def test_f0_is_hermitian(self):
        rng = random.Random(103)
        f0 = Functional.f0()
        for _ in range(100):
            x = rand_d2_element(rng, 3, 3)
            assert f0.value(x.involution(), mu3()) == f0.value(x, mu3()).conjugate()

    def test_gauss_real_weight_is_hermitian(self):
        rng = random.Random(107)
        func = Functional.gauss_poly(Q * Q - 1)
        for _ in range(100):
            x = rand_gauss_element(rng, 3)
            assert func.value(x.involution(), mu3()) == func.value(
                x, mu3()
            ).conjugate()

    def test_f1_f2_involution_transport(self):
        # F1 and F2 are not hermitian; under the involution they transport
        # along the triple law (h0, h1, h2) -> (h0+, h0+' - h1+, ...).
        rng = random.Random(109)
        mf = MomentFunctional.gaussian(40)
        for _ in range(100):
            x = rand_d2_element(rng, 3, 3)
            h0, h1, h2 = x.triple()
            f1 = Functional.f1()
            lhs1 = f1.value(x.involution(), mf)
            rhs1 = mf.apply(h0.derivative() - h1).conjugate()
            assert lhs1 == rhs1
            f2 = Functional.f2()
            lhs2 = f2.value(x.involution(), mf)
            rhs2 = mf.apply(
                h0.derivative(2) - 2 * h1.derivative() + h2
            ).conjugate()
            assert lhs2 == rhs2


class TestCauchySchwarz:
    def test_pinned_case(self):
        report = check_cauchy_schwarz(Functional.f0(), Q, D2, mu3())
        assert report.lhs_squared == 0
        assert report.bound == 6
        assert report.holds

    def test_equality_at_proportional_input(self):
        x = BimodElement(Generator.D2, [(Q, Q * Q - 1)])
        func = Functional.f1()
        h = func.coefficient_poly(x)
        report = check_cauchy_schwarz(func, h, x, mu3())
        assert report.lhs_squared == report.bound

    def test_pinned_equality_case(self):
        x = BimodElement(Generator.D2, [(P_ONE, Q * Q)])
        report = check_cauchy_schwarz(Functional.f2(), P_ONE, x, mu3())
        assert report.lhs_squared == 36 and report.bound == 36

    def test_random_cases_hold(self):
        rng = random.Random(113)
        measures = [mu3(), atoms012(), MomentFunctional.lebesgue_unit(40)]
        variants = [Functional.f0(), Functional.f1(), Functional.f2()]
        for _ in range(150):
            report = check_cauchy_schwarz(
                rng.choice(variants),
                rand_poly(rng, 4),
                rand_d2_element(rng, 3, 3),
                rng.choice(measures),
            )
            assert report.holds

    def test_gauss_atom_variant_holds(self):
        rng = random.Random(127)
        for _ in range(60):
            func = Functional.gauss_atoms(
                [Fraction(rng.randint(-4, 4)) for _ in range(3)]
            )
            report = check_cauchy_schwarz(
                func, rand_poly(rng, 4), rand_gauss_element(rng, 3), mu3()
            )
            assert report.holds


class TestUniqueness:
    def test_permuted_atoms(self):
        permuted = MomentFunctional.atomic([(1, 1), (0, 1), (-1, 1)])
        report = check_intertwiner(mu3(), permuted, 6)
        assert report.verified

    def test_point_mass_presentations(self):
        point = MomentFunctional.atomic([(0, 2)])
        moments = MomentFunctional.from_moments([2] + [0] * 12)
        assert check_intertwiner(point, moments, 6).verified

    def test_mismatch_detected(self):
        with pytest.raises(MomentMismatchError):
            check_intertwiner(mu3(), atoms012(), 4)
