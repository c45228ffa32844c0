"""Float-side probes: boundedness plateaus and the numerical-radius bound."""

import random

import numpy as np
import pytest

from starbimod.algebra import P_ONE, Q
from starbimod.bimodule import BimodElement, Generator
from starbimod.errors import NotHermitianError, SingularGramError
from starbimod.gns import Functional
from starbimod.moments import MomentFunctional
from starbimod.probes import (
    BOUNDED,
    GROWTH,
    boundedness_probe,
    generator_probe,
    numerical_radius_norm_check,
    plateau_verdict,
)
from starbimod.sampling import mu3, rand_d2_element

D2 = BimodElement.d_squared()


class TestBoundednessProbe:
    def test_identity_operator_is_flat(self):
        report = boundedness_probe(
            Functional.f0(), D2, MomentFunctional.gaussian(64), range(2, 9)
        )
        assert report.verdict == BOUNDED
        assert all(abs(v - 1.0) < 1e-9 for v in report.lambdas)

    def test_derivative_grows_on_gaussian(self):
        report = boundedness_probe(
            Functional.f1(), D2, MomentFunctional.gaussian(64), range(2, 11)
        )
        assert report.verdict == GROWTH
        assert all(b >= a - 1e-9 for a, b in zip(report.lambdas, report.lambdas[1:]))

    def test_unit_interval_multiplication_converges_too_slowly(self):
        # multiplication by q on [0,1] has norm 1, but the finite-degree
        # quotient climbs like the largest quadrature node, outside the
        # plateau tolerance at these degrees
        report = boundedness_probe(
            Functional.gauss_poly(Q),
            BimodElement.gauss(1),
            MomentFunctional.lebesgue_unit(64),
            range(2, 11),
        )
        assert report.verdict == GROWTH
        assert report.lambdas[-1] < 1.0
        assert abs(report.lambdas[-1] - 0.98911) < 1e-3

    def test_monotone_in_degree(self):
        rng = random.Random(11)
        mf = MomentFunctional.gaussian(64)
        for _ in range(10):
            x = rand_d2_element(rng, 2, 2)
            x = x + x.involution()
            report = boundedness_probe(Functional.f0(), x, mf, range(2, 8))
            assert all(
                b >= a - 1e-9 for a, b in zip(report.lambdas, report.lambdas[1:])
            )

    def test_requires_hermitian_element(self):
        skew = BimodElement(Generator.D2, [(Q, P_ONE)])
        with pytest.raises(NotHermitianError):
            boundedness_probe(
                Functional.f0(), skew, MomentFunctional.gaussian(32), range(2, 5)
            )

    def test_requires_three_degrees(self):
        with pytest.raises(ValueError):
            boundedness_probe(
                Functional.f0(), D2, MomentFunctional.gaussian(32), [2, 3]
            )

    def test_zero_measure_has_no_positive_part(self):
        mf = MomentFunctional.atomic([(0, 0)])
        with pytest.raises(SingularGramError):
            boundedness_probe(Functional.f0(), D2, mf, range(2, 5))

    def test_generator_probe_on_three_atoms(self):
        report = generator_probe(mu3(), range(2, 9))
        assert report.verdict == BOUNDED
        assert abs(report.lambdas[-1] - 1.0) < 1e-9

    def test_singular_gram_is_projected(self):
        # mu3 has rank 3 at every degree; the probe still runs to degree 8
        report = boundedness_probe(Functional.f0(), D2, mu3(), range(2, 9))
        assert report.verdict == BOUNDED
        assert all(abs(v - 1.0) < 1e-9 for v in report.lambdas)


class TestPlateauRule:
    def test_flat_tail(self):
        assert plateau_verdict([5.0, 1.0, 1.0, 1.0], 1e-3) == BOUNDED

    def test_growing_tail(self):
        assert plateau_verdict([1.0, 1.01, 1.02, 1.03], 1e-3) == GROWTH

    def test_zero_tail(self):
        assert plateau_verdict([0.0, 0.0, 0.0], 1e-3) == BOUNDED


class TestNumericalRadiusBound:
    def test_nilpotent_shift(self):
        report = numerical_radius_norm_check(np.array([[0, 1], [0, 0]]))
        assert abs(report.radius_estimate - 0.5) < 1e-9
        assert abs(report.norm - 1.0) < 1e-12
        assert report.holds

    def test_hermitian_case(self):
        report = numerical_radius_norm_check(np.diag([1.0, -1.0]))
        assert abs(report.radius_estimate - 1.0) < 1e-9
        assert report.norm <= 4 * report.radius_estimate + 1e-9

    def test_zero_matrix(self):
        report = numerical_radius_norm_check(np.zeros((3, 3)))
        assert report.radius_estimate == 0.0
        assert report.norm == 0.0
        assert report.holds

    def test_random_matrices(self):
        rng = np.random.default_rng(7)
        for n in range(50):
            dim = int(rng.integers(1, 9))
            t = rng.uniform(-1, 1, (dim, dim)) + 1j * rng.uniform(-1, 1, (dim, dim))
            assert numerical_radius_norm_check(t, seed=n).holds

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            numerical_radius_norm_check(np.zeros((2, 3)))
