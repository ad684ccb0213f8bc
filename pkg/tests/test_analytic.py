import math
import unittest

import numpy as np

from physics.core.entropy import binary_entropy_bits
from physics.core.quadrature import bloch_grid
from physics.entanglement.analytic import (
    analytic_average,
    model_order,
    not_gate_scaling,
    perturbative_eigenvalues,
    raman_X_constant,
    scaling_leading_term,
    scaling_scan,
)
from physics.errors import OutOfRegimeError
from tests.oracles import midpoint_raman_X


class PerturbativeEigenvaluesTestCase(unittest.TestCase):
    def test_ground_state_has_no_entanglement(self):
        pair = perturbative_eigenvalues("jc", 0.0, 1.0, 100.0)
        self.assertEqual(pair.lambda_plus, 1.0)
        self.assertEqual(pair.lambda_minus, 0.0)
        self.assertFalse(pair.clamped)

    def test_excited_state_value(self):
        pair = perturbative_eigenvalues("jc", math.pi, 0.5 * math.pi, 2.0**12)
        expected = 0.5 * (1.0 - math.sqrt(1.0 - math.pi**2 / 2.0**12))
        self.assertAlmostEqual(pair.lambda_minus / expected, 1.0, delta=1e-12)
        self.assertAlmostEqual(pair.lambda_minus, 6.03e-4, delta=1e-6)
        self.assertAlmostEqual(pair.lambda_plus + pair.lambda_minus, 1.0, places=15)

    def test_raman_poles_agree(self):
        north = perturbative_eigenvalues("raman", 0.0, 0.7, 50.0)
        south = perturbative_eigenvalues("raman", math.pi, 0.7, 50.0)
        self.assertAlmostEqual(north.lambda_minus, south.lambda_minus, delta=1e-15)
        self.assertGreater(north.lambda_minus, 0.0)

    def test_out_of_regime_is_clamped_and_logged(self):
        with self.assertLogs("physics.entanglement.analytic", level="WARNING"):
            pair = perturbative_eigenvalues("jc", math.pi, 3.0, 4.0)
        self.assertTrue(pair.clamped)
        self.assertEqual(pair.lambda_minus, 0.5)

    def test_closed_form_is_the_bloch_average_of_the_eigenvalues(self):
        grid = bloch_grid(48, 1)
        for m, model in ((1, "jc"), (2, "raman")):
            for tau, nbar in ((0.5 * math.pi, 1e5), (0.1, 1e3)):
                x = tau**2 / nbar
                averaged = grid.average(
                    lambda theta, phi: binary_entropy_bits(perturbative_eigenvalues(model, theta, tau, nbar).lambda_minus)
                )
                # The printed linear coefficients drop a factor 1/ln 2 on the <A(theta)> term.
                mean_factor = 1.0 / 3.0 if m == 1 else 2.0 / 3.0
                corrected = analytic_average(m, tau, nbar) + mean_factor * (1.0 / math.log(2.0) - 1.0) * x
                with self.subTest(m=m, tau=tau, nbar=nbar):
                    self.assertLess(abs(averaged - corrected) / averaged, 1e-2)


class AnalyticAverageTestCase(unittest.TestCase):
    def test_quadrupole_experiment_value(self):
        self.assertAlmostEqual(analytic_average(1, 0.5 * math.pi, 1.1e9) / 2.2e-8, 1.0, delta=0.1)

    def test_raman_experiment_value(self):
        self.assertAlmostEqual(analytic_average(2, 0.5 * math.pi, 8.2e8) / 6.0e-8, 1.0, delta=0.1)

    def test_zero_time(self):
        self.assertEqual(analytic_average(1, 0.0, 10.0), 0.0)
        self.assertEqual(analytic_average(2, 0.0, 10.0), 0.0)
        self.assertLess(analytic_average(1, 1e-8, 10.0), 1e-14)

    def test_out_of_regime(self):
        with self.assertRaises(OutOfRegimeError):
            analytic_average(1, 4.0, 16.0)

    def test_model_names(self):
        self.assertEqual(model_order("jc"), 1)
        self.assertEqual(model_order("raman"), 2)
        self.assertEqual(analytic_average("raman", 0.3, 100.0), analytic_average(2, 0.3, 100.0))
        with self.assertRaises(ValueError):
            model_order(3)


class RamanXConstantTestCase(unittest.TestCase):
    def test_value(self):
        self.assertAlmostEqual(raman_X_constant(), 0.3667, delta=5e-4)

    def test_midpoint_oracle(self):
        self.assertAlmostEqual(raman_X_constant(), midpoint_raman_X(), delta=1e-6)


class NotGateScalingTestCase(unittest.TestCase):
    def test_full_form_sits_just_above_scaling_limit(self):
        nbar = 1e12
        for m in (1, 2):
            with self.subTest(m=m):
                point = not_gate_scaling(m, nbar)
                scaled = point.full * nbar / math.log2(4.0 * nbar / math.pi**2)
                ratio = scaled / (m * math.pi**2 / 12.0)
                self.assertGreater(ratio, 1.0)
                self.assertLess(ratio, 1.06)

    def test_full_form_approaches_leading_term(self):
        ratios = [not_gate_scaling(1, nbar).ratio for nbar in (1e9, 1e10, 1e11, 1e12)]
        self.assertTrue(all(later > earlier for earlier, later in zip(ratios, ratios[1:])))
        self.assertGreater(ratios[0], 0.9)
        self.assertLess(ratios[-1], 1.0)

    def test_leading_term_within_ten_percent_at_lab_photon_number(self):
        point = not_gate_scaling(1, 1.1e9)
        self.assertLess(abs(point.leading - point.full) / point.full, 0.1)

    def test_raman_doubles_at_large_photon_number(self):
        nbar = 1e12
        ratio = not_gate_scaling(2, nbar).full / not_gate_scaling(1, nbar).full
        self.assertAlmostEqual(ratio, 2.0, delta=0.05)
        self.assertAlmostEqual(scaling_leading_term(2, nbar) / scaling_leading_term(1, nbar), 2.0, places=12)

    def test_decreasing_in_photon_number(self):
        for m in (1, 2):
            with self.subTest(m=m):
                self.assertLess(not_gate_scaling(m, 1e10).full, not_gate_scaling(m, 1e9).full)

    def test_warns_below_range(self):
        with self.assertLogs("physics.entanglement.analytic", level="WARNING"):
            not_gate_scaling(1, 50.0)

    def test_scan(self):
        points = scaling_scan(1, 1e3, 1e12, 10)
        self.assertEqual(len(points), 10)
        np.testing.assert_allclose([point.nbar for point in points], np.geomspace(1e3, 1e12, 10))
        fulls = [point.full for point in points]
        self.assertTrue(all(later < earlier for earlier, later in zip(fulls, fulls[1:])))
        with self.assertRaises(ValueError):
            scaling_scan(1, 1e3, 1e2, 10)


if __name__ == "__main__":
    unittest.main()
