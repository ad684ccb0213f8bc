import math
import unittest

from physics.core.constants import CONSTANTS
from physics.dynamics.leakage import LeakageMonitor
from physics.experiments.reports import (
    coupling_from_flux,
    dipole_report,
    experiment_report,
    photon_flux,
    quadrupole_report,
    raman_report,
    scaled_config,
    single_mode_validity,
)
from schemas import DipoleConfig, QuadrupoleConfig, RamanConfig

E_A0 = CONSTANTS.e_a0
TWO_PI = 2.0 * math.pi


def quadrupole_config(**overrides) -> QuadrupoleConfig:
    fields = dict(
        area_A=100e-12,
        power_P=100e-6,
        wavelength=730e-9,
        quadrupole_Q=CONSTANTS.e_a0_sq,
        lifetime_tau0=1.0,
    )
    fields.update(overrides)
    return QuadrupoleConfig(**fields)


def dipole_config(**overrides) -> DipoleConfig:
    fields = dict(area_A=100e-12, power_P=100e-6, wavelength=850e-9, dipole_d=3.095 * E_A0, lifetime_tau0=31e-9)
    fields.update(overrides)
    return DipoleConfig(**fields)


def raman_config(**overrides) -> RamanConfig:
    fields = dict(
        area_A=100e-12,
        power_P=0.5e-3,
        wavelength=800e-9,
        dipole_d=0.2 * E_A0,
        detuning_delta=TWO_PI * 10e9,
        gamma_excited=TWO_PI * 6.4e6,
    )
    fields.update(overrides)
    return RamanConfig(**fields)


class QuadrupoleReportTestCase(unittest.TestCase):
    def setUp(self):
        self.report = quadrupole_report(quadrupole_config())

    def test_reproduces_calcium_numbers(self):
        self.assertAlmostEqual(self.report.T_not / 3.1e-6, 1.0, delta=0.05)
        self.assertAlmostEqual(self.report.nbar / 1.1e9, 1.0, delta=0.05)
        self.assertAlmostEqual(self.report.entanglement_E / 2.2e-8, 1.0, delta=0.1)
        self.assertAlmostEqual(self.report.p_spon / 1.6e-6, 1.0, delta=0.05)

    def test_effective_dipole(self):
        self.assertAlmostEqual(self.report.d_eff, TWO_PI * CONSTANTS.e_a0_sq / 730e-9, delta=1e-45)
        self.assertAlmostEqual(self.report.omega_L, TWO_PI * CONSTANTS.c_light / 730e-9, delta=1.0)

    def test_not_condition(self):
        g_alpha = self.report.coupling_g * math.sqrt(self.report.nbar)
        self.assertAlmostEqual(g_alpha * self.report.T_not, 0.5 * math.pi, delta=1e-12)

    def test_validity_ratios(self):
        r1, r2 = self.report.validity_ratios
        self.assertAlmostEqual(r1, 0.031, delta=0.002)
        self.assertAlmostEqual(r2, 0.124, delta=0.005)
        self.assertEqual(self.report.warnings, ())

    def test_power_scaling(self):
        quadrupled = quadrupole_report(quadrupole_config(power_P=400e-6))
        self.assertAlmostEqual(quadrupled.T_not / self.report.T_not, 0.5, delta=1e-12)
        self.assertAlmostEqual(quadrupled.nbar / self.report.nbar, 2.0, delta=1e-12)

    def test_area_scaling(self):
        doubled = quadrupole_report(quadrupole_config(area_A=200e-12))
        self.assertAlmostEqual(doubled.T_not / self.report.T_not, math.sqrt(2.0), delta=1e-12)
        self.assertAlmostEqual(doubled.nbar / self.report.nbar, math.sqrt(2.0), delta=1e-12)

    def test_tighter_focus_scenario(self):
        tight = quadrupole_report(scaled_config(quadrupole_config(), area_factor=0.01, power_factor=0.01))
        self.assertAlmostEqual(tight.T_not / self.report.T_not, 1.0, delta=1e-12)
        self.assertGreater(tight.entanglement_E / self.report.entanglement_E, 70.0)
        self.assertGreater(tight.entanglement_E, 1e-6)
        self.assertLess(tight.entanglement_E, 3e-6)
        self.assertTrue(any("lambda^2" in message for message in tight.warnings))


class DipoleReportTestCase(unittest.TestCase):
    def test_reproduces_cesium_row(self):
        report = dipole_report(dipole_config())
        self.assertAlmostEqual(report.T_not / 0.46e-9, 1.0, delta=0.05)
        self.assertAlmostEqual(report.entanglement_E / 7.6e-5, 1.0, delta=0.1)
        self.assertAlmostEqual(report.p_spon / 0.0073, 1.0, delta=0.1)

    def test_dipole_scaling(self):
        base = dipole_report(dipole_config())
        doubled = dipole_report(dipole_config(dipole_d=2 * 3.095 * E_A0))
        self.assertAlmostEqual(doubled.T_not / base.T_not, 0.5, delta=1e-12)

    def test_dipole_entangles_far_more_than_quadrupole(self):
        dipole = dipole_report(dipole_config())
        quadrupole = quadrupole_report(quadrupole_config())
        self.assertGreater(dipole.entanglement_E / quadrupole.entanglement_E, 1e3)


class RamanReportTestCase(unittest.TestCase):
    def setUp(self):
        self.report = raman_report(raman_config())

    def test_reproduces_raman_numbers(self):
        self.assertAlmostEqual(self.report.T_not / 0.41e-6, 1.0, delta=0.05)
        self.assertAlmostEqual(self.report.nbar / 8.2e8, 1.0, delta=0.05)
        self.assertAlmostEqual(self.report.entanglement_E / 6.0e-8, 1.0, delta=0.1)
        self.assertAlmostEqual(self.report.p_spon / 5e-4, 1.0, delta=0.1)

    def test_not_condition_and_decay_rate(self):
        raman_rate = self.report.coupling_g * self.report.nbar
        self.assertAlmostEqual(raman_rate * self.report.T_not, 0.5 * math.pi, delta=1e-12)
        expected_gamma = (TWO_PI * 6.4e6 / (TWO_PI * 10e9)) * raman_rate
        self.assertAlmostEqual(self.report.gamma_eff / expected_gamma, 1.0, delta=1e-12)

    def test_detuning_scaling(self):
        doubled = raman_report(raman_config(detuning_delta=TWO_PI * 20e9))
        self.assertAlmostEqual(doubled.T_not / self.report.T_not, 2.0, delta=1e-12)
        self.assertAlmostEqual(doubled.nbar / self.report.nbar, 2.0, delta=1e-12)
        self.assertAlmostEqual(doubled.p_spon / self.report.p_spon, 0.5, delta=1e-12)

    def test_area_scaling(self):
        doubled = raman_report(raman_config(area_A=200e-12))
        self.assertAlmostEqual(doubled.T_not / self.report.T_not, 2.0, delta=1e-12)
        self.assertAlmostEqual(doubled.nbar / self.report.nbar, 2.0, delta=1e-12)

    def test_small_detuning_warns(self):
        with self.assertLogs("physics.experiments.reports", level="WARNING"):
            report = raman_report(raman_config(detuning_delta=TWO_PI * 100e6))
        self.assertTrue(any("detuning" in message for message in report.warnings))


class HelpersTestCase(unittest.TestCase):
    def test_coupling_from_flux_matches_power_form(self):
        omega_L = TWO_PI * CONSTANTS.c_light / 730e-9
        d = 1e-31
        g_alpha = coupling_from_flux(d, omega_L, photon_flux(1e-4, omega_L), 1e-10)
        expected = (d / CONSTANTS.hbar) * math.sqrt(1e-4 / (2 * CONSTANTS.eps0 * CONSTANTS.c_light * 1e-10))
        self.assertAlmostEqual(g_alpha / expected, 1.0, delta=1e-12)

    def test_single_mode_validity(self):
        self.assertEqual(single_mode_validity(0.0, 1e-6, 1e5, 1e9), (0.0, 0.0))
        r1, _ = single_mode_validity(TWO_PI / 2e-6, 2e-6, 1e5, 1e9)
        self.assertAlmostEqual(r1, 1.0, places=12)
        with self.assertRaises(ValueError):
            single_mode_validity(1.0, 0.0, 1.0, 1.0)

    def test_scaled_config_rejects_non_positive_factors(self):
        with self.assertRaises(ValueError):
            scaled_config(quadrupole_config(), area_factor=0.0)

    def test_simulation_skipped_above_ceiling(self):
        report = experiment_report("quadrupole", quadrupole_config(), simulate=True)
        self.assertIsNone(report.simulated_E)
        self.assertTrue(any("simulation skipped" in note for note in report.notes))

    def test_simulation_below_ceiling(self):
        # A weak, slow pulse: few photons per gate.
        cfg = dipole_config(power_P=1e-15, area_A=1e-8, lifetime_tau0=1.0)
        report = dipole_report(cfg, simulate=True)
        self.assertLess(report.nbar, 2.0**14)
        self.assertIsNotNone(report.simulated_E)
        self.assertGreater(report.simulated_E, 0.0)
        self.assertLess(report.simulated_E, 1.0)

    def test_simulation_records_leakage_on_shared_monitor(self):
        monitor = LeakageMonitor()
        cfg = dipole_config(power_P=1e-15, area_A=1e-8, lifetime_tau0=1.0)
        experiment_report("dipole", cfg, simulate=True, monitor=monitor)
        self.assertGreater(monitor.observations, 0)
        self.assertLess(monitor.max_mass, 1e-10)

    def test_unknown_kind(self):
        with self.assertRaises(ValueError):
            experiment_report("cavity", quadrupole_config())


if __name__ == "__main__":
    unittest.main()
