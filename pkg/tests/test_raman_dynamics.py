import math
import unittest

import numpy as np

from models import BlochState, CoherentSpec, RamanJointState
from physics.dynamics.raman import init_raman_state, raman_evolve, raman_number_state, raman_rates
from physics.entanglement.reduction import entropy_of, reduce_to_qubit
from tests.oracles import dense_raman_evolve


def _distance(state: RamanJointState, c0, c1) -> float:
    return math.sqrt(float(np.sum(np.abs(state.c0 - c0) ** 2) + np.sum(np.abs(state.c1 - c1) ** 2)))


def _photon_weighted_population(state: RamanJointState) -> float:
    weights = np.abs(state.c0) ** 2 + np.abs(state.c1) ** 2
    return math.fsum((state.total_photons() * weights).ravel())


class InitRamanStateTestCase(unittest.TestCase):
    def test_ground_state_in_vacuum(self):
        vacuum = CoherentSpec(alpha_mag=0.0)
        state = init_raman_state(BlochState(0.0), vacuum, vacuum)
        self.assertEqual(state.c0[0, 0], 1.0)
        self.assertEqual(int(np.count_nonzero(state.c0)), 1)
        self.assertEqual(int(np.count_nonzero(state.c1)), 0)

    def test_norm_and_purity(self):
        field = CoherentSpec.from_nbar(8.0)
        state = init_raman_state(BlochState(1.2, 0.3), field, field)
        self.assertAlmostEqual(state.norm(), 1.0, delta=1e-9)
        self.assertLess(entropy_of(reduce_to_qubit(state)), 1e-12)

    def test_windows_padded_toward_partners(self):
        field = CoherentSpec.from_nbar(64.0)
        plain = init_raman_state(BlochState(0.0), field, field, tail_eps=1e-6)
        self.assertEqual(plain.window1.n_max - plain.window2.n_max, 1)
        self.assertEqual(plain.window2.n_min, plain.window1.n_min - 1)


class RamanEvolveTestCase(unittest.TestCase):
    def test_zero_time_is_identity(self):
        field = CoherentSpec.from_nbar(2.0)
        state = init_raman_state(BlochState(0.9), field, field)
        self.assertIs(raman_evolve(state, 1.0, 0.0), state)

    def test_single_photon_flop(self):
        state = raman_number_state(BlochState(0.0), 0, 1)
        evolved = raman_evolve(state, 1.0, 0.5 * math.pi)
        self.assertAlmostEqual(abs(evolved.c1[1, 0]) ** 2, 1.0, delta=1e-12)
        self.assertAlmostEqual(evolved.norm(), 1.0, delta=1e-14)

    def test_rates(self):
        state = raman_number_state(BlochState(0.0), 2, 3)
        rates = raman_rates(state, 0.5)
        self.assertAlmostEqual(float(rates[0, 0]), 0.5 * math.sqrt(3 * 3), places=14)

    def test_not_gate_on_strong_fields(self):
        field = CoherentSpec.from_nbar(8.0)
        state = init_raman_state(BlochState(0.0), field, field)
        evolved = raman_evolve(state, 1.0, 0.5 * math.pi / field.nbar)
        self.assertGreater(float(np.sum(np.abs(evolved.c1) ** 2)), 0.75)

    def test_matches_dense_oracle(self):
        field = CoherentSpec.from_nbar(1.0)
        initial = init_raman_state(BlochState(2.1, 0.5), field, field, tail_eps=1e-10)
        self.assertLessEqual(max(initial.window1.size, initial.window2.size), 16)
        evolved = raman_evolve(initial, 1.0, 0.8)
        c0, c1 = dense_raman_evolve(initial.c0, initial.c1, initial.window1.n_min, initial.window2.n_min, 1.0, 0.8)
        self.assertLess(_distance(evolved, c0, c1), 1e-9)

    def test_composition(self):
        field = CoherentSpec.from_nbar(4.0)
        initial = init_raman_state(BlochState(1.0, 2.0), field, field)
        stepped = raman_evolve(raman_evolve(initial, 0.7, 0.2), 0.7, 0.45)
        direct = raman_evolve(initial, 0.7, 0.65)
        self.assertLess(_distance(stepped, direct.c0, direct.c1), 1e-10)

    def test_unitarity_and_photon_conservation(self):
        field = CoherentSpec.from_nbar(4.0)
        state = init_raman_state(BlochState(0.8, 1.1), field, field)
        photons = _photon_weighted_population(state)
        for _ in range(10_000):
            state = raman_evolve(state, 1.0, 1e-3)
        self.assertLess(abs(state.norm() - 1.0), 1e-8)
        self.assertAlmostEqual(_photon_weighted_population(state), photons, delta=1e-9)

    def test_invalid_rate(self):
        state = raman_number_state(BlochState(0.0), 0, 1)
        with self.assertRaises(ValueError):
            raman_evolve(state, 0.0, 1.0)


if __name__ == "__main__":
    unittest.main()
