import unittest

import numpy as np

from dimwit.bounds import (SeesawConfig, seesaw_bound, seesaw_trajectories, optimal_states_for_observables,
                           optimal_observables_for_states, random_observable)
from dimwit.core import WitnessSpec, DensityMatrix, Observable, i4_spec, eval_witness, probs_from_quantum


def quart_observables():
    return [Observable.from_signs([1, 1, 1, -1]), Observable.from_signs([1, 1, -1, -1]),
            Observable.from_signs([1, -1, 1, -1])]


class SeesawStepTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.i4 = i4_spec()

    def test_optimal_states_for_diagonal_observables_are_basis_projectors(self):
        states = optimal_states_for_observables(self.i4, quart_observables())
        for x, rho in enumerate(states):
            np.testing.assert_allclose(rho.entries, DensityMatrix.basis_projector(4, x).entries, atol=1e-12)

    def test_optimal_observables_for_basis_states(self):
        states = [DensityMatrix.basis_projector(4, x) for x in range(4)]
        observables = optimal_observables_for_states(self.i4, states)
        np.testing.assert_allclose(observables[0].entries, np.diag([1, 1, 1, -1]), atol=1e-12)
        # zero eigenvalues are assigned +1
        np.testing.assert_allclose(observables[2].entries, np.diag([1, -1, 1, 1]), atol=1e-12)
        self.assertAlmostEqual(eval_witness(self.i4, probs_from_quantum(states, observables)), 9.0, places=12)

    def test_steps_check_counts_and_form(self):
        self.assertRaises(ValueError, optimal_states_for_observables, self.i4, quart_observables()[:2])
        general = WitnessSpec(np.ones((2, 4, 3)))
        self.assertRaises(ValueError, optimal_states_for_observables, general, quart_observables())

    def test_random_observable_is_dichotomic_and_not_trivial(self):
        rng = np.random.default_rng(5)
        for d in (2, 3, 4):
            M = random_observable(d, rng)
            Observable(M)
            self.assertLess(abs(np.trace(M).real), d)
        self.assertIn(random_observable(1, rng)[0, 0], (-1, 1))


class SeesawTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.i4 = i4_spec()
        cls.config = SeesawConfig(restarts=5, seed=3)

    def test_trajectories_never_decrease(self):
        for result in seesaw_trajectories(self.i4, 3, self.config):
            steps = np.diff(result.trajectory)
            self.assertTrue(np.all(steps >= -1e-9))

    def test_same_seed_reproduces_trajectories(self):
        first = seesaw_trajectories(self.i4, 2, self.config)
        second = seesaw_trajectories(self.i4, 2, SeesawConfig(restarts=5, seed=3, max_workers=3))
        for a, b in zip(first, second):
            self.assertEqual(a.trajectory, b.trajectory)

    def test_trivial_dimension(self):
        result = seesaw_bound(self.i4, 1, self.config)
        self.assertAlmostEqual(result.value, 3.0, places=9)

    def test_realization_reproduces_the_value(self):
        result = seesaw_bound(self.i4, 2, self.config)
        realization = result.argmax
        self.assertEqual(realization.d, 2)
        self.assertAlmostEqual(eval_witness(self.i4, realization.probabilities()), result.value, places=9)
        self.assertLessEqual(result.value, self.i4.algebraic_maximum() + 1e-9)
        self.assertEqual(len(result.restart_values), 5)
        self.assertAlmostEqual(result.value, max(result.restart_values), places=9)
        for rho in realization.ensemble:
            self.assertAlmostEqual(rho.purity(), 1.0, places=9)

    def test_result_json(self):
        doc = seesaw_bound(self.i4, 2, self.config).to_json_dict()
        self.assertEqual(doc['model'], 'quantum')
        self.assertEqual(len(doc['argmax']['states']), 4)
        self.assertEqual(np.shape(doc['argmax']['observables'][0]), (2, 2, 2))
        self.assertIn('converged', doc)

    def test_invalid_arguments(self):
        self.assertRaises(ValueError, seesaw_bound, self.i4, 0, self.config)
        self.assertRaises(ValueError, SeesawConfig, restarts=0)
        self.assertRaises(ValueError, SeesawConfig, tol=0)
        self.assertRaises(ValueError, seesaw_bound, WitnessSpec(np.ones((2, 4, 3))), 2, self.config)

    def test_large_dimension_warns(self):
        with self.assertWarns(UserWarning):
            result = seesaw_bound(self.i4, 9, SeesawConfig(restarts=1, max_iters=5, seed=0))
        self.assertLessEqual(result.value, 9 + 1e-9)


class SeesawAcceptanceTest(unittest.TestCase):
    """Quantum bounds of I4 with 100 restarts."""

    @classmethod
    def setUpClass(cls):
        cls.i4 = i4_spec()
        cls.config = SeesawConfig(restarts=100, seed=0)

    def test_qubit(self):
        self.assertAlmostEqual(seesaw_bound(self.i4, 2, self.config).value, 6.0, delta=1e-3)

    def test_qutrit(self):
        self.assertAlmostEqual(seesaw_bound(self.i4, 3, self.config).value, 7.97, delta=1e-2)

    def test_quart(self):
        self.assertAlmostEqual(seesaw_bound(self.i4, 4, self.config).value, 9.0, delta=1e-6)


if __name__ == '__main__':
    unittest.main()
