import unittest

import numpy as np

from dimwit.bounds import SeesawConfig
from dimwit.core import i4_spec, WitnessSpec
from dimwit.photonic import analytic_i4_max, QUART_IDEAL_I4
from dimwit.stats import BoundsTable, certify, confidence_to_k


class CertifyTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.bounds = BoundsTable.builtin('I4')

    def test_qubit_measurement(self):
        report = certify(5.66, 0.15, 0, self.bounds)
        self.assertEqual(report.min_classical_dim, 3)
        self.assertEqual(report.min_quantum_dim, 2)
        self.assertTrue(report.quantum_certified_given_dim[2])
        self.assertFalse(report.quantum_certified_given_dim[3])

    def test_qutrit_measurement(self):
        self.assertEqual(certify(7.57, 0.13, 0, self.bounds).min_quantum_dim, 3)

    def test_quart_measurement(self):
        report = certify(8.57, 0.06, 0, self.bounds)
        self.assertEqual(report.min_quantum_dim, 4)
        self.assertAlmostEqual(report.sigmas_above[('quantum', 3)], 10.0, places=9)
        self.assertGreater(report.sigmas_above[('classical', 3)], 10.0)

    def test_value_consistent_with_a_bit(self):
        for sigma in (0.0, 0.1, 1.0):
            self.assertEqual(certify(4.9, sigma, 0, self.bounds).min_classical_dim, 2)

    def test_value_above_the_table(self):
        report = certify(9.5, 0.0, 0, self.bounds)
        self.assertIsNone(report.min_classical_dim)
        doc = report.to_json_dict()
        self.assertEqual(doc['min_classical_dim'], '>4')
        self.assertEqual(doc['min_quantum_dim'], '>4')
        self.assertIsNone(doc['sigmas_above']['quantum']['3'])

    def test_confidence_multiplier_shifts_the_threshold(self):
        for value, sigma, k in ((5.66, 0.15, 3), (7.57, 0.13, 1), (8.57, 0.06, 2.5), (6.2, 0.5, 0)):
            robust = certify(value, sigma, k, self.bounds)
            point = certify(value - k * sigma, 0, 0, self.bounds)
            self.assertEqual(robust.min_classical_dim, point.min_classical_dim)
            self.assertEqual(robust.min_quantum_dim, point.min_quantum_dim)
            self.assertEqual(robust.quantum_certified_given_dim, point.quantum_certified_given_dim)

    def test_larger_values_never_lower_the_dimensions(self):
        def dims(value):
            report = certify(value, 0.1, 1, self.bounds)
            return [np.inf if d is None else d for d in (report.min_classical_dim, report.min_quantum_dim)]
        previous = dims(0.0)
        for value in np.linspace(0, 10, 201):
            current = dims(value)
            self.assertTrue(all(c >= p for c, p in zip(current, previous)))
            previous = current

    def test_ideal_presets(self):
        self.assertEqual(certify(analytic_i4_max('qubit', 1.0), 0, 0, self.bounds).min_quantum_dim, 2)
        self.assertEqual(certify(analytic_i4_max('qutrit', 1.0), 0, 0, self.bounds).min_quantum_dim, 3)
        self.assertEqual(certify(QUART_IDEAL_I4, 0, 0, self.bounds).min_classical_dim, 4)

    def test_invalid_arguments(self):
        self.assertRaises(ValueError, certify, 5.0, -0.1, 0, self.bounds)
        self.assertRaises(ValueError, certify, 5.0, 0.1, -1, self.bounds)

    def test_confidence_to_k(self):
        self.assertAlmostEqual(confidence_to_k(0.5), 0.0, places=12)
        self.assertAlmostEqual(confidence_to_k(0.975), 1.959964, places=5)
        self.assertRaises(ValueError, confidence_to_k, 1.0)


class BoundsTableTest(unittest.TestCase):
    def test_builtin(self):
        bounds = BoundsTable.builtin()
        self.assertEqual(bounds.dims, [1, 2, 3, 4])
        self.assertEqual(bounds.classical, {1: 3.0, 2: 5.0, 3: 7.0, 4: 9.0})
        self.assertEqual(bounds.quantum[3], 7.97)
        self.assertEqual(bounds.provenance[('quantum', 2)], 'builtin')
        self.assertRaises(ValueError, BoundsTable.builtin, 'I5')

    def test_builtin_for_matching_coefficients(self):
        self.assertEqual(BoundsTable.for_witness(i4_spec()).quantum[2], 6.0)
        lookalike = WitnessSpec.from_correlator_coefficients(np.ones((4, 3)), name='i4')
        self.assertRaises(ValueError, BoundsTable.for_witness, lookalike)
        unnamed = WitnessSpec.from_correlator_coefficients(np.ones((2, 2)), name='W')
        self.assertRaises(ValueError, BoundsTable.for_witness, unnamed)

    def test_invariants(self):
        self.assertRaises(ValueError, BoundsTable, 'W', {1: 4.0}, {1: 3.0})
        self.assertRaises(ValueError, BoundsTable, 'W', {1: 3.0, 2: 2.0}, {1: 3.0, 2: 3.0})
        self.assertRaises(ValueError, BoundsTable, 'W', {1: 3.0}, {2: 3.0})
        self.assertRaises(ValueError, BoundsTable, 'W', {}, {})

    def test_recompute(self):
        bounds = BoundsTable.recompute(i4_spec(), [1, 2], SeesawConfig(restarts=20, seed=0))
        self.assertEqual(bounds.classical, {1: 3.0, 2: 5.0})
        self.assertAlmostEqual(bounds.quantum[1], 3.0, places=9)
        self.assertGreaterEqual(bounds.quantum[2], 5.0)
        self.assertEqual(bounds.provenance[('classical', 2)], 'enumerated')
        self.assertEqual(bounds.provenance[('quantum', 2)], 'seesaw')


if __name__ == '__main__':
    unittest.main()
