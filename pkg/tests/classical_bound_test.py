import unittest

import numpy as np

from dimwit.bounds import (classical_bound, enumerate_strategies, strategy_to_probs, ClassicalStrategy, seesaw_bound,
                           SeesawConfig)
from dimwit.core import WitnessSpec, ProbabilityTable, i4_spec, eval_witness
from dimwit.exceptions import StrategyLimitError


def random_strategy(d, rng):
    assignment = tuple(int(j) for j in rng.integers(1, d + 1, size=4))
    responses = tuple(tuple(int(b) for b in rng.choice([1, -1], size=d)) for _ in range(3))
    return ClassicalStrategy(d, assignment, responses)


def brute_force(spec, d):
    k, n, m = spec.shape
    return max(eval_witness(spec, strategy_to_probs(s, n, m)) for s in enumerate_strategies(n, m, d, k))


class ClassicalBoundTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.i4 = i4_spec()

    def test_i4_bounds(self):
        for d, expected in ((1, 3.0), (2, 5.0), (3, 7.0), (4, 9.0)):
            with self.subTest(d=d):
                result = classical_bound(self.i4, d)
                self.assertAlmostEqual(result.value, expected, places=12)
                self.assertEqual(result.model, 'classical')
                self.assertEqual(result.strategies_evaluated, d**4 * 2**(3 * d))

    def test_dimension_above_preparation_count_saturates(self):
        result = classical_bound(self.i4, 5)
        self.assertAlmostEqual(result.value, 9.0, places=12)
        self.assertEqual(result.argmax.d, 5)
        self.assertEqual(result.strategies_evaluated, 4**4 * 2**12)

    def test_argmax_reevaluates_to_the_bound(self):
        for d in (2, 3):
            result = classical_bound(self.i4, d)
            value = eval_witness(self.i4, strategy_to_probs(result.argmax, 4, 3))
            self.assertAlmostEqual(value, result.value, places=12)

    def test_trivial_dimension_has_constant_strategy(self):
        result = classical_bound(self.i4, 1)
        self.assertEqual(result.argmax, ClassicalStrategy(1, (1, 1, 1, 1), ((1,), (1,), (1,))))
        table = strategy_to_probs(result.argmax, 4, 3)
        np.testing.assert_array_equal(table.p[0], np.ones((4, 3)))

    def test_argmax_is_lexicographically_first(self):
        spec = WitnessSpec.from_correlator_coefficients([[1.0, 1.0], [1.0, -1.0], [0.5, 0.0]])
        result = classical_bound(spec, 2)
        n, m = 3, 2
        best = max(eval_witness(spec, strategy_to_probs(s, n, m)) for s in enumerate_strategies(n, m, 2))
        first = next(s for s in enumerate_strategies(n, m, 2)
                     if eval_witness(spec, strategy_to_probs(s, n, m)) >= best - 1e-12)
        self.assertEqual(result.argmax, first)

    def test_matches_brute_force(self):
        rng = np.random.default_rng(7)
        for trial in range(3):
            spec = WitnessSpec.from_correlator_coefficients(rng.integers(-2, 3, size=(3, 2)))
            with self.subTest(trial=trial):
                self.assertAlmostEqual(classical_bound(spec, 2).value, brute_force(spec, 2), places=12)

    def test_three_outcomes_match_brute_force(self):
        spec = WitnessSpec(np.random.default_rng(11).normal(size=(3, 2, 2)))
        self.assertAlmostEqual(classical_bound(spec, 2).value, brute_force(spec, 2), places=12)

    def test_symmetry_reduction_gives_the_same_bounds(self):
        for d in (1, 2, 3, 4):
            self.assertAlmostEqual(classical_bound(self.i4, d, symmetry_reduction=True).value,
                                   classical_bound(self.i4, d).value, places=12)

    def test_thread_count_does_not_change_the_result(self):
        serial = classical_bound(self.i4, 3, max_workers=1)
        threaded = classical_bound(self.i4, 3, max_workers=4)
        self.assertEqual(serial.value, threaded.value)
        self.assertEqual(serial.argmax, threaded.argmax)

    def test_mixtures_of_strategies_stay_below_the_bound(self):
        rng = np.random.default_rng(3)
        for d, bound in ((2, 5.0), (3, 7.0)):
            worst = -np.inf
            for _ in range(1000):
                tables = [strategy_to_probs(random_strategy(d, rng), 4, 3).p for _ in range(4)]
                weights = rng.dirichlet(np.ones(len(tables)))
                mixed = ProbabilityTable(np.einsum('i,ibxy->bxy', weights, tables))
                worst = max(worst, eval_witness(self.i4, mixed))
            self.assertLessEqual(worst, bound + 1e-9)

    def test_classical_bound_never_exceeds_the_quantum_one(self):
        for d in (1, 2, 3, 4):
            with self.subTest(d=d):
                quantum = seesaw_bound(self.i4, d, SeesawConfig(restarts=20, seed=0)).value
                self.assertLessEqual(classical_bound(self.i4, d).value, quantum + 1e-9)

    def test_strategy_cap(self):
        with self.assertRaises(StrategyLimitError) as ctx:
            classical_bound(self.i4, 4, max_strategies=10)
        self.assertIsInstance(ctx.exception, RuntimeError)
        self.assertEqual(ctx.exception.requested, 4**4 * 2**12)

    def test_invalid_dimension(self):
        self.assertRaises(ValueError, classical_bound, self.i4, 0)
        self.assertRaises(ValueError, classical_bound, self.i4, 1.5)

    def test_result_json(self):
        doc = classical_bound(self.i4, 2).to_json_dict()
        self.assertEqual(doc['value'], 5.0)
        self.assertEqual(doc['model'], 'classical')
        self.assertEqual(doc['argmax']['d'], 2)


class StrategyTest(unittest.TestCase):
    def test_enumeration_order_and_count(self):
        strategies = list(enumerate_strategies(1, 1, 2))
        self.assertEqual(len(strategies), 8)
        self.assertEqual(strategies[0], ClassicalStrategy(2, (1,), ((1, 1),)))
        self.assertEqual(strategies[1], ClassicalStrategy(2, (1,), ((1, -1),)))
        self.assertEqual(strategies[-1], ClassicalStrategy(2, (2,), ((-1, -1),)))

    def test_validation(self):
        self.assertRaises(ValueError, ClassicalStrategy, 2, (3,), ((1, 1),))
        self.assertRaises(ValueError, ClassicalStrategy, 2, (1,), ((1,),))
        self.assertRaises(ValueError, ClassicalStrategy, 2, (1,), ((1, 2),))
        self.assertRaises(ValueError, strategy_to_probs, ClassicalStrategy(1, (1,), ((1,),)), 2, 1)


if __name__ == '__main__':
    unittest.main()
