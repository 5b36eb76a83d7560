import unittest

from dimwit.bounds.convergence_checker import ConvergenceChecker


class ConvergenceCheckerTest(unittest.TestCase):
    def test_first_iteration_always_continues(self):
        checker = ConvergenceChecker(max_iterations=10, tol=1e-6)
        self.assertTrue(checker.has_not_converged(1.0, 0))

    def test_stops_when_improvement_is_small(self):
        checker = ConvergenceChecker(max_iterations=10, tol=1e-6)
        checker.has_not_converged(1.0, 0)
        self.assertTrue(checker.has_not_converged(2.0, 1))
        self.assertFalse(checker.has_not_converged(2.0 + 1e-9, 2))
        self.assertTrue(checker.converged)

    def test_stops_at_iteration_limit(self):
        checker = ConvergenceChecker(max_iterations=3, tol=1e-6)
        for n_iteration, value in enumerate((1.0, 2.0, 3.0)):
            self.assertTrue(checker.has_not_converged(value, n_iteration))
        self.assertFalse(checker.has_not_converged(4.0, 3))
        self.assertFalse(checker.converged)


if __name__ == '__main__':
    unittest.main()
