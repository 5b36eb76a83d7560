import unittest

import numpy as np
from scipy.stats import unitary_group

from dimwit.helper_funcs import hermitian_signs, top_eigenvectors


class HermitianSignsTest(unittest.TestCase):
    def test_rank_deficient_matrices_map_zero_eigenvalues_to_plus_one(self):
        rng = np.random.default_rng(2)
        for trial in range(50):
            U = unitary_group.rvs(3, random_state=rng)
            matrix = U @ np.diag([-1.0, 0.0, 0.0]) @ U.conj().T
            operators, norms = hermitian_signs(matrix[np.newaxis])
            expected = U @ np.diag([-1.0, 1.0, 1.0]) @ U.conj().T
            with self.subTest(trial=trial):
                np.testing.assert_allclose(operators[0], expected, atol=1e-10)
                self.assertAlmostEqual(norms[0], 1.0, places=12)

    def test_zero_matrix_maps_to_identity(self):
        operators, norms = hermitian_signs(np.zeros((1, 2, 2)))
        np.testing.assert_array_equal(operators[0], np.eye(2))
        self.assertEqual(norms[0], 0.0)

    def test_top_eigenvector(self):
        vectors = top_eigenvectors(np.array([np.diag([3.0, 1.0]), np.zeros((2, 2))]))
        np.testing.assert_allclose(np.abs(vectors[0]), [1.0, 0.0])
        np.testing.assert_array_equal(vectors[1], [1.0, 0.0])


if __name__ == '__main__':
    unittest.main()
