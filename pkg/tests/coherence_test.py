import unittest

from dimwit.photonic import PhysicalParams, gamma_of_delay, gamma_quadrature_oracle, GridSpec, tau_grid


class CoherenceTest(unittest.TestCase):
    def test_triangle_values(self):
        params = PhysicalParams(dl=510)
        for tau, expected in ((255, 1.0), (0, 0.0), (510, 0.0), (127.5, 0.5), (382.5, 0.5), (800, 0.0), (-50, 0.0)):
            with self.subTest(tau=tau):
                self.assertAlmostEqual(gamma_of_delay(params.with_tau(tau)), expected, places=12)

    def test_delta_is_measured_from_full_coherence(self):
        self.assertEqual(PhysicalParams(510, 255).delta, 0.0)
        self.assertEqual(PhysicalParams(510, 0).delta, -255.0)

    def test_invalid_parameters(self):
        self.assertRaises(ValueError, PhysicalParams, 0)
        self.assertRaises(ValueError, PhysicalParams, -510)
        self.assertRaises(ValueError, gamma_of_delay, PhysicalParams(510))

    def test_quadrature_reproduces_the_triangle(self):
        params = PhysicalParams(dl=510)
        for tau in (0, 127.5, 255, 382.5, 510, 765):
            with self.subTest(tau=tau):
                result = gamma_quadrature_oracle(params.with_tau(tau))
                self.assertTrue(result.within_tolerance)
                self.assertAlmostEqual(result.real, gamma_of_delay(params.with_tau(tau)), delta=1e-3)
                self.assertLess(abs(result.imag), 1e-6)

    def test_quadrature_over_a_full_delay_sweep(self):
        params = PhysicalParams(dl=510)
        for tau in tau_grid(0, 1020, 101):
            result = gamma_quadrature_oracle(params.with_tau(tau))
            self.assertLessEqual(abs(result.real - gamma_of_delay(params.with_tau(tau))), 1e-3, msg=str(tau))
            self.assertLess(abs(result.imag), 1e-6)

    def test_coarse_grid_is_flagged(self):
        with self.assertLogs('dimwit.photonic.coherence', level='WARNING'):
            result = gamma_quadrature_oracle(PhysicalParams(510, 255), GridSpec(u_max=10, points=101))
        self.assertFalse(result.within_tolerance)
        self.assertGreater(result.error_estimate, 1e-3)


if __name__ == '__main__':
    unittest.main()
