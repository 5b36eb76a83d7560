import logging

import numpy as np
from scipy.integrate import simpson

from dimwit.helper_funcs import *


logger = logging.getLogger(__name__)


def gamma_of_delay(params):
    """Coherence factor gamma = tri((tau - DL/2)/(DL/2)) of the signal-photon state for a temporal delay tau.

    :param params: Crystal parameters with the delay set
    :type params: PhysicalParams
    :returns: gamma in [0, 1]
    :rtype: float
    """
    params._require_tau()
    half = params.dl / 2
    return float(tri((params.tau - half) / half))


class GridSpec:
    """Symmetric integration grid in the dimensionless frequency u = D*L*Omega/2."""

    def __init__(self, u_max=QUADRATURE_U_MAX, points=QUADRATURE_POINTS):
        if not u_max > 0:
            raise ValueError('Grid half-width must be positive.')
        if int(points) < 5:
            raise ValueError('Grid needs at least 5 points.')
        self.u_max = float(u_max)
        self.points = int(points) | 1  # Simpson's rule on an odd point count

    def nodes(self):
        return np.linspace(-self.u_max, self.u_max, self.points)


class QuadratureResult:
    def __init__(self, value, error_estimate, tol=QUADRATURE_TOL):
        self.value = complex(value)
        self.error_estimate = float(error_estimate)
        self.tol = tol

    @property
    def real(self):
        return self.value.real

    @property
    def imag(self):
        return self.value.imag

    @property
    def within_tolerance(self):
        return self.error_estimate <= self.tol and abs(self.imag) <= QUADRATURE_IMAG_TOL


def gamma_quadrature_oracle(params, grid_spec=None, tol=QUADRATURE_TOL):
    """Evaluates gamma(tau) = (DL/2pi) int dOmega sinc^2(DL Omega/2) exp(i Omega (2 tau - DL)) numerically.

    With u = DL Omega/2 the integral reads (1/pi) int du sinc^2(u) exp(2 i u t), t = (tau - DL/2)/(DL/2). The error
    estimate adds the Simpson step-doubling difference and the bound 2/(pi u_max) on the truncated tails.

    :param params: Crystal parameters with the delay set
    :type params: PhysicalParams
    :param grid_spec: Integration grid
    :type grid_spec: GridSpec
    :param tol: Tolerance the error estimate is compared with
    :type tol: float
    :rtype: QuadratureResult
    """
    params._require_tau()
    grid_spec = grid_spec or GridSpec()
    half = params.dl / 2
    t = (params.tau - half) / half
    u = grid_spec.nodes()
    integrand = np.sinc(u / np.pi)**2 * np.exp(2j * u * t)
    fine = simpson(integrand, x=u) / np.pi
    coarse = simpson(integrand[::2], x=u[::2]) / np.pi
    error_estimate = abs(fine - coarse) + 2 / (np.pi * grid_spec.u_max)
    result = QuadratureResult(fine, error_estimate, tol)
    if not result.within_tolerance:
        logger.warning('Quadrature of gamma at tau=%g fs: estimated error %.3g exceeds %.3g.',
                       params.tau, error_estimate, tol)
    return result
