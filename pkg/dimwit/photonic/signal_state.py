import numpy as np

from dimwit.core.operators import DensityMatrix
from dimwit.helper_funcs import *


class PreparationSetting:
    """One preparation of the signal photon: the idler projection alpha (1 heralds OAM +1 on the signal photon,
    0 heralds OAM -1) and the half-wave-plate angle phi in degrees."""

    def __init__(self, alpha, phi, label=''):
        if alpha not in (0, 1):
            raise ValueError('alpha must be 0 or 1, got {}.'.format(alpha))
        self.alpha = int(alpha)
        self.phi = float(phi)
        self.label = label

    def __repr__(self):
        return 'PreparationSetting(alpha={}, phi={:g}, label={!r})'.format(self.alpha, self.phi, self.label)


def signal_state_matrix(alpha, phi, gamma):
    """Returns the 4 x 4 signal-photon density matrix in the basis (H,+1), (H,-1), (V,+1), (V,-1).

    The polarization block cos^2(phi), gamma sin(2 phi)/2, sin^2(phi) sits on the OAM +1 modes for alpha = 1 and on
    the OAM -1 modes for alpha = 0.
    """
    phi = np.deg2rad(phi)
    c2, s2 = np.cos(phi)**2, np.sin(phi)**2
    off = gamma * np.sin(2 * phi) / 2
    h, v = (0, 2) if alpha == 1 else (1, 3)
    rho = np.zeros((SIGNAL_DIMENSION, SIGNAL_DIMENSION), dtype=complex)
    rho[h, h] = c2
    rho[v, v] = s2
    rho[h, v] = off
    rho[v, h] = np.conj(off)
    return rho


def prepare_signal_state(setting, gamma, visibility=DEFAULT_VISIBILITY):
    """Prepares the heralded signal state of a setting for coherence factor gamma.

    :param setting: Idler projection and wave-plate angle
    :type setting: PreparationSetting
    :param gamma: Coherence factor, |gamma| <= 1
    :type gamma: float or complex
    :param visibility: Extra factor in [0, 1] multiplying the polarization coherence
    :type visibility: float
    :rtype: DensityMatrix
    """
    if not np.isfinite(gamma) or abs(gamma) > 1 + GENERATED_NORMALIZATION_TOL:
        raise ValueError('Coherence factor must satisfy |gamma| <= 1, got {}.'.format(gamma))
    if not 0 <= visibility <= 1:
        raise ValueError('Visibility must be in [0, 1], got {}.'.format(visibility))
    return DensityMatrix(signal_state_matrix(setting.alpha, setting.phi, visibility * gamma))


def purity_formula(phi, gamma):
    """tr(rho^2) = 1 - ((1 - |gamma|^2)/2) sin^2(2 phi), phi in degrees."""
    return 1 - (1 - abs(gamma)**2) / 2 * np.sin(2 * np.deg2rad(phi))**2


def purity_of(rho):
    return rho.purity()
