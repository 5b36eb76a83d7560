import numpy as np

from dimwit.core.operators import Observable
from dimwit.photonic.signal_state import PreparationSetting, prepare_signal_state
from dimwit.helper_funcs import *


QUBIT = 'qubit'
QUTRIT = 'qutrit'
QUART = 'quart'
SCENARIO_KINDS = (QUBIT, QUTRIT, QUART)

# Classical limits: the quantum presets with the polarization coherence removed.
CLASSICAL_LIMITS = {'bit': QUBIT, 'trit': QUTRIT}

# Ideal value of the quart preset, independent of gamma and phi.
QUART_IDEAL_I4 = 9.0

_I4_OFFSETS = {QUBIT: 3.0, QUTRIT: 5.0}


class Scenario:
    """A photonic preparation scenario: the kind selects the four preparations and three measurements, and gamma is
    either derived from the delay (forced_gamma is None) or fixed to forced_gamma."""

    def __init__(self, kind, forced_gamma=None, name=None):
        if kind not in SCENARIO_KINDS:
            raise ValueError('Unknown scenario kind "{}", expected one of {}.'.format(kind, ', '.join(SCENARIO_KINDS)))
        if forced_gamma is not None and not 0 <= forced_gamma <= 1:
            raise ValueError('Forced coherence factor must be in [0, 1], got {}.'.format(forced_gamma))
        self.kind = kind
        self.forced_gamma = None if forced_gamma is None else float(forced_gamma)
        self.name = name or kind

    @classmethod
    def from_name(cls, name, forced_gamma=None):
        """Resolves 'qubit', 'qutrit', 'quart' or the classical limits 'bit' and 'trit' (gamma forced to 0)."""
        key = name.lower()
        if key in CLASSICAL_LIMITS:
            if forced_gamma not in (None, 0):
                raise ValueError('Scenario "{}" has gamma fixed to 0.'.format(name))
            return cls(CLASSICAL_LIMITS[key], forced_gamma=0.0, name=key)
        return cls(key, forced_gamma=forced_gamma)

    @property
    def gamma_mode(self):
        return 'coherent' if self.forced_gamma is None else 'forced'

    def effective_gamma(self, gamma):
        return gamma if self.forced_gamma is None else self.forced_gamma

    def __repr__(self):
        return 'Scenario({!r}, forced_gamma={})'.format(self.name, self.forced_gamma)


def _as_scenario(scenario):
    return scenario if isinstance(scenario, Scenario) else Scenario.from_name(scenario)


def preparation_settings(scenario, phi=PRESET_PHI):
    """Returns the preparations x = 1..4 of a scenario. The angle phi replaces the +-22.5 degree settings of the
    qubit and qutrit presets; the quart preset has fixed angles."""
    scenario = _as_scenario(scenario)
    if scenario.kind == QUART:
        return [PreparationSetting(alpha, angle, label) for (alpha, angle), label
                in zip(((1, 0.0), (0, 0.0), (1, 90.0), (0, 90.0)), SIGNAL_BASIS_LABELS)]
    if scenario.kind == QUTRIT:
        third = PreparationSetting(0, 0.0, SIGNAL_BASIS_LABELS[1])
    else:
        third = PreparationSetting(1, 0.0, SIGNAL_BASIS_LABELS[0])
    return [PreparationSetting(1, phi, '+phi'), PreparationSetting(1, -phi, '-phi'), third,
            PreparationSetting(1, 90.0, SIGNAL_BASIS_LABELS[2])]


def ensemble_preset(scenario, gamma, phi=PRESET_PHI, visibility=DEFAULT_VISIBILITY):
    """Builds the four signal-photon states of a scenario.

    :param scenario: Scenario or scenario name
    :type scenario: Scenario or str
    :param gamma: Coherence factor; ignored when the scenario forces gamma
    :type gamma: float
    :param phi: Half-wave-plate angle of the first two preparations in degrees
    :type phi: float
    :param visibility: Extra coherence factor in [0, 1]
    :type visibility: float
    :rtype: list of DensityMatrix
    """
    scenario = _as_scenario(scenario)
    gamma = scenario.effective_gamma(gamma)
    return [prepare_signal_state(s, gamma, visibility) for s in preparation_settings(scenario, phi)]


def _polarization_diagonal():
    m = np.zeros((SIGNAL_DIMENSION, SIGNAL_DIMENSION))
    m[0, 2] = m[2, 0] = m[1, 3] = m[3, 1] = 1
    return m


def measurement_preset(scenario):
    """Returns the measurements y = 1..3 as +-1 observables on the signal basis (H,+1), (H,-1), (V,+1), (V,-1)."""
    scenario = _as_scenario(scenario)
    polarization = Observable.from_signs([1, 1, -1, -1])
    oam = Observable.from_signs([1, -1, 1, -1])
    if scenario.kind == QUART:
        return [Observable.from_signs([1, 1, 1, -1]), polarization, oam]
    return [polarization, oam, Observable(_polarization_diagonal())]


def _check_analytic(scenario):
    scenario = _as_scenario(scenario)
    if scenario.kind == QUART:
        raise ValueError('The quart witness value is the constant QUART_IDEAL_I4; no phi/gamma formula applies.')
    return scenario


def analytic_i4(scenario, phi, gamma):
    """Closed-form I4 of the qubit or qutrit preset: (3 or 5) + 2 cos(2 phi) + 2 gamma sin(2 phi), phi in degrees."""
    scenario = _check_analytic(scenario)
    gamma = scenario.effective_gamma(gamma)
    two_phi = 2 * np.deg2rad(phi)
    return _I4_OFFSETS[scenario.kind] + 2 * np.cos(two_phi) + 2 * gamma * np.sin(two_phi)


def optimal_phi(gamma):
    """The wave-plate angle in degrees maximizing the qubit and qutrit witness: tan(2 phi) = gamma."""
    return np.rad2deg(np.arctan(gamma)) / 2


def analytic_i4_max(scenario, gamma):
    """Maximum over phi of analytic_i4: (3 or 5) + 2 sqrt(1 + gamma^2)."""
    scenario = _check_analytic(scenario)
    gamma = scenario.effective_gamma(gamma)
    return _I4_OFFSETS[scenario.kind] + 2 * np.sqrt(1 + gamma**2)
