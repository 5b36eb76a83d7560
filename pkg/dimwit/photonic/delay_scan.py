import io
import logging

import matplotlib.pyplot as plt
import numpy as np

from dimwit.core.quantum import probs_from_quantum
from dimwit.core.witness_spec import i4_spec, eval_witness
from dimwit.photonic.coherence import gamma_of_delay
from dimwit.photonic.physical_params import PhysicalParams
from dimwit.photonic.presets import Scenario, ensemble_preset, measurement_preset, optimal_phi
from dimwit.util import DelayedExecutor
from dimwit.helper_funcs import *


logger = logging.getLogger(__name__)

CSV_HEADER = 'delta_fs,gamma,i4'


class DelayScanResult:
    """Witness values of a scenario over a grid of temporal delays. delta = tau - DL/2 is the x-axis, so delta = 0
    is the point of full coherence."""

    def __init__(self, scenario, dl, tau, gamma, i4, phi):
        self.scenario = scenario
        self.dl = dl
        self.tau = np.asarray(tau, dtype=float)
        self.delta = self.tau - dl / 2
        self.gamma = np.asarray(gamma, dtype=float)
        self.i4 = np.asarray(i4, dtype=float)
        self.phi = np.asarray(phi, dtype=float)

    def __len__(self):
        return len(self.tau)

    def to_csv(self, file_name=None):
        """Writes the delta_fs,gamma,i4 table to a file, or returns it as a string when no file is given."""
        data = np.column_stack((self.delta, self.gamma, self.i4))
        target = io.StringIO() if file_name is None else file_name
        np.savetxt(target, data, fmt='%.12g', delimiter=',', header=CSV_HEADER, comments='')
        if file_name is None:
            return target.getvalue()

    def plot(self, bounds=None, ax=None, show=True):
        """Plots I4 against the delay together with horizontal lines at the given bounds.

        :param bounds: Labelled reference values, e.g. {'C2 (bit)': 5, 'Q2 (qubit)': 6}
        :type bounds: dict
        """
        if ax is None:
            fig, ax = plt.subplots()
        ax.plot(self.delta, self.i4, label=self.scenario.name)
        for label, value in (bounds or {}).items():
            ax.axhline(value, linestyle='--', linewidth=0.8, color='gray')
            ax.annotate(label, (self.delta[0], value), textcoords='offset points', xytext=(2, 2), fontsize=8)
        ax.set_xlabel('Delay $\\delta$ (fs)')
        ax.set_ylabel('$I_4$')
        ax.legend()
        if show:
            plt.show()
        return ax


def tau_grid(tau_min=DEFAULT_TAU_MIN, tau_max=DEFAULT_TAU_MAX, steps=DEFAULT_SCAN_STEPS):
    if int(steps) < 1:
        raise ValueError('A delay scan needs at least one step, got {}.'.format(steps))
    if tau_max < tau_min:
        raise ValueError('tau_max ({}) is smaller than tau_min ({}).'.format(tau_max, tau_min))
    return np.linspace(tau_min, tau_max, int(steps))


def _scan_point(scenario, params, phi, optimize_phi, visibility, witness, measurements):
    gamma = scenario.effective_gamma(gamma_of_delay(params))
    point_phi = optimal_phi(gamma * visibility) if optimize_phi else phi
    states = ensemble_preset(scenario, gamma, point_phi, visibility)
    value = eval_witness(witness, probs_from_quantum(states, measurements))
    return gamma, value, point_phi


def scan_delay(scenario, params=None, taus=None, phi=PRESET_PHI, optimize_phi=False,
               visibility=DEFAULT_VISIBILITY, max_workers=None):
    """Computes the I4 witness of a scenario along a delay scan.

    :param scenario: Scenario or scenario name
    :type scenario: Scenario or str
    :param params: Crystal parameters; tau is ignored
    :type params: PhysicalParams
    :param taus: Delays in fs, by default the grid from tau_grid()
    :type taus: numpy array
    :param phi: Wave-plate angle of the first two preparations in degrees
    :type phi: float
    :param optimize_phi: Set phi per delay to the angle with tan(2 phi) = gamma
    :type optimize_phi: bool
    :param visibility: Extra coherence factor in [0, 1]
    :type visibility: float
    :rtype: DelayScanResult
    """
    if not isinstance(scenario, Scenario):
        scenario = Scenario.from_name(scenario)
    params = params or PhysicalParams()
    taus = tau_grid() if taus is None else np.atleast_1d(np.asarray(taus, dtype=float))
    if taus.size == 0:
        raise ValueError('A delay scan needs at least one delay.')
    witness = i4_spec()
    measurements = measurement_preset(scenario)
    executor = DelayedExecutor(max_workers)
    for tau in taus:
        executor.add_func(_scan_point, (scenario, params.with_tau(tau), phi, optimize_phi, visibility, witness,
                                        measurements))
    points = executor.execute()
    gamma, i4, phis = (np.array(col) for col in zip(*points))
    logger.debug('Scanned %d delays for %s: I4 in [%.6g, %.6g].', len(taus), scenario.name, i4.min(), i4.max())
    return DelayScanResult(scenario, params.dl, taus, gamma, i4, phis)
