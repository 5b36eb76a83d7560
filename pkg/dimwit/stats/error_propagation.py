import logging

import numpy as np

from dimwit.core.probability_table import ProbabilityTable
from dimwit.core.witness_spec import eval_witness


logger = logging.getLogger(__name__)

WILSON_Z = 1.0


def _frequencies(c):
    if c.k != 2:
        raise ValueError('Standard errors of correlators need dichotomic counts, got k={}.'.format(c.k))
    if np.any(c.shots == 0):
        x, y = np.argwhere(c.shots == 0)[0]
        raise ValueError('Setting x={}, y={} has zero shots.'.format(x + 1, y + 1))
    return c.counts / c.shots


def probs_from_counts(c):
    """Converts counts to relative frequencies and binomial standard errors of the correlators,
    SE(E_xy) = 2 sqrt(p(1 - p)/N_xy) with p = P(+1|x,y).

    :param c: Dichotomic counts
    :type c: CountsRecord
    :returns: The frequency table and the (n, m) array of correlator standard errors
    :rtype: (ProbabilityTable, numpy array)
    """
    freqs = _frequencies(c)
    p = freqs[0]
    se = 2 * np.sqrt(p * (1 - p) / c.shots)
    if np.any(se == 0):
        logger.warning('%d setting pairs have deterministic counts and zero standard error.', np.sum(se == 0))
    return ProbabilityTable(freqs), se


def wilson_standard_errors(c, z=WILSON_Z):
    """Correlator standard errors from the half-width of the Wilson score interval; unlike the binomial estimate they
    stay positive for deterministic counts."""
    p = _frequencies(c)[0]
    shots = c.shots
    half_width = z / (1 + z**2 / shots) * np.sqrt(p * (1 - p) / shots + z**2 / (4 * shots**2))
    return 2 * half_width


def _correlator_slopes(spec):
    if spec.k != 2:
        raise ValueError('Error propagation needs a dichotomic witness, got k={}.'.format(spec.k))
    # I = sum D(+1) P(+1) + D(-1) (1 - P(+1)) is linear in E with slope (D(+1) - D(-1))/2.
    return (spec.D[0] - spec.D[1]) / 2


def _propagate(spec, se):
    return float(np.sqrt(np.sum(_correlator_slopes(spec)**2 * se**2)))


def witness_with_error(spec, c):
    """Evaluates a dichotomic witness on counts and propagates the binomial errors in quadrature,
    sigma = sqrt(sum c_xy^2 SE(E_xy)^2).

    :rtype: (float, float)
    """
    table, se = probs_from_counts(c)
    return eval_witness(spec, table), _propagate(spec, se)


def wilson_sigma(spec, c, z=WILSON_Z):
    return _propagate(spec, wilson_standard_errors(c, z))
