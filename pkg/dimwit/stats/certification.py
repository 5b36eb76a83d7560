from scipy.stats import norm

from dimwit.stats.bounds_table import MODELS, CLASSICAL, QUANTUM


class CertificationReport:
    """Dimension and quantumness claims supported by a witness value v with uncertainty sigma at multiplier k.

    A minimum dimension of None means the threshold v - k sigma exceeds every tabulated bound."""

    def __init__(self, value, sigma, k, bounds, min_classical_dim, min_quantum_dim, quantum_certified_given_dim,
                 sigmas_above):
        self.value = value
        self.sigma = sigma
        self.k = k
        self.bounds = bounds
        self.min_classical_dim = min_classical_dim
        self.min_quantum_dim = min_quantum_dim
        self.quantum_certified_given_dim = quantum_certified_given_dim
        self.sigmas_above = sigmas_above
        self.sigma_wilson = None

    @property
    def threshold(self):
        return self.value - self.k * self.sigma

    def _dim_json(self, d):
        return d if d is not None else '>{}'.format(self.bounds.max_dim)

    def to_json_dict(self):
        doc = {'witness': self.bounds.witness_name,
               'value': self.value,
               'sigma': self.sigma,
               'k': self.k,
               'min_classical_dim': self._dim_json(self.min_classical_dim),
               'min_quantum_dim': self._dim_json(self.min_quantum_dim),
               'quantum_certified_given_dim': {str(d): v for d, v in self.quantum_certified_given_dim.items()},
               'sigmas_above': {model: {str(d): self.sigmas_above[(model, d)] for d in self.bounds.dims}
                                for model in MODELS},
               'bounds': self.bounds.to_json_dict()}
        if self.sigma_wilson is not None:
            doc['sigma_wilson'] = self.sigma_wilson
        return doc


def _min_dim(values, dims, threshold):
    for d in dims:
        if values[d] >= threshold:
            return d
    return None


def certify(value, sigma, k, bounds):
    """Finds the smallest classical and quantum dimensions compatible with a witness value.

    :param value: Witness value v
    :type value: float
    :param sigma: Standard uncertainty of v, >= 0
    :type sigma: float
    :param k: Confidence multiplier, >= 0; claims use the threshold v - k sigma
    :type k: float
    :param bounds: Classical and quantum bounds
    :type bounds: BoundsTable
    :rtype: CertificationReport
    """
    if sigma < 0:
        raise ValueError('sigma must be non-negative, got {}.'.format(sigma))
    if k < 0:
        raise ValueError('k must be non-negative, got {}.'.format(k))
    value, sigma, k = float(value), float(sigma), float(k)
    threshold = value - k * sigma
    min_classical = _min_dim(bounds.classical, bounds.dims, threshold)
    min_quantum = _min_dim(bounds.quantum, bounds.dims, threshold)
    certified = {d: threshold > bounds.classical[d] for d in bounds.dims}
    sigmas_above = {(model, d): (value - bounds.bounds(model)[d]) / sigma if sigma > 0 else None
                    for model in (CLASSICAL, QUANTUM) for d in bounds.dims}
    return CertificationReport(value, sigma, k, bounds, min_classical, min_quantum, certified, sigmas_above)


def confidence_to_k(level):
    """Returns the one-sided normal quantile k with P(Z < k) = level, e.g. 0.99865 -> 3."""
    if not 0 < level < 1:
        raise ValueError('Confidence level must be in (0, 1), got {}.'.format(level))
    return float(norm.ppf(level))
