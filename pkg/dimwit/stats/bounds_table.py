import logging

import numpy as np

from dimwit.bounds.classical import classical_bound
from dimwit.bounds.seesaw import SeesawConfig, seesaw_bound
from dimwit.core.witness_spec import get_witness
from dimwit.helper_funcs import *


logger = logging.getLogger(__name__)

CLASSICAL = 'classical'
QUANTUM = 'quantum'
MODELS = (CLASSICAL, QUANTUM)

BUILTIN = 'builtin'
ENUMERATED = 'enumerated'
SEESAW = 'seesaw'

_BUILTIN_TABLES = {'I4': (BUILTIN_I4_CLASSICAL_BOUNDS, BUILTIN_I4_QUANTUM_BOUNDS)}


class BoundsTable:
    """Classical bounds C_d and quantum bounds Q_d of one witness, per dimension d, with their provenance."""

    def __init__(self, witness_name, classical, quantum, provenance=None):
        """
        :param witness_name: Name of the witness the bounds belong to
        :type witness_name: str
        :param classical: d -> C_d
        :type classical: dict
        :param quantum: d -> Q_d
        :type quantum: dict
        :param provenance: (model, d) -> 'builtin', 'enumerated' or 'seesaw'
        :type provenance: dict

        """
        if not classical or set(classical) != set(quantum):
            raise ValueError('Bounds table needs classical and quantum bounds for the same non-empty set of d.')
        self.witness_name = witness_name
        self.dims = sorted(int(d) for d in classical)
        if self.dims[0] < 1:
            raise ValueError('Dimensions must be positive.')
        self.classical = {d: float(classical[d]) for d in self.dims}
        self.quantum = {d: float(quantum[d]) for d in self.dims}
        self.provenance = dict(provenance or {})
        self._check_invariants()

    def _check_invariants(self):
        for d in self.dims:
            if self.classical[d] > self.quantum[d] + REALIZATION_TOL:
                raise ValueError('C_{0} = {1:g} exceeds Q_{0} = {2:g}.'.format(d, self.classical[d], self.quantum[d]))
        for model, values in ((CLASSICAL, self.classical), (QUANTUM, self.quantum)):
            for lower, higher in zip(self.dims, self.dims[1:]):
                if values[higher] < values[lower] - REALIZATION_TOL:
                    raise ValueError('{} bounds decrease from d={} to d={}.'.format(model.capitalize(), lower, higher))

    @classmethod
    def builtin(cls, witness_name='I4'):
        """Returns the tabulated bounds of a builtin witness (d = 1..4 for I4)."""
        try:
            classical, quantum = _BUILTIN_TABLES[witness_name.upper()]
        except KeyError:
            raise ValueError('No builtin bounds for witness "{}"; use --recompute.'.format(witness_name))
        provenance = {(model, d): BUILTIN for model in MODELS for d in classical}
        return cls(witness_name.upper(), classical, quantum, provenance)

    @classmethod
    def for_witness(cls, spec):
        """Returns the builtin bounds of a witness whose coefficients equal those of the builtin witness of the same
        name."""
        try:
            reference = get_witness(spec.name)
        except ValueError:
            raise ValueError('No builtin bounds for witness "{}"; use --recompute.'.format(spec.name))
        if spec.shape != reference.shape or not np.array_equal(spec.D, reference.D):
            raise ValueError('Witness "{}" differs from the builtin {} coefficients; use --recompute.'
                             .format(spec.name, reference.name))
        return cls.builtin(reference.name)

    @classmethod
    def recompute(cls, spec, dims, config=None, max_strategies=DEFAULT_MAX_STRATEGIES):
        """Computes C_d by exhaustive enumeration and Q_d by see-saw optimization for every d in dims.

        :param spec: Dichotomic witness in correlator form
        :type spec: WitnessSpec
        :param dims: Dimensions to tabulate
        :type dims: iterable of int
        :param config: See-saw settings
        :type config: SeesawConfig
        :rtype: BoundsTable
        """
        config = config or SeesawConfig()
        classical, quantum, provenance = {}, {}, {}
        for d in dims:
            classical[d] = classical_bound(spec, d, max_strategies, max_workers=config.max_workers).value
            quantum[d] = seesaw_bound(spec, d, config).value
            provenance[(CLASSICAL, d)] = ENUMERATED
            provenance[(QUANTUM, d)] = SEESAW
            logger.info('Recomputed bounds of %s at d=%d: C=%.10g, Q=%.10g.', spec.name, d, classical[d], quantum[d])
        try:
            return cls(spec.name, classical, quantum, provenance)
        except ValueError as err:
            raise RuntimeError('Recomputed bounds are inconsistent: {}'.format(err))

    @property
    def max_dim(self):
        return self.dims[-1]

    def bounds(self, model):
        if model not in MODELS:
            raise ValueError('Unknown model "{}".'.format(model))
        return self.classical if model == CLASSICAL else self.quantum

    def to_json_dict(self):
        return {'witness': self.witness_name,
                'rows': [{'d': d, 'classical': self.classical[d], 'quantum': self.quantum[d],
                          'provenance': {model: self.provenance.get((model, d)) for model in MODELS}}
                         for d in self.dims]}
