from dimwit.helper_funcs import to_json


class BoundResult:
    """BoundResult stores the maximum of a witness over classical or quantum systems of dimension d together with
    the strategy or realization attaining it."""

    def __init__(self, value, witness_name, d, model, argmax, converged=True, iterations=None,
                 restart_values=None, strategies_evaluated=None):
        """
        :param value: The bound C_d (exact) or the see-saw lower bound on Q_d
        :type value: float
        :param witness_name: Label of the witness
        :type witness_name: str
        :param d: Dimension
        :type d: int
        :param model: 'classical' or 'quantum'
        :type model: str
        :param argmax: The maximizer
        :type argmax: ClassicalStrategy or QuantumRealization
        :param converged: False if the best see-saw restart hit the iteration limit
        :type converged: bool
        :param iterations: Iterations used by each see-saw restart
        :type iterations: list of int
        :param restart_values: Final witness value of each see-saw restart
        :type restart_values: list of float
        :param strategies_evaluated: Number of deterministic strategies covered by the enumeration
        :type strategies_evaluated: int

        """
        if model not in ('classical', 'quantum'):
            raise ValueError('Model must be classical or quantum, got {!r}.'.format(model))
        self.value = float(value)
        self.witness_name = witness_name
        self.d = d
        self.model = model
        self.argmax = argmax
        self.converged = converged
        self.iterations = iterations
        self.restart_values = restart_values
        self.strategies_evaluated = strategies_evaluated

    def to_json_dict(self):
        doc = {'value': self.value,
               'witness': self.witness_name,
               'd': self.d,
               'model': self.model,
               'argmax': self.argmax.to_json_dict()}
        if self.model == 'classical':
            doc['strategies_evaluated'] = self.strategies_evaluated
        else:
            doc['converged'] = self.converged
            doc['iterations'] = self.iterations
            doc['restart_values'] = self.restart_values
        return doc

    def to_json(self):
        return to_json(self.to_json_dict())
