import logging


logger = logging.getLogger(__name__)


class ConvergenceChecker:
    """Decides when a see-saw restart stops: after max_iterations full iterations, or once the relative
    improvement of the witness value over one iteration drops below tol."""
    EPS = 1e-30

    def __init__(self, max_iterations, tol, label=''):
        self.max_iterations = max_iterations
        self.tol = tol
        self.label = label
        self.prev_value = None
        self.current_value = None
        self.converged = False

    def has_not_converged(self, value, n_iteration):
        self.update_value(value)
        if n_iteration == 0:
            return True

        if self.improvement_under_tolerance():
            self.converged = True
            self.print_status(n_iteration)
            return False

        if n_iteration >= self.max_iterations:
            self.print_status(n_iteration)
            return False
        return True

    def update_value(self, value):
        self.prev_value = self.current_value
        self.current_value = value

    def print_status(self, n_iteration):
        logger.debug('%sIteration %d, witness value: %.12g, converged: %s', self.label, n_iteration,
                     self.current_value, self.converged)

    def improvement_under_tolerance(self):
        improvement = self.current_value - self.prev_value
        return improvement / (abs(self.prev_value) + self.EPS) < self.tol
