from dimwit.parameters import DEFAULT_DL


class PhysicalParams:
    """Crystal and delay-line parameters. All times are in femtoseconds."""

    def __init__(self, dl=DEFAULT_DL, tau=None):
        """
        :param dl: Product D*L of the inverse group velocity difference and the crystal length (fs)
        :type dl: float
        :param tau: Polarization-dependent temporal delay (fs); may be omitted for scans
        :type tau: float

        """
        if not dl > 0:
            raise ValueError('D*L must be positive, got {}.'.format(dl))
        self.dl = float(dl)
        self.tau = None if tau is None else float(tau)

    def with_tau(self, tau):
        return PhysicalParams(self.dl, tau)

    @property
    def delta(self):
        """Delay measured from the point of full coherence, delta = tau - DL/2."""
        self._require_tau()
        return self.tau - self.dl / 2

    def _require_tau(self):
        if self.tau is None:
            raise ValueError('PhysicalParams has no delay tau set.')
