from .physical_params import PhysicalParams
from .coherence import gamma_of_delay, gamma_quadrature_oracle, GridSpec, QuadratureResult
from .signal_state import PreparationSetting, prepare_signal_state, purity_formula, purity_of
from .presets import (Scenario, preparation_settings, ensemble_preset, measurement_preset, analytic_i4,
                      analytic_i4_max, optimal_phi, QUART_IDEAL_I4)
from .delay_scan import DelayScanResult, scan_delay, tau_grid
from .shot_noise import simulate_counts
