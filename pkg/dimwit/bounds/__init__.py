from .bound_result import BoundResult
from .classical import (ClassicalStrategy, strategy_to_probs, classical_bound, enumerate_strategies,
                        strategy_count, outcome_values)
from .seesaw import (SeesawConfig, QuantumRealization, optimal_states_for_observables,
                     optimal_observables_for_states, seesaw_bound, seesaw_trajectories, random_observable)
