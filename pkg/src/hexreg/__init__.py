"""Output-feedback regulator synthesis and simulation for a 1-D
transport-reaction plant with separated measurement and controlled output."""

from .core import Profile, SpatialGrid, eig2, eval_at, l2_norm
from .errors import (ConfigError, HurwitzError, InvariantZeroError,
                     NumericError, RegulatorError, SynthesisError)
from .exosystem import ExoSystem, eigen_pairs, exo_outputs, exo_state
from .plant import PlantConfig, PlantState, plant_step
from .simulate import (FeedforwardSetup, SimTrace, TrackingMetrics,
                       regulator_step, simulate_feedforward,
                       simulate_open_loop, simulate_output_feedback,
                       tracking_metrics)
from .synthesis import (RegulatorParams, assemble_params, choose_ly,
                        separation_residual, solve_gamma, solve_pi, solve_pi0,
                        sylvester_residuals, synthesize)
from .transfer import TransferValue, resolvent_apply, transfer_value

__version__ = "0.1.0"
