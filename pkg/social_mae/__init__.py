#
# Imports
#
from social_mae._version import __version__
from social_mae.harness.experiment_pipeline import ExperimentPipeline
from social_mae.model.model_config import ModelConfig
from social_mae.model.social_mae_model import SocialMae
