"""Plugin contracts — abstract base classes for the pluggable pieces."""

from rashomon_rid.plugins.contracts.metric import ImportanceMetric as ImportanceMetric
from rashomon_rid.plugins.contracts.predictor import Predictor as Predictor
