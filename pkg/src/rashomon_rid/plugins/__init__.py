"""Importance plugins — predictors and metrics behind the contracts."""
