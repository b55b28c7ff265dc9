"""Rashomon importance distributions — variable importance over near-optimal sparse trees."""

__version__ = "0.1.0"
