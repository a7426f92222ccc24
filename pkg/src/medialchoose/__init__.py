"""Medial graphs of plane graphs and certificates of their 3-choosability."""

from .embed import RotationSystem, load, serialize
from .medial import medial, orient_black_left, remove_loops

__all__ = ["RotationSystem", "load", "serialize", "medial", "orient_black_left", "remove_loops"]
