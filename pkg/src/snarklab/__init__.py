"""snarklab: reducibility, discharging and snark analysis on the torus."""

from .surface import RotationGraph, FaceWalk, EdgeCut, PLANE, TORUS, ANNULUS

__all__ = [
    "RotationGraph",
    "FaceWalk",
    "EdgeCut",
    "PLANE",
    "TORUS",
    "ANNULUS",
]

__version__ = "0.1.0"
