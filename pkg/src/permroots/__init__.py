"""Exact analysis of the probability that a random permutation has an n-th root.

The exact kernel (numtheory, series, rootgf, envelope, oracle) works entirely
over arbitrary-precision rationals; asymptotics is the only module that touches
floating point, and it reports outward-rounded intervals.
"""

from .asymptotics import AsymptoticReport, Interval
from .envelope import Envelope, RationalBound
from .oracle import CycleType
from .rootgf import RootProblem
from .series import TruncatedSeries

__all__ = [
    "AsymptoticReport",
    "CycleType",
    "Envelope",
    "Interval",
    "RationalBound",
    "RootProblem",
    "TruncatedSeries",
]

__version__ = "0.1.0"
