"""Exact tropical signomials, their lengths, planar tropical curves and minimal representations."""

__version__ = "0.1.0"
