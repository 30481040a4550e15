"""Single-node urban mobility engine.

Learns congestion patterns and trip durations from historical taxi
trips, and serves traffic-aware routes that are recalculated when live
conditions deviate from prediction.
"""

__version__ = "0.1.0"
