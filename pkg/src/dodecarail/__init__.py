"""Particle railway circuits on the dodecagrid, a 2-state cellular automaton."""

from .rules import B, W, State, load_rule_table

__version__ = "0.1.0"
__all__ = ["B", "W", "State", "load_rule_table", "__version__"]
