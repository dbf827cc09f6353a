"""ringforge: exact computations with commutative arithmetic rings."""

__version__ = "0.1.0"
