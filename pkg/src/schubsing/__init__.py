"""Singularities of Kazhdan-Lusztig varieties: combinatorics and commutative algebra."""
__version__ = "0.1.0"
