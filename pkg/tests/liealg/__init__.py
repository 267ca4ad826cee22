"""
Lie algebra layer tests.
"""
